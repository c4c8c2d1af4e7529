//! Directed-graph analytics over dense bitset adjacency: strongly connected
//! components (iterative Tarjan), all-pairs BFS diameter with bit-parallel
//! frontier expansion, undirected components, and deterministic DOT export.

use rayon::prelude::*;

use crate::bitset::BitRow;
use crate::error::{Error, Result};
use crate::group::ElementId;

/// Hard cap on vertex counts; dense rows beyond this blow memory.
pub const VERTEX_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Vertex set: the whole group.
    Lambda,
    /// Vertex set: non-identity elements.
    Delta,
    /// Vertex set: elements outside the hypercenter.
    Gamma,
    /// Fixed Engel depth `n`; vertex set excludes the two-sided n-Engel set.
    GammaN(u32),
    /// Symmetric commuting graph on the non-central elements.
    Commuting,
}

impl GraphKind {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, GraphKind::Commuting)
    }

    pub fn dot_name(&self) -> String {
        match self {
            GraphKind::Lambda => "lambda".into(),
            GraphKind::Delta => "delta".into(),
            GraphKind::Gamma => "gamma".into(),
            GraphKind::GammaN(n) => format!("gamma_{n}"),
            GraphKind::Commuting => "commuting".into(),
        }
    }
}

pub struct Digraph {
    kind: GraphKind,
    vertex_ids: Vec<ElementId>,
    rows: Vec<BitRow>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Digraph({:?}, vertices={}, arcs={})",
            self.kind,
            self.vertex_count(),
            self.arc_count()
        )
    }
}

impl Digraph {
    pub fn from_rows(kind: GraphKind, vertex_ids: Vec<ElementId>, rows: Vec<BitRow>) -> Self {
        debug_assert_eq!(vertex_ids.len(), rows.len());
        Self {
            kind,
            vertex_ids,
            rows,
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    /// Element ids backing the vertices, ascending.
    pub fn vertex_ids(&self) -> &[ElementId] {
        &self.vertex_ids
    }

    pub fn vertex_index(&self, id: ElementId) -> Option<usize> {
        self.vertex_ids.binary_search(&id).ok()
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.rows[from].get(to)
    }

    pub fn row(&self, from: usize) -> &BitRow {
        &self.rows[from]
    }

    pub fn arc_count(&self) -> u64 {
        self.rows.iter().map(|r| r.count_ones() as u64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.vertex_count();
        for i in 0..n {
            for j in self.rows[i].iter_ones() {
                if j > i && !self.rows[j].get(i) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct SccResult {
    /// Component index per vertex.
    pub component_of: Vec<u32>,
    pub component_count: usize,
    pub is_strongly_connected: bool,
    /// Empty or single-vertex graphs count as strongly connected; the flag
    /// keeps such vacuous passes visible.
    pub degenerate: bool,
}

/// Iterative Tarjan; no recursion-depth limits.
pub fn scc(d: &Digraph) -> SccResult {
    let n = d.vertex_count();
    const UNSET: u32 = u32::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut component_of = vec![UNSET; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0u32;
    let mut component_count = 0usize;

    // (vertex, resume cursor into its row)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut cursor)) = call.last_mut() {
            if let Some(w) = d.rows[v].next_one(*cursor) {
                *cursor = w + 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let c = component_count as u32;
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component_of[w] = c;
                        if w == v {
                            break;
                        }
                    }
                    component_count += 1;
                }
            }
        }
    }

    SccResult {
        component_of,
        component_count,
        is_strongly_connected: component_count <= 1,
        degenerate: n <= 1,
    }
}

#[derive(Debug, Clone)]
pub struct DiameterResult {
    /// `None` means infinite: some ordered pair is unreachable.
    pub diameter: Option<u32>,
    /// A pair realizing the diameter (finite case) or a witness unreachable
    /// pair (infinite case), as vertex indices.
    pub witness_pair: Option<(usize, usize)>,
    /// Per-vertex eccentricity; `None` when some vertex is unreachable.
    pub eccentricities: Vec<Option<u32>>,
    pub degenerate: bool,
}

struct SourceSweep {
    ecc: Option<u32>,
    witness: usize,
}

fn bfs_sweep(d: &Digraph, src: usize, restrict: Option<&BitRow>) -> SourceSweep {
    let n = d.vertex_count();
    let mut visited = BitRow::new(n);
    let mut frontier = BitRow::new(n);
    let mut next = BitRow::new(n);
    visited.set(src);
    frontier.set(src);
    let mut ecc = 0u32;
    let mut witness = src;
    loop {
        next.clear_all();
        for v in frontier.iter_ones() {
            next.or_assign(&d.rows[v]);
        }
        next.and_not_assign(&visited);
        if let Some(mask) = restrict {
            next.and_assign(mask);
        }
        if next.is_empty() {
            break;
        }
        ecc += 1;
        witness = next.next_one(0).expect("nonempty frontier");
        visited.or_assign(&next);
        std::mem::swap(&mut frontier, &mut next);
    }
    let target = match restrict {
        Some(mask) => mask.count_ones(),
        None => n,
    };
    if visited.count_ones() == target {
        SourceSweep {
            ecc: Some(ecc),
            witness,
        }
    } else {
        // smallest unreachable vertex as witness
        let mut unreachable = match restrict {
            Some(mask) => mask.clone(),
            None => {
                let mut all = BitRow::new(n);
                for i in 0..n {
                    all.set(i);
                }
                all
            }
        };
        unreachable.and_not_assign(&visited);
        SourceSweep {
            ecc: None,
            witness: unreachable.next_one(0).expect("some vertex unreachable"),
        }
    }
}

/// All-pairs BFS from every vertex; distances over ordered pairs of
/// distinct vertices. Parallel by source and bit-identical to a serial run.
pub fn diameter(d: &Digraph) -> DiameterResult {
    let n = d.vertex_count();
    if n <= 1 {
        return DiameterResult {
            diameter: Some(0),
            witness_pair: None,
            eccentricities: vec![Some(0); n],
            degenerate: true,
        };
    }
    let sweeps: Vec<SourceSweep> = (0..n)
        .into_par_iter()
        .map(|src| bfs_sweep(d, src, None))
        .collect();

    if let Some((src, sweep)) = sweeps.iter().enumerate().find(|(_, s)| s.ecc.is_none()) {
        return DiameterResult {
            diameter: None,
            witness_pair: Some((src, sweep.witness)),
            eccentricities: sweeps.iter().map(|s| s.ecc).collect(),
            degenerate: false,
        };
    }
    let mut best: (u32, usize, usize) = (0, 0, 0);
    for (src, sweep) in sweeps.iter().enumerate() {
        let ecc = sweep.ecc.expect("all finite");
        if ecc > best.0 {
            best = (ecc, src, sweep.witness);
        }
    }
    DiameterResult {
        diameter: Some(best.0),
        witness_pair: (best.0 > 0).then_some((best.1, best.2)),
        eccentricities: sweeps.iter().map(|s| s.ecc).collect(),
        degenerate: false,
    }
}

/// BFS distances from one source vertex; `None` marks unreachable.
pub fn bfs_distances(d: &Digraph, src: usize) -> Vec<Option<u32>> {
    let n = d.vertex_count();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut visited = BitRow::new(n);
    let mut frontier = BitRow::new(n);
    let mut next = BitRow::new(n);
    visited.set(src);
    frontier.set(src);
    let mut level = 0u32;
    loop {
        next.clear_all();
        for v in frontier.iter_ones() {
            next.or_assign(&d.rows[v]);
        }
        next.and_not_assign(&visited);
        if next.is_empty() {
            return dist;
        }
        level += 1;
        for v in next.iter_ones() {
            dist[v] = Some(level);
        }
        visited.or_assign(&next);
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Connected components of a symmetric graph, each sorted ascending and
/// ordered by smallest vertex.
pub fn undirected_components(d: &Digraph) -> Result<Vec<Vec<usize>>> {
    if !d.kind().is_symmetric() && !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            for w in d.rows[comp[i]].iter_ones() {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        components.push(comp);
    }
    Ok(components)
}

/// Diameter of one component of a symmetric graph.
pub fn component_diameter(d: &Digraph, component: &[usize]) -> Result<u32> {
    if !d.kind().is_symmetric() && !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if component.len() <= 1 {
        return Ok(0);
    }
    let n = d.vertex_count();
    let mut mask = BitRow::new(n);
    for &v in component {
        mask.set(v);
    }
    let eccs: Vec<Option<u32>> = component
        .par_iter()
        .map(|&src| bfs_sweep(d, src, Some(&mask)).ecc)
        .collect();
    eccs.into_iter()
        .try_fold(0u32, |acc, e| e.map(|e| acc.max(e)))
        .ok_or(Error::NotSymmetric) // disconnected inside a component: caller bug
}

/// Deterministic DOT text: nodes in element-id order, one edge per line,
/// lexicographic by (source, target) id. Symmetric kinds render as `graph`
/// with each edge once.
pub fn export_dot(d: &Digraph, label: impl Fn(ElementId) -> String) -> String {
    let symmetric = d.kind().is_symmetric();
    let mut out = String::new();
    out.push_str(if symmetric { "graph " } else { "digraph " });
    out.push_str(&d.kind().dot_name());
    out.push_str(" {\n");
    for (i, &id) in d.vertex_ids().iter().enumerate() {
        let _ = i;
        out.push_str(&format!(
            "  {} [label=\"{}\"];\n",
            id,
            label(id).replace('"', "\\\"")
        ));
    }
    for (i, &src) in d.vertex_ids().iter().enumerate() {
        for j in d.rows[i].iter_ones() {
            if symmetric && j < i {
                continue;
            }
            let dst = d.vertex_ids()[j];
            out.push_str(&format!(
                "  {} {} {};\n",
                src,
                if symmetric { "--" } else { "->" },
                dst
            ));
        }
    }
    out.push_str("}\n");
    out
}
