//! Shortest Engel paths between two named elements, with per-arc depths.

use engelgraph_core::digraph::GraphKind;
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::{Error, Group, Permutation, Result};

pub fn engel_path(g: &Group, from: &str, to: &str, budget: u64) -> Result<String> {
    let from_perm = Permutation::parse_cycles(g.degree(), from)?;
    let to_perm = Permutation::parse_cycles(g.degree(), to)?;
    let from_id = g.id_of(&from_perm)?;
    let to_id = g.id_of(&to_perm)?;

    let options = BuildOptions { budget };
    let gamma = engel::build_graph(g, GraphKind::Gamma, &options)?;
    let src = gamma.vertex_index(from_id).ok_or_else(|| {
        Error::BadConstruction(format!("{from} is not a vertex: it lies in the hypercenter"))
    })?;
    let dst = gamma.vertex_index(to_id).ok_or_else(|| {
        Error::BadConstruction(format!("{to} is not a vertex: it lies in the hypercenter"))
    })?;

    if src == dst {
        return Ok(format!("{from} is the requested target; empty path"));
    }

    // BFS with parents
    let n = gamma.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    parent[src] = Some(src);
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        if v == dst {
            break;
        }
        for w in gamma.row(v).iter_ones() {
            if parent[w].is_none() {
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    if parent[dst].is_none() {
        return Ok(format!("unreachable: no directed path from {from} to {to}\n"));
    }
    let mut path = vec![dst];
    let mut v = dst;
    while v != src {
        v = parent[v].expect("path reconstructed");
        path.push(v);
    }
    path.reverse();

    let mut out = String::new();
    out.push_str(&format!("path of length {}:\n", path.len() - 1));
    for pair in path.windows(2) {
        let a = gamma.vertex_ids()[pair[0]];
        let b = gamma.vertex_ids()[pair[1]];
        let depth = engel::arc_depth(g, a, b).expect("arc on a BFS path");
        out.push_str(&format!(
            "  {} -> {}  [depth {}]\n",
            g.permutation(a).cycle_string(),
            g.permutation(b).cycle_string(),
            depth
        ));
    }
    Ok(out)
}
