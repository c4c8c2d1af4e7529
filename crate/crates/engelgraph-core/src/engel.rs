//! Engel-word iteration and the graphs it induces.
//!
//! For elements `x, y` the sequence `a_0 = x`, `a_{k+1} = [a_k, y]` either
//! reaches the identity (then `(x, y)` is an arc) or enters a cycle of
//! non-identity elements. The builders below produce the cumulative Engel
//! graph on the non-hypercentral elements, the fixed-depth variants, the
//! auxiliary graphs on all of `G` and on `G \ {1}`, the commuting graph,
//! and the prime graph.

use rayon::prelude::*;

use crate::arith;
use crate::bitset::BitRow;
use crate::digraph::{Digraph, GraphKind, VERTEX_CAP};
use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::perm::{Permutation, Point};
use crate::structure;

/// Default cap on `|vertex set|^2` arc tests per graph build.
pub const DEFAULT_ARC_BUDGET: u64 = 20_000_000;

/// Largest fixed Engel depth served by the depth-n graph builder.
pub const GAMMA_N_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngelOutcome {
    /// `a_depth = 1`, with `depth` the least such index.
    Reaches1 { depth: u32 },
    /// The sequence revisits `sequence[cycle_start]`; no term is the
    /// identity.
    EntersCycle { cycle_start: u32, cycle_length: u32 },
}

#[derive(Debug, Clone)]
pub struct EngelTrace {
    pub source: ElementId,
    pub target: ElementId,
    /// `a_0 = x, a_1 = [x, y], ...`; ends at the first identity or just
    /// before the first repeat.
    pub sequence: Vec<ElementId>,
    pub outcome: EngelOutcome,
}

#[inline]
fn engel_step(g: &Group, a: ElementId, y: ElementId) -> ElementId {
    g.commutator_ids(a, y)
}

/// Full trace of the Engel sequence from `x` against `y`.
pub fn engel_trace(g: &Group, x: ElementId, y: ElementId) -> EngelTrace {
    let mut sequence = vec![x];
    loop {
        let last = *sequence.last().expect("nonempty");
        if last == 0 {
            return EngelTrace {
                source: x,
                target: y,
                outcome: EngelOutcome::Reaches1 {
                    depth: (sequence.len() - 1) as u32,
                },
                sequence,
            };
        }
        let next = engel_step(g, last, y);
        if let Some(pos) = sequence.iter().position(|&e| e == next) {
            let len = sequence.len();
            return EngelTrace {
                source: x,
                target: y,
                outcome: EngelOutcome::EntersCycle {
                    cycle_start: pos as u32,
                    cycle_length: (len - pos) as u32,
                },
                sequence,
            };
        }
        sequence.push(next);
    }
}

/// Depth of the least `n` with `[x,_n y] = 1`, or `None` if the sequence
/// cycles away from the identity. Allocation-free version of
/// [`engel_trace`] for bulk arc tests: the identity is absorbing, so any
/// other cycle found by Brent's algorithm certifies unreachability. The
/// hare advances one step per iteration, so the first identity hit gives
/// the exact depth.
pub fn reach_depth(g: &Group, x: ElementId, y: ElementId) -> Option<u32> {
    if x == 0 {
        return Some(0);
    }
    let mut power: u32 = 1;
    let mut lam: u32 = 1;
    let mut tortoise = x;
    let mut hare = engel_step(g, x, y);
    let mut depth: u32 = 1;
    loop {
        if hare == 0 {
            return Some(depth);
        }
        if hare == tortoise {
            return None;
        }
        if power == lam {
            tortoise = hare;
            power <<= 1;
            lam = 0;
        }
        hare = engel_step(g, hare, y);
        depth += 1;
        lam += 1;
    }
}

/// `[x,_n y] = 1`, i.e. the sequence reaches the identity within `n` steps.
pub fn depth_at_most(g: &Group, x: ElementId, y: ElementId, n: u32) -> bool {
    let mut a = x;
    for _ in 0..n {
        if a == 0 {
            return true;
        }
        a = engel_step(g, a, y);
    }
    a == 0
}

/// Whether `(x, y)` is an arc: some Engel word in the pair is trivial.
/// `x = y` holds trivially at depth 1 but is never stored as a self-loop.
pub fn is_arc(g: &Group, x: ElementId, y: ElementId) -> bool {
    arc_depth(g, x, y).is_some()
}

/// Least positive `n` with `[x,_n y] = 1`, if any.
pub fn arc_depth(g: &Group, x: ElementId, y: ElementId) -> Option<u32> {
    reach_depth(g, x, y).map(|d| d.max(1))
}

/// Elements that are simultaneously left and right `n`-Engel against every
/// group element. At `n = 1` this is the center.
pub fn engel_class_in(g: &Group, n: u32) -> Vec<ElementId> {
    g.ids()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&x| {
            g.ids()
                .all(|y| depth_at_most(g, x, y, n) && depth_at_most(g, y, x, n))
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Cap on `|vertex set|^2` arc tests.
    pub budget: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_ARC_BUDGET,
        }
    }
}

fn vertex_ids_for(g: &Group, kind: GraphKind) -> Result<Vec<ElementId>> {
    Ok(match kind {
        GraphKind::Lambda => g.ids().collect(),
        GraphKind::Delta => g.ids().filter(|&x| x != 0).collect(),
        GraphKind::Gamma => {
            let z = structure::hypercenter(g);
            let mask = z.member_mask();
            g.ids().filter(|&x| !mask[x as usize]).collect()
        }
        GraphKind::GammaN(n) => {
            if n > GAMMA_N_CAP {
                return Err(Error::DepthCapExceeded { n, cap: GAMMA_N_CAP });
            }
            let excluded = engel_class_in(g, n);
            let mut mask = vec![false; g.order()];
            for &x in &excluded {
                mask[x as usize] = true;
            }
            g.ids().filter(|&x| !mask[x as usize]).collect()
        }
        GraphKind::Commuting => {
            let z = structure::center(g);
            let mask = z.member_mask();
            g.ids().filter(|&x| !mask[x as usize]).collect()
        }
    })
}

/// Builds the requested graph. Arc tests run row-parallel (one worker per
/// source vertex) and the result is identical to a serial build.
///
/// Conjugation carries arcs to arcs and fixes every vertex set used here,
/// so rows are tested arc by arc only for conjugacy-class representatives
/// and transported to the remaining sources. This changes nothing about
/// the resulting graph.
pub fn build_graph(g: &Group, kind: GraphKind, options: &BuildOptions) -> Result<Digraph> {
    let vertex_ids = vertex_ids_for(g, kind)?;
    let v = vertex_ids.len();
    if v > VERTEX_CAP {
        return Err(Error::TooManyVertices {
            count: v,
            cap: VERTEX_CAP,
        });
    }
    let required = (v as u64) * (v as u64);
    if required > options.budget {
        return Err(Error::BudgetExceeded {
            required,
            budget: options.budget,
        });
    }

    let arc = |x: ElementId, y: ElementId| -> bool {
        match kind {
            GraphKind::Commuting => g.commute(x, y),
            GraphKind::GammaN(n) => depth_at_most(g, x, y, n),
            _ => reach_depth(g, x, y).is_some(),
        }
    };

    let witnesses = g.conjugation_witnesses();
    let rep_row: Vec<Option<BitRow>> = (0..v)
        .into_par_iter()
        .map(|i| {
            let x = vertex_ids[i];
            if witnesses.rep_of[x as usize] != x {
                return None;
            }
            let mut row = BitRow::new(v);
            for (j, &y) in vertex_ids.iter().enumerate() {
                if i != j && arc(x, y) {
                    row.set(j);
                }
            }
            Some(row)
        })
        .collect();

    let rows: Vec<BitRow> = (0..v)
        .into_par_iter()
        .map(|i| {
            if let Some(row) = &rep_row[i] {
                return row.clone();
            }
            let x = vertex_ids[i];
            let rep = witnesses.rep_of[x as usize];
            let w = witnesses.conj_by[x as usize];
            let source = rep_row
                [vertex_ids.binary_search(&rep).expect("class rep is a vertex")]
            .as_ref()
            .expect("representative row was computed");
            let mut row = BitRow::new(v);
            for j in source.iter_ones() {
                let image = g.conjugate(vertex_ids[j], w);
                let jj = vertex_ids
                    .binary_search(&image)
                    .expect("vertex sets are closed under conjugation");
                row.set(jj);
            }
            row
        })
        .collect();
    Ok(Digraph::from_rows(kind, vertex_ids, rows))
}

pub fn build_gamma(g: &Group, options: &BuildOptions) -> Result<Digraph> {
    build_graph(g, GraphKind::Gamma, options)
}

pub fn build_delta(g: &Group, options: &BuildOptions) -> Result<Digraph> {
    build_graph(g, GraphKind::Delta, options)
}

pub fn build_lambda(g: &Group, options: &BuildOptions) -> Result<Digraph> {
    build_graph(g, GraphKind::Lambda, options)
}

pub fn build_gamma_n(g: &Group, n: u32, options: &BuildOptions) -> Result<Digraph> {
    build_graph(g, GraphKind::GammaN(n), options)
}

pub fn build_commuting(g: &Group, options: &BuildOptions) -> Result<Digraph> {
    build_graph(g, GraphKind::Commuting, options)
}

/// Prime graph: vertices are the primes dividing the group order, with an
/// edge `{r, s}` whenever some element order is divisible by `rs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    pub primes: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    /// Connected components, each sorted, ordered by smallest prime.
    pub components: Vec<Vec<u64>>,
    /// The component containing 2; empty for odd-order groups.
    pub pi1: Vec<u64>,
}

fn prime_graph_from_orders(order: u64, element_orders: impl Iterator<Item = u64>) -> PrimeGraph {
    let primes = arith::prime_divisors(order);
    let k = primes.len();
    let pos = |p: u64| primes.iter().position(|&q| q == p).expect("prime of |G|");
    let mut adjacent = vec![false; k * k];
    for o in element_orders {
        let divisors = arith::prime_divisors(o);
        for (a, &r) in divisors.iter().enumerate() {
            for &s in &divisors[a + 1..] {
                adjacent[pos(r) * k + pos(s)] = true;
                adjacent[pos(s) * k + pos(r)] = true;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if adjacent[i * k + j] {
                edges.push((primes[i], primes[j]));
            }
        }
    }
    // components by union-find
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for &(r, s) in &edges {
        let (a, b) = (find(&mut parent, pos(r)), find(&mut parent, pos(s)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut components: Vec<Vec<u64>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; k];
    for (i, &p) in primes.iter().enumerate() {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(c) => components[c].push(p),
            None => {
                root_of[r] = Some(components.len());
                components.push(vec![p]);
            }
        }
    }
    let pi1 = components
        .iter()
        .find(|c| c.contains(&2))
        .cloned()
        .unwrap_or_default();
    PrimeGraph {
        primes,
        edges,
        components,
        pi1,
    }
}

pub fn build_prime_graph(g: &Group) -> PrimeGraph {
    prime_graph_from_orders(
        g.order() as u64,
        g.ids().map(|x| g.element_order(x) as u64),
    )
}

/// Prime graph of the alternating group of degree `n`, computed from cycle
/// types alone (no group enumeration): a partition of `n` is realized by an
/// even permutation iff `n` minus its number of parts is even, and the
/// element order is the lcm of the parts.
pub fn alternating_prime_graph(n: u32) -> PrimeGraph {
    assert!((3..=64).contains(&n), "degree out of desk range");
    let mut orders: Vec<u64> = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    fn walk(remaining: u64, max: u64, n: u64, parts: &mut Vec<u64>, orders: &mut Vec<u64>) {
        if remaining == 0 {
            let count = parts.len() as u64;
            if (n - count).is_multiple_of(2) {
                let mut o = 1u64;
                for &p in parts.iter() {
                    o = arith::checked_lcm(o, p).expect("small lcm");
                }
                orders.push(o);
            }
            return;
        }
        let cap = max.min(remaining);
        for next in (1..=cap).rev() {
            parts.push(next);
            walk(remaining - next, next, n, parts, orders);
            parts.pop();
        }
    }
    walk(n as u64, n as u64, n as u64, &mut parts, &mut orders);
    // |Alt(n)| = n!/2; only the prime set matters, and the primes dividing
    // n!/2 for n >= 4 are exactly the primes <= n.
    let mut order = 1u64;
    for k in 2..=n as u64 {
        order = order.saturating_mul(k);
    }
    order /= 2;
    prime_graph_from_orders(order, orders.into_iter())
}

/// Checks the degree-`p` commutator identity
/// `(1,3,5)^{-1} (1,..,p)^{-1} (1,3,5) (1,..,p) = (1,5,3)(2,4,6)` and that
/// the 3-cycle `y = (1,3,5)` satisfies `[x,_2 y] = 1` for the `p`-cycle `x`.
pub fn alt_identity_check(p: u32) -> Result<bool> {
    if !(7..=23).contains(&p) || !arith::is_prime(p as u64) {
        return Err(Error::BadConstruction(format!(
            "p = {p} out of range: need an odd prime in 7..=23"
        )));
    }
    let degree = p as usize;
    let x = Permutation::from_cycles(degree, &[(0..p as Point).collect()])?;
    let y = Permutation::from_cycles(degree, &[vec![0, 2, 4]])?;
    let lhs = Permutation::commutator(&y, &x)?;
    let rhs = Permutation::from_cycles(degree, &[vec![0, 4, 2], vec![1, 3, 5]])?;
    let identity_holds = lhs == rhs;
    let a1 = Permutation::commutator(&x, &y)?;
    let a2 = Permutation::commutator(&a1, &y)?;
    Ok(identity_holds && a2.is_identity())
}
