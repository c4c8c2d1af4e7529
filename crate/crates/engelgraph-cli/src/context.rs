//! Shared per-run cache: catalog groups, their structural invariants, and
//! built graphs. Everything is keyed by catalog name and computed at most
//! once, so suites can share the expensive objects.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use engelgraph_core::catalog::{build, standard_catalog, CatalogEntry, Tier};
use engelgraph_core::digraph::{self, DiameterResult, Digraph, GraphKind, SccResult};
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::{structure, ElementId, Error, Group, Result};

/// Full dense graphs are built only for groups up to this order; larger
/// catalog entries (M12, Sz(8)) get statistics-level checks instead.
pub const FULL_GRAPH_ORDER_CAP: u64 = 10_000;

/// Structural invariants of one group, computed once.
pub struct GroupProps {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub z_infty: Vec<ElementId>,
    pub fitting: Vec<ElementId>,
    pub nilpotent: bool,
    pub soluble: bool,
    pub simple: bool,
    pub cyclic_prime: bool,
    pub almost_simple: bool,
    pub fstar_eq_f: bool,
    pub j_eq_jstar: bool,
    pub j_members: Vec<ElementId>,
    /// Kernel and complement orders when the group is Frobenius.
    pub frobenius: Option<(u64, u64)>,
}

impl GroupProps {
    pub fn z_infty_order(&self) -> u64 {
        self.z_infty.len() as u64
    }

    pub fn fitting_order(&self) -> u64 {
        self.fitting.len() as u64
    }

    pub fn compute(g: &Group) -> Result<GroupProps> {
        let z = structure::hypercenter(g);
        let fit = structure::fitting(g);
        let fstar_eq_f = structure::fstar_equals_fitting_with(g, &fit);
        let frobenius = structure::is_frobenius_with(g, fit.clone())
            .map(|w| (w.kernel.order() as u64, w.complement_order));
        let j = structure::compute_j_with(g, &fit)?;
        let j_eq_jstar = structure::j_equals_jstar_with(g, &fit)?;
        let simple = structure::is_simple(g);
        let almost_simple = simple || structure::is_almost_simple(g);
        Ok(GroupProps {
            name: g.name().to_string(),
            order: g.order() as u64,
            degree: g.degree(),
            nilpotent: z.is_whole_group(),
            soluble: structure::is_soluble(g),
            simple,
            cyclic_prime: structure::is_cyclic_of_prime_order(g),
            almost_simple,
            fstar_eq_f,
            j_eq_jstar,
            j_members: j.members().to_vec(),
            frobenius,
            z_infty: z.into_members(),
            fitting: fit.into_members(),
        })
    }
}

pub struct GraphBundle {
    pub graph: Digraph,
    pub scc: SccResult,
    pub diameter: DiameterResult,
}

type GraphKey = (String, String);

pub struct Context {
    entries: Vec<CatalogEntry>,
    groups: Mutex<BTreeMap<String, Arc<Group>>>,
    props: Mutex<BTreeMap<String, Arc<GroupProps>>>,
    graphs: Mutex<BTreeMap<GraphKey, Arc<GraphBundle>>>,
}

impl Default for Context {
    fn default() -> Self {
        Self::new()
    }
}

impl Context {
    pub fn new() -> Self {
        Context {
            entries: standard_catalog(),
            groups: Mutex::new(BTreeMap::new()),
            props: Mutex::new(BTreeMap::new()),
            graphs: Mutex::new(BTreeMap::new()),
        }
    }

    /// Catalog entries whose tier is within the requested one.
    pub fn entries(&self, tier: Tier) -> Vec<CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| e.tier <= tier)
            .cloned()
            .collect()
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.spec.name.eq_ignore_ascii_case(name))
    }

    pub fn group(&self, name: &str) -> Result<Arc<Group>> {
        if let Some(g) = self.groups.lock().unwrap().get(name) {
            return Ok(g.clone());
        }
        let entry = self
            .entry(name)
            .ok_or_else(|| Error::BadConstruction(format!("not a catalog group: {name}")))?;
        let built = Arc::new(build(&entry.spec)?);
        self.groups
            .lock()
            .unwrap()
            .insert(name.to_string(), built.clone());
        Ok(built)
    }

    pub fn props(&self, name: &str) -> Result<Arc<GroupProps>> {
        if let Some(p) = self.props.lock().unwrap().get(name) {
            return Ok(p.clone());
        }
        let g = self.group(name)?;
        let computed = Arc::new(GroupProps::compute(&g)?);
        self.props
            .lock()
            .unwrap()
            .insert(name.to_string(), computed.clone());
        Ok(computed)
    }

    /// Whether full dense graphs may be built for this entry.
    pub fn full_graphs_allowed(&self, name: &str) -> bool {
        self.entry(name)
            .and_then(|e| e.spec.expected_order)
            .map(|o| o <= FULL_GRAPH_ORDER_CAP)
            .unwrap_or(false)
    }

    /// Builds (or fetches) a graph of the named catalog group, sizing the
    /// arc budget to the group; tier consent is expressed by the caller
    /// selecting the entry at all.
    pub fn graph(&self, name: &str, kind: GraphKind) -> Result<Arc<GraphBundle>> {
        let key = (name.to_string(), kind.dot_name());
        if let Some(b) = self.graphs.lock().unwrap().get(&key) {
            return Ok(b.clone());
        }
        if !self.full_graphs_allowed(name) {
            let order = self
                .entry(name)
                .and_then(|e| e.spec.expected_order)
                .unwrap_or(0);
            return Err(Error::BudgetExceeded {
                required: order * order,
                budget: FULL_GRAPH_ORDER_CAP * FULL_GRAPH_ORDER_CAP,
            });
        }
        let g = self.group(name)?;
        let order = g.order() as u64;
        let options = BuildOptions {
            budget: (order * order).max(engel::DEFAULT_ARC_BUDGET),
        };
        let graph = engel::build_graph(&g, kind, &options)?;
        let scc = digraph::scc(&graph);
        let diameter = digraph::diameter(&graph);
        let bundle = Arc::new(GraphBundle {
            graph,
            scc,
            diameter,
        });
        self.graphs.lock().unwrap().insert(key, bundle.clone());
        Ok(bundle)
    }
}

/// Disconnected-family prediction for the classification checks: the
/// quotient by the hypercenter is Frobenius, or is (order-recognized at
/// desk scale) a PSL(2,q) with q >= 4 even or q = 5 mod 8, a Suzuki group
/// Sz(q) with q >= 8, or the extension of Sz(2^e) by its field
/// automorphism for odd prime e.
pub fn predicted_disconnected(g: &Group) -> Result<bool> {
    let z = structure::hypercenter(g);
    if z.is_whole_group() {
        // empty graph: degenerate, counted as strongly connected
        return Ok(false);
    }
    let reduced_storage;
    let reduced: &Group = if z.is_trivial() {
        g
    } else {
        reduced_storage = g.quotient(&z)?;
        &reduced_storage
    };
    let fit = structure::fitting(reduced);
    if structure::is_frobenius_with(reduced, fit).is_some() {
        return Ok(true);
    }
    let order = reduced.order() as u64;
    if structure::is_simple(reduced) {
        if disconnected_psl2_orders().contains(&order) || suzuki_orders().contains(&order) {
            return Ok(true);
        }
    } else if structure::is_almost_simple(reduced) && aut_suzuki_orders().contains(&order) {
        return Ok(true);
    }
    Ok(false)
}

fn is_prime_power(q: u64) -> bool {
    let mut m = q;
    let mut d = 2;
    let mut prime_count = 0;
    while d * d <= m {
        if m.is_multiple_of(d) {
            prime_count += 1;
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    prime_count == 1
}

/// Orders of PSL(2,q) for q >= 4 even or q = 5 mod 8, up to the
/// enumeration cap.
fn disconnected_psl2_orders() -> Vec<u64> {
    let mut orders = Vec::new();
    for q in 4u64..=512 {
        if !is_prime_power(q) {
            continue;
        }
        if !(q % 2 == 0 || q % 8 == 5) {
            continue;
        }
        let full = q * (q * q - 1);
        let order = if q % 2 == 0 { full } else { full / 2 };
        if order <= 400_000 {
            orders.push(order);
        }
    }
    orders
}

fn suzuki_orders() -> Vec<u64> {
    // |Sz(q)| = q^2 (q^2 + 1)(q - 1), q = 2^(2n+1) >= 8
    vec![29_120] // q = 8; q = 32 exceeds the enumeration cap
}

fn aut_suzuki_orders() -> Vec<u64> {
    vec![29_120 * 3] // Sz(8) extended by the field automorphism
}
