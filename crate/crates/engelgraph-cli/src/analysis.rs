//! Whole-group analysis: structural flags, Engel-graph statistics,
//! commuting-graph components, and the prime graph, serialized with stable
//! field names. Reports are deterministic across runs and worker counts.

use serde::Serialize;

use engelgraph_core::digraph::{self, GraphKind};
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::{Group, Result};

use crate::context::GroupProps;

#[derive(Serialize, Debug, Clone)]
pub struct Flags {
    pub nilpotent: bool,
    pub soluble: bool,
    pub simple: bool,
    pub almost_simple: bool,
    pub frobenius: bool,
    pub fstar_eq_f: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct GammaReport {
    pub vertex_count: usize,
    pub arc_count: u64,
    pub scc_count: usize,
    pub strongly_connected: bool,
    /// `null` encodes an infinite diameter.
    pub diameter: Option<u32>,
    pub witness_pair: Option<(String, String)>,
    pub degenerate: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct CommutingComponent {
    pub component_size: usize,
    pub diameter: u32,
}

#[derive(Serialize, Debug, Clone)]
pub struct PrimeGraphReport {
    pub primes: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub components: Vec<Vec<u64>>,
}

#[derive(Serialize, Debug, Clone)]
pub struct AnalysisReport {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub z_infty_order: u64,
    pub fitting_order: u64,
    pub flags: Flags,
    pub gamma: GammaReport,
    pub commuting: Vec<CommutingComponent>,
    pub prime_graph: PrimeGraphReport,
    pub j_order: u64,
    pub jstar_note: String,
}

pub fn analyze(g: &Group, budget: u64) -> Result<AnalysisReport> {
    let props = GroupProps::compute(g)?;
    let options = BuildOptions { budget };

    let gamma = engel::build_graph(g, GraphKind::Gamma, &options)?;
    let scc = digraph::scc(&gamma);
    let diam = digraph::diameter(&gamma);
    let gamma_report = GammaReport {
        vertex_count: gamma.vertex_count(),
        arc_count: gamma.arc_count(),
        scc_count: scc.component_count,
        strongly_connected: scc.is_strongly_connected,
        diameter: diam.diameter,
        witness_pair: diam.witness_pair.map(|(a, b)| {
            (
                g.permutation(gamma.vertex_ids()[a]).cycle_string(),
                g.permutation(gamma.vertex_ids()[b]).cycle_string(),
            )
        }),
        degenerate: scc.degenerate,
    };

    let commuting_graph = engel::build_graph(g, GraphKind::Commuting, &options)?;
    let components = digraph::undirected_components(&commuting_graph)?;
    let commuting = components
        .iter()
        .map(|comp| {
            Ok(CommutingComponent {
                component_size: comp.len(),
                diameter: digraph::component_diameter(&commuting_graph, comp)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let pg = engel::build_prime_graph(g);

    Ok(AnalysisReport {
        name: g.name().to_string(),
        order: g.order() as u64,
        degree: g.degree(),
        z_infty_order: props.z_infty_order(),
        fitting_order: props.fitting_order(),
        flags: Flags {
            nilpotent: props.nilpotent,
            soluble: props.soluble,
            simple: props.simple,
            almost_simple: props.almost_simple,
            frobenius: props.frobenius.is_some(),
            fstar_eq_f: props.fstar_eq_f,
        },
        gamma: gamma_report,
        commuting,
        prime_graph: PrimeGraphReport {
            primes: pg.primes,
            edges: pg.edges,
            components: pg.components,
        },
        j_order: props.j_members.len() as u64,
        jstar_note: if props.j_eq_jstar {
            "J = J*".to_string()
        } else {
            "J != J*".to_string()
        },
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let diam = match self.gamma.diameter {
            Some(d) => d.to_string(),
            None => "infinite".to_string(),
        };
        out.push_str(&format!(
            "group {} (order {}, degree {})\n",
            self.name, self.order, self.degree
        ));
        out.push_str(&format!(
            "  Z_inf order {}   Fitting order {}   J order {} ({})\n",
            self.z_infty_order, self.fitting_order, self.j_order, self.jstar_note
        ));
        out.push_str(&format!(
            "  flags: nilpotent={} soluble={} simple={} almost_simple={} frobenius={} fstar_eq_f={}\n",
            self.flags.nilpotent,
            self.flags.soluble,
            self.flags.simple,
            self.flags.almost_simple,
            self.flags.frobenius,
            self.flags.fstar_eq_f
        ));
        out.push_str(&format!(
            "  Gamma: {} vertices, {} arcs, {} sccs, strongly_connected={}, diameter={}{}{}\n",
            self.gamma.vertex_count,
            self.gamma.arc_count,
            self.gamma.scc_count,
            self.gamma.strongly_connected,
            diam,
            match &self.gamma.witness_pair {
                Some((a, b)) => format!(", witness {a} -> {b}"),
                None => String::new(),
            },
            if self.gamma.degenerate {
                " (degenerate)"
            } else {
                ""
            }
        ));
        out.push_str("  commuting components:");
        if self.commuting.is_empty() {
            out.push_str(" none (abelian)\n");
        } else {
            out.push('\n');
            for c in &self.commuting {
                out.push_str(&format!(
                    "    size {:5} diameter {}\n",
                    c.component_size, c.diameter
                ));
            }
        }
        out.push_str(&format!(
            "  prime graph: primes {:?}, edges {:?}, components {:?}\n",
            self.prime_graph.primes, self.prime_graph.edges, self.prime_graph.components
        ));
        out
    }
}
