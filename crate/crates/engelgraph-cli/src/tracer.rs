//! Case tracer: reports which branch of the diameter argument applies to a
//! group (hypercenter reduction, F* vs F, J vs J*, Frobenius splits) along
//! with the bound that branch assigns, and hard-fails if the measured
//! diameter exceeds it.

use serde::Serialize;

use engelgraph_core::digraph::{self, GraphKind};
use engelgraph_core::engel::{self, BuildOptions};
use engelgraph_core::{structure, Group, Result};

use crate::context::predicted_disconnected;

#[derive(Serialize, Debug, Clone)]
pub struct TraceProofReport {
    pub group: String,
    pub order: u64,
    pub strongly_connected: bool,
    pub measured_diameter: Option<u32>,
    pub branch: String,
    pub bound: Option<u32>,
    pub notes: Vec<String>,
    pub ok: bool,
}

pub fn trace_proof(g: &Group, budget: u64) -> Result<TraceProofReport> {
    let options = BuildOptions { budget };
    let gamma = engel::build_graph(g, GraphKind::Gamma, &options)?;
    let scc = digraph::scc(&gamma);
    let diam = digraph::diameter(&gamma);
    let mut notes = Vec::new();

    if scc.degenerate {
        return Ok(TraceProofReport {
            group: g.name().to_string(),
            order: g.order() as u64,
            strongly_connected: true,
            measured_diameter: diam.diameter,
            branch: "hypercentral: Gamma(G) is empty or a point".into(),
            bound: None,
            notes,
            ok: true,
        });
    }

    if !scc.is_strongly_connected {
        let predicted = predicted_disconnected(g)?;
        notes.push(format!(
            "{} strongly connected components",
            scc.component_count
        ));
        return Ok(TraceProofReport {
            group: g.name().to_string(),
            order: g.order() as u64,
            strongly_connected: false,
            measured_diameter: None,
            branch: "not strongly connected: one of the disconnected families".into(),
            bound: None,
            ok: predicted,
            notes,
        });
    }

    let measured = diam.diameter;
    let z = structure::hypercenter(g);
    let quotient_storage;
    let reduced: &Group = if z.is_trivial() {
        g
    } else {
        quotient_storage = g.quotient(&z)?;
        let q = &quotient_storage;
        let q_opts = BuildOptions {
            budget: (q.order() as u64 * q.order() as u64).max(budget),
        };
        let q_gamma = engel::build_graph(q, GraphKind::Gamma, &q_opts)?;
        let q_diam = digraph::diameter(&q_gamma).diameter;
        notes.push(format!(
            "Z_inf(G) has order {}; diam(Gamma(G/Z_inf)) = {} matches diam(Gamma(G)) = {}: {}",
            z.order(),
            q_diam.map_or("infinite".into(), |d| d.to_string()),
            measured.map_or("infinite".into(), |d| d.to_string()),
            q_diam == measured
        ));
        if q_diam != measured {
            return Ok(TraceProofReport {
                group: g.name().to_string(),
                order: g.order() as u64,
                strongly_connected: true,
                measured_diameter: measured,
                branch: "hypercenter reduction".into(),
                bound: None,
                notes,
                ok: false,
            });
        }
        &quotient_storage
    };

    let fit = structure::fitting(reduced);
    let (branch, bound) = if !structure::fstar_equals_fitting_with(reduced, &fit) {
        if structure::is_simple(reduced) || structure::is_almost_simple(reduced) {
            (
                "F* != F with G/Z_inf almost simple".to_string(),
                16u32,
            )
        } else {
            (
                "F* != F: central product of the layer with the Fitting subgroup".to_string(),
                7,
            )
        }
    } else if structure::j_equals_jstar_with(reduced, &fit)? {
        (
            "J = J*: a pair beyond distance 4 would force a Frobenius group".to_string(),
            4,
        )
    } else {
        let j = structure::compute_j_with(reduced, &fit)?;
        if j.order() == fit.order() {
            (
                "J = F(G): the layer over the Fitting subgroup is a product of simples".to_string(),
                12,
            )
        } else {
            // is J Frobenius with kernel F?
            let mask = fit.member_mask();
            let mut frobenius = fit.order() > 1 && j.order() > fit.order();
            'outer: for &f in fit.members() {
                if f == 0 {
                    continue;
                }
                for &y in j.members() {
                    if !mask[y as usize] && reduced.commute(f, y) {
                        frobenius = false;
                        break 'outer;
                    }
                }
            }
            if frobenius {
                notes.push(
                    "Sylow-2 sub-cases share the bound; the layer subgroup is not materialized"
                        .into(),
                );
                (
                    "J Frobenius with kernel F(G): Sylow-2 split".to_string(),
                    8,
                )
            } else {
                ("J > F(G) and J is not Frobenius".to_string(), 8)
            }
        }
    };

    let ok = match measured {
        Some(d) => d <= bound,
        None => false,
    };
    Ok(TraceProofReport {
        group: g.name().to_string(),
        order: g.order() as u64,
        strongly_connected: true,
        measured_diameter: measured,
        branch,
        bound: Some(bound),
        notes,
        ok,
    })
}

impl TraceProofReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "group {} (order {})\n",
            self.group, self.order
        ));
        out.push_str(&format!(
            "  strongly connected: {}   measured diameter: {}\n",
            self.strongly_connected,
            self.measured_diameter
                .map_or("infinite".into(), |d| d.to_string())
        ));
        out.push_str(&format!("  branch: {}\n", self.branch));
        if let Some(b) = self.bound {
            out.push_str(&format!("  branch bound: {b}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out.push_str(&format!(
            "  verdict: {}\n",
            if self.ok { "bound holds" } else { "BOUND VIOLATED" }
        ));
        out
    }
}
