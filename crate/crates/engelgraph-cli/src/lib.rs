//! Analysis pipeline and verification harness behind the `engelgraph`
//! binary. The library surface exists so the verification suites and the
//! acceptance tests can drive everything in-process.

pub mod analysis;
pub mod context;
pub mod pathcmd;
pub mod suites;
pub mod tracer;

pub use analysis::{analyze, AnalysisReport};
pub use context::{Context, GroupProps};
pub use suites::{run_all_suites, run_suite, ClaimStatus, SuiteResult, SUITE_NAMES};
pub use tracer::{trace_proof, TraceProofReport};

/// Arc-test budget resolution: explicit flag, then the environment
/// variable, then the library default.
pub fn resolve_budget(flag: Option<u64>) -> u64 {
    if let Some(b) = flag {
        return b;
    }
    if let Ok(text) = std::env::var("ENGELGRAPH_BUDGET") {
        if let Ok(b) = text.parse::<u64>() {
            return b;
        }
    }
    engelgraph_core::engel::DEFAULT_ARC_BUDGET
}
