//! Benchmark-only crate; see `benches/kernels.rs`.

use engelgraph_core::catalog::{build, catalog_entry};
use engelgraph_core::Group;

pub fn catalog_group(name: &str) -> Group {
    let entry = catalog_entry(name).expect("catalog name");
    build(&entry.spec).expect("catalog group builds")
}
