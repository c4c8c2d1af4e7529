//! Construction and ingestion of the benchmark group catalog.
//!
//! Groups with straightforward permutation models (cyclic, dihedral,
//! symmetric, alternating, one-dimensional affine, `PSL(2, p)` for prime
//! `p`, direct products) are built in code. Groups that would need a field
//! extension or ad-hoc machinery (`Q8` and `SL(2,3)` as regular/linear
//! actions, `PSL(2, 8)`, `PSL(2, 9)`, the Mathieu groups, `Sz(8)`) ship as
//! generator data files validated at load time: the expected order is
//! enforced, and entries flagged simple are re-checked with the
//! nonabelian-simplicity predicate.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{Permutation, Point};
use crate::structure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Cyclic group of order `n` as an `n`-cycle.
    Cyclic(u32),
    /// Dihedral group of order `2m` on `m` points.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    /// Affine maps `x -> ax + b` on the prime field of order `p`.
    Agl1(u32),
    /// `PSL(2, p)` for an odd prime `p`, acting on the projective line.
    Psl2(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub construction: Construction,
    pub expected_order: Option<u64>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, construction: Construction, order: u64) -> Self {
        Self {
            name: name.into(),
            construction,
            expected_order: Some(order),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Execution tier of a catalog entry. `Fast` entries have order at most
/// 2520 and full graph builds; `Slow` adds the Mathieu groups; `Targeted`
/// entries get statistics-level checks only, never a full graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    Fast,
    Slow,
    Targeted,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub tier: Tier,
}

fn cycle(points: std::ops::Range<u32>) -> Vec<Point> {
    points.collect()
}

/// Builds the group described by a spec and enforces its expected order.
pub fn build(spec: &GroupSpec) -> Result<Group> {
    let group = match &spec.construction {
        Construction::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::BadConstruction("cyclic group needs n >= 1".into()));
            }
            let gen = Permutation::from_cycles(n as usize, &[cycle(0..n)])?;
            Group::enumerate(&[gen], &spec.name)?
        }
        Construction::Dihedral(m) => {
            let m = *m;
            if m < 3 {
                return Err(Error::BadConstruction(
                    "dihedral construction needs m >= 3 points".into(),
                ));
            }
            let r = Permutation::from_cycles(m as usize, &[cycle(0..m)])?;
            let s = Permutation::from_images((0..m).rev().collect())?;
            Group::enumerate(&[r, s], &spec.name)?
        }
        Construction::Symmetric(n) => {
            let n = *n;
            if n < 2 {
                return Err(Error::BadConstruction("symmetric group needs n >= 2".into()));
            }
            let t = Permutation::from_cycles(n as usize, &[vec![0, 1]])?;
            let c = Permutation::from_cycles(n as usize, &[cycle(0..n)])?;
            Group::enumerate(&[t, c], &spec.name)?
        }
        Construction::Alternating(n) => {
            let n = *n;
            if n < 3 {
                return Err(Error::BadConstruction(
                    "alternating group needs n >= 3".into(),
                ));
            }
            let three = Permutation::from_cycles(n as usize, &[vec![0, 1, 2]])?;
            let long = if n % 2 == 1 {
                Permutation::from_cycles(n as usize, &[cycle(0..n)])?
            } else {
                Permutation::from_cycles(n as usize, &[cycle(1..n)])?
            };
            Group::enumerate(&[three, long], &spec.name)?
        }
        Construction::Agl1(p) => {
            let p = *p as u64;
            if !arith::is_prime(p) || p < 3 {
                return Err(Error::BadConstruction(format!(
                    "AGL1 needs an odd prime, got {p}"
                )));
            }
            let n = p as usize;
            let shift = Permutation::from_images((0..n).map(|x| ((x + 1) % n) as Point).collect())?;
            let g = arith::primitive_root(p);
            let scale =
                Permutation::from_images((0..n).map(|x| (x as u64 * g % p) as Point).collect())?;
            Group::enumerate(&[shift, scale], &spec.name)?
        }
        Construction::Psl2(p) => {
            let p = *p as u64;
            if !arith::is_prime(p) || p < 3 {
                return Err(Error::BadConstruction(format!(
                    "the PSL2 construction needs an odd prime, got {p}"
                )));
            }
            // points 0..p are the field elements, p is infinity
            let n = (p + 1) as usize;
            let inf = p as usize;
            let mut shift: Vec<Point> = (0..n as Point).collect();
            for z in 0..p {
                shift[z as usize] = ((z + 1) % p) as Point;
            }
            let shift = Permutation::from_images(shift)?;
            // z -> -1/z
            let mut inv: Vec<Point> = vec![0; n];
            inv[0] = inf as Point;
            inv[inf] = 0;
            for z in 1..p {
                let zi = arith::mod_pow(z, p - 2, p);
                inv[z as usize] = ((p - zi) % p) as Point;
            }
            let inv = Permutation::from_images(inv)?;
            Group::enumerate(&[shift, inv], &spec.name)?
        }
        Construction::DirectProduct(a, b) => {
            let left = build(a)?;
            let right = build(b)?;
            let dl = left.degree();
            let dr = right.degree();
            let mut gens = Vec::new();
            for &id in left.generator_ids() {
                let mut images: Vec<Point> = left.images_of(id).to_vec();
                images.extend((dl..dl + dr).map(|x| x as Point));
                gens.push(Permutation::from_images(images)?);
            }
            for &id in right.generator_ids() {
                let mut images: Vec<Point> = (0..dl as Point).collect();
                images.extend(right.images_of(id).iter().map(|&x| x + dl as Point));
                gens.push(Permutation::from_images(images)?);
            }
            Group::enumerate(&gens, &spec.name)?
        }
        Construction::File(path) => {
            let text = resolve_data(path)?;
            return finish_file_group(parse_group_json(&text, &path.display().to_string())?, spec);
        }
    };
    check_expected_order(&group, spec)?;
    Ok(group)
}

fn check_expected_order(group: &Group, spec: &GroupSpec) -> Result<()> {
    if let Some(expected) = spec.expected_order {
        if group.order() as u64 != expected {
            return Err(Error::OrderMismatch {
                name: spec.name.clone(),
                expected,
                actual: group.order() as u64,
            });
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct GroupFile {
    name: String,
    degree: usize,
    generators: Vec<Vec<Point>>,
    expected_order: u64,
    simple: bool,
}

struct ParsedGroupFile {
    group: Group,
    simple: bool,
}

fn parse_group_json(text: &str, path: &str) -> Result<ParsedGroupFile> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::GroupFile {
        path: path.into(),
        message: e.to_string(),
    })?;
    if file.degree == 0 {
        return Err(Error::GroupFile {
            path: path.into(),
            message: "degree must be at least 1".into(),
        });
    }
    let mut gens = Vec::new();
    for (i, images) in file.generators.iter().enumerate() {
        if images.len() != file.degree {
            return Err(Error::GroupFile {
                path: path.into(),
                message: format!(
                    "generator {} has length {}, expected degree {}",
                    i,
                    images.len(),
                    file.degree
                ),
            });
        }
        gens.push(
            Permutation::from_images(images.clone()).map_err(|e| Error::GroupFile {
                path: path.into(),
                message: format!("generator {i}: {e}"),
            })?,
        );
    }
    let group = Group::enumerate(&gens, &file.name)?;
    if group.order() as u64 != file.expected_order {
        return Err(Error::OrderMismatch {
            name: file.name.clone(),
            expected: file.expected_order,
            actual: group.order() as u64,
        });
    }
    Ok(ParsedGroupFile {
        group,
        simple: file.simple,
    })
}

fn finish_file_group(parsed: ParsedGroupFile, spec: &GroupSpec) -> Result<Group> {
    if parsed.simple && !structure::is_simple(&parsed.group) {
        return Err(Error::GroupFile {
            path: spec.name.clone(),
            message: "flagged simple but the simplicity check failed".into(),
        });
    }
    check_expected_order(&parsed.group, spec)?;
    Ok(parsed.group)
}

/// Loads a generator file from disk, enforcing order and (when flagged)
/// simplicity.
pub fn load_group_file(path: impl AsRef<Path>) -> Result<Group> {
    let path = path.as_ref();
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::GroupFile {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let parsed = parse_group_json(&text, &display)?;
    if parsed.simple && !structure::is_simple(&parsed.group) {
        return Err(Error::GroupFile {
            path: display,
            message: "flagged simple but the simplicity check failed".into(),
        });
    }
    Ok(parsed.group)
}

/// Embedded copies of the shipped generator files, keyed by file name, so
/// catalog builds work regardless of the working directory.
fn embedded_data(file_name: &str) -> Option<&'static str> {
    Some(match file_name {
        "q8.json" => include_str!("../data/q8.json"),
        "sl23.json" => include_str!("../data/sl23.json"),
        "psl2_8.json" => include_str!("../data/psl2_8.json"),
        "psl2_9.json" => include_str!("../data/psl2_9.json"),
        "m11.json" => include_str!("../data/m11.json"),
        "m12.json" => include_str!("../data/m12.json"),
        "sz8.json" => include_str!("../data/sz8.json"),
        _ => return None,
    })
}

fn resolve_data(path: &Path) -> Result<String> {
    if path.exists() {
        return std::fs::read_to_string(path).map_err(|e| Error::GroupFile {
            path: path.display().to_string(),
            message: e.to_string(),
        });
    }
    if let Ok(dir) = std::env::var("ENGELGRAPH_DATA_DIR") {
        let joined = Path::new(&dir).join(path.file_name().unwrap_or_default());
        if joined.exists() {
            return std::fs::read_to_string(&joined).map_err(|e| Error::GroupFile {
                path: joined.display().to_string(),
                message: e.to_string(),
            });
        }
    }
    if let Some(name) = path.file_name().and_then(|n| n.to_str()) {
        if let Some(text) = embedded_data(name) {
            return Ok(text.to_string());
        }
    }
    Err(Error::GroupFile {
        path: path.display().to_string(),
        message: "file not found and no embedded copy exists".into(),
    })
}

fn file_spec(name: &str, file: &str, order: u64) -> GroupSpec {
    GroupSpec::new(
        name,
        Construction::File(PathBuf::from(format!("data/{file}"))),
        order,
    )
}

/// The fixed benchmark suite.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let fast = |spec: GroupSpec| CatalogEntry {
        spec,
        tier: Tier::Fast,
    };
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for n in 2..=12u32 {
        entries.push(fast(GroupSpec::new(
            format!("C{n}"),
            Construction::Cyclic(n),
            n as u64,
        )));
    }
    for m in [4u32, 5, 6] {
        entries.push(fast(GroupSpec::new(
            format!("D{}", 2 * m),
            Construction::Dihedral(m),
            2 * m as u64,
        )));
    }
    entries.push(fast(file_spec("Q8", "q8.json", 8)));
    for n in 3..=6u32 {
        let order: u64 = (1..=n as u64).product();
        entries.push(fast(GroupSpec::new(
            format!("S{n}"),
            Construction::Symmetric(n),
            order,
        )));
    }
    for n in 4..=7u32 {
        let order: u64 = (1..=n as u64).product::<u64>() / 2;
        entries.push(fast(GroupSpec::new(
            format!("A{n}"),
            Construction::Alternating(n),
            order,
        )));
    }
    entries.push(fast(GroupSpec::new(
        "AGL1(5)",
        Construction::Agl1(5),
        20,
    )));
    entries.push(fast(GroupSpec::new(
        "AGL1(7)",
        Construction::Agl1(7),
        42,
    )));
    entries.push(fast(file_spec("SL(2,3)", "sl23.json", 24)));
    entries.push(fast(GroupSpec::new(
        "C2xS4",
        Construction::DirectProduct(
            Box::new(GroupSpec::new("C2", Construction::Cyclic(2), 2)),
            Box::new(GroupSpec::new("S4", Construction::Symmetric(4), 24)),
        ),
        48,
    )));
    for p in [5u32, 7, 11, 13] {
        let q = p as u64;
        entries.push(fast(GroupSpec::new(
            format!("PSL2({p})"),
            Construction::Psl2(p),
            q * (q * q - 1) / 2,
        )));
    }
    entries.push(fast(file_spec("PSL2(8)", "psl2_8.json", 504)));
    entries.push(fast(file_spec("PSL2(9)", "psl2_9.json", 360)));
    entries.push(CatalogEntry {
        spec: file_spec("M11", "m11.json", 7920),
        tier: Tier::Slow,
    });
    entries.push(CatalogEntry {
        spec: file_spec("M12", "m12.json", 95040),
        tier: Tier::Slow,
    });
    entries.push(CatalogEntry {
        spec: file_spec("Sz(8)", "sz8.json", 29120),
        tier: Tier::Targeted,
    });
    entries
}

/// Looks a spec up in the standard catalog by name (case-insensitive).
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    let wanted = name.to_ascii_lowercase();
    standard_catalog()
        .into_iter()
        .find(|e| e.spec.name.to_ascii_lowercase() == wanted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_name(name: &str) -> GroupSpec {
        catalog_entry(name).expect("in catalog").spec
    }

    #[test]
    fn symmetric_4() {
        let g = build(&by_name("S4")).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn psl2_7_order_and_degree() {
        let g = build(&by_name("PSL2(7)")).unwrap();
        assert_eq!(g.order(), 168); // q(q^2-1)/2 at q = 7
        assert_eq!(g.degree(), 8);
        assert!(structure::is_simple(&g));
    }

    #[test]
    fn agl15_is_frobenius() {
        let g = build(&by_name("AGL1(5)")).unwrap();
        assert_eq!(g.order(), 20);
        let w = structure::is_frobenius(&g).expect("Frobenius");
        assert_eq!(w.kernel.order(), 5);
    }

    #[test]
    fn dihedral_and_cyclic() {
        assert_eq!(build(&by_name("D8")).unwrap().order(), 8);
        assert_eq!(build(&by_name("C12")).unwrap().order(), 12);
    }

    #[test]
    fn direct_product() {
        let g = build(&by_name("C2xS4")).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(g.degree(), 6);
    }

    #[test]
    fn order_mismatch_is_fatal() {
        let spec = GroupSpec::new("S4", Construction::Symmetric(4), 25);
        assert!(matches!(
            build(&spec),
            Err(Error::OrderMismatch { expected: 25, .. })
        ));
    }

    #[test]
    fn file_groups_q8_sl23() {
        let q8 = build(&by_name("Q8")).unwrap();
        assert_eq!(q8.order(), 8);
        assert!(structure::is_nilpotent(&q8));
        // Q8 has a unique involution
        let involutions = q8.ids().filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);

        let sl23 = build(&by_name("SL(2,3)")).unwrap();
        assert_eq!(sl23.order(), 24);
        assert_eq!(structure::hypercenter(&sl23).order(), 2);
    }

    #[test]
    fn file_groups_psl2() {
        let g8 = build(&by_name("PSL2(8)")).unwrap();
        assert_eq!(g8.order(), 504);
        let g9 = build(&by_name("PSL2(9)")).unwrap();
        assert_eq!(g9.order(), 360);
    }

    #[test]
    fn psl2_5_matches_alt5() {
        let psl = build(&by_name("PSL2(5)")).unwrap();
        let a5 = build(&by_name("A5")).unwrap();
        assert_eq!(psl.order(), a5.order());
        let mut sizes_psl: Vec<usize> = psl
            .conjugacy_classes()
            .iter()
            .map(|c| c.members.len())
            .collect();
        let mut sizes_a5: Vec<usize> = a5
            .conjugacy_classes()
            .iter()
            .map(|c| c.members.len())
            .collect();
        sizes_psl.sort_unstable();
        sizes_a5.sort_unstable();
        assert_eq!(sizes_psl, sizes_a5);
        // same Engel-graph statistics from the two constructions
        let opts = crate::engel::BuildOptions::default();
        let gamma_psl = crate::engel::build_gamma(&psl, &opts).unwrap();
        let gamma_a5 = crate::engel::build_gamma(&a5, &opts).unwrap();
        assert_eq!(gamma_psl.vertex_count(), gamma_a5.vertex_count());
        assert_eq!(gamma_psl.arc_count(), gamma_a5.arc_count());
        assert_eq!(
            crate::digraph::scc(&gamma_psl).component_count,
            crate::digraph::scc(&gamma_a5).component_count
        );
    }

    #[test]
    fn m11_file_is_validated_at_load() {
        let g = build(&by_name("M11")).unwrap();
        assert_eq!(g.order(), 7920);
        let sylow11 = g.sylow(11).unwrap();
        assert_eq!(sylow11.order(), 11);
        // cyclic: generated by any non-identity member
        let x = sylow11.members()[1];
        assert_eq!(g.subgroup_generated(&[x]).unwrap().order(), 11);
    }

    #[test]
    fn truncated_file_is_a_parse_error() {
        let dir = std::env::temp_dir().join("engelgraph-test-data");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("truncated.json");
        std::fs::write(&path, "{\"name\": \"broken\", \"degree\": 3,").unwrap();
        match load_group_file(&path) {
            Err(Error::GroupFile { message, .. }) => {
                assert!(message.contains("line"), "no location in: {message}")
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn load_group_file_from_disk() {
        let dir = std::env::temp_dir().join("engelgraph-test-data");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c3.json");
        std::fs::write(
            &path,
            "{\"name\":\"C3\",\"degree\":3,\"generators\":[[1,2,0]],\"expected_order\":3,\"simple\":false}",
        )
        .unwrap();
        let g = load_group_file(&path).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn catalog_contents() {
        let names: Vec<String> = standard_catalog()
            .into_iter()
            .map(|e| e.spec.name)
            .collect();
        assert!(names.contains(&"PSL2(13)".to_string()));
        assert!(names.contains(&"S3".to_string()));
        assert!(names.contains(&"M11".to_string()));
        assert!(names.contains(&"Sz(8)".to_string()));
    }

    #[test]
    fn fast_tier_builds_within_cap() {
        for entry in standard_catalog() {
            if entry.tier != Tier::Fast {
                continue;
            }
            let g = build(&entry.spec).unwrap();
            assert!(g.order() <= 2520, "{} too large for fast tier", entry.spec);
        }
    }

    #[test]
    fn psl2_family_orders_and_simplicity() {
        for p in [5u64, 7, 11, 13] {
            let g = build(&by_name(&format!("PSL2({p})"))).unwrap();
            assert_eq!(g.order() as u64, p * (p * p - 1) / 2);
            assert_eq!(g.degree() as u64, p + 1);
            assert!(structure::is_simple(&g), "PSL2({p})");
        }
    }
}
