//! Structural subgroups and predicates: center and upper central series,
//! hypercenter (two independent routes), Fitting subgroup via the left
//! Engel set, the `C_G(F) <= F` test, nilpotency, solubility, simplicity,
//! almost simplicity, Frobenius detection, the iterated Fitting subgroup
//! `J`, Sylow automizers, primitive prime divisors and metacyclicity.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith;
use crate::engel::reach_depth;
use crate::error::{Error, Result};
use crate::group::{ElementId, Group, SubgroupHandle};

/// Ascending central series `1 = Z_0 <= Z_1 <= ...`, stored without the
/// repeated final term.
pub struct CentralSeries<'g> {
    pub terms: Vec<SubgroupHandle<'g>>,
    pub stabilized: bool,
}

impl<'g> CentralSeries<'g> {
    pub fn last(&self) -> &SubgroupHandle<'g> {
        self.terms.last().expect("series is nonempty")
    }
}

/// Evidence that a group is Frobenius: a proper nontrivial normal kernel
/// in which every non-identity element has its full centralizer.
pub struct FrobeniusWitness<'g> {
    pub kernel: SubgroupHandle<'g>,
    pub complement_order: u64,
}

pub struct SylowReport<'g> {
    pub p: u64,
    pub sylow: SubgroupHandle<'g>,
    pub normalizer_order: u64,
    pub centralizer_order: u64,
    /// `|N_G(P) : C_G(P)|`.
    pub automizer: u64,
    pub automizer_odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaOutcome {
    Holds,
    Fails,
    /// The Frobenius hypothesis on `N_G(<x>) F(G)` is not satisfied.
    NotApplicable(String),
}

/// `Z(G)`: it suffices to commute with the generators.
pub fn center(g: &Group) -> SubgroupHandle<'_> {
    let gens = g.generator_ids().to_vec();
    let members: Vec<ElementId> = g
        .ids()
        .filter(|&x| gens.iter().all(|&s| g.commute(x, s)))
        .collect();
    g.subgroup_unchecked(members)
}

/// Upper central series computed without quotients: since each term is
/// normal, `x` lies in `Z_{i+1}` iff `[x, s]` lies in `Z_i` for every
/// generator `s`.
pub fn upper_central_series(g: &Group) -> CentralSeries<'_> {
    let gens = g.generator_ids().to_vec();
    let mut terms = vec![g.trivial_subgroup()];
    let mut mask = terms[0].member_mask();
    loop {
        let members: Vec<ElementId> = g
            .ids()
            .filter(|&x| gens.iter().all(|&s| mask[g.commutator_ids(x, s) as usize]))
            .collect();
        if members.len() == terms.last().expect("nonempty").order() {
            return CentralSeries {
                terms,
                stabilized: true,
            };
        }
        mask = vec![false; g.order()];
        for &m in &members {
            mask[m as usize] = true;
        }
        terms.push(g.subgroup_unchecked(members));
    }
}

/// The hypercenter `Z_inf(G)`, last term of the upper central series.
pub fn hypercenter(g: &Group) -> SubgroupHandle<'_> {
    let series = upper_central_series(g);
    series
        .terms
        .into_iter()
        .last()
        .expect("series is nonempty")
}

/// Independent route to the hypercenter: the elements `x` such that for
/// every `y` both Engel sequences, from `x` against `y` and from `y`
/// against `x`, reach the identity. Must agree with [`hypercenter`].
pub fn hypercenter_engel_oracle(g: &Group) -> SubgroupHandle<'_> {
    let ids: Vec<ElementId> = g.ids().collect();
    let members: Vec<ElementId> = ids
        .par_iter()
        .copied()
        .filter(|&x| {
            g.ids()
                .all(|y| reach_depth(g, x, y).is_some() && reach_depth(g, y, x).is_some())
        })
        .collect();
    g.subgroup_unchecked(members)
}

/// The Fitting subgroup as the set of left Engel elements: `x` such that
/// for every `g` the sequence `g, [g,x], [[g,x],x], ...` reaches the
/// identity. The result is verified nilpotent and normal before returning;
/// a failure there means the engine itself is broken.
pub fn fitting(g: &Group) -> SubgroupHandle<'_> {
    let gens = g.generator_ids().to_vec();
    let ids: Vec<ElementId> = g.ids().collect();
    let members: Vec<ElementId> = ids
        .par_iter()
        .copied()
        .filter(|&x| {
            // cheap pre-filter on the generators before the full scan
            gens.iter().all(|&s| reach_depth(g, s, x).is_some())
                && g.ids().all(|e| reach_depth(g, e, x).is_some())
        })
        .collect();

    let handle = g.subgroup_unchecked(members);
    let mask = handle.member_mask();
    for &a in handle.members() {
        for &b in handle.members() {
            assert!(
                mask[g.mult(a, b) as usize],
                "left Engel set is not closed under products: engine bug"
            );
        }
    }
    assert!(
        g.is_normal(&handle).expect("same parent"),
        "left Engel set is not normal: engine bug"
    );
    assert!(
        subgroup_is_nilpotent(g, handle.members()),
        "left Engel set is not nilpotent: engine bug"
    );
    handle
}

/// Nilpotency of a subgroup given as a member set, via its upper central
/// series computed relative to the parent multiplication.
pub fn subgroup_is_nilpotent(g: &Group, members: &[ElementId]) -> bool {
    let gens = g.greedy_generators(members);
    let mut current: Vec<ElementId> = vec![0];
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    loop {
        let next: Vec<ElementId> = members
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&s| mask[g.commutator_ids(x, s) as usize]))
            .collect();
        if next.len() == members.len() {
            return true;
        }
        if next.len() == current.len() {
            return false;
        }
        mask.fill(false);
        for &m in &next {
            mask[m as usize] = true;
        }
        current = next;
    }
}

/// `F*(G) = F(G)`, decided through the exact equivalence with
/// `C_G(F(G)) <= F(G)`.
pub fn fstar_equals_fitting(g: &Group) -> bool {
    fstar_equals_fitting_with(g, &fitting(g))
}

pub fn fstar_equals_fitting_with(g: &Group, fit: &SubgroupHandle<'_>) -> bool {
    let gens = g.greedy_generators(fit.members());
    let mask = fit.member_mask();
    g.ids()
        .filter(|&x| !mask[x as usize])
        .all(|x| gens.iter().any(|&f| !g.commute(x, f)))
}

/// Lower central series term-by-term shrink test.
pub fn is_nilpotent(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    if center(g).is_trivial() {
        return false;
    }
    let mut current: Vec<ElementId> = g.ids().collect();
    loop {
        let gens_term = g.greedy_generators(&current);
        let mut seeds = Vec::new();
        for &a in &gens_term {
            for &b in g.generator_ids() {
                seeds.push(g.commutator_ids(a, b));
            }
        }
        let next = g.normal_closure(&seeds).into_members();
        if next.len() == 1 {
            return true;
        }
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

/// Derived series shrink test.
pub fn is_soluble(g: &Group) -> bool {
    let mut current: Vec<ElementId> = g.ids().collect();
    loop {
        if current.len() == 1 {
            return true;
        }
        let gens_term = g.greedy_generators(&current);
        let mut seeds = Vec::new();
        for &a in &gens_term {
            for &b in &gens_term {
                seeds.push(g.commutator_ids(a, b));
            }
        }
        let next = g.normal_closure(&seeds).into_members();
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

/// Nonabelian simplicity: every normal closure of a non-identity element is
/// the whole group. Cyclic groups of prime order report `false` here; see
/// [`is_cyclic_of_prime_order`].
pub fn is_simple(g: &Group) -> bool {
    if g.order() == 1 || g.is_abelian() {
        return false;
    }
    g.conjugacy_classes()
        .iter()
        .skip(1)
        .all(|class| g.normal_closure(&[class.rep]).is_whole_group())
}

pub fn is_cyclic_of_prime_order(g: &Group) -> bool {
    arith::is_prime(g.order() as u64)
}

/// Distinct normal closures of single non-identity class representatives
/// that are inclusion-minimal. Every minimal normal subgroup arises this
/// way.
pub fn minimal_normal_subgroups(g: &Group) -> Vec<SubgroupHandle<'_>> {
    let mut closures: Vec<Vec<ElementId>> = Vec::new();
    for class in g.conjugacy_classes().iter().skip(1) {
        let members = g.normal_closure(&[class.rep]).into_members();
        if !closures.contains(&members) {
            closures.push(members);
        }
    }
    let minimal: Vec<Vec<ElementId>> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.len() < n.len() && m.iter().all(|x| n.binary_search(x).is_ok()))
        })
        .cloned()
        .collect();
    let mut out: Vec<Vec<ElementId>> = minimal;
    out.sort();
    out.dedup();
    out.sort_by_key(|m| (m.len(), m.clone()));
    out.into_iter().map(|m| g.subgroup_unchecked(m)).collect()
}

/// Trivial Fitting subgroup, a unique minimal normal subgroup which is
/// nonabelian simple, and trivial centralizer of that subgroup.
pub fn is_almost_simple(g: &Group) -> bool {
    if g.order() == 1 {
        return false;
    }
    if !fitting(g).is_trivial() {
        return false;
    }
    let minimal = minimal_normal_subgroups(g);
    if minimal.len() != 1 {
        return false;
    }
    let socle = &minimal[0];
    let socle_simple = if socle.is_whole_group() {
        is_simple(g)
    } else {
        match socle.as_group("socle") {
            Ok(s) => is_simple(&s),
            Err(_) => false,
        }
    };
    if !socle_simple {
        return false;
    }
    g.centralizer_of_subgroup(socle)
        .map(|c| c.is_trivial())
        .unwrap_or(false)
}

/// Frobenius detection with the Fitting subgroup as kernel candidate: the
/// kernel of a Frobenius group is nilpotent and equals `F(G)`, so testing
/// that one candidate is complete.
pub fn is_frobenius(g: &Group) -> Option<FrobeniusWitness<'_>> {
    is_frobenius_with(g, fitting(g))
}

pub fn is_frobenius_with<'g>(
    g: &'g Group,
    kernel: SubgroupHandle<'g>,
) -> Option<FrobeniusWitness<'g>> {
    let k = kernel.order();
    if k <= 1 || k >= g.order() {
        return None;
    }
    let mask = kernel.member_mask();
    for &x in kernel.members() {
        if x == 0 {
            continue;
        }
        for y in g.ids() {
            if !mask[y as usize] && g.commute(x, y) {
                return None;
            }
        }
    }
    let complement_order = (g.order() / k) as u64;
    Some(FrobeniusWitness {
        kernel,
        complement_order,
    })
}

/// `J`, the preimage in `G` of the Fitting subgroup of `G / F(G)`.
pub fn compute_j(g: &Group) -> Result<SubgroupHandle<'_>> {
    compute_j_with(g, &fitting(g))
}

pub fn compute_j_with<'g>(g: &'g Group, fit: &SubgroupHandle<'g>) -> Result<SubgroupHandle<'g>> {
    if fit.is_whole_group() {
        return Ok(g.full_subgroup());
    }
    if fit.is_trivial() {
        // F(G/1) = F(G) = 1
        return Ok(g.trivial_subgroup());
    }
    let (quotient, map) = g.quotient_with_map(fit)?;
    let fq = fitting(&quotient);
    let fq_mask = fq.member_mask();
    let members: Vec<ElementId> = g.ids().filter(|&x| fq_mask[map[x as usize] as usize]).collect();
    Ok(g.subgroup_unchecked(members))
}

/// Whether `J = J*`, i.e. whether `F` and `F*` agree for `G / F(G)`.
/// The layer subgroup is never materialized; only the centralizer
/// criterion on the quotient is used.
pub fn j_equals_jstar(g: &Group) -> Result<bool> {
    j_equals_jstar_with(g, &fitting(g))
}

pub fn j_equals_jstar_with(g: &Group, fit: &SubgroupHandle<'_>) -> Result<bool> {
    if fit.is_whole_group() {
        return Ok(true);
    }
    if fit.is_trivial() {
        return Ok(fstar_equals_fitting_with(g, fit));
    }
    let quotient = g.quotient(fit)?;
    Ok(fstar_equals_fitting(&quotient))
}

pub fn sylow_automizer(g: &Group, p: u64) -> Result<SylowReport<'_>> {
    let sylow = g.sylow(p)?;
    let normalizer_order = g.normalizer(&sylow)?.order() as u64;
    let centralizer_order = g.centralizer_of_subgroup(&sylow)?.order() as u64;
    assert_eq!(
        normalizer_order % centralizer_order,
        0,
        "centralizer must divide normalizer"
    );
    let automizer = normalizer_order / centralizer_order;
    Ok(SylowReport {
        p,
        sylow,
        normalizer_order,
        centralizer_order,
        automizer,
        automizer_odd: automizer % 2 == 1,
    })
}

/// Longest chain `p_1, .., p_l` of odd primes dividing `|G|` with
/// `p_i | p_{i+1} - 1` and every Sylow automizer odd. Zero when no odd
/// prime has an odd automizer.
pub fn odd_automizer_chain_length(g: &Group) -> Result<u32> {
    if !is_simple(g) {
        return Err(Error::NotSimple);
    }
    let mut odd_primes = Vec::new();
    for p in arith::prime_divisors(g.order() as u64) {
        if p == 2 {
            continue;
        }
        if sylow_automizer(g, p)?.automizer_odd {
            odd_primes.push(p);
        }
    }
    odd_primes.sort_unstable();
    let mut best = vec![0u32; odd_primes.len()];
    let mut longest = 0;
    for i in 0..odd_primes.len() {
        let mut len = 1;
        for j in 0..i {
            if (odd_primes[i] - 1) % odd_primes[j] == 0 {
                len = len.max(best[j] + 1);
            }
        }
        best[i] = len;
        longest = longest.max(len);
    }
    Ok(longest)
}

/// Primes dividing `q^t - 1` but no `q^i - 1` for `1 <= i < t`. Empty
/// exactly in the Zsigmondy exceptions within the tested range.
pub fn primitive_prime_divisors(q: u64, t: u32) -> Result<BTreeSet<u64>> {
    if q < 2 || t < 1 {
        return Err(Error::BadConstruction(format!(
            "primitive prime divisors need q >= 2, t >= 1; got ({q}, {t})"
        )));
    }
    let qt = q
        .checked_pow(t)
        .ok_or(Error::Overflow("q^t exceeds u64"))?;
    let mut out = BTreeSet::new();
    'primes: for p in arith::prime_divisors(qt - 1) {
        let mut qi = 1u64 % p;
        for _ in 1..t {
            qi = qi * (q % p) % p;
            if qi == 1 {
                continue 'primes;
            }
        }
        out.insert(p);
    }
    Ok(out)
}

/// Exhaustive search for a cyclic normal subgroup with cyclic quotient.
pub fn is_metacyclic(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    let mut seen: Vec<Vec<ElementId>> = Vec::new();
    for x in g.ids() {
        let mut members = vec![0];
        let mut h = x;
        while h != 0 {
            members.push(h);
            h = g.mult(h, x);
        }
        members.sort_unstable();
        if seen.contains(&members) {
            continue;
        }
        seen.push(members.clone());
        let handle = g.subgroup_unchecked(members);
        if !g.is_normal(&handle).expect("same parent") {
            continue;
        }
        let quotient = match g.quotient(&handle) {
            Ok(q) => q,
            Err(_) => continue,
        };
        let qorder = quotient.order() as u32;
        if quotient.ids().any(|e| quotient.element_order(e) == qorder) {
            return true;
        }
    }
    false
}

/// Compares `|N_G(<x>) : C_G(x)|` with the same index computed in
/// `G / F(G)`, under the hypothesis that `N_G(<x>) F(G)` is a Frobenius
/// group with kernel `F(G)` and complement `N_G(<x>)`.
pub fn check_theta(g: &Group, x: ElementId) -> Result<ThetaOutcome> {
    check_theta_with(g, x, &fitting(g))
}

pub fn check_theta_with(
    g: &Group,
    x: ElementId,
    fit: &SubgroupHandle<'_>,
) -> Result<ThetaOutcome> {
    g.check_id(x)?;
    if x == 0 || !arith::is_prime(g.element_order(x) as u64) {
        return Err(Error::NotPrimeOrder);
    }
    if fit.is_trivial() {
        return Ok(ThetaOutcome::NotApplicable("trivial Fitting subgroup".into()));
    }
    let cyclic = g.subgroup_generated(&[x])?;
    let normalizer = g.normalizer(&cyclic)?;

    // product set N * F; F normal makes it a subgroup
    let mut product: Vec<ElementId> = Vec::new();
    for &n in normalizer.members() {
        for &f in fit.members() {
            product.push(g.mult(n, f));
        }
    }
    product.sort_unstable();
    product.dedup();

    if product.len() != normalizer.order() * fit.order() {
        return Ok(ThetaOutcome::NotApplicable(
            "normalizer meets the Fitting subgroup".into(),
        ));
    }
    if fit.order() >= product.len() {
        return Ok(ThetaOutcome::NotApplicable(
            "Fitting subgroup is not proper in the product".into(),
        ));
    }
    let fit_mask = fit.member_mask();
    for &s in &product {
        if s == 0 || fit_mask[s as usize] {
            continue;
        }
        for &f in fit.members() {
            if f != 0 && g.commute(s, f) {
                return Ok(ThetaOutcome::NotApplicable(
                    "product is not Frobenius over the Fitting kernel".into(),
                ));
            }
        }
    }

    let centralizer = g.centralizer(&[x])?;
    assert_eq!(normalizer.order() % centralizer.order(), 0);
    let lhs = (normalizer.order() / centralizer.order()) as u64;

    let (quotient, map) = g.quotient_with_map(fit)?;
    let xq = map[x as usize];
    let cyclic_q = quotient.subgroup_generated(&[xq])?;
    let normalizer_q = quotient.normalizer(&cyclic_q)?;
    let centralizer_q = quotient.centralizer(&[xq])?;
    assert_eq!(normalizer_q.order() % centralizer_q.order(), 0);
    let rhs = (normalizer_q.order() / centralizer_q.order()) as u64;

    Ok(if lhs == rhs {
        ThetaOutcome::Holds
    } else {
        ThetaOutcome::Fails
    })
}
