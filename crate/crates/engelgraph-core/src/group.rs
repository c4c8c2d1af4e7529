//! Enumerated finite permutation groups.
//!
//! A [`Group`] stores every element in an indexed table; id 0 is always the
//! identity. The representation trades memory for transparency: subgroups
//! are sorted id sets, and every predicate in the higher layers reduces to
//! id-level multiplication and set scans. Groups are immutable after
//! construction and safe to share across threads.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

/// Index into a group's element table.
pub type ElementId = u32;

/// Default cap on the number of elements produced by closure enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 200_000;

/// Orders up to this bound get a full multiplication table; beyond it,
/// products go through the element index instead. Cayley tables blow memory
/// past ~10^4 elements.
pub const MULT_TABLE_MAX: usize = 4096;

thread_local! {
    static MULT_SCRATCH: RefCell<Vec<Point>> = const { RefCell::new(Vec::new()) };
}

pub struct Group {
    name: String,
    degree: usize,
    /// Flat `order * degree` image table; element `i` occupies
    /// `flat[i*degree..(i+1)*degree]`.
    flat: Vec<Point>,
    index: HashMap<Box<[Point]>, ElementId>,
    generator_ids: Vec<ElementId>,
    inverses: Vec<ElementId>,
    element_orders: Vec<u32>,
    table: Option<Vec<ElementId>>,
}

impl Group {
    pub fn enumerate(generators: &[Permutation], name: impl Into<String>) -> Result<Group> {
        Self::enumerate_with_limit(generators, name, DEFAULT_ENUMERATION_LIMIT)
    }

    /// Breadth-first closure of the generators under composition.
    ///
    /// Element ids are assigned in discovery order, so they are
    /// deterministic for a fixed generator list.
    pub fn enumerate_with_limit(
        generators: &[Permutation],
        name: impl Into<String>,
        limit: usize,
    ) -> Result<Group> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let degree = generators[0].degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut flat: Vec<Point> = (0..degree as Point).collect();
        let mut index: HashMap<Box<[Point]>, ElementId> = HashMap::new();
        index.insert(flat.as_slice().into(), 0);
        let mut count = 1usize;

        let mut row = vec![0 as Point; degree];
        let mut buf = vec![0 as Point; degree];
        let mut i = 0usize;
        while i < count {
            row.copy_from_slice(&flat[i * degree..(i + 1) * degree]);
            for g in generators {
                let gi = g.images();
                for (k, &p) in row.iter().enumerate() {
                    buf[k] = gi[p as usize];
                }
                if !index.contains_key(buf.as_slice()) {
                    if count == limit {
                        return Err(Error::ClosureLimitExceeded { limit });
                    }
                    index.insert(buf.as_slice().into(), count as ElementId);
                    flat.extend_from_slice(&buf);
                    count += 1;
                }
            }
            i += 1;
        }

        let mut group = Group {
            name: name.into(),
            degree,
            flat,
            index,
            generator_ids: Vec::new(),
            inverses: Vec::new(),
            element_orders: Vec::new(),
            table: None,
        };
        group.generator_ids = generators
            .iter()
            .map(|g| group.index[g.images()])
            .collect();
        group.generator_ids.dedup();

        let mut inverses = vec![0 as ElementId; count];
        let mut orders = vec![0u32; count];
        let mut inv = vec![0 as Point; degree];
        for id in 0..count {
            let images = &group.flat[id * degree..(id + 1) * degree];
            for (k, &p) in images.iter().enumerate() {
                inv[p as usize] = k as Point;
            }
            inverses[id] = group.index[inv.as_slice()];
            orders[id] = order_of_images(images) as u32;
        }
        group.inverses = inverses;
        group.element_orders = orders;

        if count <= MULT_TABLE_MAX {
            let mut table = vec![0 as ElementId; count * count];
            for a in 0..count {
                let fa = &group.flat[a * degree..(a + 1) * degree];
                for b in 0..count {
                    let fb = &group.flat[b * degree..(b + 1) * degree];
                    for (k, &p) in fa.iter().enumerate() {
                        buf[k] = fb[p as usize];
                    }
                    table[a * count + b] = group.index[buf.as_slice()];
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.element_orders.len()
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + Clone {
        0..self.order() as ElementId
    }

    pub fn images_of(&self, id: ElementId) -> &[Point] {
        let i = id as usize;
        &self.flat[i * self.degree..(i + 1) * self.degree]
    }

    pub fn permutation(&self, id: ElementId) -> Permutation {
        Permutation::from_images(self.images_of(id).to_vec()).expect("table rows are permutations")
    }

    pub fn id_of_images(&self, images: &[Point]) -> Option<ElementId> {
        self.index.get(images).copied()
    }

    pub fn id_of(&self, p: &Permutation) -> Result<ElementId> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        self.index
            .get(p.images())
            .copied()
            .ok_or_else(|| Error::NotASubgroup("permutation is not a group element".into()))
    }

    pub fn check_id(&self, id: ElementId) -> Result<()> {
        if (id as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::ElementIdOutOfRange(id))
        }
    }

    /// Product of two elements by id, left to right.
    pub fn mult(&self, a: ElementId, b: ElementId) -> ElementId {
        if let Some(table) = &self.table {
            return table[a as usize * self.order() + b as usize];
        }
        let fa = self.images_of(a);
        let fb = self.images_of(b);
        MULT_SCRATCH.with(|s| {
            let mut s = s.borrow_mut();
            s.clear();
            s.extend(fa.iter().map(|&p| fb[p as usize]));
            *self.index.get(s.as_slice()).expect("closure violated")
        })
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverses[a as usize]
    }

    /// `g^{-1} x g`.
    pub fn conjugate(&self, x: ElementId, g: ElementId) -> ElementId {
        self.mult(self.mult(self.inverse(g), x), g)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator_ids(&self, a: ElementId, b: ElementId) -> ElementId {
        let left = self.mult(self.inverse(a), self.inverse(b));
        self.mult(self.mult(left, a), b)
    }

    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.mult(a, b) == self.mult(b, a)
    }

    pub fn element_order(&self, a: ElementId) -> u32 {
        self.element_orders[a as usize]
    }

    pub fn power(&self, a: ElementId, mut k: u64) -> ElementId {
        let mut acc = 0 as ElementId;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mult(acc, base);
            }
            base = self.mult(base, base);
            k >>= 1;
        }
        acc
    }

    /// The group is abelian iff its generators pairwise commute.
    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_ids;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// Sorted element ids of the subgroup generated by `seeds`.
    pub fn subgroup_closure(&self, seeds: &[ElementId]) -> Vec<ElementId> {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut list: Vec<ElementId> = vec![0];
        let mut gens: Vec<ElementId> = seeds.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            if !member[g as usize] {
                member[g as usize] = true;
                list.push(g);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for &s in &gens {
                let t = self.mult(list[i], s);
                if !member[t as usize] {
                    member[t as usize] = true;
                    list.push(t);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// A small generating sequence for a sorted member set, chosen greedily
    /// by ascending id. Deterministic.
    pub fn greedy_generators(&self, members: &[ElementId]) -> Vec<ElementId> {
        let mut gens: Vec<ElementId> = Vec::new();
        let mut have = vec![false; self.order()];
        have[0] = true;
        for &m in members {
            if have[m as usize] {
                continue;
            }
            gens.push(m);
            let closure = self.subgroup_closure(&gens);
            for &c in &closure {
                have[c as usize] = true;
            }
            if closure.len() == members.len() {
                break;
            }
        }
        gens
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle<'_> {
        SubgroupHandle {
            parent: self,
            members: vec![0],
        }
    }

    pub fn full_subgroup(&self) -> SubgroupHandle<'_> {
        SubgroupHandle {
            parent: self,
            members: self.ids().collect(),
        }
    }

    pub fn subgroup_generated(&self, seeds: &[ElementId]) -> Result<SubgroupHandle<'_>> {
        for &s in seeds {
            self.check_id(s)?;
        }
        Ok(SubgroupHandle {
            parent: self,
            members: self.subgroup_closure(seeds),
        })
    }

    /// Wraps a member set after verifying it is a subgroup.
    pub fn subgroup_from_members(&self, mut members: Vec<ElementId>) -> Result<SubgroupHandle<'_>> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            self.check_id(m)?;
        }
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        let mut mask = vec![false; self.order()];
        for &m in &members {
            mask[m as usize] = true;
        }
        for &a in &members {
            for &b in &members {
                if !mask[self.mult(a, b) as usize] {
                    return Err(Error::NotASubgroup(format!(
                        "not closed under products: {} * {}",
                        a, b
                    )));
                }
            }
        }
        Ok(SubgroupHandle {
            parent: self,
            members,
        })
    }

    pub(crate) fn subgroup_unchecked(&self, members: Vec<ElementId>) -> SubgroupHandle<'_> {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(members.first(), Some(&0));
        SubgroupHandle {
            parent: self,
            members,
        }
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer(&self, s: &[ElementId]) -> Result<SubgroupHandle<'_>> {
        for &x in s {
            self.check_id(x)?;
        }
        let members = self
            .ids()
            .filter(|&g| s.iter().all(|&x| self.commute(g, x)))
            .collect();
        Ok(SubgroupHandle {
            parent: self,
            members,
        })
    }

    /// Centralizer of a subgroup; it suffices to centralize its generators.
    pub fn centralizer_of_subgroup(&self, h: &SubgroupHandle<'_>) -> Result<SubgroupHandle<'_>> {
        h.check_parent(self)?;
        let gens = self.greedy_generators(h.members());
        self.centralizer(&gens)
    }

    /// `{ g : H^g = H }`, tested on a generating set of `H`.
    pub fn normalizer(&self, h: &SubgroupHandle<'_>) -> Result<SubgroupHandle<'_>> {
        h.check_parent(self)?;
        let gens = self.greedy_generators(h.members());
        let mask = h.member_mask();
        let members = self
            .ids()
            .filter(|&g| gens.iter().all(|&x| mask[self.conjugate(x, g) as usize]))
            .collect();
        Ok(SubgroupHandle {
            parent: self,
            members,
        })
    }

    pub fn is_normal(&self, h: &SubgroupHandle<'_>) -> Result<bool> {
        h.check_parent(self)?;
        let gens = self.greedy_generators(h.members());
        let mask = h.member_mask();
        Ok(self.generator_ids.iter().all(|&g| {
            gens.iter()
                .all(|&x| mask[self.conjugate(x, g) as usize])
        }))
    }

    /// Quotient by a verified normal subgroup, as the permutation group
    /// induced on right cosets; the kernel of that action is exactly `N`.
    pub fn quotient(&self, n: &SubgroupHandle<'_>) -> Result<Group> {
        Ok(self.quotient_with_map(n)?.0)
    }

    /// Quotient together with the map from element ids to quotient ids.
    pub fn quotient_with_map(&self, n: &SubgroupHandle<'_>) -> Result<(Group, Vec<ElementId>)> {
        n.check_parent(self)?;
        if !self.is_normal(n)? {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        const UNSET: u32 = u32::MAX;
        let mut coset_of = vec![UNSET; order];
        let mut reps: Vec<ElementId> = Vec::new();
        for g in self.ids() {
            if coset_of[g as usize] != UNSET {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mult(m, g) as usize] = c;
            }
        }
        let coset_count = reps.len();

        let coset_perm = |g: ElementId| -> Permutation {
            let images: Vec<Point> = reps
                .iter()
                .map(|&r| coset_of[self.mult(r, g) as usize])
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };

        let qgens: Vec<Permutation> = self.generator_ids.iter().map(|&g| coset_perm(g)).collect();
        let quotient = Group::enumerate_with_limit(
            &qgens,
            format!("{}/N{}", self.name, n.order()),
            coset_count.max(1),
        )?;
        debug_assert_eq!(quotient.order() * n.order(), order);

        let map: Vec<ElementId> = self
            .ids()
            .map(|g| {
                quotient
                    .id_of_images(coset_perm(g).images())
                    .expect("coset image lies in the quotient")
            })
            .collect();
        Ok((quotient, map))
    }

    /// A Sylow `p`-subgroup, grown from a `p`-element by normalizer steps.
    pub fn sylow(&self, p: u64) -> Result<SubgroupHandle<'_>> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = self.order() as u64;
        if !order.is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order });
        }
        let target = arith::p_part(order, p);

        let seed = self
            .ids()
            .find_map(|x| {
                let o = self.element_order(x) as u64;
                if !o.is_multiple_of(p) {
                    return None;
                }
                Some(self.power(x, o / arith::p_part(o, p)))
            })
            .expect("Cauchy guarantees a p-element");

        let mut members = self.subgroup_closure(&[seed]);
        while (members.len() as u64) < target {
            let handle = self.subgroup_unchecked(members.clone());
            let normalizer = self.normalizer(&handle)?;
            let mask = handle.member_mask();
            let extension = normalizer
                .members()
                .iter()
                .copied()
                .find_map(|g| {
                    if mask[g as usize] {
                        return None;
                    }
                    let o = self.element_order(g) as u64;
                    let h = self.power(g, o / arith::p_part(o, p));
                    (!mask[h as usize]).then_some(h)
                })
                .expect("a proper p-subgroup extends inside its normalizer");
            let mut gens = self.greedy_generators(&members);
            gens.push(extension);
            members = self.subgroup_closure(&gens);
        }
        Ok(self.subgroup_unchecked(members))
    }

    /// For every element, the smallest id in its conjugacy class together
    /// with an element conjugating that representative onto it:
    /// `rep_of[x] ^ conj_by[x] = x`.
    pub fn conjugation_witnesses(&self) -> ConjugationWitnesses {
        let n = self.order();
        const UNSET: u32 = u32::MAX;
        let mut rep_of = vec![UNSET; n];
        let mut conj_by = vec![0 as ElementId; n];
        for rep in self.ids() {
            if rep_of[rep as usize] != UNSET {
                continue;
            }
            rep_of[rep as usize] = rep;
            conj_by[rep as usize] = 0;
            let mut queue = vec![rep];
            let mut i = 0;
            while i < queue.len() {
                let m = queue[i];
                for &g in &self.generator_ids {
                    let c = self.conjugate(m, g);
                    if rep_of[c as usize] == UNSET {
                        rep_of[c as usize] = rep;
                        conj_by[c as usize] = self.mult(conj_by[m as usize], g);
                        queue.push(c);
                    }
                }
                i += 1;
            }
        }
        ConjugationWitnesses { rep_of, conj_by }
    }

    /// Conjugacy classes, each listed by ascending id; the representative is
    /// the smallest id in the class.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for rep in self.ids() {
            if seen[rep as usize] {
                continue;
            }
            seen[rep as usize] = true;
            let mut members = vec![rep];
            let mut i = 0;
            while i < members.len() {
                for &g in &self.generator_ids {
                    let c = self.conjugate(members[i], g);
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        members.push(c);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { rep, members });
        }
        classes
    }

    /// Extends a closed element list by one new generator. Adding a
    /// generator at least doubles the subgroup, so generating sets stay
    /// logarithmic in the subgroup order.
    fn extend_closure(
        &self,
        mask: &mut [bool],
        list: &mut Vec<ElementId>,
        gens: &mut Vec<ElementId>,
        new_gen: ElementId,
    ) {
        if mask[new_gen as usize] {
            return;
        }
        gens.push(new_gen);
        let start = list.len();
        for i in 0..start {
            let t = self.mult(list[i], new_gen);
            if !mask[t as usize] {
                mask[t as usize] = true;
                list.push(t);
            }
        }
        let mut i = start;
        while i < list.len() {
            for &s in gens.iter() {
                let t = self.mult(list[i], s);
                if !mask[t as usize] {
                    mask[t as usize] = true;
                    list.push(t);
                }
            }
            i += 1;
        }
    }

    /// Smallest normal subgroup containing `seeds`: close under products
    /// and under conjugation of the accumulated generators by the group's
    /// generators.
    pub fn normal_closure(&self, seeds: &[ElementId]) -> SubgroupHandle<'_> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut list: Vec<ElementId> = vec![0];
        let mut gens: Vec<ElementId> = Vec::new();
        for &s in seeds {
            if s != 0 {
                self.extend_closure(&mut mask, &mut list, &mut gens, s);
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let h = gens[i];
            for &g in &self.generator_ids {
                let c = self.conjugate(h, g);
                if !mask[c as usize] {
                    self.extend_closure(&mut mask, &mut list, &mut gens, c);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        self.subgroup_unchecked(list)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Group({}, order={}, degree={})",
            self.name,
            self.order(),
            self.degree
        )
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub rep: ElementId,
    pub members: Vec<ElementId>,
}

#[derive(Debug, Clone)]
pub struct ConjugationWitnesses {
    pub rep_of: Vec<ElementId>,
    pub conj_by: Vec<ElementId>,
}

/// A subgroup of an enumerated group, held as a sorted id set.
#[derive(Clone)]
pub struct SubgroupHandle<'g> {
    parent: &'g Group,
    members: Vec<ElementId>,
}

impl<'g> SubgroupHandle<'g> {
    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn into_members(self) -> Vec<ElementId> {
        self.members
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    /// Dense membership mask over the parent's ids.
    pub fn member_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent.order()];
        for &m in &self.members {
            mask[m as usize] = true;
        }
        mask
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.parent.greedy_generators(&self.members);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.parent.commute(a, b)))
    }

    /// Re-enumerates the subgroup as a standalone permutation group on the
    /// parent's points.
    pub fn as_group(&self, name: impl Into<String>) -> Result<Group> {
        let gens: Vec<Permutation> = if self.is_trivial() {
            vec![Permutation::identity(self.parent.degree())?]
        } else {
            self.parent
                .greedy_generators(&self.members)
                .iter()
                .map(|&g| self.parent.permutation(g))
                .collect()
        };
        Group::enumerate_with_limit(&gens, name, self.members.len())
    }

    fn check_parent(&self, g: &Group) -> Result<()> {
        if std::ptr::eq(self.parent, g) {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }
}

impl fmt::Debug for SubgroupHandle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubgroupHandle(order={} of {})",
            self.order(),
            self.parent.name
        )
    }
}

fn order_of_images(images: &[Point]) -> u64 {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut order = 1u64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 1u64;
        seen[start] = true;
        let mut p = images[start] as usize;
        while p != start {
            seen[p] = true;
            len += 1;
            p = images[p] as usize;
        }
        order = arith::checked_lcm(order, len).expect("element order exceeds u64");
    }
    order
}
