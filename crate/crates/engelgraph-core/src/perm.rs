//! Permutations of the points `0..n`, stored as image arrays.
//!
//! Composition is left to right throughout the crate: `a.compose(&b)`
//! applies `a` first, so the image of `i` is `b(a(i))`. Image arrays are
//! 0-based; cycle notation in strings is 1-based, matching the usual
//! group-theory convention.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// A point the permutation acts on.
pub type Point = u32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Box<[Point]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self {
            images: (0..degree as Point).collect(),
        })
    }

    /// Builds a permutation from its image array, validating bijectivity.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let i = p as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Point>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let i = p as usize;
                if i >= degree {
                    return Err(Error::PointOutOfRange {
                        point: p as u64,
                        degree,
                    });
                }
                if moved[i] {
                    return Err(Error::CycleParse(format!(
                        "point {} appears twice",
                        p + 1
                    )));
                }
                moved[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`.
    ///
    /// `()` and the empty string denote the identity. Points may be
    /// separated by commas or whitespace.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "()" || text == "e" || text == "id" {
            return Self::identity(degree);
        }
        let mut cycles: Vec<Vec<Point>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::CycleParse(format!("expected '(' in {text:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::CycleParse(format!(
                    "unexpected text before '(': {:?}",
                    &rest[..open]
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::CycleParse(format!("unbalanced '(' in {text:?}")))?;
            let body = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if token.is_empty() {
                    continue;
                }
                let value: u64 = token
                    .parse()
                    .map_err(|_| Error::CycleParse(format!("bad point {token:?}")))?;
                if value == 0 {
                    return Err(Error::CycleParse("points are 1-based".into()));
                }
                if value > degree as u64 {
                    return Err(Error::PointOutOfRange {
                        point: value,
                        degree,
                    });
                }
                cycle.push((value - 1) as Point);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, p: Point) -> Point {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as Point == p)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Self {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0 as Point; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as Point;
        }
        Self {
            images: images.into_boxed_slice(),
        }
    }

    /// `[a, b] = a^{-1} b^{-1} a b` under the left-to-right convention.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.check_degree(b)?;
        let inv_a = a.inverse();
        let inv_b = b.inverse();
        inv_a.compose(&inv_b)?.compose(a)?.compose(b)
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self {
            images: (0..self.degree() as Point).collect(),
        };
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base.clone()).expect("equal degrees");
            k >>= 1;
        }
        acc
    }

    /// Order of the permutation, the lcm of its cycle lengths.
    ///
    /// Panics if the lcm does not fit in a `u64`; the orders arising from
    /// enumerated groups always divide the group order and cannot overflow.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles_with_fixed(false) {
            order = arith::checked_lcm(order, cycle.len() as u64)
                .expect("permutation order exceeds u64");
        }
        order
    }

    fn cycles_with_fixed(&self, include_fixed: bool) -> Vec<Vec<Point>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as Point];
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                seen[p] = true;
                cycle.push(p as Point);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 || include_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        self.cycles_with_fixed(false)
    }

    /// 1-based cycle notation; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}
