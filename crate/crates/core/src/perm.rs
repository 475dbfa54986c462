//! Permutations of `{0, .., n-1}` under the right-action convention.
//!
//! `point^(p*q) = (point^p)^q`: a product is applied left to right.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::GroupError;

/// A bijection on `{0, .., degree-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(GroupError::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(GroupError::NotABijection);
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// In-place `self = self * other`.
    pub fn mul_assign_right(&mut self, other: &Permutation) {
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included as 1s.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        let mut lens = self.cycle_type();
        lens.dedup();
        for l in lens {
            let l = BigUint::from(l);
            let g = gcd_big(&acc, &l);
            acc = acc * &l / g;
        }
        acc
    }

    /// Element order as a machine integer; `None` on overflow.
    pub fn order_u64(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        let mut lens = self.cycle_type();
        lens.dedup();
        for l in lens {
            let l = l as u64;
            acc = (acc / gcd(acc, l)).checked_mul(l)?;
        }
        Some(acc)
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let cycles = self.cycle_type();
        (n - cycles.len()).is_multiple_of(2)
    }

    pub fn support(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&i| self.images[i as usize] != i)
            .collect()
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Re-embeds into a larger degree, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Shifts the action onto `{offset, .., offset+degree-1}` inside `total` points.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Action on a subset given as a sorted list of points that the permutation
    /// must stabilize; the result acts on positions in that list.
    pub fn restrict_to(&self, points: &[u32]) -> Option<Self> {
        let mut index = std::collections::HashMap::with_capacity(points.len());
        for (i, &p) in points.iter().enumerate() {
            index.insert(p, i as u32);
        }
        let images: Option<Vec<u32>> = points
            .iter()
            .map(|&p| index.get(&self.image(p)).copied())
            .collect();
        Permutation::from_images(images?).ok()
    }

    /// Disjoint-cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        s
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)` or `()`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, GroupError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| GroupError::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let points: Result<Vec<u32>, _> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>())
                .collect();
            let points = points.map_err(|e| GroupError::Parse(e.to_string()))?;
            if points.len() > 1 {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Mul<Permutation> for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    let mut a = a.clone();
    let mut b = b.clone();
    while b != BigUint::from(0u32) {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Evaluates a word `[(generator, exponent), ..]` left to right.
pub fn evaluate_word(
    word: &[(usize, i64)],
    assignment: &[Permutation],
) -> Result<Permutation, GroupError> {
    let degree = match assignment.first() {
        Some(p) => p.degree(),
        None if word.is_empty() => 0,
        None => {
            return Err(GroupError::GeneratorIndex {
                index: word[0].0,
                count: 0,
            })
        }
    };
    if assignment.iter().any(|p| p.degree() != degree) {
        return Err(GroupError::DegreeMismatch);
    }
    let mut acc = Permutation::identity(degree);
    for &(g, e) in word {
        let p = assignment.get(g).ok_or(GroupError::GeneratorIndex {
            index: g,
            count: assignment.len(),
        })?;
        acc = acc.compose(&p.pow(e));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let a = p(3, &[&[0, 1]]);
        assert!(evaluate_word(&[], &[a]).unwrap().is_identity());
    }

    #[test]
    fn product_uses_right_action() {
        let a = p(3, &[&[0, 1]]);
        let b = p(3, &[&[1, 2]]);
        let ab = evaluate_word(&[(0, 1), (1, 1)], &[a, b]).unwrap();
        assert_eq!(ab.image(0), 2);
        assert_eq!(ab.image(2), 1);
        assert_eq!(ab.image(1), 0);
    }

    #[test]
    fn self_commutator_vanishes() {
        let a = p(4, &[&[0, 1, 2, 3]]);
        let w = evaluate_word(&[(0, -1), (0, -1), (0, 1), (0, 1)], &[a]).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn word_errors() {
        let a = p(3, &[&[0, 1]]);
        let b = p(4, &[&[0, 1]]);
        assert!(matches!(
            evaluate_word(&[(0, 1)], &[a.clone(), b]),
            Err(GroupError::DegreeMismatch)
        ));
        assert!(matches!(
            evaluate_word(&[(3, 1)], &[a]),
            Err(GroupError::GeneratorIndex { .. })
        ));
    }

    #[test]
    fn cycle_string_roundtrip() {
        let x = p(6, &[&[0, 3, 1], &[4, 5]]);
        let s = x.to_cycle_string();
        assert_eq!(s, "(0 3 1)(4 5)");
        assert_eq!(Permutation::parse_cycles(6, &s).unwrap(), x);
        assert!(Permutation::parse_cycles(6, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "(0 5)").is_err());
    }

    #[test]
    fn order_parity_conjugation() {
        let x = p(7, &[&[0, 1, 2], &[3, 4, 5, 6]]);
        assert_eq!(x.order_u64(), Some(12));
        assert!(!x.is_even());
        let g = p(7, &[&[0, 3]]);
        let y = x.conjugate_by(&g);
        assert_eq!(y, g.inverse().compose(&x).compose(&g));
        assert_eq!(x.pow(-1), x.inverse());
        assert!(x.pow(12).is_identity());
    }
}
