use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chain::{ProductReplacement, StabChain};
use crate::error::GroupError;
use crate::perm::Permutation;

/// Recognized full alternating or symmetric group on a support set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Giant {
    pub support: Vec<u32>,
    pub alternating: bool,
}

impl Giant {
    pub fn order(&self) -> BigUint {
        let mut o = BigUint::one();
        for k in 2..=self.support.len() {
            o *= BigUint::from(k);
        }
        if self.alternating && self.support.len() >= 2 {
            o /= BigUint::from(2u32);
        }
        o
    }

    pub fn label(&self) -> String {
        let k = self.support.len();
        if self.alternating {
            format!("Alt({k})")
        } else {
            format!("Sym({k})")
        }
    }

    fn contains(&self, g: &Permutation) -> bool {
        let mut inside = vec![false; g.degree()];
        for &p in &self.support {
            inside[p as usize] = true;
        }
        if g.support().iter().any(|&p| !inside[p as usize]) {
            return false;
        }
        !self.alternating || g.is_even()
    }

    /// Explicit generators: 3-cycles `(t0 t1 tj)` plus `(t0 t1)` for the
    /// symmetric case.
    pub fn generators(&self, degree: usize) -> Vec<Permutation> {
        let t = &self.support;
        let mut gens = Vec::new();
        if t.len() < 2 || (self.alternating && t.len() < 3) {
            return gens;
        }
        if self.alternating {
            for j in 2..t.len() {
                gens.push(Permutation::from_cycles(degree, &[vec![t[0], t[1], t[j]]]).unwrap());
            }
        } else {
            gens.push(Permutation::from_cycles(degree, &[vec![t[0], t[1]]]).unwrap());
            let cyc: Vec<u32> = t.clone();
            gens.push(Permutation::from_cycles(degree, &[cyc]).unwrap());
        }
        gens
    }
}

#[derive(Default, Debug)]
struct Cache {
    giant: OnceLock<Option<Giant>>,
    chain: OnceLock<Arc<StabChain>>,
    order: OnceLock<BigUint>,
}

/// A permutation group given by generators. Order, membership, and the
/// stabilizer chain are computed lazily and cached.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    gens: Vec<Permutation>,
    cache: Arc<Cache>,
}

/// Orbit of a point with a Schreier vector for transversal elements.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<u32>,
    pos: Vec<u32>,
    parent_gen: Vec<u32>,
    gens: Vec<Permutation>,
}

impl Orbit {
    pub fn contains(&self, p: u32) -> bool {
        self.pos[p as usize] != u32::MAX
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Word (generator indices) of a transversal element mapping the root to `p`.
    pub fn word(&self, p: u32) -> Vec<usize> {
        let mut w = Vec::new();
        let mut q = p;
        while q != self.points[0] {
            let idx = self.pos[q as usize] as usize;
            let g = self.parent_gen[idx] as usize;
            w.push(g);
            q = self.gens[g].inverse().image(q);
        }
        w.reverse();
        w
    }

    /// Transversal element mapping the root to `p`.
    pub fn transversal(&self, p: u32) -> Permutation {
        let mut u = Permutation::identity(self.pos.len());
        for g in self.word(p) {
            u.mul_assign_right(&self.gens[g]);
        }
        u
    }
}

/// Transitivity data of an action on `{0, .., domain-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransitivityProfile {
    pub transitive: bool,
    pub semiregular: bool,
    pub regular: bool,
}

pub(crate) fn rng_for(degree: usize, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x9e37_79b9_7f4a_7c15 ^ (degree as u64).wrapping_mul(31) ^ salt)
}

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut o = BigUint::one();
    for k in 2..=n {
        o *= BigUint::from(k);
    }
    o
}

impl PermutationGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        Ok(Self::from_parts(degree, gens))
    }

    fn from_parts(degree: usize, gens: Vec<Permutation>) -> Self {
        let mut seen = HashSet::new();
        let gens: Vec<Permutation> = gens
            .into_iter()
            .filter(|g| !g.is_identity() && seen.insert(g.clone()))
            .collect();
        PermutationGroup {
            degree,
            gens,
            cache: Arc::new(Cache::default()),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    /// Declares the order of the group; chain construction then stops as soon
    /// as the chain reaches this order, which certifies it.
    pub fn with_known_order(self, order: BigUint) -> Self {
        let g = Self::from_parts(self.degree, self.gens);
        let _ = g.cache.order.set(order);
        g
    }

    /// Builds a group from a base and strong generating set that is already
    /// certified (for instance by an automorphism search).
    pub fn from_bsgs(degree: usize, gens: Vec<Permutation>, base: &[u32], strong: Vec<Permutation>) -> Self {
        let chain = StabChain::from_bsgs(degree, base, strong);
        let g = Self::from_parts(degree, gens);
        let _ = g.cache.order.set(chain.order());
        let _ = g.cache.chain.set(Arc::new(chain));
        g
    }

    pub fn symmetric(n: usize) -> Self {
        let giant = Giant {
            support: (0..n as u32).collect(),
            alternating: false,
        };
        Self::from_giant(n, giant)
    }

    pub fn alternating(n: usize) -> Self {
        let giant = Giant {
            support: (0..n as u32).collect(),
            alternating: true,
        };
        Self::from_giant(n, giant)
    }

    pub(crate) fn from_giant(degree: usize, giant: Giant) -> Self {
        let g = Self::from_parts(degree, giant.generators(degree));
        let _ = g.cache.order.set(giant.order());
        let _ = g.cache.giant.set(if giant.support.len() >= 3 { Some(giant) } else { None });
        g
    }

    pub fn cyclic(n: usize) -> Self {
        let cyc: Vec<u32> = (0..n as u32).collect();
        let gens = if n > 1 {
            vec![Permutation::from_cycles(n, &[cyc]).unwrap()]
        } else {
            vec![]
        };
        Self::from_parts(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Recognition of `Alt` or `Sym` on the support: a group that is
    /// primitive on its support and contains a `p`-cycle for a prime
    /// `k/2 < p <= k-3` contains the alternating group of that support.
    pub fn giant(&self) -> Option<&Giant> {
        self.cache
            .giant
            .get_or_init(|| self.detect_giant())
            .as_ref()
    }

    fn detect_giant(&self) -> Option<Giant> {
        if self.gens.is_empty() {
            return None;
        }
        let mut moved = vec![false; self.degree];
        for g in &self.gens {
            for p in g.support() {
                moved[p as usize] = true;
            }
        }
        let support: Vec<u32> = (0..self.degree as u32).filter(|&p| moved[p as usize]).collect();
        let k = support.len();
        if k < 12 {
            return None;
        }
        if self.orbit_points(support[0]).len() != k {
            return None;
        }
        if let Some(o) = self.cache.order.get() {
            let alt = factorial(k) / BigUint::from(2u32);
            if o != &alt && o != &factorial(k) {
                return None;
            }
        }
        let mut rng = rng_for(self.degree, 17);
        let mut pr = ProductReplacement::new(&self.gens, &mut rng);
        let mut found = false;
        for _ in 0..60 {
            let r = pr.next(&mut rng);
            let ct = r.cycle_type();
            if ct
                .iter()
                .any(|&l| 2 * l > k && l + 3 <= k && is_prime(l))
            {
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
        let restricted: Vec<Permutation> = self
            .gens
            .iter()
            .map(|g| g.restrict_to(&support).expect("support is invariant"))
            .collect();
        let rg = PermutationGroup::from_parts(k, restricted);
        if !super::blocks::is_primitive_exhaustive(&rg) {
            return None;
        }
        let alternating = self.gens.iter().all(|g| g.is_even());
        Some(Giant {
            support,
            alternating,
        })
    }

    fn build_chain(&self, prefix: &[u32]) -> StabChain {
        let mut rng = rng_for(self.degree, prefix.len() as u64);
        let known = self.known_order();
        StabChain::build(self.degree, &self.gens, prefix, known.as_ref(), &mut rng)
    }

    fn known_order(&self) -> Option<BigUint> {
        if let Some(o) = self.cache.order.get() {
            return Some(o.clone());
        }
        if let Some(g) = self.giant() {
            return Some(g.order());
        }
        None
    }

    pub fn chain(&self) -> Arc<StabChain> {
        self.cache
            .chain
            .get_or_init(|| Arc::new(self.build_chain(&[])))
            .clone()
    }

    /// A chain whose base starts with `prefix`. Not cached.
    pub fn chain_with_prefix(&self, prefix: &[u32]) -> StabChain {
        self.build_chain(prefix)
    }

    pub fn order(&self) -> BigUint {
        self.cache
            .order
            .get_or_init(|| {
                if let Some(g) = self.giant() {
                    g.order()
                } else {
                    self.chain().order()
                }
            })
            .clone()
    }

    /// Order as a machine integer, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        if g.is_identity() {
            return true;
        }
        if let Some(giant) = self.giant() {
            return giant.contains(g);
        }
        self.chain().contains(g)
    }

    /// All elements in chain-enumeration order. Refuses groups above `limit`.
    pub fn elements_bounded(&self, limit: u64) -> Result<Vec<Permutation>, GroupError> {
        match self.order_u64() {
            Some(o) if o <= limit => Ok(self.chain().elements()),
            _ => Err(GroupError::ResourceExhausted(format!(
                "element enumeration of a group of order {} (limit {limit})",
                self.order()
            ))),
        }
    }

    /// All elements (at most one million).
    pub fn elements(&self) -> Result<Vec<Permutation>, GroupError> {
        self.elements_bounded(1_000_000)
    }

    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, f: F) {
        self.chain().for_each_element(f)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn orbit_points(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            for g in &self.gens {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    out.push(q);
                }
            }
            i += 1;
        }
        out
    }

    /// Orbit of `point` with a Schreier vector over the generators.
    pub fn orbit(&self, point: u32) -> Orbit {
        let mut pos = vec![u32::MAX; self.degree];
        pos[point as usize] = 0;
        let mut points = vec![point];
        let mut parent_gen = vec![u32::MAX];
        let mut i = 0;
        while i < points.len() {
            let p = points[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if pos[q as usize] == u32::MAX {
                    pos[q as usize] = points.len() as u32;
                    points.push(q);
                    parent_gen.push(gi as u32);
                }
            }
            i += 1;
        }
        Orbit {
            points,
            pos,
            parent_gen,
            gens: self.gens.clone(),
        }
    }

    /// All orbits, each starting at its smallest point, ordered by that point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let orb = self.orbit_points(p);
            for &q in &orb {
                seen[q as usize] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit_points(0).len() == self.degree
    }

    pub fn transitivity_profile(&self, domain: usize) -> TransitivityProfile {
        let orbits = self.orbits();
        let in_domain: Vec<&Vec<u32>> = orbits
            .iter()
            .filter(|o| (o[0] as usize) < domain)
            .collect();
        let transitive = in_domain.len() == 1 && in_domain[0].len() == domain;
        let order = self.order();
        let semiregular = in_domain
            .iter()
            .all(|o| BigUint::from(o.len()) == order);
        let regular = transitive && order == BigUint::from(domain);
        TransitivityProfile {
            transitive,
            semiregular,
            regular,
        }
    }

    pub fn point_stabilizer(&self, point: u32) -> SubgroupHandle {
        let sub = self.pointwise_stabilizer(&[point]);
        SubgroupHandle {
            parent: self.clone(),
            group: sub,
        }
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> PermutationGroup {
        if let Some(giant) = self.giant() {
            let removed: HashSet<u32> = points.iter().copied().collect();
            let support: Vec<u32> = giant
                .support
                .iter()
                .copied()
                .filter(|p| !removed.contains(p))
                .collect();
            let g = Giant {
                support,
                alternating: giant.alternating,
            };
            return Self::from_giant(self.degree, g);
        }
        let chain = self.build_chain(points);
        let gens = chain.generators_at(points.len());
        let order = chain.order_from(points.len());
        Self::from_parts(self.degree, gens).with_known_order(order)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, parent: &PermutationGroup) -> bool {
        parent
            .gens
            .iter()
            .all(|g| self.gens.iter().all(|s| self.contains(&s.conjugate_by(g))))
    }

    /// `g^-1 G g`.
    pub fn conjugate(&self, g: &Permutation) -> PermutationGroup {
        let gens = self.gens.iter().map(|s| s.conjugate_by(g)).collect();
        let out = Self::from_parts(self.degree, gens);
        if let Some(o) = self.cache.order.get() {
            let _ = out.cache.order.set(o.clone());
        }
        out
    }

    /// Group generated by this group and further elements.
    pub fn extended(&self, extra: &[Permutation]) -> PermutationGroup {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::from_parts(self.degree, gens)
    }

    /// Normal closure of `elements` under conjugation by this group.
    pub fn normal_closure(&self, elements: &[Permutation]) -> PermutationGroup {
        let mut n = Self::from_parts(self.degree, elements.to_vec());
        loop {
            let mut added = Vec::new();
            for s in n.generators() {
                for g in &self.gens {
                    let c = s.conjugate_by(g);
                    if !n.contains(&c) && !added.contains(&c) {
                        added.push(c);
                    }
                }
            }
            if added.is_empty() {
                return n;
            }
            n = n.extended(&added);
        }
    }

    pub fn derived_subgroup(&self) -> SubgroupHandle {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        SubgroupHandle {
            parent: self.clone(),
            group: self.normal_closure(&comms),
        }
    }

    /// Intersection, computed by filtering the elements of the smaller group.
    pub fn intersection(&self, other: &PermutationGroup) -> Result<PermutationGroup, GroupError> {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let mut result = Self::trivial(self.degree);
        let elems = small.elements()?;
        for g in elems {
            if big.contains(&g) && !result.contains(&g) {
                result = result.extended(&[g]);
            }
        }
        Ok(result)
    }

    /// Subgroup of even permutations.
    pub fn even_part(&self) -> PermutationGroup {
        let Some(t) = self.gens.iter().find(|g| !g.is_even()) else {
            return self.clone();
        };
        let tinv = t.inverse();
        let mut gens = vec![t.compose(t)];
        for s in &self.gens {
            if s.is_even() {
                gens.push(s.clone());
                gens.push(t.compose(s).compose(&tinv));
            } else {
                gens.push(s.compose(&tinv));
                gens.push(t.compose(s));
            }
        }
        let out = Self::from_parts(self.degree, gens);
        if let Some(o) = self.cache.order.get() {
            let _ = out.cache.order.set(o / BigUint::from(2u32));
        }
        out
    }

    /// Right-regular representation of a group of order at most `limit`:
    /// elements are numbered in chain order and `g` acts by `x -> x*g`.
    pub fn regular_representation(&self, limit: u64) -> Result<(PermutationGroup, Vec<Permutation>), GroupError> {
        let elems = self.elements_bounded(limit)?;
        let index: std::collections::HashMap<&Permutation, u32> =
            elems.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
        let n = elems.len();
        let gens = self
            .gens
            .iter()
            .map(|s| {
                let images: Vec<u32> = elems.iter().map(|x| index[&x.compose(s)]).collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        let g = Self::from_parts(n, gens).with_known_order(BigUint::from(n));
        Ok((g, elems))
    }

    /// Restriction of the action to an invariant set of points.
    pub fn restricted_to(&self, points: &[u32]) -> Result<PermutationGroup, GroupError> {
        let gens: Option<Vec<Permutation>> = self.gens.iter().map(|g| g.restrict_to(points)).collect();
        let gens = gens.ok_or_else(|| GroupError::Unsupported("point set is not invariant".into()))?;
        Ok(Self::from_parts(points.len(), gens))
    }

    /// Pseudo-random elements, reproducible for a given salt.
    pub fn random_elements(&self, count: usize, salt: u64) -> Vec<Permutation> {
        if self.gens.is_empty() {
            return vec![self.identity(); count];
        }
        let mut rng = rng_for(self.degree, salt);
        let mut pr = ProductReplacement::new(&self.gens, &mut rng);
        (0..count).map(|_| pr.next(&mut rng)).collect()
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A subgroup together with the group it was taken in.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: PermutationGroup,
    group: PermutationGroup,
}

impl SubgroupHandle {
    /// Checks that every generator lies in `parent`.
    pub fn new(parent: &PermutationGroup, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        let group = PermutationGroup::new(parent.degree(), gens)?;
        Self::from_group(parent, group)
    }

    pub fn from_group(parent: &PermutationGroup, group: PermutationGroup) -> Result<Self, GroupError> {
        if group.degree() != parent.degree() {
            return Err(GroupError::DegreeMismatch);
        }
        if !group.generators().iter().all(|g| parent.contains(g)) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(SubgroupHandle {
            parent: parent.clone(),
            group,
        })
    }

    pub(crate) fn trusted(parent: &PermutationGroup, group: PermutationGroup) -> Self {
        SubgroupHandle {
            parent: parent.clone(),
            group,
        }
    }

    pub fn parent(&self) -> &PermutationGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn into_group(self) -> PermutationGroup {
        self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn index(&self) -> BigUint {
        self.parent.order() / self.group.order()
    }
}
