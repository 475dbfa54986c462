//! Base and strong generating set (stabilizer chain) construction.
//!
//! A randomized Schreier-Sims phase proposes strong generators; the chain is
//! then certified either by a known group order or by sifting every Schreier
//! generator (the deterministic pass).

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;
/// Levels whose orbit length times degree stays below this keep explicit
/// coset representatives; larger ones use Schreier vectors.
const EXPLICIT_LIMIT: usize = 1 << 22;

#[derive(Clone, Debug)]
pub struct Level {
    pub base: u32,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    label: Vec<u32>,
    reps_inv: Option<Vec<Permutation>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: vec![base],
            pos,
            label: vec![NONE],
            reps_inv: None,
        }
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    #[inline]
    pub fn contains_point(&self, p: u32) -> bool {
        self.pos[p as usize] != NONE
    }

    fn recompute(&mut self, gens: Vec<Permutation>, degree: usize) {
        self.inv_gens = gens.iter().map(|g| g.inverse()).collect();
        self.gens = gens;
        for &p in &self.orbit {
            self.pos[p as usize] = NONE;
        }
        self.orbit.clear();
        self.label.clear();
        self.orbit.push(self.base);
        self.label.push(NONE);
        self.pos[self.base as usize] = 0;
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.pos[q as usize] == NONE {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.label.push(gi as u32);
                }
            }
            i += 1;
        }
        if self.orbit.len() * degree <= EXPLICIT_LIMIT && self.orbit.len() > 1 {
            let mut reps: Vec<Permutation> = Vec::with_capacity(self.orbit.len());
            reps.push(Permutation::identity(degree));
            for idx in 1..self.orbit.len() {
                let p = self.orbit[idx];
                let g = self.label[idx] as usize;
                let parent = self.inv_gens[g].image(p);
                let prev = &reps[self.pos[parent as usize] as usize];
                reps.push(prev.compose(&self.gens[g]));
            }
            self.reps_inv = Some(reps.iter().map(|r| r.inverse()).collect());
        } else {
            self.reps_inv = None;
        }
    }

    /// Coset representative mapping the base point to `p`.
    pub fn rep(&self, p: u32) -> Permutation {
        let idx = self.pos[p as usize];
        assert!(idx != NONE, "point not in orbit");
        if let Some(reps) = &self.reps_inv {
            return reps[idx as usize].inverse();
        }
        let mut word = Vec::new();
        let mut q = p;
        while q != self.base {
            let g = self.label[self.pos[q as usize] as usize] as usize;
            word.push(g);
            q = self.inv_gens[g].image(q);
        }
        let mut u = Permutation::identity(self.pos.len());
        for &g in word.iter().rev() {
            u.mul_assign_right(&self.gens[g]);
        }
        u
    }

    /// `h <- h * rep(beta)^-1` where `beta = base^h`.
    fn strip(&self, h: &mut Permutation, beta: u32) {
        if let Some(reps) = &self.reps_inv {
            h.mul_assign_right(&reps[self.pos[beta as usize] as usize]);
            return;
        }
        let mut q = beta;
        while q != self.base {
            let g = self.label[self.pos[q as usize] as usize] as usize;
            h.mul_assign_right(&self.inv_gens[g]);
            q = self.inv_gens[g].image(q);
        }
    }

    /// True when the Schreier generator for `(orbit[idx], gen)` is trivially
    /// the identity because it follows a tree edge.
    fn is_tree_edge(&self, idx: usize, gen: usize) -> bool {
        let p = self.orbit[idx];
        let q = self.gens[gen].image(p);
        let qi = self.pos[q as usize] as usize;
        self.label[qi] == gen as u32 && self.inv_gens[gen].image(q) == p
    }
}

/// A stabilizer chain `G = G^(0) >= G^(1) >= ... >= G^(k) = 1`.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<(Permutation, usize)>,
}

impl StabChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.strong.iter().map(|(g, _)| g.clone()).collect()
    }

    /// Strong generators fixing the first `depth` base points.
    pub fn generators_at(&self, depth: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|(_, d)| *d >= depth)
            .map(|(g, _)| g.clone())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::one();
        for l in &self.levels {
            o *= BigUint::from(l.orbit.len());
        }
        o
    }

    /// Order of the stabilizer of the first `depth` base points.
    pub fn order_from(&self, depth: usize) -> BigUint {
        let mut o = BigUint::one();
        for l in &self.levels[depth..] {
            o *= BigUint::from(l.orbit.len());
        }
        o
    }

    /// Sifts `g` from level `start`, returning the residue and the level at
    /// which sifting stopped (`levels.len()` when all levels were passed).
    pub fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.image(level.base);
            if !level.contains_point(beta) {
                return (h, i);
            }
            level.strip(&mut h, beta);
        }
        (h, self.levels.len())
    }

    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g, 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift(g);
        h.is_identity()
    }

    /// Calls `f` on every element, in chain-enumeration order. Stops early
    /// when `f` returns `false`.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, mut f: F) {
        let reps: Vec<Vec<Permutation>> = self
            .levels
            .iter()
            .map(|l| l.orbit.iter().map(|&p| l.rep(p)).collect())
            .collect();
        let k = reps.len();
        if k == 0 {
            f(&Permutation::identity(self.degree));
            return;
        }
        let mut stack: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut idx = vec![0usize; k];
        // Level k-1 is chosen first; the product is u_{k-1} ... u_0.
        let mut depth = 0usize;
        loop {
            let level = k - 1 - depth;
            if idx[depth] < reps[level].len() {
                let next = stack[depth].compose(&reps[level][idx[depth]]);
                idx[depth] += 1;
                if depth + 1 == k {
                    if !f(&next) {
                        return;
                    }
                } else {
                    if stack.len() > depth + 1 {
                        stack[depth + 1] = next;
                    } else {
                        stack.push(next);
                    }
                    depth += 1;
                    idx[depth] = 0;
                }
            } else {
                if depth == 0 {
                    return;
                }
                depth -= 1;
            }
        }
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        out
    }

    fn empty(degree: usize, prefix: &[u32]) -> Self {
        StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
            strong: Vec::new(),
        }
    }

    /// Assembles a chain from a base and strong generators that are already
    /// known to form a BSGS (for instance from an automorphism search).
    pub fn from_bsgs(degree: usize, base: &[u32], strong: Vec<Permutation>) -> Self {
        let mut chain = StabChain::empty(degree, base);
        for g in strong {
            if g.is_identity() {
                continue;
            }
            let depth = chain.depth_of(&g);
            assert!(depth < chain.levels.len(), "strong generator fixes the base");
            chain.strong.push((g, depth));
        }
        chain.rebuild_upto(chain.levels.len());
        chain
    }

    fn depth_of(&self, g: &Permutation) -> usize {
        self.levels
            .iter()
            .position(|l| g.image(l.base) != l.base)
            .unwrap_or(self.levels.len())
    }

    fn add_strong(&mut self, g: Permutation) -> usize {
        let mut depth = self.depth_of(&g);
        if depth == self.levels.len() {
            let p = g.smallest_moved_point().expect("identity added as strong generator");
            self.levels.push(Level::new(p, self.degree));
            depth = self.levels.len() - 1;
        }
        self.strong.push((g, depth));
        depth
    }

    fn rebuild_upto(&mut self, last: usize) {
        let last = last.min(self.levels.len().saturating_sub(1));
        for i in 0..=last.min(self.levels.len().saturating_sub(1)) {
            if self.levels.is_empty() {
                break;
            }
            let gens = self.generators_at(i);
            let degree = self.degree;
            self.levels[i].recompute(gens, degree);
        }
    }

    /// Removes trailing levels with trivial orbits that are not part of the
    /// requested prefix.
    fn trim(&mut self, keep: usize) {
        while self.levels.len() > keep && self.levels.last().map(|l| l.orbit.len()) == Some(1) {
            let d = self.levels.len() - 1;
            if self.strong.iter().any(|(_, sd)| *sd >= d) {
                break;
            }
            self.levels.pop();
        }
    }

    /// Randomized Schreier-Sims followed by certification.
    pub fn build(
        degree: usize,
        gens: &[Permutation],
        prefix: &[u32],
        known_order: Option<&BigUint>,
        rng: &mut ChaCha8Rng,
    ) -> Self {
        let mut chain = StabChain::empty(degree, prefix);
        for g in gens {
            if !g.is_identity() {
                chain.add_strong(g.clone());
            }
        }
        chain.rebuild_upto(chain.levels.len());
        let nontrivial: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return chain;
        }
        let mut pr = ProductReplacement::new(&nontrivial, rng);
        let mut quiet = 0usize;
        let target_quiet = 24;
        loop {
            if let Some(k) = known_order {
                let o = chain.order();
                if &o == k {
                    break;
                }
                assert!(&o < k, "stabilizer chain exceeds the known order");
            } else if quiet >= target_quiet {
                break;
            }
            let r = pr.next(rng);
            let (h, _) = chain.sift(&r);
            if h.is_identity() {
                quiet += 1;
            } else {
                quiet = 0;
                let d = chain.add_strong(h);
                chain.rebuild_upto(d);
            }
        }
        if known_order.is_none() {
            chain.verify();
        }
        chain.trim(prefix.len());
        chain
    }

    /// Deterministic Schreier-Sims pass: every Schreier generator must sift
    /// to the identity below its level.
    fn verify(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let level = &self.levels[iu];
            let n_orbit = level.orbit.len();
            let n_gens = level.gens.len();
            for idx in 0..n_orbit {
                for gi in 0..n_gens {
                    let level = &self.levels[iu];
                    if level.is_tree_edge(idx, gi) {
                        continue;
                    }
                    let beta = level.orbit[idx];
                    let mut h = level.rep(beta);
                    h.mul_assign_right(&level.gens[gi]);
                    let (res, _) = self.sift_from(&h, iu);
                    if !res.is_identity() {
                        let d = self.add_strong(res);
                        self.rebuild_upto(d);
                        i = d as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }
}

/// Product-replacement generator of pseudo-random group elements.
pub struct ProductReplacement {
    state: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    pub fn new(gens: &[Permutation], rng: &mut ChaCha8Rng) -> Self {
        assert!(!gens.is_empty());
        let mut state: Vec<Permutation> = Vec::new();
        while state.len() < 10.max(gens.len()) {
            for g in gens {
                state.push(g.clone());
            }
        }
        let acc = Permutation::identity(gens[0].degree());
        let mut pr = ProductReplacement { state, acc };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next(&mut self, rng: &mut ChaCha8Rng) -> Permutation {
        let n = self.state.len();
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n - 1);
        if t >= s {
            t += 1;
        }
        let other = if rng.gen_bool(0.5) {
            self.state[t].clone()
        } else {
            self.state[t].inverse()
        };
        if rng.gen_bool(0.5) {
            self.state[s] = self.state[s].compose(&other);
            self.acc = self.acc.compose(&self.state[s]);
        } else {
            self.state[s] = other.compose(&self.state[s]);
            self.acc = self.state[s].compose(&self.acc);
        }
        self.acc.clone()
    }
}
