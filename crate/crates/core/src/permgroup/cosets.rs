//! Actions on right cosets, cores, maximality, and double cosets.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::blocks::is_primitive;
use super::chain::StabChain;
use super::group::{PermutationGroup, SubgroupHandle};
use crate::error::GroupError;
use crate::perm::Permutation;

pub const DEFAULT_INDEX_BOUND: usize = 1_000_000;

/// Right-multiplication action of `G` on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub image: PermutationGroup,
    pub kernel: SubgroupHandle,
    /// `representatives[i]` lies in the `i`-th coset; coset 0 is `H` itself.
    pub representatives: Vec<Permutation>,
    images_of_generators: Vec<Permutation>,
    keyer: CosetKeyer,
    index: HashMap<Vec<u32>, u32>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    /// Index of the coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(&self.keyer.key(g)).copied()
    }

    /// Image of an arbitrary element of `G`.
    pub fn map(&self, g: &Permutation) -> Option<Permutation> {
        let images: Option<Vec<u32>> = self
            .representatives
            .iter()
            .map(|r| self.coset_of(&r.compose(g)))
            .collect();
        images.map(Permutation::from_images_unchecked)
    }

    /// Images of the parent group's generators, in order.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.images_of_generators
    }
}

/// Canonical keys for right cosets `Hg`: the base images of the element of
/// `Hg` whose base images are lexicographically least along `H`'s chain.
#[derive(Clone, Debug)]
struct CosetKeyer {
    hchain: StabChain,
    gbase: Vec<u32>,
    reps: Vec<Vec<Permutation>>,
}

impl CosetKeyer {
    fn new(hchain: StabChain, gbase: Vec<u32>) -> Self {
        let reps = hchain
            .levels()
            .iter()
            .map(|l| l.orbit().iter().map(|&p| l.rep(p)).collect())
            .collect();
        CosetKeyer {
            hchain,
            gbase,
            reps,
        }
    }

    fn key(&self, g: &Permutation) -> Vec<u32> {
        let mut cur = g.clone();
        for (li, level) in self.hchain.levels().iter().enumerate() {
            let orbit = level.orbit();
            if orbit.len() == 1 {
                continue;
            }
            let (best, _) = orbit
                .iter()
                .enumerate()
                .min_by_key(|(_, &b)| cur.image(b))
                .unwrap();
            if best != 0 {
                cur = self.reps[li][best].compose(&cur);
            }
        }
        self.gbase.iter().map(|&b| cur.image(b)).collect()
    }
}

pub fn coset_action(g: &PermutationGroup, h: &PermutationGroup) -> Result<CosetAction, GroupError> {
    coset_action_bounded(g, h, DEFAULT_INDEX_BOUND)
}

pub fn coset_action_bounded(
    g: &PermutationGroup,
    h: &PermutationGroup,
    bound: usize,
) -> Result<CosetAction, GroupError> {
    if h.degree() != g.degree() || !h.is_subgroup_of(g) {
        return Err(GroupError::NotASubgroup);
    }
    let index = g.order() / h.order();
    match index.to_usize() {
        Some(i) if i <= bound => {}
        _ => {
            return Err(GroupError::IndexBound {
                index: index.to_string(),
                bound,
            })
        }
    }
    let gchain = g.chain();
    let mut gbase = gchain.base();
    if gbase.is_empty() {
        gbase.push(0);
    }
    let hchain = h.chain_with_prefix(&gbase);
    let keyer = CosetKeyer::new(hchain, gbase);

    let mut reps = vec![g.identity()];
    let mut lookup: HashMap<Vec<u32>, u32> = HashMap::new();
    lookup.insert(keyer.key(&reps[0]), 0);
    let gens = g.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < reps.len() {
        for (gi, s) in gens.iter().enumerate() {
            let x = reps[i].compose(s);
            let k = keyer.key(&x);
            let next = reps.len() as u32;
            let j = *lookup.entry(k).or_insert(next);
            if j == next {
                reps.push(x);
            }
            images[gi].push(j);
        }
        i += 1;
    }
    let m = reps.len();
    let image_gens: Vec<Permutation> = images
        .into_iter()
        .map(Permutation::from_images_unchecked)
        .collect();
    let image = PermutationGroup::new(m, image_gens.clone())?;
    let kernel_group = combined_kernel(g, &image_gens, &image)?;
    Ok(CosetAction {
        image,
        kernel: SubgroupHandle::trusted(g, kernel_group),
        representatives: reps,
        images_of_generators: image_gens,
        keyer,
        index: lookup,
    })
}

/// Kernel of the homomorphism `G -> image` given by generator images, via the
/// diagonal action on `degree(G) + degree(image)` points.
pub(crate) fn combined_kernel(
    g: &PermutationGroup,
    image_gens: &[Permutation],
    image: &PermutationGroup,
) -> Result<PermutationGroup, GroupError> {
    let n = g.degree();
    let gorder = g.order();
    let iorder = image.order();
    if gorder == iorder {
        return Ok(PermutationGroup::trivial(n));
    }
    let kernel_order = &gorder / &iorder;
    if g.generators().is_empty() {
        return Ok(PermutationGroup::trivial(n));
    }
    let m = image.degree();
    let total = n + m;
    let combined: Vec<Permutation> = g
        .generators()
        .iter()
        .zip(image_gens)
        .map(|(a, b)| {
            let mut imgs: Vec<u32> = a.images().to_vec();
            imgs.extend(b.images().iter().map(|&x| x + n as u32));
            Permutation::from_images_unchecked(imgs)
        })
        .collect();
    let cg = PermutationGroup::new(total, combined)?.with_known_order(gorder);
    let mut prefix: Vec<u32> = image.chain().base().iter().map(|&b| b + n as u32).collect();
    if prefix.is_empty() {
        prefix.push(n as u32);
    }
    let chain = cg.chain_with_prefix(&prefix);
    let points: Vec<u32> = (0..n as u32).collect();
    let gens: Vec<Permutation> = chain
        .generators_at(prefix.len())
        .iter()
        .map(|k| k.restrict_to(&points).expect("first block is invariant"))
        .collect();
    debug_assert_eq!(chain.order_from(prefix.len()), kernel_order);
    Ok(PermutationGroup::new(n, gens)?.with_known_order(kernel_order))
}

/// Largest normal subgroup of `G` contained in `H`.
pub fn core(g: &PermutationGroup, h: &PermutationGroup) -> Result<SubgroupHandle, GroupError> {
    if h.same_group(g) {
        return Ok(SubgroupHandle::trusted(g, h.clone()));
    }
    Ok(coset_action(g, h)?.kernel)
}

/// Core computed by repeated intersection `C <- C ∩ C^s`; only for subgroups
/// small enough to enumerate.
pub fn core_by_intersection(g: &PermutationGroup, h: &PermutationGroup) -> Result<PermutationGroup, GroupError> {
    let mut c = h.clone();
    loop {
        let mut changed = false;
        for s in g.generators() {
            let conj = c.conjugate(s);
            let next = c.intersection(&conj)?;
            if next.order() != c.order() {
                c = next;
                changed = true;
            }
        }
        if !changed {
            return Ok(c);
        }
    }
}

pub fn is_maximal_subgroup(g: &PermutationGroup, m: &PermutationGroup) -> Result<bool, GroupError> {
    if !m.is_subgroup_of(g) {
        return Err(GroupError::NotASubgroup);
    }
    let index = g.order() / m.order();
    if index.is_one() {
        return Ok(false);
    }
    if index == BigUint::from(2u32) {
        return Ok(true);
    }
    let action = coset_action(g, m)?;
    is_primitive(&action.image)
}

/// The set `A x B`, bounded by `|A|·|B| <= 10^7`.
pub fn double_coset(
    a: &PermutationGroup,
    x: &Permutation,
    b: &PermutationGroup,
) -> Result<Vec<Permutation>, GroupError> {
    let oa = a.order();
    let ob = b.order();
    if &oa * &ob > BigUint::from(10_000_000u64) {
        return Err(GroupError::ResourceExhausted(format!(
            "double coset with |A|·|B| = {}",
            &oa * &ob
        )));
    }
    let ea = a.elements()?;
    let eb = b.elements()?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    for u in &ea {
        let ux = u.compose(x);
        if seen.contains(&ux) {
            // `ux B` is then already fully contained.
            continue;
        }
        for v in &eb {
            seen.insert(ux.compose(v));
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s4() -> PermutationGroup {
        PermutationGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 1]])]).unwrap()
    }

    #[test]
    fn coset_action_on_whole_group() {
        let g = s4();
        let a = coset_action(&g, &g).unwrap();
        assert_eq!(a.degree(), 1);
        assert_eq!(a.kernel.order(), BigUint::from(24u32));
    }

    #[test]
    fn coset_action_on_point_stabilizer() {
        let g = s4();
        let h = g.point_stabilizer(3).into_group();
        let a = coset_action(&g, &h).unwrap();
        assert_eq!(a.degree(), 4);
        assert_eq!(a.image.order(), BigUint::from(24u32));
        assert!(a.kernel.group().is_trivial());
        for x in g.elements().unwrap() {
            let img = a.map(&x).unwrap();
            let y = x.compose(&perm(4, &[&[0, 1, 2]]));
            let imgy = a.map(&y).unwrap();
            assert_eq!(img.compose(&a.map(&perm(4, &[&[0, 1, 2]])).unwrap()), imgy);
        }
    }

    #[test]
    fn core_of_reflection_in_d8_is_trivial() {
        let d8 = PermutationGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])]).unwrap();
        let h = PermutationGroup::new(4, vec![perm(4, &[&[0, 2]])]).unwrap();
        assert!(core(&d8, &h).unwrap().group().is_trivial());
        assert!(core_by_intersection(&d8, &h).unwrap().is_trivial());
        let v = PermutationGroup::new(4, vec![perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(core(&d8, &v).unwrap().order(), BigUint::from(2u32));
    }

    #[test]
    fn maximality_in_d8() {
        let d8 = PermutationGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])]).unwrap();
        let h = PermutationGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert!(!is_maximal_subgroup(&d8, &h).unwrap());
        let c4 = PermutationGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(is_maximal_subgroup(&d8, &c4).unwrap());
    }

    #[test]
    fn trivial_double_coset() {
        let g = s4();
        let h = g.point_stabilizer(0).into_group();
        let dc = double_coset(&h, &g.identity(), &h).unwrap();
        assert_eq!(dc.len(), 6);
        let x = perm(4, &[&[0, 1]]);
        let dc = double_coset(&h, &x, &h).unwrap();
        assert_eq!(dc.len(), 18);
    }
}
