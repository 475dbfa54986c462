//! Random instance generators and brute-force oracles shared by the property
//! suites and the acceptance target.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use hatlab_core::altcycles::{alternating_cycle_system, hat_orientation, AltCycleSystem, HatOrientation};
use hatlab_core::autgraph::{automorphism_group_with, AutOptions};
use hatlab_core::graphcore::{cayley_graph, coset_graph, Graph, VertexAction};
use hatlab_core::permgroup::is_maximal_subgroup;
use hatlab_core::symmetry::{local_normality_identities, transitivity_report};
use hatlab_core::{Permutation, PermutationGroup, SubgroupHandle};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A random cycle on `len` distinct points of `0..n`.
pub fn random_cycle<R: Rng>(rng: &mut R, n: usize, len: usize) -> Permutation {
    let mut pts: Vec<u32> = (0..n as u32).collect();
    pts.shuffle(rng);
    pts.truncate(len);
    Permutation::from_cycles(n, &[pts]).unwrap()
}

/// All elements generated by `gens`, by breadth-first multiplication, or
/// `None` once more than `limit` are found.
pub fn closure(degree: usize, gens: &[Permutation], limit: usize) -> Option<HashSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let p = e.compose(g);
            if seen.insert(p.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(p);
            }
        }
    }
    Some(seen)
}

/// Generators of a random group of order at most `max_order`, with its
/// element set.
pub fn random_small_group<R: Rng>(rng: &mut R, max_order: usize) -> (usize, Vec<Permutation>, HashSet<Permutation>) {
    loop {
        let n = rng.gen_range(2..=10);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Permutation> = (0..k)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    random_perm(rng, n)
                } else {
                    let len = rng.gen_range(2..=n.min(5));
                    random_cycle(rng, n, len)
                }
            })
            .collect();
        if let Some(elems) = closure(n, &gens, max_order) {
            return (n, gens, elems);
        }
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Counts vertex permutations preserving adjacency by enumerating all of them.
pub fn brute_force_aut_order(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let adj: Vec<u32> = (0..n as u32)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    let preserves = |p: &[usize]| {
        (0..n).all(|u| {
            let mapped = (0..n).filter(|&v| adj[u] >> v & 1 == 1).fold(0u32, |m, v| m | (1 << p[v]));
            mapped == adj[p[u]]
        })
    };
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    if preserves(&perm) {
        count += 1;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if preserves(&perm) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// `G = <x, y>` inside `A x A` with `x = (a, b)`, `y = (b, a)`, the
/// coordinate swap `sigma`, and `X = G ⋊ <sigma>`.
pub struct SwapInstance {
    pub g: PermutationGroup,
    pub s: Vec<Permutation>,
    pub sigma: Permutation,
    pub x_group: PermutationGroup,
}

/// A random [`SwapInstance`] with `|G| <= max_order`, `x` of order above 2,
/// `x, y, x^-1, y^-1` distinct and `sigma` outside `G`.
pub fn random_swap_instance<R: Rng>(rng: &mut R, max_order: usize) -> SwapInstance {
    loop {
        let (d, gens, _) = random_small_group(rng, 60);
        let elems: Vec<Permutation> = closure(d, &gens, 60).unwrap().into_iter().collect();
        let mut elems = elems;
        elems.sort();
        let a = elems.choose(rng).unwrap().clone();
        let b = elems.choose(rng).unwrap().clone();
        let pair = |p: &Permutation, q: &Permutation| {
            let mut images: Vec<u32> = p.images().to_vec();
            images.extend(q.images().iter().map(|&i| i + d as u32));
            Permutation::from_images(images).unwrap()
        };
        let x = pair(&a, &b);
        let y = pair(&b, &a);
        let s: BTreeSet<Permutation> = [x.clone(), x.inverse(), y.clone(), y.inverse()].into_iter().collect();
        if s.len() != 4 {
            continue;
        }
        let sigma = Permutation::from_images((0..2 * d as u32).map(|i| (i + d as u32) % (2 * d as u32)).collect()).unwrap();
        let g = PermutationGroup::new(2 * d, vec![x.clone(), y.clone()]).unwrap();
        if g.order() > num_bigint::BigUint::from(max_order) || g.contains(&sigma) {
            continue;
        }
        let x_group = g.extended(std::slice::from_ref(&sigma));
        return SwapInstance {
            g,
            s: s.into_iter().collect(),
            sigma,
            x_group,
        };
    }
}

/// `Cos(X, <sigma>, <sigma> S <sigma>)` with the action of `X`.
pub fn swap_coset_graph(inst: &SwapInstance) -> hatlab_core::graphcore::CosetGraph {
    let y = SubgroupHandle::new(&inst.x_group, vec![inst.sigma.clone()]).unwrap();
    let mut d: BTreeSet<Permutation> = BTreeSet::new();
    for s in &inst.s {
        d.insert(s.clone());
        d.insert(inst.sigma.compose(s));
        d.insert(s.compose(&inst.sigma));
        d.insert(inst.sigma.compose(s).compose(&inst.sigma));
    }
    let d: Vec<Permutation> = d.into_iter().collect();
    coset_graph(&inst.x_group, &y, &d).unwrap()
}

/// `Cay(G, S)` and the coset graph of the same instance are isomorphic.
pub fn swap_cayley_matches_coset(inst: &SwapInstance) -> bool {
    let cay = cayley_graph(&inst.g, &inst.s).unwrap();
    let cos = swap_coset_graph(inst);
    hatlab_core::autgraph::is_isomorphic(&cay.graph, &cos.graph).unwrap().is_some()
}

/// `Cay(G, S)` against `Cos(G, 1, S)` for a random inverse-closed `S`; the
/// vertex numbering differs between the two constructions.
pub fn trivial_coset_matches_cayley<R: Rng>(rng: &mut R, max_order: usize) -> bool {
    let (n, gens, elems) = random_small_group(rng, max_order);
    let mut elems: Vec<Permutation> = elems.into_iter().filter(|e| !e.is_identity()).collect();
    if elems.is_empty() {
        return true;
    }
    elems.sort();
    elems.shuffle(rng);
    let take = rng.gen_range(1..=elems.len().min(4));
    let mut s: BTreeSet<Permutation> = BTreeSet::new();
    for e in elems.into_iter().take(take) {
        s.insert(e.inverse());
        s.insert(e);
    }
    let s: Vec<Permutation> = s.into_iter().collect();
    let g = PermutationGroup::new(n, gens).unwrap();
    let cay = cayley_graph(&g, &s).unwrap();
    let order = g.order().to_usize().unwrap();
    if cay.graph.edge_count() != order * s.len() / 2 {
        return false;
    }
    // The coset graph needs `S` to generate, so compare on `<S>`.
    let gen_by_s = PermutationGroup::new(n, s.clone()).unwrap();
    let cay_sub = cayley_graph(&gen_by_s, &s).unwrap();
    let trivial = SubgroupHandle::new(&gen_by_s, vec![]).unwrap();
    let cos = coset_graph(&gen_by_s, &trivial, &s).unwrap();
    hatlab_core::autgraph::is_isomorphic(&cay_sub.graph, &cos.graph).unwrap().is_some()
}

/// Alternating cycles traced directly from the orientation, as vertex sets.
pub fn traced_alternating_cycles(o: &HatOrientation) -> BTreeSet<Vec<u32>> {
    let d = &o.plus;
    let mut out = BTreeSet::new();
    for start in 0..d.vertex_count() as u32 {
        for &first in d.out_neighbors(start) {
            // `forward` records whether `cur` was entered along an arc into it.
            let mut verts = vec![start];
            let (mut prev, mut cur, mut forward) = (start, first, true);
            while !(cur == start && !forward) {
                verts.push(cur);
                let other = |list: &[u32]| *list.iter().find(|&&w| w != prev).unwrap();
                let next = if forward { other(d.in_neighbors(cur)) } else { other(d.out_neighbors(cur)) };
                prev = cur;
                cur = next;
                forward = !forward;
            }
            verts.sort_unstable();
            verts.dedup();
            out.insert(verts);
        }
    }
    out
}

/// Violations of equal cycle length and constant pairwise intersection
/// size, checked against cycles traced independently of the library.
pub fn constancy_violations(o: &HatOrientation, system: &AltCycleSystem) -> usize {
    let traced = traced_alternating_cycles(o);
    let mut violations = 0;
    let listed: BTreeSet<Vec<u32>> = system
        .cycles
        .iter()
        .map(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v
        })
        .collect();
    if listed != traced {
        violations += 1;
    }
    let lengths: BTreeSet<usize> = traced.iter().map(|c| c.len()).collect();
    if lengths.len() != 1 || lengths.first() != Some(&(2 * system.radius)) {
        violations += 1;
    }
    let cycles: Vec<&Vec<u32>> = traced.iter().collect();
    let mut meets = BTreeSet::new();
    for i in 0..cycles.len() {
        let a: HashSet<u32> = cycles[i].iter().copied().collect();
        for c in &cycles[i + 1..] {
            let k = c.iter().filter(|v| a.contains(v)).count();
            if k > 0 {
                meets.insert(k);
            }
        }
    }
    if meets.len() > 1 || meets.first().is_some_and(|&k| k != system.attachment) {
        violations += 1;
    }
    violations
}

/// HAT action of `X` on a random swap instance's coset graph, with its
/// constancy violations.
pub fn swap_hat_violations(inst: &SwapInstance) -> Result<usize, String> {
    let cos = swap_coset_graph(inst);
    let o = hat_orientation(&cos.action).map_err(|e| e.to_string())?;
    let system = alternating_cycle_system(&o).map_err(|e| e.to_string())?;
    Ok(constancy_violations(&o, &system))
}

/// Outcome of the index identity on one pair.
pub enum IndexIdentity {
    NotApplicable,
    Holds,
    Fails,
}

/// Checks `|H : M| = |H_u : M_u|` for `H = Aut(Gamma)` and `M = X` when `H`
/// is arc-transitive, `M` is maximal in `H`, and `M`'s local action is normal.
pub fn swap_index_identity(inst: &SwapInstance) -> IndexIdentity {
    let cos = swap_coset_graph(inst);
    let m = cos.action.group().clone();
    let aut = automorphism_group_with(
        &cos.graph,
        &AutOptions {
            seeds: m.generators().to_vec(),
            ..Default::default()
        },
    )
    .unwrap()
    .group;
    let h_action = VertexAction::new(aut.clone(), cos.graph.clone()).unwrap();
    let rep = transitivity_report(&h_action, 1).unwrap();
    if !rep.arc_transitive || aut.order() == m.order() || !is_maximal_subgroup(&aut, &m).unwrap() {
        return IndexIdentity::NotApplicable;
    }
    match local_normality_identities(&h_action, &m, 0).unwrap() {
        None => IndexIdentity::NotApplicable,
        Some(r) if r.index_identity => IndexIdentity::Holds,
        Some(_) => IndexIdentity::Fails,
    }
}
