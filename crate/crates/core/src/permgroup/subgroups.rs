//! Small-subgroup enumeration, normalizers, centralizers, and wreath squares.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::cosets::coset_action;
use super::group::{Giant, PermutationGroup, SubgroupHandle};
use crate::autgraph::{automorphisms_of_adjacency, AutOptions};
use crate::error::{GraphError, GroupError};
use crate::perm::Permutation;

const COSET_SCAN_LIMIT: u64 = 10_000;
const ELEMENT_SCAN_LIMIT: u64 = 1_000_000;

/// All subgroups whose order divides `bound` (at most 16), built by
/// extending subgroups one element at a time. Deduplicated by element set;
/// the trivial subgroup comes first.
pub fn small_subgroups(g: &PermutationGroup, bound: u64) -> Result<Vec<SubgroupHandle>, GroupError> {
    if bound > 16 || bound == 0 {
        return Err(GroupError::OrderBound(bound));
    }
    let elems = g.elements()?;
    let index: HashMap<&Permutation, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let id = index[&g.identity()];
    let cands: Vec<u32> = (0..elems.len() as u32)
        .filter(|&i| i != id)
        .filter(|&i| elems[i as usize].order_u64().is_some_and(|o| bound.is_multiple_of(o)))
        .collect();
    let mul = |a: u32, b: u32| -> u32 { index[&elems[a as usize].compose(&elems[b as usize])] };

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let trivial = vec![id];
    seen.insert(trivial.clone());
    let mut out: Vec<(Vec<u32>, Vec<u32>)> = vec![(trivial.clone(), vec![])];
    let mut layer: Vec<(Vec<u32>, Vec<u32>)> = vec![(trivial, vec![])];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (set, gens) in &layer {
            for &x in &cands {
                if set.binary_search(&x).is_ok() {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(x);
                let Some(closure) = close_set(set, &new_gens, bound as usize, &mul) else {
                    continue;
                };
                if !(bound as usize).is_multiple_of(closure.len()) {
                    continue;
                }
                if seen.insert(closure.clone()) {
                    next.push((closure.clone(), new_gens.clone()));
                    out.push((closure, new_gens));
                }
            }
        }
        layer = next;
    }
    Ok(out
        .into_iter()
        .map(|(set, gens)| {
            let perms = gens.iter().map(|&i| elems[i as usize].clone()).collect();
            let sub = PermutationGroup::new(g.degree(), perms)
                .expect("degrees agree")
                .with_known_order(BigUint::from(set.len()));
            SubgroupHandle::trusted(g, sub)
        })
        .collect())
}

/// Closure of `start` under right multiplication by `gens`, or `None` once it
/// exceeds `limit` elements.
fn close_set<F: Fn(u32, u32) -> u32>(start: &[u32], gens: &[u32], limit: usize, mul: &F) -> Option<Vec<u32>> {
    let mut set: HashSet<u32> = start.iter().copied().collect();
    let mut queue: Vec<u32> = start.to_vec();
    while let Some(a) = queue.pop() {
        for &s in gens {
            let b = mul(a, s);
            if set.insert(b) {
                if set.len() > limit {
                    return None;
                }
                queue.push(b);
            }
        }
    }
    let mut v: Vec<u32> = set.into_iter().collect();
    v.sort_unstable();
    Some(v)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown by adjoining elements of `p`-power order that
/// normalize the current `p`-subgroup (such elements exist while it is not
/// Sylow).
pub fn sylow_subgroup(g: &PermutationGroup, p: u64) -> Result<PermutationGroup, GroupError> {
    let order = g.order();
    let big_p = BigUint::from(p);
    let mut target = BigUint::from(1u32);
    let mut rest = order.clone();
    while (&rest % &big_p).to_u64() == Some(0) {
        rest /= &big_p;
        target *= &big_p;
    }
    let mut s = PermutationGroup::trivial(g.degree()).with_known_order(BigUint::from(1u32));
    while s.order() < target {
        let mut next = None;
        g.for_each_element(|x| {
            let ok = x.order_u64().is_some_and(|o| o > 1 && is_power_of(o, p));
            if !ok || s.contains(x) || !normalizes(x, &s) {
                return true;
            }
            let t = s.extended(std::slice::from_ref(x));
            if t.order().to_u64().is_some_and(|o| is_power_of(o, p)) {
                next = Some(t);
                return false;
            }
            true
        });
        s = next.ok_or_else(|| GroupError::Unsupported("Sylow subgroup growth stalled".into()))?;
    }
    Ok(s)
}

/// All conjugates under `g` of the given subgroups, each class in
/// breadth-first order starting from its first member in `subgroups`.
pub fn conjugate_closure(
    g: &PermutationGroup,
    subgroups: &[PermutationGroup],
) -> Result<Vec<SubgroupHandle>, GroupError> {
    let key = |h: &PermutationGroup| -> Result<Vec<Permutation>, GroupError> {
        let mut e = h.elements()?;
        e.sort();
        Ok(e)
    };
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut out = Vec::new();
    for s in subgroups {
        if !seen.insert(key(s)?) {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([s.clone()]);
        while let Some(h) = queue.pop_front() {
            for x in g.generators() {
                let c = h.conjugate(x);
                if seen.insert(key(&c)?) {
                    queue.push_back(c);
                }
            }
            out.push(SubgroupHandle::trusted(g, h));
        }
    }
    Ok(out)
}

/// One representative per conjugacy class (under `g`) of the given subgroups,
/// keeping the first member of each class in input order.
pub fn class_representatives(
    g: &PermutationGroup,
    subgroups: &[SubgroupHandle],
) -> Result<Vec<SubgroupHandle>, GroupError> {
    let key = |h: &PermutationGroup| -> Result<Vec<Permutation>, GroupError> {
        let mut e = h.elements()?;
        e.sort();
        Ok(e)
    };
    let mut covered: HashSet<Vec<Permutation>> = HashSet::new();
    let mut out = Vec::new();
    for s in subgroups {
        let k = key(s.group())?;
        if covered.contains(&k) {
            continue;
        }
        let mut queue = vec![k.clone()];
        covered.insert(k);
        while let Some(set) = queue.pop() {
            for x in g.generators() {
                let mut c: Vec<Permutation> = set.iter().map(|e| e.conjugate_by(x)).collect();
                c.sort();
                if covered.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
        out.push(s.clone());
    }
    Ok(out)
}

fn normalizes(x: &Permutation, s: &PermutationGroup) -> bool {
    s.generators().iter().all(|a| s.contains(&a.conjugate_by(x)))
}

/// Normalizer of `s` in `g`, by coset scan, element scan, or (for full
/// alternating/symmetric `g`) via the normalizer in the symmetric group.
pub fn normalizer(g: &PermutationGroup, s: &PermutationGroup) -> Result<SubgroupHandle, GroupError> {
    if !s.is_subgroup_of(g) {
        return Err(GroupError::NotASubgroup);
    }
    let index = g.order() / s.order();
    if index.to_u64().is_some_and(|i| i <= COSET_SCAN_LIMIT) {
        let action = coset_action(g, s)?;
        let extra: Vec<Permutation> = action
            .representatives
            .iter()
            .filter(|r| normalizes(r, s))
            .cloned()
            .collect();
        return Ok(SubgroupHandle::trusted(g, grow(s, extra, |x, n| n.contains(x))));
    }
    if g.order_u64().is_some_and(|o| o <= ELEMENT_SCAN_LIMIT) {
        let mut n = s.clone();
        g.for_each_element(|x| {
            if !n.contains(x) && normalizes(x, s) {
                n = n.extended(std::slice::from_ref(x));
            }
            true
        });
        return Ok(SubgroupHandle::trusted(g, n));
    }
    if let Some(giant) = g.giant() {
        let giant = giant.clone();
        let ns = normalizer_in_sym(s)?;
        return Ok(SubgroupHandle::trusted(g, intersect_with_giant(&ns, &giant)));
    }
    Err(GroupError::ResourceExhausted(format!(
        "normalizer in a group of order {} with index {index}",
        g.order()
    )))
}

fn grow<F: Fn(&Permutation, &PermutationGroup) -> bool>(
    start: &PermutationGroup,
    extra: Vec<Permutation>,
    member: F,
) -> PermutationGroup {
    let mut n = start.clone();
    for x in extra {
        if !member(&x, &n) {
            n = n.extended(&[x]);
        }
    }
    n
}

/// Elements of `h` lying in the giant group: the pointwise stabilizer of the
/// complement of its support, cut down to even permutations when alternating.
pub(crate) fn intersect_with_giant(h: &PermutationGroup, giant: &Giant) -> PermutationGroup {
    let inside: HashSet<u32> = giant.support.iter().copied().collect();
    let outside: Vec<u32> = (0..h.degree() as u32).filter(|p| !inside.contains(p)).collect();
    let fixed = if outside.is_empty() {
        h.clone()
    } else {
        h.pointwise_stabilizer(&outside)
    };
    if giant.alternating {
        let even = fixed.even_part();
        // `even_part` only knows the halved order when the input order is cached.
        let order = fixed.order();
        if fixed.generators().iter().all(|x| x.is_even()) {
            fixed
        } else {
            even.with_known_order(order / BigUint::from(2u32))
        }
    } else {
        fixed
    }
}

pub fn centralizer(g: &PermutationGroup, x: &Permutation) -> Result<SubgroupHandle, GroupError> {
    if !g.contains(x) {
        return Err(GroupError::NotASubgroup);
    }
    let cyc = PermutationGroup::new(g.degree(), vec![x.clone()])?;
    let commutes = |y: &Permutation| x.conjugate_by(y) == *x;
    let index = g.order() / cyc.order();
    if index.to_u64().is_some_and(|i| i <= COSET_SCAN_LIMIT) {
        let action = coset_action(g, &cyc)?;
        let extra: Vec<Permutation> = action.representatives.iter().filter(|r| commutes(r)).cloned().collect();
        return Ok(SubgroupHandle::trusted(g, grow(&cyc, extra, |y, n| n.contains(y))));
    }
    if g.order_u64().is_some_and(|o| o <= ELEMENT_SCAN_LIMIT) {
        let mut n = cyc.clone();
        g.for_each_element(|y| {
            if !n.contains(y) && commutes(y) {
                n = n.extended(std::slice::from_ref(y));
            }
            true
        });
        return Ok(SubgroupHandle::trusted(g, n));
    }
    if let Some(giant) = g.giant() {
        let giant = giant.clone();
        let cs = centralizer_in_sym(x);
        return Ok(SubgroupHandle::trusted(g, intersect_with_giant(&cs, &giant)));
    }
    Err(GroupError::ResourceExhausted(format!(
        "centralizer in a group of order {}",
        g.order()
    )))
}

/// Centralizer of `x` in the full symmetric group: a direct product of
/// wreath products `Z_L wr S_k` over the cycle lengths of `x`.
pub fn centralizer_in_sym(x: &Permutation) -> PermutationGroup {
    let n = x.degree();
    let mut by_len: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
    let mut seen = vec![false; n];
    for s in 0..n as u32 {
        if seen[s as usize] {
            continue;
        }
        let mut c = Vec::new();
        let mut p = s;
        while !seen[p as usize] {
            seen[p as usize] = true;
            c.push(p);
            p = x.image(p);
        }
        by_len.entry(c.len()).or_default().push(c);
    }
    let mut order = BigUint::from(1u32);
    let mut gens = Vec::new();
    let mut lens: Vec<usize> = by_len.keys().copied().collect();
    lens.sort_unstable();
    for l in lens {
        let cycles = &by_len[&l];
        let k = cycles.len();
        order *= BigUint::from(l).pow(k as u32) * super::group::factorial(k);
        if l > 1 {
            gens.push(Permutation::from_cycles(n, &[cycles[0].clone()]).unwrap());
        }
        if k > 1 {
            // Swap the first two cycles pointwise, and rotate all k cycles.
            let mut img: Vec<u32> = (0..n as u32).collect();
            for i in 0..l {
                img[cycles[0][i] as usize] = cycles[1][i];
                img[cycles[1][i] as usize] = cycles[0][i];
            }
            gens.push(Permutation::from_images(img).unwrap());
            if k > 2 {
                let mut img: Vec<u32> = (0..n as u32).collect();
                for j in 0..k {
                    for i in 0..l {
                        img[cycles[j][i] as usize] = cycles[(j + 1) % k][i];
                    }
                }
                gens.push(Permutation::from_images(img).unwrap());
            }
        }
    }
    PermutationGroup::new(n, gens).unwrap().with_known_order(order)
}

/// Permutations of `0..degree` fixing each of `points` and permuting the
/// set `elements` under conjugation.
pub fn conjugation_stabilizer(
    degree: usize,
    elements: &[Permutation],
    points: &[u32],
) -> Result<PermutationGroup, GroupError> {
    let n = degree;
    let k = elements.len();
    if elements.iter().any(|e| e.degree() != n) {
        return Err(GroupError::DegreeMismatch);
    }
    let total = n + k + 2 * n * k;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); total];
    let mut colors = vec![0u32; total];
    for (j, &p) in points.iter().enumerate() {
        if p as usize >= n {
            return Err(GroupError::PointOutOfRange { point: p as usize, degree: n });
        }
        colors[p as usize] = 10 + j as u32;
    }
    for i in 0..k {
        colors[n + i] = 1;
    }
    for alpha in 0..n {
        for (si, e) in elements.iter().enumerate() {
            let t1 = n + k + 2 * (alpha * k + si);
            let t2 = t1 + 1;
            colors[t1] = 3;
            colors[t2] = 4;
            for (a, b) in [(t1, alpha), (t1, n + si), (t1, t2), (t2, e.image(alpha as u32) as usize)] {
                adj[a].push(b as u32);
                adj[b].push(a as u32);
            }
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let result = automorphisms_of_adjacency(
        &adj,
        &AutOptions {
            colors: Some(colors),
            seeds: Vec::new(),
            primary: Some(n),
            node_budget: None,
        },
    )
    .map_err(|e| GroupError::Unsupported(e.to_string()))?;
    Ok(result.group)
}

/// Normalizer of `s` in `Sym(n)`.
pub fn normalizer_in_sym(s: &PermutationGroup) -> Result<PermutationGroup, GroupError> {
    normalizer_in_sym_fixing(s, &[])
}

/// Elements of `N_{Sym(n)}(s)` that also centralize each of `fixed`
/// (which must lie in `s`).
///
/// Computed as the automorphism group of a coloured graph on the points,
/// the elements of `s`, and two gadget vertices per (point, element) pair
/// encoding `point -> point^element`; automorphisms restricted to the points
/// are exactly the permutations conjugating `s` onto itself.
pub fn normalizer_in_sym_fixing(s: &PermutationGroup, fixed: &[Permutation]) -> Result<PermutationGroup, GroupError> {
    let n = s.degree();
    if n > 256 {
        return Err(GroupError::Unsupported(format!("degree {n} above 256")));
    }
    if fixed.is_empty() {
        if s.is_trivial() {
            return Ok(PermutationGroup::symmetric(n));
        }
        if let Some(gi) = s.giant() {
            let inside: HashSet<u32> = gi.support.iter().copied().collect();
            let outside: Vec<u32> = (0..n as u32).filter(|p| !inside.contains(p)).collect();
            let a = Giant {
                support: gi.support.clone(),
                alternating: false,
            };
            let mut gens = a.generators(n);
            gens.extend(Giant { support: outside.clone(), alternating: false }.generators(n));
            let order = a.order() * super::group::factorial(outside.len());
            return Ok(PermutationGroup::new(n, gens)?.with_known_order(order));
        }
    }
    if fixed.iter().any(|f| !s.contains(f)) {
        return Err(GroupError::NotASubgroup);
    }
    let order = s.order().to_u64().filter(|&o| o * n as u64 <= 4_000_000).ok_or_else(|| {
        GroupError::ResourceExhausted(format!("normalizer gadget for a group of order {}", s.order()))
    })?;
    let elems = s.elements()?;
    let k = order as usize;
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let total = n + k + 2 * n * k;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); total];
    let mut colors = vec![0u32; total];
    let id = index[&s.identity()];
    for (i, _) in elems.iter().enumerate() {
        colors[n + i] = if i == id { 2 } else { 1 };
    }
    for (j, f) in fixed.iter().enumerate() {
        colors[n + index[f]] = 10 + j as u32;
    }
    let add = |a: usize, b: usize, adj: &mut Vec<Vec<u32>>| {
        adj[a].push(b as u32);
        adj[b].push(a as u32);
    };
    for alpha in 0..n {
        for (si, e) in elems.iter().enumerate() {
            let t1 = n + k + 2 * (alpha * k + si);
            let t2 = t1 + 1;
            colors[t1] = 3;
            colors[t2] = 4;
            add(t1, alpha, &mut adj);
            add(t1, n + si, &mut adj);
            add(t1, t2, &mut adj);
            add(t2, e.image(alpha as u32) as usize, &mut adj);
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    // Generators of `s` that fix the extra colours act as known automorphisms.
    let seeds: Vec<Permutation> = s
        .generators()
        .iter()
        .filter(|g| fixed.iter().all(|f| f.conjugate_by(g) == *f))
        .map(|g| {
            let mut img = vec![0u32; total];
            for alpha in 0..n {
                img[alpha] = g.image(alpha as u32);
            }
            let sigma: Vec<usize> = elems.iter().map(|e| index[&e.conjugate_by(g)]).collect();
            for si in 0..k {
                img[n + si] = (n + sigma[si]) as u32;
            }
            for alpha in 0..n {
                for si in 0..k {
                    let t1 = n + k + 2 * (alpha * k + si);
                    let u1 = n + k + 2 * (g.image(alpha as u32) as usize * k + sigma[si]);
                    img[t1] = u1 as u32;
                    img[t1 + 1] = (u1 + 1) as u32;
                }
            }
            Permutation::from_images(img).expect("conjugation induces a bijection")
        })
        .collect();
    let result = automorphisms_of_adjacency(
        &adj,
        &AutOptions {
            colors: Some(colors),
            seeds,
            primary: Some(n),
            node_budget: None,
        },
    )
    .map_err(|e| match e {
        GraphError::Budget(m) => GroupError::ResourceExhausted(m),
        other => GroupError::Unsupported(other.to_string()),
    })?;
    Ok(result.group)
}

/// `P wr Sym(2)` acting imprimitively on two copies of `P`'s points.
#[derive(Clone, Debug)]
pub struct WreathSquare {
    pub group: PermutationGroup,
    pub swap: Permutation,
    degree: usize,
}

impl WreathSquare {
    pub fn embed1(&self, p: &Permutation) -> Permutation {
        p.extend_to(2 * self.degree)
    }

    pub fn embed2(&self, p: &Permutation) -> Permutation {
        p.shifted(self.degree, 2 * self.degree)
    }

    /// `(p, q)` acting on both copies.
    pub fn pair(&self, p: &Permutation, q: &Permutation) -> Permutation {
        self.embed1(p).compose(&self.embed2(q))
    }
}

pub fn wreath_square(p: &PermutationGroup) -> WreathSquare {
    let d = p.degree();
    let mut img: Vec<u32> = (0..2 * d as u32).collect();
    for i in 0..d {
        img[i] = (i + d) as u32;
        img[i + d] = i as u32;
    }
    let swap = Permutation::from_images(img).unwrap();
    let mut gens: Vec<Permutation> = Vec::new();
    for g in p.generators() {
        gens.push(g.extend_to(2 * d));
        gens.push(g.shifted(d, 2 * d));
    }
    gens.push(swap.clone());
    let po = p.order();
    let order = &po * &po * BigUint::from(2u32);
    WreathSquare {
        group: PermutationGroup::new(2 * d, gens).unwrap().with_known_order(order),
        swap,
        degree: d,
    }
}
