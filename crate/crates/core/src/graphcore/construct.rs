//! Coset graphs, Cayley graphs, quotients and a few named families.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::graph::Graph;
use crate::error::GraphError;
use crate::perm::Permutation;
use crate::permgroup::{coset_action, double_coset, PermutationGroup, SubgroupHandle};

/// A group acting on the vertices of a graph by automorphisms.
#[derive(Clone, Debug)]
pub struct VertexAction {
    group: PermutationGroup,
    graph: Graph,
}

impl VertexAction {
    /// Checks that every generator is an automorphism.
    pub fn new(group: PermutationGroup, graph: Graph) -> Result<Self, GraphError> {
        if group.degree() != graph.vertex_count() {
            return Err(GraphError::Precondition(format!(
                "group degree {} differs from vertex count {}",
                group.degree(),
                graph.vertex_count()
            )));
        }
        if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
            return Err(GraphError::NotAnAutomorphism);
        }
        Ok(VertexAction { group, graph })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The same graph acted on by a subgroup.
    pub fn restricted(&self, sub: &PermutationGroup) -> Result<VertexAction, GraphError> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(GraphError::Precondition("not a subgroup of the acting group".into()));
        }
        Ok(VertexAction {
            group: sub.clone(),
            graph: self.graph.clone(),
        })
    }
}

/// Coset graph `Cos(G, H, D)` together with the action of `G`.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    pub action: VertexAction,
    /// `representatives[i]` lies in the coset numbered `i`; vertex 0 is `H`.
    pub representatives: Vec<Permutation>,
}

/// Builds `Cos(G, H, D)`: right cosets of `H`, with `Hx ~ Hy` iff `yx⁻¹ ∈ D`.
pub fn coset_graph(
    g: &PermutationGroup,
    h: &SubgroupHandle,
    d: &[Permutation],
) -> Result<CosetGraph, GraphError> {
    let hg = h.group();
    let dset: HashSet<&Permutation> = d.iter().collect();
    if d.iter().any(|x| !dset.contains(&x.inverse())) {
        return Err(GraphError::NotInverseClosed);
    }
    if d.iter().any(|x| hg.contains(x)) {
        return Err(GraphError::IdentityInConnectionSet);
    }
    for x in d {
        for s in hg.generators() {
            if !dset.contains(&s.compose(x)) || !dset.contains(&x.compose(s)) {
                return Err(GraphError::NotDoubleCosetUnion);
            }
        }
    }
    let generated = hg.extended(d);
    if generated.order() != g.order() {
        return Err(GraphError::GenerationFailure);
    }
    let action = coset_action(g, hg)?;
    // One representative per right coset `Hd` inside `D`.
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for x in d {
        let c = action.coset_of(x).expect("D lies in G");
        if seen.insert(c) {
            reps.push(x.clone());
        }
    }
    let n = action.degree();
    let mut edges = Vec::with_capacity(n * reps.len() / 2);
    for (i, r) in action.representatives.iter().enumerate() {
        for x in &reps {
            let j = action.coset_of(&x.compose(r)).expect("closed under G");
            if (i as u32) < j {
                edges.push((i as u32, j));
            }
        }
    }
    let graph = Graph::from_edges_lossy(n, edges);
    let vaction = VertexAction::new(action.image.clone(), graph.clone())?;
    Ok(CosetGraph {
        graph,
        action: vaction,
        representatives: action.representatives,
    })
}

/// `Cos(G, H, H{x, x⁻¹}H)`.
pub fn coset_graph_of_element(
    g: &PermutationGroup,
    h: &SubgroupHandle,
    x: &Permutation,
) -> Result<CosetGraph, GraphError> {
    let mut d = double_coset(h.group(), x, h.group())?;
    let xi = x.inverse();
    if !d.contains(&xi) {
        d.extend(double_coset(h.group(), &xi, h.group())?);
    }
    coset_graph(g, h, &d)
}

/// `Cay(G, S)` with vertices indexed through the right-regular action.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: Graph,
    /// The right-regular action of `G` on the vertices.
    pub action: VertexAction,
    pub connected: bool,
}

/// Builds `Cay(G, S)` with edges `{g, sg}`. When `G` already acts regularly,
/// vertex `v` is the element mapping point 0 to `v`; otherwise the regular
/// representation is built first, with vertex 0 the identity.
pub fn cayley_graph(g: &PermutationGroup, s: &[Permutation]) -> Result<CayleyGraph, GraphError> {
    if s.iter().any(|x| x.is_identity()) {
        return Err(GraphError::IdentityInConnectionSet);
    }
    let sset: HashSet<&Permutation> = s.iter().collect();
    if s.iter().any(|x| !sset.contains(&x.inverse())) {
        return Err(GraphError::NotInverseClosed);
    }
    if s.iter().any(|x| !g.contains(x)) {
        return Err(GraphError::Precondition("connection set is not contained in the group".into()));
    }
    let regular = g.transitivity_profile(g.degree()).regular;
    let (rg, points): (PermutationGroup, Vec<u32>) = if regular {
        (g.clone(), s.iter().map(|x| x.image(0)).collect())
    } else {
        let (rg, index) = regular_copy(g)?;
        let pts = s.iter().map(|x| index[x]).collect();
        (rg, pts)
    };
    let n = rg.degree();
    // images[v] = images of the points of S under the element g_v.
    let k = points.len();
    let mut images = vec![u32::MAX; n * k];
    images[..k].copy_from_slice(&points);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(u) = queue.pop_front() {
        for x in rg.generators() {
            let v = x.image(u);
            if !seen[v as usize] {
                seen[v as usize] = true;
                for j in 0..k {
                    images[v as usize * k + j] = x.image(images[u as usize * k + j]);
                }
                queue.push_back(v);
            }
        }
    }
    let edges = (0..n as u32).flat_map(|v| {
        let row = &images[v as usize * k..(v as usize + 1) * k];
        row.iter().map(move |&w| (v, w)).collect::<Vec<_>>()
    });
    let graph = Graph::from_edges_lossy(n, edges);
    let connected = graph.is_connected();
    let action = VertexAction::new(rg, graph.clone())?;
    Ok(CayleyGraph {
        graph,
        action,
        connected,
    })
}

/// Right-regular copy of `G` with point 0 the identity, and the point of each
/// element.
fn regular_copy(g: &PermutationGroup) -> Result<(PermutationGroup, HashMap<Permutation, u32>), GraphError> {
    let order = g.order();
    let n = order
        .to_usize()
        .filter(|&n| n <= 2_000_000)
        .ok_or_else(|| GraphError::Budget(format!("group of order {order} is too large to enumerate")))?;
    let mut elems = vec![g.identity()];
    let mut index: HashMap<Permutation, u32> = HashMap::from([(g.identity(), 0)]);
    let gens = g.generators();
    let mut acts: Vec<Vec<u32>> = vec![Vec::with_capacity(n); gens.len()];
    let mut i = 0;
    while i < elems.len() {
        for (gi, s) in gens.iter().enumerate() {
            let y = elems[i].compose(s);
            let next = elems.len() as u32;
            let j = *index.entry(y.clone()).or_insert(next);
            if j == next {
                elems.push(y);
            }
            acts[gi].push(j);
        }
        i += 1;
    }
    let rgens = acts.into_iter().map(Permutation::from_images_unchecked).collect();
    let rg = PermutationGroup::new(n, rgens)?.with_known_order(BigUint::from(n));
    Ok((rg, index))
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    Cycle,
    /// `K_{n,n}` minus the perfect matching `i ~ n+i`.
    CompleteBipartiteMinusMatching,
}

pub fn special_graph(kind: SpecialKind, n: usize) -> Result<Graph, GraphError> {
    match kind {
        SpecialKind::Cycle => {
            if n < 3 {
                return Err(GraphError::TooSmall(n));
            }
            let edges: Vec<(u32, u32)> = (0..n as u32)
                .map(|i| {
                    let j = (i + 1) % n as u32;
                    (i.min(j), i.max(j))
                })
                .collect();
            Graph::new(n, &edges)
        }
        SpecialKind::CompleteBipartiteMinusMatching => {
            if n < 2 {
                return Err(GraphError::TooSmall(n));
            }
            let mut edges = Vec::new();
            for i in 0..n as u32 {
                for j in 0..n as u32 {
                    if i != j {
                        edges.push((i, n as u32 + j));
                    }
                }
            }
            Graph::new(2 * n, &edges)
        }
    }
}

/// The normal quotient `Γ_N`.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub quotient: Graph,
    /// `orbit_of[v]` is the quotient vertex containing `v`.
    pub orbit_of: Vec<u32>,
    pub orbits: Vec<Vec<u32>>,
    pub is_cover: bool,
    /// Number of orbits.
    pub r: usize,
}

pub fn quotient_graph(action: &VertexAction, n: &PermutationGroup) -> Result<QuotientGraph, GraphError> {
    let graph = action.graph();
    if n.degree() != graph.vertex_count() {
        return Err(GraphError::Precondition("subgroup degree differs from vertex count".into()));
    }
    let mut orbits = n.orbits();
    orbits.sort_by_key(|o| o[0]);
    if orbits.len() <= 1 {
        return Err(GraphError::DegenerateQuotient);
    }
    let mut orbit_of = vec![0u32; graph.vertex_count()];
    for (i, o) in orbits.iter().enumerate() {
        for &v in o {
            orbit_of[v as usize] = i as u32;
        }
    }
    let edges = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (orbit_of[u as usize], orbit_of[v as usize]));
    let quotient = Graph::from_edges_lossy(orbits.len(), edges);
    let is_cover = match (quotient.valency(), graph.valency()) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    Ok(QuotientGraph {
        r: orbits.len(),
        quotient,
        orbit_of,
        orbits,
        is_cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[u32]) -> Permutation {
        Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn cycle_as_coset_and_cayley_graph() {
        let g = PermutationGroup::cyclic(5);
        let x = g.generators()[0].clone();
        let h = SubgroupHandle::new(&g, vec![]).unwrap();
        let cg = coset_graph(&g, &h, &[x.clone(), x.inverse()]).unwrap();
        assert_eq!(cg.graph.vertex_count(), 5);
        assert_eq!(cg.graph.valency(), Some(2));
        assert!(cg.graph.is_connected());
        let cay = cayley_graph(&g, &[x.clone(), x.inverse()]).unwrap();
        assert_eq!(cay.graph.edge_count(), 5);
        assert!(cay.connected);
    }

    #[test]
    fn coset_graph_rejects_bad_sets() {
        let g = PermutationGroup::cyclic(5);
        let x = g.generators()[0].clone();
        let h = SubgroupHandle::new(&g, vec![]).unwrap();
        assert!(matches!(coset_graph(&g, &h, std::slice::from_ref(&x)), Err(GraphError::NotInverseClosed)));
        let s3 = PermutationGroup::symmetric(3);
        let t = cyc(3, &[0, 1]);
        let h = SubgroupHandle::new(&s3, vec![t.clone()]).unwrap();
        let u = cyc(3, &[1, 2]);
        assert!(matches!(coset_graph(&s3, &h, &[u]), Err(GraphError::NotDoubleCosetUnion)));
        let g6 = PermutationGroup::cyclic(6);
        let x2 = g6.generators()[0].pow(2);
        let triv = SubgroupHandle::new(&g6, vec![]).unwrap();
        assert!(matches!(
            coset_graph(&g6, &triv, &[x2.clone(), x2.inverse()]),
            Err(GraphError::GenerationFailure)
        ));
    }

    #[test]
    fn cayley_of_non_regular_group() {
        let s3 = PermutationGroup::symmetric(3);
        let s = vec![cyc(3, &[0, 1]), cyc(3, &[1, 2])];
        let cay = cayley_graph(&s3, &s).unwrap();
        assert_eq!(cay.graph.vertex_count(), 6);
        assert_eq!(cay.graph.valency(), Some(2));
        assert!(cay.connected);
    }

    #[test]
    fn special_families() {
        let c3 = special_graph(SpecialKind::Cycle, 3).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let k = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 5).unwrap();
        assert_eq!(k.vertex_count(), 10);
        assert_eq!(k.valency(), Some(4));
        assert!(k.bipartition().is_some());
        let k2 = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 2).unwrap();
        assert_eq!(k2.edge_count(), 2);
        assert!(!k2.is_connected());
        assert!(special_graph(SpecialKind::Cycle, 2).is_err());
    }

    #[test]
    fn quotients() {
        let g = PermutationGroup::cyclic(6);
        let x = g.generators()[0].clone();
        let cay = cayley_graph(&g, &[x.clone(), x.inverse()]).unwrap();
        let triv = PermutationGroup::trivial(6);
        let q = quotient_graph(&cay.action, &triv).unwrap();
        assert!(q.is_cover);
        assert_eq!(q.r, 6);
        let sub = PermutationGroup::new(6, vec![x.pow(3)]).unwrap();
        let q = quotient_graph(&cay.action, &sub).unwrap();
        assert_eq!(q.r, 3);
        assert!(q.is_cover);
        assert_eq!(q.quotient.edge_count(), 3);
        assert!(matches!(quotient_graph(&cay.action, &g), Err(GraphError::DegenerateQuotient)));
    }
}
