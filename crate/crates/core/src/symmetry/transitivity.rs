//! Arc orbits, s-arc transitivity and local actions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::GraphError;
use crate::graphcore::{Graph, VertexAction};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// Index of each arc `(u, v)` as `offset[u] + position of v in adj[u]`.
pub(crate) struct ArcIndex {
    offset: Vec<usize>,
}

impl ArcIndex {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut offset = Vec::with_capacity(g.vertex_count() + 1);
        let mut acc = 0;
        for list in g.adjacency() {
            offset.push(acc);
            acc += list.len();
        }
        offset.push(acc);
        ArcIndex { offset }
    }

    pub(crate) fn id(&self, g: &Graph, u: u32, v: u32) -> usize {
        let pos = g.neighbors(u).binary_search(&v).expect("arc exists");
        self.offset[u as usize] + pos
    }
}

/// Orbit number of every arc, numbered by first appearance in arc order.
pub(crate) fn arc_orbit_labels(g: &Graph, gens: &[Permutation]) -> (Vec<u32>, usize) {
    let idx = ArcIndex::new(g);
    let arcs = g.arcs();
    let mut parent: Vec<usize> = (0..arcs.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for s in gens {
        for (i, &(u, v)) in arcs.iter().enumerate() {
            let j = idx.id(g, s.image(u), s.image(v));
            let a = find(&mut parent, i);
            let b = find(&mut parent, j);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut label = vec![u32::MAX; arcs.len()];
    let mut root_label = vec![u32::MAX; arcs.len()];
    let mut count = 0u32;
    for i in 0..arcs.len() {
        let r = find(&mut parent, i);
        if root_label[r] == u32::MAX {
            root_label[r] = count;
            count += 1;
        }
        label[i] = root_label[r];
    }
    (label, count as usize)
}

/// Orbits of the acting group on arcs, each sorted, ordered by first arc.
pub fn arc_orbits(action: &VertexAction) -> Vec<Vec<(u32, u32)>> {
    let g = action.graph();
    let (label, count) = arc_orbit_labels(g, action.group().generators());
    let mut out = vec![Vec::new(); count];
    for (i, arc) in g.arcs().into_iter().enumerate() {
        out[label[i] as usize].push(arc);
    }
    out
}

/// Largest `s` with the action transitive on `s`-arcs, or `½` for
/// half-arc-transitive actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SDegree {
    Intransitive,
    Half,
    Exactly(u32),
    /// Transitive on `s`-arcs for every `s` up to the cap that was checked.
    AtLeast(u32),
}

impl SDegree {
    /// The integer `s` for arc-transitive actions.
    pub fn arc_level(&self) -> Option<u32> {
        match self {
            SDegree::Exactly(s) | SDegree::AtLeast(s) => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for SDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SDegree::Intransitive => write!(f, "intransitive"),
            SDegree::Half => write!(f, "1/2"),
            SDegree::Exactly(s) => write!(f, "{s}"),
            SDegree::AtLeast(s) => write!(f, ">={s}"),
        }
    }
}

impl Serialize for SDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TransitivityReport {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub arc_orbit_count: usize,
    pub s_degree: SDegree,
}

impl TransitivityReport {
    pub fn is_half_arc_transitive(&self) -> bool {
        self.vertex_transitive && self.edge_transitive && !self.arc_transitive
    }
}

pub fn transitivity_report(action: &VertexAction, max_s: u32) -> Result<TransitivityReport, GraphError> {
    let g = action.graph();
    let group = action.group();
    let n = g.vertex_count();
    let vertex_transitive = n <= 1 || group.orbit_points(0).len() == n;
    let (label, count) = arc_orbit_labels(g, group.generators());
    let arc_transitive = count == 1 && g.edge_count() > 0;
    let edge_transitive = arc_transitive || (count == 2 && {
        let idx = ArcIndex::new(g);
        g.arcs()
            .iter()
            .enumerate()
            .all(|(i, &(u, v))| label[i] != label[idx.id(g, v, u)])
    });
    let s_degree = if !vertex_transitive {
        SDegree::Intransitive
    } else if !edge_transitive {
        SDegree::Exactly(0)
    } else if !arc_transitive {
        SDegree::Half
    } else {
        s_arc_level(g, group, max_s)?
    };
    Ok(TransitivityReport {
        vertex_transitive,
        edge_transitive,
        arc_transitive,
        arc_orbit_count: count,
        s_degree,
    })
}

/// For an arc-transitive action on a regular graph: the action is transitive
/// on `s`-arcs iff the orbit of one `s`-arc, `|G : G_(u0..us)|`, has the size
/// `n·k·(k-1)^(s-1)` of the whole `s`-arc set.
fn s_arc_level(g: &Graph, group: &PermutationGroup, max_s: u32) -> Result<SDegree, GraphError> {
    let k = g
        .valency()
        .ok_or_else(|| GraphError::Precondition("graph is not regular".into()))?;
    if k < 2 {
        return Ok(SDegree::AtLeast(1));
    }
    let order = group.order();
    let mut path = vec![0u32, g.neighbors(0)[0]];
    let mut count = BigUint::from(g.vertex_count()) * BigUint::from(k);
    for s in 2..=max_s {
        let last = path[path.len() - 1];
        let prev = path[path.len() - 2];
        let next = *g
            .neighbors(last)
            .iter()
            .find(|&&w| w != prev)
            .expect("valency at least 2");
        path.push(next);
        count *= BigUint::from(k - 1);
        let mut pts = path.clone();
        pts.sort_unstable();
        pts.dedup();
        let stab = group.pointwise_stabilizer(&pts);
        if &order / stab.order() != count {
            return Ok(SDegree::Exactly(s - 1));
        }
    }
    Ok(SDegree::AtLeast(max_s))
}

/// `G_v` acting on the neighbourhood of `v`.
#[derive(Clone, Debug)]
pub struct LocalAction {
    pub vertex: u32,
    /// Neighbours of `v`; point `i` of `induced` is `neighbors[i]`.
    pub neighbors: Vec<u32>,
    pub induced: PermutationGroup,
    pub stabilizer_order: BigUint,
    pub kernel_order: BigUint,
}

pub fn local_action(action: &VertexAction, v: u32) -> Result<LocalAction, GraphError> {
    let g = action.graph();
    if v as usize >= g.vertex_count() {
        return Err(GraphError::Precondition(format!("vertex {v} out of range")));
    }
    let stab = action.group().point_stabilizer(v).into_group();
    let neighbors = g.neighbors(v).to_vec();
    let induced = stab.restricted_to(&neighbors)?;
    let stabilizer_order = stab.order();
    let induced_order = induced.order();
    let kernel_order = if induced_order.is_one() {
        stabilizer_order.clone()
    } else {
        &stabilizer_order / &induced_order
    };
    Ok(LocalAction {
        vertex: v,
        neighbors,
        induced,
        stabilizer_order,
        kernel_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{special_graph, SpecialKind};

    fn cycle_action(n: usize, full: bool) -> VertexAction {
        let g = special_graph(SpecialKind::Cycle, n).unwrap();
        let rot = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap();
        let mut gens = vec![rot];
        if full {
            gens.push(Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect()).unwrap());
        }
        VertexAction::new(PermutationGroup::new(n, gens).unwrap(), g).unwrap()
    }

    #[test]
    fn cycle_orbits() {
        assert_eq!(arc_orbits(&cycle_action(5, true)).len(), 1);
        let rot = cycle_action(4, false);
        let orbits = arc_orbits(&rot);
        assert_eq!(orbits.len(), 2);
        let r = transitivity_report(&rot, 4).unwrap();
        assert!(r.is_half_arc_transitive());
        assert_eq!(r.s_degree, SDegree::Half);
        let full = transitivity_report(&cycle_action(6, true), 4).unwrap();
        assert_eq!(full.s_degree, SDegree::AtLeast(4));
    }

    #[test]
    fn petersen_is_three_arc_transitive() {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let edges: Vec<(u32, u32)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let g = Graph::new(10, &edges).unwrap();
        let aut = crate::autgraph::automorphism_group(&g).unwrap();
        let act = VertexAction::new(aut, g).unwrap();
        let r = transitivity_report(&act, 4).unwrap();
        assert_eq!(r.s_degree, SDegree::Exactly(3));
        let la = local_action(&act, 0).unwrap();
        assert_eq!(la.induced.order(), BigUint::from(6u32));
        assert_eq!(la.kernel_order, BigUint::from(2u32));
    }

    #[test]
    fn regular_action_has_trivial_local_action() {
        let act = cycle_action(7, false);
        let la = local_action(&act, 3).unwrap();
        assert!(la.induced.order().is_one());
        assert!(la.kernel_order.is_one());
    }
}
