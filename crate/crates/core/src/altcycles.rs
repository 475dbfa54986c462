//! Orientations induced by half-arc-transitive actions, alternating cycles,
//! and the graph of alternating cycles.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::GraphError;
use crate::graphcore::{Digraph, Graph, VertexAction};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;
use crate::symmetry::{arc_orbit_labels, transitivity_report, ArcIndex};

/// The two arc orbits of a half-arc-transitive action.
#[derive(Clone, Debug)]
pub struct HatOrientation {
    pub graph: Graph,
    /// Orbit of the arc from vertex 0 to its smallest neighbour.
    pub plus: Digraph,
    pub orbit_plus: Vec<(u32, u32)>,
    pub orbit_minus: Vec<(u32, u32)>,
}

pub fn hat_orientation(action: &VertexAction) -> Result<HatOrientation, GraphError> {
    let g = action.graph();
    if g.valency() != Some(4) {
        return Err(GraphError::NotTetravalent);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let report = transitivity_report(action, 1)?;
    if !report.is_half_arc_transitive() {
        return Err(GraphError::NotHalfArcTransitive);
    }
    let (label, _) = arc_orbit_labels(g, action.group().generators());
    let arcs = g.arcs();
    let idx = ArcIndex::new(g);
    let rep = idx.id(g, 0, g.neighbors(0)[0]);
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    for (i, &a) in arcs.iter().enumerate() {
        if label[i] == label[rep] {
            plus.push(a);
        } else {
            minus.push(a);
        }
    }
    let digraph = Digraph::new(g.vertex_count(), &plus);
    for v in 0..g.vertex_count() as u32 {
        if digraph.out_neighbors(v).len() != 2 || digraph.in_neighbors(v).len() != 2 {
            return Err(GraphError::ConstancyViolated(format!(
                "vertex {v} does not have in- and out-degree 2"
            )));
        }
    }
    Ok(HatOrientation {
        graph: g.clone(),
        plus: digraph,
        orbit_plus: plus,
        orbit_minus: minus,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AltCycleSystem {
    /// Cycles in canonical rotation: smallest vertex first, then the smaller
    /// of its two cycle neighbours.
    pub cycles: Vec<Vec<u32>>,
    pub radius: usize,
    pub attachment: usize,
    /// `tail_cycle[v]` uses both out-arcs of `v`; `head_cycle[v]` both in-arcs.
    pub tail_cycle: Vec<u32>,
    pub head_cycle: Vec<u32>,
}

impl AltCycleSystem {
    /// With attachment 1 the quotient by the associated partition is the
    /// graph itself.
    pub fn quotient_is_graph(&self) -> bool {
        self.attachment == 1
    }
}

fn canonical_cycle(c: &[u32]) -> Vec<u32> {
    let n = c.len();
    let (start, _) = c.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
    let fwd = c[(start + 1) % n];
    let bwd = c[(start + n - 1) % n];
    if fwd <= bwd {
        (0..n).map(|i| c[(start + i) % n]).collect()
    } else {
        (0..n).map(|i| c[(start + n - i) % n]).collect()
    }
}

/// Traces the alternating cycle through the two out-arcs of `v`.
fn trace_from(d: &Digraph, v: u32) -> Vec<u32> {
    let mut cycle = vec![v];
    let mut prev = v;
    let mut cur = d.out_neighbors(v)[0];
    let mut at_head = true;
    loop {
        cycle.push(cur);
        let options = if at_head {
            d.in_neighbors(cur)
        } else {
            d.out_neighbors(cur)
        };
        let next = if options[0] == prev { options[1] } else { options[0] };
        if next == v && !at_head {
            unreachable!("alternating walks return to their start through a head vertex");
        }
        if next == v {
            return cycle;
        }
        prev = cur;
        cur = next;
        at_head = !at_head;
    }
}

pub fn alternating_cycle_system(orientation: &HatOrientation) -> Result<AltCycleSystem, GraphError> {
    let d = &orientation.plus;
    let n = d.vertex_count();
    let mut tail_cycle = vec![u32::MAX; n];
    let mut head_cycle = vec![u32::MAX; n];
    let mut cycles = Vec::new();
    for v in 0..n as u32 {
        if tail_cycle[v as usize] != u32::MAX {
            continue;
        }
        let walk = trace_from(d, v);
        if !walk.len().is_multiple_of(2) {
            return Err(GraphError::ConstancyViolated("odd alternating walk".into()));
        }
        let id = cycles.len() as u32;
        for (i, &w) in walk.iter().enumerate() {
            let slot = if i % 2 == 0 {
                &mut tail_cycle[w as usize]
            } else {
                &mut head_cycle[w as usize]
            };
            if *slot != u32::MAX {
                return Err(GraphError::ConstancyViolated(format!(
                    "vertex {w} revisited by an alternating cycle"
                )));
            }
            *slot = id;
        }
        cycles.push(canonical_cycle(&walk));
    }
    if head_cycle.contains(&u32::MAX) {
        return Err(GraphError::ConstancyViolated("vertex missing from head cycles".into()));
    }
    let len = cycles[0].len();
    if cycles.iter().any(|c| c.len() != len) {
        return Err(GraphError::ConstancyViolated("alternating cycles differ in length".into()));
    }
    let mut meets: HashMap<(u32, u32), usize> = HashMap::new();
    for v in 0..n {
        let (a, b) = (tail_cycle[v], head_cycle[v]);
        *meets.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let mut sizes: Vec<usize> = meets.values().copied().collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() != 1 {
        return Err(GraphError::ConstancyViolated(format!("intersection sizes {sizes:?}")));
    }
    // Number cycles in canonical order so reports are stable.
    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_by(|&a, &b| cycles[a].cmp(&cycles[b]));
    let mut renum = vec![0u32; cycles.len()];
    for (new, &old) in order.iter().enumerate() {
        renum[old] = new as u32;
    }
    let sorted: Vec<Vec<u32>> = order.iter().map(|&i| cycles[i].clone()).collect();
    Ok(AltCycleSystem {
        cycles: sorted,
        radius: len / 2,
        attachment: sizes[0],
        tail_cycle: tail_cycle.iter().map(|&c| renum[c as usize]).collect(),
        head_cycle: head_cycle.iter().map(|&c| renum[c as usize]).collect(),
    })
}

/// `Alt_M(Γ)` with the action of `M` on alternating cycles.
#[derive(Clone, Debug)]
pub struct AltGraph {
    pub alt: Graph,
    pub induced: PermutationGroup,
    pub attachment: usize,
}

pub fn alternating_graph(action: &VertexAction, system: &AltCycleSystem) -> Result<AltGraph, GraphError> {
    let count = system.cycles.len();
    if count < 2 {
        return Err(GraphError::SingleCycle);
    }
    let edges = (0..system.tail_cycle.len()).map(|v| (system.tail_cycle[v], system.head_cycle[v]));
    let alt = Graph::from_edges_lossy(count, edges);
    // Distinct cycles may share a vertex set, so cycles are identified by
    // the vertices whose out-arcs they use.
    let mut tail_rep = vec![u32::MAX; count];
    for (v, &c) in system.tail_cycle.iter().enumerate() {
        if tail_rep[c as usize] == u32::MAX {
            tail_rep[c as usize] = v as u32;
        }
    }
    let mut gens = Vec::new();
    for g in action.group().generators() {
        let images: Vec<u32> = tail_rep
            .iter()
            .map(|&v| system.tail_cycle[g.image(v) as usize])
            .collect();
        let preserved = system
            .tail_cycle
            .iter()
            .enumerate()
            .all(|(v, &c)| system.tail_cycle[g.image(v as u32) as usize] == images[c as usize]);
        if !preserved {
            return Err(GraphError::Precondition(
                "group does not preserve the alternating cycles".into(),
            ));
        }
        gens.push(Permutation::from_images(images)?);
    }
    let induced = PermutationGroup::new(count, gens)?;
    Ok(AltGraph {
        alt,
        induced,
        attachment: system.attachment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The `n x n` torus grid under translations and the coordinate swap:
    /// two arc orbits, one for each sign.
    fn torus(n: u32) -> VertexAction {
        let id = |i: u32, j: u32| (i % n) * n + (j % n);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = id(i, j);
                for w in [id(i + 1, j), id(i, j + 1)] {
                    edges.push((v.min(w), v.max(w)));
                }
            }
        }
        let g = Graph::new((n * n) as usize, &edges).unwrap();
        let tx = Permutation::from_images((0..n * n).map(|v| id(v / n + 1, v % n)).collect()).unwrap();
        let ty = Permutation::from_images((0..n * n).map(|v| id(v / n, v % n + 1)).collect()).unwrap();
        let swap = Permutation::from_images((0..n * n).map(|v| id(v % n, v / n)).collect()).unwrap();
        let grp = PermutationGroup::new((n * n) as usize, vec![tx, ty, swap]).unwrap();
        VertexAction::new(grp, g).unwrap()
    }

    #[test]
    fn torus_alternating_cycles() {
        let act = torus(5);
        let o = hat_orientation(&act).unwrap();
        assert_eq!(o.orbit_plus.len(), 50);
        let sys = alternating_cycle_system(&o).unwrap();
        let total: usize = sys.cycles.iter().map(|c| c.len()).sum();
        assert_eq!(total, 2 * 25);
        for c in &sys.cycles {
            assert_eq!(c.len(), 2 * sys.radius);
        }
        let alt = alternating_graph(&act, &sys).unwrap();
        assert_eq!(alt.alt.vertex_count(), sys.cycles.len());
        assert!(alt.induced.is_transitive());
    }

    #[test]
    fn arc_transitive_input_is_rejected() {
        let g = crate::graphcore::special_graph(crate::graphcore::SpecialKind::CompleteBipartiteMinusMatching, 5).unwrap();
        let aut = crate::autgraph::automorphism_group(&g).unwrap();
        let act = VertexAction::new(aut, g).unwrap();
        assert!(matches!(hat_orientation(&act), Err(GraphError::NotHalfArcTransitive)));
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(&[3, 1, 4, 0]), vec![0, 3, 1, 4]);
        assert_eq!(canonical_cycle(&[3, 0, 4, 1]), vec![0, 3, 1, 4]);
    }
}
