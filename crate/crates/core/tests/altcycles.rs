mod common;

use hatlab_core::altcycles::{alternating_cycle_system, alternating_graph, hat_orientation};
use hatlab_core::autgraph::automorphism_group;
use hatlab_core::error::GraphError;
use hatlab_core::graphcore::{special_graph, SpecialKind, VertexAction};
use hatlab_core::permgroup::normalizer;
use hatlab_core::PermutationGroup;

/// Half-arc-transitive action of `Z5 ⋊ Z4` on `K_{5,5} - 5K_2`.
fn f20_action() -> VertexAction {
    let g = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 5).unwrap();
    let aut = automorphism_group(&g).unwrap();
    let act = VertexAction::new(aut.clone(), g).unwrap();
    let mut candidates = Vec::new();
    aut.for_each_element(|e| {
        if e.order_u64() == Some(5) {
            candidates.push(e.clone());
        }
        candidates.is_empty()
    });
    let five = PermutationGroup::new(aut.degree(), candidates).unwrap();
    let n = normalizer(&aut, &five).unwrap().into_group();
    // The normalizer has order 40; its index-2 subgroups include an F20.
    for e in n.elements().unwrap() {
        let m = five.extended(std::slice::from_ref(&e));
        if m.order() == 20u32.into() {
            if let Ok(r) = act.restricted(&m) {
                if hat_orientation(&r).is_ok() {
                    return r;
                }
            }
        }
    }
    panic!("no half-arc-transitive subgroup of order 20");
}

#[test]
fn f20_on_bipartite_minus_matching() {
    let act = f20_action();
    let o = hat_orientation(&act).unwrap();
    let sys = alternating_cycle_system(&o).unwrap();
    assert_eq!(sys.cycles.len(), 2);
    assert_eq!(sys.radius, 5);
    assert_eq!(sys.attachment, 10);
    assert_eq!(common::constancy_violations(&o, &sys), 0);
    let alt = alternating_graph(&act, &sys).unwrap();
    assert_eq!(alt.alt.vertex_count(), 2);
}

#[test]
fn arc_transitive_action_is_rejected() {
    let g = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 5).unwrap();
    let act = VertexAction::new(automorphism_group(&g).unwrap(), g).unwrap();
    assert!(matches!(hat_orientation(&act), Err(GraphError::NotHalfArcTransitive)));
}

#[test]
fn random_swap_instances_have_constant_cycles() {
    for seed in 0..20 {
        let mut r = common::rng(seed);
        let inst = common::random_swap_instance(&mut r, 400);
        assert_eq!(common::swap_hat_violations(&inst), Ok(0), "seed {seed}");
    }
}
