use hatlab_core::fpgroup::amalgam_by_name;
use hatlab_core::pairsearch::{
    candidate_classes, candidate_stabilizers, maximal_half_arc_pairs, verify_pair_result, RealizedAmalgam,
    SearchOptions,
};
use hatlab_core::permgroup::is_maximal_subgroup;

fn realize(name: &str) -> RealizedAmalgam {
    RealizedAmalgam::new(&amalgam_by_name(name).unwrap()).unwrap()
}

#[test]
fn a4_amalgam_yields_two_s5_pairs() {
    let am = realize("A4s");
    let out = maximal_half_arc_pairs(&am, &SearchOptions::default()).unwrap();
    assert!(out.complete);
    assert_eq!(out.results.len(), 2);
    for r in &out.results {
        assert_eq!(r.n, 6);
        assert_eq!(r.quadruple, ["S5", "F5", "A4", "C2"]);
        assert!(is_maximal_subgroup(&r.h_group, r.m_group.group()).unwrap());
        let v = verify_pair_result(r).unwrap();
        assert!(v.passed());
        assert_eq!(v.vertex_count, Some(10));
        // The m-filter agrees with two arc orbits on the built graph.
        assert_eq!(v.m_arc_orbits, Some(2));
        assert_eq!(v.m_stabilizer_order.as_deref(), Some("2"));
        assert_eq!(v.h_s_degree.map(|s| s.to_string()).as_deref(), Some("2"));
    }
}

#[test]
fn search_is_deterministic() {
    let am = realize("A4s");
    let a = maximal_half_arc_pairs(&am, &SearchOptions::default()).unwrap();
    let b = maximal_half_arc_pairs(&am, &SearchOptions::default()).unwrap();
    let key = |o: &hatlab_core::pairsearch::PairSearchOutcome| {
        o.results.iter().map(|r| (r.h.to_cycle_string(), r.m.to_cycle_string())).collect::<Vec<_>>()
    };
    assert_eq!(key(&a), key(&b));
}

#[test]
fn class_representatives_cover_candidates() {
    for name in ["A4s", "S4", "Z3:S4"] {
        let am = realize(name);
        let all = candidate_stabilizers(&am).unwrap();
        let reps = candidate_classes(&am).unwrap();
        assert!(!reps.is_empty() && reps.len() <= all.len(), "{name}");
        for rep in &reps {
            assert!(all.iter().any(|c| c.group().same_group(rep.group())), "{name}");
        }
    }
}

#[test]
fn small_empty_amalgams() {
    for name in ["S4", "Z3xA4", "Z3:S4"] {
        let out = maximal_half_arc_pairs(&realize(name), &SearchOptions::default()).unwrap();
        assert!(out.complete, "{name}");
        assert!(out.results.is_empty(), "{name}");
    }
}

#[test]
fn zero_time_limit_marks_search_incomplete() {
    let opts = SearchOptions {
        time_limit: Some(std::time::Duration::ZERO),
        ..Default::default()
    };
    let out = maximal_half_arc_pairs(&realize("Z3:S4"), &opts).unwrap();
    assert!(!out.complete);
    assert!(!out.skipped.is_empty());
}
