use super::{err, run_report, Basis, ExampleReport};
use crate::altcycles::{alternating_cycle_system, hat_orientation};
use crate::autgraph::automorphism_group;
use crate::graphcore::{special_graph, SpecialKind, VertexAction};
use crate::permgroup::{coset_action, is_maximal_subgroup, normalizer, PermutationGroup};
use crate::symmetry::{classify_theorem_case, describe_group, local_action, transitivity_report, SDegree};

/// `K_{5,5} - 5K_2` with the subgroup `H ≅ S5` of its automorphism group and
/// the Sylow-5 normalizer `M` of `H`.
pub fn run_example_43() -> ExampleReport {
    run_report("4.3", |r| {
        let graph = special_graph(SpecialKind::CompleteBipartiteMinusMatching, 5).map_err(err)?;
        let aut = automorphism_group(&graph).map_err(err)?;
        r.check("|Aut(Gamma)|", 240, aut.order(), Basis::Stated);

        // Index-2 subgroups contain the derived subgroup; one per nontrivial
        // coset of it when the quotient is elementary abelian of order 4.
        let derived = aut.derived_subgroup().into_group();
        let quotient = coset_action(&aut, &derived).map_err(err)?;
        r.note("|Aut(Gamma)'|", derived.order());
        let mut chosen = None;
        let mut index_two = 0;
        let mut two_arc = 0;
        for rep in quotient.representatives.iter().skip(1) {
            let h = derived.extended(std::slice::from_ref(rep));
            if h.order() * 2u32 != aut.order() {
                continue;
            }
            index_two += 1;
            let act = VertexAction::new(h.clone(), graph.clone()).map_err(err)?;
            let rep = transitivity_report(&act, 4).map_err(err)?;
            if rep.s_degree != SDegree::Exactly(2) {
                continue;
            }
            two_arc += 1;
            // A5 x C2 is 2-arc-transitive with stabilizer A4 as well.
            if chosen.is_none() && describe_group(&h) == "S5" {
                chosen = Some((h, act));
            }
        }
        r.check("index-2 subgroups of Aut(Gamma)", 3, index_two, Basis::Derived);
        r.note("2-arc-transitive index-2 subgroups", two_arc);
        let (h, h_action) = chosen.ok_or("no 2-arc-transitive index-2 subgroup isomorphic to S5")?;
        r.check("H signature", "S5", describe_group(&h), Basis::Stated);
        r.check("H s-degree", "2", transitivity_report(&h_action, 4).map_err(err)?.s_degree, Basis::Stated);
        let stab = h.point_stabilizer(0).into_group();
        r.check("|H_u|", 12, stab.order(), Basis::Stated);
        r.check("H_u signature", "A4", describe_group(&stab), Basis::Stated);
        let local = local_action(&h_action, 0).map_err(err)?;
        r.check("|H_u local action|", 12, local.induced.order(), Basis::Stated);

        let mut five = None;
        h.for_each_element(|e| {
            if e.order_u64() == Some(5) {
                five = Some(e.clone());
                false
            } else {
                true
            }
        });
        let p = five.ok_or("no element of order 5")?;
        let sylow = PermutationGroup::new(h.degree(), vec![p]).map_err(err)?;
        let m = normalizer(&h, &sylow).map_err(err)?.into_group();
        r.check("|M|", 20, m.order(), Basis::Stated);
        r.check("M signature", "F5", describe_group(&m), Basis::Stated);
        r.check_true("M maximal in H", is_maximal_subgroup(&h, &m).map_err(err)?, Basis::Stated);
        let m_action = h_action.restricted(&m).map_err(err)?;
        let m_rep = transitivity_report(&m_action, 1).map_err(err)?;
        r.check("M arc orbits", 2, m_rep.arc_orbit_count, Basis::Stated);
        r.check_true("Gamma is M-half-arc-transitive", m_rep.is_half_arc_transitive(), Basis::Stated);
        r.check("|M_u|", 2, m.point_stabilizer(0).order(), Basis::Stated);

        let orientation = hat_orientation(&m_action).map_err(err)?;
        let system = alternating_cycle_system(&orientation).map_err(err)?;
        r.note("M alternating cycles", system.cycles.len());
        r.note("M radius", system.radius);
        r.note("M attachment number", system.attachment);

        let case = classify_theorem_case(&graph, &m, &h, 0).map_err(err)?;
        r.check("theorem case", "b", case.label, Basis::Stated);
        r.check("quadruple", "(S5, F5, A4, C2)", format!("({})", case.quadruple.join(", ")), Basis::Stated);
        r.note("|K|", &case.k_order);
        Ok(())
    })
}
