use super::{err, run_report, Basis, ExampleReport};
use crate::altcycles::{alternating_cycle_system, hat_orientation};
use crate::autgraph::{automorphism_group_with, is_isomorphic, AutOptions};
use crate::fpgroup::{todd_coxeter, FpPresentation, DEFAULT_COSET_LIMIT};
use crate::graphcore::{cayley_graph, special_graph, SpecialKind, VertexAction};
use crate::permgroup::{core, is_maximal_subgroup, normalizer};
use crate::symmetry::{classify_theorem_case, describe_group, local_action, transitivity_report, SDegree};

pub(crate) const PRESENTATION: &str = "gens a b c d
a^9; b^3; c^3; d^3
[[b,c],b]; [[b,c],c]; [[b,c],d]
a^-1*b*a = c
a^-1*c*a = d
a^-1*d*a = b*[c,d]";

/// A Cayley graph of a group of order `3^8` whose regular normalizer is a
/// maximal half-arc-transitive subgroup with cyclic normal quotient.
pub fn run_example_44() -> ExampleReport {
    run_report("4.4", |r| {
        let pres = FpPresentation::parse(PRESENTATION).map_err(err)?;
        let table = todd_coxeter(&pres, &[], DEFAULT_COSET_LIMIT).map_err(err)?;
        r.check("|G| by coset enumeration", 6561, table.index(), Basis::Stated);
        let g = table.permutation_group();
        r.check("|G| by stabilizer chain", 6561, g.order(), Basis::Stated);

        let word = |w: &str| pres.parse_word(w).map(|w| table.word_permutation(&w)).map_err(err);
        let x = word("a*b")?;
        let y = word("a*b^-1")?;
        let s = vec![x.clone(), x.inverse(), y.clone(), y.inverse()];
        let cay = cayley_graph(&g, &s).map_err(err)?;
        let graph = cay.graph.clone();
        r.check("valency", "Some(4)", format!("{:?}", graph.valency()), Basis::Stated);
        r.check_true("Gamma connected", cay.connected, Basis::Derived);
        let regular = cay.action.group().clone();

        let aut = automorphism_group_with(
            &graph,
            &AutOptions {
                seeds: regular.generators().to_vec(),
                ..Default::default()
            },
        )
        .map_err(err)?
        .group;
        r.check("|Aut(Gamma)|", 52488, aut.order(), Basis::Derived);
        let aut_action = VertexAction::new(aut.clone(), graph.clone()).map_err(err)?;
        let local = local_action(&aut_action, 0).map_err(err)?;
        let stab = aut.point_stabilizer(0).into_group();
        r.check("|Aut(Gamma)_1|", 8, stab.order(), Basis::Stated);
        r.check("Aut(Gamma)_1 signature", "D8", describe_group(&stab), Basis::Stated);
        r.check("|local action|", 8, local.induced.order(), Basis::Stated);
        r.check("local action signature", "D8", describe_group(&local.induced), Basis::Stated);
        let aut_rep = transitivity_report(&aut_action, 3).map_err(err)?;
        r.check("Aut(Gamma) s-degree", SDegree::Exactly(1), aut_rep.s_degree, Basis::Stated);

        let n = normalizer(&aut, &regular).map_err(err)?.into_group();
        r.check("|N_Aut(R(G))|", 13122, n.order(), Basis::Stated);
        r.check_true("N maximal in Aut(Gamma)", is_maximal_subgroup(&aut, &n).map_err(err)?, Basis::Stated);
        let n_action = aut_action.restricted(&n).map_err(err)?;
        let n_rep = transitivity_report(&n_action, 1).map_err(err)?;
        r.check_true("Gamma is N-half-arc-transitive", n_rep.is_half_arc_transitive(), Basis::Stated);

        let k = core(&aut, &n).map_err(err)?.into_group();
        r.check("|R(G) : K|", 3, regular.order() / k.order(), Basis::Stated);
        r.check("|K|", 2187, k.order(), Basis::Derived);

        let orientation = hat_orientation(&n_action).map_err(err)?;
        let system = alternating_cycle_system(&orientation).map_err(err)?;
        r.note("N alternating cycles", system.cycles.len());
        r.note("N radius", system.radius);
        r.note("N attachment number", system.attachment);

        let case = classify_theorem_case(&graph, &n, &aut, 0).map_err(err)?;
        let c3 = special_graph(SpecialKind::Cycle, 3).map_err(err)?;
        let iso = case.quotient.vertex_count() == 3 && is_isomorphic(&case.quotient, &c3).map_err(err)?.is_some();
        r.check_true("Gamma_K isomorphic to C3", iso, Basis::Stated);
        r.check("|V(Gamma_K)|", 3, case.quotient_vertices, Basis::Stated);
        r.check("theorem case", "c2", case.label, Basis::Stated);
        r.check("|M/K|", 6, n.order() / k.order(), Basis::Stated);
        r.check("M/K signature", "S3", &case.quadruple[1], Basis::Stated);
        Ok(())
    })
}
