use std::collections::BTreeSet;

use super::{err, run_report, Basis, ExampleReport};
use crate::altcycles::{alternating_cycle_system, alternating_graph, hat_orientation};
use crate::autgraph::{automorphism_group_with, is_isomorphic, AutOptions};
use crate::fpgroup::{faithful_representation, FpPresentation, DEFAULT_COSET_LIMIT};
use crate::graphcore::{cayley_graph, coset_graph_of_element, VertexAction};
use crate::perm::Permutation;
use crate::permgroup::{
    coset_action, double_coset, is_maximal_subgroup, normalizer, wreath_square, PermutationGroup, SubgroupHandle,
};
use crate::symmetry::{classify_theorem_case, describe_group, transitivity_report};

pub(crate) const PRESENTATION: &str = "gens a b c
a^2; b^3; c^4; (a*b)^8
c = [a,b]";

/// `Cos(X, Y, YxY)` for `X = PGL2(7) wr S2`, a Cayley graph of
/// `AGL1(7) x AGL1(7)` whose regular normalizer `M` is half-arc-transitive
/// with attachment number 1 and `Aut(Alt_M) = M`.
pub fn run_example_41() -> ExampleReport {
    run_report("4.1", |r| {
        let pres = FpPresentation::parse(PRESENTATION).map_err(err)?;
        let f_words = vec![pres.parse_word("a*b*c").map_err(err)?, pres.parse_word("c*[b,c]").map_err(err)?];
        let rep = faithful_representation(&pres, std::slice::from_ref(&f_words), DEFAULT_COSET_LIMIT).map_err(err)?;
        let l = rep.group.clone();
        let word = |w: &str| pres.parse_word(w).map(|w| rep.table.word_permutation(&w)).map_err(err);
        r.check("|L|", 336, l.order(), Basis::Stated);
        r.note("degree of L", l.degree());
        let (a, b, c) = (word("a")?, word("b")?, word("c")?);

        let k = l.derived_subgroup().into_group();
        r.check("|L'|", 168, k.order(), Basis::Stated);
        r.check("order of c", 4, c.order(), Basis::Stated);
        r.check_true("c in L'", k.contains(&c), Basis::Stated);
        let c_group = PermutationGroup::new(l.degree(), vec![c.clone()]).map_err(err)?;
        let nkc = normalizer(&k, &c_group).map_err(err)?.into_group();
        r.check("N_L'(<c>) signature", "D8", describe_group(&nkc), Basis::Stated);

        let w = wreath_square(&l);
        let x_group = w.group.clone();
        let d = w.swap.clone();
        r.check("|X|", 225792, x_group.order(), Basis::Derived);
        let mut y_gens: Vec<Permutation> = nkc.generators().iter().map(|g| w.embed1(g)).collect();
        y_gens.extend(nkc.generators().iter().map(|g| w.embed2(g)));
        y_gens.push(d.clone());
        let y = PermutationGroup::new(x_group.degree(), y_gens).map_err(err)?;
        r.check("|Y|", 128, y.order(), Basis::Derived);

        let f: Vec<Permutation> = f_words.iter().map(|fw| rep.table.word_permutation(fw)).collect();
        let f_group = PermutationGroup::new(l.degree(), f.clone()).map_err(err)?;
        r.check("<abc, c[b,c]> signature", "AGL1(7)", describe_group(&f_group), Basis::Stated);
        let mut g_gens: Vec<Permutation> = f.iter().map(|p| w.embed1(p)).collect();
        g_gens.extend(f.iter().map(|p| w.embed2(p)));
        let g = PermutationGroup::new(x_group.degree(), g_gens).map_err(err)?;
        r.check("|G|", 1764, g.order(), Basis::Derived);
        r.check("|G ∩ Y|", 1, g.intersection(&y).map_err(err)?.order(), Basis::Stated);

        let x = w.pair(&b.compose(&c.pow(2)).compose(&b).compose(&c), &a.conjugate_by(&b));
        let xd = x.conjugate_by(&d);
        let s: BTreeSet<Permutation> = [x.clone(), x.inverse(), xd.clone(), xd.inverse()].into_iter().collect();
        let yxy = double_coset(&y, &x, &y).map_err(err)?;
        let meet: BTreeSet<Permutation> = yxy.iter().filter(|e| g.contains(e)).cloned().collect();
        r.check_true("S = G ∩ YxY", meet == s, Basis::Stated);

        let y_handle = SubgroupHandle::new(&x_group, y.generators().to_vec()).map_err(err)?;
        let cos = coset_graph_of_element(&x_group, &y_handle, &x).map_err(err)?;
        let graph = cos.graph.clone();
        r.check("|V(Gamma)|", 1764, graph.vertex_count(), Basis::Derived);
        r.check("valency", "Some(4)", format!("{:?}", graph.valency()), Basis::Stated);
        let s_list: Vec<Permutation> = s.iter().cloned().collect();
        let cay = cayley_graph(&g, &s_list).map_err(err)?;
        let iso = is_isomorphic(&graph, &cay.graph).map_err(err)?.is_some();
        r.check_true("Cos(X,Y,YxY) isomorphic to Cay(G,S)", iso, Basis::Stated);

        // `X` acts faithfully on the cosets of `Y`; its image seeds the search.
        let x_image = cos.action.group().clone();
        let aut = automorphism_group_with(
            &graph,
            &AutOptions {
                seeds: x_image.generators().to_vec(),
                ..Default::default()
            },
        )
        .map_err(err)?
        .group;
        r.check("|Aut(Gamma)|", 225792, aut.order(), Basis::Derived);
        r.check_true("Aut(Gamma) = X", aut.order() == x_group.order() && x_image.is_subgroup_of(&aut), Basis::Stated);
        let aut_action = VertexAction::new(aut.clone(), graph.clone()).map_err(err)?;

        let ca = coset_action(&x_group, &y).map_err(err)?;
        let map_all = |gens: &[Permutation]| -> Result<PermutationGroup, String> {
            let imgs = gens.iter().map(|p| ca.map(p).ok_or("element outside X")).collect::<Result<Vec<_>, _>>()?;
            PermutationGroup::new(graph.vertex_count(), imgs).map_err(err)
        };
        let g_image = map_all(g.generators())?;
        r.check_true(
            "G regular on V(Gamma)",
            g_image.transitivity_profile(graph.vertex_count()).regular,
            Basis::Stated,
        );
        let m = normalizer(&aut, &g_image).map_err(err)?.into_group();
        r.check("|N_X(G)|", 3528, m.order(), Basis::Derived);
        let gd = map_all(&[g.generators(), std::slice::from_ref(&d)].concat())?;
        r.check_true("N_X(G) = G⋊<d>", gd.same_group(&m), Basis::Stated);
        r.check_true("N_X(G) maximal in X", is_maximal_subgroup(&aut, &m).map_err(err)?, Basis::Stated);
        let m_action = aut_action.restricted(&m).map_err(err)?;
        let m_rep = transitivity_report(&m_action, 1).map_err(err)?;
        r.check_true("Gamma is M-half-arc-transitive", m_rep.is_half_arc_transitive(), Basis::Stated);
        let aut_rep = transitivity_report(&aut_action, 3).map_err(err)?;
        r.check_true("Aut(Gamma) arc-transitive", aut_rep.arc_transitive, Basis::Stated);
        r.note("Aut(Gamma) s-degree", aut_rep.s_degree);

        let orientation = hat_orientation(&m_action).map_err(err)?;
        let system = alternating_cycle_system(&orientation).map_err(err)?;
        r.check("attachment number", 1, system.attachment, Basis::Stated);
        r.note("radius", system.radius);
        r.note("alternating cycles", system.cycles.len());
        r.check_true("quotient by B(M) is Gamma", system.quotient_is_graph(), Basis::Stated);
        let alt = alternating_graph(&m_action, &system).map_err(err)?;
        let alt_aut = automorphism_group_with(
            &alt.alt,
            &AutOptions {
                seeds: alt.induced.generators().to_vec(),
                ..Default::default()
            },
        )
        .map_err(err)?
        .group;
        r.check("|Aut(Alt_M(Gamma))|", 3528, alt_aut.order(), Basis::Stated);
        r.check_true("Aut(Alt_M(Gamma)) = M", alt_aut.order() == alt.induced.order(), Basis::Stated);
        let alt_action = VertexAction::new(alt_aut, alt.alt.clone()).map_err(err)?;
        let alt_rep = transitivity_report(&alt_action, 1).map_err(err)?;
        r.check_true("Alt_M(Gamma) vertex-transitive", alt_rep.vertex_transitive, Basis::Stated);
        r.check_true("Alt_M(Gamma) edge-transitive", alt_rep.edge_transitive, Basis::Stated);
        r.check("Alt_M(Gamma) arc orbits", 2, alt_rep.arc_orbit_count, Basis::Stated);
        r.check_true("Alt_M(Gamma) half-arc-transitive", alt_rep.is_half_arc_transitive(), Basis::Stated);
        r.note("Alt_M(Gamma) vertices", alt.alt.vertex_count());
        r.note("Alt_M(Gamma) valency", format!("{:?}", alt.alt.valency()));

        let case = classify_theorem_case(&graph, &m, &aut, 0).map_err(err)?;
        r.check("theorem case", "c1", case.label, Basis::Stated);
        r.check("|K|", 1, &case.k_order, Basis::Stated);
        Ok(())
    })
}
