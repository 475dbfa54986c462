use hatlab_core::fpgroup::{
    amalgam_by_name, amalgam_catalog, permutation_image, todd_coxeter, FpPresentation,
    DEFAULT_COSET_LIMIT,
};
use num_bigint::BigUint;

fn order_three_eight_group() -> FpPresentation {
    FpPresentation::parse(
        "gens a b c d
         a^9; b^3; c^3; d^3
         [[b,c],b]; [[b,c],c]; [[b,c],d]
         a^-1*b*a = c
         a^-1*c*a = d
         a^-1*d*a = b*[c,d]",
    )
    .unwrap()
}

#[test]
fn order_three_eight_group_has_6561_elements() {
    let p = order_three_eight_group();
    let t = todd_coxeter(&p, &[], DEFAULT_COSET_LIMIT).unwrap();
    assert_eq!(t.index(), 6561);
}

#[test]
fn pgl27_on_cosets_of_agl17() {
    let p = FpPresentation::parse("gens a b c\na^2\nb^3\nc^4\n(a*b)^8\nc = [a,b]").unwrap();
    let sub = vec![p.parse_word("a*b*c").unwrap(), p.parse_word("c*[b,c]").unwrap()];
    let img = permutation_image(&p, &sub, DEFAULT_COSET_LIMIT).unwrap();
    assert_eq!(img.group.degree(), 8);
    assert_eq!(img.group.order(), BigUint::from(336u32));
    assert!(img.faithful);
    assert_eq!(img.group_order, Some(BigUint::from(336u32)));
}

#[test]
fn largest_amalgam_order() {
    let s = amalgam_by_name("7-AT").unwrap();
    let t = todd_coxeter(&s.presentation, &[], DEFAULT_COSET_LIMIT).unwrap();
    assert_eq!(BigUint::from(t.index()), s.expected_orders.0);
    assert!(s.self_check().unwrap());
}

#[test]
fn catalog_actions_on_b_cosets_are_two_transitive() {
    for spec in amalgam_catalog() {
        let img = permutation_image(&spec.presentation, &spec.b_generators, DEFAULT_COSET_LIMIT).unwrap();
        let g = &img.group;
        assert_eq!(g.degree(), 4, "{}", spec.name);
        assert!(g.is_transitive(), "{}", spec.name);
        let stab = g.point_stabilizer(0).into_group();
        assert_eq!(stab.orbits().iter().filter(|o| !o.contains(&0)).count(), 1, "{}", spec.name);
        // |L| = |image| * |kernel| where the kernel is the core of B.
        let total = img.group_order.clone().unwrap();
        let kernel = total.clone() / g.order();
        assert_eq!(g.order() * kernel, spec.expected_orders.0, "{}", spec.name);
    }
}

#[test]
fn relators_close_on_every_coset() {
    let spec = amalgam_by_name("4-AT").unwrap();
    let t = todd_coxeter(&spec.presentation, &[], DEFAULT_COSET_LIMIT).unwrap();
    for c in 0..t.index() as u32 {
        for r in spec.presentation.relators() {
            assert_eq!(t.trace(c, r), c);
        }
    }
}
