use hatlab_core::reports::{run_example_42, run_example_43, Witness, STORED_WITNESS};

#[test]
fn example_43_report_passes() {
    let r = run_example_43();
    assert!(r.passed, "{:?}", r.failed_facts());
    assert_eq!(r.fact("theorem case").unwrap().actual, "b");
}

#[test]
fn stored_witness_verifies() {
    let w = Witness::parse(STORED_WITNESS).unwrap();
    assert_eq!(w.generator, "search_ex42_witness");
    let r = run_example_42(Some(&w), None);
    assert!(r.passed, "{:?}", r.failed_facts());
}

#[test]
fn altered_witness_fails() {
    let mut w = Witness::parse(STORED_WITNESS).unwrap();
    w.x = "(0 1 2 3)(4 5 6 7)".into();
    let r = run_example_42(Some(&w), None);
    assert!(!r.passed);
    assert!(!r.fact("x^2 = ac^(dc)").unwrap().passed);
}

#[test]
fn report_serializes_to_json() {
    let r = run_example_43();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["example"], "4.3");
    assert!(v["facts"].as_array().unwrap().iter().all(|f| f["basis"].is_string()));
}
