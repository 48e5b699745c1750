use mcz_core::identities::{registry, run_suite, run_suite_with_jobs, TAG_ALL};

#[test]
fn full_suite_passes() {
    let reports = run_suite(&[TAG_ALL]);
    assert!(reports.len() >= 60, "only {} reports", reports.len());
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    assert!(failed.is_empty(), "failures: {failed:#?}");
}

#[test]
fn erratum_is_flagged() {
    let reports = run_suite(&["erratum"]);
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert!(!r.pass);
    assert!((r.abs_residual - 0.118_011_660_505_096).abs() < 1e-9, "{r:?}");
}

#[test]
fn deterministic_across_runs_and_pools() {
    let a = run_suite(&["lambda-series", "quarter", "barnes"]);
    let b = run_suite_with_jobs(&["lambda-series", "quarter", "barnes"], 1).unwrap();
    assert_eq!(a.len(), b.len());
    assert!(a.iter().zip(&b).all(|(x, y)| x.same_values(y)));
}

#[test]
fn anchors_listed_in_catalogue() {
    let doc = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/identities.md"))
        .expect("docs/identities.md present");
    for r in registry() {
        assert!(doc.contains(&r.paper_anchor), "{}: anchor missing from catalogue: {}", r.id, r.paper_anchor);
        assert!(doc.contains(&format!("`{}`", r.id)), "{} missing from catalogue", r.id);
    }
}
