//! Master regression: every built-in descriptor passes verification, and
//! the sharp families show the expected equality markers.

use chern_bounds::bounds::Verdict;
use chern_bounds::catalog::{builtin_catalog, verify};

#[test]
fn every_builtin_descriptor_passes() {
    let catalog = builtin_catalog();
    assert!(catalog.len() > 370);
    let mut failures = Vec::new();
    for d in &catalog {
        let report = verify(d);
        if !report.pass {
            let bad: Vec<String> = report
                .reports
                .iter()
                .filter(|r| r.verdict == Verdict::Violated)
                .map(|r| format!("{}: {}", r.name, r.detail))
                .collect();
            failures.push(format!("{} -> {}", d.name, bad.join("; ")));
        }
    }
    assert!(failures.is_empty(), "violated descriptors:\n{}", failures.join("\n"));
}

#[test]
fn characteristics_are_integers_on_catalog_data() {
    for d in builtin_catalog() {
        let chi = chern_bounds::riemann_roch::euler_char(&d.chern);
        assert!(
            chern_bounds::rational::to_integer(&chi).is_some(),
            "{}: chi = {chi}",
            d.name
        );
    }
}

#[test]
fn sharp_equalities_present() {
    let catalog = builtin_catalog();
    let verify_named = |name: &str| {
        let d = catalog.iter().find(|d| d.name == name).expect("present");
        verify(d)
    };

    let nc = verify_named("null_correlation");
    assert_eq!(nc.report("rigrossa").unwrap().verdict, Verdict::Equality);
    assert_eq!(nc.report("c2_lower").unwrap().verdict, Verdict::Equality);
    assert_eq!(nc.report("grossa").unwrap().verdict, Verdict::Equality);
    // discriminant floor 2n met exactly: 4 = 2*2
    assert_eq!(nc.report("delta_semistable").unwrap().verdict, Verdict::Equality);

    for k in 1..=5 {
        let r = verify_named(&format!("example2_k{k}"));
        assert_eq!(r.report("rigrossa").unwrap().verdict, Verdict::Equality, "k={k}");
    }

    for b in 1..=5 {
        let r = verify_named(&format!("wide_window_b{b}"));
        let window = r.report("c2_window").unwrap();
        assert_eq!(window.verdict, Verdict::Equality, "b={b}");
        assert_eq!(r.report("c2_lower").unwrap().verdict, Verdict::Equality, "b={b}");
    }

    let split = verify_named("split_[1,0,-1]_P3");
    assert_eq!(split.report("h0_upper").unwrap().verdict, Verdict::Equality);
    assert_eq!(split.report("rigrossa").unwrap().verdict, Verdict::Equality);
    assert_eq!(split.report("louso").unwrap().verdict, Verdict::Equality);
}
