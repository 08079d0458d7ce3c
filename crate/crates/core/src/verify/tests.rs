use super::*;

fn small() -> VerifyConfig {
    VerifyConfig::with_catalog(builtin_catalog(), &["1", "C2", "C3"]).unwrap()
}

#[test]
fn suites_pass_on_small_window() {
    let cfg = small();
    for suite in Suite::ALL {
        let r = run_suite(suite, &cfg);
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed()).collect();
        assert!(failed.is_empty(), "{suite}: {failed:#?}");
        assert!(r.checks.iter().all(|c| c.cases > 0), "{suite} has an empty check");
    }
}

#[test]
fn corrupt_star_is_caught_with_witnesses() {
    let mut cfg = small();
    cfg.fault = Some(Fault::CorruptStar);
    let r = run(&[Suite::Star], &cfg);
    assert!(!r.passed());
    let failing: Vec<_> = r.checks().filter(|(_, c)| !c.passed()).collect();
    assert!(failing.iter().all(|(_, c)| !c.witnesses.is_empty() && c.witnesses.len() <= MAX_WITNESSES));
    assert!(r.summary().contains("FAIL star/"));
}

#[test]
fn same_seed_same_report() {
    let mut cfg = small();
    cfg.seed = 7;
    let a = run(&[Suite::BisetIdentities, Suite::GreenAxioms], &cfg).to_json();
    let b = run(&[Suite::BisetIdentities, Suite::GreenAxioms], &cfg).to_json();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a["seed"], 7);
}

#[test]
fn suite_selection() {
    assert_eq!(Suite::parse_selection("all").unwrap().len(), 5);
    assert_eq!(Suite::parse_selection("star").unwrap(), vec![Suite::Star]);
    assert!(Suite::parse_selection("stars").is_err());
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
}
