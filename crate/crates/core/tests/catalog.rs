use chebfib::identities::{catalog, verify_all, GridProfile, OutcomeStatus, Status};

#[test]
fn quick_grid_has_no_verified_failures() {
    let s = verify_all(&GridProfile::quick());
    assert_eq!(s.entries.len(), catalog().len());
    assert!(s.failures.is_empty(), "{:?}", s.failures.iter().map(|o| (o.id, o.point.to_string())).collect::<Vec<_>>());
    for e in s.typo_suspects() {
        if let Some(c) = &e.corrected {
            assert_eq!(c.fail, 0, "{}", e.id);
        }
    }
    assert!(s.discrepancies.iter().all(|o| o.status == OutcomeStatus::Fail));
}

#[test]
fn every_typo_suspect_fails_somewhere_on_quick() {
    let s = verify_all(&GridProfile::quick());
    for e in s.entries.iter().filter(|e| e.status == Status::TypoSuspect) {
        assert!(e.printed.fail > 0, "{} passes its printed form on quick", e.id);
    }
}

#[test]
fn verify_all_is_deterministic() {
    let g = GridProfile::quick();
    let a = verify_all(&g);
    let b = verify_all(&g);
    let strip = |s: &chebfib::identities::Summary| {
        s.entries.iter().map(|e| (e.id, e.printed.clone(), e.corrected.clone())).collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}
