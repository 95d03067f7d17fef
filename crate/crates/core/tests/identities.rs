use lozenge::builders::DParams;
use lozenge::formulas::eval_d;
use lozenge::identities::{
    check_base_cases, check_d_against, check_factorization, check_hyp_chain, check_kuo,
    check_r_recurrence, check_ratios, check_split_sum, d_grid, kuo_grid, run_grid, Bounds,
    KuoVariant, RatioIdentity, SplitVariant, VerifyError, ALL_IDS,
};
use lozenge::number::int;

fn small() -> Bounds {
    Bounds {
        max_x: 3,
        max_y: 2,
        max_m: 2,
        max_a: 3,
        max_c: 2,
    }
}

#[test]
fn each_identity_runs_alone() {
    for id in ALL_IDS {
        let reports = run_grid(&[id], &small()).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.id, *id);
        assert!(r.passed(), "{r}");
        assert!(r.tuples_checked > 0, "{id} checked nothing");
    }
}

#[test]
fn reports_follow_request_order() {
    let ids = ["eq-4.17", "eq-2.4", "macmahon"];
    let got: Vec<String> = run_grid(&ids, &small())
        .unwrap()
        .into_iter()
        .map(|r| r.id)
        .collect();
    assert_eq!(got, ids);
}

#[test]
fn unknown_ids_are_errors() {
    assert_eq!(
        run_grid(&["eq-2.4", "nope"], &small()),
        Err(VerifyError::UnknownIdentity("nope".into()))
    );
}

#[test]
fn standalone_checks_agree_with_the_suite() {
    let grid = kuo_grid(&small());
    for v in [
        KuoVariant::DCounts,
        KuoVariant::DPrimeCounts,
        KuoVariant::DFormula,
        KuoVariant::DPrimeFormula,
    ] {
        let r = check_kuo(v, &grid).unwrap();
        assert!(r.passed() && r.tuples_checked == grid.len(), "{r}");
    }
    for w in [
        RatioIdentity::Sum,
        RatioIdentity::First,
        RatioIdentity::Second,
    ] {
        assert!(check_ratios(w, &grid).unwrap().passed());
    }
    assert!(check_split_sum(SplitVariant::Plain, 2, 2, 3)
        .unwrap()
        .passed());
    assert!(check_split_sum(SplitVariant::Primed, 2, 2, 3)
        .unwrap()
        .passed());
    assert!(check_hyp_chain(3, 2, 2).unwrap().passed());
    assert!(check_r_recurrence(&[(1, 2, 1), (0, 1, 0)])
        .unwrap()
        .passed());
    assert!(check_factorization(2, 2).passed());
    assert!(check_base_cases(&small()).passed());
}

#[test]
fn standalone_checks_reject_bad_tuples() {
    let flat = DParams::new(1, 1, 0, 0).unwrap();
    assert!(check_ratios(RatioIdentity::Sum, &[flat]).is_err());
    assert!(check_split_sum(SplitVariant::Plain, 0, 1, 1).is_err());
    assert!(check_r_recurrence(&[(1, 0, 1)]).is_err());
}

#[test]
fn perturbed_formula_yields_reproducible_witnesses() {
    let grid = d_grid(&small());
    let bad = |p: &DParams| {
        let v = eval_d(&int(p.x as i64), p.y as i64, p.z as i64, p.m as i64)?;
        Ok(if p.z == 1 { v * int(2) } else { v })
    };
    let first = check_d_against("eq-2.4", &grid, false, &bad);
    let second = check_d_against("eq-2.4", &grid, false, &bad);
    assert!(!first.failures.is_empty());
    assert_eq!(first.failures, second.failures);
    assert!(first.failures.iter().all(|f| f.params.contains("z=1")));
    let good = |p: &DParams| eval_d(&int(p.x as i64), p.y as i64, p.z as i64, p.m as i64);
    assert!(check_d_against("eq-2.4", &grid, false, &good).passed());
}
