//! End-to-end runs of the counterexample and the asymptotics tables.

use morse_index::orlicz::{BFunction, DampedB};
use morse_index::sharpness::{
    binv_asymptotics, build_counterexample, finiteness_check, lambert_w, phi_asymptotics, rayleigh_check,
    ConstructionOptions, MeasureFamily, RayleighStatus,
};

#[test]
fn ten_bumps_on_lebesgue() {
    let fam = MeasureFamily::Lebesgue;
    let ce = build_counterexample(&DampedB, fam, 10, ConstructionOptions::with_threshold_factor(fam, 2.0)).unwrap();
    assert_eq!(ce.measure.len(), 10 * 128);
    assert_eq!(ce.potential.len(), ce.measure.len());
    let checks: Vec<_> = (1..=10).map(|k| rayleigh_check(&ce, k).unwrap()).collect();
    assert!(checks.iter().all(|c| c.negative && c.status == RayleighStatus::Negative));
    // w_k = 1 on the bump, so the potential term equals the lower bound
    for c in &checks {
        assert!((c.potential / c.lower_bound - 1.0).abs() < 1e-12);
    }
    for w in [&(|_| 1.0) as &dyn Fn([f64; 2]) -> f64, &|p: [f64; 2]| p[0].hypot(p[1]).ln_1p()] {
        let rep = finiteness_check(&ce, &DampedB, w);
        assert!(rep.psi_series.max_tail_ratio_after(5).unwrap() < 0.9);
        assert!(rep.vw_series.max_tail_ratio_after(5).unwrap() < 0.9);
    }
}

#[test]
fn b_itself_is_rejected() {
    assert!(build_counterexample(&BFunction, MeasureFamily::Line, 5, ConstructionOptions::default()).is_err());
}

#[test]
fn asymptotic_tables() {
    let grid: Vec<f64> = (-8..=8).map(|e| 10f64.powi(e)).collect();
    let r = binv_asymptotics(&grid).unwrap();
    assert!(r.increasing);
    assert_eq!(r.rows.len(), 17);
    let taus: Vec<f64> = (1..=20).map(|i| 0.01 * i as f64).collect();
    let p = phi_asymptotics(&taus).unwrap();
    assert!(p.increasing && p.max_abs_log_ratio <= 3.0);
    for e in -3..=9 {
        let v = 10f64.powi(e);
        let w = lambert_w(v).unwrap();
        assert!((w * w.exp() - v).abs() <= 1e-12 * v);
    }
}
