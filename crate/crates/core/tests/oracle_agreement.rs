use std::f64::consts::PI;
use std::time::Instant;
use varregion::ctc::{b0, phi_ctc, tangency};
use varregion::disk::{phi_star, MarxClass};
use varregion::oracles::{curve_extremum, grid_extremum, Optimum};
use varregion::Sign;

#[test]
fn starlike_closed_form_matches_grid() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let r = 0.05 + 0.9 * i as f64 / 19.0;
        for j in 0..20 {
            let b = -5.0 + 10.0 * j as f64 / 19.0;
            for (sign, kind) in [(Sign::Plus, Optimum::Max), (Sign::Minus, Optimum::Min)] {
                let closed = phi_star(r, b, sign, MarxClass::Star).unwrap();
                let (_, oracle) = grid_extremum(r, b, kind, 1024).unwrap();
                worst = worst.max((closed - oracle).abs());
            }
        }
    }
    assert!(worst < 1e-9, "worst = {worst:e}");
    assert!(start.elapsed().as_secs_f64() < 30.0);
}

#[test]
fn ctc_closed_form_matches_curve_max() {
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let b = -2.0 + 4.0 * k as f64 / 49.0;
        let (_, max) = curve_extremum(b, 8192).unwrap();
        worst = worst.max((phi_ctc(b, Sign::Minus).finite().unwrap() + max).abs());
    }
    assert!(worst < 1e-6, "worst = {worst:e}");
}

#[test]
fn curve_maximizer_locations() {
    let (t, v) = curve_extremum(0.0, 4096).unwrap();
    assert!(t.abs() < 1e-6);
    assert!((v - 4f64.ln()).abs() < 1e-12);

    let (t, _) = curve_extremum(1.0, 4096).unwrap();
    assert!((t - 1.5 * PI).abs() < 1e-6, "t = {t}");

    let (t, _) = curve_extremum(0.1, 4096).unwrap();
    assert!(t.abs() <= tangency().u);

    // the two arcs give the same maximum at b0
    let (t, _) = curve_extremum(b0() + 1e-3, 4096).unwrap();
    assert!(t.abs() >= tangency().v);
}
