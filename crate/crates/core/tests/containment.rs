use num_complex::Complex64;
use std::time::Instant;
use varregion::ctc::{phi_ctc, region_contains, RegionPolygon, STRIP_HALF_WIDTH};
use varregion::disk::{grunsky_region, marx_contains, MarxClass};
use varregion::oracles::{derive_seed, random_measure, sample_convex, sample_ctc, sample_starlike, CtcSample};
use varregion::Sign;

#[test]
fn starlike_and_convex_samples_stay_inside() {
    for (i, &r) in [0.1, 0.5, 0.9].iter().enumerate() {
        let disk = grunsky_region(r).unwrap();
        for k in 0..2000u64 {
            let m = random_measure(derive_seed(i as u64, k), 6);
            let w = sample_starlike(&m, r);
            assert!(marx_contains(w, r, MarxClass::Star), "r = {r}, k = {k}");
            assert!(disk.contains(w, 1e-9));
            assert!(marx_contains(sample_convex(&m, r), r, MarxClass::Convex));
        }
    }
}

#[test]
fn ctc_samples_stay_inside_region() {
    let poly = RegionPolygon::shared();
    let start = Instant::now();
    for &r in &[0.3, 0.6, 0.9] {
        let disk = grunsky_region(r).unwrap();
        for k in 0..100u64 {
            let s = CtcSample::from_seed(derive_seed(17, k), 4);
            let w = sample_ctc(&s, r, 16).unwrap();
            assert!(poly.contains(w, 1e-6), "r = {r}, seed = {}", s.seed);
            assert!(w.im.abs() < STRIP_HALF_WIDTH);
            // C is a subclass of S
            assert!(disk.contains(w, 1e-9));
        }
    }
    eprintln!("300 ctc samples in {:?}", start.elapsed());
}

#[test]
fn sampled_values_never_beat_the_sharp_bound() {
    let samples: Vec<Complex64> = (0..200u64)
        .map(|k| sample_ctc(&CtcSample::from_seed(derive_seed(3, k), 3), 0.9, 16).unwrap())
        .collect();
    for &b in &[0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0] {
        let bound = phi_ctc(b, Sign::Minus).finite().unwrap();
        let min = samples.iter().map(|w| w.re + b * w.im).fold(f64::INFINITY, f64::min);
        assert!(min >= bound - 1e-6, "b = {b}: {min} < {bound}");
    }
}

#[test]
fn region_membership_near_support_points() {
    // the support point of the b = 0 functional is -γ(0) = -log 4
    let w = Complex64::new(-(4f64.ln()), 0.0);
    assert!(region_contains(w + 1e-3, 50.0, 4096).unwrap());
    assert!(!region_contains(w - 1e-3, 50.0, 4096).unwrap());
}
