use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

/// A probability measure on the circle with finitely many atoms
/// `(angle, weight)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<(f64, f64)>,
}

impl AtomicMeasure {
    /// Normalizes the weights to sum to one. Panics on an empty list or on a
    /// nonpositive weight.
    pub fn new(atoms: Vec<(f64, f64)>) -> Self {
        assert!(!atoms.is_empty(), "a measure needs at least one atom");
        assert!(atoms.iter().all(|&(_, w)| w > 0.0 && w.is_finite()), "weights must be positive");
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        let atoms = atoms.into_iter().map(|(th, w)| (th.rem_euclid(TAU), w / total)).collect();
        AtomicMeasure { atoms }
    }

    pub fn point_mass(angle: f64) -> Self {
        AtomicMeasure::new(vec![(angle, 1.0)])
    }

    /// `k` equal atoms at equally spaced angles.
    pub fn uniform(k: usize) -> Self {
        AtomicMeasure::new((0..k).map(|j| (TAU * j as f64 / k as f64, 1.0)).collect())
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn total_weight(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }
}

/// splitmix64 finalizer; derives independent per-trial seeds from a master
/// seed so that results do not depend on how trials are scheduled.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A measure with a uniform number of atoms in `[1, max_atoms]`, uniform
/// angles and flat-Dirichlet weights, fully determined by the seed.
pub fn random_measure(seed: u64, max_atoms: usize) -> AtomicMeasure {
    assert!(max_atoms >= 1, "max_atoms must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=max_atoms);
    let atoms = (0..k)
        .map(|_| {
            let angle = rng.random_range(0.0..TAU);
            let w: f64 = rng.sample(Exp1);
            // Exp1 can return 0 with negligible probability
            (angle, w.max(f64::MIN_POSITIVE))
        })
        .collect();
    AtomicMeasure::new(atoms)
}

/// Data for one close-to-convex function `f` with `f' = g'·p`, where
/// `g'(z) = Π(1 - z e^{-iθ_k})^{-2λ_k}` (convex `g`) and
/// `p(z) = Σ μ_j (1 + z e^{-iφ_j})/(1 - z e^{-iφ_j})` (`Re p > 0`, `p(0) = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct CtcSample {
    pub convex_measure: AtomicMeasure,
    pub herglotz_measure: AtomicMeasure,
    pub seed: u64,
}

impl CtcSample {
    pub fn from_seed(seed: u64, max_atoms: usize) -> Self {
        CtcSample {
            convex_measure: random_measure(derive_seed(seed, 0), max_atoms),
            herglotz_measure: random_measure(derive_seed(seed, 1), max_atoms),
            seed,
        }
    }
}
