//! Verification suites: closed-form identities, oracle agreement, Monte Carlo
//! containment and the power-deformation bound.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use varregion::ctc::{
    b0, b0_root, biernacki_samples, gamma, gamma_tangent_limits, p_branch, phi_ctc, pointwise_region_h,
    psi_minus_ctc, q_branch, tangency, RegionPolygon, STRIP_HALF_WIDTH,
};
use varregion::disk::{grunsky_region, phi_star, phi_star_via_critical, MarxClass};
use varregion::oracles::{
    curve_extremum, derive_seed, grid_extremum, random_measure, sample_convex, sample_ctc, sample_starlike, CtcSample,
    Optimum,
};
use varregion::polygon::{convex_hull, hausdorff_closed, polygon_contains, polyline_distance};
use varregion::power::{power_bound, power_bound_via_phi, power_eval, PowerExponent};
use varregion::Sign;

use crate::{CliError, Suite, VerifyArgs};

pub const STARLIKE_RADII: [f64; 3] = [0.1, 0.5, 0.9];
pub const CTC_RADII: [f64; 3] = [0.3, 0.6, 0.9];
pub const SHARPNESS_B: [f64; 7] = [0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0];
const STARLIKE_ATOMS: usize = 8;
const CTC_ATOMS: usize = 4;
const QUAD_ORDER: usize = 16;

/// Outcome of one check: the worst residual over all cases, compared with a
/// tolerance, and the first case that exceeded it.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub tol: f64,
    pub cases: usize,
    pub worst: f64,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(suite: &'static str, name: &'static str, tol: f64) -> Self {
        Check { suite, name, tol, cases: 0, worst: f64::NEG_INFINITY, failures: 0, first_failure: None }
    }

    /// Records a residual; it passes when `residual ≤ tol` (NaN fails).
    fn case(&mut self, residual: f64, inputs: impl FnOnce() -> String) {
        self.cases += 1;
        if residual > self.worst || residual.is_nan() {
            self.worst = residual;
        }
        if !(residual <= self.tol) {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{} / {}: {} (residual {residual:e})", self.suite, self.name, inputs()));
            }
        }
    }

    /// Records a failure that has no numeric residual (an error from the library).
    fn error(&mut self, message: String) {
        self.case(f64::NAN, || message);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub tol: Option<f64>,
}

impl VerifyConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn ctc_trials(&self) -> usize {
        (self.trials / 10).max(10)
    }
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| if n == 1 { a } else { a + (b - a) * k as f64 / (n - 1) as f64 })
}

pub fn identities(cfg: &VerifyConfig) -> Vec<Check> {
    const S: &str = "identities";
    let mut sum = Check::new(S, "starlike sum identity", cfg.tol(1e-10));
    let mut half = Check::new(S, "convex = half starlike", cfg.tol(1e-12));
    for r in linspace(0.05, 0.95, 20) {
        for b in linspace(-5.0, 5.0, 20) {
            let p = phi_star(r, b, Sign::Plus, MarxClass::Star).unwrap();
            let m = phi_star(r, b, Sign::Minus, MarxClass::Star).unwrap();
            sum.case((p + m + 2.0 * (1.0 - r * r).ln()).abs(), || format!("r={r} b={b}"));
            for (sign, s) in [(Sign::Plus, p), (Sign::Minus, m)] {
                let k = phi_star(r, b, sign, MarxClass::Convex).unwrap();
                half.case((k - 0.5 * s).abs(), || format!("r={r} b={b} sign={sign:?}"));
            }
        }
    }

    let mut even = Check::new(S, "ctc infimum is even", cfg.tol(0.0));
    for b in linspace(-5.0, 5.0, 201) {
        let d = phi_ctc(b, Sign::Minus).to_f64() - phi_ctc(-b, Sign::Minus).to_f64();
        even.case(d.abs(), || format!("b={b}"));
    }

    let mut gap0 = Check::new(S, "q(0) - p(0) = log 2", cfg.tol(1e-12));
    gap0.case((q_branch(0.0) - p_branch(0.0).unwrap() - 2f64.ln()).abs(), || "b=0".into());

    let mut meet = Check::new(S, "p(b0) = q(b0)", cfg.tol(1e-10));
    let bz = b0();
    meet.case((p_branch(bz).unwrap() - q_branch(bz)).abs(), || format!("b0={bz}"));

    let mut psi_cont = Check::new(S, "psi_minus continuous at |tan t| = b0", cfg.tol(1e-10));
    let t0 = bz.atan();
    for t in [t0, -t0] {
        let eps = 1e-12;
        match (psi_minus_ctc(t - eps), psi_minus_ctc(t + eps)) {
            (Ok(a), Ok(b)) => psi_cont.case((a - b).abs(), || format!("t={t}")),
            (Err(e), _) | (_, Err(e)) => psi_cont.error(format!("t={t}: {e}")),
        }
    }

    let mut gamma_c0 = Check::new(S, "gamma continuous at t = ±pi", cfg.tol(1e-12));
    let mut gamma_c1 = Check::new(S, "gamma' direction jump at t = ±pi", cfg.tol(0.0));
    for t in [PI, -PI] {
        let inner = (Complex64::new(1.0, 0.0) + 3.0 * Complex64::cis(t)).ln();
        let inner = Complex64::new(inner.re, t.signum() * inner.im.abs());
        gamma_c0.case((inner - gamma(t).unwrap()).norm(), || format!("t={t}"));
        let (l, r) = gamma_tangent_limits(t).unwrap();
        gamma_c1.case((l.arg() - r.arg()).abs(), || format!("t={t} left={l} right={r}"));
    }

    let mut dual = Check::new(S, "b0 analytic vs tangency", cfg.tol(1e-8));
    let pair = tangency();
    match b0_root(1e-12) {
        Ok(b) => dual.case((b - pair.b0_geo).abs(), || format!("analytic={b} geometric={}", pair.b0_geo)),
        Err(e) => dual.error(e.to_string()),
    }
    let mut resid = Check::new(S, "tangency residuals", cfg.tol(1e-9));
    resid.case(pair.residuals().max_abs(), || format!("u={} v={}", pair.u, pair.v));

    vec![sum, half, even, gap0, meet, psi_cont, gamma_c0, gamma_c1, dual, resid]
}

pub fn oracle(cfg: &VerifyConfig) -> Vec<Check> {
    const S: &str = "oracle";
    let mut grid = Check::new(S, "starlike closed form vs grid", cfg.tol(1e-9));
    let mut crit = Check::new(S, "starlike closed form vs critical angles", cfg.tol(1e-12));
    for r in linspace(0.05, 0.95, 20) {
        for b in linspace(-5.0, 5.0, 20) {
            for (sign, kind) in [(Sign::Plus, Optimum::Max), (Sign::Minus, Optimum::Min)] {
                let closed = phi_star(r, b, sign, MarxClass::Star).unwrap();
                let (_, oracle) = grid_extremum(r, b, kind, 1024).unwrap();
                grid.case((closed - oracle).abs(), || format!("r={r} b={b} sign={sign:?}"));
                let via = phi_star_via_critical(r, b, sign, MarxClass::Star).unwrap();
                crit.case((closed - via).abs(), || format!("r={r} b={b} sign={sign:?}"));
            }
        }
    }

    let mut curve = Check::new(S, "ctc closed form vs curve max", cfg.tol(1e-6));
    for b in linspace(-2.0, 2.0, 50) {
        let (_, max) = curve_extremum(b, 8192).unwrap();
        let phi = phi_ctc(b, Sign::Minus).to_f64();
        curve.case((phi + max).abs(), || format!("b={b}"));
    }

    let mut cross = Check::new(S, "h-image vs Biernacki hull (r=0.5)", cfg.tol(5e-3));
    match (pointwise_region_h(0.5, 4096), biernacki_samples(0.5, 100_000)) {
        (Ok(h), Ok(cloud)) => {
            let hull = convex_hull(&cloud);
            let d = hausdorff_closed(&h.vertices(), &hull);
            cross.case(d, || format!("r=0.5 samples=100000 hull vertices={}", hull.len()));
        }
        (Err(e), _) | (_, Err(e)) => cross.error(e.to_string()),
    }

    vec![grid, crit, curve, cross]
}

/// Amount by which `w` lies outside the polygon (0 inside).
fn polygon_excess(poly: &RegionPolygon, w: Complex64) -> f64 {
    if polygon_contains(poly.vertices(), w, 0.0) && w.im.abs() < STRIP_HALF_WIDTH {
        0.0
    } else {
        polyline_distance(poly.vertices(), w, true).max(f64::MIN_POSITIVE)
    }
}

/// Close-to-convex samples at `r`, seeded by `(seed, radius index, k)`.
pub fn ctc_values(seed: u64, ri: u64, r: f64, n: usize) -> Vec<(u64, Result<Complex64, varregion::Error>)> {
    let master = derive_seed(seed, 1000 + ri);
    (0..n as u64)
        .map(|k| {
            let s = CtcSample::from_seed(derive_seed(master, k), CTC_ATOMS);
            (s.seed, sample_ctc(&s, r, QUAD_ORDER))
        })
        .collect()
}

pub fn containment(cfg: &VerifyConfig) -> Vec<Check> {
    const S: &str = "containment";
    let slack = cfg.tol(1e-9);
    let mut marx = Check::new(S, "starlike in Marx region", slack);
    let mut grunsky = Check::new(S, "starlike in Grunsky disk", slack);
    let mut convex = Check::new(S, "convex in Marx region", slack);
    for (ri, &r) in STARLIKE_RADII.iter().enumerate() {
        let disk = grunsky_region(r).unwrap();
        let master = derive_seed(cfg.seed, ri as u64);
        for k in 0..cfg.trials as u64 {
            let seed = derive_seed(master, k);
            let m = random_measure(seed, STARLIKE_ATOMS);
            let w = sample_starlike(&m, r);
            let zeta = Complex64::new(1.0, 0.0) - (-w / 2.0).exp();
            let strip = if w.im.abs() < PI { 0.0 } else { f64::INFINITY };
            marx.case((zeta.norm() - r).max(strip), || format!("r={r} seed={seed}"));
            grunsky.case((w - disk.center).norm() - disk.radius, || format!("r={r} seed={seed}"));
            let c = sample_convex(&m, r);
            let zeta = Complex64::new(1.0, 0.0) - (-c).exp();
            let strip = if c.im.abs() < PI / 2.0 { 0.0 } else { f64::INFINITY };
            convex.case((zeta.norm() - r).max(strip), || format!("r={r} seed={seed}"));
        }
    }

    let poly = RegionPolygon::shared();
    let mut region = Check::new(S, "close-to-convex in W(C)", cfg.tol(1e-6));
    let mut strip = Check::new(S, "close-to-convex strip |Im w| < 3pi/2", cfg.tol(0.0));
    let mut subclass = Check::new(S, "close-to-convex in Grunsky disk", slack);
    let mut sharp = Check::new(S, "no sample beats inf Re w + b Im w", cfg.tol(1e-6));
    let mut mins = [f64::INFINITY; SHARPNESS_B.len()];
    let mut argmin = [(0.0, 0u64); SHARPNESS_B.len()];
    for (ri, &r) in CTC_RADII.iter().enumerate() {
        let disk = grunsky_region(r).unwrap();
        for (seed, w) in ctc_values(cfg.seed, ri as u64, r, cfg.ctc_trials()) {
            let w = match w {
                Ok(w) => w,
                Err(e) => {
                    region.error(format!("r={r} seed={seed}: {e}"));
                    continue;
                }
            };
            region.case(polygon_excess(poly, w), || format!("r={r} seed={seed} w={w}"));
            // strictly inside: a zero residual is only allowed for |Im w| < 3π/2
            let over = w.im.abs() - STRIP_HALF_WIDTH;
            strip.case(if over < 0.0 { 0.0 } else { over.max(f64::MIN_POSITIVE) }, || format!("r={r} seed={seed} w={w}"));
            subclass.case((w - disk.center).norm() - disk.radius, || format!("r={r} seed={seed}"));
            for (i, &b) in SHARPNESS_B.iter().enumerate() {
                let v = w.re + b * w.im;
                if v < mins[i] {
                    mins[i] = v;
                    argmin[i] = (r, seed);
                }
            }
        }
    }
    for (i, &b) in SHARPNESS_B.iter().enumerate() {
        let bound = phi_ctc(b, Sign::Minus).to_f64();
        let (r, seed) = argmin[i];
        sharp.case(bound - mins[i], || format!("b={b} r={r} seed={seed} min={} bound={bound}", mins[i]));
    }
    vec![marx, grunsky, convex, region, strip, subclass, sharp]
}

pub const POWER_A: [f64; 6] = [0.5, -0.5, 1.0, -1.0, 2.0, -2.0];

pub fn powerdef(cfg: &VerifyConfig) -> Vec<Check> {
    const S: &str = "powerdef";
    let mut formula = Check::new(S, "closed form = a Phi^-(b/a)", cfg.tol(1e-12));
    for &a in &POWER_A {
        for b in linspace(-1.0, 1.0, 41) {
            let c = PowerExponent::new(a, b);
            match (power_bound(c), power_bound_via_phi(c)) {
                (Ok(x), Ok(y)) => formula.case((x.value - y).abs(), || format!("a={a} b={b}")),
                (Err(e), _) | (_, Err(e)) => formula.error(format!("a={a} b={b}: {e}")),
            }
        }
    }

    let mut cont = Check::new(S, "continuity at |b/a| = b0", cfg.tol(1e-9));
    for &a in &POWER_A {
        for s in [1.0, -1.0] {
            let b = s * a.abs() * b0();
            let lo = power_bound(PowerExponent::new(a, b * (1.0 - 1e-14))).unwrap().value;
            let hi = power_bound(PowerExponent::new(a, b * (1.0 + 1e-14))).unwrap().value;
            cont.case((lo - hi).abs(), || format!("a={a} b={b}"));
        }
    }

    let mut sampled = Check::new(S, "sampled values respect the bound", cfg.tol(1e-6));
    let values = ctc_values(cfg.seed, 7, 0.9, cfg.ctc_trials());
    for &a in &POWER_A {
        for b in [-1.0, -0.3, 0.0, 0.2, 1.0] {
            let c = PowerExponent::new(a, b);
            let bound = power_bound(c).unwrap().value;
            for (seed, w) in &values {
                let Ok(w) = w else { continue };
                let v = power_eval(*w, c);
                // infimum for a > 0, supremum for a < 0
                let excess = if a > 0.0 { bound - v } else { v - bound };
                sampled.case(excess, || format!("a={a} b={b} r=0.9 seed={seed}"));
            }
        }
    }

    let mut zero = Check::new(S, "a = 0 rejected", 0.0);
    zero.case(if power_bound(PowerExponent::new(0.0, 1.0)).is_err() { 0.0 } else { 1.0 }, || "a=0 b=1".into());

    vec![formula, cont, sampled, zero]
}

pub fn run_suites(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = vec![];
    if matches!(suite, Suite::Identities | Suite::All) {
        out.extend(identities(cfg));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        out.extend(oracle(cfg));
    }
    if matches!(suite, Suite::Containment | Suite::All) {
        out.extend(containment(cfg));
    }
    if matches!(suite, Suite::Powerdef | Suite::All) {
        out.extend(powerdef(cfg));
    }
    out
}

pub fn render_table(checks: &[Check]) -> String {
    let mut s = format!("{:<12} {:<42} {:>7} {:>12} {:>9}  {}\n", "suite", "check", "cases", "max resid", "tol", "status");
    for c in checks {
        s.push_str(&format!(
            "{:<12} {:<42} {:>7} {:>12.3e} {:>9.1e}  {}\n",
            c.suite,
            c.name,
            c.cases,
            c.worst,
            c.tol,
            if c.passed() { "PASS" } else { "FAIL" }
        ));
    }
    s
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    if let Some(t) = args.tol {
        if !(t >= 0.0) {
            return Err(CliError::Usage(format!("--tol {t} must be nonnegative")));
        }
    }
    let cfg = VerifyConfig { seed: args.seed, trials: args.trials, tol: args.tol };
    let checks = run_suites(args.suite, &cfg);
    let w = |e| CliError::Io { path: "<stdout>".into(), source: e };
    write!(out, "{}", render_table(&checks)).map_err(w)?;
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    writeln!(out, "# seed={} trials={}: {} of {} checks passed", cfg.seed, cfg.trials, checks.len() - failed.len(), checks.len())
        .map_err(w)?;
    match failed.first() {
        None => Ok(()),
        Some(c) => {
            let case = c.first_failure.clone().unwrap_or_else(|| format!("{} / {}: no cases ran", c.suite, c.name));
            writeln!(out, "# first failure: {case}").map_err(w)?;
            Err(CliError::Verification(case))
        }
    }
}
