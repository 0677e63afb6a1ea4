//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use aaa_core::laplace::{classify, PointLocation};
use aaa_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{nearest, random_data, roots_of_unity, RandomRational};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

struct Check {
    ok: bool,
    detail: String,
}

impl Check {
    fn new() -> Self {
        Self {
            ok: true,
            detail: String::new(),
        }
    }

    fn require(&mut self, ok: bool, what: String) {
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(&what);
        if !ok {
            self.detail.push_str(" [FAILED]");
            self.ok = false;
        }
    }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn unit_square() -> BoundaryCurve {
    BoundaryCurve::polygon(vec![c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0)]).unwrap()
}

/// `r(θ) = 1 + 0.15 cos 5θ`, finely discretized so that the polyline's
/// vertex angles stay close to straight.
fn five_lobe() -> BoundaryCurve {
    let n = 20_000;
    let v = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            Complex64::from_polar(1.0 + 0.15 * (5.0 * t).cos(), t)
        })
        .collect();
    BoundaryCurve::new(v, None).unwrap()
}

fn exp_roots_of_unity() -> Check {
    let mut chk = Check::new();
    let t = Instant::now();
    let s = SampleSet::from_fn(roots_of_unity(100, 0.0), |z| z.exp()).unwrap();
    let fit = aaa_fit(&s, &AaaConfig { rel_tol: 1e-13, ..AaaConfig::default() }).unwrap();
    let elapsed = t.elapsed();
    let err = roots_of_unity(10_000, 0.5)
        .into_iter()
        .map(|z| (fit.approximant.eval(z) - z.exp()).norm())
        .fold(0.0, f64::max);
    let deg = fit.approximant.degree();
    chk.require(deg <= 8, format!("degree {deg} (<= 8)"));
    chk.require(err <= 1e-12, format!("max error {err:.2e} on 10000 points (<= 1e-12)"));
    chk.require(elapsed < Duration::from_secs(1), format!("time {} (< 1s)", secs(elapsed)));
    chk
}

fn zeta_reconstruction() -> Check {
    let mut chk = Check::new();
    let t = Instant::now();
    let z: Vec<Complex64> = (0..100).map(|k| c(4.0, -50.0 + 100.0 * k as f64 / 99.0)).collect();
    let s = SampleSet::from_fn(z, zeta_truncated).unwrap();
    let fit = aaa_fit(&s, &AaaConfig::default()).unwrap();
    let report = PoleZeroReport::new(&fit.approximant).unwrap();
    let elapsed = t.elapsed();
    let deg = fit.approximant.degree();
    chk.require((30..=45).contains(&deg), format!("degree {deg} (in [30, 45])"));

    // Zeros of zeta in the upper half-plane off the real axis lie in the
    // critical strip.
    let mut strip: Vec<Complex64> = report
        .zeros
        .iter()
        .copied()
        .filter(|z| z.im > 0.0 && z.re > 0.0 && z.re < 1.0)
        .collect();
    strip.sort_by(|a, b| a.im.total_cmp(&b.im));
    for (k, target) in [c(0.5, 14.134725), c(0.5, 21.022040)].into_iter().enumerate() {
        match strip.get(k) {
            Some(&z) => {
                let rel = (z - target).norm() / target.norm();
                chk.require(rel <= 5e-7, format!("zero {} = {z:.10} (rel dev {rel:.1e} <= 5e-7)", k + 1));
            }
            None => chk.require(false, format!("zero {} missing", k + 1)),
        }
    }
    let p = nearest(&report.poles, c(1.0, 0.0));
    let d = (p - 1.0).norm();
    chk.require(d <= 1e-6, format!("pole {p:.10} at distance {d:.1e} from 1 (<= 1e-6)"));
    chk.require(elapsed < Duration::from_secs(5), format!("time {} (< 5s)", secs(elapsed)));
    chk
}

fn abs_continuum() -> Check {
    let mut chk = Check::new();
    let t = Instant::now();
    let fit = fit_interval(|x| x.abs(), 80, (-1.0, 1.0)).unwrap();
    let elapsed = t.elapsed();
    let n = 1_000_000;
    let err = (0..n)
        .map(|k| -1.0 + 2.0 * k as f64 / (n - 1) as f64)
        .map(|x| (fit.approximant.eval(c(x, 0.0)).re - x.abs()).abs())
        .fold(0.0, f64::max);
    let dist = poles(&fit.approximant)
        .unwrap()
        .iter()
        .map(|p| p.norm())
        .fold(f64::INFINITY, f64::min);
    chk.require(err <= 1e-8, format!("max error {err:.2e} on 1e6 points (<= 1e-8)"));
    chk.require(
        fit.evaluations <= 2000,
        format!("{} evaluations (<= 2000)", fit.evaluations),
    );
    chk.require(dist <= 1e-5, format!("nearest pole to 0 at {dist:.1e} (<= 1e-5)"));
    chk.require(elapsed < Duration::from_secs(10), format!("time {} (< 10s)", secs(elapsed)));
    chk
}

fn minimax_winding() -> Check {
    let mut chk = Check::new();
    let pts = sample_boundary(&unit_square(), 340, true).unwrap();
    let s = SampleSet::from_fn(pts.clone(), |z| z.exp()).unwrap();
    let res = aaa_lawson(&s, &LawsonConfig::new(4)).unwrap();
    let errs: Vec<Complex64> = pts.iter().map(|&z| res.approximant.eval(z) - z.exp()).collect();
    chk.require(pts.len() >= 1000, format!("{} clustered samples (>= 1000)", pts.len()));
    match winding_number(&errs) {
        Ok(w) => chk.require(w == 9, format!("winding number {w} (== 9)")),
        Err(e) => chk.require(false, format!("winding number undefined: {e}")),
    }
    // Corner neighbourhoods: both |Re z| and |Im z| above 0.9.
    let away: Vec<f64> = pts
        .iter()
        .zip(&errs)
        .filter(|(z, _)| z.re.abs().min(z.im.abs()) <= 0.9)
        .map(|(_, e)| e.norm())
        .collect();
    let ratio = away.iter().cloned().fold(0.0, f64::max) / away.iter().cloned().fold(f64::INFINITY, f64::min);
    chk.require(ratio <= 2.0, format!("max/min |e| away from corners {ratio:.3} (<= 2)"));
    chk.detail.push_str(&format!("; minimax error {:.3e}", res.max_error));
    chk
}

/// Interior grid values of `sol` stay within the boundary data range, up to
/// the measured boundary error.
fn max_principle_holds(curve: &BoundaryCurve, sol: &HarmonicSolution, h: &dyn Fn(Complex64) -> f64) -> bool {
    let bdry = sample_boundary(curve, 4000, !curve.corners().is_empty()).unwrap();
    let (lo, hi) = bdry
        .iter()
        .map(|&z| h(z))
        .fold((f64::MAX, f64::MIN), |(a, b), v| (a.min(v), b.max(v)));
    let slack = sol.boundary_error + 1e-12;
    let v = curve.vertices();
    let (x0, x1) = v.iter().fold((f64::MAX, f64::MIN), |(a, b), z| (a.min(z.re), b.max(z.re)));
    let (y0, y1) = v.iter().fold((f64::MAX, f64::MIN), |(a, b), z| (a.min(z.im), b.max(z.im)));
    let n = 80;
    (0..=n).all(|i| {
        (0..=n).all(|j| {
            let z = c(x0 + (x1 - x0) * i as f64 / n as f64, y0 + (y1 - y0) * j as f64 / n as f64);
            if classify(curve, z) != PointLocation::Inside {
                return true;
            }
            let u = sol.eval_solution(z);
            u >= lo - slack && u <= hi + slack
        })
    })
}

struct SolvedCase {
    name: &'static str,
    curve: BoundaryCurve,
    h: Box<dyn Fn(Complex64) -> f64>,
    solution: HarmonicSolution,
}

fn laplace_oracle(solved: &mut Vec<SolvedCase>) -> Check {
    let mut chk = Check::new();

    let square = unit_square();
    let h = |z: Complex64| (z * z).re;
    let t = Instant::now();
    let sol = solve_dirichlet(&square, h, &LaplaceConfig::default()).unwrap();
    let elapsed = t.elapsed();
    chk.require(sol.boundary_error <= 1e-9, format!("square boundary error {:.2e} (<= 1e-9)", sol.boundary_error));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let interior = (0..1000)
        .map(|_| {
            let z = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            (sol.eval_solution(z) - h(z)).abs()
        })
        .fold(0.0, f64::max);
    chk.require(interior <= 1e-8, format!("interior error {interior:.2e} at 1000 points (<= 1e-8)"));
    chk.require(elapsed < Duration::from_secs(10), format!("square time {} (< 10s)", secs(elapsed)));
    solved.push(SolvedCase {
        name: "square Re(z^2)",
        curve: square,
        h: Box::new(h),
        solution: sol,
    });

    let lobe = five_lobe();
    let h = |z: Complex64| z.re.exp() * (2.0 * z.im).sin();
    let cfg = LaplaceConfig {
        n_per_side: 1000,
        poly_degree: 30,
        max_support: 60,
        ..LaplaceConfig::default()
    };
    let t = Instant::now();
    let sol = solve_dirichlet(&lobe, h, &cfg).unwrap();
    let elapsed = t.elapsed();
    chk.require(sol.boundary_error <= 1e-5, format!("five-lobe boundary error {:.2e} (<= 1e-5)", sol.boundary_error));
    chk.require(
        sol.exterior_poles.len() <= 250,
        format!("{} exterior poles (<= 250)", sol.exterior_poles.len()),
    );
    chk.require(elapsed < Duration::from_secs(10), format!("five-lobe time {} (< 10s)", secs(elapsed)));
    solved.push(SolvedCase {
        name: "five-lobe",
        curve: lobe,
        h: Box::new(h),
        solution: sol,
    });
    chk
}

fn property_suites(solved: &mut Vec<SolvedCase>) -> Check {
    let mut chk = Check::new();

    let (mut interp_ok, mut worst_norm) = (true, 0.0f64);
    for seed in 0..200u64 {
        let n = 2 + (seed as usize * 7) % 60;
        let s = random_data(n, seed);
        let cfg = AaaConfig {
            max_support: 1 + (seed as usize % 20),
            ..AaaConfig::default()
        };
        let r = aaa_fit(&s, &cfg).unwrap().approximant;
        interp_ok &= r
            .support_points()
            .iter()
            .zip(r.support_values())
            .all(|(&z, &f)| r.eval(z) == f);
        let norm = r.weights().iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt();
        worst_norm = worst_norm.max((norm - 1.0).abs());
    }
    chk.require(interp_ok, "exact interpolation at support points (200 fits)".into());
    chk.require(worst_norm <= 1e-12, format!("| |w| - 1 | <= {worst_norm:.1e} (<= 1e-12)"));

    let mut worst_identity = 0.0f64;
    for seed in 0..200u64 {
        let n = 4 + (seed as usize * 11) % 76;
        let s = random_data(n, seed + 1000);
        let m = (1 + seed as usize % 11).min(n - 1);
        let support: Vec<usize> = (0..m).map(|k| k * n / m).collect();
        let l = build_loewner(&s, &support).unwrap();
        let w = l.min_singular_vector().unwrap();
        let sp: Vec<Complex64> = support.iter().map(|&j| s.points()[j]).collect();
        let sv: Vec<Complex64> = support.iter().map(|&j| s.values()[j]).collect();
        let aw = l.entries().dot(&w);
        for (row, (&i, &z)) in l.row_indices().iter().zip(l.row_points()).enumerate() {
            let (mut num, mut den) = (c(0.0, 0.0), c(0.0, 0.0));
            for ((sj, fj), wj) in sp.iter().zip(&sv).zip(w.iter()) {
                num += wj * fj / (z - sj);
                den += wj / (z - sj);
            }
            // d(Z_i) (F_i - r(Z_i)) = F_i d(Z_i) - n(Z_i).
            let rhs = s.values()[i] * den - num;
            let scale: f64 = l.entries().row(row).iter().zip(w.iter()).map(|(a, b)| (a * b).norm()).sum();
            worst_identity = worst_identity.max((aw[row] - rhs).norm() / scale.max(1.0));
        }
    }
    chk.require(
        worst_identity <= 1e-12,
        format!("Loewner residual identity dev {worst_identity:.1e} (<= 1e-12)"),
    );

    let mut worst_recovery = 0.0f64;
    for d in 1..=10usize {
        for seed in 0..20u64 {
            let f = RandomRational::new(d, 100 * d as u64 + seed);
            let s = SampleSet::from_fn(roots_of_unity(4 * d, 0.0), |z| f.eval(z)).unwrap();
            let r = aaa_fit(&s, &AaaConfig::default()).unwrap().approximant;
            let test = roots_of_unity(500, 0.37);
            let scale = test.iter().map(|&z| f.eval(z).norm()).fold(0.0, f64::max);
            let err = test.iter().map(|&z| (r.eval(z) - f.eval(z)).norm()).fold(0.0, f64::max);
            worst_recovery = worst_recovery.max(err / scale);
        }
    }
    chk.require(
        worst_recovery <= 1e-11,
        format!("degree <= 10 recovery from 4d samples, rel error {worst_recovery:.1e} (<= 1e-11)"),
    );

    let mut worst_scaling = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..200u64 {
        let d = 1 + seed as usize % 8;
        let f = RandomRational::well_separated(d, seed + 5000);
        let s = SampleSet::from_fn(roots_of_unity(4 * d + 8, 0.0), |z| f.eval(z)).unwrap();
        let r = aaa_fit(&s, &AaaConfig::default()).unwrap().approximant;
        let k = Complex64::from_polar(10f64.powf(rng.random_range(-3.0..3.0)), rng.random_range(0.0..2.0 * PI));
        let a = PoleZeroReport::new(&r).unwrap();
        let b = PoleZeroReport::new(&r.scale_weights(k).unwrap()).unwrap();
        if a.poles.len() != b.poles.len() || a.zeros.len() != b.zeros.len() {
            worst_scaling = f64::INFINITY;
            continue;
        }
        for (p, res) in a.poles.iter().zip(&a.residues) {
            let q = nearest(&b.poles, *p);
            let j = b.poles.iter().position(|x| *x == q).unwrap();
            worst_scaling = worst_scaling
                .max((q - p).norm() / p.norm().max(1.0))
                .max((b.residues[j].value - res.value).norm() / res.value.norm().max(1.0));
        }
        for z in &a.zeros {
            worst_scaling = worst_scaling.max((nearest(&b.zeros, *z) - z).norm() / z.norm().max(1.0));
        }
    }
    chk.require(
        worst_scaling <= 1e-12,
        format!("weight-scale invariance of poles/zeros/residues dev {worst_scaling:.1e} (<= 1e-12)"),
    );

    let lshape = BoundaryCurve::polygon(vec![
        c(0.0, 0.0),
        c(2.0, 0.0),
        c(2.0, 1.0),
        c(1.0, 1.0),
        c(1.0, 2.0),
        c(0.0, 2.0),
    ])
    .unwrap();
    let h = |z: Complex64| (z.re * z.im).sin();
    let solution = solve_dirichlet(&lshape, h, &LaplaceConfig::default()).unwrap();
    solved.push(SolvedCase {
        name: "L-shape",
        curve: lshape,
        h: Box::new(h),
        solution,
    });
    for case in solved.iter() {
        chk.require(
            max_principle_holds(&case.curve, &case.solution, &case.h),
            format!("maximum principle on {}", case.name),
        );
    }
    chk
}

fn main() {
    let mut solved = Vec::new();
    let criteria: Vec<(&str, Box<dyn FnOnce(&mut Vec<SolvedCase>) -> Check>)> = vec![
        ("exp on roots of unity", Box::new(|_| exp_roots_of_unity())),
        ("zeta reconstruction", Box::new(|_| zeta_reconstruction())),
        ("|x| continuum fit", Box::new(|_| abs_continuum())),
        ("minimax winding", Box::new(|_| minimax_winding())),
        ("Laplace analytic oracle", Box::new(laplace_oracle)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failures = 0;
    let out = std::io::stdout();
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let chk = run(&mut solved);
        let tag = if chk.ok { "PASS" } else { "FAIL" };
        failures += usize::from(!chk.ok);
        writeln!(out.lock(), "acceptance {} {tag}: {name}: {}", k + 1, chk.detail).unwrap();
    }
    writeln!(out.lock(), "acceptance: {} of 6 criteria failed", failures).unwrap();
    if failures > 0 {
        std::process::exit(1);
    }
}
