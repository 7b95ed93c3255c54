//! Residual construction and growth-exponent measurement: each experiment
//! evaluates a cancellation residual over a grid of scales, fits the
//! log-log slope, and records the ratio against a √scale·log²scale
//! normalizer.

use crate::arith::{euler_phi, mobius, Character, RationalPhase, VonMangoldtTable};
use crate::bump::TestFunction;
use crate::error::{Error, Result};
use crate::special::{chi_asymptotic_1ms, chi_asymptotic_conj, chi_factor, e_of};
use crate::sums::{
    gonek_integral, plain_smooth, prime_sum_smooth, twisted_cheby, zero_sum_sharp,
    zero_sum_smooth, char_sum_smooth, ZeroScale,
};
use crate::zeros::ZeroTable;
use num_complex::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Residuals below this are treated as exact zeros and flagged rather than
/// fitted.
pub const RESIDUAL_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    Lemma23,
    Lemma24,
    Thm31,
    Cor32,
    Bound11,
    Lemma22,
    Gonek,
    Stirling,
}

impl Experiment {
    pub fn as_str(&self) -> &'static str {
        match self {
            Experiment::Lemma23 => "lemma23",
            Experiment::Lemma24 => "lemma24",
            Experiment::Thm31 => "thm31",
            Experiment::Cor32 => "cor32",
            Experiment::Bound11 => "bound11",
            Experiment::Lemma22 => "lemma22",
            Experiment::Gonek => "gonek",
            Experiment::Stirling => "stirling",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "lemma23" => Experiment::Lemma23,
            "lemma24" => Experiment::Lemma24,
            "thm31" => Experiment::Thm31,
            "cor32" => Experiment::Cor32,
            "bound11" => Experiment::Bound11,
            "lemma22" => Experiment::Lemma22,
            "gonek" => Experiment::Gonek,
            "stirling" => Experiment::Stirling,
            _ => return None,
        })
    }
}

/// How the `normalized` column of a series is derived from the residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalizer {
    None,
    SqrtLog2,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ResidualPoint {
    pub scale: f64,
    pub residual: f64,
    pub normalized: f64,
}

/// A residual curve over scales with its fitted growth exponents.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualSeries {
    pub experiment: Experiment,
    pub points: Vec<ResidualPoint>,
    pub fitted_slope: f64,
    pub fitted_intercept: f64,
    /// Slope after dividing the log²-factor out of the residual.
    pub normalized_slope: f64,
    /// True when at least one residual sat at the floor.
    pub floored: bool,
    pub normalizer: Normalizer,
    /// Per-experiment scalar witnesses (cancellation ratios, envelope
    /// constants, second-case magnitudes).
    pub extras: BTreeMap<String, f64>,
}

impl ResidualSeries {
    fn build(
        experiment: Experiment,
        raw: Vec<(f64, f64)>,
        normalizer: Normalizer,
        extras: BTreeMap<String, f64>,
    ) -> Result<Self> {
        let points: Vec<ResidualPoint> = raw
            .iter()
            .map(|&(s, r)| ResidualPoint {
                scale: s,
                residual: r,
                normalized: match normalizer {
                    Normalizer::None => r,
                    Normalizer::SqrtLog2 => r / (s.sqrt() * s.ln().powi(2)),
                },
            })
            .collect();
        // slopes are defined only from 5 points up; shorter series (the
        // four-height gonek scan) carry NaN fits
        let (fitted_slope, fitted_intercept, normalized_slope, floored) = if raw.len() >= 5 {
            let (slope, intercept, floored) = fit_exponent(&raw)?;
            let normalized_pts: Vec<(f64, f64)> = raw
                .iter()
                .map(|&(s, r)| (s, r / s.ln().powi(2)))
                .collect();
            let (norm_slope, _, _) = fit_exponent(&normalized_pts)?;
            (slope, intercept, norm_slope, floored)
        } else {
            (f64::NAN, f64::NAN, f64::NAN, false)
        };
        Ok(ResidualSeries {
            experiment,
            points,
            fitted_slope,
            fitted_intercept,
            normalized_slope,
            floored,
            normalizer,
            extras,
        })
    }

    /// Two fits with the largest-scale point removed; used by the slope
    /// stability check.
    pub fn slope_without_last(&self) -> Result<f64> {
        let raw: Vec<(f64, f64)> = self.points[..self.points.len() - 1]
            .iter()
            .map(|p| (p.scale, p.residual))
            .collect();
        Ok(fit_exponent(&raw)?.0)
    }

    /// CSV emission: `scale,residual,normalized_residual`, one row per
    /// point, byte-stable across runs.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("scale,residual,normalized_residual\n");
        for p in &self.points {
            out.push_str(&format!(
                "{:.17e},{:.17e},{:.17e}\n",
                p.scale, p.residual, p.normalized
            ));
        }
        out
    }
}

/// Least squares of log residual against log scale. Non-positive residuals
/// are floored and flagged; an all-floored series is a degenerate fit.
/// Returns (slope, intercept, any_floored).
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<(f64, f64, bool)> {
    if points.len() < 5 {
        return Err(Error::DegenerateFit {
            msg: format!("need at least 5 points, got {}", points.len()),
        });
    }
    let mut floored = false;
    let mut xs = Vec::with_capacity(points.len());
    let mut ys = Vec::with_capacity(points.len());
    for &(s, r) in points {
        let r = if r > RESIDUAL_FLOOR {
            r
        } else {
            floored = true;
            RESIDUAL_FLOOR
        };
        xs.push(s.ln());
        ys.push(r.ln());
    }
    if points.iter().all(|&(_, r)| r <= RESIDUAL_FLOOR) {
        return Err(Error::DegenerateFit {
            msg: "all residuals at the floor".into(),
        });
    }
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return Err(Error::DegenerateFit {
            msg: "degenerate scale grid".into(),
        });
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok((slope, intercept, floored))
}

/// Log-spaced grid from lo to hi with the given density (points per decade
/// of scale); both endpoints included.
pub fn log_grid(lo: f64, hi: f64, points_per_decade: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && points_per_decade > 0);
    let decades = (hi / lo).log10();
    let n = (decades * points_per_decade as f64).ceil() as usize;
    (0..=n)
        .map(|i| lo * 10f64.powf(decades * i as f64 / n as f64))
        .collect()
}

/// Sharp-sum residual Σ₁(T) + Σ₂(T/2πξ) over a grid of heights T.
///
/// The extras record, at the largest grid point, the separate magnitudes
/// |Σ₁|, |Σ₂| and the cancellation ratio (|Σ₁|+|Σ₂|)/|residual|.
pub fn run_thm31(
    xi: RationalPhase,
    t_grid: &[f64],
    zeros: &ZeroTable,
    lambda: &VonMangoldtTable,
) -> Result<ResidualSeries> {
    let mut raw = Vec::with_capacity(t_grid.len());
    let mut extras = BTreeMap::new();
    for (i, &t) in t_grid.iter().enumerate() {
        let s1 = zero_sum_sharp(xi.value(), t, zeros)?;
        let s2 = twisted_cheby(xi, t / (2.0 * PI * xi.value()), lambda)?;
        let r = s1.value + s2.value;
        raw.push((t, r.norm()));
        if i == t_grid.len() - 1 {
            let moduli = s1.value.norm() + s2.value.norm();
            extras.insert("sum_moduli_at_top".into(), moduli);
            extras.insert("residual_at_top".into(), r.norm());
            extras.insert("cancellation_ratio".into(), moduli / r.norm());
        }
    }
    ResidualSeries::build(Experiment::Thm31, raw, Normalizer::SqrtLog2, extras)
}

/// Smoothed residual zero_sum(ByXiX) + prime_sum over a grid of X.
pub fn run_cor32(
    xi: RationalPhase,
    x_grid: &[f64],
    bump: &TestFunction,
    zeros: &ZeroTable,
    lambda: &VonMangoldtTable,
) -> Result<ResidualSeries> {
    let mut raw = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let z = zero_sum_smooth(xi.value(), x, ZeroScale::ByXiX, bump, zeros)?;
        let p = prime_sum_smooth(xi, x, bump, lambda)?;
        raw.push((x, (z.value + p.value).norm()));
    }
    ResidualSeries::build(Experiment::Cor32, raw, Normalizer::SqrtLog2, BTreeMap::new())
}

/// Main-term residual zero_sum(scale) + (μ(q)/φ(q))·C_ℬ·X.
pub fn run_bound11(
    xi: RationalPhase,
    x_grid: &[f64],
    bump: &TestFunction,
    scale: ZeroScale,
    zeros: &ZeroTable,
) -> Result<ResidualSeries> {
    let q = xi.denominator();
    let coeff = mobius(q) as f64 / euler_phi(q) as f64;
    let cb = bump.integral()?;
    let mut raw = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let z = zero_sum_smooth(xi.value(), x, scale, bump, zeros)?;
        let r = z.value + Complex64::new(coeff * cb * x, 0.0);
        raw.push((x, r.norm()));
    }
    let mut extras = BTreeMap::new();
    extras.insert("main_term_coefficient".into(), coeff);
    ResidualSeries::build(Experiment::Bound11, raw, Normalizer::SqrtLog2, extras)
}

/// |plain_smooth − C_ℬ·X| over a grid of X.
pub fn run_lemma23(
    x_grid: &[f64],
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
) -> Result<ResidualSeries> {
    let cb = bump.integral()?;
    let mut raw = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let s = plain_smooth(x, bump, lambda)?;
        raw.push((x, (s.value - Complex64::new(cb * x, 0.0)).norm()));
    }
    ResidualSeries::build(Experiment::Lemma23, raw, Normalizer::SqrtLog2, BTreeMap::new())
}

/// |prime_sum_smooth − (μ(q)/φ(q))·C_ℬ·X| over a grid of X.
pub fn run_lemma24(
    xi: RationalPhase,
    x_grid: &[f64],
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
) -> Result<ResidualSeries> {
    let q = xi.denominator();
    let coeff = mobius(q) as f64 / euler_phi(q) as f64;
    let cb = bump.integral()?;
    let mut raw = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let s = prime_sum_smooth(xi, x, bump, lambda)?;
        raw.push((x, (s.value - Complex64::new(coeff * cb * x, 0.0)).norm()));
    }
    let mut extras = BTreeMap::new();
    extras.insert("main_term_coefficient".into(), coeff);
    ResidualSeries::build(Experiment::Lemma24, raw, Normalizer::SqrtLog2, extras)
}

/// |char_sum_smooth| over a grid of X (the whole sum is the residual).
pub fn run_lemma22(
    chi: &Character,
    x_grid: &[f64],
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
) -> Result<ResidualSeries> {
    let mut raw = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let s = char_sum_smooth(chi, x, bump, lambda)?;
        raw.push((x, s.value.norm()));
    }
    ResidualSeries::build(Experiment::Lemma22, raw, Normalizer::SqrtLog2, BTreeMap::new())
}

/// Worst-case t·|exact/main-term − 1| over σ ∈ {−1, 0, 1/2, 1, 2} and both
/// large-t expansions, per t.
pub fn run_stirling_scan(t_grid: &[f64]) -> Result<ResidualSeries> {
    const SIGMAS: [f64; 5] = [-1.0, 0.0, 0.5, 1.0, 2.0];
    let mut raw = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let mut worst: f64 = 0.0;
        for &sigma in &SIGMAS {
            let s = Complex64::new(sigma, t);
            let exact_1ms = chi_factor(Complex64::new(1.0, 0.0) - s)?;
            let main_1ms = chi_asymptotic_1ms(s)?;
            worst = worst.max(t * (exact_1ms / main_1ms - 1.0).norm());
            let exact_conj = chi_factor(s.conj())?;
            let main_conj = chi_asymptotic_conj(s)?;
            worst = worst.max(t * (exact_conj / main_conj - 1.0).norm());
        }
        raw.push((t, worst));
    }
    ResidualSeries::build(Experiment::Stirling, raw, Normalizer::None, BTreeMap::new())
}

/// Envelope shape of the vertical-segment integral's error term:
/// (T^{c−1/2} + T^{c+1/2}/(|T−2πr| + √T)) · r^{−c}.
pub fn gonek_envelope_shape(r: f64, c: f64, t: f64) -> f64 {
    (t.powf(c - 0.5) + t.powf(c + 0.5) / ((t - 2.0 * PI * r).abs() + t.sqrt())) * r.powf(-c)
}

/// |integral − e(−r)| at r = 2, c = 1 over a grid of heights T, recorded
/// against the envelope shape with a fitted (median-ratio) constant.
///
/// Extras: the fitted constant, the worst ratio against the fitted
/// envelope, and the second-case magnitude at r = 100, T = 100 with its
/// separation from the first-case value.
pub fn run_gonek_scan(t_grid: &[f64]) -> Result<ResidualSeries> {
    let (r, c) = (2.0, 1.0);
    let main = e_of(-r);
    let mut raw = Vec::with_capacity(t_grid.len());
    let mut ratios = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let v = gonek_integral(r, c, t)?;
        let err = (v.value - main).norm();
        raw.push((t, err));
        ratios.push(err / gonek_envelope_shape(r, c, t));
    }
    let mut sorted = ratios.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let fitted_constant = sorted[sorted.len() / 2];
    let worst_ratio = sorted.last().copied().unwrap_or(0.0);

    let first = gonek_integral(r, c, 100.0)?;
    let second = gonek_integral(100.0, c, 100.0)?;

    let mut extras = BTreeMap::new();
    extras.insert("fitted_envelope_constant".into(), fitted_constant);
    extras.insert(
        "worst_ratio_vs_fitted".into(),
        if fitted_constant > 0.0 {
            worst_ratio / fitted_constant
        } else {
            0.0
        },
    );
    extras.insert("first_case_modulus".into(), first.value.norm());
    extras.insert("second_case_modulus".into(), second.value.norm());
    extras.insert(
        "case_separation".into(),
        first.value.norm() / second.value.norm(),
    );
    ResidualSeries::build(Experiment::Gonek, raw, Normalizer::None, extras)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{sieve_von_mangoldt, CharacterTable};
    use crate::zeros::find_zeros;

    #[test]
    fn fit_recovers_exact_power_law() {
        let pts: Vec<(f64, f64)> = log_grid(100.0, 1e6, 12)
            .into_iter()
            .map(|s| (s, s.sqrt()))
            .collect();
        let (slope, intercept, floored) = fit_exponent(&pts).unwrap();
        assert!((slope - 0.5).abs() < 1e-12);
        assert!(intercept.abs() < 1e-10);
        assert!(!floored);
    }

    #[test]
    fn fit_with_log_factor_normalizes_to_half() {
        let pts: Vec<(f64, f64)> = log_grid(100.0, 1e6, 12)
            .into_iter()
            .map(|s| (s, s.sqrt() * s.ln().powi(2)))
            .collect();
        let (raw_slope, _, _) = fit_exponent(&pts).unwrap();
        assert!(raw_slope > 0.5);
        let normalized: Vec<(f64, f64)> =
            pts.iter().map(|&(s, r)| (s, r / s.ln().powi(2))).collect();
        let (norm_slope, _, _) = fit_exponent(&normalized).unwrap();
        assert!((norm_slope - 0.5).abs() < 0.02);
    }

    #[test]
    fn fit_edge_cases() {
        let constant: Vec<(f64, f64)> = log_grid(10.0, 1e4, 4)
            .into_iter()
            .map(|s| (s, 3.25))
            .collect();
        let (slope, _, _) = fit_exponent(&constant).unwrap();
        assert!(slope.abs() < 1e-12);

        // zero residuals flagged, all-zero degenerate
        let mut with_zero = constant.clone();
        with_zero[3].1 = 0.0;
        let (_, _, floored) = fit_exponent(&with_zero).unwrap();
        assert!(floored);
        let zeros: Vec<(f64, f64)> = constant.iter().map(|&(s, _)| (s, 0.0)).collect();
        assert!(matches!(fit_exponent(&zeros), Err(Error::DegenerateFit { .. })));
        assert!(matches!(fit_exponent(&constant[..4]), Err(Error::DegenerateFit { .. })));
    }

    #[test]
    fn log_grid_density() {
        let g = log_grid(100.0, 1e4, 12);
        assert_eq!(g.len(), 25); // 2 decades · 12 + endpoint
        assert_eq!(g[0], 100.0);
        assert!((g[24] - 1e4).abs() < 1e-9);
        for w in g.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn lemma23_small_scale() {
        let lambda = sieve_von_mangoldt(25_000).unwrap();
        let bump = TestFunction::canonical(1.0, 2.0).unwrap();
        let grid = log_grid(100.0, 1e4, 12);
        let series = run_lemma23(&grid, &bump, &lambda).unwrap();
        let cb = bump.integral().unwrap();
        // pointwise: residual within 4√X log²X (the bound shape with an
        // empirical constant cap)
        for p in &series.points {
            assert!(
                p.residual <= 4.0 * p.scale.sqrt() * p.scale.ln().powi(2),
                "residual {} at X={}",
                p.residual,
                p.scale
            );
            assert!(p.residual < cb * p.scale); // far below the main term
        }
        assert!(series.fitted_slope <= 0.75, "slope {}", series.fitted_slope);
        // stability: dropping the largest point moves the slope < 0.1
        let alt = series.slope_without_last().unwrap();
        assert!((alt - series.fitted_slope).abs() <= 0.1);
    }

    #[test]
    fn lemma24_main_term_coefficient() {
        let lambda = sieve_von_mangoldt(25_000).unwrap();
        let bump = TestFunction::canonical(1.0, 2.0).unwrap();
        let xi = RationalPhase::new(2, 5).unwrap();
        let grid = log_grid(100.0, 1e4, 12);
        let series = run_lemma24(xi, &grid, &bump, &lambda).unwrap();
        assert_eq!(series.extras["main_term_coefficient"], -0.25);
        assert!(series.fitted_slope <= 0.75, "slope {}", series.fitted_slope);
    }

    #[test]
    fn lemma22_cancellation() {
        let lambda = sieve_von_mangoldt(25_000).unwrap();
        let bump = TestFunction::canonical(1.0, 2.0).unwrap();
        let chi = CharacterTable::new(3).unwrap().character(1);
        let grid = log_grid(100.0, 1e4, 12);
        let series = run_lemma22(&chi, &grid, &bump, &lambda).unwrap();
        assert!(series.fitted_slope <= 0.75, "slope {}", series.fitted_slope);
    }

    #[test]
    fn thm31_residual_cancels_at_small_scale() {
        let zeros = find_zeros(2.0, 1100.0).unwrap();
        let lambda = sieve_von_mangoldt(1000).unwrap();
        let xi = RationalPhase::new(1, 3).unwrap();
        let grid = log_grid(100.0, 1000.0, 12);
        let series = run_thm31(xi, &grid, &zeros, &lambda).unwrap();
        // the two sums individually reach ~ψ(u)/2 ≈ 80 at T = 1000 while
        // the residual stays an order of magnitude smaller
        assert!(series.extras["cancellation_ratio"] > 3.0);
        // the zero sum is a step function of T: constant strictly between
        // consecutive ordinates
        let idx = zeros.count_to(500.0);
        let (lo, hi) = (zeros.ordinates()[idx], zeros.ordinates()[idx + 1]);
        let s1a = zero_sum_sharp(xi.value(), lo + 0.3 * (hi - lo), &zeros).unwrap();
        let s1b = zero_sum_sharp(xi.value(), lo + 0.7 * (hi - lo), &zeros).unwrap();
        assert_eq!(s1a.term_count, s1b.term_count);
        assert_eq!(s1a.value, s1b.value);
    }

    #[test]
    fn bound11_zero_coefficient_for_q4() {
        let zeros = find_zeros(2.0, 5200.0).unwrap();
        let bump = TestFunction::canonical(1.0, 2.0).unwrap();
        let xi = RationalPhase::new(1, 4).unwrap();
        let grid = log_grid(405.0, 800.0, 12);
        let series = run_bound11(xi, &grid, &bump, ZeroScale::ByXiX, &zeros).unwrap();
        assert_eq!(series.extras["main_term_coefficient"], 0.0);
        // residual is then the bare zero sum
        let z = zero_sum_smooth(0.25, 500.0, ZeroScale::ByXiX, &bump, &zeros).unwrap();
        let p = series
            .points
            .iter()
            .min_by(|a, b| {
                (a.scale - 500.0)
                    .abs()
                    .partial_cmp(&(b.scale - 500.0).abs())
                    .unwrap()
            })
            .unwrap();
        assert!(p.residual > 0.0);
        assert!(z.value.norm() > 0.0);
    }

    #[test]
    fn monotone_coverage_is_exact() {
        // enlarging the Λ table must not change in-range residuals
        let bump = TestFunction::canonical(1.0, 2.0).unwrap();
        let grid = log_grid(100.0, 1000.0, 12);
        let small = sieve_von_mangoldt(2_000).unwrap();
        let large = sieve_von_mangoldt(10_000).unwrap();
        let a = run_lemma23(&grid, &bump, &small).unwrap();
        let b = run_lemma23(&grid, &bump, &large).unwrap();
        for (pa, pb) in a.points.iter().zip(&b.points) {
            assert!((pa.residual - pb.residual).abs() <= 1e-10);
        }
    }

    #[test]
    fn stirling_scan_stays_bounded() {
        let grid = log_grid(10.0, 1e4, 8);
        let series = run_stirling_scan(&grid).unwrap();
        for p in &series.points {
            assert!(p.residual <= 10.0, "t·|ratio−1| = {} at t = {}", p.residual, p.scale);
        }
    }

    #[test]
    fn gonek_scan_envelope_and_second_case() {
        let series = run_gonek_scan(&[50.0, 100.0, 200.0, 400.0]).unwrap();
        assert!(series.extras["case_separation"] >= 10.0);
        assert!(series.extras["fitted_envelope_constant"] > 0.0);
        // every point within 3× the fitted (median-ratio) envelope
        assert!(series.extras["worst_ratio_vs_fitted"] <= 3.0);
    }

    #[test]
    fn csv_emission_shape() {
        let pts: Vec<(f64, f64)> = log_grid(100.0, 1e4, 4).into_iter().map(|s| (s, s.sqrt())).collect();
        let series =
            ResidualSeries::build(Experiment::Lemma23, pts, Normalizer::SqrtLog2, BTreeMap::new())
                .unwrap();
        let csv = series.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "scale,residual,normalized_residual");
        let first = lines.next().unwrap();
        assert_eq!(first.split(',').count(), 3);
        // deterministic bytes
        assert_eq!(csv, series.to_csv());
    }
}
