//! The central oscillatory sums: sharp and smoothed zero sums twisted by
//! rational phases, twisted Chebyshev sums, character-twisted prime sums,
//! and the vertical-segment oscillatory integral.
//!
//! Every sum accumulates with fixed-chunk compensated summation
//! ([`crate::kahan`]), so values are bit-identical for any worker count.
//! Phases of the form γ·log ξ and t·log(t/2πe) are reduced mod 2π in
//! extended precision before any trigonometry; rational twists e(−nξ) are
//! built from the integer residue n·m mod q, never from accumulated
//! floating-point angles.

use crate::arith::{Character, RationalPhase, VonMangoldtTable};
use crate::bump::TestFunction;
use crate::error::{Error, Result};
use crate::kahan::{parallel_sum, ComplexKahan, KahanSum};
use crate::phase::reduce_mod_2pi_prod;
use crate::quad::GL8;
use crate::special::{chi_asymptotic_1ms, chi_factor, e_of};
use crate::zeros::ZeroTable;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Value of a finite sum together with its term count and an upper estimate
/// of the accumulated rounding error.
#[derive(Debug, Clone, Copy)]
pub struct SumValue {
    pub value: Complex64,
    pub term_count: usize,
    pub compensation_residue: f64,
}

impl From<ComplexKahan> for SumValue {
    fn from(acc: ComplexKahan) -> Self {
        SumValue {
            value: acc.value(),
            term_count: acc.count(),
            compensation_residue: acc.error_estimate(),
        }
    }
}

/// Which evaluation of 𝒳(1−ρ) the zero sums use: the exact gamma-quotient
/// route, or the large-t main term (kept as a cross-check option; it
/// carries an O(1/γ) bias at low ordinates).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChiPath {
    #[default]
    Exact,
    Asymptotic,
}

/// ξ^{-ρ} 𝒳(1−ρ) at ρ = 1/2 + iγ: the ξ-power is ξ^{-1/2} e^{-iγ log ξ}
/// with the phase product reduced in extended precision.
fn zero_term(xi: f64, log_xi: f64, gamma: f64, path: ChiPath) -> Complex64 {
    let phase = -reduce_mod_2pi_prod(gamma, log_xi);
    let amp = 1.0 / xi.sqrt();
    let twist = Complex64::new(amp * phase.cos(), amp * phase.sin());
    let chi = match path {
        ChiPath::Exact => chi_factor(Complex64::new(0.5, -gamma))
            .expect("no poles of the chi-factor on the critical line"),
        ChiPath::Asymptotic => chi_asymptotic_1ms(Complex64::new(0.5, gamma))
            .expect("gamma >= 1 on every zero table"),
    };
    twist * chi
}

/// Σ_{0<γ≤T} ξ^{-ρ} 𝒳(1−ρ) over the zeros ρ = 1/2 + iγ of the table,
/// accumulated in ascending-γ order.
pub fn zero_sum_sharp(xi: f64, t_max: f64, zeros: &ZeroTable) -> Result<SumValue> {
    if !(t_max >= 100.0) {
        return Err(Error::Domain {
            what: "zero_sum_sharp",
            value: t_max,
            allowed: "T >= 100",
        });
    }
    zero_sum_sharp_unchecked(xi, t_max, zeros, ChiPath::Exact)
}

/// As [`zero_sum_sharp`] without the T ≥ 100 floor, with a selectable
/// 𝒳 route.
pub fn zero_sum_sharp_unchecked(
    xi: f64,
    t_max: f64,
    zeros: &ZeroTable,
    path: ChiPath,
) -> Result<SumValue> {
    if zeros.max_height() < t_max {
        return Err(Error::Coverage {
            what: "zero_sum_sharp",
            required: t_max,
            available: zeros.max_height(),
        });
    }
    let window = &zeros.ordinates()[..zeros.count_to(t_max)];
    let log_xi = xi.ln();
    Ok(parallel_sum(window.len(), |i| zero_term(xi, log_xi, window[i], path)).into())
}

/// Scaling convention for the smoothed zero sum's bump argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroScale {
    /// ℬ(γ / (2πξX)) — pairs with the prime sum at threshold X.
    ByXiX,
    /// ℬ(γ / (2πX)) — the main-term normalization.
    ByX,
}

impl ZeroScale {
    pub fn factor(&self, xi: f64) -> f64 {
        match self {
            ZeroScale::ByXiX => xi,
            ZeroScale::ByX => 1.0,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroScale::ByXiX => "xi-x",
            ZeroScale::ByX => "x",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "xi-x" => Some(ZeroScale::ByXiX),
            "x" => Some(ZeroScale::ByX),
            _ => None,
        }
    }
}

/// Σ_ρ ξ^{-ρ} 𝒳(1−ρ) ℬ(γ/(2π·f·X)) with f = ξ or 1 per the scale; the sum
/// is finite because ℬ has compact support. Zeros with γ < 0 never
/// contribute: the support lies in ℝ⁺.
pub fn zero_sum_smooth(
    xi: f64,
    x: f64,
    scale: ZeroScale,
    bump: &TestFunction,
    zeros: &ZeroTable,
) -> Result<SumValue> {
    if !(x * xi > 100.0) {
        return Err(Error::Domain {
            what: "zero_sum_smooth",
            value: x,
            allowed: "X > 100/xi",
        });
    }
    zero_sum_smooth_unchecked(xi, x, scale, bump, zeros, ChiPath::Exact)
}

/// As [`zero_sum_smooth`] without the X > 100/ξ floor, with a selectable
/// 𝒳 route.
pub fn zero_sum_smooth_unchecked(
    xi: f64,
    x: f64,
    scale: ZeroScale,
    bump: &TestFunction,
    zeros: &ZeroTable,
    path: ChiPath,
) -> Result<SumValue> {
    let denom = 2.0 * PI * scale.factor(xi) * x;
    let required = denom * bump.support_hi();
    if zeros.max_height() < required {
        return Err(Error::Coverage {
            what: "zero_sum_smooth",
            required,
            available: zeros.max_height(),
        });
    }
    let window = zeros.window(denom * bump.support_lo(), required);
    let log_xi = xi.ln();
    Ok(parallel_sum(window.len(), |i| {
        let gamma = window[i];
        zero_term(xi, log_xi, gamma, path) * bump.eval(gamma / denom)
    })
    .into())
}

/// Twisted Chebyshev sum Σ_{1<n≤u} Λ(n) e(−nξ) with exact rational phases:
/// the exponent is the integer residue n·m mod q.
pub fn twisted_cheby(xi: RationalPhase, u: f64, lambda: &VonMangoldtTable) -> Result<SumValue> {
    twisted_cheby_signed(xi, u, lambda, -1.0)
}

/// Twist direction −1 gives e(−nξ); +1 is kept for the conjugation
/// symmetry (tested exactly).
pub(crate) fn twisted_cheby_signed(
    xi: RationalPhase,
    u: f64,
    lambda: &VonMangoldtTable,
    sign: f64,
) -> Result<SumValue> {
    let top = u.floor();
    if (lambda.limit() as f64) < top {
        return Err(Error::Coverage {
            what: "twisted_cheby",
            required: top,
            available: lambda.limit() as f64,
        });
    }
    let (m, q) = (xi.numerator(), xi.denominator());
    let qf = q as f64;
    let mut acc = ComplexKahan::new();
    for n in 2..=(top as u64) {
        let l = lambda.lambda(n as usize);
        if l == 0.0 {
            continue;
        }
        let residue = (n % q) * m % q;
        acc.add(e_of(sign * residue as f64 / qf) * l);
    }
    Ok(acc.into())
}

/// Σ_n Λ(n) e(−nξ) ℬ(n/X), the smoothed twisted prime sum.
pub fn prime_sum_smooth(
    xi: RationalPhase,
    x: f64,
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
) -> Result<SumValue> {
    let (m, q) = (xi.numerator(), xi.denominator());
    let qf = q as f64;
    smooth_lambda_sum("prime_sum_smooth", x, bump, lambda, |n| {
        e_of(-(((n % q) * m % q) as f64) / qf)
    })
}

/// Σ_n Λ(n) ℬ(n/X), the untwisted smoothed Chebyshev sum.
pub fn plain_smooth(x: f64, bump: &TestFunction, lambda: &VonMangoldtTable) -> Result<SumValue> {
    smooth_lambda_sum("plain_smooth", x, bump, lambda, |_| Complex64::new(1.0, 0.0))
}

/// Σ_n Λ(n) χ(n) ℬ(n/X), the character-twisted smoothed sum.
pub fn char_sum_smooth(
    chi: &Character,
    x: f64,
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
) -> Result<SumValue> {
    smooth_lambda_sum("char_sum_smooth", x, bump, lambda, |n| chi.eval(n))
}

fn smooth_lambda_sum<F>(
    what: &'static str,
    x: f64,
    bump: &TestFunction,
    lambda: &VonMangoldtTable,
    twist: F,
) -> Result<SumValue>
where
    F: Fn(u64) -> Complex64,
{
    let required = x * bump.support_hi();
    if (lambda.limit() as f64) < required {
        return Err(Error::Coverage {
            what,
            required,
            available: lambda.limit() as f64,
        });
    }
    let lo = (x * bump.support_lo()).ceil().max(2.0) as u64;
    let hi = required.floor() as u64;
    let mut acc = ComplexKahan::new();
    for n in lo..=hi {
        let l = lambda.lambda(n as usize);
        if l == 0.0 {
            continue;
        }
        acc.add(twist(n) * (l * bump.eval(n as f64 / x)));
    }
    Ok(acc.into())
}

// ---------------------------------------------------------------------------
// Oscillatory vertical-segment integral
// ---------------------------------------------------------------------------

/// Result of [`gonek_integral`]: the value with the step-halving error
/// estimate and the panel count of the final pass.
#[derive(Debug, Clone, Copy)]
pub struct GonekValue {
    pub value: Complex64,
    pub error_estimate: f64,
    pub panels: usize,
}

/// (1/2πi) ∫_{c+i}^{c+iT} r^{-s} 𝒳(1−s) ds by panel-wise Gauss–Legendre
/// quadrature.
///
/// The integrand oscillates with local frequency |log(t/2πr)|, stationary
/// near t = 2πr; panel sizes are capped at
/// min(0.25, 1/(4|log(T/2πre)| + 1)) and shrink with the local frequency.
/// Panels are halved until two passes agree to 1e-6.
pub fn gonek_integral(r: f64, c: f64, t_max: f64) -> Result<GonekValue> {
    if !(r > 0.0) {
        return Err(Error::Domain {
            what: "gonek_integral",
            value: r,
            allowed: "r > 0",
        });
    }
    if !(0.01..=2.0).contains(&c) {
        return Err(Error::Domain {
            what: "gonek_integral",
            value: c,
            allowed: "1/100 <= c <= 2",
        });
    }
    if !(t_max >= 10.0) {
        return Err(Error::Domain {
            what: "gonek_integral",
            value: t_max,
            allowed: "T >= 10",
        });
    }

    let r_pow = r.powf(-c);
    let log_r = r.ln();
    // s = c + it, ds = i dt: (1/2πi)∫ f ds = (1/2π)∫ f dt
    let integrand = |t: f64| -> Complex64 {
        let chi = chi_factor(Complex64::new(1.0 - c, -t))
            .expect("no chi poles on the integration segment");
        let phase = -t * log_r;
        chi * Complex64::new(r_pow * phase.cos(), r_pow * phase.sin())
    };

    let cap = 0.25f64
        .min(1.0 / (4.0 * (t_max / (2.0 * PI * r * std::f64::consts::E)).ln().abs() + 1.0));
    let pass = |refine: f64| -> (Complex64, usize) {
        let mut re = KahanSum::new();
        let mut im = KahanSum::new();
        let mut t = 1.0;
        let mut panels = 0;
        while t < t_max {
            let freq = (t / (2.0 * PI * r)).ln().abs();
            let h = (cap.min(PI / (2.0 * (1.0 + freq))) / refine).min(t_max - t);
            let mid = t + 0.5 * h;
            let half = 0.5 * h;
            for &(node, weight) in &GL8 {
                let v = integrand(mid + half * node);
                re.add(weight * half * v.re);
                im.add(weight * half * v.im);
            }
            panels += 1;
            t += h;
        }
        (Complex64::new(re.value(), im.value()) / (2.0 * PI), panels)
    };

    let mut refine = 1.0;
    let (mut prev, _) = pass(refine);
    for _ in 0..8 {
        refine *= 2.0;
        let (next, panels) = pass(refine);
        let delta = (next - prev).norm();
        if delta <= 1e-6 {
            return Ok(GonekValue {
                value: next,
                error_estimate: delta,
                panels,
            });
        }
        prev = next;
    }
    Err(Error::NonConvergence {
        what: "gonek_integral",
        estimate: f64::NAN,
        tol: 1e-6,
    })
}
