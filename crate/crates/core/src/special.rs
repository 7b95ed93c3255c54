//! Complex special functions: e(u), principal-branch log-gamma, and the
//! functional-equation factor 𝒳(s) with ζ(s) = 𝒳(s)ζ(1−s).
//!
//! 𝒳 is always evaluated as the exponential of log-gamma differences; forming
//! Γ quotients directly overflows once |Im s| passes a few hundred.

use crate::error::{Error, Result};
use crate::phase::reduce_mod_2pi_prod;
use num_complex::Complex64;
use std::f64::consts::{E, FRAC_PI_4, PI};

const LN_PI: f64 = 1.1447298858494002;
const LN_2PI: f64 = 1.8378770664093453;
const LN_2: f64 = std::f64::consts::LN_2;

/// e(u) = exp(2πiu), with u reduced mod 1 before the multiplication so the
/// phase stays accurate for |u| up to ~10⁹.
#[inline]
pub fn e_of(u: f64) -> Complex64 {
    debug_assert!(u.is_finite());
    // u - round(u) is exact in IEEE arithmetic and lands in [-1/2, 1/2]
    let r = u - u.round();
    let theta = 2.0 * PI * r;
    Complex64::new(theta.cos(), theta.sin())
}

/// Stirling coefficients B_{2k} / (2k (2k-1)); valid once |z| has been
/// shifted to 12 or more.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

fn stirling_series(z: Complex64) -> Complex64 {
    let mut s = (z - 0.5) * z.ln() - z + Complex64::new(0.5 * LN_2PI, 0.0);
    let inv2 = (z * z).finv();
    let mut zp = z.finv();
    for c in STIRLING {
        s += zp * c;
        zp *= inv2;
    }
    s
}

/// log sin(πz) on Im z ≥ 0, on the branch that is analytic in the upper
/// half-plane and matches the principal value on (0, 1). This is the branch
/// that makes logΓ(z) = ln π − logsinpi(z) − logΓ(1−z) hold for the
/// principal log-gamma.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        let x = z.re;
        let n = x.round();
        let r = x - n;
        let s = (PI * r).sin() * if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Complex64::new(s.abs().ln(), if s < 0.0 { PI } else { 0.0 });
    }
    // sin(πz) = e^{-iπz} (1 - e^{2πiz}) · i/2
    let w = (Complex64::new(0.0, 2.0 * PI) * z).exp();
    Complex64::new(PI * z.im, -PI * z.re) + (Complex64::new(1.0, 0.0) - w).ln()
        + Complex64::new(-LN_2, 0.5 * PI)
}

/// Principal-branch complex log-gamma.
///
/// Stirling's series after an integer shift to |z| ≥ 12 covers Re z ≥ 1/2
/// and any z with |Im z| ≥ 10; the remaining strip uses the reflection
/// formula with branch-consistent logarithms. Accuracy is 13+ significant
/// digits over the supported range (|z| ≤ 10⁷).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    if z.im < 0.0 {
        return Ok(log_gamma(z.conj())?.conj());
    }
    if z.re < 0.5 && z.im < 10.0 {
        // reflection into Re ≥ 1/2
        let lg = log_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(LN_PI, 0.0) - log_sin_pi_upper(z) - lg);
    }
    let mut shifted = z;
    let mut shift_sum = Complex64::new(0.0, 0.0);
    while shifted.norm_sqr() < 144.0 {
        shift_sum += shifted.ln();
        shifted += 1.0;
    }
    Ok(stirling_series(shifted) - shift_sum)
}

/// 𝒳(s) = π^{s−1/2} Γ((1−s)/2) / Γ(s/2), the factor in ζ(s) = 𝒳(s)ζ(1−s).
///
/// Errors at the poles of 𝒳 (where Γ((1−s)/2) is singular); at zeros of 𝒳
/// (poles of the denominator gamma) it returns 0.
pub fn chi_factor(s: Complex64) -> Result<Complex64> {
    let num = log_gamma((Complex64::new(1.0, 0.0) - s) / 2.0)?;
    let den = match log_gamma(s / 2.0) {
        Ok(v) => v,
        Err(Error::Pole { .. }) => return Ok(Complex64::new(0.0, 0.0)),
        Err(e) => return Err(e),
    };
    Ok(((s - 0.5) * LN_PI + num - den).exp())
}

/// 𝒳(s) through the equivalent closed form 2 (2π)^{s−1} Γ(1−s) sin(πs/2),
/// kept as an independent route for cross-checks against [`chi_factor`].
pub fn chi_factor_cos_form(s: Complex64) -> Result<Complex64> {
    let lg = log_gamma(Complex64::new(1.0, 0.0) - s)?;
    let half = s / 2.0;
    let lsin = if half.im >= 0.0 {
        log_sin_pi_upper(half)
    } else {
        log_sin_pi_upper(half.conj()).conj()
    };
    Ok((Complex64::new(LN_2, 0.0) + (s - 1.0) * LN_2PI + lg + lsin).exp())
}

fn require_t_ge(s: Complex64, min: f64, what: &'static str) -> Result<f64> {
    let t = s.im;
    if !(t >= min) {
        return Err(Error::Domain {
            what,
            value: t,
            allowed: "Im s >= 1",
        });
    }
    Ok(t)
}

/// Main term of the large-t expansion of 𝒳(1−s) for s = σ + it, t ≥ 1:
/// e^{−iπ/4} (t/2π)^{σ−1/2} exp(it·log(t/2πe)).
///
/// The phase t·log(t/2πe) reaches ~10⁷ over the supported range, so it is
/// reduced mod 2π in extended precision before the complex exponential.
pub fn chi_asymptotic_1ms(s: Complex64) -> Result<Complex64> {
    let t = require_t_ge(s, 1.0, "chi_asymptotic_1ms")?;
    Ok(chi_main_term(t, s.re - 0.5))
}

/// Main term of the matching expansion of 𝒳(s̄): identical phase factor with
/// the modulus exponent flipped to 1/2 − σ.
pub fn chi_asymptotic_conj(s: Complex64) -> Result<Complex64> {
    let t = require_t_ge(s, 1.0, "chi_asymptotic_conj")?;
    Ok(chi_main_term(t, 0.5 - s.re))
}

fn chi_main_term(t: f64, modulus_exponent: f64) -> Complex64 {
    let phase = reduce_mod_2pi_prod(t, (t / (2.0 * PI * E)).ln());
    let modulus = (modulus_exponent * (t / (2.0 * PI)).ln()).exp();
    let angle = phase - FRAC_PI_4;
    Complex64::new(modulus * angle.cos(), modulus * angle.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn e_of_basic_values() {
        let one = e_of(0.0);
        assert_eq!(one, c(1.0, 0.0));
        let quarter = e_of(0.25);
        assert!((quarter - c(0.0, 1.0)).norm() < 1e-15);
        let third = e_of(1.0 / 3.0);
        assert!((third - c(-0.5, 0.8660254037844386)).norm() < 1e-15);
    }

    #[test]
    fn e_of_unit_modulus_at_large_argument() {
        for &u in &[1.0e9, -987654321.123456, 2.5e8 + 1.0 / 3.0] {
            assert!((e_of(u).norm() - 1.0).abs() < 1e-14);
        }
        // phase survives the reduction: e(10^9 + 1/3) should equal e(1/3)
        let a = e_of(2.5e8 + 0.25);
        assert!((a - c(0.0, 1.0)).norm() < 2e-7); // limited by f64 spacing at 2.5e8
    }

    /// Frozen high-precision values (50-digit arbitrary-precision evaluation)
    /// for the principal branch, covering the Stirling, shift, and
    /// reflection paths.
    #[test]
    fn log_gamma_against_reference_values() {
        let cases: [(f64, f64, f64, f64); 18] = [
            (1.0, 10.0, -13.637732188247270609, 13.802912974229900694),
            (0.5, 0.0, 0.57236494292470008707, 0.0),
            (3.5, -4.0, -0.96694677527274640272, -5.2262968794833040833),
            (0.25, 5.0, -7.3370880842091811277, 2.656575032957105579),
            (-0.5, 0.0, 1.2655121234846453965, -3.1415926535897932385),
            (0.2, 3.0, -4.122129686409078269, -0.17653805860155037114),
            (0.2, -3.0, -4.122129686409078269, 0.17653805860155037114),
            (-2.5, 0.5, -0.93508562129827747868, -8.8709628852474591986),
            (-5.5, -2.0, -9.7811429856215211033, 15.228097632212937624),
            (0.4997, 80.0, -124.74608221642428135, 270.56218037253072997),
            (12.0, 0.0, 17.502307845873885839, 0.0),
            (0.25, 500000.0, -785400.52504975945599, 6061181.296003103532),
            (-1.0, 0.5, 0.3906299057160610672, -4.4927996702893115041),
            (6.0, 1000000.0, -1570719.4225482945836, 12815519.197328988143),
            (1.5, 1.0, -0.54121886854726803739, 0.15214099345152139345),
            (-0.75, 2.0, -3.152832689989440986, -2.9307422565831503574),
            (0.125, 0.0, 2.0194183575537963453, 0.0),
            (2.0, 1000.0, -1559.5157548432189909, 5910.110390139326619),
        ];
        for (zr, zi, vr, vi) in cases {
            let got = log_gamma(c(zr, zi)).unwrap();
            let want = c(vr, vi);
            let tol = 1e-12 * (1.0 + want.norm());
            assert!(
                (got - want).norm() < tol,
                "log_gamma({zr}+{zi}i) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn log_gamma_rejects_poles() {
        for &x in &[0.0, -1.0, -2.0, -37.0] {
            assert!(matches!(log_gamma(c(x, 0.0)), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn chi_fixed_point_at_half() {
        let v = chi_factor(c(0.5, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn chi_functional_identity() {
        let s = c(0.3, 5.0);
        let prod = chi_factor(s).unwrap() * chi_factor(c(1.0, 0.0) - s).unwrap();
        assert!((prod - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn chi_unit_modulus_on_critical_line() {
        let rho = c(0.5, 14.134725);
        let v = chi_factor(c(1.0, 0.0) - rho).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn chi_closed_forms_agree() {
        for &(sr, si) in &[(0.3, 5.0), (-1.2, 40.0), (2.7, -300.0), (0.5, 999.0)] {
            let s = c(sr, si);
            let a = chi_factor(s).unwrap();
            let b = chi_factor_cos_form(s).unwrap();
            assert!(
                (a - b).norm() <= 1e-10 * a.norm(),
                "forms disagree at {s}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn chi_zero_at_origin() {
        let v = chi_factor(c(0.0, 0.0)).unwrap();
        assert_eq!(v, c(0.0, 0.0));
    }

    #[test]
    fn chi_pole_at_one() {
        assert!(matches!(chi_factor(c(1.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn asymptotic_ratio_near_one() {
        // 𝒳(1−s)/main term = 1 + O(1/t)
        let s = c(0.5, 50.0);
        let exact = chi_factor(c(1.0, 0.0) - s).unwrap();
        let asym = chi_asymptotic_1ms(s).unwrap();
        assert!((exact / asym - c(1.0, 0.0)).norm() <= 10.0 / 50.0);

        // conjugate variant against 𝒳(s̄) at t = 100
        let s = c(1.3, 100.0);
        let exact = chi_factor(s.conj()).unwrap();
        let asym = chi_asymptotic_conj(s).unwrap();
        assert!((exact / asym - c(1.0, 0.0)).norm() <= 10.0 / 100.0);
    }

    #[test]
    fn asymptotic_modulus_values() {
        // σ = 1/2 makes the modulus exponent vanish
        let v = chi_asymptotic_1ms(c(0.5, 777.0)).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
        // s = 1.5 + 100i: modulus (100/2π)^1
        let v = chi_asymptotic_1ms(c(1.5, 100.0)).unwrap();
        assert!((v.norm() - 100.0 / (2.0 * PI)).abs() < 1e-10);
        // conjugate variant at s = -1 + 50i: modulus (50/2π)^{3/2}
        let v = chi_asymptotic_conj(c(-1.0, 50.0)).unwrap();
        assert!((v.norm() - (50.0 / (2.0 * PI)).powf(1.5)).abs() < 1e-10);
    }

    #[test]
    fn asymptotic_rejects_small_t() {
        assert!(chi_asymptotic_1ms(c(0.5, 0.5)).is_err());
        assert!(chi_asymptotic_conj(c(0.5, -3.0)).is_err());
    }
}
