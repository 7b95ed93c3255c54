//! Extended-precision phase reduction.
//!
//! Oscillatory factors like exp(it·log(t/2πe)) and ξ^{-iγ} carry phases up to
//! ~10⁷ before reduction mod 2π; forming the product in plain doubles loses
//! eight digits of the reduced phase. The product is therefore split exactly
//! into two doubles with an FMA and reduced against a double-double
//! representation of 2π.

/// 2π split into two doubles: `PI2_HI + PI2_LO` carries ~32 guard digits.
pub const PI2_HI: f64 = 6.283185307179586;
pub const PI2_LO: f64 = 2.4492935982947064e-16;

/// Error-free transformation of a sum: returns (s, e) with s + e = a + b exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free transformation of a product via FMA: p + e = a·b exactly.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Reduce `a·b` modulo 2π to a value in [-π, π], keeping absolute accuracy
/// near the double-double level even when |a·b| is ~10⁹.
pub fn reduce_mod_2pi_prod(a: f64, b: f64) -> f64 {
    let (hi, lo) = two_prod(a, b);
    reduce_mod_2pi_dd(hi, lo)
}

/// Reduce the double-double value hi + lo modulo 2π into [-π, π].
pub fn reduce_mod_2pi_dd(hi: f64, lo: f64) -> f64 {
    let k = (hi / PI2_HI).round();
    // r = (hi - k*PI2_HI) - k*PI2_LO + lo, assembled with exact transforms
    let (p1, e1) = two_prod(k, PI2_HI);
    let (r1, e2) = two_sum(hi, -p1);
    let mut r = r1 + (e2 - e1 - k * PI2_LO + lo);
    // one conditional correction keeps the result inside [-π, π]
    if r > std::f64::consts::PI {
        r -= PI2_HI;
        r -= PI2_LO;
    } else if r < -std::f64::consts::PI {
        r += PI2_HI;
        r += PI2_LO;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_prod_is_exact() {
        let (p, e) = two_prod(1e8 + 1.0, 1e8 - 1.0);
        // (1e8)^2 - 1 is not representable; p + e must carry it exactly
        assert_eq!(p, 1e16);
        assert_eq!(e, -1.0);
    }

    #[test]
    fn reduction_agrees_with_naive_at_small_phase() {
        for &(a, b) in &[(3.0, 0.7), (-12.0, 0.11), (5.5, -0.03)] {
            let r = reduce_mod_2pi_prod(a, b);
            let naive = (a * b).rem_euclid(2.0 * std::f64::consts::PI);
            let naive = if naive > std::f64::consts::PI {
                naive - 2.0 * std::f64::consts::PI
            } else {
                naive
            };
            assert!((r - naive).abs() < 1e-12, "a={a} b={b}: {r} vs {naive}");
        }
    }

    #[test]
    fn reduction_keeps_accuracy_at_large_phase() {
        // t·log(t/2πe) at t = 1e6, checked against integer-arithmetic splitting:
        // phase = q*2π + r with q recovered from the double-double product.
        let t = 1.0e6_f64;
        let l = (t / (2.0 * std::f64::consts::PI * std::f64::consts::E)).ln();
        let r = reduce_mod_2pi_prod(t, l);
        assert!(r.abs() <= std::f64::consts::PI + 1e-12);
        // shifting t by an exact multiple of 2π/l is not available; instead
        // verify consistency: reducing (hi, lo) and (hi - 2π·K exactly, lo)
        // must agree for a representable multiple K.
        let (hi, lo) = two_prod(t, l);
        let k = 1024.0; // 2π·1024 splits exactly into PI2_HI*k + PI2_LO*k
        let (shift_hi, shift_e) = two_prod(k, PI2_HI);
        let (hi2, e2) = two_sum(hi, -shift_hi);
        let lo2 = lo + e2 - shift_e - k * PI2_LO;
        let r2 = reduce_mod_2pi_dd(hi2, lo2);
        assert!((r - r2).abs() < 1e-12, "{r} vs {r2}");
    }
}
