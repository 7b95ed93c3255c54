//! Smooth compactly supported test functions on ℝ⁺.
//!
//! Two built-in kinds: the canonical mollifier exp(−1/((u−a)(b−u))) and a
//! plateau bump (C^∞ ramps glued to a flat top) that approximates a sharp
//! cutoff. Derivatives are closed-form, never numerical, and the total
//! integral C_ℬ = ∫ℬ is computed once by adaptive quadrature and cached.

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;
use std::fmt;
use std::sync::{Arc, OnceLock};

type DynEval = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    CanonicalMollifier,
    /// Flat top on [a + ramp, b − ramp] with smoothstep-style C^∞ ramps.
    Plateau { ramp: f64 },
    UserSupplied { eval: DynEval, deriv: DynEval },
}

/// A smooth bump ℬ with compact support [a, b] ⊂ ℝ⁺.
#[derive(Clone)]
pub struct TestFunction {
    lo: f64,
    hi: f64,
    kind: Kind,
    integral: Arc<OnceLock<f64>>,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::CanonicalMollifier => "canonical_mollifier",
            Kind::Plateau { .. } => "plateau",
            Kind::UserSupplied { .. } => "user_supplied",
        };
        write!(f, "TestFunction({name}, [{}, {}])", self.lo, self.hi)
    }
}

fn check_support(lo: f64, hi: f64) -> Result<()> {
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::InvalidSupport { lo, hi });
    }
    Ok(())
}

/// exp(-1/x) continued by 0 for x ≤ 0; all derivatives vanish at 0.
#[inline]
fn flat_exp(x: f64) -> f64 {
    if x > 0.0 {
        (-1.0 / x).exp()
    } else {
        0.0
    }
}

/// C^∞ ramp S: [0,1] → [0,1], S(0)=0, S(1)=1, flat to all orders at both ends.
fn smoothstep_inf(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        let fx = flat_exp(x);
        fx / (fx + flat_exp(1.0 - x))
    }
}

fn smoothstep_inf_deriv(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    let f0 = flat_exp(x);
    let f1 = flat_exp(1.0 - x);
    // f'(x) = exp(-1/x)/x²
    let d0 = f0 / (x * x);
    let d1 = f1 / ((1.0 - x) * (1.0 - x));
    (d0 * f1 + f0 * d1) / ((f0 + f1) * (f0 + f1))
}

impl TestFunction {
    /// Canonical mollifier ℬ(u) = exp(−1/((u−a)(b−u))) on (a, b).
    pub fn canonical(lo: f64, hi: f64) -> Result<Self> {
        check_support(lo, hi)?;
        Ok(Self {
            lo,
            hi,
            kind: Kind::CanonicalMollifier,
            integral: Arc::new(OnceLock::new()),
        })
    }

    /// Plateau bump: identically 1 on the middle 60% of [a, b], with C^∞
    /// ramps over the outer 20% on each side.
    pub fn plateau(lo: f64, hi: f64) -> Result<Self> {
        check_support(lo, hi)?;
        Ok(Self {
            lo,
            hi,
            kind: Kind::Plateau {
                ramp: 0.2 * (hi - lo),
            },
            integral: Arc::new(OnceLock::new()),
        })
    }

    /// In-process hook for a caller-supplied bump; `eval` must vanish
    /// outside [lo, hi] and `deriv` must be its exact derivative.
    pub fn user_supplied<F, G>(lo: f64, hi: f64, eval: F, deriv: G) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        check_support(lo, hi)?;
        Ok(Self {
            lo,
            hi,
            kind: Kind::UserSupplied {
                eval: Arc::new(eval),
                deriv: Arc::new(deriv),
            },
            integral: Arc::new(OnceLock::new()),
        })
    }

    pub fn support_lo(&self) -> f64 {
        self.lo
    }

    pub fn support_hi(&self) -> f64 {
        self.hi
    }

    /// ℬ(u); identically 0 outside [a, b] with no smoothing tails.
    pub fn eval(&self, u: f64) -> f64 {
        if u <= self.lo || u >= self.hi {
            return 0.0;
        }
        match &self.kind {
            Kind::CanonicalMollifier => {
                let g = (u - self.lo) * (self.hi - u);
                (-1.0 / g).exp()
            }
            Kind::Plateau { ramp } => {
                if u < self.lo + ramp {
                    smoothstep_inf((u - self.lo) / ramp)
                } else if u > self.hi - ramp {
                    smoothstep_inf((self.hi - u) / ramp)
                } else {
                    1.0
                }
            }
            Kind::UserSupplied { eval, .. } => eval(u),
        }
    }

    /// ℬ′(u) in closed form.
    pub fn eval_deriv(&self, u: f64) -> f64 {
        if u <= self.lo || u >= self.hi {
            return 0.0;
        }
        match &self.kind {
            Kind::CanonicalMollifier => {
                let g = (u - self.lo) * (self.hi - u);
                let gp = self.lo + self.hi - 2.0 * u;
                (-1.0 / g).exp() * gp / (g * g)
            }
            Kind::Plateau { ramp } => {
                if u < self.lo + ramp {
                    smoothstep_inf_deriv((u - self.lo) / ramp) / ramp
                } else if u > self.hi - ramp {
                    -smoothstep_inf_deriv((self.hi - u) / ramp) / ramp
                } else {
                    0.0
                }
            }
            Kind::UserSupplied { deriv, .. } => deriv(u),
        }
    }

    /// C_ℬ = ∫₀^∞ ℬ(u) du, adaptive quadrature to 1e−12 absolute, cached
    /// after the first call.
    pub fn integral(&self) -> Result<f64> {
        if let Some(&v) = self.integral.get() {
            return Ok(v);
        }
        let v = adaptive_simpson(|u| self.eval(u), self.lo, self.hi, 1e-12)?;
        Ok(*self.integral.get_or_init(|| v))
    }
}
