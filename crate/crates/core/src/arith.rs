//! Integer-arithmetic kernels: von Mangoldt sieve, Möbius and Euler
//! functions, Dirichlet character groups, and Gauss sums.
//!
//! Characters are stored as exact root-of-unity exponents: the unit group
//! (ℤ/qℤ)* is decomposed into cyclic factors (CRT, with (ℤ/2^aℤ)* split as
//! ⟨−1⟩ × ⟨5⟩ for a ≥ 3), discrete logarithms are tabulated once per
//! modulus, and χ(n) = e(r/L) with an integer exponent r mod the group
//! exponent L. Orthogonality and multiplicativity therefore hold at the
//! level of integer arithmetic, with floats entering only through e(·).

use crate::error::{Error, Result};
use crate::kahan::ComplexKahan;
use crate::special::e_of;
use num_complex::Complex64;
use std::sync::Arc;

pub const SIEVE_CEILING: usize = 100_000_000;
pub const CHARACTER_MODULUS_CEILING: u64 = 10_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 assumed
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qout = old_r / r;
        (old_r, r) = (r, old_r - qout * r);
        (old_s, s) = (s, old_s - qout * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Trial-division factorization; adequate for every modulus this crate uses.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// μ(q): (−1)^(number of prime factors) for squarefree q, else 0.
pub fn mobius(q: u64) -> i64 {
    assert!(q >= 1);
    let f = factorize(q);
    if f.iter().any(|&(_, a)| a > 1) {
        return 0;
    }
    if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// φ(q), Euler's totient.
pub fn euler_phi(q: u64) -> u64 {
    assert!(q >= 1);
    let mut out = q;
    for (p, _) in factorize(q) {
        out = out / p * (p - 1);
    }
    out
}

// ---------------------------------------------------------------------------
// Rational phase ξ = m/q
// ---------------------------------------------------------------------------

/// ξ = m/q in lowest terms with 0 < m < q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalPhase {
    m: u64,
    q: u64,
}

impl RationalPhase {
    pub fn new(m: u64, q: u64) -> Result<Self> {
        if m == 0 || m >= q || gcd(m, q) != 1 {
            return Err(Error::InvalidPhase { m, q });
        }
        Ok(Self { m, q })
    }

    pub fn numerator(&self) -> u64 {
        self.m
    }

    pub fn denominator(&self) -> u64 {
        self.q
    }

    pub fn value(&self) -> f64 {
        self.m as f64 / self.q as f64
    }
}

impl std::fmt::Display for RationalPhase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.m, self.q)
    }
}

// ---------------------------------------------------------------------------
// Von Mangoldt sieve
// ---------------------------------------------------------------------------

/// Λ(n) for 0 ≤ n ≤ limit; Λ(p^k) = log p, zero elsewhere.
#[derive(Debug, Clone)]
pub struct VonMangoldtTable {
    values: Vec<f64>,
}

impl VonMangoldtTable {
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    #[inline]
    pub fn lambda(&self, n: usize) -> f64 {
        self.values[n]
    }

    /// ψ(x) = Σ_{n≤x} Λ(n) for x ≤ limit.
    pub fn psi(&self, x: f64) -> f64 {
        let top = (x.floor() as usize).min(self.limit());
        let mut acc = crate::kahan::KahanSum::new();
        for n in 2..=top {
            acc.add(self.values[n]);
        }
        acc.value()
    }
}

/// Sieve Λ up to N: mark primes, assign log p to every power p^k ≤ N.
pub fn sieve_von_mangoldt(n: usize) -> Result<VonMangoldtTable> {
    if n < 2 || n > SIEVE_CEILING {
        return Err(Error::Capacity {
            what: "von Mangoldt sieve",
            requested: n as f64,
            ceiling: SIEVE_CEILING as f64,
        });
    }
    let mut is_composite = vec![false; n + 1];
    let mut values = vec![0.0f64; n + 1];
    for p in 2..=n {
        if is_composite[p] {
            continue;
        }
        let logp = (p as f64).ln();
        let mut multiple = p * p;
        while multiple <= n {
            is_composite[multiple] = true;
            multiple += p;
        }
        let mut power = p;
        loop {
            values[power] = logp;
            if power > n / p {
                break;
            }
            power *= p;
        }
    }
    Ok(VonMangoldtTable { values })
}

// ---------------------------------------------------------------------------
// Dirichlet characters
// ---------------------------------------------------------------------------

#[derive(Debug)]
struct CyclicFactor {
    order: u64,
    /// L / order, where L is the exponent (lcm of all factor orders).
    scale: u64,
}

#[derive(Debug)]
struct GroupData {
    q: u64,
    factors: Vec<CyclicFactor>,
    /// Discrete logarithms per unit residue: dlog[n] = exponent vector, or
    /// empty marker for non-units (gcd(n, q) > 1).
    dlog: Vec<Option<Vec<u64>>>,
    /// Exponent of the group, L = lcm of factor orders.
    exponent: u64,
}

/// The full group of Dirichlet characters mod q.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<GroupData>,
    /// Character index vectors, lexicographic over the cyclic factors.
    indices: Vec<Vec<u64>>,
}

/// One Dirichlet character, a lightweight handle into its table.
#[derive(Debug, Clone)]
pub struct Character {
    group: Arc<GroupData>,
    index: usize,
    coeffs: Vec<u64>,
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Primitive root mod p^a for odd prime p.
fn primitive_root_odd(p: u64, a: u32) -> u64 {
    let pa = p.pow(a);
    let order = pa / p * (p - 1);
    let prime_factors: Vec<u64> = factorize(p - 1).into_iter().map(|(r, _)| r).collect();
    let mut g = 2u64;
    loop {
        if gcd(g, p) == 1 && prime_factors.iter().all(|&r| pow_mod(g, (p - 1) / r, p) != 1) {
            break;
        }
        g += 1;
    }
    // lift to p^a: g must have order divisible by p^{a-1}
    if a >= 2 && pow_mod(g, p - 1, p * p) == 1 {
        g += p;
    }
    debug_assert_eq!(pow_mod(g, order, pa), 1);
    g
}

/// Cyclic decomposition of (ℤ/Mℤ)* for a prime power M = p^a, as a list of
/// (generator mod M, order) pairs.
fn prime_power_factors(p: u64, a: u32) -> Vec<(u64, u64)> {
    let pa = p.pow(a);
    if p == 2 {
        match a {
            1 => vec![],
            2 => vec![(3, 2)], // ⟨−1⟩
            _ => vec![(pa - 1, 2), (5, pa / 4)],
        }
    } else {
        vec![(primitive_root_odd(p, a), pa / p * (p - 1))]
    }
}

impl CharacterTable {
    /// Build all φ(q) characters mod q via CRT decomposition of (ℤ/qℤ)*.
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 || q > CHARACTER_MODULUS_CEILING {
            return Err(Error::Capacity {
                what: "character table modulus",
                requested: q as f64,
                ceiling: CHARACTER_MODULUS_CEILING as f64,
            });
        }
        if q == 1 {
            // the trivial character, constant 1 on every integer
            let group = Arc::new(GroupData {
                q: 1,
                factors: vec![],
                dlog: vec![Some(vec![])],
                exponent: 1,
            });
            return Ok(Self {
                group,
                indices: vec![vec![]],
            });
        }

        // cyclic factors, with generators lifted mod q by CRT
        let mut gens: Vec<(u64, u64)> = Vec::new(); // (generator mod q, order)
        let mut components: Vec<(u64, Vec<(u64, u64)>)> = Vec::new(); // (p^a, local gens)
        for (p, a) in factorize(q) {
            let pa = p.pow(a);
            let local = prime_power_factors(p, a);
            for &(g_local, order) in &local {
                // x ≡ g_local (mod p^a), x ≡ 1 (mod q / p^a)
                let rest = q / pa;
                let lifted = if rest == 1 {
                    g_local
                } else {
                    let inv = mod_inverse(rest % pa, pa);
                    let t = ((g_local + pa - 1) as u128 * inv as u128 % pa as u128) as u64;
                    (1 + t as u128 * rest as u128) as u64 % q
                };
                gens.push((lifted, order));
            }
            components.push((pa, local));
        }

        let exponent = gens.iter().fold(1u64, |acc, &(_, d)| lcm(acc, d));
        let factors: Vec<CyclicFactor> = gens
            .iter()
            .map(|&(_, order)| CyclicFactor {
                order,
                scale: exponent / order,
            })
            .collect();

        // discrete logs per prime-power component, then assembled per residue
        let mut component_dlogs: Vec<(u64, Vec<Vec<Option<u64>>>)> = Vec::new();
        for (pa, local) in &components {
            let mut tables: Vec<Vec<Option<u64>>> = Vec::new();
            match local.len() {
                0 => {}
                1 => {
                    let (g, d) = local[0];
                    let mut t = vec![None; *pa as usize];
                    let mut x = 1u64 % pa;
                    for e in 0..d {
                        t[x as usize] = Some(e);
                        x = x * g % pa;
                    }
                    tables.push(t);
                }
                2 => {
                    // 2^a, a ≥ 3: units are (−1)^e0 · 5^e1
                    let (g0, d0) = local[0];
                    let (g1, d1) = local[1];
                    let mut t0 = vec![None; *pa as usize];
                    let mut t1 = vec![None; *pa as usize];
                    for e0 in 0..d0 {
                        for e1 in 0..d1 {
                            let x = pow_mod(g0, e0, *pa) * pow_mod(g1, e1, *pa) % pa;
                            t0[x as usize] = Some(e0);
                            t1[x as usize] = Some(e1);
                        }
                    }
                    tables.push(t0);
                    tables.push(t1);
                }
                _ => unreachable!(),
            }
            component_dlogs.push((*pa, tables));
        }

        let mut dlog: Vec<Option<Vec<u64>>> = Vec::with_capacity(q as usize);
        for n in 0..q {
            if gcd(n, q) != 1 {
                dlog.push(None);
                continue;
            }
            let mut exps = Vec::with_capacity(factors.len());
            for (pa, tables) in &component_dlogs {
                let r = (n % pa) as usize;
                for t in tables {
                    exps.push(t[r].expect("unit residue must have a discrete log"));
                }
            }
            dlog.push(Some(exps));
        }

        let group = Arc::new(GroupData {
            q,
            factors,
            dlog,
            exponent,
        });

        // all index vectors, lexicographic
        let orders: Vec<u64> = group.factors.iter().map(|f| f.order).collect();
        let count: u64 = orders.iter().product();
        let mut indices = Vec::with_capacity(count as usize);
        let mut idx = vec![0u64; orders.len()];
        loop {
            indices.push(idx.clone());
            let mut pos = orders.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < orders[pos] {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&c| c == 0) {
                break;
            }
        }
        debug_assert_eq!(indices.len() as u64, euler_phi(q));

        Ok(Self { group, indices })
    }

    pub fn modulus(&self) -> u64 {
        self.group.q
    }

    /// Number of characters, φ(q).
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn character(&self, index: usize) -> Character {
        Character {
            group: Arc::clone(&self.group),
            index,
            coeffs: self.indices[index].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.len()).map(|i| self.character(i))
    }

    /// The principal character (index 0 by construction).
    pub fn principal(&self) -> Character {
        self.character(0)
    }
}

impl Character {
    pub fn modulus(&self) -> u64 {
        self.group.q
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Exact exponent r with χ(n) = e(r / L), or None when gcd(n, q) > 1
    /// (where χ(n) = 0). L is [`Self::exponent_denominator`].
    pub fn exponent(&self, n: u64) -> Option<u64> {
        let q = self.group.q;
        let r = (n % q) as usize;
        let exps = self.group.dlog[r].as_ref()?;
        let l = self.group.exponent;
        let mut acc: u64 = 0;
        for ((c, e), f) in self.coeffs.iter().zip(exps).zip(&self.group.factors) {
            // c·e·(L/order) mod L; c,e < order ≤ L ≤ 10^4 so u128 is ample
            let term = (*c as u128 * *e as u128 % f.order as u128) * f.scale as u128;
            acc = ((acc as u128 + term) % l as u128) as u64;
        }
        Some(acc)
    }

    /// Denominator L of the exact exponents: the exponent of (ℤ/qℤ)*.
    pub fn exponent_denominator(&self) -> u64 {
        self.group.exponent
    }

    /// χ(n) as a complex value (0 when gcd(n, q) > 1).
    pub fn eval(&self, n: u64) -> Complex64 {
        match self.exponent(n) {
            None => Complex64::new(0.0, 0.0),
            Some(r) => e_of(r as f64 / self.group.exponent as f64),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// χ(−1), always ±1.
    pub fn parity(&self) -> f64 {
        if self.group.q == 1 {
            return 1.0;
        }
        match self.exponent(self.group.q - 1) {
            Some(0) => 1.0,
            Some(r) if 2 * r == self.group.exponent => -1.0,
            other => unreachable!("χ(−1) must be ±1, got exponent {other:?}"),
        }
    }

    /// True iff no proper divisor d | q is an induced modulus, tested by
    /// searching each d for n ≡ 1 (mod d), gcd(n, q) = 1, with χ(n) ≠ 1.
    pub fn is_primitive(&self) -> bool {
        let q = self.group.q;
        if q == 1 {
            return true;
        }
        for d in 1..q {
            if q % d != 0 {
                continue;
            }
            let mut induced = true;
            let mut n = 1 + d;
            while n < q + d {
                let r = n % q;
                if gcd(r, q) == 1 && self.exponent(r) != Some(0) {
                    induced = false;
                    break;
                }
                n += d;
            }
            if induced {
                return false;
            }
        }
        true
    }
}

/// Gauss sum τ(χ) = Σ_{n mod q} χ(n) e(n/q), by direct summation over a
/// full residue system with exact rational phase exponents.
pub fn gauss_sum(chi: &Character) -> Complex64 {
    let q = chi.modulus();
    let l = chi.exponent_denominator();
    let mut acc = ComplexKahan::new();
    for n in 0..q {
        if let Some(r) = chi.exponent(n) {
            // phase (r·q + n·L) / (L·q), kept as one exact rational
            let num = r as u128 * q as u128 + n as u128 * l as u128;
            let den = l as u128 * q as u128;
            acc.add(e_of(num as f64 / den as f64));
        }
    }
    acc.value()
}

/// |χ(n) − (τ(χ)/q) Σ_m χ̄(m) e(−nm/q)|, the defect of the finite Fourier
/// expansion of χ (Gauss-sum separability; the m-sum runs over reduced
/// residues). Zero (to roundoff) for every n when χ is primitive; errors
/// when χ is not.
pub fn gauss_identity_residual(chi: &Character, n: u64) -> Result<f64> {
    if !chi.is_primitive() {
        return Err(Error::Primitivity {
            q: chi.modulus(),
            index: chi.index(),
        });
    }
    let q = chi.modulus();
    let l = chi.exponent_denominator();
    let lhs = chi.eval(n);
    let mut acc = ComplexKahan::new();
    for m in 0..q {
        if let Some(r) = chi.exponent(m) {
            // χ̄(m) e(−nm/q): exponent −r/L − (n·m mod q)/q as one rational
            let nm = (n % q) * m % q;
            let num = (r as i128 * q as i128 + nm as i128 * l as i128).rem_euclid(l as i128 * q as i128);
            let den = l as i128 * q as i128;
            acc.add(e_of(-(num as f64) / den as f64));
        }
    }
    let tau = gauss_sum(chi);
    let rhs = acc.value() * tau / q as f64;
    Ok((lhs - rhs).norm())
}
