//! Cyclotomic polynomials over GF(2) and the complete factorization of
//! self-reciprocal trinomials x^{2m} + x^m + 1 into cyclotomic factors.
//!
//! For odd m the trinomial is the product of the Q_{3n} over the divisors
//! n | m with 3n not dividing m; a factor 2^k in m turns into a 2^k-th power
//! of the odd-part product, since squaring is coefficient-wise over GF(2).

use std::collections::HashMap;

use crate::error::Error;
use crate::gf2poly::{ensure_degree, Gf2Poly, Trinomial};
use crate::intarith::{divisors, euler_phi, moebius};

/// The d-th cyclotomic polynomial over GF(2), degree phi(d), computed as the
/// Moebius quotient
/// `prod_{t | d, mu(t)=1} (x^{d/t} + 1)  /  prod_{t | d, mu(t)=-1} (x^{d/t} + 1)`
/// with exact division. Only odd indices occur in the factorizations here,
/// but even d works too and reduces along Q_{2d} = Q_d for odd d.
pub fn cyclotomic(d: u64) -> Result<Gf2Poly, Error> {
    if d == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be positive".into()));
    }
    ensure_degree(d)?;
    let mut numerator = Gf2Poly::one();
    let mut denominator = Gf2Poly::one();
    for t in divisors(d) {
        let binomial = || Gf2Poly::monomial(d / t).add(&Gf2Poly::one());
        match moebius(t) {
            1 => numerator = numerator.mul(&binomial()),
            -1 => denominator = denominator.mul(&binomial()),
            _ => {}
        }
    }
    let (q, r) = numerator.div_rem(&denominator)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Sweep-level memo for [`cyclotomic`]. Nothing caches by default; construct
/// one where the same indices recur and thread it through explicitly. The
/// `&mut` access confines it to one thread at a time.
#[derive(Default)]
pub struct CyclotomicCache {
    memo: HashMap<u64, Gf2Poly>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, d: u64) -> Result<Gf2Poly, Error> {
        if let Some(q) = self.memo.get(&d) {
            return Ok(q.clone());
        }
        let q = cyclotomic(d)?;
        self.memo.insert(d, q.clone());
        Ok(q)
    }
}

/// The factorization of x^{2m} + x^m + 1 into cyclotomic polynomials:
/// writing m = 2^k * odd_part, the trinomial equals
/// `(prod_{d in indices} Q_d)^(2^k)` with
/// indices = { 3n : n | odd_part, 3n does not divide odd_part }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrtFactorization {
    pub m: u64,
    /// 2-adic valuation of m.
    pub two_adic: u32,
    pub odd_part: u64,
    /// Cyclotomic indices, ascending.
    pub indices: Vec<u64>,
    /// Common multiplicity 2^two_adic of every factor.
    pub multiplicity: u64,
}

impl SrtFactorization {
    /// The trinomial being factored, x^{2m} + x^m + 1.
    pub fn trinomial(&self) -> Result<Gf2Poly, Error> {
        Gf2Poly::from_exponents(&[2 * self.m, self.m, 0])
    }

    /// Multiplies the factorization back out; equals `trinomial()` exactly.
    pub fn recompose(&self) -> Result<Gf2Poly, Error> {
        ensure_degree(2 * self.m)?;
        let mut product = Gf2Poly::one();
        for &d in &self.indices {
            product = product.mul(&cyclotomic(d)?);
        }
        for _ in 0..self.two_adic {
            product = product.square();
        }
        Ok(product)
    }

    /// Sum of the factor degrees phi(d); for odd m this equals 2m.
    pub fn degree_sum(&self) -> u64 {
        self.indices.iter().map(|&d| euler_phi(d)).sum()
    }
}

/// Builds the cyclotomic factorization of x^{2m} + x^m + 1.
pub fn srt_factorization(m: u64) -> Result<SrtFactorization, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument("exponent m must be positive".into()));
    }
    if m > u64::MAX / 3 {
        return Err(Error::ResourceLimit {
            what: "srt exponent",
            value: m,
            limit: u64::MAX / 3,
        });
    }
    let two_adic = m.trailing_zeros();
    let odd_part = m >> two_adic;
    let indices: Vec<u64> = divisors(odd_part)
        .into_iter()
        .filter(|n| !odd_part.is_multiple_of(3 * n))
        .map(|n| 3 * n)
        .collect();
    Ok(SrtFactorization {
        m,
        two_adic,
        odd_part,
        indices,
        multiplicity: 1 << two_adic,
    })
}

/// For odd m = 3^k * n with 3 not dividing n, the self-reciprocal irreducible
/// trinomial x^{2*3^k} + x^{3^k} + 1 divides x^{2m} + x^m + 1; this returns it.
pub fn irreducible_srt_divisor(m: u64) -> Result<Trinomial, Error> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "m must be odd, got {m}"
        )));
    }
    let mut rest = m;
    let mut power = 1u64;
    while rest.is_multiple_of(3) {
        rest /= 3;
        power *= 3;
    }
    Trinomial::new(2 * power, power)
}
