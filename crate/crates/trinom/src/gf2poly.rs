//! Dense polynomials over GF(2) with bit-packed coefficients.
//!
//! Coefficients are packed 64 per limb, little-endian: bit `i` of the limb
//! array is the coefficient of `x^i`. The representation is canonical (no
//! trailing zero limbs), so two polynomials are equal iff their limb vectors
//! are equal. The zero polynomial is the empty limb vector and is the only
//! polynomial without a degree.
//!
//! All arithmetic is exact. Multiplication and division are the classical
//! quadratic algorithms on words, which keeps gcds of degree ~2^18 in the
//! seconds range without platform intrinsics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

const BITS: u64 = u64::BITS as u64;

/// Default cap on polynomial degrees accepted by the allocating constructors.
pub const DEFAULT_DEGREE_CAP: u64 = 1 << 20;

static DEGREE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_DEGREE_CAP);

/// Current global degree cap. Constructors that allocate proportionally to a
/// caller-supplied exponent refuse anything above this.
pub fn degree_cap() -> u64 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Replaces the global degree cap. The cap guards allocation size only;
/// lowering it never invalidates already-constructed polynomials.
pub fn set_degree_cap(cap: u64) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn ensure_degree(requested: u64) -> Result<(), Error> {
    let cap = degree_cap();
    if requested > cap {
        Err(Error::DegreeCapExceeded { requested, cap })
    } else {
        Ok(())
    }
}

fn limbs_for(deg: u64) -> usize {
    (deg / BITS) as usize + 1
}

/// Highest set bit at position `<= start`, scanning downward.
fn top_bit_at_most(limbs: &[u64], start: u64) -> Option<u64> {
    let mut idx = (start / BITS) as usize;
    if idx >= limbs.len() {
        idx = limbs.len().checked_sub(1)?;
    }
    let mut mask = if start / BITS == idx as u64 && start % BITS != BITS - 1 {
        (1u64 << (start % BITS + 1)) - 1
    } else {
        !0
    };
    loop {
        let word = limbs[idx] & mask;
        if word != 0 {
            return Some(idx as u64 * BITS + (BITS - 1 - word.leading_zeros() as u64));
        }
        if idx == 0 {
            return None;
        }
        idx -= 1;
        mask = !0;
    }
}

/// `dst ^= src << shift`. `dst` must be long enough to hold the result.
fn xor_shl(dst: &mut [u64], src: &[u64], shift: u64) {
    let limb_off = (shift / BITS) as usize;
    let bit_off = (shift % BITS) as u32;
    if bit_off == 0 {
        for (d, s) in dst[limb_off..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        let mut carry = 0u64;
        for (d, s) in dst[limb_off..].iter_mut().zip(src) {
            *d ^= (s << bit_off) | carry;
            carry = s >> (BITS as u32 - bit_off);
        }
        if carry != 0 {
            dst[limb_off + src.len()] ^= carry;
        }
    }
}

/// Reduces the raw buffer `a` modulo the divisor, tracking the live degree in
/// `adeg`. When `quotient` is given, the quotient bits are accumulated there.
fn reduce_raw(
    a: &mut [u64],
    adeg: &mut Option<u64>,
    divisor: &[u64],
    ddeg: u64,
    mut quotient: Option<&mut Gf2Poly>,
) {
    while let Some(cur) = *adeg {
        if cur < ddeg {
            break;
        }
        let shift = cur - ddeg;
        xor_shl(a, divisor, shift);
        if let Some(q) = quotient.as_deref_mut() {
            q.set_coeff(shift, true);
        }
        *adeg = if cur == 0 {
            None
        } else {
            top_bit_at_most(a, cur - 1)
        };
    }
}

/// Spreads the bits of `x` apart, inserting a zero between consecutive bits.
fn spread(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_ffff_0000_ffff;
    v = (v | (v << 8)) & 0x00ff_00ff_00ff_00ff;
    v = (v | (v << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

/// A polynomial over GF(2) in canonical dense form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Gf2Poly { limbs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Gf2Poly { limbs: vec![1] }
    }

    /// The polynomial x.
    pub fn x() -> Self {
        Gf2Poly { limbs: vec![2] }
    }

    /// The monomial x^k. Does not consult the degree cap; callers that pass
    /// user-controlled exponents go through [`Trinomial::to_poly`] or
    /// [`Gf2Poly::from_exponents`] instead.
    pub fn monomial(k: u64) -> Self {
        let mut limbs = vec![0; limbs_for(k)];
        limbs[(k / BITS) as usize] = 1 << (k % BITS);
        Gf2Poly { limbs }
    }

    /// Builds a polynomial from the positions of its nonzero coefficients.
    /// Duplicate exponents are rejected rather than cancelled.
    pub fn from_exponents(exponents: &[u64]) -> Result<Self, Error> {
        let mut p = Gf2Poly::zero();
        for &e in exponents {
            ensure_degree(e)?;
            if p.coeff(e) {
                return Err(Error::Parse(format!("duplicate exponent {e}")));
            }
            p.set_coeff(e, true);
        }
        Ok(p)
    }

    /// Interprets the low bits of a word as coefficients (bit i = x^i).
    pub fn from_bits(bits: u64) -> Self {
        if bits == 0 {
            Gf2Poly::zero()
        } else {
            Gf2Poly { limbs: vec![bits] }
        }
    }

    fn from_raw(mut limbs: Vec<u64>, deg: Option<u64>) -> Self {
        match deg {
            None => Gf2Poly::zero(),
            Some(d) => {
                limbs.truncate(limbs_for(d));
                Gf2Poly { limbs }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// Degree of the polynomial, or `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        let last = self.limbs.last()?;
        Some((self.limbs.len() as u64 - 1) * BITS + (BITS - 1 - last.leading_zeros() as u64))
    }

    /// Coefficient of x^i.
    pub fn coeff(&self, i: u64) -> bool {
        match self.limbs.get((i / BITS) as usize) {
            Some(word) => word >> (i % BITS) & 1 == 1,
            None => false,
        }
    }

    /// Sets the coefficient of x^i, growing or renormalizing as needed.
    pub fn set_coeff(&mut self, i: u64, value: bool) {
        let idx = (i / BITS) as usize;
        if value {
            if idx >= self.limbs.len() {
                self.limbs.resize(idx + 1, 0);
            }
            self.limbs[idx] |= 1 << (i % BITS);
        } else if idx < self.limbs.len() {
            self.limbs[idx] &= !(1 << (i % BITS));
            while self.limbs.last() == Some(&0) {
                self.limbs.pop();
            }
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u64 {
        self.limbs.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Exponents of the nonzero coefficients, descending.
    pub fn exponents(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &word) in self.limbs.iter().enumerate().rev() {
            let mut w = word;
            while w != 0 {
                let top = BITS - 1 - w.leading_zeros() as u64;
                out.push(i as u64 * BITS + top);
                w &= !(1 << top);
            }
        }
        out
    }

    /// Evaluates the polynomial at 0 or 1.
    pub fn eval(&self, point: bool) -> bool {
        if point {
            self.weight() & 1 == 1
        } else {
            self.coeff(0)
        }
    }

    /// Sum (exclusive-or of coefficients). `p + p = 0`.
    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (short, long) = if self.limbs.len() <= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (d, s) in limbs.iter_mut().zip(&short.limbs) {
            *d ^= s;
        }
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Gf2Poly { limbs }
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Gf2Poly::zero();
        };
        let deg = da + db;
        let mut out = vec![0u64; limbs_for(deg)];
        let (sparse, dense) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, &word) in sparse.limbs.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let bit = w.trailing_zeros() as u64;
                xor_shl(&mut out, &dense.limbs, i as u64 * BITS + bit);
                w &= w - 1;
            }
        }
        // leading coefficients cannot cancel over GF(2)
        Gf2Poly::from_raw(out, Some(deg))
    }

    /// Square via bit spreading; much cheaper than `mul(self, self)`.
    pub fn square(&self) -> Gf2Poly {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let mut limbs = Vec::with_capacity(self.limbs.len() * 2);
        for &word in &self.limbs {
            limbs.push(spread(word as u32));
            limbs.push(spread((word >> 32) as u32));
        }
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Gf2Poly { limbs }
    }

    /// Power by repeated squaring. `pow(0)` is 1 for every base.
    pub fn pow(&self, n: u64) -> Gf2Poly {
        if n == 0 {
            return Gf2Poly::one();
        }
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let mut result = Gf2Poly::one();
        let mut base = self.clone();
        let mut n = n;
        loop {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n == 0 {
                return result;
            }
            base = base.square();
        }
    }

    /// Quotient and remainder: `self = divisor * q + r` with `r = 0` or
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly), Error> {
        let Some(ddeg) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.limbs.clone();
        let mut rdeg = self.degree();
        let mut quot = Gf2Poly::zero();
        reduce_raw(&mut rem, &mut rdeg, &divisor.limbs, ddeg, Some(&mut quot));
        Ok((quot, Gf2Poly::from_raw(rem, rdeg)))
    }

    /// Remainder of division by `divisor`.
    pub fn rem(&self, divisor: &Gf2Poly) -> Result<Gf2Poly, Error> {
        let Some(ddeg) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        if self.degree() < Some(ddeg) || self.is_zero() {
            return Ok(self.clone());
        }
        let mut rem = self.limbs.clone();
        let mut rdeg = self.degree();
        reduce_raw(&mut rem, &mut rdeg, &divisor.limbs, ddeg, None);
        Ok(Gf2Poly::from_raw(rem, rdeg))
    }

    /// True iff `divisor` divides `self` with zero remainder.
    pub fn is_divisible_by(&self, divisor: &Gf2Poly) -> Result<bool, Error> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub(crate) fn div_exact(&self, divisor: &Gf2Poly) -> Gf2Poly {
        let (q, r) = self.div_rem(divisor).expect("exact division by zero");
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Greatest common divisor by the Euclidean remainder chain.
    /// `gcd(p, 0) = p` and `gcd(0, 0) = 0`; every nonzero result is monic
    /// because every nonzero polynomial over GF(2) is.
    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut a = self.limbs.clone();
        let mut adeg = self.degree();
        let mut b = other.limbs.clone();
        let mut bdeg = other.degree();
        loop {
            let Some(bd) = bdeg else {
                return Gf2Poly::from_raw(a, adeg);
            };
            reduce_raw(&mut a, &mut adeg, &b[..limbs_for(bd)], bd, None);
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut adeg, &mut bdeg);
        }
    }

    /// Formal derivative. Over GF(2) only odd-degree terms survive.
    pub fn derivative(&self) -> Gf2Poly {
        const ODD: u64 = 0xaaaa_aaaa_aaaa_aaaa;
        let mut limbs: Vec<u64> = self.limbs.iter().map(|w| (w & ODD) >> 1).collect();
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Gf2Poly { limbs }
    }

    /// Coefficient sequence reversed across the degree: `x^deg * p(1/x)`.
    /// Involutive whenever the constant coefficient is nonzero.
    pub fn reciprocal(&self) -> Result<Gf2Poly, Error> {
        let Some(deg) = self.degree() else {
            return Err(Error::ZeroPolynomial("the reciprocal"));
        };
        let mut out = Gf2Poly::zero();
        for e in self.exponents() {
            out.set_coeff(deg - e, true);
        }
        Ok(out)
    }

    /// True iff the coefficient sequence is palindromic.
    pub fn is_self_reciprocal(&self) -> Result<bool, Error> {
        Ok(self.reciprocal()? == *self)
    }
}

/// Residue of x^k modulo `modulus`, by square-and-multiply on the exponent
/// bits. Supports the full u64 exponent range.
pub fn mod_pow_x(k: u64, modulus: &Gf2Poly) -> Result<Gf2Poly, Error> {
    match modulus.degree() {
        None => return Err(Error::ZeroPolynomial("reduction")),
        Some(0) => return Err(Error::ConstantModulus),
        Some(_) => {}
    }
    if k == 0 {
        return Gf2Poly::one().rem(modulus);
    }
    let mut result = Gf2Poly::one().rem(modulus)?;
    for i in (0..u64::BITS - k.leading_zeros()).rev() {
        result = result.square().rem(modulus)?;
        if k >> i & 1 == 1 {
            // multiply by x: shift every coefficient up one place
            let mut shifted = vec![0u64; result.limbs.len() + 1];
            xor_shl(&mut shifted, &result.limbs, 1);
            let deg = result.degree().map(|d| d + 1);
            result = Gf2Poly::from_raw(shifted, deg).rem(modulus)?;
        }
    }
    Ok(result)
}

/// The polynomial 1 + (1+x)^e, built directly from the parity of binomial
/// coefficients: C(e, i) is odd exactly when i is a bit-submask of e. The
/// result has degree e and zero constant coefficient.
pub fn one_plus_x_pow(e: u64) -> Result<Gf2Poly, Error> {
    if e == 0 {
        return Err(Error::InvalidArgument("exponent must be positive".into()));
    }
    ensure_degree(e)?;
    let mut limbs = vec![0u64; limbs_for(e)];
    let mut sub = e;
    loop {
        if sub != 0 {
            limbs[(sub / BITS) as usize] |= 1 << (sub % BITS);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & e;
    }
    Ok(Gf2Poly { limbs })
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::add(self, rhs)
    }
}

impl AddAssign<&Gf2Poly> for Gf2Poly {
    fn add_assign(&mut self, rhs: &Gf2Poly) {
        *self = Gf2Poly::add(self, rhs);
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::mul(self, rhs)
    }
}

impl fmt::Display for Gf2Poly {
    /// Canonical symbolic form: terms with strictly decreasing exponents,
    /// e.g. `x^6+x^3+1`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in self.exponents() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    /// Accepts three interchangeable formats:
    ///  - symbolic: `x^6+x^3+1` (terms in any order, `1` for the constant);
    ///  - exponent list: `6,3,0` (a bare integer >= 2 is a one-term list);
    ///  - hex bitmask: `0x17`, bit i holding the coefficient of x^i.
    ///
    /// Bare `0` and `1` denote the constants, matching the canonical output.
    fn from_str(s: &str) -> Result<Self, Error> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            return parse_hex(hex);
        }
        if text.contains('x') {
            return parse_symbolic(text);
        }
        match text {
            "0" => Ok(Gf2Poly::zero()),
            "1" => Ok(Gf2Poly::one()),
            _ => parse_exponent_list(text),
        }
    }
}

fn parse_hex(hex: &str) -> Result<Gf2Poly, Error> {
    if hex.is_empty() {
        return Err(Error::Parse("empty hex bitmask".into()));
    }
    ensure_degree(hex.len() as u64 * 4)?;
    let mut limbs = vec![0u64; hex.len() / 16 + 1];
    for (i, c) in hex.chars().rev().enumerate() {
        let digit = c
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("invalid hex digit '{c}'")))?;
        limbs[i / 16] |= (digit as u64) << (i % 16 * 4);
    }
    while limbs.last() == Some(&0) {
        limbs.pop();
    }
    Ok(Gf2Poly { limbs })
}

fn parse_symbolic(text: &str) -> Result<Gf2Poly, Error> {
    let mut exponents = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let e = match term {
            "1" => 0,
            "x" => 1,
            _ => match term.strip_prefix("x^") {
                Some(num) => num
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("invalid exponent in term '{term}'")))?,
                None => return Err(Error::Parse(format!("invalid term '{term}'"))),
            },
        };
        exponents.push(e);
    }
    Gf2Poly::from_exponents(&exponents)
}

fn parse_exponent_list(text: &str) -> Result<Gf2Poly, Error> {
    let mut exponents = Vec::new();
    for item in text.split(',') {
        let e = item
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid exponent '{}'", item.trim())))?;
        exponents.push(e);
    }
    Gf2Poly::from_exponents(&exponents)
}

/// A trinomial x^n + x^k + 1 over GF(2), stored as its exponent pair.
/// The invariant n > k > 0 makes degenerate shapes unrepresentable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Trinomial {
    n: u64,
    k: u64,
}

impl Trinomial {
    pub fn new(n: u64, k: u64) -> Result<Self, Error> {
        if n > k && k > 0 {
            Ok(Trinomial { n, k })
        } else {
            Err(Error::InvalidTrinomial { n, k })
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn degree(&self) -> u64 {
        self.n
    }

    /// True iff the trinomial has the shape x^{2m} + x^m + 1.
    pub fn is_self_reciprocal(&self) -> bool {
        self.n == 2 * self.k
    }

    pub fn to_poly(&self) -> Result<Gf2Poly, Error> {
        Gf2Poly::from_exponents(&[self.n, self.k, 0])
    }
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "x^{}+x+1", self.n)
        } else {
            write!(f, "x^{}+x^{}+1", self.n, self.k)
        }
    }
}

impl FromStr for Trinomial {
    type Err = Error;

    /// Parses the `N,K` exponent-pair form used by the command line.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected N,K exponent pair, got '{s}'")));
        }
        let n = parts[0]
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid exponent '{}'", parts[0])))?;
        let k = parts[1]
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid exponent '{}'", parts[1])))?;
        Trinomial::new(n, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x^2+x+1").add(&p("x^2+x+1")), Gf2Poly::zero());
        assert_eq!(p("x^3+x+1").add(&p("x+1")), p("x^3"));
        assert_eq!(p("x^2+x+1").add(&Gf2Poly::zero()), p("x^2+x+1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x+1").mul(&p("x^2+x+1")), p("x^3+1"));
        assert_eq!(p("x^2+x+1").mul(&p("x^3+x^2+1")), p("x^5+x+1"));
        assert_eq!(p("x^5+x+1").mul(&Gf2Poly::zero()), Gf2Poly::zero());
    }

    #[test]
    fn div_rem_examples() {
        assert_eq!(
            p("x^5+x+1").div_rem(&p("x^2+x+1")).unwrap(),
            (p("x^3+x^2+1"), Gf2Poly::zero())
        );
        assert_eq!(
            p("x^3+x+1").div_rem(&p("x^2+x+1")).unwrap(),
            (p("x+1"), p("x"))
        );
        let q = p("x^7+x^4+x^2");
        assert_eq!(q.div_rem(&Gf2Poly::one()).unwrap(), (q.clone(), Gf2Poly::zero()));
        assert_eq!(
            q.div_rem(&Gf2Poly::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^3+1").gcd(&p("x^3+x^2+x")), p("x^2+x+1"));
        let q = p("x^6+x^4+x");
        assert_eq!(q.gcd(&q), q);
        // the e=5 Welch gcd is trivial
        assert_eq!(p("x^5+1").gcd(&p("x^5+x^4+x")), Gf2Poly::one());
        assert_eq!(Gf2Poly::zero().gcd(&q), q);
        assert_eq!(Gf2Poly::zero().gcd(&Gf2Poly::zero()), Gf2Poly::zero());
    }

    #[test]
    fn mod_pow_x_examples() {
        assert_eq!(mod_pow_x(3, &p("x^2+x+1")).unwrap(), Gf2Poly::one());
        assert_eq!(mod_pow_x(0, &p("x^4+x+1")).unwrap(), Gf2Poly::one());
        assert_eq!(mod_pow_x(6, &p("x^3+x+1")).unwrap(), p("x^2+1"));
        assert_eq!(mod_pow_x(5, &Gf2Poly::one()).unwrap_err(), Error::ConstantModulus);
        // exponents near the top of the u64 range stay cheap
        let r = mod_pow_x(u64::MAX, &p("x^2+x+1")).unwrap();
        assert_eq!(r, mod_pow_x(u64::MAX % 3, &p("x^2+x+1")).unwrap());
    }

    #[test]
    fn one_plus_x_pow_examples() {
        assert_eq!(one_plus_x_pow(1).unwrap(), p("x"));
        assert_eq!(one_plus_x_pow(3).unwrap(), p("x^3+x^2+x"));
        assert_eq!(one_plus_x_pow(5).unwrap(), p("x^5+x^4+x"));
        assert!(matches!(
            one_plus_x_pow(degree_cap() + 1),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x^3+x+1").reciprocal().unwrap(), p("x^3+x^2+1"));
        assert_eq!(p("x^2+x+1").reciprocal().unwrap(), p("x^2+x+1"));
        assert_eq!(p("x^6+x^3+1").reciprocal().unwrap(), p("x^6+x^3+1"));
        assert!(p("x^10+x^5+1").is_self_reciprocal().unwrap());
        assert!(!p("x^3+x+1").is_self_reciprocal().unwrap());
        assert!(Gf2Poly::zero().reciprocal().is_err());
    }

    #[test]
    fn parse_formats() {
        assert_eq!(p("x^2+x+1").exponents(), vec![2, 1, 0]);
        assert_eq!(p("6,3,0"), p("x^6+x^3+1"));
        assert_eq!(p("0x17"), p("x^4+x^2+x+1"));
        assert_eq!(p("1 + x"), p("x+1"));
        assert_eq!(p("0"), Gf2Poly::zero());
        assert_eq!(p("1"), Gf2Poly::one());
        assert_eq!(p("5"), Gf2Poly::monomial(5));
        assert!("x^2+x^2".parse::<Gf2Poly>().is_err());
        assert!("3,3".parse::<Gf2Poly>().is_err());
        assert!("x^".parse::<Gf2Poly>().is_err());
        assert!("0xg".parse::<Gf2Poly>().is_err());
        assert!("".parse::<Gf2Poly>().is_err());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("1+x+x^2").to_string(), "x^2+x+1");
        assert_eq!(Gf2Poly::zero().to_string(), "0");
        assert_eq!(Gf2Poly::one().to_string(), "1");
        assert_eq!(Gf2Poly::x().to_string(), "x");
    }

    #[test]
    fn trinomial_basics() {
        let t = Trinomial::new(6, 3).unwrap();
        assert_eq!(t.to_poly().unwrap(), p("x^6+x^3+1"));
        assert_eq!(t.to_string(), "x^6+x^3+1");
        assert!(t.is_self_reciprocal());
        assert!(Trinomial::new(3, 3).is_err());
        assert!(Trinomial::new(3, 0).is_err());
        assert_eq!("5,1".parse::<Trinomial>().unwrap(), Trinomial::new(5, 1).unwrap());
    }

    #[test]
    fn square_matches_mul() {
        let q = p("x^70+x^33+x^2+1");
        assert_eq!(q.square(), q.mul(&q));
    }

    #[test]
    fn derivative_drops_even_terms() {
        assert_eq!(p("x^4+x^3+x^2+x+1").derivative(), p("x^2+1"));
        assert_eq!(p("x^6+x^2").derivative(), Gf2Poly::zero());
    }
}
