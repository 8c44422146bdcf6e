//! Brute-force reference implementations used to validate every criterion.
//!
//! Everything here enumerates: powers of a root are walked one multiplication
//! at a time and matched through an exponent table, and irreducibility is
//! trial division. None of it shares code with the gcd-based fast paths it
//! checks. The oracles ship in the library (not test-only) so the `verify`
//! command can run them on demand.

use std::collections::HashMap;

use crate::error::Error;
use crate::gf2poly::{Gf2Poly, Trinomial};
use crate::intarith::{ensure_limit, gcd};
use crate::order::IrreducibleInfo;

/// Hard cap on power-table length.
pub const MAX_TABLE_LEN: u64 = 1 << 20;

const MAX_BRUTE_ORDER_DEGREE: u64 = 20;
const MAX_BRUTE_IRRED_DEGREE: u64 = 24;
const MAX_EXT_WELCH_ORDER: u64 = 1 << 18;

/// Packs a polynomial of degree <= 63 into a word (bit i = coefficient of x^i).
fn pack(f: &Gf2Poly) -> Result<u64, Error> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial("the power table"))?;
    ensure_limit("modulus degree", deg, 63)?;
    let mut bits = 0u64;
    for e in f.exponents() {
        bits |= 1 << e;
    }
    Ok(bits)
}

/// The table of residues x^i mod f for 0 <= i < len, with a reverse index
/// from residue to exponent. Residues are packed words, so this is limited
/// to moduli of degree <= 63 -- far beyond the oracle scale.
pub struct PowerTable {
    pows: Vec<u64>,
    index: ResidueIndex,
}

enum ResidueIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl PowerTable {
    /// Builds the full table for a certified irreducible of order `e` and
    /// checks that the walk really closes at x^e = 1.
    pub fn build(info: &IrreducibleInfo) -> Result<Self, Error> {
        let t = Self::build_prefix(&info.poly, info.order)?;
        let deg = info.degree as u64;
        let top = 1u64 << deg;
        let fbits = pack(&info.poly)?;
        let last = *t.pows.last().expect("table is never empty");
        let closes = {
            let mut r = last << 1;
            if r & top != 0 {
                r ^= fbits;
            }
            r == 1
        };
        if !closes {
            return Err(Error::InvalidArgument(format!(
                "{} does not have order {}",
                info.poly, info.order
            )));
        }
        Ok(t)
    }

    /// Builds the first `len` rows only; used when the caller needs powers
    /// below some bound rather than the whole cycle.
    pub fn build_prefix(f: &Gf2Poly, len: u64) -> Result<Self, Error> {
        ensure_limit("power table length", len, MAX_TABLE_LEN)?;
        if len == 0 {
            return Err(Error::InvalidArgument("empty power table".into()));
        }
        let deg = f.degree().ok_or(Error::ZeroPolynomial("the power table"))?;
        if deg == 0 {
            return Err(Error::ConstantModulus);
        }
        if !f.coeff(0) {
            return Err(Error::InvalidArgument(
                "the power table needs a modulus with nonzero constant term".into(),
            ));
        }
        let fbits = pack(f)?;
        let top = 1u64 << deg;
        let mut pows = Vec::with_capacity(len as usize);
        let mut index = if deg <= 22 {
            ResidueIndex::Dense(vec![u32::MAX; 1usize << deg])
        } else {
            ResidueIndex::Sparse(HashMap::with_capacity(len as usize))
        };
        let mut residue = 1u64;
        for i in 0..len {
            let duplicate = match &mut index {
                ResidueIndex::Dense(v) => {
                    let slot = &mut v[residue as usize];
                    let dup = *slot != u32::MAX;
                    if !dup {
                        *slot = i as u32;
                    }
                    dup
                }
                ResidueIndex::Sparse(m) => m.insert(residue, i as u32).is_some(),
            };
            if duplicate {
                return Err(Error::InvalidArgument(format!(
                    "power table of {f} repeats a residue at exponent {i}; \
                     the modulus is reducible or the order is wrong"
                )));
            }
            pows.push(residue);
            residue <<= 1;
            if residue & top != 0 {
                residue ^= fbits;
            }
        }
        Ok(PowerTable { pows, index })
    }

    pub fn len(&self) -> u64 {
        self.pows.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.pows.is_empty()
    }

    /// Residue of x^i, for i below the table length.
    pub fn residue(&self, i: u64) -> u64 {
        self.pows[i as usize]
    }

    /// Exponent whose residue equals `residue`, if the table contains it.
    pub fn exponent_of(&self, residue: u64) -> Option<u64> {
        match &self.index {
            ResidueIndex::Dense(v) => {
                let e = *v.get(residue as usize)?;
                (e != u32::MAX).then_some(e as u64)
            }
            ResidueIndex::Sparse(m) => m.get(&residue).map(|&e| e as u64),
        }
    }
}

/// Ground-truth irreducibility by trial division with every polynomial of
/// degree 1..=deg/2. Constants are not irreducible.
pub fn brute_irreducible(f: &Gf2Poly) -> Result<bool, Error> {
    let Some(deg) = f.degree() else {
        return Ok(false);
    };
    ensure_limit("trial-division degree", deg, MAX_BRUTE_IRRED_DEGREE)?;
    if deg == 0 {
        return Ok(false);
    }
    for bits in 2..1u64 << (deg / 2 + 1) {
        if f.rem(&Gf2Poly::from_bits(bits))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least e >= 1 with f | x^e - 1, found by multiplying a running residue by
/// x one step at a time until it returns to 1.
pub fn brute_order(f: &Gf2Poly) -> Result<u64, Error> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial("the order"));
    };
    ensure_limit("brute order degree", deg, MAX_BRUTE_ORDER_DEGREE)?;
    if *f == Gf2Poly::x() {
        return Err(Error::OrderOfX);
    }
    if !brute_irreducible(f)? {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let fbits = pack(f)?;
    let top = 1u64 << deg;
    let mut residue = 1u64;
    for e in 1..=(1u64 << deg) {
        residue <<= 1;
        if residue & top != 0 {
            residue ^= fbits;
        }
        if residue == 1 {
            return Ok(e);
        }
    }
    unreachable!("an irreducible other than x always has an order")
}

/// Every trinomial of degree < e divisible by the given irreducible, found
/// by pairing table entries with x^i + x^j = 1, the pair reported once at
/// its larger exponent. Sorted by (degree, low exponent).
pub fn brute_trinomial_multiples(info: &IrreducibleInfo) -> Result<Vec<Trinomial>, Error> {
    let table = PowerTable::build(info)?;
    let mut out = Vec::new();
    for i in 1..table.len() {
        let partner = table.residue(i) ^ 1;
        if partner == 0 {
            continue;
        }
        if let Some(j) = table.exponent_of(partner) {
            if j != 0 && j < i {
                out.push(Trinomial::new(i, j)?);
            }
        }
    }
    Ok(out)
}

/// Exponents m with 2m < e such that f divides x^{2m} + x^m + 1.
pub fn brute_srt_multiples(info: &IrreducibleInfo) -> Result<Vec<u64>, Error> {
    let table = PowerTable::build(info)?;
    let e = info.order;
    let mut out = Vec::new();
    for m in 1..=e.saturating_sub(1) / 2 {
        if table.residue(2 * m) ^ table.residue(m) == 1 {
            out.push(m);
        }
    }
    Ok(out)
}

/// Searches for the lexicographically least witness (m, s) with
/// f | x^{am} + x^{bs} + 1, scanning m over a full period of the root's
/// a-th power and matching x^{bs} through a least-s residue map.
pub fn brute_ext_welch(
    info: &IrreducibleInfo,
    a: u64,
    b: u64,
) -> Result<Option<(u64, u64)>, Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("exponent multipliers must be positive".into()));
    }
    let e = info.order;
    ensure_limit("brute search order", e, MAX_EXT_WELCH_ORDER)?;
    let table = PowerTable::build(info)?;
    let period_a = e / gcd(a, e);
    let period_b = e / gcd(b, e);
    let mut least_s: HashMap<u64, u64> = HashMap::new();
    for s in 1..=period_b {
        let residue = table.residue(mul_mod_idx(b, s, e));
        least_s.entry(residue).or_insert(s);
    }
    for m in 1..=period_a {
        let u = table.residue(mul_mod_idx(a, m, e));
        if u == 1 {
            continue; // x^{bs} would have to vanish
        }
        if let Some(&s) = least_s.get(&(u ^ 1)) {
            return Ok(Some((m, s)));
        }
    }
    Ok(None)
}

fn mul_mod_idx(a: u64, b: u64, e: u64) -> u64 {
    ((a as u128 * b as u128) % e as u128) as u64
}
