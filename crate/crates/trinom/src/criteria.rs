//! The divisibility criteria: which irreducible polynomials over GF(2)
//! divide trinomials, self-reciprocal trinomials, and the stretched shape
//! x^{am} + x^{bs} + 1.
//!
//! The central tool is the Welch gcd `gcd(1 + x^e, 1 + (1+x)^e)`: its roots
//! are exactly the elements beta with beta^e = (1+beta)^e = 1, i.e. the
//! root pairs that produce trinomial relations, so half its degree counts
//! the trinomials of degree < e divisible by any irreducible of order e.

use crate::error::Error;
use crate::gf2poly::{ensure_degree, one_plus_x_pow, Gf2Poly, Trinomial};
use crate::intarith::gcd;
use crate::oracle::PowerTable;
use crate::order::{certify, IrreducibleInfo};

/// True iff the polynomial divides some self-reciprocal trinomial
/// x^{2m} + x^m + 1, which happens exactly when its order is a multiple of 3.
pub fn divides_some_selfreciprocal(info: &IrreducibleInfo) -> bool {
    info.order.is_multiple_of(3)
}

/// The one self-reciprocal trinomial of degree < e divisible by the given
/// polynomial: x^{2e/3} + x^{e/3} + 1. There is never a second one below
/// degree e.
pub fn unique_srt(info: &IrreducibleInfo) -> Result<Trinomial, Error> {
    if !info.order.is_multiple_of(3) {
        return Err(Error::OrderNotMultipleOf3(info.order));
    }
    let m = info.order / 3;
    Trinomial::new(2 * m, m)
}

/// The Welch gcd `gcd(1 + x^e, 1 + (1+x)^e)` for odd e. Its degree is even:
/// roots come in pairs {beta, beta + 1}, and neither 0 nor 1 qualifies.
pub fn welch_gcd(e: u64) -> Result<Gf2Poly, Error> {
    if e == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if e.is_multiple_of(2) {
        return Err(Error::EvenOrder(e));
    }
    ensure_degree(e)?;
    let lhs = Gf2Poly::monomial(e).add(&Gf2Poly::one());
    let rhs = one_plus_x_pow(e)?;
    Ok(lhs.gcd(&rhs))
}

/// Number of trinomials of degree < e divisible by the polynomial: half the
/// Welch gcd degree, degenerating to 0 when the gcd is constant.
pub fn count_nf(info: &IrreducibleInfo) -> Result<u64, Error> {
    Ok(welch_gcd(info.order)?.degree().unwrap_or(0) / 2)
}

/// Welch's criterion: the irreducible polynomials of order e divide
/// trinomials iff the Welch gcd has degree greater than 1.
pub fn welch(e: u64) -> Result<bool, Error> {
    Ok(welch_gcd(e)?.degree().unwrap_or(0) > 1)
}

/// Extended criterion for x^{am} + x^{bs} + 1: the irreducible polynomials
/// of order e divide one of them for some m, s >= 1 iff
/// gcd(1 + x^{e1}, 1 + (1+x)^{e2}) has degree greater than 1, where
/// e1 = e/gcd(a,e) and e2 = e/gcd(b,e) are the orders of the a-th and b-th
/// powers of a root.
pub fn ext_welch(e: u64, a: u64, b: u64) -> Result<bool, Error> {
    if e == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if e.is_multiple_of(2) {
        return Err(Error::EvenOrder(e));
    }
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("exponent multipliers must be positive".into()));
    }
    ensure_degree(e)?;
    let e1 = e / gcd(a, e);
    let e2 = e / gcd(b, e);
    let lhs = Gf2Poly::monomial(e1).add(&Gf2Poly::one());
    let rhs = one_plus_x_pow(e2)?;
    Ok(lhs.gcd(&rhs).degree().unwrap_or(0) > 1)
}

/// Convenience wrapper that certifies `f` first and then answers the
/// order-level question for its order.
pub fn ext_welch_poly(f: &Gf2Poly, a: u64, b: u64) -> Result<bool, Error> {
    ext_welch(certify(f)?.order, a, b)
}

/// Necessary condition for f of order e > 1 to divide x^{am} + x^{bs} + 1:
/// none of am, bs, |am - bs| may be a multiple of e. Returns false when the
/// divisibility is impossible for every irreducible of order e.
pub fn necessary_check(e: u64, a: u64, b: u64, m: u64, s: u64) -> Result<bool, Error> {
    if e < 2 {
        return Err(Error::InvalidArgument("order must exceed 1".into()));
    }
    if a == 0 || b == 0 || m == 0 || s == 0 {
        return Err(Error::InvalidArgument("exponents must be positive".into()));
    }
    let am = a as u128 * m as u128;
    let bs = b as u128 * s as u128;
    if am == bs {
        return Err(Error::DegenerateTrinomial(am));
    }
    let e = e as u128;
    Ok(!am.is_multiple_of(e) && !bs.is_multiple_of(e) && !am.abs_diff(bs).is_multiple_of(e))
}

/// Decides x^2+x+1 | x^n + x^k + 1 purely from residues: it divides iff
/// none of n, k, n - k is a multiple of 3.
pub fn mod3_divides(n: u64, k: u64) -> Result<bool, Error> {
    if n <= k || k == 0 {
        return Err(Error::InvalidTrinomial { n, k });
    }
    Ok(!n.is_multiple_of(3) && !k.is_multiple_of(3) && !(n - k).is_multiple_of(3))
}

/// All trinomials x^n + x^k + 1 with k < n < bound divisible by the given
/// irreducible, sorted by (n, k). Walks the root's power table and pairs
/// exponents with x^i + x^j = 1 instead of trial-dividing candidates.
/// Requires bound <= order; degrees beyond the order repeat with period e
/// in each exponent, so callers lift solutions instead of enumerating.
pub fn list_trinomial_multiples(
    info: &IrreducibleInfo,
    bound: u64,
) -> Result<Vec<Trinomial>, Error> {
    if bound > info.order {
        return Err(Error::InvalidArgument(format!(
            "bound {bound} exceeds the order {}; larger degrees repeat with period e",
            info.order
        )));
    }
    if bound < 2 {
        return Ok(Vec::new());
    }
    let table = PowerTable::build_prefix(&info.poly, bound)?;
    let mut out = Vec::new();
    for i in 1..bound {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::Gf2Poly;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    fn info(s: &str) -> IrreducibleInfo {
        certify(&p(s)).unwrap()
    }

    #[test]
    fn selfreciprocal_divisibility() {
        assert!(divides_some_selfreciprocal(&info("x^2+x+1")));
        assert!(!divides_some_selfreciprocal(&info("x^4+x^3+x^2+x+1")));
        let i = info("x^4+x+1");
        assert!(divides_some_selfreciprocal(&i));
        // e = 15: the promised multiple is x^10+x^5+1
        let t = unique_srt(&i).unwrap();
        assert_eq!(t, Trinomial::new(10, 5).unwrap());
        assert!(t.to_poly().unwrap().is_divisible_by(&i.poly).unwrap());
    }

    #[test]
    fn unique_srt_examples() {
        assert_eq!(unique_srt(&info("x^2+x+1")).unwrap(), Trinomial::new(2, 1).unwrap());
        assert_eq!(unique_srt(&info("x^6+x^3+1")).unwrap(), Trinomial::new(6, 3).unwrap());
        assert_eq!(
            unique_srt(&info("x^4+x^3+x^2+x+1")).unwrap_err(),
            Error::OrderNotMultipleOf3(5)
        );
    }

    #[test]
    fn welch_gcd_examples() {
        assert_eq!(welch_gcd(3).unwrap(), p("x^2+x+1"));
        assert_eq!(welch_gcd(5).unwrap(), Gf2Poly::one());
        assert_eq!(welch_gcd(7).unwrap(), p("x^3+x+1").mul(&p("x^3+x^2+1")));
        assert_eq!(welch_gcd(4).unwrap_err(), Error::EvenOrder(4));
        assert!(welch_gcd(0).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_nf(&info("x^2+x+1")).unwrap(), 1);
        assert_eq!(count_nf(&info("x^3+x+1")).unwrap(), 3);
        assert_eq!(count_nf(&info("x^4+x^3+x^2+x+1")).unwrap(), 0);
        assert_eq!(count_nf(&info("x+1")).unwrap(), 0);
    }

    #[test]
    fn welch_examples() {
        assert!(welch(3).unwrap());
        assert!(!welch(5).unwrap());
        assert!(welch(7).unwrap());
        assert!(!welch(1).unwrap());
    }

    #[test]
    fn ext_welch_examples() {
        assert!(ext_welch(9, 3, 1).unwrap());
        assert!(!ext_welch(5, 2, 1).unwrap());
        for e in [3u64, 7, 9, 15] {
            assert!(!ext_welch(e, e, 1).unwrap());
        }
        assert!(ext_welch_poly(&p("x^6+x^3+1"), 3, 1).unwrap());
    }

    #[test]
    fn necessary_check_examples() {
        assert!(!necessary_check(7, 7, 1, 1, 1).unwrap());
        assert!(necessary_check(3, 1, 1, 5, 1).unwrap());
        assert!(p("x^5+x+1").is_divisible_by(&p("x^2+x+1")).unwrap());
        assert!(!necessary_check(3, 1, 1, 4, 1).unwrap());
        assert!(!p("x^4+x+1").is_divisible_by(&p("x^2+x+1")).unwrap());
        assert!(matches!(
            necessary_check(7, 2, 1, 3, 6).unwrap_err(),
            Error::DegenerateTrinomial(6)
        ));
        assert!(necessary_check(1, 1, 1, 2, 1).is_err());
    }

    #[test]
    fn mod3_examples() {
        assert!(mod3_divides(5, 1).unwrap());
        assert!(!mod3_divides(3, 1).unwrap());
        assert!(mod3_divides(2, 1).unwrap());
        assert!(mod3_divides(1, 1).is_err());
    }

    #[test]
    fn list_examples() {
        let l: Vec<String> = list_trinomial_multiples(&info("x^3+x+1"), 7)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(l, vec!["x^3+x+1", "x^5+x^4+1", "x^6+x^2+1"]);
        assert!(list_trinomial_multiples(&info("x^4+x^3+x^2+x+1"), 5)
            .unwrap()
            .is_empty());
        assert_eq!(
            list_trinomial_multiples(&info("x^2+x+1"), 3).unwrap(),
            vec![Trinomial::new(2, 1).unwrap()]
        );
        assert!(list_trinomial_multiples(&info("x^3+x+1"), 8).is_err());
    }
}
