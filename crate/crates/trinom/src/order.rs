//! Irreducibility, primitivity and multiplicative order of polynomials over
//! GF(2), plus the degree-targeted distinct-degree question used by the
//! redundant-trinomial search.

use crate::error::Error;
use crate::gf2poly::{mod_pow_x, Gf2Poly};
use crate::intarith::{ensure_limit, factorize};

/// Largest degree accepted by [`certify`]; the order computation factors
/// 2^n - 1, which stays instant up to here.
pub const CERTIFY_DEGREE_LIMIT: u32 = 40;

/// A certified irreducible polynomial together with its degree, its
/// multiplicative order and whether it is primitive.
///
/// Produced by [`certify`]; the order always divides 2^degree - 1, is odd,
/// and the polynomial is primitive exactly when the order equals 2^degree - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleInfo {
    pub poly: Gf2Poly,
    pub degree: u32,
    pub order: u64,
    pub primitive: bool,
}

/// Rabin's irreducibility test: f of degree n is irreducible iff
/// x^(2^n) = x (mod f) and gcd(x^(2^(n/p)) - x, f) = 1 for every prime p | n.
pub fn is_irreducible(f: &Gf2Poly) -> Result<bool, Error> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial("irreducibility")),
        Some(0) => {
            return Err(Error::InvalidArgument(
                "irreducibility is undefined for constants".into(),
            ))
        }
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    if !f.coeff(0) {
        return Ok(false); // divisible by x
    }
    let x = Gf2Poly::x();
    let mut frob = x.clone(); // x^(2^i) mod f, already reduced (deg f >= 2)
    let proper: Vec<u64> = factorize(n).primes().map(|p| n / p).collect();
    for i in 1..=n {
        frob = frob.square().rem(f)?;
        if proper.contains(&i) && !f.gcd(&frob.add(&x)).is_one() {
            return Ok(false);
        }
    }
    Ok(frob == x)
}

/// Certifies irreducibility and computes the multiplicative order: starting
/// from 2^n - 1, each prime of its factorization is divided out while
/// x^(e/p) stays congruent to 1 mod f. The result is the least e with
/// f | x^e - 1, and f is primitive iff nothing could be divided out.
pub fn certify(f: &Gf2Poly) -> Result<IrreducibleInfo, Error> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial("the order"));
    };
    ensure_limit("certify degree", deg, CERTIFY_DEGREE_LIMIT as u64)?;
    if *f == Gf2Poly::x() {
        return Err(Error::OrderOfX);
    }
    if !is_irreducible(f)? {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let n = deg as u32;
    let group = (1u64 << n) - 1;
    let mut order = group;
    if n > 1 {
        for p in factorize(group).primes() {
            while order.is_multiple_of(p) && mod_pow_x(order / p, f)?.is_one() {
                order /= p;
            }
        }
        debug_assert!(mod_pow_x(order, f)?.is_one());
    }
    Ok(IrreducibleInfo {
        poly: f.clone(),
        degree: n,
        order,
        primitive: order == group,
    })
}

/// Product of the distinct irreducible degree-`n` factors of `t`, each taken
/// once, computed by distinct-degree sieving: for i = 1..n the factors of
/// degree exactly i are split off with gcd(x^(2^i) - x, t) and divided out
/// completely, so whatever the step-n gcd returns consists of degree-n
/// factors only. Returns 1 when there are none.
pub fn degree_factor_product(t: &Gf2Poly, n: u32) -> Result<Gf2Poly, Error> {
    let Some(tdeg) = t.degree() else {
        return Err(Error::ZeroPolynomial("factor search"));
    };
    if n == 0 {
        return Err(Error::InvalidArgument("factor degree must be positive".into()));
    }
    if !t.coeff(0) {
        return Err(Error::InvalidArgument(
            "input is divisible by x; shift out the x factor first".into(),
        ));
    }
    if tdeg < n as u64 {
        return Ok(Gf2Poly::one());
    }
    let x = Gf2Poly::x();
    let mut work = t.clone();
    let mut frob = x.rem(&work)?;
    for i in 1..=n as u64 {
        let wdeg = work.degree().unwrap_or(0);
        if wdeg == 0 {
            return Ok(Gf2Poly::one());
        }
        if wdeg < 2 * i {
            // no room for two factors of degree >= i: work itself is irreducible
            return Ok(if wdeg == n as u64 { work } else { Gf2Poly::one() });
        }
        frob = frob.square().rem(&work)?;
        let mut split = work.gcd(&frob.add(&x));
        if i == n as u64 {
            return Ok(split);
        }
        // strip every copy of the degree-i content so it cannot resurface
        // at a later multiple of i
        while !split.is_one() {
            work = work.div_exact(&split);
            split = work.gcd(&split);
        }
        frob = frob.rem(&work)?;
    }
    unreachable!()
}

/// True iff `t` has at least one irreducible factor of degree exactly `n`.
pub fn has_irreducible_factor_of_degree(t: &Gf2Poly, n: u32) -> Result<bool, Error> {
    Ok(!degree_factor_product(t, n)?.is_one())
}

/// True iff `t` has at least one primitive factor of degree exactly `n`.
///
/// Works on the degree-n product directly: for each prime p of 2^n - 1, the
/// factors whose roots satisfy x^((2^n-1)/p) = 1 have non-maximal order and
/// are divided out; anything that survives every prime is primitive. No
/// equal-degree splitting is needed.
pub fn has_primitive_factor_of_degree(t: &Gf2Poly, n: u32) -> Result<bool, Error> {
    ensure_limit("factor degree", n as u64, CERTIFY_DEGREE_LIMIT as u64)?;
    let mut survivors = degree_factor_product(t, n)?;
    if survivors.is_one() {
        return Ok(false);
    }
    let group = (1u64 << n) - 1;
    for p in factorize(group).primes() {
        let low_order = survivors.gcd(&mod_pow_x(group / p, &survivors)?.add(&Gf2Poly::one()));
        survivors = survivors.div_exact(&low_order);
        if survivors.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All irreducible polynomials of degree `n`, ascending by bit pattern.
/// Degree 1 yields x and x+1; higher degrees skip the * x multiples upfront.
pub fn irreducibles_of_degree(n: u32) -> Vec<Gf2Poly> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Gf2Poly::x(), "x+1".parse().unwrap()];
    }
    let mut out = Vec::new();
    for middle in 0..1u64 << (n - 1) {
        let f = Gf2Poly::from_bits((1 << n) | (middle << 1) | 1);
        if is_irreducible(&f).unwrap() {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_irreducible;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p("x^2+x+1")).unwrap());
        assert!(!is_irreducible(&p("x^2+1")).unwrap());
        // cross-checked against trial division by everything of degree <= 4
        assert!(brute_irreducible(&p("x^8+x^4+x^3+x+1")).unwrap());
        assert!(is_irreducible(&p("x^8+x^4+x^3+x+1")).unwrap());
        assert!(is_irreducible(&p("x")).unwrap());
        assert!(is_irreducible(&p("x+1")).unwrap());
        assert!(is_irreducible(&Gf2Poly::one()).is_err());
        assert!(is_irreducible(&Gf2Poly::zero()).is_err());
    }

    #[test]
    fn certify_examples() {
        let info = certify(&p("x^2+x+1")).unwrap();
        assert_eq!((info.degree, info.order, info.primitive), (2, 3, true));
        let info = certify(&p("x^6+x^3+1")).unwrap();
        assert_eq!((info.degree, info.order, info.primitive), (6, 9, false));
        let info = certify(&p("x^4+x^3+x^2+x+1")).unwrap();
        assert_eq!((info.degree, info.order, info.primitive), (4, 5, false));
        let info = certify(&p("x+1")).unwrap();
        assert_eq!((info.degree, info.order, info.primitive), (1, 1, true));
    }

    #[test]
    fn certify_rejects() {
        assert_eq!(certify(&p("x")).unwrap_err(), Error::OrderOfX);
        assert!(matches!(
            certify(&p("x^2+1")).unwrap_err(),
            Error::NotIrreducible(_)
        ));
        assert!(certify(&Gf2Poly::monomial(41).add(&Gf2Poly::one()))
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn degree_factor_examples() {
        // x^5+x+1 = (x^2+x+1)(x^3+x^2+1)
        assert!(has_irreducible_factor_of_degree(&p("x^5+x+1"), 2).unwrap());
        assert!(has_irreducible_factor_of_degree(&p("x^5+x+1"), 3).unwrap());
        assert!(!has_irreducible_factor_of_degree(&p("x^5+x+1"), 5).unwrap());
        assert!(has_irreducible_factor_of_degree(&p("x^3+x+1"), 3).unwrap());
        assert!(!has_irreducible_factor_of_degree(&p("x^6+x^3+1"), 8).unwrap());
        assert!(has_irreducible_factor_of_degree(&p("x^6+x^3+1"), 6).unwrap());
        assert!(has_irreducible_factor_of_degree(&p("x^4+x^2+1"), 2).unwrap()); // (x^2+x+1)^2
        assert!(degree_factor_product(&p("x^4+x^3+x"), 1).is_err());
    }

    #[test]
    fn repeated_low_degree_content_is_fully_stripped() {
        // (x+1)^2 * (x^2+x+1): the leftover x+1 copy must not leak into the
        // degree-2 report
        let t = p("x+1").square().mul(&p("x^2+x+1"));
        assert_eq!(degree_factor_product(&t, 2).unwrap(), p("x^2+x+1"));
        assert_eq!(degree_factor_product(&t, 1).unwrap(), p("x+1"));
    }

    #[test]
    fn primitive_factor_detection() {
        // x^4+x+1 is primitive, x^4+x^3+x^2+x+1 has order 5
        let t = p("x^4+x+1").mul(&p("x^2+x+1"));
        assert!(has_primitive_factor_of_degree(&t, 4).unwrap());
        let t = p("x^4+x^3+x^2+x+1").mul(&p("x^2+x+1"));
        assert!(!has_primitive_factor_of_degree(&t, 4).unwrap());
        // product of both degree-4 kinds: the primitive one must be seen
        let t = p("x^4+x^3+x^2+x+1").mul(&p("x^4+x+1"));
        assert!(has_primitive_factor_of_degree(&t, 4).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(irreducibles_of_degree(1).len(), 2);
        assert_eq!(irreducibles_of_degree(2).len(), 1);
        assert_eq!(irreducibles_of_degree(3).len(), 2);
        assert_eq!(irreducibles_of_degree(4).len(), 3);
        assert_eq!(irreducibles_of_degree(8).len(), 30);
    }
}
