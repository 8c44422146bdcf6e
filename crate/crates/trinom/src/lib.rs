//! Which irreducible polynomials over GF(2) divide trinomials.
//!
//! The crate answers that question exactly, at desk scale, from several
//! directions:
//!
//! - [`gf2poly`]: bit-packed dense GF(2)\[x\] arithmetic (add, carry-less
//!   multiply, division, Euclidean gcd, modular exponentiation of x) that
//!   every other module builds on;
//! - [`intarith`]: 64-bit factorization, divisors, Euler phi and Moebius mu;
//! - [`order`]: Rabin irreducibility, multiplicative order certification and
//!   a degree-targeted distinct-degree factor search;
//! - [`criteria`]: the divisibility criteria themselves -- the order test
//!   for self-reciprocal trinomials, Welch's gcd criterion with its trinomial
//!   count N_f, the extension to x^{am}+x^{bs}+1, and the mod-3 rule for
//!   x^2+x+1;
//! - [`cyclotomic`]: cyclotomic polynomials over GF(2) and the complete
//!   factorization of x^{2m}+x^m+1;
//! - [`oracle`]: brute-force reference implementations, deliberately simple;
//! - [`verify`]: sweeps that replay every criterion against its oracle over
//!   exhaustive input ranges, in parallel when the `parallel` feature
//!   (default) is enabled.

pub mod criteria;
pub mod cyclotomic;
mod error;
pub mod gf2poly;
pub mod intarith;
pub mod oracle;
pub mod order;
pub mod verify;

pub use error::Error;
pub use gf2poly::{Gf2Poly, Trinomial};
pub use order::IrreducibleInfo;
