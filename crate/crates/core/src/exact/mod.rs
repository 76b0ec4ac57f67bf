//! Exact arithmetic kernel: rationals, the quadratic field Q(√5), and dense
//! univariate polynomials over either (or over the integers).
//!
//! Nothing in here touches floating point.

mod poly;
mod quad;

pub use poly::{Coeff, IntPoly, Poly, QuadPoly, RatPoly};
pub use quad::QuadRat;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1)^n` for any integer `n`.
pub fn sign_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Evaluate `p` at an integer point.
pub fn poly_eval(p: &RatPoly, n: &BigInt) -> Rational {
    p.eval(&Rational::from_integer(n.clone()))
}

/// `q(x) = p(x + k)`.
pub fn poly_taylor_shift(p: &RatPoly, k: &BigInt) -> RatPoly {
    p.taylor_shift(&Rational::from_integer(k.clone()))
}

pub fn intpoly_pow(base: &IntPoly, k: u32) -> IntPoly {
    base.pow(k)
}
