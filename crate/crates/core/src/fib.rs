//! Fibonacci numbers over all of Z, the shift identity, and exact powers of
//! the golden ratio.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{sign_pow, QuadRat, Rational};

/// `(F_k, F_{k+1})` by fast doubling.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - k.leading_zeros()).rev() {
        // F_{2m} = F_m (2F_{m+1} - F_m), F_{2m+1} = F_m^2 + F_{m+1}^2
        let c = &a * (&b * 2 - &a);
        let d = &a * &a + &b * &b;
        if (k >> bit) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// `F_n` for any integer `n`, using `F_{-n} = (-1)^{n+1} F_n` below zero.
pub fn fib(n: i64) -> BigInt {
    let f = fib_pair(n.unsigned_abs()).0;
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// Coefficients `(cF, cF1)` with `F_{n-j} = cF·F_n + cF1·F_{n-1}` for every `n`.
pub fn shift_coeffs(j: i64) -> (BigInt, BigInt) {
    let s = sign_pow(j);
    (fib(j - 1) * s, fib(j) * -s)
}

/// `α^n = F_n·α + F_{n-1}` exactly; `β^n` is its conjugate.
pub fn alpha_pow(n: i64) -> QuadRat {
    let fn_ = Rational::from_integer(fib(n));
    let fn1 = Rational::from_integer(fib(n - 1));
    &QuadRat::alpha().scale(&fn_) + &QuadRat::from_rational(fn1)
}

pub fn beta_pow(n: i64) -> QuadRat {
    alpha_pow(n).conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn naive(n: i64) -> BigInt {
        // walk the recurrence outward from (F_0, F_1) in the right direction
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        if n >= 0 {
            for _ in 0..n {
                let next = &a + &b;
                a = std::mem::replace(&mut b, next);
            }
            a
        } else {
            for _ in 0..-n {
                let prev = &b - &a;
                b = std::mem::replace(&mut a, prev);
            }
            a
        }
    }

    #[test]
    fn examples() {
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-4), BigInt::from(-3));
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
    }

    #[test]
    fn matches_naive_walk() {
        for n in -120..=120 {
            assert_eq!(fib(n), naive(n), "n = {n}");
        }
    }

    #[test]
    fn large_index() {
        let f = fib(10_000);
        assert_eq!(f.to_string().len(), 2090);
        assert_eq!(fib(10_001) - fib(10_000), fib(9_999));
    }

    #[test]
    fn recurrence_holds() {
        for n in -50..=50 {
            assert_eq!(fib(n), fib(n - 1) + fib(n - 2));
        }
    }

    #[test]
    fn shift_coeff_examples() {
        let pair = |a: i64, b: i64| (BigInt::from(a), BigInt::from(b));
        assert_eq!(shift_coeffs(0), pair(1, 0));
        assert_eq!(shift_coeffs(2), pair(1, -1));
        assert_eq!(shift_coeffs(-1), pair(1, 1));
        // F_{n+3} = 3F_n + 2F_{n-1}, F_{n+2} = 2F_n + F_{n-1}
        assert_eq!(shift_coeffs(-3), pair(3, 2));
        assert_eq!(shift_coeffs(-2), pair(2, 1));
    }

    #[test]
    fn shift_identity_grid() {
        for j in -15..=15 {
            let (cf, cf1) = shift_coeffs(j);
            for n in -15..=15 {
                assert_eq!(fib(n - j), &cf * fib(n) + &cf1 * fib(n - 1), "j={j} n={n}");
            }
        }
    }

    #[test]
    fn alpha_pow_examples() {
        assert_eq!(alpha_pow(0), QuadRat::one());
        assert_eq!(alpha_pow(5), QuadRat::new(rat(11, 2), rat(5, 2)));
        assert_eq!(alpha_pow(-1), QuadRat::new(rat(-1, 2), rat(1, 2)));
        assert_eq!(beta_pow(1), QuadRat::beta());
    }

    #[test]
    fn alpha_pow_is_a_homomorphism() {
        for m in -20..=20 {
            for n in -20..=20 {
                assert_eq!(alpha_pow(m + n), &alpha_pow(m) * &alpha_pow(n));
            }
        }
    }

    #[test]
    fn binet_cancellation() {
        for n in -30..=30 {
            let diff = &alpha_pow(n) - &beta_pow(n);
            assert_eq!(diff, QuadRat::new(Rational::zero(), Rational::from_integer(fib(n))));
        }
    }
}
