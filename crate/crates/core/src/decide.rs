//! Integrality over all of Z.
//!
//! The characteristic polynomial of every expression is monic with integer
//! coefficients and constant term ±1, so the recurrence and its inverse both
//! map integer windows to integers. Integrality therefore reduces to the
//! first `order` values.

use num_bigint::BigInt;

use crate::cfinite::to_recurrence;
use crate::exact::Rational;
use crate::seqform::FibExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralityVerdict {
    /// `w_0 … w_{m-1}`, all integers.
    Integral { certificate: Vec<BigInt> },
    NonIntegral {
        witness: i64,
        value: Rational,
    },
}

impl IntegralityVerdict {
    pub fn is_integral(&self) -> bool {
        matches!(self, IntegralityVerdict::Integral { .. })
    }
}

pub fn is_integer_sequence(expr: &FibExpr) -> IntegralityVerdict {
    let rec = to_recurrence(expr);
    let mut certificate = Vec::with_capacity(rec.order);
    for (n, v) in rec.initial.into_iter().enumerate() {
        if !v.is_integer() {
            return IntegralityVerdict::NonIntegral {
                witness: n as i64,
                value: v,
            };
        }
        certificate.push(v.to_integer());
    }
    IntegralityVerdict::Integral { certificate }
}

/// First `n` in `[lo, hi]` where `w_n` is not an integer.
pub fn brute_scan(expr: &FibExpr, lo: i64, hi: i64) -> Option<i64> {
    (lo..=hi).find(|&n| !expr.evaluate(n).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, RatPoly};
    use crate::testing::{arb_expr, arb_integral_expr};
    use proptest::prelude::*;

    fn rp(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn bigs(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn a010049() -> FibExpr {
        FibExpr::new([(0, rp(&[(3, 5), (2, 5)])), (1, rp(&[(0, 1), (-1, 5)]))], int(0), int(0))
    }

    fn half_n_fib() -> FibExpr {
        FibExpr::term(rp(&[(0, 1), (1, 2)]), 0)
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            is_integer_sequence(&a010049()),
            IntegralityVerdict::Integral { certificate: bigs(&[0, 1, 1, 3]) }
        );
        assert_eq!(
            is_integer_sequence(&half_n_fib()),
            IntegralityVerdict::NonIntegral { witness: 1, value: rat(1, 2) }
        );
        let t3 = FibExpr::new(
            [(0, rp(&[(88, 50), (-43, 50), (5, 50)])), (1, rp(&[(50, 50), (14, 50)]))],
            int(0),
            int(0),
        );
        assert_eq!(
            is_integer_sequence(&t3),
            IntegralityVerdict::Integral { certificate: bigs(&[1, 1, 2, 2, 4, 7]) }
        );
        assert_eq!(
            is_integer_sequence(&FibExpr::zero()),
            IntegralityVerdict::Integral { certificate: vec![] }
        );
        assert_eq!(
            is_integer_sequence(&FibExpr::constant(rat(1, 2))),
            IntegralityVerdict::NonIntegral { witness: 0, value: rat(1, 2) }
        );
    }

    #[test]
    fn scan_examples() {
        assert_eq!(brute_scan(&a010049(), -40, 40), None);
        // n·F_n/2 is integral for even n and for n ≡ 0 mod 3; -7 is the first miss
        assert_eq!(brute_scan(&half_n_fib(), -10, 10), Some(-7));
        assert_eq!(brute_scan(&FibExpr::zero(), -100, 100), None);
    }

    proptest! {
        #[test]
        fn decision_agrees_with_scan(e in arb_expr()) {
            let verdict = is_integer_sequence(&e);
            prop_assert_eq!(verdict.is_integral(), brute_scan(&e, -40, 40).is_none());
            if let IntegralityVerdict::NonIntegral { witness, value } = verdict {
                prop_assert!(!value.is_integer());
                prop_assert_eq!(e.evaluate(witness), value);
            }
        }

        #[test]
        fn synthesized_integer_sequences_are_integral(e in arb_integral_expr()) {
            prop_assert!(is_integer_sequence(&e).is_integral());
            prop_assert_eq!(brute_scan(&e, -40, 40), None);
        }
    }
}
