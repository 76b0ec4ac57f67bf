//! Characteristic polynomials and constant-coefficient recurrences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{IntPoly, Rational};
use crate::seqform::{CanonForm, FibExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CFiniteError {
    #[error("cannot extend an order-0 recurrence backwards")]
    EmptyRecurrence,
    #[error("constant coefficient {0} of the characteristic polynomial is not a unit")]
    NonUnitConstant(BigInt),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// `w_n = c_1·w_{n-1} + … + c_m·w_{n-m}` together with `w_0 … w_{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub order: usize,
    pub coeffs: Vec<BigInt>,
    pub char_poly: IntPoly,
    pub initial: Vec<Rational>,
}

fn golden() -> IntPoly {
    IntPoly::new(vec![BigInt::from(-1), BigInt::from(-1), BigInt::one()])
}

fn linear(root: i64) -> IntPoly {
    IntPoly::new(vec![BigInt::from(-root), BigInt::one()])
}

/// `(x²−x−1)^{D+1}·(x−1)^{[e≠0]}·(x+1)^{[f≠0]}` with `D = max(deg P₀, deg P₁)`;
/// the golden factor is dropped entirely when `P₀ = P₁ = 0`.
pub fn char_poly(c: &CanonForm) -> IntPoly {
    let mut out = match c.fib_degree() {
        Some(d) => golden().pow(d as u32 + 1),
        None => IntPoly::one(),
    };
    if !c.const_e.is_zero() {
        out = &out * &linear(1);
    }
    if !c.alt_f.is_zero() {
        out = &out * &linear(-1);
    }
    out
}

impl Recurrence {
    /// Reads the recurrence off a monic characteristic polynomial.
    pub fn from_char_poly(char_poly: IntPoly, initial: Vec<Rational>) -> Self {
        let order = char_poly.degree().unwrap_or(0);
        assert_eq!(initial.len(), order, "need one initial value per order");
        let coeffs = (1..=order).map(|i| -char_poly.coeff(order - i)).collect();
        Recurrence {
            order,
            coeffs,
            char_poly,
            initial,
        }
    }

    /// `Σ c_i·w_{n-i}` for the window ending just before `n`.
    fn step(&self, window: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(window.iter().rev())
            .fold(Rational::zero(), |acc, (c, w)| acc + Rational::from_integer(c.clone()) * w)
    }

    /// Does `E` satisfy this recurrence at every `n` in `[lo, hi]`?
    pub fn holds_for(&self, expr: &FibExpr, lo: i64, hi: i64) -> bool {
        let m = self.order as i64;
        let mut window: Vec<Rational> = (lo - m..lo).map(|n| expr.evaluate(n)).collect();
        for n in lo..=hi {
            let w = expr.evaluate(n);
            if self.step(&window) != w {
                return false;
            }
            if m > 0 {
                window.remove(0);
                window.push(w);
            }
        }
        true
    }

    /// Forward: `w_m … w_{m+count-1}`. Backward: `w_{-1} … w_{-count}`.
    pub fn extend(&self, count: usize, direction: Direction) -> Result<Vec<Rational>, CFiniteError> {
        match direction {
            Direction::Forward => {
                let mut window = self.initial.clone();
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    let next = self.step(&window);
                    if !window.is_empty() {
                        window.remove(0);
                        window.push(next.clone());
                    }
                    out.push(next);
                }
                Ok(out)
            }
            Direction::Backward => {
                let last = self.coeffs.last().ok_or(CFiniteError::EmptyRecurrence)?;
                if !last.abs().is_one() {
                    return Err(CFiniteError::NonUnitConstant(last.clone()));
                }
                let last = Rational::from_integer(last.clone());
                let m = self.order;
                // w_{n-m} = (w_n - Σ_{i<m} c_i w_{n-i}) / c_m, sliding n down from m-1
                let mut window = self.initial.clone();
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    let partial = self.coeffs[..m - 1]
                        .iter()
                        .zip(window[..m - 1].iter().rev())
                        .fold(Rational::zero(), |acc, (c, w)| {
                            acc + Rational::from_integer(c.clone()) * w
                        });
                    let prev = (&window[m - 1] - partial) / &last;
                    window.pop();
                    window.insert(0, prev.clone());
                    out.push(prev);
                }
                Ok(out)
            }
        }
    }
}

pub fn to_recurrence(expr: &FibExpr) -> Recurrence {
    let cp = char_poly(&expr.canonicalize());
    let order = cp.degree().unwrap_or(0) as i64;
    Recurrence::from_char_poly(cp, expr.values(0..=order - 1))
}

pub fn verify_recurrence(expr: &FibExpr, lo: i64, hi: i64) -> bool {
    to_recurrence(expr).holds_for(expr, lo, hi)
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

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn bigs(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| int(c)).collect()
    }

    fn a010049() -> FibExpr {
        FibExpr::new([(0, rp(&[(3, 5), (2, 5)])), (1, rp(&[(0, 1), (-1, 5)]))], int(0), int(0))
    }

    fn nemeth() -> FibExpr {
        FibExpr::new(
            [(-1, rp(&[(0, 1), (4, 5)])), (0, rp(&[(3, 5), (3, 5)]))],
            rat(1, 2),
            rat(1, 2),
        )
    }

    fn theorem3_example() -> FibExpr {
        FibExpr::new(
            [(0, rp(&[(88, 50), (-43, 50), (5, 50)])), (1, rp(&[(50, 50), (14, 50)]))],
            int(0),
            int(0),
        )
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&a010049().canonicalize()), ip(&[1, 2, -1, -2, 1]));
        assert_eq!(char_poly(&theorem3_example().canonicalize()), ip(&[-1, -3, 0, 5, 0, -3, 1]));
        let expected = &ip(&[1, 2, -1, -2, 1]) * &ip(&[-1, 0, 1]);
        let got = char_poly(&nemeth().canonicalize());
        assert_eq!(got, expected);
        assert_eq!(got.degree(), Some(6));
        assert_eq!(char_poly(&FibExpr::zero().canonicalize()), IntPoly::one());
        assert_eq!(char_poly(&FibExpr::constant(int(3)).canonicalize()), ip(&[-1, 1]));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(to_recurrence(&a010049()).coeffs, bigs(&[2, 1, -2, -1]));
        assert_eq!(to_recurrence(&theorem3_example()).coeffs, bigs(&[3, 0, -5, 0, 3, 1]));
        let z = to_recurrence(&FibExpr::zero());
        assert_eq!(z.order, 0);
        assert!(z.coeffs.is_empty() && z.initial.is_empty());
    }

    #[test]
    fn verify_examples() {
        assert!(verify_recurrence(&a010049(), 4, 40));
        assert!(verify_recurrence(&nemeth(), 6, 40));
        let mut bad = to_recurrence(&a010049());
        bad.coeffs[0] += 1;
        assert!(!bad.holds_for(&a010049(), 4, 10));
    }

    #[test]
    fn extend_examples() {
        let r = to_recurrence(&a010049());
        assert_eq!(r.initial, ints(&[0, 1, 1, 3]));
        assert_eq!(r.extend(3, Direction::Forward).unwrap(), ints(&[5, 10, 18]));

        let fibo = to_recurrence(&FibExpr::fib(0));
        assert_eq!(fibo.initial, ints(&[0, 1]));
        assert_eq!(fibo.extend(4, Direction::Backward).unwrap(), ints(&[1, -1, 2, -3]));

        let r = to_recurrence(&theorem3_example());
        assert_eq!(r.initial, ints(&[1, 1, 2, 2, 4, 7]));
        assert_eq!(r.extend(5, Direction::Forward).unwrap(), ints(&[15, 32, 69, 146, 303]));
    }

    #[test]
    fn extend_error_paths() {
        let z = to_recurrence(&FibExpr::zero());
        assert_eq!(z.extend(2, Direction::Backward), Err(CFiniteError::EmptyRecurrence));
        assert_eq!(z.extend(2, Direction::Forward).unwrap(), ints(&[0, 0]));
        let odd = Recurrence::from_char_poly(ip(&[2, -3, 1]), ints(&[0, 1]));
        assert_eq!(
            odd.extend(1, Direction::Backward),
            Err(CFiniteError::NonUnitConstant(BigInt::from(-2)))
        );
    }

    proptest! {
        #[test]
        fn derived_recurrence_holds(e in arb_expr()) {
            let r = to_recurrence(&e);
            prop_assert!(r.holds_for(&e, -25, 25));
            let back = r.extend(8, Direction::Backward);
            if r.order > 0 {
                prop_assert_eq!(back.unwrap(), (1..=8).map(|k| e.evaluate(-k)).collect::<Vec<_>>());
            }
        }

        #[test]
        fn unit_constant_and_order_law(e in arb_expr()) {
            let c = e.canonicalize();
            let r = to_recurrence(&e);
            prop_assert!(r.char_poly.leading().is_none_or(|l| l.is_one()));
            if r.order > 0 {
                prop_assert!(r.char_poly.coeff(0).abs().is_one());
            }
            let spectral = usize::from(!c.const_e.is_zero()) + usize::from(!c.alt_f.is_zero());
            let expected = c.fib_degree().map_or(0, |d| 2 * (d + 1)) + spectral;
            prop_assert_eq!(r.order, expected);
        }

        #[test]
        fn integer_initial_values_propagate(e in arb_integral_expr()) {
            let r = to_recurrence(&e);
            prop_assume!(r.order > 0);
            prop_assert!(r.initial.iter().all(|v| v.is_integer()));
            for dir in [Direction::Forward, Direction::Backward] {
                prop_assert!(r.extend(100, dir).unwrap().iter().all(|v| v.is_integer()));
            }
        }
    }
}
