//! Sequences `w_n = Σ p_i(n)·F_{n-j_i} + e + f·(-1)^n` with rational
//! polynomial coefficients.
//!
//! [`FibExpr`] is the working representation. [`CanonForm`] is the normal
//! form `P₀(n)F_n + P₁(n)F_{n-1} + e + f(-1)^n`: two expressions denote the
//! same sequence exactly when their canonical forms are equal.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{rat, sign_pow, QuadPoly, QuadRat, RatPoly, Rational};
use crate::fib::{alpha_pow, beta_pow, fib, shift_coeffs};

/// One summand `p(n)·F_{n-shift}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftTerm {
    shift: i64,
    poly: RatPoly,
}

impl ShiftTerm {
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }
}

/// A formal sum `Σ p_i(n)·F_{n-j_i} + e + f·(-1)^n`.
///
/// Terms are kept sorted by strictly increasing shift with no zero
/// polynomials, so structurally equal expressions compare equal. Semantic
/// equality needs [`FibExpr::canonical_eq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibExpr {
    terms: Vec<ShiftTerm>,
    const_e: Rational,
    alt_f: Rational,
}

impl Default for FibExpr {
    fn default() -> Self {
        FibExpr::zero()
    }
}

impl FibExpr {
    pub fn zero() -> Self {
        FibExpr {
            terms: Vec::new(),
            const_e: Rational::zero(),
            alt_f: Rational::zero(),
        }
    }

    /// Build from `(shift, poly)` pairs; equal shifts are summed and zero
    /// polynomials dropped.
    pub fn new(
        terms: impl IntoIterator<Item = (i64, RatPoly)>,
        const_e: Rational,
        alt_f: Rational,
    ) -> Self {
        let mut merged: BTreeMap<i64, RatPoly> = BTreeMap::new();
        for (shift, poly) in terms {
            let slot = merged.entry(shift).or_insert_with(RatPoly::zero);
            *slot = &*slot + &poly;
        }
        FibExpr {
            terms: merged
                .into_iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(shift, poly)| ShiftTerm { shift, poly })
                .collect(),
            const_e,
            alt_f,
        }
    }

    /// `p(n)·F_{n-shift}`
    pub fn term(poly: RatPoly, shift: i64) -> Self {
        FibExpr::new([(shift, poly)], Rational::zero(), Rational::zero())
    }

    /// `F_{n-shift}`
    pub fn fib(shift: i64) -> Self {
        FibExpr::term(RatPoly::one(), shift)
    }

    pub fn constant(e: Rational) -> Self {
        FibExpr::new([], e, Rational::zero())
    }

    pub fn alternating(f: Rational) -> Self {
        FibExpr::new([], Rational::zero(), f)
    }

    pub fn terms(&self) -> &[ShiftTerm] {
        &self.terms
    }

    pub fn const_e(&self) -> &Rational {
        &self.const_e
    }

    pub fn alt_f(&self) -> &Rational {
        &self.alt_f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.const_e.is_zero() && self.alt_f.is_zero()
    }

    /// Largest coefficient-polynomial degree, `None` without Fibonacci terms.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.iter().filter_map(|t| t.poly.degree()).max()
    }

    /// Exact value of `w_n`.
    pub fn evaluate(&self, n: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(n));
        let fib_part = self.terms.iter().fold(Rational::zero(), |acc, t| {
            acc + t.poly.eval(&x) * Rational::from_integer(fib(n - t.shift))
        });
        fib_part + &self.const_e + &self.alt_f * Rational::from_integer(sign_pow(n).into())
    }

    pub fn values(&self, range: std::ops::RangeInclusive<i64>) -> Vec<Rational> {
        range.map(|n| self.evaluate(n)).collect()
    }

    /// Rewrite every `F_{n-j}` through the shift identity into `F_n` and `F_{n-1}`.
    pub fn canonicalize(&self) -> CanonForm {
        let mut p0 = RatPoly::zero();
        let mut p1 = RatPoly::zero();
        for t in &self.terms {
            let (cf, cf1) = shift_coeffs(t.shift);
            p0 = &p0 + &t.poly.scale(&Rational::from_integer(cf));
            p1 = &p1 + &t.poly.scale(&Rational::from_integer(cf1));
        }
        CanonForm {
            p0,
            p1,
            const_e: self.const_e.clone(),
            alt_f: self.alt_f.clone(),
        }
    }

    pub fn canonical_eq(&self, other: &FibExpr) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Pointwise multiple of the sequence.
    pub fn scale(&self, r: &Rational) -> FibExpr {
        FibExpr::new(
            self.terms.iter().map(|t| (t.shift, t.poly.scale(r))),
            &self.const_e * r,
            &self.alt_f * r,
        )
    }

    /// The sequence `n ↦ w_{n+k}`.
    pub fn shift_index(&self, k: i64) -> FibExpr {
        let kk = Rational::from_integer(BigInt::from(k));
        FibExpr::new(
            self.terms.iter().map(|t| (t.shift - k, t.poly.taylor_shift(&kk))),
            self.const_e.clone(),
            &self.alt_f * Rational::from_integer(sign_pow(k).into()),
        )
    }

    /// `w_n − e − f(-1)^n = q_α(n)·α^n − q_β(n)·β^n` with
    /// `q_α = Σ p_t / (√5·α^{j_t})` and `q_β = Σ p_t / (√5·β^{j_t})`.
    pub fn binet_decompose(&self) -> BinetForm {
        let inv_sqrt5 = QuadRat::new(Rational::zero(), rat(1, 5));
        let mut q_alpha = QuadPoly::zero();
        let mut q_beta = QuadPoly::zero();
        for t in &self.terms {
            let p = t.poly.to_quad();
            let ca = &alpha_pow(-t.shift) * &inv_sqrt5;
            let cb = &beta_pow(-t.shift) * &inv_sqrt5;
            q_alpha = &q_alpha + &p.scale(&ca);
            q_beta = &q_beta + &p.scale(&cb);
        }
        BinetForm { q_alpha, q_beta }
    }
}

impl Add for &FibExpr {
    type Output = FibExpr;
    fn add(self, o: &FibExpr) -> FibExpr {
        FibExpr::new(
            self.terms
                .iter()
                .chain(&o.terms)
                .map(|t| (t.shift, t.poly.clone())),
            &self.const_e + &o.const_e,
            &self.alt_f + &o.alt_f,
        )
    }
}

impl Add for FibExpr {
    type Output = FibExpr;
    fn add(self, o: FibExpr) -> FibExpr {
        &self + &o
    }
}

impl Neg for &FibExpr {
    type Output = FibExpr;
    fn neg(self) -> FibExpr {
        self.scale(&-Rational::one())
    }
}

impl Sub for &FibExpr {
    type Output = FibExpr;
    fn sub(self, o: &FibExpr) -> FibExpr {
        self + &-o
    }
}

/// `P₀(n)F_n + P₁(n)F_{n-1} + e + f(-1)^n`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonForm {
    pub p0: RatPoly,
    pub p1: RatPoly,
    pub const_e: Rational,
    pub alt_f: Rational,
}

impl CanonForm {
    /// `max(deg P₀, deg P₁)`, or `None` when both vanish.
    pub fn fib_degree(&self) -> Option<usize> {
        self.p0.degree().max(self.p1.degree())
    }

    pub fn to_expr(&self) -> FibExpr {
        FibExpr::new(
            [(0, self.p0.clone()), (1, self.p1.clone())],
            self.const_e.clone(),
            self.alt_f.clone(),
        )
    }
}

/// The pair `(q_α, q_β)` of the Binet decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinetForm {
    pub q_alpha: QuadPoly,
    pub q_beta: QuadPoly,
}

impl BinetForm {
    /// `q_α(n)·α^n − q_β(n)·β^n` in Q(√5).
    pub fn eval(&self, n: i64) -> QuadRat {
        let x = QuadRat::from_rational(Rational::from_integer(n.into()));
        &(&self.q_alpha.eval(&x) * &alpha_pow(n)) - &(&self.q_beta.eval(&x) * &beta_pow(n))
    }

    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        (self.q_alpha.degree(), self.q_beta.degree())
    }
}
