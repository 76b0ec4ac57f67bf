use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{QuadRat, Rational};

/// Coefficient ring for [`Poly`].
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Trailing zeros are stripped on construction, so the zero polynomial is the
/// empty coefficient list and has no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = Poly<Rational>;
pub type QuadPoly = Poly<QuadRat>;
pub type IntPoly = Poly<BigInt>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Returns `q` with `q(x) = self(x + k)`, expanded by Horner composition.
    pub fn taylor_shift(&self, k: &T) -> Self {
        let step = Poly::new(vec![k.clone(), T::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: Poly<T>) -> Poly<T> {
        &self + &o
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: Poly<T>) -> Poly<T> {
        &self - &o
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: Poly<T>) -> Poly<T> {
        &self * &o
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl RatPoly {
    pub fn to_quad(&self) -> QuadPoly {
        self.map(|c| QuadRat::from_rational(c.clone()))
    }
}

impl QuadPoly {
    /// Apply the Q(√5) conjugation coefficientwise.
    pub fn conjugate(&self) -> QuadPoly {
        self.map(QuadRat::conjugate)
    }
}
