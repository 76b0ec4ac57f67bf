use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, ArithmeticError, Rational};

/// An element `r + s·√5` of Q(√5).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    pub r: Rational,
    pub s: Rational,
}

impl QuadRat {
    pub fn new(r: Rational, s: Rational) -> Self {
        QuadRat { r, s }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadRat { r, s: Rational::zero() }
    }

    pub fn sqrt5() -> Self {
        QuadRat::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn alpha() -> Self {
        QuadRat::new(rat(1, 2), rat(1, 2))
    }

    /// (1 − √5)/2, the conjugate root of x² − x − 1.
    pub fn beta() -> Self {
        QuadRat::new(rat(1, 2), rat(-1, 2))
    }

    pub fn conjugate(&self) -> Self {
        QuadRat::new(self.r.clone(), -self.s.clone())
    }

    /// Field norm `r² − 5s²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r - Rational::from_integer(5.into()) * &self.s * &self.s
    }

    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadRat::new(&self.r / &n, -(&self.s / &n)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithmeticError> {
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadRat::new(&self.r * k, &self.s * k)
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) => write!(f, "{}*sqrt5", self.s),
            (false, false) => write!(f, "{} + {}*sqrt5", self.r, self.s),
        }
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.r + &o.r, &self.s + &o.s)
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.r - &o.r, &self.s - &o.s)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, o: &QuadRat) -> QuadRat {
        let five = Rational::from_integer(5.into());
        QuadRat::new(
            &self.r * &o.r + five * &self.s * &o.s,
            &self.r * &o.s + &self.s * &o.r,
        )
    }
}

impl Add for QuadRat {
    type Output = QuadRat;
    fn add(self, o: QuadRat) -> QuadRat {
        &self + &o
    }
}

impl Sub for QuadRat {
    type Output = QuadRat;
    fn sub(self, o: QuadRat) -> QuadRat {
        &self - &o
    }
}

impl Mul for QuadRat {
    type Output = QuadRat;
    fn mul(self, o: QuadRat) -> QuadRat {
        &self * &o
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.r, -self.s)
    }
}

impl Zero for QuadRat {
    fn zero() -> Self {
        QuadRat::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
}

impl One for QuadRat {
    fn one() -> Self {
        QuadRat::from_rational(Rational::one())
    }
}
