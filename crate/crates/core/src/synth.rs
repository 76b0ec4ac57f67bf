//! Recover rational coefficients from integer initial values.
//!
//! A [`Template`] fixes which coefficient slots exist; the values
//! `w_0 … w_{k-1}` are linear in those slots, so the slots follow from one
//! exact `k × k` solve.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat, sign_pow, RatPoly, Rational};
use crate::fib::fib;
use crate::seqform::FibExpr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("degenerate template: the initial-value system is singular")]
    Degenerate,
    #[error("expected {expected} values, got {got}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("template has no unknowns")]
    EmptyTemplate,
}

/// Shape `P₀(n)F_n + P₁(n)F_{n-1} [+ e] [+ f(-1)^n]` with fixed degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Template {
    pub deg_p0: Option<usize>,
    pub deg_p1: Option<usize>,
    pub has_const: bool,
    pub has_alt: bool,
}

/// The four closed-form families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `(an+b)F_n + (cn+d)F_{n-1}`
    LinearLinear,
    /// `(an²+bn+c)F_n + (dn²+en+f)F_{n-1}`
    QuadraticQuadratic,
    /// `(an²+bn+c)F_n + (dn+e)F_{n-1}`
    QuadraticLinear,
    /// `(an+b)F_n + (cn+d)F_{n-1} + e + f(-1)^n`
    LinearAlternating,
}

impl Theorem {
    pub fn from_number(k: u8) -> Option<Theorem> {
        match k {
            1 => Some(Theorem::LinearLinear),
            2 => Some(Theorem::QuadraticQuadratic),
            3 => Some(Theorem::QuadraticLinear),
            4 => Some(Theorem::LinearAlternating),
            _ => None,
        }
    }

    pub fn template(self) -> Template {
        let (d0, d1, alt) = match self {
            Theorem::LinearLinear => (1, 1, false),
            Theorem::QuadraticQuadratic => (2, 2, false),
            Theorem::QuadraticLinear => (2, 1, false),
            Theorem::LinearAlternating => (1, 1, true),
        };
        Template {
            deg_p0: Some(d0),
            deg_p1: Some(d1),
            has_const: alt,
            has_alt: alt,
        }
    }

    /// Number of integer parameters [`theorem_construct`] expects.
    pub fn param_count(self) -> usize {
        self.template().unknowns()
    }
}

impl Template {
    pub fn unknowns(&self) -> usize {
        self.deg_p0.map_or(0, |d| d + 1)
            + self.deg_p1.map_or(0, |d| d + 1)
            + usize::from(self.has_const)
            + usize::from(self.has_alt)
    }

    /// Slot names in column order: `a, b, c, …`.
    pub fn slot_names(&self) -> Vec<String> {
        (0..self.unknowns())
            .map(|i| match u8::try_from(i).ok().filter(|&i| i < 26) {
                Some(i) => char::from(b'a' + i).to_string(),
                None => format!("u{i}"),
            })
            .collect()
    }

    /// Value of every column at index `n`.
    fn row(&self, n: i64) -> Vec<Rational> {
        let x = Rational::from_integer(BigInt::from(n));
        let pow = |k: usize| num_traits::pow(x.clone(), k);
        let mut row = Vec::with_capacity(self.unknowns());
        if let Some(d) = self.deg_p0 {
            let f = Rational::from_integer(fib(n));
            row.extend((0..=d).rev().map(|k| pow(k) * &f));
        }
        if let Some(d) = self.deg_p1 {
            let f = Rational::from_integer(fib(n - 1));
            row.extend((0..=d).rev().map(|k| pow(k) * &f));
        }
        if self.has_const {
            row.push(Rational::one());
        }
        if self.has_alt {
            row.push(Rational::from_integer(sign_pow(n).into()));
        }
        row
    }

    /// Assemble the expression for a coefficient vector in column order.
    pub fn expr_from_coeffs(&self, coeffs: &[Rational]) -> FibExpr {
        assert_eq!(coeffs.len(), self.unknowns());
        let mut rest = coeffs;
        let mut take_poly = |deg: Option<usize>| match deg {
            Some(d) => {
                let (head, tail) = rest.split_at(d + 1);
                rest = tail;
                RatPoly::new(head.iter().rev().cloned().collect())
            }
            None => RatPoly::zero(),
        };
        let p0 = take_poly(self.deg_p0);
        let p1 = take_poly(self.deg_p1);
        let mut rest = rest.iter();
        let e = if self.has_const { rest.next().unwrap().clone() } else { Rational::zero() };
        let f = if self.has_alt { rest.next().unwrap().clone() } else { Rational::zero() };
        FibExpr::new([(0, p0), (1, p1)], e, f)
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RatMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = RatMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] += a * &o[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Gauss–Jordan on `[self | rhs]`; pivot is the first nonzero entry in
    /// the column, scanning top-down.
    fn reduce(&self, rhs: RatMatrix) -> Result<RatMatrix, SynthError> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(SynthError::Degenerate)?;
            a.swap_rows(pivot, col);
            b.swap_rows(pivot, col);
            let inv = a[(col, col)].recip();
            a.scale_row(col, &inv);
            b.scale_row(col, &inv);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &factor);
                b.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<RatMatrix, SynthError> {
        self.reduce(RatMatrix::identity(self.rows))
    }

    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>, SynthError> {
        let col = RatMatrix { rows: rhs.len(), cols: 1, data: rhs.to_vec() };
        Ok(self.reduce(col)?.data)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, k: &Rational) {
        for c in 0..self.cols {
            self[(i, c)] *= k;
        }
    }

    /// `row_i -= k · row_j`
    fn sub_row_multiple(&mut self, i: usize, j: usize, k: &Rational) {
        for c in 0..self.cols {
            let d = k * &self[(j, c)];
            self[(i, c)] -= d;
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthSolution {
    pub expr: FibExpr,
    /// `(slot name, value)` in column order.
    pub coefficients: Vec<(String, Rational)>,
}

impl SynthSolution {
    pub fn coefficient(&self, name: &str) -> Option<&Rational> {
        self.coefficients.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

/// `M[n][slot]` = contribution of that slot to `w_n`, for `n = 0 … k-1`.
pub fn build_system(t: &Template) -> RatMatrix {
    RatMatrix::from_rows((0..t.unknowns() as i64).map(|n| t.row(n)).collect())
}

pub fn solve_template(t: &Template, values: &[Rational]) -> Result<SynthSolution, SynthError> {
    let k = t.unknowns();
    if k == 0 {
        return Err(SynthError::EmptyTemplate);
    }
    if values.len() != k {
        return Err(SynthError::WrongValueCount { expected: k, got: values.len() });
    }
    let coeffs = build_system(t).solve(values)?;
    Ok(SynthSolution {
        expr: t.expr_from_coeffs(&coeffs),
        coefficients: t.slot_names().into_iter().zip(coeffs).collect(),
    })
}

/// Maps `(w_0 … w_{k-1})` to the coefficient vector.
pub fn symbolic_inverse(t: &Template) -> Result<RatMatrix, SynthError> {
    if t.unknowns() == 0 {
        return Err(SynthError::EmptyTemplate);
    }
    build_system(t).inverse()
}

/// Closed-form coefficient rows over `(z_1, …)`, each row `(numerators, denominator)`.
const LINEAR_LINEAR: [(&[i64], i64); 3] = [
    (&[-1, -3, 2], 5),
    (&[6, 3, -2], 5),
    (&[-2, 4, -1], 5),
];

const QUADRATIC_QUADRATIC: [(&[i64], i64); 5] = [
    (&[-1, 3, 1, -3, 1], 10),
    (&[-5, -75, 15, 45, -17], 50),
    (&[30, 30, -10, -15, 6], 25),
    (&[3, -4, -3, 4, -1], 10),
    (&[-45, 80, 15, -40, 11], 50),
];

const QUADRATIC_LINEAR: [(&[i64], i64); 4] = [
    (&[2, -1, -2, 1], 10),
    (&[-56, -7, 66, -23], 50),
    (&[48, 6, -28, 9], 25),
    (&[-6, 18, -9, 2], 25),
];

/// Translate `(w_0, …)` to `(w_0; z_1, …)` with `z_i = w_i − m_i·w_0`,
/// `m = (0, 1, 1, 2, 3)` matching `F_{i-1}` at `i = 1…5`.
pub fn values_from_params(head: &BigInt, z: &[BigInt]) -> Vec<BigInt> {
    std::iter::once(head.clone())
        .chain(z.iter().enumerate().map(|(i, zi)| zi + fib(i as i64) * head))
        .collect()
}

/// Build one of the closed-form families from integer parameters.
///
/// Parameters are `(d, z_1, z_2, z_3)`, `(f, z_1 … z_5)`, `(e, z_1 … z_4)` for
/// the first three families (the leading entry is the `F_{n-1}` constant
/// coefficient, equal to `w_0`) and `(w_0 … w_5)` for the alternating one.
///
/// The alternating family goes through the general solver. Its inverse rows
/// over `(w_0 … w_5)` are
///
/// ```text
/// a = ( 3w_0 + 2w_1 −  7w_2 −  w_3 + 4w_4 −  w_5)/5
/// b = (−3w_0 − 2w_1 −  3w_2 + 6w_3 + 6w_4 − 4w_5)/5
/// c = (−4w_0 −  w_1 + 11w_2 − 2w_3 − 7w_4 + 3w_5)/5
/// d =        −2w_1 +   w_2 + 2w_3 −  w_4
/// e = (  w_0 + 3w_1 +   w_2 − 3w_3 −  w_4 +  w_5)/2
/// f = (  w_0 +  w_1 −  3w_2 −  w_3 + 3w_4 −  w_5)/2
/// ```
pub fn theorem_construct(which: Theorem, params: &[BigInt]) -> Result<FibExpr, SynthError> {
    let k = which.param_count();
    if params.len() != k {
        return Err(SynthError::WrongValueCount { expected: k, got: params.len() });
    }
    let rows: &[(&[i64], i64)] = match which {
        Theorem::LinearLinear => &LINEAR_LINEAR,
        Theorem::QuadraticQuadratic => &QUADRATIC_QUADRATIC,
        Theorem::QuadraticLinear => &QUADRATIC_LINEAR,
        Theorem::LinearAlternating => {
            let values: Vec<Rational> = params.iter().cloned().map(Rational::from_integer).collect();
            return Ok(solve_template(&which.template(), &values)?.expr);
        }
    };
    let (head, z) = params.split_first().expect("nonempty");
    let mut coeffs: Vec<Rational> = rows
        .iter()
        .map(|(nums, den)| {
            let num: BigInt = nums.iter().zip(z).map(|(&c, zi)| zi * c).sum();
            Rational::new(num, BigInt::from(*den))
        })
        .collect();
    // the head parameter is always the constant coefficient of P₁, the last slot
    coeffs.push(Rational::from_integer(head.clone()));
    Ok(which.template().expr_from_coeffs(&coeffs))
}

/// Convenience for tests and examples.
pub fn ints(vals: &[i64]) -> Vec<Rational> {
    vals.iter().map(|&v| rat(v, 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::is_integer_sequence;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn rp(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn bigs(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    const ALL: [Theorem; 4] = [
        Theorem::LinearLinear,
        Theorem::QuadraticQuadratic,
        Theorem::QuadraticLinear,
        Theorem::LinearAlternating,
    ];

    #[test]
    fn system_rows() {
        let m = build_system(&Theorem::LinearLinear.template());
        assert_eq!(m.row(2), ints(&[2, 1, 2, 1]).as_slice());
        let m = build_system(&Theorem::QuadraticQuadratic.template());
        assert_eq!(m.row(5), ints(&[125, 25, 5, 75, 15, 3]).as_slice());
        let m = build_system(&Theorem::LinearAlternating.template());
        assert_eq!(m.row(0), ints(&[0, 0, 0, 1, 1, 1]).as_slice());
    }

    #[test]
    fn solve_examples() {
        let s = solve_template(&Theorem::LinearLinear.template(), &ints(&[0, 1, 1, 3])).unwrap();
        let got: Vec<_> = s.coefficients.iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(got, vec![rat(2, 5), rat(3, 5), rat(-1, 5), int(0)]);

        let s = solve_template(&Theorem::QuadraticLinear.template(), &ints(&[1, 1, 2, 2, 4])).unwrap();
        let canon = s.expr.canonicalize();
        assert_eq!(canon.p0, rp(&[(88, 50), (-43, 50), (5, 50)]));
        assert_eq!(canon.p1, rp(&[(50, 50), (14, 50)]));

        let s = solve_template(&Theorem::LinearAlternating.template(), &ints(&[0, 1, 2, 6, 12, 26]))
            .unwrap();
        let expected = [rat(4, 5), rat(-4, 5), rat(3, 5), int(0), rat(1, 2), rat(-1, 2)];
        for ((name, v), want) in s.coefficients.iter().zip(expected) {
            assert_eq!(v, &want, "slot {name}");
        }
        assert_eq!(s.coefficient("e"), Some(&rat(1, 2)));
    }

    #[test]
    fn solve_errors() {
        let t = Theorem::LinearLinear.template();
        assert_eq!(
            solve_template(&t, &ints(&[1, 2])),
            Err(SynthError::WrongValueCount { expected: 4, got: 2 })
        );
        let empty = Template { deg_p0: None, deg_p1: None, has_const: false, has_alt: false };
        assert_eq!(solve_template(&empty, &[]), Err(SynthError::EmptyTemplate));
        let singular = RatMatrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])]);
        assert_eq!(singular.inverse(), Err(SynthError::Degenerate));
    }

    #[test]
    fn theorem_examples() {
        let e = theorem_construct(Theorem::LinearLinear, &bigs(&[0, 1, 1, 3])).unwrap();
        let want = FibExpr::new([(0, rp(&[(3, 5), (2, 5)])), (1, rp(&[(0, 1), (-1, 5)]))], int(0), int(0));
        assert_eq!(e, want);

        let e = theorem_construct(Theorem::QuadraticQuadratic, &bigs(&[0, 0, 1, 4, 12, 31])).unwrap();
        let want = FibExpr::new(
            [(0, rp(&[(-4, 25), (-1, 25), (5, 25)])), (1, rp(&[(0, 1), (1, 50), (5, 50)]))],
            int(0),
            int(0),
        );
        assert_eq!(e, want);

        let e = theorem_construct(Theorem::LinearAlternating, &bigs(&[0, 1, 2, 6, 12, 26])).unwrap();
        let c = e.canonicalize();
        assert_eq!(c.p0, rp(&[(-4, 5), (4, 5)]));
        assert_eq!(c.p1, rp(&[(0, 1), (3, 5)]));
        assert_eq!((c.const_e, c.alt_f), (rat(1, 2), rat(-1, 2)));

        assert!(theorem_construct(Theorem::QuadraticLinear, &bigs(&[1, 2])).is_err());
    }

    #[test]
    fn inverse_is_exact() {
        for th in ALL {
            let t = th.template();
            let inv = symbolic_inverse(&t).unwrap();
            assert_eq!(inv.mul(&build_system(&t)), RatMatrix::identity(t.unknowns()));
        }
    }

    #[test]
    fn param_translation() {
        assert_eq!(values_from_params(&BigInt::from(2), &bigs(&[1, 1, 1, 1, 1])), bigs(&[2, 1, 3, 3, 5, 7]));
    }

    proptest! {
        #[test]
        fn closed_forms_match_solver(th in 0usize..3, head in -50i64..50, z in prop::collection::vec(-50i64..50, 5)) {
            let th = ALL[th];
            let z = &z[..th.param_count() - 1];
            let mut params = vec![BigInt::from(head)];
            params.extend(z.iter().map(|&v| BigInt::from(v)));
            let closed = theorem_construct(th, &params).unwrap();
            let values: Vec<Rational> = values_from_params(&params[0], &params[1..])
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            let solved = solve_template(&th.template(), &values).unwrap();
            prop_assert!(closed.canonical_eq(&solved.expr));
            prop_assert!(is_integer_sequence(&closed).is_integral());
        }

        #[test]
        fn solver_round_trip(th in 0usize..4, vals in prop::collection::vec(-50i64..=50, 6)) {
            let t = ALL[th].template();
            let vals = ints(&vals[..t.unknowns()]);
            let s = solve_template(&t, &vals).unwrap();
            for (n, v) in vals.iter().enumerate() {
                prop_assert_eq!(&s.expr.evaluate(n as i64), v);
            }
            prop_assert!(is_integer_sequence(&s.expr).is_integral());
        }
    }
}
