//! Exact arithmetic for integer sequences of the shape
//!
//! ```text
//! w_n = Σ p_i(n)·F_{n-j_i} + e + f·(-1)^n
//! ```
//!
//! with rational polynomial coefficients `p_i`. The crate canonicalizes such
//! expressions, derives their constant-coefficient recurrences, decides
//! whether they are integer-valued on all of Z, and solves the inverse
//! problem of finding coefficients that reproduce given initial values.

pub mod cfinite;
pub mod cli;
pub mod decide;
pub mod exact;
pub mod fib;
pub mod oeis;
pub mod oracles;
pub mod parser;
pub mod seqform;
pub mod synth;

#[cfg(test)]
mod testing;

pub use cfinite::{char_poly, to_recurrence, verify_recurrence, Direction, Recurrence};
pub use decide::{brute_scan, is_integer_sequence, IntegralityVerdict};
pub use exact::{QuadRat, RatPoly, Rational};
pub use parser::{parse, print, ParseError};
pub use seqform::{BinetForm, CanonForm, FibExpr};
pub use synth::{solve_template, symbolic_inverse, theorem_construct, Template, Theorem};
