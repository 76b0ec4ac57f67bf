//! proptest strategies shared by the unit tests.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use crate::exact::{rat, RatPoly, Rational};
use crate::seqform::FibExpr;
use crate::synth::{theorem_construct, Theorem};

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, prop::sample::select(vec![1i64, 1, 1, 2, 3, 5, 10, 25, 50]))
        .prop_map(|(n, d)| rat(n, d))
}

pub fn arb_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(arb_rational(), 0..4).prop_map(RatPoly::new)
}

/// Mixed shifts in `[-4, 4]`, degree ≤ 3, optional constant and alternating parts.
pub fn arb_expr() -> impl Strategy<Value = FibExpr> {
    (
        prop::collection::vec((-4i64..=4, arb_poly()), 0..4),
        prop::option::weighted(0.4, arb_rational()),
        prop::option::weighted(0.4, arb_rational()),
    )
        .prop_map(|(terms, e, f)| FibExpr::new(terms, e.unwrap_or_else(Rational::zero), f.unwrap_or_else(Rational::zero)))
}

/// Integer-valued sequences from one of the closed-form families.
pub fn arb_integral_expr() -> impl Strategy<Value = FibExpr> {
    (1u8..=4, prop::collection::vec(-40i64..=40, 6)).prop_map(|(k, params)| {
        let th = Theorem::from_number(k).unwrap();
        let params: Vec<BigInt> = params[..th.param_count()].iter().map(|&p| p.into()).collect();
        theorem_construct(th, &params).unwrap()
    })
}
