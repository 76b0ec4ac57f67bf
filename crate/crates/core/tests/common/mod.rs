//! Random generators shared by the integration tests.
#![allow(dead_code)]

use fibform::exact::{int, rat, RatPoly, Rational};
use fibform::synth::{theorem_construct, Theorem};
use fibform::FibExpr;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rational(rng: &mut StdRng) -> Rational {
    const DENS: [i64; 8] = [1, 1, 1, 2, 3, 5, 10, 25];
    rat(rng.gen_range(-30..=30), DENS[rng.gen_range(0..DENS.len())])
}

pub fn poly(rng: &mut StdRng, max_deg: usize) -> RatPoly {
    let len = rng.gen_range(0..=max_deg + 1);
    RatPoly::new((0..len).map(|_| rational(rng)).collect())
}

/// Up to four shifted terms in `[-4, 4]`, optional constant and alternating parts.
pub fn expr(rng: &mut StdRng) -> FibExpr {
    let count = rng.gen_range(0..=4);
    let terms: Vec<(i64, RatPoly)> = (0..count).map(|_| (rng.gen_range(-4..=4), poly(rng, 3))).collect();
    let e = if rng.gen_bool(0.4) { rational(rng) } else { int(0) };
    let f = if rng.gen_bool(0.4) { rational(rng) } else { int(0) };
    FibExpr::new(terms, e, f)
}

pub fn theorem(rng: &mut StdRng) -> Theorem {
    Theorem::from_number(rng.gen_range(1..=4)).unwrap()
}

pub fn int_vec(rng: &mut StdRng, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

/// A member of one of the closed-form families with integer parameters.
pub fn integral_expr(rng: &mut StdRng) -> FibExpr {
    let th = theorem(rng);
    theorem_construct(th, &int_vec(rng, th.param_count(), 40)).unwrap()
}

/// `integral_expr` plus a small rational multiple of a random shifted term,
/// a constant or an alternating part. Usually, not always, non-integral.
pub fn perturbed_expr(rng: &mut StdRng) -> FibExpr {
    let base = integral_expr(rng);
    let den = [2i64, 3, 5, 7, 10][rng.gen_range(0..5)];
    let bump = rat(rng.gen_range(1..den), den);
    let extra = match rng.gen_range(0..3) {
        0 => FibExpr::term(RatPoly::monomial(bump, rng.gen_range(0..=2)), rng.gen_range(-3..=3)),
        1 => FibExpr::constant(bump),
        _ => FibExpr::alternating(bump),
    };
    &base + &extra
}
