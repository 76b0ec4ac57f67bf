//! Fit templates to initial values, build the closed-form families from
//! integer parameters and print the exact inverse of a template system.
//!
//!     cargo run --example synthesize

use fibform::synth::{build_system, ints};
use fibform::{print, solve_template, symbolic_inverse, theorem_construct, Template, Theorem};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fits: [(Theorem, &[i64]); 4] = [
        (Theorem::LinearLinear, &[0, 1, 1, 3]),
        (Theorem::QuadraticQuadratic, &[0, 0, 1, 4, 12, 31]),
        (Theorem::QuadraticLinear, &[1, 1, 2, 2, 4]),
        (Theorem::LinearAlternating, &[0, 1, 2, 6, 12, 26]),
    ];
    for (th, values) in fits {
        let sol = solve_template(&th.template(), &ints(values))?;
        let coeffs: Vec<String> = sol.coefficients.iter().map(|(n, v)| format!("{n}={v}")).collect();
        println!("{th:?} {values:?}\n  {}\n  {}", print(&sol.expr), coeffs.join(" "));
    }

    // family 3 with e = 1, z = (1, 1, 1, 2)
    let params: Vec<BigInt> = [1, 1, 1, 1, 2].into_iter().map(BigInt::from).collect();
    let e = theorem_construct(Theorem::QuadraticLinear, &params)?;
    let vals: Vec<String> = e.values(0..=10).iter().map(ToString::to_string).collect();
    println!("constructed {}\n  {}", print(&e), vals.join(", "));

    // a custom shape: n^2 F(n) + c F(n-1) + e
    let t = Template { deg_p0: Some(2), deg_p1: Some(0), has_const: true, has_alt: false };
    println!("system for {:?}:\n{}", t.slot_names(), build_system(&t));
    println!("inverse:\n{}", symbolic_inverse(&t)?);
    Ok(())
}
