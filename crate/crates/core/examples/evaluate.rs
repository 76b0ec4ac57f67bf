//! Parse an expression, evaluate it over a range and reduce it to
//! `P0(n)F(n) + P1(n)F(n-1) + e + f(-1)^n`.
//!
//!     cargo run --example evaluate -- "4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n"

use fibform::parser::format_poly;
use fibform::{parse, print};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(2n+3)/5*F(n) - n/5*F(n-1)".into());
    let expr = parse(&text)?;
    println!("expression: {}", print(&expr));
    for n in -3..=8 {
        println!("  w({n}) = {}", expr.evaluate(n));
    }

    let c = expr.canonicalize();
    println!("P0 = {}", format_poly(&c.p0, "n"));
    println!("P1 = {}", format_poly(&c.p1, "n"));
    println!("e = {}, f = {}", c.const_e, c.alt_f);
    assert!(c.to_expr().canonical_eq(&expr));

    // reindexing: w(n+1) as its own expression
    let next = expr.shift_index(1);
    println!("w(n+1) = {}", print(&next.canonicalize().to_expr()));
    Ok(())
}
