//! Characteristic polynomial and recurrence of an expression, run in both
//! directions from its initial values.
//!
//!     cargo run --example recurrence -- "(5n^2-43n+88)/50*F(n) + (14n+50)/50*F(n-1)"

use fibform::cli::format_recurrence;
use fibform::parser::format_poly;
use fibform::{parse, to_recurrence, verify_recurrence, Direction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(2n+3)/5*F(n) - n/5*F(n-1)".into());
    let expr = parse(&text)?;
    let rec = to_recurrence(&expr);

    println!("order {}", rec.order);
    println!("c(x) = {}", format_poly(&rec.char_poly.to_rational(), "x"));
    println!("{}", format_recurrence(&rec.coeffs));
    let show = |v: &[fibform::Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("initial:  {}", show(&rec.initial));
    println!("forward:  {}", show(&rec.extend(8, Direction::Forward)?));
    println!("backward: {}", show(&rec.extend(8, Direction::Backward)?));
    println!("holds on [-30, 30]: {}", verify_recurrence(&expr, -30, 30));
    Ok(())
}
