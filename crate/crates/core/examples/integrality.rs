//! Decide whether an expression is integer-valued on all of Z and compare
//! with a brute-force scan.
//!
//!     cargo run --example integrality -- "n/2*F(n)"

use fibform::{brute_scan, is_integer_sequence, parse, IntegralityVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "(2n+3)/5*F(n) - n/5*F(n-1)".to_string(),
            "n/2*F(n)".to_string(),
            "(4n-4)/5*F(n) + 3n/5*F(n-1) + 1/2 - 1/2*(-1)^n".to_string(),
            "n/5*F(n) + 1/5*F(n-2)".to_string(),
        ]
    } else {
        args
    };
    for text in inputs {
        let expr = parse(&text)?;
        match is_integer_sequence(&expr) {
            IntegralityVerdict::Integral { certificate } => {
                let cert: Vec<String> = certificate.iter().map(ToString::to_string).collect();
                println!("{text}\n  INTEGER, certificate {}", cert.join(", "));
            }
            IntegralityVerdict::NonIntegral { witness, value } => {
                println!("{text}\n  NON-INTEGER, w({witness}) = {value}");
            }
        }
        println!("  first non-integer in [-40, 40]: {:?}", brute_scan(&expr, -40, 40));
    }
    Ok(())
}
