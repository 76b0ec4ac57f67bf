//! Binet decomposition in Q(sqrt 5): the sqrt 5 parts cancel at every n,
//! and q_beta is minus the conjugate of q_alpha.
//!
//!     cargo run --example binet -- "F(n-1)"

use fibform::exact::QuadRat;
use fibform::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(2n+3)/5*F(n) - n/5*F(n-1)".into());
    let expr = parse(&text)?;
    let b = expr.binet_decompose();
    let show = |p: &fibform::exact::QuadPoly| {
        p.coeffs().iter().enumerate().map(|(k, c)| format!("({c})n^{k}")).collect::<Vec<_>>().join(" + ")
    };
    println!("q_alpha = {}", show(&b.q_alpha));
    println!("q_beta  = {}", show(&b.q_beta));
    println!("q_beta == -conj(q_alpha): {}", b.q_beta == -b.q_alpha.conjugate());
    println!("alpha = {}, beta = {}", QuadRat::alpha(), QuadRat::beta());
    for n in 0..=6 {
        let v = b.eval(n);
        println!("  n = {n}: {v} (rational: {})", v.is_rational());
    }
    Ok(())
}
