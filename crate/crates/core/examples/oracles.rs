//! Brute-force counts next to the closed forms they confirm.
//!
//!     cargo run --example oracles

use fibform::exact::Rational;
use fibform::fib::fib;
use fibform::oracles::{compositions_parts_count, fibonacci_word_inversions, leonardo};
use fibform::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let comp = parse("(2n+3)/5*F(n) - n/5*F(n-1)")?;
    let inv = parse("(5n^2-n-4)/25*F(n) + (5n^2+n)/50*F(n-1)")?;
    println!(" n  parts  formula  inversions  formula  leonardo  2F(n)+2F(n-1)-1");
    for n in 0..=15u32 {
        let k = n as i64;
        println!(
            "{n:2}  {:5}  {:7}  {:10}  {:7}  {:8}  {}",
            compositions_parts_count(n)?,
            comp.evaluate(k),
            fibonacci_word_inversions(n)?,
            inv.evaluate(k),
            leonardo(n),
            2 * fib(k) + 2 * fib(k - 1) - 1,
        );
    }
    // the unshifted intermediate form, read at n + 3, is off
    let src = parse("(5n^2-37n+50)/50*F(n) + (4n-4)/50*F(n-1)")?;
    let a1: Rational = Rational::from_integer(fibonacci_word_inversions(1)?.into());
    println!("intermediate form at n = 4: {} vs enumerated a(1) = {a1}", src.evaluate(4));
    Ok(())
}
