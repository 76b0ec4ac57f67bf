//! The expression syntax: parse, print canonically, and report errors with
//! byte offsets.
//!
//!     cargo run --example parse_print

use fibform::{parse, print};

fn main() {
    let samples = [
        "(2n+3)/5*F(n) - n/5*F(n-1)",
        "n^2*F(n+2) - 3*F(n-4) + 7/2 - (-1)^n",
        "2(n+1)F(n) + F(n) - F(n)",
        "F(n",
        "n*(-1)^n",
        "(F(n))",
    ];
    for s in samples {
        match parse(s) {
            Ok(e) => {
                let printed = print(&e);
                assert_eq!(parse(&printed).as_ref(), Ok(&e));
                println!("{s:40} => {printed}");
            }
            Err(err) => {
                println!("{s:40} => error at byte {}: {}", err.offset, err.message);
                println!("{:40}    {}^", "", " ".repeat(err.offset));
            }
        }
    }
}
