//! Brute-force counters used to check closed forms independently.
//!
//! The enumerators are exponential, so inputs above [`MAX_ENUMERATION`] are
//! refused.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

pub const MAX_ENUMERATION: u32 = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {0} exceeds the enumeration cap of {MAX_ENUMERATION}")]
    TooLarge(u32),
}

fn check(n: u32) -> Result<(), OracleError> {
    if n > MAX_ENUMERATION {
        Err(OracleError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Total number of parts over all compositions of `n + 1` into parts ≥ 2.
pub fn compositions_parts_count(n: u32) -> Result<BigUint, OracleError> {
    check(n)?;
    fn walk(remaining: u32, parts: u64, total: &mut u64) {
        if remaining == 0 {
            *total += parts;
            return;
        }
        for part in 2..=remaining {
            walk(remaining - part, parts + 1, total);
        }
    }
    let mut total = 0;
    // the empty composition of 0 never arises since n + 1 ≥ 1
    walk(n + 1, 0, &mut total);
    Ok(BigUint::from(total))
}

/// Sum of inversions (a 1 somewhere before a 0) over all binary words of
/// length `n` without two adjacent 1s.
pub fn fibonacci_word_inversions(n: u32) -> Result<BigUint, OracleError> {
    check(n)?;
    // ones: number of 1s placed so far; each later 0 pairs with all of them
    fn walk(len: u32, n: u32, last_one: bool, ones: u64, inversions: u64, total: &mut u64) {
        if len == n {
            *total += inversions;
            return;
        }
        walk(len + 1, n, false, ones, inversions + ones, total);
        if !last_one {
            walk(len + 1, n, true, ones + 1, inversions, total);
        }
    }
    let mut total = 0;
    walk(0, n, false, 0, 0, &mut total);
    Ok(BigUint::from(total))
}

/// `L_0 = L_1 = 1`, `L_n = L_{n-1} + L_{n-2} + 1`.
pub fn leonardo(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b + 1u32;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Every word counted by [`fibonacci_word_inversions`], as explicit strings.
/// Exposed for inspection; the counters do not use it.
pub fn fibonacci_words(n: u32) -> Result<Vec<String>, OracleError> {
    check(n)?;
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                let mut next = vec![format!("{w}0")];
                if !w.ends_with('1') {
                    next.push(format!("{w}1"));
                }
                next
            })
            .collect();
    }
    Ok(words)
}
