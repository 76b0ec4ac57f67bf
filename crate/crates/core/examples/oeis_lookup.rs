//! Search a prefix in the bundled OEIS fixtures. With `--online` and
//! FIBFORM_ONLINE=1 the public search endpoint is queried as well.
//!
//!     cargo run --example oeis_lookup -- 1,1,3,5,9,15
//!     FIBFORM_ONLINE=1 cargo run --example oeis_lookup -- 0,1,1,2,3,5,8,13 --online

use std::time::Duration;

use fibform::oeis::{search_local, search_remote, FixtureSet};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let online = args.iter().any(|a| a == "--online");
    let prefix_text = args.iter().find(|a| !a.starts_with("--")).cloned().unwrap_or_else(|| "0,1,1,2,3,5,8".into());
    let prefix = prefix_text.split(',').map(|t| t.trim().parse::<BigInt>()).collect::<Result<Vec<_>, _>>()?;

    let fixtures = FixtureSet::bundled();
    println!("bundled: {}", fixtures.entries().iter().map(|e| e.a_number.as_str()).collect::<Vec<_>>().join(" "));
    let hits = search_local(&prefix, &fixtures)?;
    if hits.is_empty() {
        println!("no local match for {prefix_text}");
    }
    for h in &hits {
        println!("local: {} from n = {}", h.entry.a_number, h.first_index());
    }
    if online {
        match search_remote(&prefix, Duration::from_secs(10)) {
            Ok(remote) => {
                for h in remote.iter().take(10) {
                    println!("remote: {} at position {}", h.entry.a_number, h.match_start);
                }
            }
            Err(e) => println!("remote lookup failed: {e}"),
        }
    }
    Ok(())
}
