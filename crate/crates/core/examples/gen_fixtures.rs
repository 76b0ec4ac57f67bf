//! Regenerate the bundled OEIS fixtures.
//!
//!     cargo run --example gen_fixtures -- crates/core/fixtures/oeis
//!
//! A000045 and A001595 come from `fib` and the Leonardo recurrence; the
//! rest are evaluated from the closed forms in `oeis::DERIVED_FORMULAS`.

use std::path::PathBuf;

use fibform::fib::fib;
use fibform::oeis::{derived_bfile, OeisEntry, DERIVED_FORMULAS, DERIVED_TERMS};
use fibform::oracles::leonardo;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "fixtures/oeis".into()).into();
    std::fs::create_dir_all(&dir)?;

    let fibs = OeisEntry::new("A000045", 0, (0..DERIVED_TERMS).map(fib).collect())?;
    let leos = OeisEntry::new("A001595", 0, (0..DERIVED_TERMS as u32).map(|n| leonardo(n).into()).collect())?;
    let mut index = String::new();
    for (entry, note) in [(fibs, "F(n)"), (leos, "L(0) = L(1) = 1, L(n) = L(n-1) + L(n-2) + 1")] {
        let text = format!("# {}, generated by fibform from\n# {note}\n{}", entry.a_number, entry.to_bfile());
        std::fs::write(dir.join(entry.bfile_name()), text)?;
        index.push_str(&format!("{} {}\n", entry.a_number, entry.offset));
    }
    for (a, offset, formula) in DERIVED_FORMULAS {
        std::fs::write(dir.join(format!("b{}.txt", &a[1..])), derived_bfile(a, offset, formula)?)?;
        index.push_str(&format!("{a} {offset}\n"));
    }
    std::fs::write(dir.join("index.txt"), index)?;
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}
