//! Checks the bundled rank-3 deformed multiplication tables against the engine.
//!
//!     cargo run --release --example verify_golden

use flagcalc::golden;

fn main() -> flagcalc::error::Result<()> {
    let mut ok = true;
    for r in golden::verify_all()? {
        println!(
            "{} ({} / P{}): {} entries, {} labelings tried, {}",
            r.name,
            r.group,
            r.parabolic,
            r.entries,
            r.bijections_tried,
            if r.passed { "match" } else { "MISMATCH" }
        );
        for (label, word) in &r.bijection {
            println!("    {label:<5} = {word}");
        }
        for m in &r.mismatches {
            println!("    {m}");
        }
        ok &= r.passed;
    }
    if !ok {
        std::process::exit(4);
    }
    Ok(())
}
