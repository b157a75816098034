//! Compares `⊙₀` on `G/B` with the inversion-set rule.
//!
//!     cargo run --release --example leviprod_check [TYPE..]

use flagcalc::context::GroupContext;
use flagcalc::liecoh;
use flagcalc::rootsys::CartanType;

fn main() -> flagcalc::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types: Vec<CartanType> = if args.is_empty() {
        CartanType::rank_at_most_3()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let mut ok = true;
    for ct in types {
        let r = liecoh::crosscheck_gb(&GroupContext::new(ct)?)?;
        println!("{}: {} pairs, {} nonzero, {} mismatches", r.group, r.pairs, r.nonzero, r.mismatches);
        if let Some(m) = &r.first_mismatch {
            println!("  first mismatch: {m}");
        }
        ok &= r.passed;
    }
    if !ok {
        std::process::exit(4);
    }
    Ok(())
}
