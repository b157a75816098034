//! Searches for zero products that pass every character inequality.
//!
//!     cargo run --release --example horn_converse [TYPE..]

use flagcalc::context::GroupContext;
use flagcalc::horn;
use flagcalc::rootsys::{CartanType, Parabolic};

fn main() -> flagcalc::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types: Vec<CartanType> = if args.is_empty() {
        CartanType::rank_at_most_3()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    for ct in types {
        let ctx = GroupContext::new(ct)?;
        for p in Parabolic::all(ctx.rank()) {
            let r = horn::converse_experiment(&ctx, &p, 3)?;
            println!(
                "{ct} {p}: {} triples, {} with zero product, {} rejected, {} pass all inequalities",
                r.tuples,
                r.zero,
                r.detected,
                r.passing.len()
            );
            for t in r.passing.iter().take(3) {
                println!("    ({})", t.join(", "));
            }
        }
    }
    Ok(())
}
