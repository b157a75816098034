//! Runs the Horn-type necessary conditions over every nonzero triple product
//! for each parabolic of the given types.
//!
//!     cargo run --release --example horn_sweep [TYPE..]

use std::time::Instant;

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
    let mut total = 0;
    for ct in types {
        let ctx = GroupContext::new(ct)?;
        for p in Parabolic::all(ctx.rank()) {
            let start = Instant::now();
            let s = horn::sweep(&ctx, &p, 3, 2, 7)?;
            println!(
                "{ct} {p}: {} tuples, {} T2 checks, {} movable, {} T2' checks, {} dimension data ({} checks), {} violations ({:.1?})",
                s.tuples,
                s.t2_checks,
                s.movable,
                s.t2prime_checks,
                s.dimension_data,
                s.dimension_checks,
                s.violations.len(),
                start.elapsed()
            );
            for v in s.violations.iter().take(3) {
                print!("{v}");
            }
            total += s.violations.len();
        }
    }
    if total > 0 {
        std::process::exit(4);
    }
    Ok(())
}
