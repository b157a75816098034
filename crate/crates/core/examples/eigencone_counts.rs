//! Sizes of the eigencone inequality systems and their redundancy, per type and s.
//!
//!     cargo run --release --example eigencone_counts [TYPE..] [--max-s N]

use std::time::Instant;

use flagcalc::context::GroupContext;
use flagcalc::eigencone::{InequalitySystem, Mode};

fn main() -> flagcalc::error::Result<()> {
    let mut types = Vec::new();
    let mut max_s = 3;
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--max-s" {
            max_s = args.next().and_then(|x| x.parse().ok()).unwrap_or(3);
        } else {
            types.push(a);
        }
    }
    if types.is_empty() {
        types = vec!["B3".into(), "C3".into()];
    }
    for t in &types {
        let ctx = GroupContext::parse(t)?;
        for s in 2..=max_s {
            let mut systems = Vec::new();
            for mode in [Mode::Classical, Mode::Deformed] {
                let start = Instant::now();
                let mut sys = InequalitySystem::generate(&ctx, s, mode, false)?;
                let per: Vec<usize> = (1..=ctx.rank())
                    .map(|i| sys.inequalities.iter().filter(|q| q.parabolic == i).count())
                    .collect();
                let red = if s * ctx.rank() <= 12 {
                    sys.prune()?;
                    format!("{} redundant", sys.total_redundant().unwrap())
                } else {
                    "not pruned".into()
                };
                println!(
                    "{t} s={s} {mode:<9} {:>4} + {} chamber = {:>4} inequalities (per parabolic {per:?}), {red} ({:.1?})",
                    sys.len(),
                    sys.chamber_len(),
                    sys.total_len(),
                    start.elapsed()
                );
                systems.push(sys);
            }
            if let (Some(r), [b, bp]) = (&systems[0].redundant, systems.as_slice()) {
                let dropped: Vec<bool> = b.inequalities.iter().map(|q| !bp.inequalities.iter().any(|x| x.tuple == q.tuple && x.parabolic == q.parabolic)).collect();
                println!("    redundant set of (B) equals (B) minus (B'): {}", *r == dropped);
            }
        }
    }
    Ok(())
}
