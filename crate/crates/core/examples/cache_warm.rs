//! Fills the structure-constant cache, then reloads it into a fresh context.
//!
//!     cargo run --release --example cache_warm [TYPE] [DIR]

use std::time::Instant;

use flagcalc::cache::Cache;
use flagcalc::context::GroupContext;

fn main() -> flagcalc::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = args.next().unwrap_or_else(|| "B3".into());
    let dir = args.next().map(Into::into).unwrap_or_else(|| std::env::temp_dir().join("flagcalc-example"));
    let cache = Cache::new(dir);
    let cold = GroupContext::parse(&t)?;
    for i in 1..=cold.rank() {
        let p = cold.maximal(i);
        let start = Instant::now();
        let st = cache.warm(&cold, &p)?;
        let first = start.elapsed();
        let warm = GroupContext::parse(&t)?;
        let start = Instant::now();
        let st2 = cache.load(&warm, &p)?;
        let ring = warm.ring(&p)?;
        println!(
            "{t} P{i}: {:?} in {first:?}, then {:?} in {:?} with {} products, file {}",
            st,
            st2,
            start.elapsed(),
            ring.memo_len(),
            cache.path(&warm, &p).display()
        );
    }
    Ok(())
}
