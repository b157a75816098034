//! Root data and minimal coset representatives.
//!
//!     cargo run --release --example roots_and_weyl [TYPE] [LEVI..]
//!
//! `LEVI` lists one-based simple roots of the Levi; omit for every maximal parabolic.

use flagcalc::context::GroupContext;
use flagcalc::rootsys::Parabolic;

fn main() -> flagcalc::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let ctx = GroupContext::parse(&args.next().unwrap_or_else(|| "B3".into()))?;
    let rs = ctx.root_system();
    let levi: Vec<usize> = args.filter_map(|a| a.parse::<usize>().ok()).map(|i| i - 1).collect();

    println!("{}: rank {}, {} positive roots, |W| = {}", rs.label(), ctx.rank(), rs.num_positive(), ctx.weyl().order());
    for b in rs.positive_roots() {
        println!("  {b:?}  norm {}", rs.inner_int(b, b));
    }

    let ps = if levi.is_empty() { (1..=ctx.rank()).map(|i| ctx.maximal(i)).collect() } else { vec![Parabolic::from_levi(levi)] };
    for p in ps {
        let ring = ctx.ring(&p)?;
        println!("\nW^P for {p}, dim G/P = {}", ring.dim());
        for (c, ws) in ring.by_codim().iter().enumerate() {
            let words: Vec<String> = ws.iter().map(|&w| ring.label(w)).collect();
            println!("  codim {c}: {}", words.join("  "));
        }
    }
    Ok(())
}
