//! Eigencone membership for a few triples of dominant coweights.
//!
//!     cargo run --release --example membership [TYPE]
//!
//! Coweights are written in fundamental-coweight coordinates.

use flagcalc::arith::{fmt_q, qi};
use flagcalc::context::GroupContext;
use flagcalc::eigencone::{dual_coweight, violation_by_construction, InequalitySystem, Mode};

fn show(h: &[flagcalc::arith::Q]) -> String {
    format!("[{}]", h.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

fn main() -> flagcalc::error::Result<()> {
    let ctx = GroupContext::parse(&std::env::args().nth(1).unwrap_or_else(|| "B3".into()))?;
    let sys = InequalitySystem::generate(&ctx, 3, Mode::Deformed, false)?;
    println!("{}: {} inequalities", sys.group, sys.total_len());

    let r = ctx.rank();
    let h: Vec<_> = (0..r).map(|i| qi(i as i64 + 1)).collect();
    let triple = vec![h.clone(), dual_coweight(&ctx, &h), vec![qi(0); r]];
    let v = sys.evaluate(&triple)?;
    println!("(h, -w_o h, 0) with h = {}: member = {}", show(&h), v.member);

    if let Some((k, hs)) = violation_by_construction(&sys) {
        let v = sys.evaluate(&hs)?;
        let q = &sys.inequalities[k];
        println!(
            "({}) violates P{} ({}): member = {}, {} inequalities violated",
            hs.iter().map(|h| show(h)).collect::<Vec<_>>().join(", "),
            q.parabolic,
            q.words.join(", "),
            v.member,
            v.violated.len()
        );
    }
    Ok(())
}
