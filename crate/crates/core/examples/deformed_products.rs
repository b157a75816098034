//! Classical and deformed products on a maximal flag variety.
//!
//!     cargo run --release --example deformed_products [TYPE] [PARABOLIC]

use flagcalc::context::GroupContext;

fn main() -> flagcalc::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let ctx = GroupContext::parse(&args.next().unwrap_or_else(|| "C3".into()))?;
    let i: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let d = ctx.deformed(&ctx.maximal(i))?;
    let ring = d.classical().clone();
    let names = d.tau_names();
    println!("{} P{i}: variables {}", ctx.root_system().label(), names.join(", "));

    let mut changed = 0;
    let mut total = 0;
    for &u in ring.reps() {
        for &v in ring.reps() {
            if u > v || ring.codim(u) + ring.codim(v) > ring.dim() || u == ring.unit() || v == ring.unit() {
                continue;
            }
            total += 1;
            let p = d.product(u, v)?;
            if !p.has_tau() {
                continue;
            }
            changed += 1;
            let terms: Vec<String> = p.terms.iter().map(|(&w, c)| format!("({}) {}", c.render(&names), ring.label(w))).collect();
            println!("  [{}]·[{}] = {}", ring.label(u), ring.label(v), terms.join(" + "));
        }
    }
    println!("{changed} of {total} products carry a variable");
    Ok(())
}
