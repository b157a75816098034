//! Counts L-movable triples among those with nonzero top-degree product.
//!
//!     cargo run --release --example lmovable [TYPE..]

use flagcalc::context::GroupContext;
use flagcalc::deform::is_minuscule;
use flagcalc::horn;
use flagcalc::rootsys::CartanType;

fn main() -> flagcalc::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types: Vec<CartanType> = if args.is_empty() {
        CartanType::rank_at_most_3()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    for ct in types {
        let ctx = GroupContext::new(ct)?;
        for i in 1..=ctx.rank() {
            let p = ctx.maximal(i);
            let d = ctx.deformed(&p)?;
            let tuples = horn::top_tuples(d.classical(), 3, false)?;
            let mut movable = 0;
            for (t, _) in &tuples {
                if d.is_l_movable(t)?.movable {
                    movable += 1;
                }
            }
            let m = if is_minuscule(ctx.root_system(), &p) { "minuscule" } else { "" };
            println!("{ct} P{i}: {} nonzero triples, {movable} L-movable {m}", tuples.len());
        }
    }
    Ok(())
}
