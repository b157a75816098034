//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeMap;
use std::time::Instant;

use flagcalc::arith::{fmt_q, Q};
use flagcalc::context::GroupContext;
use flagcalc::deform::DeformedClass;
use flagcalc::eigencone::{dual_coweight, violation_by_construction, InequalitySystem, Mode};
use flagcalc::error::Result;
use flagcalc::rootsys::{CartanType, Parabolic};
use flagcalc::schubert::{chevalley_oracle, ParabolicRing};
use flagcalc::weyl::ElementId;
use flagcalc::{golden, horn, liecoh};
use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn contexts() -> Result<Vec<GroupContext>> {
    CartanType::rank_at_most_3().into_iter().map(GroupContext::new).collect()
}

fn golden_tables() -> Result<Outcome> {
    let start = Instant::now();
    let reports = golden::verify_all()?;
    let secs = start.elapsed().as_secs_f64();
    let names: Vec<String> = reports.iter().map(|r| format!("{} {}", r.name, if r.passed { "ok" } else { "mismatch" })).collect();
    let pass = reports.len() == 4 && reports.iter().all(|r| r.passed) && secs < 60.0;
    outcome(pass, format!("{} in {secs:.2}s", names.join(", ")))
}

fn minuscule_collapse() -> Result<Outcome> {
    let cases = [("B3", 1), ("C3", 3), ("A3", 1), ("A3", 2), ("A3", 3)];
    let mut products = 0;
    let mut bad = Vec::new();
    for (t, i) in cases {
        let ctx = GroupContext::parse(t)?;
        let d = ctx.deformed(&ctx.maximal(i))?;
        let reps = d.classical().reps().to_vec();
        for &u in &reps {
            for &v in &reps {
                products += 1;
                if d.product(u, v)?.has_tau() {
                    bad.push(format!("{t}/P{i}"));
                }
            }
        }
    }
    bad.dedup();
    outcome(bad.is_empty(), format!("{products} products over {} cases, τ present in: {bad:?}", cases.len()))
}

fn poincare_duality() -> Result<Outcome> {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for ctx in contexts()? {
        for p in Parabolic::all(ctx.rank()) {
            let d = ctx.deformed(&p)?;
            let ring = d.classical().clone();
            let point = ring.point();
            for &v in ring.reps() {
                for &w in ring.reps() {
                    if ring.codim(v) != ring.codim(w) {
                        continue;
                    }
                    pairs += 1;
                    let got = d.product0(v, ring.star(w))?;
                    let want: Vec<(ElementId, i64)> = if v == w { vec![(point, 1)] } else { vec![] };
                    let got: Vec<(ElementId, i64)> = got.terms.iter().map(|(&a, &b)| (a, b)).collect();
                    if got != want {
                        bad.push(format!("{} {p} {} {}", ctx.root_system().label(), ring.label(v), ring.label(w)));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{pairs} equal-codimension pairs, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn ring_axioms() -> Result<Outcome> {
    let mut triples = 0usize;
    let mut bad = Vec::new();
    for ctx in contexts()? {
        for p in Parabolic::all(ctx.rank()) {
            let d = ctx.deformed(&p)?;
            let reps = d.classical().reps().to_vec();
            let n = d.nvars();
            let basis: BTreeMap<ElementId, DeformedClass> = reps.iter().map(|&w| (w, DeformedClass::schubert(w, n))).collect();
            let mut pair = BTreeMap::new();
            for &a in &reps {
                for &b in &reps {
                    let ab = d.mul(&basis[&a], &basis[&b])?;
                    pair.insert((a, b), ab);
                }
            }
            for &a in &reps {
                for &b in &reps {
                    if pair[&(a, b)] != pair[&(b, a)] {
                        bad.push(format!("{} {p} commutativity", ctx.root_system().label()));
                    }
                }
            }
            let failures: Vec<String> = reps
                .par_iter()
                .map(|&a| -> Result<Vec<String>> {
                    let mut out = Vec::new();
                    for &b in &reps {
                        for &c in &reps {
                            let left = d.mul(&pair[&(a, b)], &basis[&c])?;
                            let right = d.mul(&basis[&a], &pair[&(b, c)])?;
                            if left != right {
                                out.push(format!("{} {p} ({},{},{})", ctx.root_system().label(), a, b, c));
                            }
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            triples += reps.len().pow(3);
            bad.extend(failures);
        }
    }
    outcome(bad.is_empty(), format!("{triples} triples, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn gb_isomorphism() -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut pass = true;
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let r = liecoh::crosscheck_gb(&GroupContext::parse(t)?)?;
        pass &= r.passed;
        lines.push(format!("{t} {}/{}", r.pairs - r.mismatches, r.pairs));
    }
    outcome(pass, format!("pairs agreeing: {}", lines.join(", ")))
}

fn horn_soundness() -> Result<Outcome> {
    let (mut tuples, mut t2, mut movable, mut t2p, mut dims) = (0, 0, 0, 0, 0);
    let mut violations = Vec::new();
    for ctx in contexts()? {
        for p in Parabolic::all(ctx.rank()) {
            let s = horn::sweep(&ctx, &p, 3, 4, 2024)?;
            tuples += s.tuples;
            t2 += s.t2_checks;
            movable += s.movable;
            t2p += s.t2prime_checks;
            dims += s.dimension_checks;
            violations.extend(s.violations);
        }
    }
    outcome(
        violations.is_empty() && tuples > 0 && t2p > 0 && dims > 0,
        format!("{tuples} tuples, {t2} T2 checks, {movable} L-movable with {t2p} T2' checks, {dims} dimension checks, {} violations", violations.len()),
    )
}

/// Number of Littlewood–Richardson tableaux of shape `nu/lam` and content `mu`.
fn lr_coefficient(lam: &[usize], mu: &[usize], nu: &[usize]) -> i64 {
    let rows = nu.len();
    let part = |p: &[usize], i: usize| p.get(i).copied().unwrap_or(0);
    if (0..rows.max(lam.len())).any(|i| part(lam, i) > part(nu, i)) {
        return 0;
    }
    if lam.iter().sum::<usize>() + mu.iter().sum::<usize>() != nu.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|i| (part(lam, i)..nu[i]).map(move |j| (i, j))).collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(k: usize, cells: &[(usize, usize)], fill: &mut BTreeMap<(usize, usize), usize>, left: &mut Vec<usize>) -> i64 {
        if k == cells.len() {
            // reverse row reading word must be a lattice word
            let mut seen = vec![0usize; left.len() + 1];
            let mut by_row: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
            for (&(i, j), &x) in fill.iter() {
                by_row.entry(i).or_default().push((j, x));
            }
            for (_, mut r) in by_row {
                r.sort();
                for &(_, x) in r.iter().rev() {
                    seen[x] += 1;
                    if x > 0 && seen[x] > seen[x - 1] {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for x in 0..left.len() {
            if left[x] == 0 {
                continue;
            }
            if j > 0 && fill.get(&(i, j - 1)).is_some_and(|&y| y > x) {
                continue;
            }
            if i > 0 && fill.get(&(i - 1, j)).is_some_and(|&y| y >= x) {
                continue;
            }
            left[x] -= 1;
            fill.insert((i, j), x);
            total += go(k + 1, cells, fill, left);
            fill.remove(&(i, j));
            left[x] += 1;
        }
        total
    }
    go(0, &cells, &mut fill, &mut mu.to_vec())
}

/// Partitions in a `k × (n−k)` box, as weakly decreasing vectors of length `k`.
fn box_partitions(k: usize, m: usize) -> Vec<Vec<usize>> {
    (0..k).map(|_| 0..=m).multi_cartesian_product().filter(|p| p.windows(2).all(|w| w[0] >= w[1])).collect()
}

/// Matches the ring of `Gr(k, n)` against the LR rule under some degree-preserving bijection.
fn grassmannian_matches_lr(ring: &ParabolicRing, k: usize, m: usize) -> Result<bool> {
    let parts = box_partitions(k, m);
    let size = |p: &Vec<usize>| p.iter().sum::<usize>();
    let by = ring.by_codim();
    let mut options: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    for (c, ws) in by.iter().enumerate() {
        let ps: Vec<Vec<usize>> = parts.iter().filter(|p| size(p) == c).cloned().collect();
        if ps.len() != ws.len() {
            return Ok(false);
        }
        options.push(ps.iter().cloned().permutations(ps.len()).collect());
    }
    for choice in options.iter().map(|o| o.iter()).multi_cartesian_product() {
        let mut of: BTreeMap<ElementId, Vec<usize>> = BTreeMap::new();
        for (ws, ps) in by.iter().zip(choice) {
            for (&w, p) in ws.iter().zip(ps) {
                of.insert(w, p.clone());
            }
        }
        let mut ok = true;
        'pairs: for &u in ring.reps() {
            for &v in ring.reps() {
                let prod: BTreeMap<ElementId, i64> = ring.product(u, v)?.iter().copied().collect();
                for &w in ring.reps() {
                    let c = lr_coefficient(&of[&u], &of[&v], &of[&w]);
                    if prod.get(&w).copied().unwrap_or(0) != c {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

fn oracles() -> Result<Outcome> {
    let mut chevalley = 0;
    let mut bad = Vec::new();
    let mut negative = 0;
    let mut constants = 0;
    for ctx in contexts()? {
        let g = ctx.weyl().clone();
        let calc = ctx.calculus().clone();
        for i in 0..ctx.rank() {
            let s = g.from_word(&[i])?;
            for w in 0..g.order() {
                chevalley += 1;
                if calc.product_full(s, w)? != chevalley_oracle(&g, i, w) {
                    bad.push(format!("{} s{} {}", ctx.root_system().label(), i + 1, g.label(w)));
                }
            }
        }
        for p in Parabolic::all(ctx.rank()) {
            for (_, _, t) in ctx.ring(&p)?.table()? {
                constants += t.len();
                negative += t.iter().filter(|(_, c)| *c < 0).count();
            }
        }
    }
    let a3 = GroupContext::parse("A3")?;
    let gr24 = grassmannian_matches_lr(&*a3.ring(&a3.maximal(2))?, 2, 2)?;
    let a4 = GroupContext::parse("A4")?;
    let gr25 = grassmannian_matches_lr(&*a4.ring(&a4.maximal(2))?, 2, 3)?;
    outcome(
        bad.is_empty() && gr24 && gr25 && negative == 0,
        format!(
            "{chevalley} degree-2 products vs Chevalley ({} mismatches), LR on Gr(2,4) {}, Gr(2,5) {}, {constants} nonzero constants with {negative} negative",
            bad.len(),
            if gr24 { "ok" } else { "FAIL" },
            if gr25 { "ok" } else { "FAIL" }
        ),
    )
}

fn eigencone_counts() -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut pass = true;
    for t in ["B3", "C3"] {
        let ctx = GroupContext::parse(t)?;
        for s in [2, 3] {
            let mut b = InequalitySystem::generate(&ctx, s, Mode::Classical, false)?;
            let mut bp = InequalitySystem::generate(&ctx, s, Mode::Deformed, false)?;
            b.prune()?;
            bp.prune()?;
            let (br, bpr) = (b.total_redundant().unwrap_or(0), bp.total_redundant().unwrap_or(0));
            let equivalent = b.implies(&bp) && bp.implies(&b);
            lines.push(format!(
                "{t} s={s}: (B) {} ({}+{} chamber) with {br} redundant, (B') {} with {bpr} redundant, equivalent {equivalent}",
                b.total_len(),
                b.len(),
                b.chamber_len(),
                bp.total_len()
            ));
            if s == 3 {
                pass &= equivalent && bpr == 0;
                if t == "B3" {
                    pass &= b.total_len() == 135 && br == 33;
                }
            }
        }
    }
    outcome(pass, lines.join("; "))
}

fn membership() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lines = Vec::new();
    let mut pass = true;
    for ctx in contexts()? {
        let sys = InequalitySystem::generate(&ctx, 3, Mode::Deformed, false)?;
        let r = ctx.rank();
        let mut members = 0;
        for _ in 0..100 {
            let h: Vec<Q> = (0..r).map(|_| Q::new(BigInt::from(rng.gen_range(0..20)), BigInt::from(rng.gen_range(1..7)))).collect();
            let triple = vec![h.clone(), dual_coweight(&ctx, &h), vec![Q::from_integer(0.into()); r]];
            if sys.evaluate(&triple)?.member {
                members += 1;
            }
        }
        let outside = match violation_by_construction(&sys) {
            Some((k, hs)) => {
                let v = sys.evaluate(&hs)?;
                let eps = fmt_q(&hs[1][0]);
                !v.member && v.violated.iter().any(|(j, _)| *j == k) && { lines.push(format!("{} 100/{members} in, (1, {eps}, {eps}) out", sys.group)); true }
            }
            None => false,
        };
        pass &= members == 100 && outside;
    }
    outcome(pass, lines.join(", "))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() {
    // The test harness passes filter arguments; honour `--list` so `cargo test -- --list` works.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let criteria: [Criterion; 9] = [
        ("golden tables", golden_tables),
        ("minuscule collapse", minuscule_collapse),
        ("Poincaré duality of ⊙₀", poincare_duality),
        ("associativity and commutativity of ⊙", ring_axioms),
        ("G/B isomorphism with the inversion-set rule", gb_isomorphism),
        ("Horn soundness", horn_soundness),
        ("oracle equivalence", oracles),
        ("eigencone counts", eigencone_counts),
        ("membership sanity", membership),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match f() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name} ({:.1}s): {detail}",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
