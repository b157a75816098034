//! The inversion-set description of `(H*(G/B), ⊙₀)` and Kostant's degree data.
//!
//! On `G/B`, `ε_u ⊙₀ ε_v = ε_w` when `Φ_u ∩ Φ_v = ∅` and `Φ_w = Φ_u ⊔ Φ_v`, and
//! vanishes otherwise. [`crosscheck_gb`] compares this rule with the deformed
//! product computed from Schubert structure constants.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::context::GroupContext;
use crate::error::Result;
use crate::rootsys::{Parabolic, RootSystem, Weight};
use crate::weyl::{set_from, ElementId, RootSet, WeylGroup};

/// `ε_u ⊙₀ ε_v` on `G/B` by the inversion-set rule.
pub fn leviprod0(g: &WeylGroup, u: ElementId, v: ElementId) -> Option<ElementId> {
    let (a, b) = (g.inversions(u), g.inversions(v));
    if a & b != 0 {
        return None;
    }
    g.by_inversion_set(a | b)
}

fn closed(rs: &RootSystem, s: RootSet) -> bool {
    let roots = rs.positive_roots();
    let members: Vec<usize> = (0..roots.len()).filter(|&k| s & (1 << k) != 0).collect();
    for (x, &a) in members.iter().enumerate() {
        for &b in &members[x..] {
            let sum: Vec<i64> = roots[a].iter().zip(&roots[b]).map(|(p, q)| p + q).collect();
            if let Some(c) = rs.positive_index(&sum) {
                if s & (1 << c) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// The unique `w` with `Φ_w = S`, if `S` is closed and coclosed under addition.
pub fn is_inversion_set(g: &WeylGroup, s: &[usize]) -> Option<ElementId> {
    let rs = g.root_system();
    let n = rs.num_positive();
    let mask = set_from(s.iter().copied());
    let full: RootSet = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    if !(closed(rs, mask) && closed(rs, full & !mask)) {
        return None;
    }
    let w = g.by_inversion_set(mask);
    assert!(w.is_some(), "closed and coclosed set without a Weyl element");
    w
}

/// `ε_{s_i} ⊙₀ ε_v = ε_{v s_i}` if `vα_i` is a simple root, else 0.
pub fn chevalley0(g: &WeylGroup, i: usize, v: ElementId) -> Option<ElementId> {
    let r = g.root_system().rank();
    let alpha: Vec<i64> = (0..r).map(|j| i64::from(i == j)).collect();
    let img = g.act_root(v, &alpha);
    let simple = img.iter().filter(|&&x| x != 0).count() == 1 && img.iter().all(|&x| x == 0 || x == 1);
    simple.then(|| g.mul_simple_right(v, i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KostantModule {
    pub w: ElementId,
    pub word: Vec<usize>,
    pub degree: usize,
    /// `w⁻¹ρ − ρ` in fundamental-weight coordinates.
    pub highest_weight: Weight,
}

/// One module per `w ∈ W^P` of length `degree`, with highest weight `w⁻¹ρ − ρ`.
pub fn kostant_decomposition(g: &WeylGroup, p: &Parabolic, degree: usize) -> Vec<KostantModule> {
    let rs = g.root_system();
    let rho = rs.rho();
    g.minimal_reps(p)
        .into_iter()
        .filter(|&w| g.length(w) == degree)
        .map(|w| {
            let hw = &g.act_weight(g.inverse(w), &rho) - &rho;
            KostantModule {
                w,
                word: g.element(w).word().to_vec(),
                degree,
                highest_weight: hw.in_basis(rs, crate::rootsys::WeightBasis::Fundamental),
            }
        })
        .collect()
}

/// `λ` is `𝔩`-dominant: `⟨λ, α_i^∨⟩ ≥ 0` for `α_i ∈ Δ(P)`.
pub fn is_levi_dominant(rs: &RootSystem, p: &Parabolic, lambda: &Weight) -> bool {
    use num_traits::Signed;
    let c = lambda.root_coords(rs);
    p.levi().iter().all(|&i| !rs.coroot_pairing(&c, i).is_negative())
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub group: String,
    pub pairs: usize,
    pub nonzero: usize,
    pub mismatches: usize,
    /// First mismatching pair as reduced words, with both results.
    pub first_mismatch: Option<String>,
    pub passed: bool,
}

/// Compares `⊙₀` on `G/B` (from structure constants) with [`leviprod0`] for all pairs.
pub fn crosscheck_gb(ctx: &GroupContext) -> Result<CrosscheckReport> {
    let d = ctx.deformed(&Parabolic::borel())?;
    let ring = d.classical().clone();
    let g = ctx.weyl().clone();
    let n = g.order();
    let pairs: Vec<(ElementId, ElementId)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    // `[Λ̄_w] = ε_{w_o w}` on G/B.
    let results: Vec<(ElementId, ElementId, Vec<(ElementId, i64)>, Option<ElementId>)> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let p0 = d.product0(ring.star(u), ring.star(v))?;
            let eps: Vec<(ElementId, i64)> = p0.terms.iter().map(|(&w, &c)| (ring.star(w), c)).collect();
            Ok((u, v, eps, leviprod0(&g, u, v)))
        })
        .collect::<Result<_>>()?;
    let mut mismatches = 0;
    let mut nonzero = 0;
    let mut first = None;
    for (u, v, eps, rule) in results {
        let expect: Vec<(ElementId, i64)> = rule.map(|w| (w, 1)).into_iter().collect();
        nonzero += usize::from(!expect.is_empty());
        if eps != expect {
            mismatches += 1;
            first.get_or_insert_with(|| format!("{} * {}: product {:?}, rule {:?}", g.label(u), g.label(v), eps, expect));
        }
    }
    Ok(CrosscheckReport {
        group: ctx.root_system().label().to_string(),
        pairs: n * n,
        nonzero,
        mismatches,
        first_mismatch: first,
        passed: mismatches == 0,
    })
}

/// Elements that are products of distinct pairwise commuting simple reflections.
pub fn commuting_products(g: &WeylGroup) -> BTreeSet<ElementId> {
    let rs = g.root_system();
    let r = rs.rank();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << r) {
        let idx: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        let commuting = idx.iter().all(|&i| idx.iter().all(|&j| i == j || rs.cartan(i, j) == 0));
        if commuting {
            out.insert(g.from_word(&idx).unwrap());
        }
    }
    out
}

/// Support of the `⊙₀`-subalgebra generated by `H²(G/B)`, using [`chevalley0`].
pub fn h2_generated_support(g: &WeylGroup) -> BTreeSet<ElementId> {
    let mut seen = BTreeSet::from([g.identity()]);
    let mut stack = vec![g.identity()];
    while let Some(v) = stack.pop() {
        for i in 0..g.root_system().rank() {
            if let Some(w) = chevalley0(g, i, v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}

/// `Φ_u ∩ Φ_v = ∅ ⟺ ℓ(uv⁻¹) = ℓ(u) + ℓ(v)`.
pub fn disjoint_by_length(g: &WeylGroup, u: ElementId, v: ElementId) -> bool {
    g.length(g.mul(u, g.inverse(v))) == g.length(u) + g.length(v)
}

/// The four length conditions equivalent to `Φ_w = Φ_u ⊔ Φ_v`.
pub fn union_by_length(g: &WeylGroup, u: ElementId, v: ElementId, w: ElementId) -> bool {
    let l = |x| g.length(x);
    l(w) == l(u) + l(v)
        && disjoint_by_length(g, u, v)
        && l(g.mul(w, g.inverse(u))) + l(u) == l(w)
        && l(g.mul(w, g.inverse(v))) + l(v) == l(w)
}
