//! The deformed product `⊙` on `H*(G/P)`, its specialization `⊙₀`, and the
//! numerical L-movability criterion.
//!
//! `[Λ̄_u] ⊙ [Λ̄_v] = Σ_w ∏_i τ_i^{(χ_w − χ_u − χ_v)(x_i)} c^w_{u,v} [Λ̄_w]`, the
//! product over `α_i ∈ Δ∖Δ(P)`, with `χ_w = ρ − 2ρ^L + w⁻¹ρ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Parabolic, RootSystem, Weight};
use crate::schubert::{CohomClass, ParabolicRing};
use crate::weyl::{set_members, ElementId, WeylGroup};

/// Exponent vector over `Δ∖Δ(P)` (in increasing simple-root order).
pub type Exps = Vec<u32>;

/// A polynomial in the `τ_i` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauPoly {
    pub terms: BTreeMap<Exps, i64>,
}

impl TauPoly {
    pub fn monomial(e: Exps, c: i64) -> Self {
        let mut p = TauPoly::default();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: Exps, c: i64) {
        if c == 0 {
            return;
        }
        let x = self.terms.entry(e.clone()).or_insert(0);
        *x += c;
        if *x == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &TauPoly) -> TauPoly {
        let mut out = TauPoly::default();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }

    /// Value at `τ = 0`.
    pub fn at_zero(&self) -> i64 {
        self.terms.iter().filter(|(e, _)| e.iter().all(|&k| k == 0)).map(|(_, c)| c).sum()
    }

    /// Value at `τ = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Renders with variable names, e.g. `2t^2` or `t1t2`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (e, &c) in self.terms.iter().rev() {
            let mono: String = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (-1, false) => format!("-{mono}"),
                _ => format!("{c}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+").replace("+-", "-")
        }
    }
}

/// A class over `ℤ[τ_i]` in the `[Λ̄_w]` basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DeformedClass {
    pub terms: BTreeMap<ElementId, TauPoly>,
}

impl DeformedClass {
    pub fn schubert(w: ElementId, nvars: usize) -> Self {
        DeformedClass { terms: BTreeMap::from([(w, TauPoly::monomial(vec![0; nvars], 1))]) }
    }

    pub fn add(&mut self, w: ElementId, p: &TauPoly) {
        let e = self.terms.entry(w).or_default();
        for (k, &c) in &p.terms {
            e.add_term(k.clone(), c);
        }
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: ElementId) -> TauPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// `τ ↦ 0`.
    pub fn at_zero(&self) -> CohomClass {
        CohomClass::from_terms(self.terms.iter().map(|(&w, p)| (w, p.at_zero())))
    }

    /// `τ ↦ 1`.
    pub fn at_one(&self) -> CohomClass {
        CohomClass::from_terms(self.terms.iter().map(|(&w, p)| (w, p.at_one())))
    }

    pub fn has_tau(&self) -> bool {
        self.terms.values().any(|p| p.terms.keys().any(|e| e.iter().any(|&k| k > 0)))
    }
}

/// Outcome of the L-movability test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LMovability {
    pub movable: bool,
    /// Classical coefficient of `[Λ̄_e]` in the product.
    pub d: i64,
    /// `((Σ χ_{w_j}) − χ_1)(x_i)` for each `α_i ∉ Δ(P)`, one-based `i`.
    pub values: Vec<(usize, i64)>,
}

/// `H*(G/P)` together with the characters `χ_w` and the deformed product.
#[derive(Debug)]
pub struct DeformedRing {
    ring: Arc<ParabolicRing>,
    comp: Vec<usize>,
    chi: HashMap<ElementId, Vec<i64>>,
}

impl DeformedRing {
    pub fn new(ring: Arc<ParabolicRing>) -> Self {
        let rs = ring.root_system().clone();
        let comp = ring.parabolic().complement(rs.rank());
        let chi = ring.reps().iter().map(|&w| (w, chi_checked(ring.weyl(), ring.parabolic(), w))).collect();
        DeformedRing { ring, comp, chi }
    }

    pub fn classical(&self) -> &Arc<ParabolicRing> {
        &self.ring
    }

    pub fn weyl(&self) -> &Arc<WeylGroup> {
        self.ring.weyl()
    }

    pub fn parabolic(&self) -> &Parabolic {
        self.ring.parabolic()
    }

    /// Simple roots outside the Levi (zero-based); these index the `τ_i`.
    pub fn tau_indices(&self) -> &[usize] {
        &self.comp
    }

    pub fn nvars(&self) -> usize {
        self.comp.len()
    }

    /// `τ` for a single variable, otherwise `τ1, τ3, ...` by simple-root index.
    pub fn tau_names(&self) -> Vec<String> {
        if self.comp.len() == 1 {
            vec!["t".into()]
        } else {
            self.comp.iter().map(|i| format!("t{}", i + 1)).collect()
        }
    }

    /// `χ_w` in simple-root coordinates.
    pub fn chi(&self, w: ElementId) -> Result<&[i64]> {
        self.ring.check_rep(w)?;
        Ok(&self.chi[&w])
    }

    /// `χ_w(x_i)` for `α_i ∉ Δ(P)`.
    pub fn chi_at_x(&self, w: ElementId) -> Result<Vec<i64>> {
        let c = self.chi(w)?;
        Ok(self.comp.iter().map(|&i| c[i]).collect())
    }

    fn exponents(&self, w: ElementId, factors: &[ElementId]) -> Exps {
        self.comp
            .iter()
            .map(|&i| {
                let e = self.chi[&w][i] - factors.iter().map(|u| self.chi[u][i]).sum::<i64>();
                assert!(e >= 0, "negative τ-exponent {e}: deformation exponents must be nonnegative");
                e as u32
            })
            .collect()
    }

    /// `[Λ̄_u] ⊙ [Λ̄_v]`.
    pub fn product(&self, u: ElementId, v: ElementId) -> Result<DeformedClass> {
        let mut out = DeformedClass::default();
        for &(w, c) in self.ring.product(u, v)?.iter() {
            out.add(w, &TauPoly::monomial(self.exponents(w, &[u, v]), c));
        }
        Ok(out)
    }

    /// `[Λ̄_u] ⊙₀ [Λ̄_v]`.
    pub fn product0(&self, u: ElementId, v: ElementId) -> Result<CohomClass> {
        Ok(self.product(u, v)?.at_zero())
    }

    /// Bilinear extension of `⊙` over `ℤ[τ]`.
    pub fn mul(&self, a: &DeformedClass, b: &DeformedClass) -> Result<DeformedClass> {
        let mut out = DeformedClass::default();
        for (&u, p) in &a.terms {
            for (&v, q) in &b.terms {
                let pq = p.mul(q);
                for (w, r) in self.product(u, v)?.terms {
                    out.add(w, &pq.mul(&r));
                }
            }
        }
        Ok(out)
    }

    /// `[Λ̄_{w_1}] ⊙ ⋯ ⊙ [Λ̄_{w_s}]` from the classical product and the
    /// exponents `(χ_w − Σ χ_{w_j})(x_i)`.
    pub fn product_many(&self, ws: &[ElementId]) -> Result<DeformedClass> {
        let classical = self.ring.mul_many(ws)?;
        let mut out = DeformedClass::default();
        for (&w, &c) in &classical.terms {
            out.add(w, &TauPoly::monomial(self.exponents(w, ws), c));
        }
        Ok(out)
    }

    /// Checks `Σ codim Λ̄_{w_j} = dim G/P`.
    pub fn check_dimension(&self, ws: &[ElementId]) -> Result<()> {
        for &w in ws {
            self.ring.check_rep(w)?;
        }
        let sum: usize = ws.iter().map(|&w| self.ring.codim(w)).sum();
        if sum != self.ring.dim() {
            return Err(Error::DimensionMismatch { sum, expected: self.ring.dim() });
        }
        Ok(())
    }

    /// L-movability by the numerical criterion: `d ≠ 0` and
    /// `((Σ χ_{w_j}) − χ_1)(x_i) = 0` for every `α_i ∉ Δ(P)`.
    pub fn is_l_movable(&self, ws: &[ElementId]) -> Result<LMovability> {
        self.check_dimension(ws)?;
        let d = self.ring.mul_many(ws)?.coefficient(self.ring.point());
        let e = self.ring.point();
        let values: Vec<(usize, i64)> = self
            .comp
            .iter()
            .map(|&i| (i + 1, ws.iter().map(|w| self.chi[w][i]).sum::<i64>() - self.chi[&e][i]))
            .collect();
        let movable = d != 0 && values.iter().all(|&(_, x)| x == 0);
        Ok(LMovability { movable, d, values })
    }

    /// `R(T_w) = w⁻¹R⁺ ∩ (R⁻∖R⁻_𝔩)`, reported as the positive roots `β` with `−β ∈ R(T_w)`.
    pub fn tangent_roots(&self, w: ElementId) -> Result<Vec<usize>> {
        self.ring.check_rep(w)?;
        let g = self.weyl();
        let nil = g.nilradical_mask(self.parabolic());
        let rs = g.root_system();
        Ok((0..rs.num_positive())
            .filter(|&k| nil & (1 << k) != 0)
            .filter(|&k| g.act_root(w, &rs.positive_roots()[k]).iter().any(|&x| x < 0))
            .collect())
    }

    /// `R⁻∖R⁻_𝔩 = R(T_w) ⊔ w_o^P R(T_{w_o w w_o^P})`.
    pub fn complement_check(&self, w: ElementId) -> Result<bool> {
        let g = self.weyl();
        let rs = g.root_system();
        let wop = g.longest_of(self.parabolic());
        let mine = self.tangent_roots(w)?;
        let mut other = Vec::new();
        for k in self.tangent_roots(self.ring.star(w))? {
            let img = g.act_root(wop, &rs.positive_roots()[k]);
            match rs.positive_index(&img) {
                Some(j) => other.push(j),
                None => return Ok(false),
            }
        }
        let mut all: Vec<usize> = mine.iter().chain(&other).copied().collect();
        all.sort_unstable();
        let before = all.len();
        all.dedup();
        Ok(before == all.len() && all == rs.nilradical(self.parabolic()))
    }

    pub fn label(&self, w: ElementId) -> String {
        self.ring.label(w)
    }
}

/// `χ_w` from both `Σ_{β ∈ R(𝔲_P), wβ > 0} β` and `ρ − 2ρ^L + w⁻¹ρ`; panics if they differ.
pub fn chi_checked(g: &WeylGroup, p: &Parabolic, w: ElementId) -> Vec<i64> {
    let rs = g.root_system();
    let by_sum = chi_by_sum(g, p, w);
    let closed = chi_closed_form(rs, g, p, w);
    let as_q: Vec<_> = by_sum.iter().map(|&x| crate::arith::qi(x)).collect();
    assert_eq!(as_q, closed.coords, "the two formulas for χ_w disagree");
    by_sum
}

fn chi_by_sum(g: &WeylGroup, p: &Parabolic, w: ElementId) -> Vec<i64> {
    let rs = g.root_system();
    let nil = g.nilradical_mask(p) & !g.inversions(w);
    let mut acc = vec![0i64; rs.rank()];
    for k in set_members(nil) {
        for (a, c) in acc.iter_mut().zip(&rs.positive_roots()[k]) {
            *a += c;
        }
    }
    acc
}

fn chi_closed_form(rs: &RootSystem, g: &WeylGroup, p: &Parabolic, w: ElementId) -> Weight {
    let rho = rs.rho();
    let two = crate::arith::qi(2);
    let a = &rho - &rs.rho_levi(p).scale(&two);
    &a + &g.act_weight(g.inverse(w), &rho)
}

/// A maximal parabolic is minuscule when its omitted simple root has coefficient 1
/// in the highest root.
pub fn is_minuscule(rs: &RootSystem, p: &Parabolic) -> bool {
    let comp = p.complement(rs.rank());
    comp.len() == 1 && rs.highest_root().is_some_and(|h| h[comp[0]] == 1)
}

impl fmt::Display for LMovability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "movable={} d={}", self.movable, self.d)?;
        for (i, x) in &self.values {
            write!(f, " x{i}:{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::GroupContext;
    use crate::rootsys::CartanType;

    fn by_codim(r: &DeformedRing, k: usize) -> Vec<ElementId> {
        r.classical().by_codim()[k].clone()
    }

    #[test]
    fn chi_identities() {
        for ct in CartanType::rank_at_most_3() {
            let ctx = GroupContext::new(ct).unwrap();
            let rs = ctx.root_system().clone();
            for p in Parabolic::all(rs.rank()) {
                let d = ctx.deformed(&p).unwrap();
                let g = d.weyl().clone();
                let e = g.identity();
                // χ_1 = 2ρ − 2ρ^L
                let two = crate::arith::qi(2);
                let expect = &rs.rho().scale(&two) - &rs.rho_levi(&p).scale(&two);
                assert_eq!(d.chi(e).unwrap().iter().map(|&x| crate::arith::qi(x)).collect::<Vec<_>>(), expect.coords);
                let wop = g.longest_of(&p);
                for &w in d.classical().reps() {
                    // χ_w + w_o^P χ_{w*} = χ_1
                    let star = Weight::roots(d.chi(d.classical().star(w)).unwrap().iter().map(|&x| crate::arith::qi(x)).collect());
                    let lhs = &Weight::roots(d.chi(w).unwrap().iter().map(|&x| crate::arith::qi(x)).collect()) + &g.act_weight(wop, &star);
                    assert_eq!(lhs.coords, expect.coords, "{ct} {p}");
                }
            }
        }
    }

    #[test]
    fn c3_p1_example() {
        let ctx = GroupContext::parse("C3").unwrap();
        let d = ctx.deformed(&ctx.maximal(1)).unwrap();
        let a: Vec<ElementId> = (0..=5).map(|k| by_codim(&d, k)[0]).collect();
        // χ(x1) by codim is 0,1,2,4,5,6
        let chis: Vec<i64> = a.iter().map(|&w| d.chi_at_x(w).unwrap()[0]).collect();
        assert_eq!(chis, vec![0, 1, 2, 4, 5, 6]);
        let t = |k| TauPoly::monomial(vec![k], 1);
        assert_eq!(d.product(a[1], a[2]).unwrap().terms, BTreeMap::from([(a[3], t(1))]));
        assert_eq!(d.product(a[2], a[2]).unwrap().terms, BTreeMap::from([(a[4], t(1))]));
        assert_eq!(d.product(a[1], a[3]).unwrap().terms, BTreeMap::from([(a[4], t(0))]));
        assert!(d.product(a[1], a[5]).unwrap().is_zero());
    }

    #[test]
    fn b3_p3_example() {
        let ctx = GroupContext::parse("B3").unwrap();
        let d = ctx.deformed(&ctx.maximal(3)).unwrap();
        let b1 = by_codim(&d, 1)[0];
        let b2 = by_codim(&d, 2)[0];
        let b4 = by_codim(&d, 4)[0];
        assert_eq!(d.product(b2, b2).unwrap().terms, BTreeMap::from([(b4, TauPoly::monomial(vec![0], 2))]));
        assert_eq!(d.product(b1, b1).unwrap().terms, BTreeMap::from([(b2, TauPoly::monomial(vec![1], 1))]));
    }

    #[test]
    fn unit_and_tau_one() {
        for t in ["B3", "C3", "G2"] {
            let ctx = GroupContext::parse(t).unwrap();
            for p in Parabolic::all(ctx.rank()) {
                let d = ctx.deformed(&p).unwrap();
                let one = d.classical().unit();
                assert!(d.chi(one).unwrap().iter().all(|&x| x == 0));
                for &u in d.classical().reps() {
                    assert_eq!(d.product(one, u).unwrap(), DeformedClass::schubert(u, d.nvars()));
                    for &v in d.classical().reps() {
                        let cl = CohomClass::from_terms(d.classical().product(u, v).unwrap().iter().copied());
                        assert_eq!(d.product(u, v).unwrap().at_one(), cl);
                    }
                }
            }
        }
    }

    #[test]
    fn lmovability() {
        let ctx = GroupContext::parse("B3").unwrap();
        let d = ctx.deformed(&ctx.maximal(2)).unwrap();
        let r = d.classical();
        for &w in r.reps() {
            let m = d.is_l_movable(&[w, r.star(w)]).unwrap();
            assert!(m.movable);
            assert_eq!(m.d, 1);
        }
        assert!(matches!(d.is_l_movable(&[r.unit()]), Err(Error::DimensionMismatch { .. })));
        // b2'·b2' = 2τ b4' : pairing with the dual of b4' gives d = 2 but not L-movable
        let deg2 = by_codim(&d, 2);
        let mut found = false;
        for &x in &deg2 {
            for (w, p) in d.product(x, x).unwrap().terms {
                if p == TauPoly::monomial(vec![1], 2) {
                    let m = d.is_l_movable(&[x, x, r.star(w)]).unwrap();
                    assert!(!m.movable);
                    assert_eq!(m.d, 2);
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn tangent_roots_partition() {
        for ct in CartanType::rank_at_most_3() {
            let ctx = GroupContext::new(ct).unwrap();
            for p in Parabolic::all(ctx.rank()) {
                let d = ctx.deformed(&p).unwrap();
                assert!(d.tangent_roots(d.weyl().identity()).unwrap().is_empty());
                for &w in d.classical().reps() {
                    assert_eq!(d.tangent_roots(w).unwrap().len(), d.weyl().length(w));
                    assert!(d.complement_check(w).unwrap(), "{ct} {p}");
                }
            }
        }
    }

    #[test]
    fn minuscule_parabolics() {
        let b3 = RootSystem::new("B3".parse().unwrap());
        let c3 = RootSystem::new("C3".parse().unwrap());
        assert!(is_minuscule(&b3, &Parabolic::maximal(3, 0)));
        assert!(!is_minuscule(&b3, &Parabolic::maximal(3, 1)));
        assert!(!is_minuscule(&b3, &Parabolic::maximal(3, 2)));
        assert!(is_minuscule(&c3, &Parabolic::maximal(3, 2)));
        assert!(!is_minuscule(&c3, &Parabolic::maximal(3, 0)));
    }

    #[test]
    fn render_tau() {
        let names = vec!["t".to_string()];
        let mut p = TauPoly::monomial(vec![1], 2);
        p.add_term(vec![0], 1);
        assert_eq!(p.render(&names), "2t+1");
        assert_eq!(TauPoly::monomial(vec![2], 1).render(&names), "t^2");
        assert_eq!(TauPoly::default().render(&names), "0");
    }
}
