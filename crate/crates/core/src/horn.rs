//! Necessary conditions for nonvanishing of Schubert products: character
//! inequalities with their Levi recursion, the central-character refinement
//! in the L-movable case, and dimension inequalities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::context::GroupContext;
use crate::deform::DeformedRing;
use crate::error::{Error, Result};
use crate::rootsys::{LeviSubsystem, Parabolic};
use crate::schubert::{CohomClass, ParabolicRing};
use crate::weyl::{set_len, set_members, word_label, ElementId, RootSet, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckKind {
    Center,
    CenterPrime,
    T2PrimeEquality,
    T2PrimeRefined,
    Nonvanishing,
    Dimension,
    DimensionSets,
    DimensionIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HornCheck {
    pub kind: CheckKind,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    /// Generating data, e.g. the Levi parabolic, u-tuple and central character.
    pub data: String,
}

impl HornCheck {
    fn new(kind: CheckKind, relation: Relation, lhs: i64, rhs: i64, data: String) -> Self {
        HornCheck { kind, relation, lhs, rhs, pass: relation.holds(lhs, rhs), data }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HornReport {
    pub group: String,
    pub parabolic: String,
    pub tuple: Vec<String>,
    pub applicable: bool,
    pub note: Option<String>,
    /// Classical coefficient of the point class, when relevant.
    pub d: Option<i64>,
    pub checks: Vec<HornCheck>,
}

impl HornReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn violations(&self) -> Vec<&HornCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Every stored verdict agrees with re-evaluating its relation.
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.pass == c.relation.holds(c.lhs, c.rhs))
    }

    pub fn count(&self, kind: CheckKind) -> usize {
        self.checks.iter().filter(|c| c.kind == kind).count()
    }
}

impl fmt::Display for HornReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} tuple ({})", self.group, self.parabolic, self.tuple.join(", "))?;
        if let Some(d) = self.d {
            writeln!(f, "  point coefficient d = {d}")?;
        }
        if !self.applicable {
            return writeln!(f, "  not applicable: {}", self.note.as_deref().unwrap_or(""));
        }
        let mut by_kind: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = by_kind.entry(format!("{:?}", c.kind)).or_default();
            e.0 += 1;
            e.1 += usize::from(c.pass);
        }
        for (k, (n, ok)) in by_kind {
            writeln!(f, "  {k:<18} {ok}/{n} hold")?;
        }
        for c in self.violations() {
            writeln!(f, "  VIOLATED {:?}: {} {:?} {} [{}]", c.kind, c.lhs, c.relation, c.rhs, c.data)?;
        }
        Ok(())
    }
}

/// A central character of `L`, recorded by the simple-root coefficients outside `Δ(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralChar {
    /// `(i, n_i)` with one-based `i ∉ Δ(P)`.
    pub signature: Vec<(usize, i64)>,
    /// Positive-root indices of the class in `R(𝔲_P)`.
    pub roots: Vec<usize>,
    pub mask: RootSet,
}

/// Partitions `R(𝔲_P)` by central character.
pub fn central_characters(g: &WeylGroup, p: &Parabolic) -> Vec<CentralChar> {
    let rs = g.root_system();
    let comp = p.complement(rs.rank());
    let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for k in rs.nilradical(p) {
        let sig = comp.iter().map(|&i| rs.positive_roots()[k][i]).collect();
        classes.entry(sig).or_default().push(k);
    }
    classes
        .into_iter()
        .map(|(sig, roots)| CentralChar {
            signature: comp.iter().map(|i| i + 1).zip(sig).collect(),
            mask: crate::weyl::set_from(roots.iter().copied()),
            roots,
        })
        .collect()
}

fn sum_roots(g: &WeylGroup, s: RootSet) -> Vec<i64> {
    let rs = g.root_system();
    let mut acc = vec![0i64; rs.rank()];
    for k in set_members(s) {
        for (a, c) in acc.iter_mut().zip(&rs.positive_roots()[k]) {
            *a += c;
        }
    }
    acc
}

/// `R(w, c) = R(𝔲_P) ∩ w⁻¹R⁺ ∩ c`.
pub fn r_set(g: &WeylGroup, w: ElementId, c: &CentralChar) -> RootSet {
    c.mask & !g.inversions(w)
}

/// `χ^c_w`, in simple-root coordinates.
pub fn chi_c(g: &WeylGroup, w: ElementId, c: &CentralChar) -> Vec<i64> {
    sum_roots(g, r_set(g, w, c))
}

/// The Levi subsystem together with the data needed for the recursion.
#[derive(Debug)]
pub struct LeviData {
    pub sub: LeviSubsystem,
    pub ctx: GroupContext,
    lifts: Vec<ElementId>,
}

impl LeviData {
    pub fn new(ctx: &GroupContext, p: &Parabolic) -> Result<Self> {
        let sub = ctx.root_system().levi_subsystem(p)?;
        let lctx = GroupContext::from_root_system(Arc::new(sub.system.clone()))?;
        let lifts = lctx
            .weyl()
            .elements()
            .iter()
            .map(|e| {
                let word: Vec<usize> = e.word().iter().map(|&k| sub.simple_map[k]).collect();
                ctx.weyl().from_word(&word)
            })
            .collect::<Result<_>>()?;
        Ok(LeviData { sub, ctx: lctx, lifts })
    }

    /// The ambient element of a subsystem element.
    pub fn lift(&self, u: ElementId) -> ElementId {
        self.lifts[u]
    }

    /// `H*(L/Q_L)` for an ambient-indexed parabolic `q ⊆ P`.
    pub fn ring(&self, q: &Parabolic) -> Result<Arc<ParabolicRing>> {
        self.ctx.ring(&self.sub.restrict_parabolic(q))
    }

    /// Standard maximal parabolics of `L`, as `(p, Q)` with ambient `α_p ∉ Δ(Q)`, `Δ(Q) = Δ(P)∖{α_p}`.
    pub fn maximal(&self) -> Vec<(usize, Parabolic)> {
        self.sub
            .simple_map
            .iter()
            .map(|&p| (p, Parabolic::from_levi(self.sub.simple_map.iter().copied().filter(|&i| i != p))))
            .collect()
    }
}

/// All `s`-tuples of `W^Q` (by id) whose classical product is nonzero.
pub fn nonzero_tuples(ring: &ParabolicRing, s: usize) -> Result<Vec<Vec<ElementId>>> {
    let mut level: Vec<(Vec<ElementId>, CohomClass)> = vec![(Vec::new(), CohomClass::schubert(ring.unit()))];
    for _ in 0..s {
        let mut next = Vec::new();
        for (t, cls) in &level {
            for &w in ring.reps() {
                let c = ring.mul(cls, &CohomClass::schubert(w))?;
                if !c.is_zero() {
                    let mut t2 = t.clone();
                    t2.push(w);
                    next.push((t2, c));
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|(t, _)| t).collect())
}

/// `s`-tuples in `(W^P)^s` with `Σ codim = dim G/P`, each with its point coefficient `d ≠ 0`
/// (or every coefficient when `include_zero`).
pub fn top_tuples(ring: &ParabolicRing, s: usize, include_zero: bool) -> Result<Vec<(Vec<ElementId>, i64)>> {
    assert!(s >= 1);
    let dim = ring.dim();
    let mut level: Vec<(Vec<ElementId>, CohomClass, usize)> =
        vec![(Vec::new(), CohomClass::schubert(ring.unit()), 0)];
    for _ in 0..s - 1 {
        let mut next = Vec::new();
        for (t, cls, cd) in &level {
            for &w in ring.reps() {
                let c2 = cd + ring.codim(w);
                if c2 > dim {
                    continue;
                }
                let c = ring.mul(cls, &CohomClass::schubert(w))?;
                if include_zero || !c.is_zero() {
                    let mut t2 = t.clone();
                    t2.push(w);
                    next.push((t2, c, c2));
                }
            }
        }
        level = next;
    }
    let mut out = Vec::new();
    for (t, cls, cd) in level {
        for &w in ring.reps() {
            if cd + ring.codim(w) != dim {
                continue;
            }
            // [Λ̄_a][Λ̄_w] = δ_{a, w*} [pt] in complementary degrees
            let d = cls.coefficient(ring.star(w));
            if include_zero || d != 0 {
                let mut t2 = t.clone();
                t2.push(w);
                out.push((t2, d));
            }
        }
    }
    Ok(out)
}

struct LeviTuples {
    p: usize,
    q: Parabolic,
    /// Ambient lifts of each u-tuple with nonzero product in `H*(L/Q_L)`.
    tuples: Vec<(Vec<ElementId>, String)>,
}

/// Checks of the character inequalities and their refinements for one `G/P`.
pub struct HornEngine {
    d: Arc<DeformedRing>,
    levi: LeviData,
    centrals: Vec<CentralChar>,
    s: usize,
    levi_tuples: Vec<LeviTuples>,
    group: String,
}

impl HornEngine {
    /// Prepares the Levi recursion for `s`-tuples.
    pub fn new(ctx: &GroupContext, p: &Parabolic, s: usize) -> Result<Self> {
        let d = ctx.deformed(p)?;
        let levi = LeviData::new(ctx, p)?;
        let g = ctx.weyl().clone();
        let mut levi_tuples = Vec::new();
        for (pp, q) in levi.maximal() {
            let ring = levi.ring(&q)?;
            let lg = levi.ctx.weyl().clone();
            let tuples = nonzero_tuples(&ring, s)?
                .into_iter()
                .map(|t| {
                    let label = t.iter().map(|&u| word_label(&lift_word(&levi, lg.element(u).word()))).collect::<Vec<_>>().join(",");
                    (t.iter().map(|&u| levi.lift(u)).collect(), label)
                })
                .collect();
            levi_tuples.push(LeviTuples { p: pp, q, tuples });
        }
        Ok(HornEngine { centrals: central_characters(&g, p), d, levi, s, levi_tuples, group: ctx.root_system().label().into() })
    }

    pub fn deformed(&self) -> &Arc<DeformedRing> {
        &self.d
    }

    pub fn levi(&self) -> &LeviData {
        &self.levi
    }

    pub fn central_characters(&self) -> &[CentralChar] {
        &self.centrals
    }

    fn g(&self) -> &WeylGroup {
        self.d.weyl()
    }

    fn header(&self, ws: &[ElementId]) -> HornReport {
        HornReport {
            group: self.group.clone(),
            parabolic: self.d.parabolic().to_string(),
            tuple: ws.iter().map(|&w| self.g().label(w)).collect(),
            applicable: true,
            note: None,
            d: None,
            checks: Vec::new(),
        }
    }

    /// `λ(u·x_p)`, i.e. the `p`-th simple-root coordinate of `u⁻¹λ`.
    fn at_ux(&self, lambda: &[i64], u: ElementId, p: usize) -> i64 {
        let g = self.g();
        g.act_root(g.inverse(u), lambda)[p]
    }

    fn check_len(&self, ws: &[ElementId]) -> Result<()> {
        if ws.len() != self.s {
            return Err(Error::Precondition(format!("engine prepared for s = {}, got {}", self.s, ws.len())));
        }
        Ok(())
    }

    /// The character inequalities: `(center)` for every `α_i ∉ Δ(P)` and `(center′)`
    /// over maximal `Q_L` of `L` and u-tuples with nonzero product in `H*(L/Q_L)`.
    pub fn check_t2(&self, ws: &[ElementId]) -> Result<HornReport> {
        self.check_len(ws)?;
        self.d.check_dimension(ws)?;
        let ring = self.d.classical();
        let mut rep = self.header(ws);
        let d = ring.mul_many(ws)?.coefficient(ring.point());
        rep.d = Some(d);
        if d == 0 {
            rep.applicable = false;
            rep.note = Some("classical point coefficient is zero".into());
            return Ok(rep);
        }
        rep.checks = self.t2_checks(ws)?;
        Ok(rep)
    }

    /// The (center) and (center′) inequalities, evaluated whatever the value of `d`.
    pub fn t2_checks(&self, ws: &[ElementId]) -> Result<Vec<HornCheck>> {
        let mut out = Vec::new();
        let e = self.d.classical().point();
        let chi1 = self.d.chi(e)?.to_vec();
        let chis: Vec<Vec<i64>> = ws.iter().map(|&w| self.d.chi(w).map(<[i64]>::to_vec)).collect::<Result<_>>()?;
        for &i in self.d.tau_indices() {
            let lhs: i64 = chis.iter().map(|c| c[i]).sum::<i64>() - chi1[i];
            out.push(HornCheck::new(CheckKind::Center, Relation::Le, lhs, 0, format!("x{}", i + 1)));
        }
        for lt in &self.levi_tuples {
            for (us, label) in &lt.tuples {
                let lhs = chis.iter().zip(us).map(|(c, &u)| self.at_ux(c, u, lt.p)).sum();
                out.push(HornCheck::new(
                    CheckKind::CenterPrime,
                    Relation::Le,
                    lhs,
                    chi1[lt.p],
                    format!("Q_L={} u=({label}) p={}", lt.q, lt.p + 1),
                ));
            }
        }
        Ok(out)
    }

    /// The central-character equalities and refined inequalities for an L-movable tuple.
    pub fn check_t2prime(&self, ws: &[ElementId]) -> Result<HornReport> {
        self.check_len(ws)?;
        let m = self.d.is_l_movable(ws)?;
        if !m.movable {
            return Err(Error::NotLMovable(m.to_string()));
        }
        let g = self.g();
        let e = self.d.classical().point();
        let mut rep = self.header(ws);
        rep.d = Some(m.d);
        for c in &self.centrals {
            let sig = format!("{:?}", c.signature);
            let lhs = ws.iter().map(|&w| set_len(r_set(g, w, c)) as i64).sum();
            let rhs = set_len(r_set(g, e, c)) as i64;
            rep.checks.push(HornCheck::new(CheckKind::T2PrimeEquality, Relation::Eq, lhs, rhs, format!("c={sig}")));
            let chis: Vec<Vec<i64>> = ws.iter().map(|&w| chi_c(g, w, c)).collect();
            let chi1 = chi_c(g, e, c);
            for lt in &self.levi_tuples {
                for (us, label) in &lt.tuples {
                    let lhs = chis.iter().zip(us).map(|(x, &u)| self.at_ux(x, u, lt.p)).sum();
                    rep.checks.push(HornCheck::new(
                        CheckKind::T2PrimeRefined,
                        Relation::Le,
                        lhs,
                        chi1[lt.p],
                        format!("c={sig} Q_L={} u=({label}) p={}", lt.q, lt.p + 1),
                    ));
                }
            }
        }
        Ok(rep)
    }

    /// Sum over central characters of the refined left-hand sides, per
    /// `(Q_L, u, p)`; equals the `(center′)` left-hand side.
    pub fn refined_sums(&self, ws: &[ElementId]) -> Vec<(i64, i64)> {
        let g = self.g();
        let mut out = Vec::new();
        for lt in &self.levi_tuples {
            for (us, _) in &lt.tuples {
                let refined: i64 = self
                    .centrals
                    .iter()
                    .map(|c| ws.iter().zip(us).map(|(&w, &u)| self.at_ux(&chi_c(g, w, c), u, lt.p)).sum::<i64>())
                    .sum();
                let direct: i64 = ws.iter().zip(us).map(|(&w, &u)| self.at_ux(self.d.chi(w).unwrap(), u, lt.p)).sum();
                out.push((refined, direct));
            }
        }
        out
    }
}

fn lift_word(levi: &LeviData, word: &[usize]) -> Vec<usize> {
    word.iter().map(|&k| levi.sub.simple_map[k]).collect()
}

/// `codim(Λ^Q_w; G/Q) = |R(𝔲_Q) ∩ w⁻¹R⁺|` for any `w ∈ W`.
pub fn codim_any(g: &WeylGroup, q: &Parabolic, w: ElementId) -> usize {
    set_len(g.nilradical_mask(q) & !g.inversions(w))
}

/// A weakHorn datum: `Q ⊆ P`, `Q̂ ⊇ Q` and `u_j ∈ W_L/W_{Q_L}` (subsystem ids).
#[derive(Debug, Clone)]
pub struct DimensionDatum {
    pub q: Parabolic,
    pub qhat: Parabolic,
    pub us: Vec<ElementId>,
}

/// Checks the dimension conditions for `w_1..w_s ∈ W^P` and a datum.
pub fn check_dimension(ctx: &GroupContext, p: &Parabolic, levi: &LeviData, ws: &[ElementId], datum: &DimensionDatum) -> Result<HornReport> {
    let g = ctx.weyl().clone();
    let DimensionDatum { q, qhat, us } = datum;
    if !q.is_subset_of(p) || !q.is_subset_of(qhat) {
        return Err(Error::Precondition(format!("need Q ⊆ P and Q ⊆ Q̂, got Q={q} P={p} Q̂={qhat}")));
    }
    if us.len() != ws.len() {
        return Err(Error::Precondition("u-tuple and w-tuple lengths differ".into()));
    }
    let ring = ctx.ring(p)?;
    for &w in ws {
        ring.check_rep(w)?;
    }
    if ring.mul_many(ws)?.is_zero() {
        return Err(Error::Precondition("product of the w-tuple vanishes in H*(G/P)".into()));
    }
    let lring = levi.ring(q)?;
    if lring.mul_many(us)?.is_zero() {
        return Err(Error::Precondition("product of the u-tuple vanishes in H*(L/Q_L)".into()));
    }
    let hring = ctx.ring(qhat)?;
    let what: Vec<ElementId> = ws.iter().zip(us).map(|(&w, &u)| g.mul(w, levi.lift(u))).collect();
    let reps: Vec<ElementId> = what.iter().map(|&x| g.min_coset_rep(x, qhat)).collect();
    let mut rep = HornReport {
        group: ctx.root_system().label().into(),
        parabolic: p.to_string(),
        tuple: ws.iter().map(|&w| g.label(w)).collect(),
        applicable: true,
        note: None,
        d: None,
        checks: Vec::new(),
    };
    let data = format!(
        "Q={q} Q̂={qhat} ŵ=({})",
        reps.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(",")
    );
    let codims: Vec<usize> = what.iter().map(|&x| codim_any(&g, qhat, x)).collect();
    for (&x, (&m, &c)) in what.iter().zip(reps.iter().zip(&codims)) {
        // codimension is a function of the coset
        debug_assert_eq!(c, codim_any(&g, qhat, m));
        let _ = x;
        debug_assert_eq!(c, hring.codim(m));
    }
    let nonzero = !hring.mul_many(&reps)?.is_zero();
    rep.checks.push(HornCheck::new(CheckKind::Nonvanishing, Relation::Eq, i64::from(nonzero), 1, data.clone()));
    let dim_hat = hring.dim() as i64;
    let sum_hat: i64 = codims.iter().map(|&c| c as i64).sum();
    rep.checks.push(HornCheck::new(CheckKind::Dimension, Relation::Le, sum_hat, dim_hat, format!("{data} (sum codim ≤ dim)")));
    let applies_b = qhat.intersect(p) == *q;
    if applies_b {
        let dim_l = lring.dim() as i64;
        let sum_l: i64 = us.iter().map(|&u| lring.codim(u) as i64).sum();
        rep.checks.push(HornCheck::new(CheckKind::Dimension, Relation::Ge, dim_hat - sum_hat, dim_l - sum_l, format!("{data} (excess)")));
        let both = g.nilradical_mask(qhat) & g.nilradical_mask(p);
        let rhs: i64 = what.iter().map(|&x| set_len(both & !g.inversions(x)) as i64).sum();
        rep.checks.push(HornCheck::new(CheckKind::DimensionSets, Relation::Ge, set_len(both) as i64, rhs, data.clone()));
        for ((&x, &c), &u) in what.iter().zip(&codims).zip(us) {
            let lhs = c as i64 - lring.codim(u) as i64;
            let rhs = set_len(both & !g.inversions(x)) as i64;
            rep.checks.push(HornCheck::new(CheckKind::DimensionIdentity, Relation::Eq, lhs, rhs, format!("{data} ŵ={}", g.label(x))));
        }
    } else {
        rep.note = Some("Q̂ ∩ P ≠ Q: only the nonvanishing part applies".into());
    }
    Ok(rep)
}

/// Draws a random weakHorn datum for a w-tuple, or `None` if the chosen `Q_L` has
/// no nonzero u-tuple of the right length.
pub fn sample_datum<R: Rng>(rng: &mut R, ctx: &GroupContext, p: &Parabolic, levi: &LeviData, s: usize, cache: &mut HashMap<Parabolic, Vec<Vec<ElementId>>>) -> Result<Option<DimensionDatum>> {
    let r = ctx.rank();
    let q = Parabolic::from_levi(p.levi().iter().copied().filter(|_| rng.gen_bool(0.5)));
    let qhat = Parabolic::from_levi((0..r).filter(|&i| q.contains(i) || rng.gen_bool(0.5)));
    if !cache.contains_key(&q) {
        let lring = levi.ring(&q)?;
        cache.insert(q.clone(), nonzero_tuples(&lring, s)?);
    }
    let Some(us) = cache[&q].choose(rng) else {
        return Ok(None);
    };
    Ok(Some(DimensionDatum { q, qhat, us: us.clone() }))
}

/// Tuples of complementary total codimension with zero product that nevertheless
/// satisfy every (center) and (center′) inequality.
#[derive(Debug, Clone, Serialize)]
pub struct ConverseReport {
    pub group: String,
    pub parabolic: String,
    pub s: usize,
    pub tuples: usize,
    pub zero: usize,
    /// Zero-product tuples rejected by some inequality.
    pub detected: usize,
    /// Zero-product tuples passing every inequality.
    pub passing: Vec<Vec<String>>,
}

pub fn converse_experiment(ctx: &GroupContext, p: &Parabolic, s: usize) -> Result<ConverseReport> {
    use rayon::prelude::*;
    let h = HornEngine::new(ctx, p, s)?;
    let all = top_tuples(h.deformed().classical(), s, true)?;
    let zero: Vec<&Vec<ElementId>> = all.iter().filter(|(_, d)| *d == 0).map(|(t, _)| t).collect();
    let verdicts: Vec<Result<bool>> = zero.par_iter().map(|t| Ok(h.t2_checks(t)?.iter().all(|c| c.pass))).collect();
    let mut passing = Vec::new();
    let mut detected = 0;
    for (t, v) in zero.iter().zip(verdicts) {
        if v? {
            passing.push(t.iter().map(|&w| h.g().label(w)).collect());
        } else {
            detected += 1;
        }
    }
    Ok(ConverseReport {
        group: ctx.root_system().label().into(),
        parabolic: p.to_string(),
        s,
        tuples: all.len(),
        zero: zero.len(),
        detected,
        passing,
    })
}

/// Totals from [`sweep`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepSummary {
    pub group: String,
    pub parabolic: String,
    pub tuples: usize,
    pub t2_checks: usize,
    pub movable: usize,
    pub t2prime_checks: usize,
    pub dimension_data: usize,
    pub dimension_checks: usize,
    pub violations: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs every check over all `s`-tuples with nonzero point coefficient, plus
/// `samples` random dimension data per tuple.
pub fn sweep(ctx: &GroupContext, p: &Parabolic, s: usize, samples: usize, seed: u64) -> Result<SweepSummary> {
    use rand::SeedableRng;
    use rayon::prelude::*;
    let h = HornEngine::new(ctx, p, s)?;
    let tuples = top_tuples(h.deformed().classical(), s, false)?;
    let mut out = SweepSummary {
        group: ctx.root_system().label().into(),
        parabolic: p.to_string(),
        tuples: tuples.len(),
        ..Default::default()
    };
    let results: Vec<Result<(usize, usize, usize, Vec<String>)>> = tuples
        .par_iter()
        .map(|(t, _)| {
            let mut bad = Vec::new();
            let r = h.check_t2(t)?;
            if !r.passed() || !r.consistent() {
                bad.push(r.to_string());
            }
            let (mut movable, mut n2) = (0, 0);
            if h.deformed().is_l_movable(t)?.movable {
                movable = 1;
                let r2 = h.check_t2prime(t)?;
                n2 = r2.checks.len();
                if !r2.passed() || !r2.consistent() {
                    bad.push(r2.to_string());
                }
            }
            Ok((r.checks.len(), movable, n2, bad))
        })
        .collect();
    for r in results {
        let (n1, m, n2, bad) = r?;
        out.t2_checks += n1;
        out.movable += m;
        out.t2prime_checks += n2;
        out.violations.extend(bad);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut cache = HashMap::new();
    for (t, _) in &tuples {
        for _ in 0..samples {
            let Some(datum) = sample_datum(&mut rng, ctx, p, h.levi(), s, &mut cache)? else {
                continue;
            };
            let r = check_dimension(ctx, p, h.levi(), t, &datum)?;
            out.dimension_data += 1;
            out.dimension_checks += r.checks.len();
            if !r.passed() || !r.consistent() {
                out.violations.push(r.to_string());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn central_character_counts() {
        let ctx = GroupContext::parse("C3").unwrap();
        let g = ctx.weyl();
        let cc = central_characters(g, &ctx.maximal(2));
        assert_eq!(cc.len(), 2);
        assert_eq!(cc.iter().map(|c| c.roots.len()).sum::<usize>(), 7);
        let b3 = GroupContext::parse("B3").unwrap();
        assert_eq!(central_characters(b3.weyl(), &b3.maximal(1)).len(), 1);
        let c3p3 = central_characters(g, &ctx.maximal(3));
        assert_eq!(c3p3.len(), 1);
        // Σ_c χ_1^c = χ_1
        for p in Parabolic::all(3) {
            let d = ctx.deformed(&p).unwrap();
            let e = g.identity();
            let mut acc = vec![0i64; 3];
            for c in central_characters(g, &p) {
                for (a, x) in acc.iter_mut().zip(chi_c(g, e, &c)) {
                    *a += x;
                }
            }
            assert_eq!(acc, d.chi(e).unwrap());
            for &w in d.classical().reps() {
                let mut acc = vec![0i64; 3];
                for c in central_characters(g, &p) {
                    for (a, x) in acc.iter_mut().zip(chi_c(g, w, &c)) {
                        *a += x;
                    }
                }
                assert_eq!(acc, d.chi(w).unwrap());
            }
        }
    }

    #[test]
    fn dual_pairs_center_equality() {
        let ctx = GroupContext::parse("B3").unwrap();
        let p = ctx.maximal(2);
        let h = HornEngine::new(&ctx, &p, 2).unwrap();
        let r = h.deformed().classical().clone();
        for &w in r.reps() {
            let pair = [w, r.star(w)];
            let rep = h.check_t2(&pair).unwrap();
            assert!(rep.passed() && rep.consistent());
            for c in rep.checks.iter().filter(|c| c.kind == CheckKind::Center) {
                assert_eq!(c.lhs, c.rhs);
            }
            let rp = h.check_t2prime(&pair).unwrap();
            assert!(rp.passed());
            assert!(rp.count(CheckKind::T2PrimeEquality) > 0);
        }
    }

    #[test]
    fn inapplicable_and_rejected() {
        let ctx = GroupContext::parse("B3").unwrap();
        let p = ctx.maximal(2);
        let h = HornEngine::new(&ctx, &p, 3).unwrap();
        let r = h.deformed().classical().clone();
        let zero = top_tuples(&r, 3, true).unwrap().into_iter().find(|(_, d)| *d == 0).unwrap();
        let rep = h.check_t2(&zero.0).unwrap();
        assert!(!rep.applicable);
        assert!(matches!(h.check_t2(&[r.unit(), r.unit(), r.unit()]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(h.check_t2prime(&zero.0), Err(Error::NotLMovable(_))));
    }

    #[test]
    fn t2_and_refinement_b3_p2() {
        let ctx = GroupContext::parse("B3").unwrap();
        let p = ctx.maximal(2);
        let h = HornEngine::new(&ctx, &p, 3).unwrap();
        let r = h.deformed().classical().clone();
        let mut movable = 0;
        for (t, _) in top_tuples(&r, 3, false).unwrap() {
            let rep = h.check_t2(&t).unwrap();
            assert!(rep.passed(), "{rep}");
            if h.deformed().is_l_movable(&t).unwrap().movable {
                movable += 1;
                assert!(h.check_t2prime(&t).unwrap().passed());
                for (a, b) in h.refined_sums(&t) {
                    assert_eq!(a, b);
                }
            }
        }
        assert!(movable > 0);
    }

    #[test]
    fn converse_b3_p2_detects_zero_products() {
        let ctx = GroupContext::parse("B3").unwrap();
        let r = converse_experiment(&ctx, &ctx.maximal(2), 3).unwrap();
        assert_eq!(r.zero, r.detected + r.passing.len());
        assert!(r.detected > 0);
    }

    #[test]
    fn codim_formula_matches_count() {
        for ct in CartanType::rank_at_most_3() {
            let ctx = GroupContext::new(ct).unwrap();
            let g = ctx.weyl();
            assert_eq!(codim_any(g, &Parabolic::borel(), g.longest()), 0);
            assert_eq!(codim_any(g, &Parabolic::borel(), g.identity()), ctx.root_system().num_positive());
            for q in Parabolic::all(ctx.rank()) {
                let ring = ctx.ring(&q).unwrap();
                for w in 0..g.order() {
                    assert_eq!(codim_any(g, &q, w), ring.codim(g.min_coset_rep(w, &q)));
                }
            }
        }
    }

    #[test]
    fn weak_horn_a2_borel_all_qhat() {
        let ctx = GroupContext::parse("A2").unwrap();
        let p = Parabolic::borel();
        let levi = LeviData::new(&ctx, &p).unwrap();
        let r = ctx.ring(&p).unwrap();
        for (t, _) in top_tuples(&r, 3, false).unwrap() {
            for qhat in Parabolic::all(2) {
                let datum = DimensionDatum { q: Parabolic::borel(), qhat, us: vec![0; 3] };
                let rep = check_dimension(&ctx, &p, &levi, &t, &datum).unwrap();
                assert!(rep.passed(), "{rep}");
            }
        }
    }
}
