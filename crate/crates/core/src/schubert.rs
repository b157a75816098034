//! Schubert calculus on `G/B` and `G/P` via BGG divided differences.
//!
//! `P_{w_o} = ∏_{β>0} β / |W|` and `P_{ws_i} = ∂_i P_w` for `ws_i < w`. The
//! structure constant `c^w_{u,v}` of `ε_u ε_v` is the constant `∂_w(P_u P_v)`.
//! Everything is computed with integer numerators `Q_w = |W|·P_w`.
//!
//! [`ParabolicRing`] exposes the ring `H*(G/P)` in the basis of Schubert
//! classes `[Λ̄_w]` (`w ∈ W^P`), where `Λ_w = w⁻¹BwP` has dimension `ℓ(w)` and
//! `[Λ̄_w] = ε^P_{w_o w w_o^P}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{monomial_count, Poly, MAX_VARS};
use crate::rootsys::{Parabolic, RootSystem};
use crate::weyl::{ElementId, WeylGroup};

pub const DEFAULT_MONOMIAL_CAP: u128 = 200_000;

/// A sparse integer combination of Schubert classes keyed by element id.
pub type Terms = Vec<(ElementId, i64)>;

#[derive(Debug)]
pub struct SchubertCalculus {
    weyl: Arc<WeylGroup>,
    order: i128,
    cartan: Vec<Vec<i64>>,
    polys: Vec<OnceLock<Arc<Poly>>>,
}

impl SchubertCalculus {
    pub fn new(weyl: Arc<WeylGroup>) -> Result<Self> {
        Self::with_cap(weyl, DEFAULT_MONOMIAL_CAP)
    }

    /// Refuses when the top-degree polynomial space has more than `cap` monomials.
    pub fn with_cap(weyl: Arc<WeylGroup>, cap: u128) -> Result<Self> {
        let rs = weyl.root_system().clone();
        if rs.rank() > MAX_VARS {
            return Err(Error::BudgetExceeded { what: "rank", needed: rs.rank() as u128, cap: MAX_VARS as u128 });
        }
        let needed = monomial_count(rs.rank(), rs.num_positive());
        if needed > cap {
            return Err(Error::BudgetExceeded { what: "top-degree monomial space", needed, cap });
        }
        let n = weyl.order();
        Ok(SchubertCalculus {
            order: n as i128,
            cartan: rs.cartan_matrix().to_vec(),
            polys: (0..n).map(|_| OnceLock::new()).collect(),
            weyl,
        })
    }

    pub fn weyl(&self) -> &Arc<WeylGroup> {
        &self.weyl
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.weyl.root_system()
    }

    /// `|W|`, the common denominator of the `P_w`.
    pub fn denominator(&self) -> i128 {
        self.order
    }

    /// `Q_w = |W|·P_w`.
    pub fn numerator(&self, w: ElementId) -> Result<Arc<Poly>> {
        if let Some(p) = self.polys[w].get() {
            return Ok(p.clone());
        }
        let g = &self.weyl;
        let poly = if w == g.longest() {
            let mut acc = Poly::one();
            for beta in self.root_system().positive_roots() {
                acc = acc.mul(&Poly::linear(beta))?;
            }
            acc
        } else {
            let i = (0..self.cartan.len())
                .find(|&i| g.length(g.mul_simple_right(w, i)) > g.length(w))
                .expect("only w_o has no ascent");
            self.numerator(g.mul_simple_right(w, i))?
                .divided_difference(i, &self.cartan[i])?
        };
        let _ = self.polys[w].set(Arc::new(poly));
        Ok(self.polys[w].get().unwrap().clone())
    }

    /// `ε_u ε_v` in `H*(G/B)`, restricted to targets accepted by `keep`.
    ///
    /// `keep` must be closed under removing a left letter (`s_i x ↦ x`), which
    /// holds for `W^P` since `Φ_x ⊂ Φ_{s_i x}` there.
    pub fn product(&self, u: ElementId, v: ElementId, keep: &dyn Fn(ElementId) -> bool) -> Result<Terms> {
        let g = &self.weyl;
        let d = g.length(u) + g.length(v);
        if d > self.root_system().num_positive() {
            return Ok(Vec::new());
        }
        let f = self.numerator(u)?.mul(&*self.numerator(v)?)?;
        // ∂_{s_i x} = ∂_i ∂_x along a tree of left multiplications.
        let mut level: Vec<(ElementId, Poly)> = vec![(g.identity(), f)];
        for _ in 0..d {
            let mut next: BTreeMap<ElementId, Poly> = BTreeMap::new();
            for (x, p) in &level {
                for i in 0..self.cartan.len() {
                    let y = g.mul_simple_left(i, *x);
                    if g.length(y) < g.length(*x) || next.contains_key(&y) || !keep(y) {
                        continue;
                    }
                    next.insert(y, p.divided_difference(i, &self.cartan[i])?);
                }
            }
            level = next.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        }
        let denom = self.order * self.order;
        let mut out = Vec::new();
        for (w, p) in level {
            let c = p.constant_term();
            if c % denom != 0 {
                return Err(Error::Mismatch(format!("non-integral structure constant {c}/{denom}")));
            }
            out.push((w, i64::try_from(c / denom).map_err(|_| Error::Mismatch("constant too large".into()))?));
        }
        Ok(out)
    }

    pub fn product_full(&self, u: ElementId, v: ElementId) -> Result<Terms> {
        self.product(u, v, &|_| true)
    }
}

/// Chevalley's formula on `G/B`:
/// `ε_{s_i} ε_w = Σ ⟨ω_i, β^∨⟩ ε_{w s_β}` over `β > 0` with `ℓ(w s_β) = ℓ(w) + 1`.
pub fn chevalley_oracle(weyl: &WeylGroup, i: usize, w: ElementId) -> Terms {
    let rs = weyl.root_system();
    let r = rs.rank();
    let mut out = Vec::new();
    for beta in rs.positive_roots() {
        let bb = rs.inner_int(beta, beta);
        let mut m = vec![0i64; r * r];
        for j in 0..r {
            let mut aj = vec![0i64; r];
            aj[j] = 1;
            let coef = 2 * rs.inner_int(&aj, beta) / bb;
            for row in 0..r {
                m[row * r + j] = aj[row] - coef * beta[row];
            }
        }
        let sb = weyl.by_matrix(&m).expect("reflection is a Weyl element");
        let ws = weyl.mul(w, sb);
        if weyl.length(ws) == weyl.length(w) + 1 {
            let mult = beta[i] * rs.gram()[i][i] / bb;
            if mult != 0 {
                out.push((ws, mult));
            }
        }
    }
    out.sort();
    out
}

/// A cohomology class of `G/P` in the `[Λ̄_w]` basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CohomClass {
    pub terms: BTreeMap<ElementId, i64>,
}

impl CohomClass {
    pub fn schubert(w: ElementId) -> Self {
        CohomClass { terms: BTreeMap::from([(w, 1)]) }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ElementId, i64)>) -> Self {
        let mut c = CohomClass::default();
        for (w, x) in terms {
            c.add_term(w, x);
        }
        c
    }

    pub fn add_term(&mut self, w: ElementId, x: i64) {
        if x == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += x;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: ElementId) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }
}

#[derive(Debug)]
pub struct ParabolicRing {
    calc: Arc<SchubertCalculus>,
    parabolic: Parabolic,
    reps: Vec<ElementId>,
    dim: usize,
    star: HashMap<ElementId, ElementId>,
    cache: Mutex<HashMap<(ElementId, ElementId), Arc<Terms>>>,
}

impl ParabolicRing {
    pub fn new(calc: Arc<SchubertCalculus>, parabolic: Parabolic) -> Result<Self> {
        let g = calc.weyl().clone();
        parabolic.validate(g.root_system().rank())?;
        let reps = g.minimal_reps(&parabolic);
        let dim = g.root_system().dim_flag(&parabolic);
        let star = reps.iter().map(|&w| (w, g.involution(w, &parabolic))).collect();
        Ok(ParabolicRing { calc, parabolic, reps, dim, star, cache: Mutex::new(HashMap::new()) })
    }

    pub fn calculus(&self) -> &Arc<SchubertCalculus> {
        &self.calc
    }

    pub fn weyl(&self) -> &Arc<WeylGroup> {
        self.calc.weyl()
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.calc.root_system()
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    /// `dim G/P`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `W^P`, ordered by length.
    pub fn reps(&self) -> &[ElementId] {
        &self.reps
    }

    pub fn is_rep(&self, w: ElementId) -> bool {
        self.star.contains_key(&w)
    }

    pub fn check_rep(&self, w: ElementId) -> Result<()> {
        if self.is_rep(w) {
            Ok(())
        } else {
            Err(Error::NotMinimalRep {
                word: self.weyl().element(w).word().iter().map(|i| i + 1).collect(),
                levi: self.parabolic.levi().iter().map(|i| i + 1).collect(),
            })
        }
    }

    /// Codimension of `Λ̄_w`, i.e. the degree of `[Λ̄_w]`.
    pub fn codim(&self, w: ElementId) -> usize {
        self.dim - self.weyl().length(w)
    }

    /// `w ↦ w_o w w_o^P`; `[Λ̄_w] = ε^P_{w*}` and `[Λ̄_{w*}]` is Poincaré dual to `[Λ̄_w]`.
    pub fn star(&self, w: ElementId) -> ElementId {
        self.star[&w]
    }

    /// `[Λ̄_e]`, the class of a point.
    pub fn point(&self) -> ElementId {
        self.weyl().identity()
    }

    /// `[Λ̄_{w_o w_o^P}] = 1`.
    pub fn unit(&self) -> ElementId {
        *self.reps.last().unwrap()
    }

    /// Representatives by codimension.
    pub fn by_codim(&self) -> Vec<Vec<ElementId>> {
        let mut out = vec![Vec::new(); self.dim + 1];
        for &w in &self.reps {
            out[self.codim(w)].push(w);
        }
        out
    }

    /// `[Λ̄_u]·[Λ̄_v]` in the `[Λ̄_w]` basis; memoized.
    pub fn product(&self, u: ElementId, v: ElementId) -> Result<Arc<Terms>> {
        self.check_rep(u)?;
        self.check_rep(v)?;
        let key = if u <= v { (u, v) } else { (v, u) };
        if let Some(t) = self.cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let g = self.weyl();
        let p = &self.parabolic;
        let eps = self.calc.product(self.star(key.0), self.star(key.1), &|x| g.is_minimal(x, p))?;
        let mut terms: Terms = eps.into_iter().map(|(w, c)| (self.star(w), c)).collect();
        terms.sort();
        let terms = Arc::new(terms);
        self.cache.lock().unwrap().insert(key, terms.clone());
        Ok(terms)
    }

    /// Every product `u·v` with `u ≤ v` and complementary-or-less codimension, sorted.
    pub fn table(&self) -> Result<Vec<(ElementId, ElementId, Arc<Terms>)>> {
        let mut out = Vec::new();
        for (a, &u) in self.reps.iter().enumerate() {
            for &v in &self.reps[a..] {
                if self.codim(u) + self.codim(v) <= self.dim {
                    let (x, y) = if u <= v { (u, v) } else { (v, u) };
                    out.push((x, y, self.product(x, y)?));
                }
            }
        }
        out.sort_by_key(|e| (e.0, e.1));
        Ok(out)
    }

    /// Seeds the product memo, e.g. from a persistent cache.
    pub fn preload(&self, entries: impl IntoIterator<Item = (ElementId, ElementId, Terms)>) -> Result<()> {
        let mut memo = self.cache.lock().unwrap();
        for (u, v, t) in entries {
            self.check_rep(u)?;
            self.check_rep(v)?;
            for &(w, _) in &t {
                self.check_rep(w)?;
            }
            let key = if u <= v { (u, v) } else { (v, u) };
            memo.insert(key, Arc::new(t));
        }
        Ok(())
    }

    /// Number of memoized products.
    pub fn memo_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    /// Structure constant `c^w_{u,v}` in the `[Λ̄]` basis.
    pub fn constant(&self, u: ElementId, v: ElementId, w: ElementId) -> Result<i64> {
        Ok(self.product(u, v)?.iter().find(|t| t.0 == w).map_or(0, |t| t.1))
    }

    pub fn mul(&self, a: &CohomClass, b: &CohomClass) -> Result<CohomClass> {
        let mut out = CohomClass::default();
        for (&u, &x) in &a.terms {
            for (&v, &y) in &b.terms {
                for &(w, c) in self.product(u, v)?.iter() {
                    out.add_term(w, x * y * c);
                }
            }
        }
        Ok(out)
    }

    /// `[Λ̄_{w_1}]⋯[Λ̄_{w_s}]`.
    pub fn mul_many(&self, ws: &[ElementId]) -> Result<CohomClass> {
        let mut acc = CohomClass::schubert(self.unit());
        for &w in ws {
            acc = self.mul(&acc, &CohomClass::schubert(w))?;
        }
        Ok(acc)
    }

    /// Label `s_{i_1}⋯s_{i_k}` of a reduced word.
    pub fn label(&self, w: ElementId) -> String {
        self.weyl().label(w)
    }
}
