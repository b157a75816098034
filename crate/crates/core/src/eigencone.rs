//! Inequality systems for the eigencone `Γ(s, K)`: generation from Schubert
//! products equal to the point class, membership, and redundancy pruning.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_q, parse_q, qi, Q};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::horn::top_tuples;
use crate::polyhedral;
use crate::rootsys::{CartanType, Coweight, RootSystem};
use crate::weyl::{word_label, ElementId, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Cup product coefficient exactly 1.
    Classical,
    /// `⊙₀` coefficient exactly 1.
    Deformed,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classical" | "b" => Ok(Mode::Classical),
            "deformed" | "b'" | "bprime" => Ok(Mode::Deformed),
            _ => Err(Error::Parse(format!("unknown mode {s:?} (classical|deformed)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Classical => "classical",
            Mode::Deformed => "deformed",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Inequality {
    /// One-based index of the maximal parabolic.
    pub parabolic: usize,
    pub tuple: Vec<ElementId>,
    pub words: Vec<String>,
    /// Classical point coefficient of the tuple.
    pub d: i64,
    /// `coeffs[j][i]` multiplies the `i`-th fundamental-coweight coordinate of `h_j`.
    pub coeffs: Vec<Vec<Q>>,
}

impl Inequality {
    pub fn new(g: &WeylGroup, parabolic: usize, tuple: Vec<ElementId>, d: i64) -> Self {
        let coeffs = functional(g, parabolic, &tuple);
        let words = tuple.iter().map(|&w| word_label(g.element(w).word())).collect();
        Inequality { parabolic, tuple, words, d, coeffs }
    }

    /// `ω_P(Σ w_j⁻¹ h_j)` for `h_j` in fundamental-coweight coordinates.
    pub fn value(&self, hs: &[Vec<Q>]) -> Q {
        self.coeffs
            .iter()
            .zip(hs)
            .fold(Q::zero(), |acc, (c, h)| acc + crate::arith::dot(c, h))
    }

    pub fn flat(&self) -> Vec<Q> {
        self.coeffs.concat()
    }
}

/// `ω_P(w⁻¹h) = (wω_P)(h)`: the simple-root coordinates of `w_j ω_P`, one block per `j`.
pub fn functional(g: &WeylGroup, parabolic: usize, tuple: &[ElementId]) -> Vec<Vec<Q>> {
    let rs = g.root_system();
    let omega = rs.fundamental_weight(parabolic - 1);
    tuple.iter().map(|&w| g.act_weight(w, &omega).root_coords(rs)).collect()
}

/// All `s`-tuples in `(W^P)^s` of total length `(s−1)·dim G/P` whose product is
/// `d·[pt]` with `d = 1` (or `d ≠ 0` when `relaxed`), in the given mode.
pub fn enumerate_tuples(ctx: &GroupContext, parabolic: usize, s: usize, mode: Mode, relaxed: bool) -> Result<Vec<(Vec<ElementId>, i64)>> {
    if s < 2 {
        return Err(Error::Precondition("need s ≥ 2".into()));
    }
    if parabolic == 0 || parabolic > ctx.rank() {
        return Err(Error::InvalidParabolic(format!("maximal parabolic index {parabolic} out of range")));
    }
    let d = ctx.deformed(&ctx.maximal(parabolic))?;
    let mut out = Vec::new();
    for (t, c) in top_tuples(d.classical(), s, false)? {
        if !relaxed && c != 1 {
            continue;
        }
        if mode == Mode::Deformed && !d.is_l_movable(&t)?.movable {
            continue;
        }
        out.push((t, c));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct InequalitySystem {
    pub group: CartanType,
    pub s: usize,
    pub mode: Mode,
    pub relaxed: bool,
    pub inequalities: Vec<Inequality>,
    /// Filled in by [`InequalitySystem::prune`].
    pub redundant: Option<Vec<bool>>,
    /// Redundancy of the chamber inequalities `α_i(h_j) ≥ 0`, indexed `j·rank + i`.
    pub chamber_redundant: Option<Vec<bool>>,
}

/// Membership verdict with exact values of violated inequalities.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub member: bool,
    pub violated: Vec<(usize, Q)>,
}

impl InequalitySystem {
    /// Union over all standard maximal parabolics.
    pub fn generate(ctx: &GroupContext, s: usize, mode: Mode, relaxed: bool) -> Result<Self> {
        let group = ctx
            .root_system()
            .cartan_type()
            .ok_or_else(|| Error::Precondition("eigencone systems need a simple type".into()))?;
        let mut inequalities = Vec::new();
        for i in 1..=ctx.rank() {
            for (t, d) in enumerate_tuples(ctx, i, s, mode, relaxed)? {
                inequalities.push(Inequality::new(ctx.weyl(), i, t, d));
            }
        }
        Ok(InequalitySystem { group, s, mode, relaxed, inequalities, redundant: None, chamber_redundant: None })
    }

    pub fn rank(&self) -> usize {
        self.group.rank
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    /// Number of chamber inequalities, `s·rank`.
    pub fn chamber_len(&self) -> usize {
        self.s * self.rank()
    }

    /// Schubert-generated plus chamber inequalities.
    pub fn total_len(&self) -> usize {
        self.len() + self.chamber_len()
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.inequalities.iter().map(Inequality::flat).collect()
    }

    /// Marks inequalities implied by the rest together with dominance.
    pub fn prune(&mut self) -> Result<&[bool]> {
        let n = self.s * self.rank();
        if n > 12 {
            return Err(Error::BudgetExceeded { what: "polyhedral dimension", needed: n as u128, cap: 12 });
        }
        let rows = self.rows();
        self.redundant = Some(polyhedral::redundant(&rows));
        self.chamber_redundant = Some(polyhedral::redundant_signs(&rows, n));
        Ok(self.redundant.as_deref().unwrap())
    }

    /// Redundant Schubert-generated inequalities.
    pub fn redundant_count(&self) -> Option<usize> {
        self.redundant.as_ref().map(|r| r.iter().filter(|&&b| b).count())
    }

    /// Redundant inequalities among all `total_len()`, chamber included.
    pub fn total_redundant(&self) -> Option<usize> {
        let c = self.chamber_redundant.as_ref()?.iter().filter(|&&b| b).count();
        Some(self.redundant_count()? + c)
    }

    /// Inequalities not marked redundant (all, before pruning).
    pub fn irredundant_rows(&self) -> Vec<Vec<Q>> {
        let rows = self.rows();
        match &self.redundant {
            Some(r) => rows.into_iter().zip(r).filter(|(_, &b)| !b).map(|(x, _)| x).collect(),
            None => rows,
        }
    }

    /// Whether every inequality of `other` follows from this system and dominance.
    pub fn implies(&self, other: &InequalitySystem) -> bool {
        polyhedral::system_implies(&self.rows(), &other.rows())
    }

    /// Membership of `(h_1..h_s)`, given in fundamental-coweight coordinates.
    pub fn evaluate(&self, hs: &[Vec<Q>]) -> Result<Verdict> {
        if hs.len() != self.s || hs.iter().any(|h| h.len() != self.rank()) {
            return Err(Error::Precondition(format!("expected {} coweights of rank {}", self.s, self.rank())));
        }
        if let Some((j, i)) = hs.iter().enumerate().find_map(|(j, h)| h.iter().position(Signed::is_negative).map(|i| (j, i))) {
            return Err(Error::NonDominant(format!("h{} has α{}(h) < 0", j + 1, i + 1)));
        }
        let violated: Vec<(usize, Q)> = self
            .inequalities
            .iter()
            .enumerate()
            .map(|(k, q)| (k, q.value(hs)))
            .filter(|(_, v)| v.is_positive())
            .collect();
        Ok(Verdict { member: violated.is_empty(), violated })
    }

    /// Membership for coweights given in simple-coroot coordinates.
    pub fn evaluate_coweights(&self, rs: &RootSystem, hs: &[Coweight]) -> Result<Verdict> {
        let f: Vec<Vec<Q>> = hs.iter().map(|h| h.fundamental_coords(rs)).collect();
        self.evaluate(&f)
    }

    pub fn to_json(&self) -> SystemJson {
        SystemJson {
            format: SYSTEM_FORMAT,
            group: self.group.to_string(),
            s: self.s,
            mode: self.mode,
            relaxed: self.relaxed,
            chamber_redundant: self.chamber_redundant.clone(),
            inequalities: self
                .inequalities
                .iter()
                .enumerate()
                .map(|(k, q)| InequalityJson {
                    parabolic: q.parabolic,
                    words: q.words.clone(),
                    d: q.d,
                    coeffs: q.coeffs.iter().map(|c| c.iter().map(fmt_q).collect()).collect(),
                    redundant: self.redundant.as_ref().map(|r| r[k]),
                })
                .collect(),
        }
    }

    /// Rebuilds a system from JSON, recomputing functionals from the words and
    /// rejecting any stored coefficient that disagrees.
    pub fn from_json(ctx: &GroupContext, j: &SystemJson) -> Result<Self> {
        if j.format != SYSTEM_FORMAT {
            return Err(Error::Parse(format!("unsupported system format {}", j.format)));
        }
        let group: CartanType = j.group.parse()?;
        if ctx.root_system().cartan_type() != Some(group) {
            return Err(Error::Precondition(format!("system is for {group}")));
        }
        let g = ctx.weyl();
        let mut inequalities = Vec::new();
        for (k, q) in j.inequalities.iter().enumerate() {
            let tuple = q
                .words
                .iter()
                .map(|w| parse_word(w).and_then(|word| g.from_word(&word)))
                .collect::<Result<Vec<_>>>()?;
            let ineq = Inequality::new(g, q.parabolic, tuple, q.d);
            let stored = q.coeffs.iter().map(|c| c.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            if stored != ineq.coeffs {
                return Err(Error::Mismatch(format!("inequality {k}: stored coefficients disagree with its words")));
            }
            inequalities.push(ineq);
        }
        let redundant = if j.inequalities.iter().all(|q| q.redundant.is_some()) && !j.inequalities.is_empty() {
            Some(j.inequalities.iter().map(|q| q.redundant.unwrap()).collect())
        } else {
            None
        };
        Ok(InequalitySystem {
            group,
            s: j.s,
            mode: j.mode,
            relaxed: j.relaxed,
            inequalities,
            redundant,
            chamber_redundant: j.chamber_redundant.clone(),
        })
    }
}

pub const SYSTEM_FORMAT: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemJson {
    pub format: u32,
    pub group: String,
    pub s: usize,
    pub mode: Mode,
    pub relaxed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chamber_redundant: Option<Vec<bool>>,
    pub inequalities: Vec<InequalityJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityJson {
    pub parabolic: usize,
    pub words: Vec<String>,
    pub d: i64,
    pub coeffs: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub redundant: Option<bool>,
}

/// Parses `e`, `s1s2s3` or `1 2 3` (one-based) into a zero-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("bad word {s:?}"));
    let parts: Vec<&str> = if s.contains('s') {
        s.split('s').filter(|p| !p.is_empty()).collect()
    } else {
        s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.trim().parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1).ok_or_else(bad))
        .collect()
}

/// `−w_o h` in fundamental-coweight coordinates.
pub fn dual_coweight(ctx: &GroupContext, h: &[Q]) -> Vec<Q> {
    let rs = ctx.root_system();
    let g = ctx.weyl();
    let hw = Coweight::from_fundamental(rs, h);
    let mut x = g.act_coweight(g.longest(), &hw);
    for c in x.coords.iter_mut() {
        *c = -&*c;
    }
    x.fundamental_coords(rs)
}

/// A point `(ρ∨, ε ρ∨, ε ρ∨, …)` outside the cone, built from an inequality with
/// `w_1 = e`: its value is `ω_P(ρ∨) + ε·(…)`, so a small enough `ε > 0` violates it.
pub fn violation_by_construction(sys: &InequalitySystem) -> Option<(usize, Vec<Vec<Q>>)> {
    let r = sys.rank();
    let one = vec![qi(1); r];
    for (k, q) in sys.inequalities.iter().enumerate() {
        if q.tuple[0] != 0 {
            continue;
        }
        let lead: Q = q.coeffs[0].iter().sum();
        if !lead.is_positive() {
            continue;
        }
        let rest: Q = q.coeffs[1..].iter().flatten().map(|c| c.abs()).sum();
        let eps = if rest.is_zero() { qi(1) } else { &lead / (rest * qi(2)) };
        let mut hs = vec![one.clone()];
        hs.extend((1..sys.s).map(|_| one.iter().map(|c| c * &eps).collect()));
        return Some((k, hs));
    }
    None
}
