//! Root systems of simple Lie algebras with exact weight and coweight arithmetic.
//!
//! Roots are stored as integer vectors in the simple-root basis. The invariant
//! form is normalized so that short roots have squared length 2. Simple roots
//! are numbered as in Bourbaki, zero-based internally (`α_1` is index 0).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{invert, qi, to_q_vec, Q};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::InadmissibleType(format!("unknown family {other:?}"))),
        })
    }
}

/// A simple Cartan type such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InadmissibleType(format!(
                "{family}{rank}: rank not admissible for family {family}"
            )))
        }
    }

    /// Every simple type of rank at most 3 (up to the coincidences B2=C2, A3=D3,
    /// with C2 kept so both labelings are exercised).
    pub fn rank_at_most_3() -> Vec<CartanType> {
        use Family::*;
        [(A, 1), (A, 2), (B, 2), (C, 2), (G, 2), (A, 3), (B, 3), (C, 3)]
            .into_iter()
            .map(|(f, r)| CartanType::new(f, r).unwrap())
            .collect()
    }

    /// Gram matrix of the simple roots, short roots of squared length 2.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 2 } else { 4 };
                }
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 4 } else { 2 };
                }
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
                }
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Family::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                for (i, d) in [4, 4, 2, 2].into_iter().enumerate() {
                    g[i][i] = d;
                }
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rank) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::InadmissibleType(format!("cannot parse {s:?}")))?;
        CartanType::new(fam.parse()?, rank)
    }
}

/// A standard parabolic, recorded by the simple roots inside its Levi (`Δ(P)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Parabolic {
    levi: Vec<usize>,
}

impl Parabolic {
    pub fn from_levi(levi: impl IntoIterator<Item = usize>) -> Self {
        let mut levi: Vec<usize> = levi.into_iter().collect();
        levi.sort_unstable();
        levi.dedup();
        Parabolic { levi }
    }

    pub fn borel() -> Self {
        Parabolic { levi: Vec::new() }
    }

    pub fn full(rank: usize) -> Self {
        Parabolic { levi: (0..rank).collect() }
    }

    /// The maximal parabolic `P_i` omitting the simple root with zero-based index `i`.
    pub fn maximal(rank: usize, i: usize) -> Self {
        Parabolic { levi: (0..rank).filter(|&j| j != i).collect() }
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn contains(&self, i: usize) -> bool {
        self.levi.binary_search(&i).is_ok()
    }

    /// Simple roots outside the Levi, `Δ∖Δ(P)`.
    pub fn complement(&self, rank: usize) -> Vec<usize> {
        (0..rank).filter(|&i| !self.contains(i)).collect()
    }

    pub fn is_maximal(&self, rank: usize) -> bool {
        self.complement(rank).len() == 1
    }

    pub fn is_subset_of(&self, other: &Parabolic) -> bool {
        self.levi.iter().all(|&i| other.contains(i))
    }

    pub fn intersect(&self, other: &Parabolic) -> Parabolic {
        Parabolic::from_levi(self.levi.iter().copied().filter(|&i| other.contains(i)))
    }

    /// All standard parabolics of a rank-`rank` system, ordered by Levi bitmask.
    pub fn all(rank: usize) -> Vec<Parabolic> {
        (0u32..(1 << rank))
            .map(|mask| Parabolic::from_levi((0..rank).filter(|&i| mask & (1 << i) != 0)))
            .collect()
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        match self.levi.iter().find(|&&i| i >= rank) {
            Some(i) => Err(Error::InvalidParabolic(format!(
                "simple root index {} out of range for rank {rank}",
                i + 1
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.levi.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Which basis a [`Weight`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightBasis {
    SimpleRoot,
    Fundamental,
}

/// An element of `𝔥*` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub basis: WeightBasis,
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn roots(coords: Vec<Q>) -> Self {
        Weight { basis: WeightBasis::SimpleRoot, coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::roots(vec![Q::zero(); rank])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Re-expresses the weight in the requested basis.
    pub fn in_basis(&self, rs: &RootSystem, basis: WeightBasis) -> Weight {
        if basis == self.basis {
            return self.clone();
        }
        match basis {
            WeightBasis::Fundamental => Weight {
                basis,
                coords: (0..rs.rank()).map(|i| rs.coroot_pairing(&self.coords, i)).collect(),
            },
            WeightBasis::SimpleRoot => {
                let mut out = vec![Q::zero(); rs.rank()];
                for (m, w) in self.coords.iter().zip(&rs.fund_weights) {
                    for (o, x) in out.iter_mut().zip(w) {
                        *o += m * x;
                    }
                }
                Weight::roots(out)
            }
        }
    }

    pub fn root_coords(&self, rs: &RootSystem) -> Vec<Q> {
        self.in_basis(rs, WeightBasis::SimpleRoot).coords
    }

    /// `λ(h)` for a coweight `h`.
    pub fn pair(&self, rs: &RootSystem, h: &Coweight) -> Q {
        rs.pair(&self.root_coords(rs), &h.coords)
    }

    /// `λ(x_i)`: the `i`-th simple-root coordinate.
    pub fn at_fundamental_coweight(&self, rs: &RootSystem, i: usize) -> Q {
        self.root_coords(rs)[i].clone()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight { basis: self.basis, coords: self.coords.iter().map(|x| x * c).collect() }
    }
}

fn zip_same_basis(a: &Weight, b: &Weight, f: impl Fn(&Q, &Q) -> Q) -> Weight {
    assert_eq!(a.basis, b.basis, "weights in different bases");
    Weight { basis: a.basis, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| f(x, y)).collect() }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        zip_same_basis(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        zip_same_basis(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { basis: self.basis, coords: self.coords.iter().map(|x| -x).collect() }
    }
}

/// An element of `𝔥` in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coweight {
    pub coords: Vec<Q>,
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight { coords: vec![Q::zero(); rank] }
    }

    /// `Σ c_i x_i` from coordinates in the fundamental-coweight basis.
    pub fn from_fundamental(rs: &RootSystem, coords: &[Q]) -> Self {
        let mut out = vec![Q::zero(); rs.rank()];
        for (c, x) in coords.iter().zip(&rs.fund_coweights) {
            for (o, xi) in out.iter_mut().zip(x) {
                *o += c * xi;
            }
        }
        Coweight { coords: out }
    }

    /// Coordinates `α_i(h)` in the fundamental-coweight basis.
    pub fn fundamental_coords(&self, rs: &RootSystem) -> Vec<Q> {
        (0..rs.rank())
            .map(|i| {
                let mut e = vec![Q::zero(); rs.rank()];
                e[i] = qi(1);
                rs.pair(&e, &self.coords)
            })
            .collect()
    }

    pub fn is_dominant(&self, rs: &RootSystem) -> bool {
        self.fundamental_coords(rs).iter().all(|x| !x.is_negative())
    }
}

/// Cartan data in a serializable form, for debugging output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanData {
    pub label: String,
    pub family: Option<Family>,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub gram_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    cartan_type: Option<CartanType>,
    gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    fund_weights: Vec<Vec<Q>>,
    fund_coweights: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(ct: CartanType) -> Self {
        let mut rs = RootSystem::from_gram(ct.to_string(), ct.gram());
        rs.cartan_type = Some(ct);
        rs
    }

    /// Builds the root system of a (possibly reducible, possibly empty) Gram matrix
    /// by reflection closure of the simple roots.
    pub fn from_gram(label: String, gram: Vec<Vec<i64>>) -> Self {
        let n = gram.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(2 * gram[i][j] % gram[i][i], 0, "non-crystallographic Gram matrix");
            }
        }

        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut found: Vec<Vec<i64>> = simple.clone();
        let mut seen: std::collections::HashSet<Vec<i64>> = simple.into_iter().collect();
        let mut head = 0;
        while head < found.len() {
            let beta = found[head].clone();
            head += 1;
            for i in 0..n {
                let c: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if c == 0 {
                    continue;
                }
                let mut gamma = beta.clone();
                gamma[i] -= c;
                if gamma.iter().all(|&x| x >= 0) && gamma.iter().any(|&x| x > 0) && seen.insert(gamma.clone()) {
                    found.push(gamma);
                }
            }
        }
        found.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let index = found.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();

        let qc: Vec<Vec<Q>> = cartan.iter().map(|r| to_q_vec(r)).collect();
        let inv = if n == 0 { Vec::new() } else { invert(&qc).expect("Cartan matrix is invertible") };
        // ω_i: column i of C^{-1}; x_i: row i of C^{-1}.
        let fund_weights = (0..n).map(|i| (0..n).map(|k| inv[k][i].clone()).collect()).collect();
        let fund_coweights = inv.clone();

        RootSystem {
            label,
            cartan_type: None,
            gram,
            cartan,
            positive: found,
            index,
            fund_weights,
            fund_coweights,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `⟨α_j, α_i^∨⟩`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn highest_root(&self) -> Option<&[i64]> {
        self.positive.last().map(Vec::as_slice)
    }

    /// `⟨λ, α_i^∨⟩` for `λ` in root coordinates.
    pub fn coroot_pairing(&self, lambda: &[Q], i: usize) -> Q {
        lambda
            .iter()
            .zip(&self.cartan[i])
            .fold(Q::zero(), |acc, (l, &c)| acc + l * qi(c))
    }

    pub fn coroot_pairing_int(&self, lambda: &[i64], i: usize) -> i64 {
        lambda.iter().zip(&self.cartan[i]).map(|(l, c)| l * c).sum()
    }

    /// `λ(h)` with `λ` in root coordinates and `h` in coroot coordinates.
    pub fn pair(&self, lambda: &[Q], h: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (k, hk) in h.iter().enumerate() {
            if !hk.is_zero() {
                acc += hk * self.coroot_pairing(lambda, k);
            }
        }
        acc
    }

    /// The invariant form on root coordinates.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if self.gram[i][j] != 0 {
                    acc += ai * bj * qi(self.gram[i][j]);
                }
            }
        }
        acc
    }

    pub fn inner_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += ai * bj * self.gram[i][j];
            }
        }
        acc
    }

    /// `s_i` applied to a vector in root coordinates.
    pub fn reflect(&self, i: usize, lambda: &[Q]) -> Vec<Q> {
        let c = self.coroot_pairing(lambda, i);
        let mut out = lambda.to_vec();
        out[i] -= c;
        out
    }

    /// `s_i` applied to a coweight in coroot coordinates: `h - α_i(h) α_i^∨`.
    pub fn reflect_coweight(&self, i: usize, h: &[Q]) -> Vec<Q> {
        let mut e = vec![Q::zero(); self.rank()];
        e[i] = qi(1);
        let a = self.pair(&e, h);
        let mut out = h.to_vec();
        out[i] -= a;
        out
    }

    /// `ω_i` in root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::roots(self.fund_weights[i].clone())
    }

    /// `x_i` with `α_j(x_i) = δ_ij`, in coroot coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        Coweight { coords: self.fund_coweights[i].clone() }
    }

    /// Positive roots of the Levi of `p` (those supported on `Δ(P)`).
    pub fn levi_positive(&self, p: &Parabolic) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&k| self.positive[k].iter().enumerate().all(|(i, &c)| c == 0 || p.contains(i)))
            .collect()
    }

    /// Positive roots of the nilradical, `R(𝔲_P) = R⁺∖R⁺_𝔩`.
    pub fn nilradical(&self, p: &Parabolic) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&k| self.positive[k].iter().enumerate().any(|(i, &c)| c != 0 && !p.contains(i)))
            .collect()
    }

    /// `dim G/P = |R(𝔲_P)|`.
    pub fn dim_flag(&self, p: &Parabolic) -> usize {
        self.nilradical(p).len()
    }

    fn half_sum(&self, roots: impl Iterator<Item = usize>) -> Weight {
        let mut acc = vec![Q::zero(); self.rank()];
        for k in roots {
            for (a, &c) in acc.iter_mut().zip(&self.positive[k]) {
                *a += qi(c);
            }
        }
        let half = crate::arith::qr(1, 2);
        Weight::roots(acc.into_iter().map(|x| x * &half).collect())
    }

    /// `ρ`, half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        self.half_sum(0..self.positive.len())
    }

    /// `ρ^L`, half the sum of the positive roots of the Levi.
    pub fn rho_levi(&self, p: &Parabolic) -> Weight {
        self.half_sum(self.levi_positive(p).into_iter())
    }

    /// The image of `x_i` under the form-induced isomorphism `𝔥 ≅ 𝔥*`
    /// (`α_k^∨ ↦ 2α_k/⟨α_k,α_k⟩`), in root coordinates.
    pub fn coweight_to_weight(&self, h: &Coweight) -> Weight {
        Weight::roots(
            h.coords
                .iter()
                .enumerate()
                .map(|(k, c)| c * qi(2) / qi(self.gram[k][k]))
                .collect(),
        )
    }

    /// The root system of the semisimple part of the Levi of `p`.
    pub fn levi_subsystem(&self, p: &Parabolic) -> Result<LeviSubsystem> {
        p.validate(self.rank())?;
        let simple = p.levi().to_vec();
        let gram: Vec<Vec<i64>> = simple
            .iter()
            .map(|&i| simple.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        let label = format!("Levi({};{p})", self.label);
        let system = RootSystem::from_gram(label, gram);
        let root_map = system
            .positive
            .iter()
            .map(|r| {
                let mut amb = vec![0i64; self.rank()];
                for (k, &c) in r.iter().enumerate() {
                    amb[simple[k]] = c;
                }
                self.positive_index(&amb).expect("Levi root is an ambient root")
            })
            .collect();
        Ok(LeviSubsystem { system, simple_map: simple, root_map })
    }

    pub fn cartan_data(&self) -> CartanData {
        CartanData {
            label: self.label.clone(),
            family: self.cartan_type.map(|c| c.family),
            rank: self.rank(),
            cartan_matrix: self.cartan.clone(),
            gram_matrix: self.gram.clone(),
            positive_roots: self.positive.clone(),
        }
    }
}

/// A Levi root subsystem together with its embedding into the ambient system.
#[derive(Debug, Clone)]
pub struct LeviSubsystem {
    pub system: RootSystem,
    /// Subsystem simple root `k` is ambient simple root `simple_map[k]`.
    pub simple_map: Vec<usize>,
    /// Subsystem positive root `k` is ambient positive root `root_map[k]`.
    pub root_map: Vec<usize>,
}

impl LeviSubsystem {
    /// Translates a parabolic of the subsystem into ambient simple-root indices.
    pub fn lift_parabolic(&self, q: &Parabolic) -> Parabolic {
        Parabolic::from_levi(q.levi().iter().map(|&k| self.simple_map[k]))
    }

    /// Translates ambient simple-root indices inside the Levi into subsystem indices.
    pub fn restrict_parabolic(&self, q: &Parabolic) -> Parabolic {
        Parabolic::from_levi(
            q.levi()
                .iter()
                .filter_map(|i| self.simple_map.iter().position(|j| j == i)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qr;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    /// Independent oracle: enumerate every nonnegative integer vector of bounded height
    /// and keep those whose Weyl orbit (under repeated simple reflections) hits a simple root.
    fn closure_oracle_count(r: &RootSystem, max_coeff: i64) -> usize {
        let n = r.rank();
        let mut count = 0;
        let mut v = vec![0i64; n];
        loop {
            let mut k = 0;
            while k < n {
                v[k] += 1;
                if v[k] <= max_coeff {
                    break;
                }
                v[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            // A vector is a positive root iff it reduces to a simple root by
            // height-lowering reflections while staying nonnegative.
            let mut cur = v.clone();
            let is_root = loop {
                if cur.iter().sum::<i64>() == 1 {
                    break true;
                }
                let step = (0..n).find(|&i| r.coroot_pairing_int(&cur, i) > 0);
                match step {
                    None => break false,
                    Some(i) => {
                        cur[i] -= r.coroot_pairing_int(&cur, i);
                        if cur.iter().any(|&x| x < 0) {
                            break false;
                        }
                    }
                }
            };
            if is_root && r.inner_int(&v, &v) > 0 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A1").positive_roots(), &[vec![1]]);
        for (t, n) in [("A2", 3), ("A3", 6), ("B2", 4), ("C2", 4), ("G2", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("F4", 24), ("E6", 36), ("E8", 120)] {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
        for t in ["B3", "C3", "G2", "A3"] {
            let r = rs(t);
            assert_eq!(closure_oracle_count(&r, 3), r.num_positive(), "{t}");
        }
    }

    #[test]
    fn g2_highest_root() {
        assert_eq!(rs("G2").highest_root().unwrap(), &[3, 2]);
        assert_eq!(rs("B3").highest_root().unwrap(), &[1, 2, 2]);
        assert_eq!(rs("C3").highest_root().unwrap(), &[2, 2, 1]);
    }

    #[test]
    fn inadmissible_types_rejected() {
        for s in ["D2", "E5", "F3", "G3", "B1", "A0", "X2"] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn roots_ordered_by_height() {
        let r = rs("B3");
        let h: Vec<i64> = r.positive_roots().iter().map(|x| x.iter().sum()).collect();
        assert!(h.windows(2).all(|w| w[0] <= w[1]));
        assert!(r.positive_roots().iter().all(|x| x.iter().all(|&c| c >= 0)));
    }

    #[test]
    fn form_is_invariant_and_positive() {
        for ct in CartanType::rank_at_most_3() {
            let r = RootSystem::new(ct);
            let roots: Vec<Vec<Q>> = r.positive_roots().iter().map(|x| to_q_vec(x)).collect();
            for a in &roots {
                assert!(r.inner(a, a) > Q::zero());
                for b in &roots {
                    for i in 0..r.rank() {
                        assert_eq!(r.inner(&r.reflect(i, a), &r.reflect(i, b)), r.inner(a, b));
                    }
                }
            }
            // short roots have squared length 2
            let min = roots.iter().map(|a| r.inner(a, a)).min().unwrap();
            assert_eq!(min, qi(2));
        }
    }

    #[test]
    fn positive_roots_closed_under_addition() {
        for ct in CartanType::rank_at_most_3() {
            let r = RootSystem::new(ct);
            for a in r.positive_roots() {
                for b in r.positive_roots() {
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if r.is_root(&s) {
                        assert!(r.positive_index(&s).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn rho_pairs_with_coroots_and_fundamental_coweights() {
        for ct in CartanType::rank_at_most_3() {
            let r = RootSystem::new(ct);
            let rho = r.rho();
            for i in 0..r.rank() {
                assert_eq!(rho.coords.len(), r.rank());
                // ρ(x_i) is the i-th simple-root coordinate of ρ
                assert_eq!(rho.pair(&r, &r.fundamental_coweight(i)), rho.coords[i]);
                // ρ = Σ ω_i
                assert_eq!(r.coroot_pairing(&rho.coords, i), qi(1));
            }
        }
        assert_eq!(rs("A1").rho(), rs("A1").fundamental_weight(0));
    }

    #[test]
    fn rho_levi_b3() {
        let r = rs("B3");
        let p = Parabolic::from_levi([0, 2]);
        assert_eq!(r.rho_levi(&p).coords, vec![qr(1, 2), qi(0), qr(1, 2)]);
    }

    #[test]
    fn fundamental_coweights_are_dual() {
        for ct in CartanType::rank_at_most_3() {
            let r = RootSystem::new(ct);
            for i in 0..r.rank() {
                let x = r.fundamental_coweight(i);
                for j in 0..r.rank() {
                    let mut e = vec![qi(0); r.rank()];
                    e[j] = qi(1);
                    assert_eq!(r.pair(&e, &x.coords), qi(i64::from(i == j)));
                }
            }
        }
        assert_eq!(rs("A2").fundamental_coweight(0).coords, vec![qr(2, 3), qr(1, 3)]);
    }

    #[test]
    fn coweight_identification_with_scaled_fundamental_weight() {
        for ct in CartanType::rank_at_most_3() {
            let r = RootSystem::new(ct);
            for i in 0..r.rank() {
                let image = r.coweight_to_weight(&r.fundamental_coweight(i));
                let expect = r.fundamental_weight(i).scale(&(qi(2) / qi(r.gram()[i][i])));
                assert_eq!(image, expect, "{ct} x_{}", i + 1);
            }
        }
    }

    #[test]
    fn weight_basis_conversions_are_inverse() {
        let r = rs("B3");
        let w = Weight::roots(vec![qr(1, 2), qi(-3), qr(7, 5)]);
        let f = w.in_basis(&r, WeightBasis::Fundamental);
        assert_eq!(f.basis, WeightBasis::Fundamental);
        assert_eq!(f.in_basis(&r, WeightBasis::SimpleRoot), w);
        // pairings in the fundamental basis read off coordinates
        for i in 0..3 {
            assert_eq!(w.pair(&r, &Coweight { coords: {
                let mut e = vec![qi(0); 3];
                e[i] = qi(1);
                e
            } }), f.coords[i]);
        }
    }

    #[test]
    fn levi_subsystems() {
        let b3 = rs("B3");
        assert_eq!(b3.levi_subsystem(&Parabolic::borel()).unwrap().system.num_positive(), 0);
        let l = b3.levi_subsystem(&Parabolic::from_levi([1, 2])).unwrap();
        assert_eq!(l.system.num_positive(), 4);
        assert_eq!(l.simple_map, vec![1, 2]);
        let c3 = rs("C3");
        let l = c3.levi_subsystem(&Parabolic::from_levi([0, 1])).unwrap();
        assert_eq!(l.system.num_positive(), 3);
        // reducible Levi: block-diagonal Cartan matrix
        let l = b3.levi_subsystem(&Parabolic::from_levi([0, 2])).unwrap();
        assert_eq!(l.system.cartan_matrix(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(l.root_map.len(), 2);
        assert!(b3.levi_subsystem(&Parabolic::from_levi([5])).is_err());
    }

    #[test]
    fn nilradical_dimensions() {
        let b3 = rs("B3");
        assert_eq!(b3.dim_flag(&Parabolic::maximal(3, 1)), 7);
        assert_eq!(b3.dim_flag(&Parabolic::maximal(3, 2)), 6);
        assert_eq!(b3.dim_flag(&Parabolic::maximal(3, 0)), 5);
        assert_eq!(b3.dim_flag(&Parabolic::borel()), 9);
    }

    #[test]
    fn cartan_data_serializes() {
        let json = serde_json::to_string(&rs("G2").cartan_data()).unwrap();
        assert!(json.contains("\"positive_roots\""));
    }
}
