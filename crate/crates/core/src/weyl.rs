//! Weyl group enumeration, inversion sets and minimal coset representatives.
//!
//! Elements are canonicalized by their integer action on the simple roots and
//! referred to by dense ids into [`WeylGroup::elements`]. Ids follow the
//! deterministic order (length, then action matrix).

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{qi, Q};
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Parabolic, RootSystem, Weight, WeightBasis};

pub const DEFAULT_WEYL_CAP: u128 = 2_000_000;

/// A set of positive roots, as a bitmask over positive-root indices.
pub type RootSet = u128;

pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    /// Row-major `r×r`; column `j` is `w(α_j)` in root coordinates.
    matrix: Vec<i64>,
    length: usize,
    word: Vec<usize>,
    inversions: RootSet,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// A reduced word, zero-based simple reflection indices, leftmost letter first.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `Φ_w = w⁻¹R⁻ ∩ R⁺` as a bitmask.
    pub fn inversions(&self) -> RootSet {
        self.inversions
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }
}

/// Formats a reduced word one-based, e.g. `s2s1`; the identity prints as `e`.
pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

/// `|W| = ∏_{β>0} (ht β + 1)/ht β`.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    let mut acc = Q::one();
    for beta in rs.positive_roots() {
        let h: i64 = beta.iter().sum();
        acc *= Q::new((h + 1).into(), h.into());
    }
    assert!(acc.is_integer());
    acc.to_integer().try_into().unwrap_or(u128::MAX)
}

pub fn set_len(s: RootSet) -> usize {
    s.count_ones() as usize
}

pub fn set_from(indices: impl IntoIterator<Item = usize>) -> RootSet {
    indices.into_iter().fold(0, |acc, k| acc | (1u128 << k))
}

pub fn set_members(s: RootSet) -> Vec<usize> {
    (0..128).filter(|k| s & (1u128 << k) != 0).collect()
}

#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    by_matrix: HashMap<Vec<i64>, ElementId>,
    by_inversions: HashMap<RootSet, ElementId>,
    right_simple: Vec<Vec<ElementId>>,
    left_simple: Vec<Vec<ElementId>>,
    longest: ElementId,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        Self::with_cap(rs, DEFAULT_WEYL_CAP)
    }

    /// Enumerates the full group, refusing if `|W|` exceeds `cap`.
    pub fn with_cap(rs: Arc<RootSystem>, cap: u128) -> Result<Self> {
        let order = weyl_order(&rs);
        if order > cap {
            return Err(Error::BudgetExceeded { what: "Weyl group", needed: order, cap });
        }
        if rs.num_positive() > 128 {
            return Err(Error::BudgetExceeded {
                what: "positive root set",
                needed: rs.num_positive() as u128,
                cap: 128,
            });
        }
        let r = rs.rank();
        let identity: Vec<i64> = (0..r * r).map(|k| i64::from(k / r == k % r)).collect();

        // Breadth-first search on the Cayley graph: BFS depth equals length.
        let mut mats = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..r {
                let m = right_mul_simple(&rs, &mats[cur], i);
                if !seen.contains_key(&m) {
                    let id = mats.len();
                    seen.insert(m.clone(), id);
                    let mut w = words[cur].clone();
                    w.push(i);
                    mats.push(m);
                    words.push(w);
                    queue.push_back(id);
                }
            }
        }
        assert_eq!(mats.len() as u128, order, "enumeration disagrees with |W| formula");

        let mut order_ids: Vec<usize> = (0..mats.len()).collect();
        order_ids.sort_by(|&a, &b| words[a].len().cmp(&words[b].len()).then_with(|| mats[a].cmp(&mats[b])));
        let elements: Vec<WeylElement> = order_ids
            .iter()
            .map(|&k| {
                let inversions = inversion_mask(&rs, &mats[k]);
                WeylElement { matrix: mats[k].clone(), length: words[k].len(), word: words[k].clone(), inversions }
            })
            .collect();
        for e in &elements {
            assert_eq!(set_len(e.inversions), e.length);
        }
        let by_matrix: HashMap<Vec<i64>, usize> =
            elements.iter().enumerate().map(|(k, e)| (e.matrix.clone(), k)).collect();
        let by_inversions = elements.iter().enumerate().map(|(k, e)| (e.inversions, k)).collect();
        let right_simple = elements
            .iter()
            .map(|e| (0..r).map(|i| by_matrix[&right_mul_simple(&rs, &e.matrix, i)]).collect())
            .collect();
        let left_simple = elements
            .iter()
            .map(|e| (0..r).map(|i| by_matrix[&left_mul_simple(&rs, &e.matrix, i)]).collect())
            .collect();
        let longest = elements.len() - 1;
        Ok(WeylGroup { rs, elements, by_matrix, by_inversions, right_simple, left_simple, longest })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, w: ElementId) -> &WeylElement {
        &self.elements[w]
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    /// `w_o`.
    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.elements[w].length
    }

    pub fn inversions(&self, w: ElementId) -> RootSet {
        self.elements[w].inversions
    }

    /// `Φ_w` as a sorted list of positive-root indices.
    pub fn inversion_set(&self, w: ElementId) -> Vec<usize> {
        set_members(self.elements[w].inversions)
    }

    pub fn by_inversion_set(&self, s: RootSet) -> Option<ElementId> {
        self.by_inversions.get(&s).copied()
    }

    pub fn by_matrix(&self, m: &[i64]) -> Option<ElementId> {
        self.by_matrix.get(m).copied()
    }

    /// `w·s_i`.
    pub fn mul_simple_right(&self, w: ElementId, i: usize) -> ElementId {
        self.right_simple[w][i]
    }

    /// `s_i·w`.
    pub fn mul_simple_left(&self, i: usize, w: ElementId) -> ElementId {
        self.left_simple[w][i]
    }

    pub fn from_word(&self, word: &[usize]) -> Result<ElementId> {
        let r = self.rs.rank();
        let mut w = self.identity();
        for &i in word {
            if i >= r {
                return Err(Error::Parse(format!("simple reflection s{} out of range for rank {r}", i + 1)));
            }
            w = self.right_simple[w][i];
        }
        Ok(w)
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.elements[b].word.iter().fold(a, |acc, &i| self.right_simple[acc][i])
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        self.elements[w].word.iter().rev().fold(self.identity(), |acc, &i| self.right_simple[acc][i])
    }

    /// Image of a positive root (by index) as an integer vector.
    pub fn act_root(&self, w: ElementId, root: &[i64]) -> Vec<i64> {
        apply_matrix(&self.elements[w].matrix, self.rs.rank(), root)
    }

    /// `w·λ` for a weight.
    pub fn act_weight(&self, w: ElementId, lambda: &Weight) -> Weight {
        let basis = lambda.basis;
        let coords = lambda.root_coords(&self.rs);
        let r = self.rs.rank();
        let m = &self.elements[w].matrix;
        let out: Vec<Q> = (0..r)
            .map(|i| (0..r).fold(Q::default(), |acc, j| acc + qi(m[i * r + j]) * &coords[j]))
            .collect();
        Weight::roots(out).in_basis(&self.rs, basis)
    }

    /// `w·h` for a coweight, by applying the letters of a reduced word.
    pub fn act_coweight(&self, w: ElementId, h: &Coweight) -> Coweight {
        let mut c = h.coords.clone();
        for &i in self.elements[w].word.iter().rev() {
            c = self.rs.reflect_coweight(i, &c);
        }
        Coweight { coords: c }
    }

    /// Bitmask of the positive roots of the Levi of `p`.
    pub fn levi_mask(&self, p: &Parabolic) -> RootSet {
        set_from(self.rs.levi_positive(p))
    }

    pub fn nilradical_mask(&self, p: &Parabolic) -> RootSet {
        set_from(self.rs.nilradical(p))
    }

    /// `w ∈ W^P`, i.e. `w(R⁺_𝔩) ⊆ R⁺`.
    pub fn is_minimal(&self, w: ElementId, p: &Parabolic) -> bool {
        self.elements[w].inversions & self.levi_mask(p) == 0
    }

    pub fn in_parabolic_subgroup(&self, w: ElementId, p: &Parabolic) -> bool {
        let m = self.levi_mask(p);
        self.elements[w].inversions & !m == 0
    }

    /// `W^P`, graded by length.
    pub fn minimal_reps(&self, p: &Parabolic) -> Vec<ElementId> {
        let m = self.levi_mask(p);
        (0..self.order()).filter(|&w| self.elements[w].inversions & m == 0).collect()
    }

    /// `w_o^P`, the longest element of `W_P`.
    pub fn longest_of(&self, p: &Parabolic) -> ElementId {
        self.by_inversions[&self.levi_mask(p)]
    }

    /// The minimal-length representative of `w W_P`.
    pub fn min_coset_rep(&self, w: ElementId, p: &Parabolic) -> ElementId {
        let mut cur = w;
        loop {
            let inv = self.elements[cur].inversions;
            let descent = p.levi().iter().copied().find(|&i| {
                let k = self.rs.positive_index(&unit(self.rs.rank(), i)).unwrap();
                inv & (1u128 << k) != 0
            });
            match descent {
                Some(i) => cur = self.right_simple[cur][i],
                None => return cur,
            }
        }
    }

    /// `w ↦ w_o w w_o^P` on `W^P`.
    pub fn involution(&self, w: ElementId, p: &Parabolic) -> ElementId {
        let wop = self.longest_of(p);
        self.mul(self.mul(self.longest, w), wop)
    }

    /// Lengths of `W^P` bucketed by degree.
    pub fn degree_profile(&self, p: &Parabolic) -> Vec<usize> {
        let reps = self.minimal_reps(p);
        let top = reps.iter().map(|&w| self.length(w)).max().unwrap_or(0);
        let mut prof = vec![0; top + 1];
        for w in reps {
            prof[self.length(w)] += 1;
        }
        prof
    }

    pub fn label(&self, w: ElementId) -> String {
        word_label(&self.elements[w].word)
    }

    /// Rho-based closed form `ρ − w⁻¹ρ`, used to cross-check inversion sets.
    pub fn rho_defect(&self, w: ElementId) -> Weight {
        let rho = self.rs.rho();
        &rho - &self.act_weight(self.inverse(w), &rho)
    }

    /// Sum of the roots in `Φ_w` as a weight in root coordinates.
    pub fn inversion_sum(&self, w: ElementId) -> Weight {
        let mut acc = vec![0i64; self.rs.rank()];
        for k in self.inversion_set(w) {
            for (a, c) in acc.iter_mut().zip(&self.rs.positive_roots()[k]) {
                *a += c;
            }
        }
        Weight::roots(acc.into_iter().map(qi).collect()).in_basis(&self.rs, WeightBasis::SimpleRoot)
    }
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    (0..r).map(|j| i64::from(i == j)).collect()
}

fn apply_matrix(m: &[i64], r: usize, v: &[i64]) -> Vec<i64> {
    (0..r).map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum()).collect()
}

fn right_mul_simple(rs: &RootSystem, m: &[i64], i: usize) -> Vec<i64> {
    // (w s_i)(α_j) = w(α_j) - ⟨α_j, α_i^∨⟩ w(α_i)
    let r = rs.rank();
    let mut out = m.to_vec();
    for j in 0..r {
        let c = rs.cartan(i, j);
        if c != 0 {
            for row in 0..r {
                out[row * r + j] -= c * m[row * r + i];
            }
        }
    }
    out
}

fn left_mul_simple(rs: &RootSystem, m: &[i64], i: usize) -> Vec<i64> {
    let r = rs.rank();
    let mut out = m.to_vec();
    for j in 0..r {
        let col: Vec<i64> = (0..r).map(|row| m[row * r + j]).collect();
        out[i * r + j] -= rs.coroot_pairing_int(&col, i);
    }
    out
}

fn inversion_mask(rs: &RootSystem, m: &[i64]) -> RootSet {
    let r = rs.rank();
    let mut mask = 0;
    for (k, beta) in rs.positive_roots().iter().enumerate() {
        let img = apply_matrix(m, r, beta);
        if img.iter().any(|&x| x < 0) {
            mask |= 1u128 << k;
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::new(Arc::new(RootSystem::new(s.parse::<CartanType>().unwrap()))).unwrap()
    }

    /// Orbit-enumeration oracle: |W| = size of the orbit of a regular weight (ρ).
    fn orbit_size(rs: &RootSystem) -> usize {
        let rho = rs.rho().coords;
        let mut seen = std::collections::HashSet::from([rho.clone()]);
        let mut stack = vec![rho];
        while let Some(v) = stack.pop() {
            for i in 0..rs.rank() {
                let u = rs.reflect(i, &v);
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn group_orders() {
        let a1 = group("A1");
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.element(1).word(), &[0]);
        for (t, n) in [("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48), ("C3", 48)] {
            let g = group(t);
            assert_eq!(g.order(), n, "{t}");
            assert_eq!(orbit_size(g.root_system()), n, "{t}");
        }
    }

    #[test]
    fn cap_refusal_names_order() {
        let rs = Arc::new(RootSystem::new("E8".parse().unwrap()));
        match WeylGroup::new(rs) {
            Err(Error::BudgetExceeded { needed, .. }) => assert_eq!(needed, 696_729_600),
            other => panic!("expected refusal, got {other:?}"),
        }
        let rs = Arc::new(RootSystem::new("B3".parse().unwrap()));
        assert!(WeylGroup::with_cap(rs, 10).is_err());
    }

    #[test]
    fn elements_sorted_and_closed() {
        let g = group("B3");
        for w in 1..g.order() {
            assert!(g.length(w - 1) <= g.length(w));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                assert!(g.length(ab) <= g.length(a) + g.length(b));
            }
            assert_eq!(g.mul(a, g.inverse(a)), g.identity());
            assert_eq!(g.length(g.mul(g.longest(), a)), g.length(g.longest()) - g.length(a));
            assert_eq!(g.from_word(g.element(a).word()).unwrap(), a);
        }
    }

    #[test]
    fn inversion_sets() {
        for ct in CartanType::rank_at_most_3() {
            let g = WeylGroup::new(Arc::new(RootSystem::new(ct))).unwrap();
            let rs = g.root_system().clone();
            assert!(g.inversion_set(g.identity()).is_empty());
            for i in 0..rs.rank() {
                let s = g.from_word(&[i]).unwrap();
                let k = rs.positive_index(&unit(rs.rank(), i)).unwrap();
                assert_eq!(g.inversion_set(s), vec![k]);
            }
            assert_eq!(g.inversion_set(g.longest()).len(), rs.num_positive());
            let mut masks = std::collections::HashSet::new();
            for w in 0..g.order() {
                assert_eq!(g.inversion_sum(w), g.rho_defect(w), "{ct} {}", g.label(w));
                assert!(masks.insert(g.inversions(w)));
            }
        }
    }

    #[test]
    fn action_properties() {
        let g = group("B3");
        let rs = g.root_system().clone();
        let rho = rs.rho();
        assert_eq!(g.act_weight(g.identity(), &rho), rho);
        assert_eq!(g.act_weight(g.longest(), &rho), -&rho);
        for i in 0..3 {
            let s = g.from_word(&[i]).unwrap();
            let alpha = Weight::roots(unit(3, i).into_iter().map(qi).collect());
            assert_eq!(g.act_weight(s, &alpha), -&alpha);
        }
        // ⟨wα, wβ⟩ = ⟨α, β⟩
        let roots: Vec<Vec<Q>> = rs.positive_roots().iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        for w in 0..g.order() {
            for a in &roots {
                let wa = g.act_weight(w, &Weight::roots(a.clone())).coords;
                for b in &roots {
                    let wb = g.act_weight(w, &Weight::roots(b.clone())).coords;
                    assert_eq!(rs.inner(&wa, &wb), rs.inner(a, b));
                }
            }
            // pairing invariance between the weight and coweight actions
            let h = rs.fundamental_coweight(1);
            let lam = rs.fundamental_weight(2);
            assert_eq!(
                g.act_weight(w, &lam).pair(&rs, &g.act_coweight(w, &h)),
                lam.pair(&rs, &h)
            );
        }
    }

    #[test]
    fn minimal_reps_b3() {
        let g = group("B3");
        assert_eq!(g.minimal_reps(&Parabolic::full(3)), vec![g.identity()]);
        let p3 = Parabolic::maximal(3, 2);
        assert_eq!(g.minimal_reps(&p3).len(), 8);
        assert_eq!(g.degree_profile(&p3), vec![1, 1, 1, 2, 1, 1, 1]);
        let p2 = Parabolic::maximal(3, 1);
        assert_eq!(g.minimal_reps(&p2).len(), 12);
        assert_eq!(g.degree_profile(&p2), vec![1, 1, 2, 2, 2, 2, 1, 1]);
        for &w in &g.minimal_reps(&p2) {
            let rs = g.root_system();
            for k in rs.levi_positive(&p2) {
                assert!(g.act_root(w, &rs.positive_roots()[k]).iter().all(|&x| x >= 0));
            }
        }
    }

    #[test]
    fn involution_on_minimal_reps() {
        for ct in CartanType::rank_at_most_3() {
            let g = WeylGroup::new(Arc::new(RootSystem::new(ct))).unwrap();
            let rs = g.root_system().clone();
            for p in Parabolic::all(rs.rank()) {
                let dim = rs.dim_flag(&p);
                let reps = g.minimal_reps(&p);
                let top = *reps.last().unwrap();
                assert_eq!(g.length(top), dim);
                assert_eq!(g.involution(g.identity(), &p), top);
                for &w in &reps {
                    let d = g.involution(w, &p);
                    assert!(g.is_minimal(d, &p));
                    assert_eq!(g.involution(d, &p), w);
                    assert_eq!(g.length(d), dim - g.length(w));
                }
            }
        }
    }

    #[test]
    fn b3_p3_involution_on_degree_three() {
        let g = group("B3");
        let p3 = Parabolic::maximal(3, 2);
        let mid: Vec<usize> = g.minimal_reps(&p3).into_iter().filter(|&w| g.length(w) == 3).collect();
        assert_eq!(mid.len(), 2);
        // Direct computation: the involution swaps the two length-3 elements.
        assert_eq!(g.involution(mid[0], &p3), mid[1]);
        assert_eq!(g.involution(mid[1], &p3), mid[0]);
    }

    #[test]
    fn min_coset_rep_is_minimal_in_coset() {
        let g = group("B3");
        for p in Parabolic::all(3) {
            for w in 0..g.order() {
                let m = g.min_coset_rep(w, &p);
                assert!(g.is_minimal(m, &p));
                // w = m·v with v in W_P
                let v = g.mul(g.inverse(m), w);
                assert!(g.in_parabolic_subgroup(v, &p));
                assert_eq!(g.length(w), g.length(m) + g.length(v));
            }
        }
    }

    #[test]
    fn inversion_sets_are_closed_and_coclosed() {
        for ct in CartanType::rank_at_most_3() {
            let g = WeylGroup::new(Arc::new(RootSystem::new(ct))).unwrap();
            let rs = g.root_system().clone();
            let n = rs.num_positive();
            let closed = |s: RootSet| {
                for a in 0..n {
                    for b in 0..n {
                        if s & (1 << a) != 0 && s & (1 << b) != 0 {
                            let sum: Vec<i64> = rs.positive_roots()[a].iter().zip(&rs.positive_roots()[b]).map(|(x, y)| x + y).collect();
                            if let Some(c) = rs.positive_index(&sum) {
                                if s & (1 << c) == 0 {
                                    return false;
                                }
                            }
                        }
                    }
                }
                true
            };
            let full: RootSet = if n == 128 { u128::MAX } else { (1 << n) - 1 };
            for s in 0..(1u128 << n) {
                let is_inv = g.by_inversion_set(s).is_some();
                assert_eq!(is_inv, closed(s) && closed(full & !s), "{ct} {s:b}");
            }
        }
    }
}
