//! Exact-rational polyhedral computations on cones `{x ≥ 0 : a_k·x ≤ 0}`:
//! a phase-one simplex with Bland's rule, implication checks with
//! certificates, redundancy marking and double description.

use num_traits::{One, Signed, Zero};

use crate::arith::{dot, primitive, rank, Q};

/// Finds `y ≥ 0` with `A y = b`, where `a` is given by rows.
pub fn feasible(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut line = vec![Q::zero(); width];
        for (x, y) in line.iter_mut().zip(row) {
            *x = if flip { -y } else { y.clone() };
        }
        line[n + r] = Q::one();
        line[width - 1] = if flip { -rhs } else { rhs.clone() };
        t.push(line);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the phase-one objective Σ artificials
    let mut z = vec![Q::zero(); width];
    for line in &t {
        for j in 0..n {
            z[j] -= &line[j];
        }
        z[width - 1] -= &line[width - 1];
    }
    while let Some(enter) = (0..n + m).find(|&j| z[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if !t[r][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(r),
                Some(l) => {
                    let lhs = &t[r][width - 1] * &t[l][enter];
                    let rhs = &t[l][width - 1] * &t[r][enter];
                    if lhs < rhs || (lhs == rhs && basis[r] < basis[l]) {
                        Some(r)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(l) = leave else {
            // unbounded direction in phase one cannot occur: objective is bounded below by 0
            unreachable!("phase-one objective unbounded");
        };
        let p = t[l][enter].clone();
        for x in t[l].iter_mut() {
            *x = &*x / &p;
        }
        let pivot = t[l].clone();
        for (r, line) in t.iter_mut().enumerate() {
            if r != l && !line[enter].is_zero() {
                let f = line[enter].clone();
                for (x, y) in line.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        if !z[enter].is_zero() {
            let f = z[enter].clone();
            for (x, y) in z.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        basis[l] = enter;
    }
    if !z[width - 1].is_zero() {
        return None;
    }
    let mut y = vec![Q::zero(); n];
    for (r, &j) in basis.iter().enumerate() {
        if j < n {
            y[j] = t[r][width - 1].clone();
        }
    }
    debug_assert!(a.iter().zip(b).all(|(row, rhs)| &dot(row, &y) == rhs));
    Some(y)
}

/// Multipliers proving `f·x ≤ 0` from `g_m·x ≤ 0` and `x ≥ 0`: `Σ λ_m g_m − μ = f`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub lambda: Vec<Q>,
    pub mu: Vec<Q>,
}

impl Certificate {
    pub fn check(&self, f: &[Q], others: &[&[Q]]) -> bool {
        if self.lambda.iter().chain(&self.mu).any(Signed::is_negative) {
            return false;
        }
        (0..f.len()).all(|i| {
            let s = others.iter().zip(&self.lambda).fold(Q::zero(), |acc, (g, l)| acc + &g[i] * l);
            s - &self.mu[i] == f[i]
        })
    }
}

/// Whether `f·x ≤ 0` holds on `{x ≥ 0 : g·x ≤ 0 for g in others}`.
pub fn implied(f: &[Q], others: &[&[Q]]) -> Option<Certificate> {
    implied_masked(f, others, &vec![true; f.len()])
}

/// As [`implied`], using only the sign constraints `x_i ≥ 0` with `nonneg[i]`.
pub fn implied_masked(f: &[Q], others: &[&[Q]], nonneg: &[bool]) -> Option<Certificate> {
    let n = f.len();
    let k = others.len();
    let used: Vec<usize> = (0..n).filter(|&i| nonneg[i]).collect();
    let rows: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = others.iter().map(|g| g[i].clone()).collect();
            row.extend(used.iter().map(|&j| if i == j { -Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let y = feasible(&rows, f)?;
    let mut mu = vec![Q::zero(); n];
    for (&j, v) in used.iter().zip(&y[k..]) {
        mu[j] = v.clone();
    }
    let cert = Certificate { lambda: y[..k].to_vec(), mu };
    debug_assert!(cert.check(f, others));
    Some(cert)
}

/// A point `x ≥ 0` with `g·x ≤ 0` for all `others` and `f·x = 1`, if one exists.
pub fn violating_point(f: &[Q], others: &[&[Q]]) -> Option<Vec<Q>> {
    let n = f.len();
    let k = others.len();
    // unknowns: x (n), slacks (k)
    let mut rows = Vec::with_capacity(k + 1);
    let mut rhs = Vec::with_capacity(k + 1);
    for (m, g) in others.iter().enumerate() {
        let mut row = g.to_vec();
        row.extend((0..k).map(|j| if j == m { Q::one() } else { Q::zero() }));
        rows.push(row);
        rhs.push(Q::zero());
    }
    let mut row = f.to_vec();
    row.extend((0..k).map(|_| Q::zero()));
    rows.push(row);
    rhs.push(Q::one());
    let y = feasible(&rows, &rhs)?;
    Some(y[..n].to_vec())
}

/// Marks each functional that is implied by all the others together with `x ≥ 0`.
pub fn redundant(rows: &[Vec<Q>]) -> Vec<bool> {
    use rayon::prelude::*;
    (0..rows.len())
        .into_par_iter()
        .map(|k| {
            let others: Vec<&[Q]> = rows.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, r)| r.as_slice()).collect();
            implied(&rows[k], &others).is_some()
        })
        .collect()
}

/// Redundancy of the sign constraints `x_i ≥ 0` given all `rows` and the other sign constraints.
pub fn redundant_signs(rows: &[Vec<Q>], n: usize) -> Vec<bool> {
    let refs: Vec<&[Q]> = rows.iter().map(Vec::as_slice).collect();
    (0..n)
        .map(|i| {
            let f: Vec<Q> = (0..n).map(|j| if i == j { -Q::one() } else { Q::zero() }).collect();
            let mask: Vec<bool> = (0..n).map(|j| j != i).collect();
            implied_masked(&f, &refs, &mask).is_some()
        })
        .collect()
}

/// Redundancy decided from extreme rays: row `k` is redundant iff every
/// extreme ray of the cone cut out by the other rows satisfies it.
pub fn redundant_by_rays(rows: &[Vec<Q>], n: usize) -> Vec<bool> {
    (0..rows.len())
        .map(|k| {
            let others: Vec<Vec<Q>> = rows.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, r)| r.clone()).collect();
            extreme_rays(&others, n).iter().all(|r| !dot(&rows[k], r).is_positive())
        })
        .collect()
}

/// Whether every functional of `b` is implied by `a` (with `x ≥ 0`).
pub fn system_implies(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let refs: Vec<&[Q]> = a.iter().map(Vec::as_slice).collect();
    b.iter().all(|f| implied(f, &refs).is_some())
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Extreme rays of `{x ≥ 0 : a_k·x ≤ 0}` as primitive vectors.
pub fn extreme_rays(rows: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    // constraints 0..n are x_i ≥ 0, then the rows
    let total = n + rows.len();
    let words = total.div_ceil(64);
    let tight = |x: &[Q], upto: usize| -> Vec<u64> {
        let mut s = vec![0u64; words];
        for k in 0..upto {
            let v = if k < n { x[k].clone() } else { dot(&rows[k - n], x) };
            if v.is_zero() {
                s[k / 64] |= 1 << (k % 64);
            }
        }
        s
    };
    let mut rays: Vec<(Vec<Q>, Vec<u64>)> = (0..n)
        .map(|i| {
            let x: Vec<Q> = (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect();
            let s = tight(&x, n);
            (x, s)
        })
        .collect();
    for (k, a) in rows.iter().enumerate() {
        let idx = n + k;
        let vals: Vec<Q> = rays.iter().map(|(x, _)| dot(a, x)).collect();
        let mut next: Vec<(Vec<Q>, Vec<u64>)> = Vec::new();
        for ((x, s), v) in rays.iter().zip(&vals) {
            if !v.is_positive() {
                let mut s = s.clone();
                if v.is_zero() {
                    s[idx / 64] |= 1 << (idx % 64);
                }
                next.push((x.clone(), s));
            }
        }
        for (p, vp) in rays.iter().zip(&vals).filter(|(_, v)| v.is_positive()) {
            for (q, vq) in rays.iter().zip(&vals).filter(|(_, v)| v.is_negative()) {
                let common: Vec<u64> = p.1.iter().zip(&q.1).map(|(x, y)| x & y).collect();
                let count: u32 = common.iter().map(|w| w.count_ones()).sum();
                if (count as usize) + 2 < n {
                    continue;
                }
                let adjacent = rays.iter().all(|r| {
                    std::ptr::eq(r, p) || std::ptr::eq(r, q) || !is_subset(&common, &r.1)
                });
                if !adjacent {
                    continue;
                }
                let x: Vec<Q> = p.0.iter().zip(&q.0).map(|(a, b)| vp * b - vq * a).collect();
                let x: Vec<Q> = primitive(&x).into_iter().map(Q::from_integer).collect();
                let s = tight(&x, idx + 1);
                next.push((x, s));
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<Q>> = rays.into_iter().map(|(x, _)| x).collect();
    out.sort();
    out.dedup();
    out
}

/// Facet test from extreme rays: row `k` is irredundant iff the rays on its
/// hyperplane span a space of dimension `n − 1` (full-dimensional cone assumed).
pub fn facets_from_rays(rows: &[Vec<Q>], rays: &[Vec<Q>], n: usize) -> Vec<bool> {
    rows.iter()
        .map(|a| {
            let on: Vec<Vec<Q>> = rays.iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
            rank(&on) == n - 1
        })
        .collect()
}
