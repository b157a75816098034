//! Integer polynomials in the simple roots, with Weyl reflections and
//! divided-difference operators.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 8;

pub type Mono = [u8; MAX_VARS];

fn overflow() -> Error {
    Error::BudgetExceeded { what: "polynomial coefficient", needed: u128::MAX, cap: i128::MAX as u128 }
}

fn add_coef(map: &mut HashMap<Mono, i128>, m: Mono, c: i128) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let e = map.entry(m).or_insert(0);
    *e = e.checked_add(c).ok_or_else(overflow)?;
    if *e == 0 {
        map.remove(&m);
    }
    Ok(())
}

/// A polynomial in `y_1..y_r` (`y_i = α_i`) with `i128` coefficients.
/// Arithmetic is checked; overflow is reported as a budget error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly {
    terms: HashMap<Mono, i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i128) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert([0; MAX_VARS], c);
        }
        p
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    /// `Σ c_j y_j`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Poly::zero();
        for (j, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut m = [0; MAX_VARS];
                m[j] = 1;
                p.terms.insert(m, c as i128);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &i128)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> i128 {
        self.terms.get(&[0; MAX_VARS]).copied().unwrap_or(0)
    }

    /// Total degree of some term; meaningful for homogeneous polynomials.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.iter().map(|&e| e as usize).sum())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            add_coef(&mut out.terms, *m, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            add_coef(&mut out.terms, *m, c.checked_neg().ok_or_else(overflow)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut m = *a;
                for (x, y) in m.iter_mut().zip(b) {
                    *x = x.checked_add(*y).ok_or_else(overflow)?;
                }
                add_coef(&mut out, m, ca.checked_mul(cb).ok_or_else(overflow)?)?;
            }
        }
        Ok(Poly { terms: out })
    }

    pub fn scale(&self, c: i128) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, &x) in &self.terms {
            add_coef(&mut out.terms, *m, x.checked_mul(c).ok_or_else(overflow)?)?;
        }
        Ok(out)
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: i128) -> Option<Poly> {
        let mut out = Poly::zero();
        for (m, &x) in &self.terms {
            if x % d != 0 {
                return None;
            }
            out.terms.insert(*m, x / d);
        }
        Some(out)
    }

    /// `s_i f`, where `s_i(y_j) = y_j - cartan_row[j]·y_i` and `cartan_row[j] = ⟨α_j, α_i^∨⟩`.
    pub fn reflect(&self, i: usize, cartan_row: &[i64]) -> Result<Poly> {
        let nbrs: Vec<(usize, i128)> = cartan_row
            .iter()
            .enumerate()
            .filter(|&(j, &c)| j != i && c != 0)
            .map(|(j, &c)| (j, -(c as i128)))
            .collect();
        let mut out = HashMap::with_capacity(self.terms.len() * 2);
        for (m, &c) in &self.terms {
            let sign = if m[i] % 2 == 1 { -c } else { c };
            let mut partial: Vec<(Mono, i128)> = vec![(*m, sign)];
            for &(j, a) in &nbrs {
                let e = m[j];
                if e == 0 {
                    continue;
                }
                // (y_j + a·y_i)^e = Σ_k C(e,k) a^k y_i^k y_j^{e-k}
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (pm, pc) in &partial {
                    let mut binom: i128 = 1;
                    let mut apow: i128 = 1;
                    for k in 0..=e {
                        let mut nm = *pm;
                        nm[j] = e - k;
                        nm[i] = nm[i].checked_add(k).ok_or_else(overflow)?;
                        let coef = pc
                            .checked_mul(binom)
                            .and_then(|x| x.checked_mul(apow))
                            .ok_or_else(overflow)?;
                        next.push((nm, coef));
                        binom = binom * (e - k) as i128 / (k + 1) as i128;
                        apow = apow.checked_mul(a).ok_or_else(overflow)?;
                    }
                }
                partial = next;
            }
            for (pm, pc) in partial {
                add_coef(&mut out, pm, pc)?;
            }
        }
        Ok(Poly { terms: out })
    }

    /// `∂_i f = (f - s_i f)/y_i`.
    pub fn divided_difference(&self, i: usize, cartan_row: &[i64]) -> Result<Poly> {
        let diff = self.sub(&self.reflect(i, cartan_row)?)?;
        let mut out = Poly::zero();
        for (m, c) in diff.terms {
            assert!(m[i] > 0, "f - s_i f is divisible by y_i");
            let mut nm = m;
            nm[i] -= 1;
            out.terms.insert(nm, c);
        }
        Ok(out)
    }

    /// Evaluates at integer values of the variables.
    pub fn eval(&self, point: &[i128]) -> Result<i128> {
        let mut acc: i128 = 0;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (j, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.checked_mul(point[j]).ok_or_else(overflow)?;
                }
            }
            acc = acc.checked_add(t).ok_or_else(overflow)?;
        }
        Ok(acc)
    }
}

/// Number of monomials of degree `d` in `r` variables.
pub fn monomial_count(r: usize, d: usize) -> u128 {
    if r == 0 {
        return u128::from(d == 0);
    }
    // C(d + r - 1, r - 1)
    let mut acc: u128 = 1;
    for k in 1..r as u128 {
        acc = acc * (d as u128 + k) / k;
    }
    acc
}
