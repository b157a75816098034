//! Bundled reference multiplication tables and their verification up to a
//! degree-preserving relabeling of Schubert classes.

use std::collections::btree_map::Entry as Slot;
use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::context::GroupContext;
use crate::deform::{DeformedClass, DeformedRing, TauPoly};
use crate::error::{Error, Result};
use crate::rootsys::CartanType;
use crate::weyl::{word_label, ElementId};

pub const BUNDLED: [(&str, &str); 4] = [
    ("b3_p2", include_str!("../data/golden/b3_p2.txt")),
    ("b3_p3", include_str!("../data/golden/b3_p3.txt")),
    ("c3_p1", include_str!("../data/golden/c3_p1.txt")),
    ("c3_p2", include_str!("../data/golden/c3_p2.txt")),
];

/// One summand `c·t^k·label`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coef: i64,
    pub tau: u32,
    pub label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub line: usize,
    pub lhs: String,
    pub rhs: String,
    pub value: Vec<Term>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenTable {
    pub name: String,
    pub group: CartanType,
    /// One-based index of the omitted simple root.
    pub parabolic: usize,
    pub entries: Vec<Entry>,
}

/// Codimension encoded in a label such as `b2''`.
pub fn label_codim(label: &str) -> Result<usize> {
    let digits: String = label.chars().skip(1).take_while(char::is_ascii_digit).collect();
    digits.parse().map_err(|_| Error::Parse(format!("bad class label {label:?}")))
}

fn parse_term(s: &str, line: usize) -> Result<Term> {
    let bad = || Error::Parse(format!("line {line}: bad term {s:?}"));
    let toks: Vec<&str> = s.split_whitespace().collect();
    let (prefix, label) = match toks.as_slice() {
        [l] => ("", *l),
        [p, l] => (*p, *l),
        _ => return Err(bad()),
    };
    label_codim(label)?;
    let (num, rest) = prefix.split_at(prefix.find(|c: char| !c.is_ascii_digit()).unwrap_or(prefix.len()));
    let coef = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
    let tau = match rest {
        "" => 0,
        "t" => 1,
        r => r.strip_prefix("t^").and_then(|k| k.parse().ok()).ok_or_else(bad)?,
    };
    Ok(Term { coef, tau, label: label.to_string() })
}

pub fn parse(name: &str, text: &str) -> Result<GoldenTable> {
    let mut group = None;
    let mut parabolic = None;
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = raw.split('#').next().unwrap().trim();
        if s.is_empty() {
            continue;
        }
        if let Some(g) = s.strip_prefix("group ") {
            group = Some(g.trim().parse::<CartanType>()?);
        } else if let Some(p) = s.strip_prefix("parabolic ") {
            parabolic = Some(p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("line {line}: bad parabolic")))?);
        } else {
            let (lr, value) = s.split_once('=').ok_or_else(|| Error::Parse(format!("line {line}: expected '='")))?;
            let (lhs, rhs) = lr.split_once('*').ok_or_else(|| Error::Parse(format!("line {line}: expected '*'")))?;
            let value = match value.trim() {
                "0" => Vec::new(),
                v => v.split('+').map(|t| parse_term(t.trim(), line)).collect::<Result<_>>()?,
            };
            entries.push(Entry { line, lhs: lhs.trim().into(), rhs: rhs.trim().into(), value });
        }
    }
    Ok(GoldenTable {
        name: name.into(),
        group: group.ok_or_else(|| Error::Parse("missing group".into()))?,
        parabolic: parabolic.ok_or_else(|| Error::Parse("missing parabolic".into()))?,
        entries,
    })
}

pub fn bundled() -> Result<Vec<GoldenTable>> {
    BUNDLED.iter().map(|(n, t)| parse(n, t)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenReport {
    pub name: String,
    pub group: String,
    pub parabolic: usize,
    pub passed: bool,
    pub entries: usize,
    /// Reference label to reduced word of the matched `W^P` element.
    pub bijection: Vec<(String, String)>,
    pub bijections_tried: usize,
    pub mismatches: Vec<String>,
}

impl GoldenTable {
    fn labels(&self) -> BTreeMap<usize, Vec<String>> {
        let mut out: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        let all = self
            .entries
            .iter()
            .flat_map(|e| [e.lhs.clone(), e.rhs.clone()].into_iter().chain(e.value.iter().map(|t| t.label.clone())));
        for l in all {
            let c = label_codim(&l).unwrap();
            let v = out.entry(c).or_default();
            if !v.contains(&l) {
                v.push(l);
            }
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    fn mismatches(&self, d: &DeformedRing, map: &BTreeMap<String, ElementId>, names: &[String]) -> Result<Vec<String>> {
        let inv: BTreeMap<ElementId, &String> = map.iter().map(|(l, &w)| (w, l)).collect();
        let mut bad = Vec::new();
        for e in &self.entries {
            let mut expect = DeformedClass::default();
            for t in &e.value {
                expect.add(map[&t.label], &TauPoly::monomial(vec![t.tau], t.coef));
            }
            let got = d.product(map[&e.lhs], map[&e.rhs])?;
            if got != expect {
                let show = |c: &DeformedClass| {
                    if c.is_zero() {
                        return "0".to_string();
                    }
                    c.terms
                        .iter()
                        .map(|(w, p)| format!("({}){}", p.render(names), inv.get(w).map_or("?".to_string(), |s| s.to_string())))
                        .join(" + ")
                };
                bad.push(format!("line {}: {} * {} expected {} got {}", e.line, e.lhs, e.rhs, show(&expect), show(&got)));
            }
        }
        Ok(bad)
    }

    /// Searches permutations within each codimension for a labeling under which
    /// every entry matches exactly.
    pub fn verify(&self, ctx: &GroupContext) -> Result<GoldenReport> {
        if ctx.root_system().cartan_type() != Some(self.group) {
            return Err(Error::Precondition(format!("table is for {}", self.group)));
        }
        let d = ctx.deformed(&ctx.maximal(self.parabolic))?;
        let names = d.tau_names();
        let by_codim = d.classical().by_codim();
        let labels = self.labels();
        for (&c, ls) in &labels {
            let have = by_codim.get(c).map_or(0, Vec::len);
            if have != ls.len() {
                return Err(Error::Mismatch(format!(
                    "{}: codimension {c} has {have} classes but the table uses {}",
                    self.name,
                    ls.len()
                )));
            }
        }
        let choices: Vec<Vec<Vec<ElementId>>> = labels
            .keys()
            .map(|&c| by_codim[c].iter().copied().permutations(by_codim[c].len()).collect())
            .collect();
        let mut best: Option<(Vec<String>, BTreeMap<String, ElementId>)> = None;
        let mut tried = 0;
        for pick in choices.iter().multi_cartesian_product() {
            tried += 1;
            let mut map = BTreeMap::new();
            for (ls, ws) in labels.values().zip(pick) {
                for (l, &w) in ls.iter().zip(ws) {
                    map.insert(l.clone(), w);
                }
            }
            let bad = self.mismatches(&d, &map, &names)?;
            let done = bad.is_empty();
            if best.as_ref().is_none_or(|(b, _)| bad.len() < b.len()) {
                best = Some((bad, map));
            }
            if done {
                break;
            }
        }
        let (mismatches, map) = best.expect("at least one labeling");
        let g = d.weyl();
        Ok(GoldenReport {
            name: self.name.clone(),
            group: self.group.to_string(),
            parabolic: self.parabolic,
            passed: mismatches.is_empty(),
            entries: self.entries.len(),
            bijection: map.iter().map(|(l, &w)| (l.clone(), word_label(g.element(w).word()))).collect(),
            bijections_tried: tried,
            mismatches,
        })
    }
}

/// Verifies every bundled table.
pub fn verify_all() -> Result<Vec<GoldenReport>> {
    let mut ctxs: BTreeMap<CartanType, GroupContext> = BTreeMap::new();
    let mut out = Vec::new();
    for t in bundled()? {
        let ctx = match ctxs.entry(t.group) {
            Slot::Occupied(e) => e.into_mut(),
            Slot::Vacant(e) => e.insert(GroupContext::new(t.group)?),
        };
        out.push(t.verify(ctx)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_terms() {
        assert_eq!(parse_term("2t b4'", 1).unwrap(), Term { coef: 2, tau: 1, label: "b4'".into() });
        assert_eq!(parse_term("t^2 a4'", 1).unwrap(), Term { coef: 1, tau: 2, label: "a4'".into() });
        assert_eq!(parse_term("b5''", 1).unwrap(), Term { coef: 1, tau: 0, label: "b5''".into() });
        assert_eq!(parse_term("2 b6", 1).unwrap(), Term { coef: 2, tau: 0, label: "b6".into() });
        assert!(parse_term("2x b6", 1).is_err());
        assert_eq!(label_codim("b3''").unwrap(), 3);
    }

    #[test]
    fn bundled_tables_parse() {
        let ts = bundled().unwrap();
        assert_eq!(ts.len(), 4);
        let sizes: Vec<usize> = ts.iter().map(|t| t.entries.len()).collect();
        assert_eq!(sizes, vec![45, 22, 9, 45]);
    }

    #[test]
    fn c3_p1_matches_directly() {
        let ctx = GroupContext::parse("C3").unwrap();
        let t = bundled().unwrap().into_iter().find(|t| t.name == "c3_p1").unwrap();
        let r = t.verify(&ctx).unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
        assert_eq!(r.bijections_tried, 1);
    }

    #[test]
    fn corrupted_table_fails_with_diff() {
        let ctx = GroupContext::parse("C3").unwrap();
        let text = include_str!("../data/golden/c3_p1.txt").replace("a1 * a3 = a4", "a1 * a3 = 2 a4");
        let r = parse("bad", &text).unwrap().verify(&ctx).unwrap();
        assert!(!r.passed);
        assert_eq!(r.mismatches.len(), 1);
        assert!(r.mismatches[0].contains("a1 * a3"));
    }
}
