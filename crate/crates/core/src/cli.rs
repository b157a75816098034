//! Command-line front end. Every command echoes its job description in the
//! output header so a run can be reproduced from its output.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::fmt_q;
use crate::cache::{Cache, CacheStatus};
use crate::context::GroupContext;
use crate::deform::{DeformedClass, DeformedRing};
use crate::eigencone::{parse_word, InequalitySystem, Mode, SystemJson};
use crate::error::{Error, Result};
use crate::golden;
use crate::horn::{self, DimensionDatum, HornReport, LeviData};
use crate::liecoh;
use crate::report::{class_labels, Format, Table};
use crate::rootsys::{CartanType, Parabolic, RootSystem};
use crate::schubert::{DEFAULT_MONOMIAL_CAP, ParabolicRing};
use crate::weyl::{ElementId, DEFAULT_WEYL_CAP};

pub const OUTPUT_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "flagcalc", version, about = "Exact Schubert calculus and deformed products on flag varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "markdown")]
    pub format: Format,
    /// Do not read or write the structure-constant cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Cache directory.
    #[arg(long, global = true, env = "FLAGCALC_CACHE_DIR")]
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Refuse Weyl groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_CAP)]
    pub weyl_cap: u128,
    /// Refuse polynomial computations needing more monomials than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MONOMIAL_CAP)]
    pub monomial_cap: u128,
    /// Write the report to this file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GroupArgs {
    /// Cartan family, A to G.
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ParabolicArgs {
    /// Maximal parabolic: one-based index of the omitted simple root.
    #[arg(long, conflicts_with = "levi")]
    pub parabolic: Option<usize>,
    /// Levi simple roots, one-based and comma separated; empty or `none` for the Borel.
    #[arg(long)]
    pub levi: Option<String>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Cartan matrix, positive roots, ρ and fundamental (co)weights.
    Roots {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Minimal coset representatives with lengths, codimensions and duals.
    Weyl {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
    },
    /// Product of two Schubert classes, classical and deformed.
    Product {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
        /// Reduced words such as `s1s2` (or `e`).
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Full multiplication table of the deformed product.
    DeformTable {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
        /// Label letter (default: lowercase family letter).
        #[arg(long)]
        letter: Option<char>,
        /// Emit the `lhs * rhs = terms` line format of the bundled tables.
        #[arg(long)]
        lines: bool,
    },
    /// L-movability of a tuple.
    Lmovable {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
        /// Comma-separated reduced words.
        #[arg(long)]
        tuple: String,
    },
    /// Character and dimension inequalities for a tuple.
    HornCheck {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
        #[arg(long)]
        tuple: String,
        /// Levi of `Q ⊆ P` for the dimension check (one-based, comma separated).
        #[arg(long, requires_all = ["qhat", "u"])]
        q: Option<String>,
        /// Levi of `Q̂ ⊇ Q`.
        #[arg(long)]
        qhat: Option<String>,
        /// Comma-separated words of the Levi tuple, in ambient simple reflections.
        #[arg(long)]
        u: Option<String>,
    },
    /// Inequality system of the eigencone.
    Eigencone {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value = "classical")]
        mode: String,
        /// Accept any nonzero point coefficient instead of exactly 1.
        #[arg(long)]
        relaxed: bool,
        /// Mark redundant inequalities.
        #[arg(long)]
        prune: bool,
        /// Also list every inequality.
        #[arg(long)]
        list: bool,
        /// Write the system as JSON to this file.
        #[arg(long)]
        #[serde(skip)]
        save: Option<PathBuf>,
    },
    /// Re-runs redundancy pruning on a saved system.
    Redundancy {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Compares `⊙₀` on `G/B` with the inversion-set rule.
    LeviprodCheck {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Checks the bundled reference tables.
    VerifyGolden {
        /// Only this table (b3_p2, b3_p3, c3_p1, c3_p2).
        #[arg(long)]
        table: Option<String>,
    },
    /// Zero products passing every character inequality.
    HornConverseExperiment {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        parabolic: ParabolicArgs,
        #[arg(long, default_value_t = 3)]
        s: usize,
        /// How many passing tuples to list.
        #[arg(long, default_value_t = 10)]
        show: usize,
    },
}

/// The validated job: command arguments plus global settings.
#[derive(Debug, Clone, Serialize)]
pub struct JobSpec {
    #[serde(flatten)]
    pub command: Command,
    pub format: Format,
    pub cache: bool,
    pub weyl_cap: String,
    pub monomial_cap: String,
}

impl JobSpec {
    fn header_line(&self) -> String {
        let v = serde_json::to_value(self).unwrap_or(Value::Null);
        let mut parts = Vec::new();
        if let Value::Object(m) = v {
            if let Some(Value::String(c)) = m.get("command") {
                parts.push(c.clone());
            }
            let mut flat = Vec::new();
            for (k, x) in m.iter().filter(|(k, _)| *k != "command") {
                match x {
                    Value::Object(inner) => flat.extend(inner.iter().map(|(k, v)| (k.clone(), v.clone()))),
                    other => flat.push((k.clone(), other.clone())),
                }
            }
            for (k, x) in flat {
                let s = match x {
                    Value::Null => continue,
                    Value::String(s) => s,
                    other => other.to_string(),
                };
                parts.push(format!("{k}={s}"));
            }
        }
        format!("flagcalc {}", parts.join(" "))
    }
}

struct Out {
    format: Format,
    tables: Vec<Table>,
    notes: Vec<String>,
    json: BTreeMap<String, Value>,
}

impl Out {
    fn new(format: Format) -> Self {
        Out { format, tables: Vec::new(), notes: Vec::new(), json: BTreeMap::new() }
    }

    fn table(&mut self, t: Table) {
        self.tables.push(t);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn data(&mut self, k: &str, v: impl Serialize) -> Result<()> {
        self.json.insert(k.into(), serde_json::to_value(v)?);
        Ok(())
    }

    fn render(self, job: &JobSpec) -> Result<String> {
        let mut s = String::new();
        match self.format {
            Format::Json => {
                let mut m = serde_json::Map::new();
                m.insert("version".into(), json!(OUTPUT_VERSION));
                m.insert("job".into(), serde_json::to_value(job)?);
                for (k, v) in self.json {
                    m.insert(k, v);
                }
                if !self.notes.is_empty() {
                    m.insert("notes".into(), json!(self.notes));
                }
                s = serde_json::to_string_pretty(&Value::Object(m))?;
                s.push('\n');
            }
            Format::Markdown => {
                let _ = writeln!(s, "# {}\n", job.header_line());
                for t in &self.tables {
                    s.push_str(&t.markdown());
                    s.push('\n');
                }
                for n in &self.notes {
                    let _ = writeln!(s, "{n}");
                }
            }
            Format::Csv => {
                let _ = writeln!(s, "# {}", job.header_line());
                for t in &self.tables {
                    s.push_str(&t.csv()?);
                }
                for n in &self.notes {
                    let _ = writeln!(s, "# {n}");
                }
            }
        }
        Ok(s)
    }
}

/// Outcome of a run: exit status and everything to print on stdout.
#[derive(Debug)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Env {
    global: Global,
    cache: Option<Cache>,
}

impl Env {
    fn context(&self, g: &GroupArgs) -> Result<GroupContext> {
        let ct = cartan(g)?;
        GroupContext::with_caps(Arc::new(RootSystem::new(ct)), self.global.weyl_cap, self.global.monomial_cap)
    }

    /// Loads (or fills) the cache for `G/P`; returns a status note.
    fn warm(&self, ctx: &GroupContext, p: &Parabolic) -> Result<Option<String>> {
        let Some(c) = &self.cache else {
            return Ok(None);
        };
        let st = c.warm(ctx, p)?;
        Ok(match st {
            CacheStatus::Invalid(why) => Some(format!("cache file for {} {p} rejected ({why}); rebuilt", ctx.root_system().label())),
            _ => None,
        })
    }
}

fn cartan(g: &GroupArgs) -> Result<CartanType> {
    format!("{}{}", g.family.trim().to_ascii_uppercase(), g.rank).parse()
}

fn parse_levi(s: &str, rank: usize) -> Result<Parabolic> {
    let s = s.trim();
    if s.is_empty() || s == "none" {
        return Ok(Parabolic::borel());
    }
    let ids = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().ok().filter(|&i| i >= 1 && i <= rank).map(|i| i - 1))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidParabolic(format!("bad Levi list {s:?} for rank {rank}")))?;
    Ok(Parabolic::from_levi(ids))
}

fn parabolic(p: &ParabolicArgs, rank: usize) -> Result<Parabolic> {
    match (&p.parabolic, &p.levi) {
        (Some(i), _) => {
            if *i == 0 || *i > rank {
                return Err(Error::InvalidParabolic(format!("index {i} out of range 1..={rank}")));
            }
            Ok(Parabolic::maximal(rank, i - 1))
        }
        (None, Some(l)) => parse_levi(l, rank),
        (None, None) => Err(Error::InvalidParabolic("give --parabolic N or --levi LIST".into())),
    }
}

fn element(ctx: &GroupContext, w: &str) -> Result<ElementId> {
    let word = parse_word(w)?;
    if word.iter().any(|&i| i >= ctx.rank()) {
        return Err(Error::Parse(format!("word {w:?} uses a reflection beyond rank {}", ctx.rank())));
    }
    ctx.weyl().from_word(&word)
}

fn tuple(ctx: &GroupContext, ring: &ParabolicRing, s: &str) -> Result<Vec<ElementId>> {
    s.split(',')
        .map(|w| {
            let x = element(ctx, w)?;
            ring.check_rep(x)?;
            Ok(x)
        })
        .collect()
}

fn render_class(d: &DeformedRing, c: &DeformedClass, label: &dyn Fn(ElementId) -> String) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let names = d.tau_names();
    let mut parts = Vec::new();
    for (&w, p) in &c.terms {
        let coef = p.render(&names);
        let l = label(w);
        parts.push(if coef == "1" {
            l
        } else if p.terms.len() > 1 {
            format!("({coef}) {l}")
        } else {
            format!("{coef} {l}")
        });
    }
    parts.join(" + ")
}

fn letter_for(ctx: &GroupContext) -> char {
    ctx.root_system().label().chars().next().unwrap_or('x').to_ascii_lowercase()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: Cli) -> RunOutput {
    let job = JobSpec {
        command: cli.command.clone(),
        format: cli.global.format,
        cache: !cli.global.no_cache,
        weyl_cap: cli.global.weyl_cap.to_string(),
        monomial_cap: cli.global.monomial_cap.to_string(),
    };
    let cache = (!cli.global.no_cache).then(|| Cache::new(cli.global.cache_dir.clone().unwrap_or_else(Cache::default_dir)));
    let env = Env { global: cli.global.clone(), cache };
    let go = || dispatch(&env, &job);
    let result = match cli.global.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(go),
            Err(e) => Err(Error::Precondition(format!("thread pool: {e}"))),
        },
        None => go(),
    };
    match result {
        Ok((code, out, err)) => match &cli.global.output {
            Some(path) => match std::fs::write(path, &out) {
                Ok(()) => RunOutput { code, stdout: String::new(), stderr: err },
                Err(e) => RunOutput { code: 1, stdout: String::new(), stderr: format!("{err}error: {e}\n") },
            },
            None => RunOutput { code, stdout: out, stderr: err },
        },
        Err(e) => RunOutput { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(env: &Env, job: &JobSpec) -> Result<(i32, String, String)> {
    let mut out = Out::new(job.format);
    let mut code = 0;
    let mut err = String::new();
    match &job.command {
        Command::Roots { group } => roots(env, group, &mut out)?,
        Command::Weyl { group, parabolic: pa } => {
            let ctx = env.context(group)?;
            let p = parabolic(pa, ctx.rank())?;
            weyl_table(&ctx, &p, &mut out)?;
        }
        Command::Product { group, parabolic: pa, u, v } => {
            let ctx = env.context(group)?;
            let p = parabolic(pa, ctx.rank())?;
            err.extend(env.warm(&ctx, &p)?);
            product(&ctx, &p, u, v, &mut out)?;
        }
        Command::DeformTable { group, parabolic: pa, letter, lines } => {
            let ctx = env.context(group)?;
            let p = parabolic(pa, ctx.rank())?;
            err.extend(env.warm(&ctx, &p)?);
            let text = deform_table(&ctx, &p, letter.unwrap_or_else(|| letter_for(&ctx)), *lines, &mut out)?;
            if let Some(t) = text {
                return Ok((0, t, err));
            }
        }
        Command::Lmovable { group, parabolic: pa, tuple: t } => {
            let ctx = env.context(group)?;
            let p = parabolic(pa, ctx.rank())?;
            err.extend(env.warm(&ctx, &p)?);
            let d = ctx.deformed(&p)?;
            let ws = tuple(&ctx, d.classical(), t)?;
            let m = d.is_l_movable(&ws)?;
            let mut tab = Table::new("L-movability", &["tuple", "d", "values at x_i", "movable"]);
            tab.row(vec![
                ws.iter().map(|&w| d.label(w)).collect::<Vec<_>>().join(", "),
                m.d.to_string(),
                m.values.iter().map(|(i, x)| format!("x{i}:{x}")).collect::<Vec<_>>().join(" "),
                m.movable.to_string(),
            ]);
            out.table(tab);
            out.data("lmovability", &m)?;
        }
        Command::HornCheck { group, parabolic: pa, tuple: t, q, qhat, u } => {
            let ctx = env.context(group)?;
            let p = parabolic(pa, ctx.rank())?;
            err.extend(env.warm(&ctx, &p)?);
            let d = ctx.deformed(&p)?;
            let ws = tuple(&ctx, d.classical(), t)?;
            let mut reports = Vec::new();
            if let (Some(q), Some(qhat), Some(u)) = (q, qhat, u) {
                let q = parse_levi(q, ctx.rank())?;
                let qhat = parse_levi(qhat, ctx.rank())?;
                let levi = LeviData::new(&ctx, &p)?;
                let us = u
                    .split(',')
                    .map(|w| {
                        let word = parse_word(w)?;
                        let sub: Vec<usize> = word
                            .iter()
                            .map(|i| levi.sub.simple_map.iter().position(|x| x == i))
                            .collect::<Option<_>>()
                            .ok_or_else(|| Error::Precondition(format!("{w} is not in the Levi Weyl group")))?;
                        let x = levi.ctx.weyl().from_word(&sub)?;
                        levi.ring(&q)?.check_rep(x)?;
                        Ok(x)
                    })
                    .collect::<Result<Vec<_>>>()?;
                reports.push(horn::check_dimension(&ctx, &p, &levi, &ws, &DimensionDatum { q, qhat, us })?);
            } else {
                let h = horn::HornEngine::new(&ctx, &p, ws.len())?;
                reports.push(h.check_t2(&ws)?);
                if d.is_l_movable(&ws)?.movable {
                    reports.push(h.check_t2prime(&ws)?);
                }
            }
            for r in &reports {
                out.table(horn_table(r));
                if !r.passed() {
                    code = 4;
                }
            }
            out.data("reports", &reports)?;
        }
        Command::Eigencone { group, s, mode, relaxed, prune, list, save } => {
            let ctx = env.context(group)?;
            let mode: Mode = mode.parse()?;
            for i in 1..=ctx.rank() {
                err.extend(env.warm(&ctx, &ctx.maximal(i))?);
            }
            let mut sys = InequalitySystem::generate(&ctx, *s, mode, *relaxed)?;
            if *prune {
                sys.prune()?;
            }
            system_output(&sys, *list, &mut out)?;
            if let Some(path) = save {
                std::fs::write(path, serde_json::to_string_pretty(&sys.to_json())?)?;
            }
        }
        Command::Redundancy { input, list } => {
            let j: SystemJson = serde_json::from_str(&std::fs::read_to_string(input)?)?;
            let ct: CartanType = j.group.parse()?;
            let ctx = GroupContext::with_caps(Arc::new(RootSystem::new(ct)), env.global.weyl_cap, env.global.monomial_cap)?;
            let mut sys = InequalitySystem::from_json(&ctx, &j)?;
            let before = sys.redundant.clone();
            sys.prune()?;
            if before.is_some() && before != sys.redundant {
                out.note("stored redundancy marks differ from the recomputed ones");
                code = 4;
            }
            system_output(&sys, *list, &mut out)?;
        }
        Command::LeviprodCheck { group } => {
            let ctx = env.context(group)?;
            err.extend(env.warm(&ctx, &Parabolic::borel())?);
            let r = liecoh::crosscheck_gb(&ctx)?;
            let mut t = Table::new("G/B structure constants against the inversion-set rule", &["group", "pairs", "nonzero", "mismatches", "result"]);
            t.row(vec![r.group.clone(), r.pairs.to_string(), r.nonzero.to_string(), r.mismatches.to_string(), pass(r.passed)]);
            out.table(t);
            if let Some(m) = &r.first_mismatch {
                out.note(format!("first mismatch: {m}"));
            }
            if !r.passed {
                code = 4;
            }
            out.data("report", &r)?;
        }
        Command::VerifyGolden { table } => {
            let mut reports = Vec::new();
            let mut ctxs: BTreeMap<CartanType, GroupContext> = BTreeMap::new();
            let tables = golden::bundled()?;
            if let Some(name) = table {
                if !tables.iter().any(|t| &t.name == name) {
                    return Err(Error::Precondition(format!("no bundled table {name:?}")));
                }
            }
            for t in tables.into_iter().filter(|t| table.as_ref().is_none_or(|n| &t.name == n)) {
                let ctx = match ctxs.entry(t.group) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(GroupContext::with_caps(Arc::new(RootSystem::new(t.group)), env.global.weyl_cap, env.global.monomial_cap)?),
                };
                err.extend(env.warm(ctx, &ctx.maximal(t.parabolic))?);
                reports.push(t.verify(ctx)?);
            }
            let mut summary = Table::new("Reference tables", &["table", "group", "parabolic", "entries", "labelings tried", "result"]);
            for r in &reports {
                summary.row(vec![
                    r.name.clone(),
                    r.group.clone(),
                    format!("P{}", r.parabolic),
                    r.entries.to_string(),
                    r.bijections_tried.to_string(),
                    pass(r.passed),
                ]);
            }
            out.table(summary);
            for r in &reports {
                let mut t = Table::new(format!("{} labeling", r.name), &["label", "word"]);
                for (l, w) in &r.bijection {
                    t.row(vec![l.clone(), w.clone()]);
                }
                out.table(t);
                for m in &r.mismatches {
                    out.note(format!("{}: {m}", r.name));
                }
                if !r.passed {
                    code = 4;
                }
            }
            out.data("reports", &reports)?;
        }
        Command::HornConverseExperiment { group, parabolic: pa, s, show } => {
            let ctx = env.context(group)?;
            let ps = if pa.parabolic.is_none() && pa.levi.is_none() {
                Parabolic::all(ctx.rank())
            } else {
                vec![parabolic(pa, ctx.rank())?]
            };
            let mut t = Table::new(
                format!("Zero products of {s} classes against the character inequalities"),
                &["parabolic", "tuples", "zero product", "rejected", "passing"],
            );
            let mut reports = Vec::new();
            for p in &ps {
                err.extend(env.warm(&ctx, p)?);
                let r = horn::converse_experiment(&ctx, p, *s)?;
                t.row(vec![p.to_string(), r.tuples.to_string(), r.zero.to_string(), r.detected.to_string(), r.passing.len().to_string()]);
                reports.push(r);
            }
            out.table(t);
            let mut ex = Table::new("Passing zero products", &["parabolic", "tuple"]);
            for r in &reports {
                for tu in r.passing.iter().take(*show) {
                    ex.row(vec![r.parabolic.clone(), tu.join(", ")]);
                }
            }
            if !ex.rows.is_empty() {
                out.table(ex);
            }
            out.data("reports", &reports)?;
        }
    }
    Ok((code, out.render(job)?, err))
}

fn pass(b: bool) -> String {
    if b { "PASS" } else { "FAIL" }.into()
}

fn roots(env: &Env, group: &GroupArgs, out: &mut Out) -> Result<()> {
    let ct = cartan(group)?;
    let rs = RootSystem::new(ct);
    let r = rs.rank();
    let mut cm = Table::new(format!("Cartan matrix of {ct} (entry i,j = ⟨α_j, α_i∨⟩)"), &[]);
    cm.headers = std::iter::once(String::new()).chain((1..=r).map(|j| format!("α{j}"))).collect();
    for i in 0..r {
        let mut row = vec![format!("α{}∨", i + 1)];
        row.extend((0..r).map(|j| rs.cartan(i, j).to_string()));
        cm.row(row);
    }
    out.table(cm);
    let mut pr = Table::new(format!("Positive roots ({})", rs.num_positive()), &["#", "simple-root coordinates", "height", "⟨β,β⟩"]);
    for (k, b) in rs.positive_roots().iter().enumerate() {
        pr.row(vec![(k + 1).to_string(), format!("{b:?}"), b.iter().sum::<i64>().to_string(), rs.inner_int(b, b).to_string()]);
    }
    out.table(pr);
    let vecq = |v: &[crate::arith::Q]| format!("[{}]", v.iter().map(fmt_q).collect::<Vec<_>>().join(", "));
    let mut w = Table::new("Weights in simple-root coordinates, coweights in simple-coroot coordinates", &["name", "coordinates"]);
    w.row(vec!["ρ".into(), vecq(&rs.rho().root_coords(&rs))]);
    for i in 0..r {
        w.row(vec![format!("ω{}", i + 1), vecq(&rs.fundamental_weight(i).root_coords(&rs))]);
    }
    for i in 0..r {
        w.row(vec![format!("x{}", i + 1), vecq(&rs.fundamental_coweight(i).coords)]);
    }
    out.table(w);
    out.data("cartan", rs.cartan_data())?;
    out.data("rho", rs.rho().root_coords(&rs).iter().map(fmt_q).collect::<Vec<_>>())?;
    out.data(
        "fundamental_weights",
        (0..r).map(|i| rs.fundamental_weight(i).root_coords(&rs).iter().map(fmt_q).collect::<Vec<_>>()).collect::<Vec<_>>(),
    )?;
    out.data(
        "fundamental_coweights",
        (0..r).map(|i| rs.fundamental_coweight(i).coords.iter().map(fmt_q).collect::<Vec<_>>()).collect::<Vec<_>>(),
    )?;
    let _ = env;
    Ok(())
}

fn weyl_table(ctx: &GroupContext, p: &Parabolic, out: &mut Out) -> Result<()> {
    let g = ctx.weyl();
    let ring = ctx.ring(p)?;
    let labels = class_labels(&ring, letter_for(ctx));
    let mut t = Table::new(
        format!("W^P for {} {p}: |W| = {}, |W^P| = {}, dim G/P = {}", ctx.root_system().label(), g.order(), ring.reps().len(), ring.dim()),
        &["label", "word", "length", "codim", "dual"],
    );
    let mut rows = Vec::new();
    for &w in ring.reps() {
        rows.push(json!({"label": labels[&w], "word": g.label(w), "length": g.length(w), "codim": ring.codim(w), "dual": g.label(ring.star(w))}));
        t.row(vec![labels[&w].clone(), g.label(w), g.length(w).to_string(), ring.codim(w).to_string(), labels[&ring.star(w)].clone()]);
    }
    out.table(t);
    out.data("order", g.order().to_string())?;
    out.data("dim", ring.dim())?;
    out.data("elements", rows)?;
    Ok(())
}

fn product(ctx: &GroupContext, p: &Parabolic, u: &str, v: &str, out: &mut Out) -> Result<()> {
    let d = ctx.deformed(p)?;
    let (u, v) = (element(ctx, u)?, element(ctx, v)?);
    let ring = d.classical();
    ring.check_rep(u)?;
    ring.check_rep(v)?;
    let g = ctx.weyl().clone();
    let label = |w: ElementId| g.label(w);
    let prod = d.product(u, v)?;
    let mut t = Table::new("Product in the basis of Schubert classes [Λ̄_w]", &["u", "v", "cup product", "deformed product", "⊙₀"]);
    let classical = DeformedClass { terms: prod.terms.iter().map(|(&w, p)| (w, crate::deform::TauPoly::monomial(vec![0; d.nvars()], p.at_one()))).collect() };
    let zero = DeformedClass {
        terms: prod.terms.iter().filter(|(_, p)| p.at_zero() != 0).map(|(&w, p)| (w, crate::deform::TauPoly::monomial(vec![0; d.nvars()], p.at_zero()))).collect(),
    };
    t.row(vec![label(u), label(v), render_class(&d, &classical, &label), render_class(&d, &prod, &label), render_class(&d, &zero, &label)]);
    out.table(t);
    let terms: Vec<Value> = prod
        .terms
        .iter()
        .map(|(&w, p)| {
            json!({"class": label(w), "codim": ring.codim(w), "coefficient": p.render(&d.tau_names()), "classical": p.at_one(), "at_zero": p.at_zero()})
        })
        .collect();
    out.data("product", json!({"u": label(u), "v": label(v), "terms": terms}))?;
    Ok(())
}

fn deform_table(ctx: &GroupContext, p: &Parabolic, letter: char, lines: bool, out: &mut Out) -> Result<Option<String>> {
    let d = ctx.deformed(p)?;
    let ring = d.classical().clone();
    let g = ctx.weyl().clone();
    let labels = class_labels(&ring, letter);
    let label = |w: ElementId| labels[&w].clone();
    // rows in codimension order, skipping the unit
    let order: Vec<ElementId> = ring.by_codim().into_iter().skip(1).flatten().collect();
    let mut entries = Vec::new();
    for (a, &u) in order.iter().enumerate() {
        for &v in &order[a..] {
            if ring.codim(u) + ring.codim(v) > ring.dim() {
                continue;
            }
            entries.push((u, v, render_class(&d, &d.product(u, v)?, &label)));
        }
    }
    if lines {
        let mut s = String::new();
        let _ = writeln!(s, "group {}", ctx.root_system().label());
        if let [i] = p.complement(ctx.rank())[..] {
            let _ = writeln!(s, "parabolic {}", i + 1);
        } else {
            let _ = writeln!(s, "# levi {p}");
        }
        for (u, v, r) in &entries {
            let _ = writeln!(s, "{} * {} = {r}", label(*u), label(*v));
        }
        return Ok(Some(s));
    }
    let mut legend = Table::new(format!("Classes of {} {p}", ctx.root_system().label()), &["label", "word", "codim"]);
    for &w in std::iter::once(&ring.unit()).chain(order.iter()) {
        legend.row(vec![label(w), g.label(w), ring.codim(w).to_string()]);
    }
    out.table(legend);
    let names = d.tau_names();
    let mut t = Table::new(format!("Deformed product (τ variables: {})", names.join(", ")), &["u", "v", "u ⊙ v"]);
    let mut js = Vec::new();
    for (u, v, r) in &entries {
        t.row(vec![label(*u), label(*v), r.clone()]);
        js.push(json!({"u": label(*u), "v": label(*v), "product": r}));
    }
    out.table(t);
    out.data("labels", ring.reps().iter().map(|&w| (label(w), g.label(w))).collect::<BTreeMap<_, _>>())?;
    out.data("entries", js)?;
    Ok(None)
}

fn horn_table(r: &HornReport) -> Table {
    let title = format!(
        "{} {} ({}){}",
        r.group,
        r.parabolic,
        r.tuple.join(", "),
        match (r.d, r.applicable) {
            (_, false) => format!(": not applicable, {}", r.note.clone().unwrap_or_default()),
            (Some(d), true) => format!(", d = {d}"),
            (None, true) => String::new(),
        }
    );
    let mut t = Table::new(title, &["kind", "lhs", "relation", "rhs", "holds", "data"]);
    for c in &r.checks {
        let rel = match c.relation {
            horn::Relation::Le => "≤",
            horn::Relation::Eq => "=",
            horn::Relation::Ge => "≥",
        };
        t.row(vec![format!("{:?}", c.kind), c.lhs.to_string(), rel.into(), c.rhs.to_string(), c.pass.to_string(), c.data.clone()]);
    }
    t
}

fn system_output(sys: &InequalitySystem, list: bool, out: &mut Out) -> Result<()> {
    let mut t = Table::new(
        format!("{} inequalities, s = {}, {} mode{}", sys.group, sys.s, sys.mode, if sys.relaxed { ", relaxed" } else { "" }),
        &["parabolic", "inequalities", "redundant"],
    );
    for i in 1..=sys.rank() {
        let idx: Vec<usize> = (0..sys.len()).filter(|&k| sys.inequalities[k].parabolic == i).collect();
        let red = sys.redundant.as_ref().map_or("-".into(), |r| idx.iter().filter(|&&k| r[k]).count().to_string());
        t.row(vec![format!("P{i}"), idx.len().to_string(), red]);
    }
    let cred = sys.chamber_redundant.as_ref().map_or("-".into(), |r| r.iter().filter(|&&b| b).count().to_string());
    t.row(vec!["chamber".into(), sys.chamber_len().to_string(), cred]);
    t.row(vec![
        "total".into(),
        sys.total_len().to_string(),
        sys.total_redundant().map_or("-".into(), |x| x.to_string()),
    ]);
    out.table(t);
    if list {
        let mut l = Table::new("Inequalities ω_P(Σ w_j⁻¹ h_j) ≤ 0, coefficients on fundamental-coweight coordinates", &["#", "P", "tuple", "coefficients", "redundant"]);
        for (k, q) in sys.inequalities.iter().enumerate() {
            l.row(vec![
                (k + 1).to_string(),
                format!("P{}", q.parabolic),
                q.words.join(", "),
                q.coeffs.iter().map(|c| format!("[{}]", c.iter().map(fmt_q).collect::<Vec<_>>().join(", "))).collect::<Vec<_>>().join(" "),
                sys.redundant.as_ref().map_or("-".into(), |r| r[k].to_string()),
            ]);
        }
        out.table(l);
    }
    out.data("summary", json!({"inequalities": sys.len(), "chamber": sys.chamber_len(), "total": sys.total_len(), "redundant": sys.total_redundant()}))?;
    out.data("system", sys.to_json())?;
    Ok(())
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let r = run_args(std::env::args_os());
    print!("{}", r.stdout);
    eprint!("{}", r.stderr);
    r.code
}
