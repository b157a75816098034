//! Persistent structure-constant cache: one JSON file per `(type, Δ(P))`,
//! versioned and checksummed. Entries are keyed by reduced words so a file
//! stays meaningful independently of element numbering.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::rootsys::Parabolic;
use crate::weyl::word_label;

pub const CACHE_FORMAT: u32 = 1;
pub const CACHE_ENV: &str = "FLAGCALC_CACHE_DIR";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
struct Payload {
    /// `(u, v, [(w, c)])` with words as `s1s2` labels.
    entries: Vec<(String, String, Vec<(String, i64)>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    group: String,
    /// One-based simple roots of the Levi.
    levi: Vec<usize>,
    sha256: String,
    payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// The file existed but was rejected; it has been rewritten.
    Invalid(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn digest(p: &Payload) -> Result<String> {
    let bytes = serde_json::to_vec(p)?;
    Ok(hex::encode(Sha256::digest(bytes)))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$FLAGCALC_CACHE_DIR`, else `$XDG_CACHE_HOME/flagcalc`, else `~/.cache/flagcalc`.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return PathBuf::from(d);
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return PathBuf::from(d).join("flagcalc");
        }
        match std::env::var_os("HOME") {
            Some(h) => PathBuf::from(h).join(".cache").join("flagcalc"),
            None => std::env::temp_dir().join("flagcalc"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, ctx: &GroupContext, p: &Parabolic) -> PathBuf {
        let levi: Vec<String> = p.levi().iter().map(|i| (i + 1).to_string()).collect();
        let levi = if levi.is_empty() { "none".to_string() } else { levi.join("-") };
        self.dir.join(format!("{}_levi-{levi}.json", ctx.root_system().label()))
    }

    /// Loads the table into the ring memo if a valid file exists.
    pub fn load(&self, ctx: &GroupContext, p: &Parabolic) -> Result<CacheStatus> {
        let path = self.path(ctx, p);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheStatus::Miss),
            Err(e) => return Err(e.into()),
        };
        match self.parse(ctx, p, &text) {
            Ok(()) => Ok(CacheStatus::Hit),
            Err(e) => Ok(CacheStatus::Invalid(e.to_string())),
        }
    }

    fn parse(&self, ctx: &GroupContext, p: &Parabolic, text: &str) -> Result<()> {
        let f: CacheFile = serde_json::from_str(text)?;
        if f.format != CACHE_FORMAT {
            return Err(Error::Parse(format!("cache format {} (expected {CACHE_FORMAT})", f.format)));
        }
        let levi: Vec<usize> = p.levi().iter().map(|i| i + 1).collect();
        if f.group != ctx.root_system().label() || f.levi != levi {
            return Err(Error::Mismatch("cache key does not match its file name".into()));
        }
        if digest(&f.payload)? != f.sha256 {
            return Err(Error::Mismatch("cache checksum mismatch".into()));
        }
        let g = ctx.weyl();
        let id = |w: &str| crate::eigencone::parse_word(w).and_then(|word| g.from_word(&word));
        let mut entries = Vec::with_capacity(f.payload.entries.len());
        for (u, v, terms) in &f.payload.entries {
            let terms = terms.iter().map(|(w, c)| Ok((id(w)?, *c))).collect::<Result<Vec<_>>>()?;
            entries.push((id(u)?, id(v)?, terms));
        }
        ctx.ring(p)?.preload(entries)
    }

    /// Computes the full table of `G/P` and writes it atomically.
    pub fn store(&self, ctx: &GroupContext, p: &Parabolic) -> Result<PathBuf> {
        let ring = ctx.ring(p)?;
        let g = ctx.weyl();
        let label = |w| word_label(g.element(w).word());
        let payload = Payload {
            entries: ring
                .table()?
                .into_iter()
                .map(|(u, v, t)| (label(u), label(v), t.iter().map(|&(w, c)| (label(w), c)).collect()))
                .collect(),
        };
        let file = CacheFile {
            format: CACHE_FORMAT,
            group: ctx.root_system().label().into(),
            levi: p.levi().iter().map(|i| i + 1).collect(),
            sha256: digest(&payload)?,
            payload,
        };
        fs::create_dir_all(&self.dir)?;
        let path = self.path(ctx, p);
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Loads if possible, otherwise computes and stores.
    pub fn warm(&self, ctx: &GroupContext, p: &Parabolic) -> Result<CacheStatus> {
        let status = self.load(ctx, p)?;
        if status != CacheStatus::Hit {
            self.store(ctx, p)?;
        }
        Ok(status)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cold_and_warm_agree() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let p = Parabolic::maximal(3, 1);
        let cold = GroupContext::parse("B3").unwrap();
        assert_eq!(cache.warm(&cold, &p).unwrap(), CacheStatus::Miss);
        let warm = GroupContext::parse("B3").unwrap();
        assert_eq!(cache.warm(&warm, &p).unwrap(), CacheStatus::Hit);
        let (a, b) = (cold.ring(&p).unwrap(), warm.ring(&p).unwrap());
        assert_eq!(b.memo_len(), a.table().unwrap().len());
        let ta: Vec<_> = a.table().unwrap().into_iter().map(|(u, v, t)| (u, v, (*t).clone())).collect();
        let tb: Vec<_> = b.table().unwrap().into_iter().map(|(u, v, t)| (u, v, (*t).clone())).collect();
        assert_eq!(ta, tb);
    }

    #[test]
    fn corrupted_file_is_rejected_and_rewritten() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let ctx = GroupContext::parse("A2").unwrap();
        let p = Parabolic::borel();
        let path = cache.store(&ctx, &p).unwrap();
        let text = fs::read_to_string(&path).unwrap().replacen("1]", "2]", 1);
        fs::write(&path, text).unwrap();
        let fresh = GroupContext::parse("A2").unwrap();
        assert!(matches!(cache.warm(&fresh, &p).unwrap(), CacheStatus::Invalid(_)));
        assert_eq!(cache.load(&GroupContext::parse("A2").unwrap(), &p).unwrap(), CacheStatus::Hit);
    }
}
