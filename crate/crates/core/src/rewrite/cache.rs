//! On-disk cache of completed rule sets.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{RewriteRule, RewriteSystem, Variant, ORDER_ID};
use crate::algebra::{Element, Letter, Presentation, Word};
use crate::syntax::parse_scalar;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt cache file {path}: {msg}")]
    Corrupt { path: String, msg: String },
    #[error("cache file {path} has version {found}, expected {expected}")]
    VersionMismatch {
        path: String,
        found: u64,
        expected: u32,
    },
}

/// What a cached rule set was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub cartan: String,
    pub dseq: String,
    pub variant: Variant,
    pub bound: usize,
}

impl CacheKey {
    pub fn for_presentation(p: &Presentation, variant: Variant, bound: usize) -> Self {
        CacheKey {
            cartan: p.cartan.key(),
            dseq: p.dseq.to_string(),
            variant,
            bound,
        }
    }

    pub fn of(sys: &RewriteSystem) -> Self {
        Self::for_presentation(sys.presentation(), sys.variant(), sys.bound())
    }

    fn file_name(&self) -> String {
        format!(
            "{}_{}_{}_L{}.json",
            self.cartan,
            self.dseq.replace('|', "-"),
            self.variant.name(),
            self.bound
        )
    }
}

#[derive(Serialize, Deserialize)]
struct CacheTerm {
    word: Vec<String>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct CacheRule {
    lhs: Vec<String>,
    rhs: Vec<CacheTerm>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    cartan: String,
    dseq: String,
    order: String,
    variant: Variant,
    bound: usize,
    confluent_up_to: usize,
    rules: Vec<CacheRule>,
}

fn letters(w: &Word) -> Vec<String> {
    w.iter().map(|l| l.to_string()).collect()
}

pub fn cache_path(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(key.file_name())
}

/// Writes the rule set atomically (temporary file, then rename).
pub fn cache_store(dir: &Path, sys: &RewriteSystem) -> Result<PathBuf, CacheError> {
    let key = CacheKey::of(sys);
    let file = CacheFile {
        version: CACHE_VERSION,
        cartan: key.cartan.clone(),
        dseq: key.dseq.clone(),
        order: ORDER_ID.to_string(),
        variant: key.variant,
        bound: key.bound,
        confluent_up_to: sys.confluent_up_to(),
        rules: sys
            .rules()
            .iter()
            .map(|r| CacheRule {
                lhs: letters(&r.lhs),
                rhs: r
                    .rhs
                    .terms()
                    .map(|(w, c)| CacheTerm {
                        word: letters(w),
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect(),
    };
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, &key);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &file).map_err(std::io::Error::other)?;
    tmp.flush()?;
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

/// Loads a rule set for `presentation`. A missing file or a key mismatch is
/// a miss (`Ok(None)`); an unreadable file or a different version is an error.
pub fn cache_load(
    dir: &Path,
    presentation: Arc<Presentation>,
    variant: Variant,
    bound: usize,
) -> Result<Option<RewriteSystem>, CacheError> {
    let key = CacheKey::for_presentation(&presentation, variant, bound);
    let path = cache_path(dir, &key);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let shown = path.display().to_string();
    let corrupt = |msg: String| CacheError::Corrupt {
        path: shown.clone(),
        msg,
    };
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
    let found = value
        .get("version")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| corrupt("missing version".into()))?;
    if found != CACHE_VERSION as u64 {
        return Err(CacheError::VersionMismatch {
            path: shown,
            found,
            expected: CACHE_VERSION,
        });
    }
    let file: CacheFile = serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))?;
    if file.cartan != key.cartan
        || file.dseq != key.dseq
        || file.variant != variant
        || file.bound != bound
        || file.order != ORDER_ID
    {
        return Ok(None);
    }
    let word = |ls: &[String]| -> Result<Word, CacheError> {
        ls.iter()
            .map(|s| s.parse::<Letter>().map_err(|e| corrupt(e.to_string())))
            .collect()
    };
    let mut rules = Vec::with_capacity(file.rules.len());
    for r in &file.rules {
        let mut rhs = Element::zero();
        for t in &r.rhs {
            let c = parse_scalar(&t.coeff).map_err(|e| corrupt(e.to_string()))?;
            rhs.add_term(word(&t.word)?, c);
        }
        rules.push(RewriteRule {
            lhs: word(&r.lhs)?,
            rhs,
        });
    }
    Ok(Some(RewriteSystem::from_rules(
        presentation,
        variant,
        bound,
        file.confluent_up_to,
        rules,
    )))
}

/// Summary lines `(file name, rule count)` for every cache file in `dir`.
pub fn cache_info(dir: &Path) -> Result<Vec<(String, usize)>, CacheError> {
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = fs::read_to_string(&path)?;
            let count = serde_json::from_str::<serde_json::Value>(&text)
                .ok()
                .and_then(|v| v.get("rules").and_then(|r| r.as_array()).map(|a| a.len()))
                .unwrap_or(0);
            out.push((
                path.file_name().unwrap().to_string_lossy().into_owned(),
                count,
            ));
        }
    }
    out.sort();
    Ok(out)
}
