//! Session settings from flags and an optional JSON config file. Flags win.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;
use weakhopf::algebra::{DseqError, TypeSequence};
use weakhopf::cartan::{CartanData, CartanError};
use weakhopf::coeff::{rat_int, Rational};
use weakhopf::session::DEFAULT_BOUND;
use weakhopf::syntax::{parse_rational, ParseError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("bad JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("no Cartan data: pass --type or --matrix")]
    MissingCartan,
    #[error("pass only one of --type and --matrix")]
    BothCartan,
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Dseq(#[from] DseqError),
    #[error("bound must be at least 2, got {0}")]
    Bound(usize),
    #[error("bad q value: {0}")]
    Q(ParseError),
    #[error("q = {0} is not admissible (must avoid 0, 1, -1)")]
    QValue(String),
}

/// Matrix given inline in a config file, or as a path to a JSON file.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixSource {
    Inline(Vec<Vec<i32>>),
    Path(PathBuf),
}

/// Keys accepted in the config file; all optional.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    pub cartan_type: Option<String>,
    pub matrix: Option<MatrixSource>,
    pub dseq: Option<String>,
    pub bound: Option<usize>,
    pub q: Option<String>,
    pub cache_dir: Option<PathBuf>,
    pub json: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| ConfigError::Json {
            path: path.display().to_string(),
            source,
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct FlagConfig {
    pub cartan_type: Option<String>,
    pub matrix: Option<PathBuf>,
    pub dseq: Option<String>,
    pub bound: Option<usize>,
    pub q: Option<String>,
    pub cache_dir: Option<PathBuf>,
    pub json: bool,
}

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub cartan: CartanData,
    pub dseq: TypeSequence,
    pub bound: usize,
    pub q: Option<Rational>,
    pub cache_dir: Option<PathBuf>,
    pub json: bool,
}

fn read_matrix(path: &Path) -> Result<Vec<Vec<i32>>, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| ConfigError::Json {
        path: path.display().to_string(),
        source,
    })
}

impl SessionConfig {
    /// Merges flags over the file config. With neither `dseq` given, all
    /// generators are type 1.
    pub fn resolve(flags: &FlagConfig, file: &FileConfig) -> Result<SessionConfig, ConfigError> {
        let cartan = if flags.cartan_type.is_some() || flags.matrix.is_some() {
            match (&flags.cartan_type, &flags.matrix) {
                (Some(_), Some(_)) => return Err(ConfigError::BothCartan),
                (Some(t), None) => CartanData::from_name(t)?,
                (None, Some(p)) => CartanData::validate(read_matrix(p)?)?,
                (None, None) => unreachable!(),
            }
        } else {
            match (&file.cartan_type, &file.matrix) {
                (Some(_), Some(_)) => return Err(ConfigError::BothCartan),
                (Some(t), None) => CartanData::from_name(t)?,
                (None, Some(MatrixSource::Inline(m))) => CartanData::validate(m.clone())?,
                (None, Some(MatrixSource::Path(p))) => CartanData::validate(read_matrix(p)?)?,
                (None, None) => return Err(ConfigError::MissingCartan),
            }
        };
        let dseq = match flags.dseq.as_ref().or(file.dseq.as_ref()) {
            Some(s) => TypeSequence::parse(s, cartan.n)?,
            None => TypeSequence::uniform(cartan.n, true),
        };
        let bound = flags.bound.or(file.bound).unwrap_or(DEFAULT_BOUND);
        if bound < 2 {
            return Err(ConfigError::Bound(bound));
        }
        let q = match flags.q.as_ref().or(file.q.as_ref()) {
            None => None,
            Some(s) => {
                let v = parse_rational(s).map_err(ConfigError::Q)?;
                if v == rat_int(0) || v == rat_int(1) || v == rat_int(-1) {
                    return Err(ConfigError::QValue(s.clone()));
                }
                Some(v)
            }
        };
        Ok(SessionConfig {
            cartan,
            dseq,
            bound,
            q,
            cache_dir: flags.cache_dir.clone().or_else(|| file.cache_dir.clone()),
            json: flags.json || file.json.unwrap_or(false),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: FileConfig =
            serde_json::from_str(r#"{"type": "A2", "dseq": "10|01", "bound": 6, "json": true}"#).unwrap();
        let flags = FlagConfig {
            dseq: Some("11|11".into()),
            ..Default::default()
        };
        let c = SessionConfig::resolve(&flags, &file).unwrap();
        assert_eq!(c.dseq.to_string(), "11|11");
        assert_eq!(c.bound, 6);
        assert!(c.json);
        assert_eq!(c.cartan.n, 2);
    }

    #[test]
    fn inline_matrix_and_defaults() {
        let file: FileConfig = serde_json::from_str(r#"{"matrix": [[2,-2],[-1,2]]}"#).unwrap();
        let c = SessionConfig::resolve(&FlagConfig::default(), &file).unwrap();
        assert_eq!(c.cartan.d, vec![1, 2]);
        assert_eq!(c.dseq.to_string(), "11|11");
        assert_eq!(c.bound, DEFAULT_BOUND);
    }

    #[test]
    fn rejects_bad_settings() {
        let none = FileConfig::default();
        assert!(matches!(
            SessionConfig::resolve(&FlagConfig::default(), &none),
            Err(ConfigError::MissingCartan)
        ));
        let f = |q: &str| FlagConfig {
            cartan_type: Some("A1".into()),
            q: Some(q.into()),
            ..Default::default()
        };
        assert!(matches!(SessionConfig::resolve(&f("1"), &none), Err(ConfigError::QValue(_))));
        assert!(SessionConfig::resolve(&f("5/3"), &none).is_ok());
        assert!(serde_json::from_str::<FileConfig>(r#"{"colour": 1}"#).is_err());
    }
}
