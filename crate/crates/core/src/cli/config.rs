//! Flat `key = value` run files.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::{Error, Result};

/// Keys accepted in a run file; they mirror the long command-line flags.
pub const KEYS: &[&str] = &[
    "n",
    "ncut",
    "a4",
    "a3",
    "c",
    "osc-dim",
    "alpha",
    "center",
    "t-max",
    "steps",
    "grid",
    "t-min",
    "decades",
    "per-decade",
    "threshold",
    "out",
    "format",
    "serial",
    "levels",
    "c-values",
    "with-lattice",
];

#[derive(Clone, Debug, Default)]
pub struct ConfigFile {
    path: std::path::PathBuf,
    values: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(path, &text)
    }

    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Config {
                path: path.to_path_buf(),
                line: i + 1,
                msg,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(err(format!("unknown key `{key}`")));
            }
            if values.insert(key.clone(), (i + 1, value.trim().to_string())).is_some() {
                return Err(err(format!("duplicate key `{key}`")));
            }
        }
        Ok(Self {
            path: path.to_path_buf(),
            values,
        })
    }

    /// Parsed value of `key`, if present.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        let Some((line, raw)) = self.values.get(key) else {
            return Ok(None);
        };
        raw.parse().map(Some).map_err(|e: T::Err| Error::Config {
            path: self.path.clone(),
            line: *line,
            msg: format!("bad value `{raw}` for `{key}`: {e}"),
        })
    }

    /// Comma-separated list under `key`.
    pub fn get_list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>>
    where
        T::Err: std::fmt::Display,
    {
        let Some((line, raw)) = self.values.get(key) else {
            return Ok(None);
        };
        raw.split(',')
            .map(|s| {
                s.trim().parse().map_err(|e: T::Err| Error::Config {
                    path: self.path.clone(),
                    line: *line,
                    msg: format!("bad list item `{s}` for `{key}`: {e}"),
                })
            })
            .collect::<Result<Vec<T>>>()
            .map(Some)
    }
}
