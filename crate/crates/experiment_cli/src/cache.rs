//! Text cache of fading samples: one `key=value` header line, then one
//! transmissivity per line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use turbulence_channel::TurbulenceConfig;

use crate::error::CliError;

/// Identity of a simulated sample pool.
#[derive(Debug, Clone, PartialEq)]
pub struct CacheKey {
    pub digest: String,
    pub count: usize,
    pub seed: u64,
}

impl CacheKey {
    pub fn new(cfg: &TurbulenceConfig, count: usize, seed: u64) -> Self {
        let text = format!("{cfg:?}");
        Self { digest: format!("{:x}", Sha256::digest(text.as_bytes())), count, seed }
    }

    pub fn file_name(&self) -> String {
        format!("t_{}_{}_{}.txt", &self.digest[..16], self.count, self.seed)
    }

    fn header(&self) -> String {
        format!("digest={} count={} seed={}", self.digest, self.count, self.seed)
    }
}

pub fn cache_path(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(key.file_name())
}

pub fn write_cache(path: &Path, key: &CacheKey, samples: &[f64]) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    writeln!(out, "{}", key.header())?;
    for t in samples {
        writeln!(out, "{t}")?;
    }
    out.flush()?;
    Ok(())
}

/// `Ok(None)` when the file does not exist; an error when it exists but
/// belongs to a different key or does not parse.
pub fn read_cache(path: &Path, key: &CacheKey) -> Result<Option<Vec<f64>>, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let fail = |reason: String| CliError::Cache { path: path.display().to_string(), reason };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| fail("empty file".into()))?;
    if header != key.header() {
        return Err(fail(format!("header `{header}` does not match `{}`", key.header())));
    }
    let samples = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse::<f64>().map_err(|e| fail(format!("`{l}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if samples.len() != key.count {
        return Err(fail(format!("expected {} samples, found {}", key.count, samples.len())));
    }
    Ok(Some(samples))
}
