//! Content-addressed on-disk cache of module data keyed by `(λ, e, char, κ)`.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::module::SpechtModule;

pub const SCHEMA_VERSION: u32 = 1;

/// A cached endomorphism basis: each image of `z_λ` as `(w_t, coefficient)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedEndo {
    pub basis: Vec<Vec<(Vec<u8>, String)>>,
    pub degrees: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub lambda: String,
    pub e: u8,
    pub char: u32,
    pub kappa: Vec<u8>,
    pub dim: u64,
    pub graded_dim: BTreeMap<i32, u64>,
    pub memo_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endo: Option<CachedEndo>,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn payload_digest(graded_dim: &BTreeMap<i32, u64>, endo: &Option<CachedEndo>) -> String {
    let body = serde_json::to_vec(&(graded_dim, endo)).expect("serializable");
    hex(&Sha256::digest(&body))
}

impl CacheEntry {
    pub fn new(module: &SpechtModule, endo: Option<CachedEndo>) -> CacheEntry {
        let graded_dim = module.graded_dim();
        CacheEntry {
            schema_version: SCHEMA_VERSION,
            lambda: module.presentation.shape.clone(),
            e: module.e(),
            char: module.field.characteristic(),
            kappa: module.presentation.kappa.clone(),
            dim: module.dim(),
            memo_digest: payload_digest(&graded_dim, &endo),
            graded_dim,
            endo,
        }
    }

    fn matches(&self, module: &SpechtModule) -> bool {
        self.schema_version == SCHEMA_VERSION
            && self.lambda == module.presentation.shape
            && self.e == module.e()
            && self.char == module.field.characteristic()
            && self.kappa == module.presentation.kappa
            && self.dim == module.dim()
            && self.memo_digest == payload_digest(&self.graded_dim, &self.endo)
    }
}

#[derive(Debug, Clone)]
pub struct ModuleCache {
    dir: PathBuf,
}

impl ModuleCache {
    pub fn new(dir: impl Into<PathBuf>) -> ModuleCache {
        ModuleCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, module: &SpechtModule) -> PathBuf {
        let key = format!(
            "v{}|{}|{}|{}|{:?}|{:?}",
            SCHEMA_VERSION,
            module.presentation.shape,
            module.e(),
            module.field.characteristic(),
            module.presentation.kappa,
            module.engine.conventions,
        );
        self.dir
            .join(format!("{}.json", &hex(&Sha256::digest(key.as_bytes()))[..32]))
    }

    /// The entry for `module`, if present and intact.
    pub fn load(&self, module: &SpechtModule) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(module)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        entry.matches(module).then_some(entry)
    }

    pub fn store(&self, entry: &CacheEntry, module: &SpechtModule) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(module);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(entry).expect("serializable"))?;
        fs::rename(tmp, path)
    }
}
