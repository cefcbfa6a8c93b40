use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::RwLock;

use serde_json::{json, Map, Value};

use super::character::G0Character;
use crate::error::{Error, Result};
use crate::weights::Weight;

pub const CACHE_VERSION: u64 = 1;

/// Persistent store of Kac and irreducible g₀-characters, keyed by canonical
/// weight strings.
///
/// Reads may run concurrently; inserts keep the first value written for a key.
#[derive(Debug, Default)]
pub struct SupportCache {
    kac: RwLock<BTreeMap<String, G0Character>>,
    irreducible: RwLock<BTreeMap<String, G0Character>>,
}

fn get(map: &RwLock<BTreeMap<String, G0Character>>, w: &Weight) -> Option<G0Character> {
    map.read()
        .expect("cache lock")
        .get(&w.to_canonical_string())
        .cloned()
}

fn insert(map: &RwLock<BTreeMap<String, G0Character>>, w: &Weight, ch: G0Character) {
    map.write()
        .expect("cache lock")
        .entry(w.to_canonical_string())
        .or_insert(ch);
}

fn section(obj: &Map<String, Value>, name: &str) -> BTreeMap<String, G0Character> {
    let mut out = BTreeMap::new();
    let Some(entries) = obj.get(name) else {
        return out;
    };
    let Some(entries) = entries.as_object() else {
        log::warn!("cache section {name:?} is not an object; ignored");
        return out;
    };
    for (key, value) in entries {
        let Ok(w) = key.parse::<Weight>() else {
            log::warn!("ignoring cache key {key:?} in {name}: not a weight");
            continue;
        };
        match serde_json::from_value::<G0Character>(value.clone()) {
            Ok(ch) if ch.shape().is_none_or(|s| s == w.shape()) => {
                out.insert(w.to_canonical_string(), ch);
            }
            Ok(_) => log::warn!("ignoring cache entry {key:?} in {name}: shape mismatch"),
            Err(e) => log::warn!("ignoring cache entry {key:?} in {name}: {e}"),
        }
    }
    out
}

impl SupportCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_kac(&self, mu: &Weight) -> Option<G0Character> {
        get(&self.kac, mu)
    }

    pub fn insert_kac(&self, mu: &Weight, ch: G0Character) {
        insert(&self.kac, mu, ch)
    }

    pub fn get_irreducible(&self, lam: &Weight) -> Option<G0Character> {
        get(&self.irreducible, lam)
    }

    pub fn insert_irreducible(&self, lam: &Weight, ch: G0Character) {
        insert(&self.irreducible, lam, ch)
    }

    /// `(Kac entries, irreducible entries)`.
    pub fn len(&self) -> (usize, usize) {
        (
            self.kac.read().expect("cache lock").len(),
            self.irreducible.read().expect("cache lock").len(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.len() == (0, 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": CACHE_VERSION,
            "kac": *self.kac.read().expect("cache lock"),
            "irreducible": *self.irreducible.read().expect("cache lock"),
        })
    }

    /// Entries with unparsable keys or values are dropped with a warning, as
    /// is everything in a file of another version.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("cache file is not a JSON object".into()))?;
        let version = obj.get("version").and_then(Value::as_u64);
        if version != Some(CACHE_VERSION) {
            log::warn!("cache version {version:?} is not {CACHE_VERSION}; starting empty");
            return Ok(Self::new());
        }
        Ok(SupportCache {
            kac: RwLock::new(section(obj, "kac")),
            irreducible: RwLock::new(section(obj, "irreducible")),
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text)?;
        Self::from_json(&v)
    }

    /// Writes through a temporary file in the same directory.
    pub fn store(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        fs::write(&tmp, serde_json::to_vec(&self.to_json())?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Loads `path` if it exists, and starts empty otherwise.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        if path.as_ref().exists() {
            Self::load(path)
        } else {
            Ok(Self::new())
        }
    }
}

pub fn cache_load(path: impl AsRef<Path>) -> Result<SupportCache> {
    SupportCache::load(path)
}

pub fn cache_store(cache: &SupportCache, path: impl AsRef<Path>) -> Result<()> {
    cache.store(path)
}
