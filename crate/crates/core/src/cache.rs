//! On-disk store of built components, one JSON file per component.
//!
//! Files are named by a SHA-256 digest of the algebra, the bidegree, the field and
//! the format version; the same fields are stored inside and checked on load, so
//! a stale or foreign file is ignored rather than trusted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graded::{AlgebraSpec, Bideg, Component, ComponentStore, Word};
use crate::qfield::Field;

/// Bumped whenever the elimination order or the file layout changes.
pub const CACHE_FORMAT: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "QQUEER_CACHE_DIR";

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct Key {
    format: u32,
    version: String,
    spec: AlgebraSpec,
    bidegree: Bideg,
    field: String,
}

#[derive(Serialize, Deserialize)]
struct Stored {
    key: Key,
    basis: Vec<String>,
    /// `(generator index, basis index, [(coordinate, token)])`, sorted.
    cand: Vec<(usize, usize, Vec<(usize, String)>)>,
    words: String,
    candidates: usize,
    rank: usize,
}

pub struct JsonStore {
    dir: PathBuf,
    field: String,
}

impl JsonStore {
    /// `field` names the coefficient field and evaluation point, e.g. `exact`.
    pub fn new(dir: impl AsRef<Path>, field: impl Into<String>) -> Result<JsonStore> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        Ok(JsonStore {
            dir,
            field: field.into(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn key(&self, spec: &AlgebraSpec, d: Bideg) -> Key {
        Key {
            format: CACHE_FORMAT,
            version: env!("CARGO_PKG_VERSION").to_string(),
            spec: *spec,
            bidegree: d,
            field: self.field.clone(),
        }
    }

    fn path(&self, key: &Key) -> PathBuf {
        let bytes = serde_json::to_vec(key).expect("key serializes");
        let digest = Sha256::digest(&bytes);
        let hex: String = digest.iter().take(16).map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.json"))
    }

    fn read<F: Field>(&self, key: &Key) -> Result<Option<Component<F>>> {
        let path = self.path(key);
        if !path.exists() {
            return Ok(None);
        }
        let bad = |m: &str| Error::Cache(format!("{}: {m}", path.display()));
        let st: Stored =
            serde_json::from_slice(&fs::read(&path)?).map_err(|e| bad(&e.to_string()))?;
        if &st.key != key {
            return Ok(None);
        }
        let basis: Vec<Word> = st
            .basis
            .iter()
            .map(|w| w.parse::<Word>())
            .collect::<Result<_>>()
            .map_err(|e| bad(&e.to_string()))?;
        let mut cand = std::collections::HashMap::with_capacity(st.cand.len());
        for (gi, bi, v) in st.cand {
            let v = v
                .into_iter()
                .map(|(j, t)| {
                    F::from_token(&t)
                        .map(|c| (j, c))
                        .ok_or_else(|| bad("bad coefficient"))
                })
                .collect::<Result<Vec<_>>>()?;
            cand.insert((gi, bi), v);
        }
        Ok(Some(Component {
            bidegree: key.bidegree,
            index: basis
                .iter()
                .enumerate()
                .map(|(k, w)| (w.clone(), k))
                .collect(),
            basis,
            cand,
            words: st.words.parse().map_err(|_| bad("bad word count"))?,
            candidates: st.candidates,
            rank: st.rank,
        }))
    }

    fn write<F: Field>(&self, key: Key, c: &Component<F>) -> Result<()> {
        let path = self.path(&key);
        let mut cand: Vec<(usize, usize, Vec<(usize, String)>)> = c
            .cand
            .iter()
            .map(|(&(gi, bi), v)| (gi, bi, v.iter().map(|(j, a)| (*j, a.to_token())).collect()))
            .collect();
        cand.sort_by_key(|x| (x.0, x.1));
        let st = Stored {
            key,
            basis: c.basis.iter().map(|w| w.to_string()).collect(),
            cand,
            words: c.words.to_string(),
            candidates: c.candidates,
            rank: c.rank,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&serde_json::to_vec(&st).map_err(|e| Error::Cache(e.to_string()))?)?;
        tmp.persist(&path)
            .map_err(|e| Error::Cache(e.to_string()))?;
        Ok(())
    }
}

impl<F: Field> ComponentStore<F> for JsonStore {
    fn load(&self, spec: &AlgebraSpec, d: Bideg) -> Option<Component<F>> {
        // an unreadable file is a miss; the component is rebuilt and rewritten
        self.read(&self.key(spec, d)).ok().flatten()
    }

    fn save(&self, spec: &AlgebraSpec, c: &Component<F>) {
        let _ = self.write(self.key(spec, c.bidegree), c);
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graded::Algebra;
    use crate::qfield::{EvalPoint, Fp, QScalar};

    #[test]
    fn warm_and_cold_agree() {
        let dir = tempfile::tempdir().unwrap();
        let spec = AlgebraSpec::o(1, 1, 1);
        let cold = Algebra::new(spec);
        let mut warm = Algebra::new(spec);
        warm.set_store(Arc::new(JsonStore::new(dir.path(), "exact").unwrap()));
        let t1 = warm.dims_table(3).unwrap();
        assert!(fs::read_dir(dir.path()).unwrap().count() >= 9);
        let mut again = Algebra::<QScalar>::new(spec);
        again.set_store(Arc::new(JsonStore::new(dir.path(), "exact").unwrap()));
        assert_eq!(again.dims_table(3).unwrap(), t1);
        assert_eq!(cold.dims_table(3).unwrap(), t1);
        let x: crate::graded::AlgElement = "1*q^0/1*q^0 * tb[1,1] t[1,-1]".parse().unwrap();
        assert_eq!(
            again.normal_form(&x).unwrap(),
            cold.normal_form(&x).unwrap()
        );
    }

    #[test]
    fn field_tag_separates_entries() {
        let dir = tempfile::tempdir().unwrap();
        let st = JsonStore::new(dir.path(), "exact").unwrap();
        let spec = AlgebraSpec::a(1, 1);
        let alg = Algebra::new(spec);
        let c = alg.component((2, 0)).unwrap();
        ComponentStore::<QScalar>::save(&st, &spec, &c);
        assert!(ComponentStore::<QScalar>::load(&st, &spec, (2, 0)).is_some());
        let other = JsonStore::new(dir.path(), "fp:q0=5").unwrap();
        assert!(ComponentStore::<Fp>::load(&other, &spec, (2, 0)).is_none());
        let _ = EvalPoint { q0: 5 };
    }

    #[test]
    fn corrupt_file_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let st = JsonStore::new(dir.path(), "exact").unwrap();
        let spec = AlgebraSpec::a(1, 1);
        let key = st.key(&spec, (1, 0));
        fs::write(st.path(&key), b"{not json").unwrap();
        assert!(ComponentStore::<QScalar>::load(&st, &spec, (1, 0)).is_none());
    }
}
