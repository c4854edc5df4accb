//! Super vector spaces `C(q)^{N|N}`, even operators on their tensor powers and the
//! Koszul-signed operator product.

mod build;
mod mixed;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use build::*;
pub use mixed::{Fac, Kind, Mixed, Slot, Sym, SymWord};

use crate::error::{Error, Result};
use crate::qfield::QScalar;

/// Parity of a signed index: odd iff negative.
#[inline]
pub fn par(i: i8) -> u8 {
    (i < 0) as u8
}

/// `(-1)^k`.
#[inline]
pub fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Which part of `I_{n|n}` a space uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Both,
    Pos,
    Neg,
}

/// An index set: `I_{n|n}` ordered `-n < ... < -1 < 1 < ... < n`, or only its positive
/// (purely even) or negative (purely odd) half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    pub n: u8,
    pub part: Part,
}

impl Space {
    pub fn signed(n: usize) -> Space {
        Space {
            n: n as u8,
            part: Part::Both,
        }
    }

    pub fn even(n: usize) -> Space {
        Space {
            n: n as u8,
            part: Part::Pos,
        }
    }

    pub fn odd(n: usize) -> Space {
        Space {
            n: n as u8,
            part: Part::Neg,
        }
    }

    pub fn indices(&self) -> Vec<i8> {
        let n = self.n as i8;
        let mut v = Vec::with_capacity(2 * self.n as usize);
        if self.part != Part::Pos {
            v.extend((1..=n).rev().map(|i| -i));
        }
        if self.part != Part::Neg {
            v.extend(1..=n);
        }
        v
    }

    pub fn contains(&self, i: i8) -> bool {
        i != 0
            && i.unsigned_abs() <= self.n
            && match self.part {
                Part::Both => true,
                Part::Pos => i > 0,
                Part::Neg => i < 0,
            }
    }
}

/// Shorthand for `I_{n|n}`.
pub fn iset(n: usize) -> Vec<i8> {
    Space::signed(n).indices()
}

/// Row and column spaces of one tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub rows: Space,
    pub cols: Space,
}

impl Factor {
    pub fn square(s: Space) -> Factor {
        Factor { rows: s, cols: s }
    }
}

/// Multi-index key: one `(row, col)` matrix unit per factor.
pub type Key = Vec<(i8, i8)>;

/// A linear combination of elementary tensors `E_{i1 j1} ⊗ ... ⊗ E_{ik jk}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperOp {
    dims: Vec<Factor>,
    terms: BTreeMap<Key, QScalar>,
}

impl SuperOp {
    pub fn zero(dims: Vec<Factor>) -> SuperOp {
        SuperOp {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(dims: Vec<Factor>) -> SuperOp {
        let mut keys: Vec<Key> = vec![Vec::new()];
        for f in &dims {
            assert_eq!(f.rows, f.cols, "identity needs square factors");
            let idx = f.rows.indices();
            keys = keys
                .into_iter()
                .flat_map(|k| {
                    idx.iter().map(move |&i| {
                        let mut k = k.clone();
                        k.push((i, i));
                        k
                    })
                })
                .collect();
        }
        let terms = keys.into_iter().map(|k| (k, QScalar::one())).collect();
        SuperOp { dims, terms }
    }

    pub fn from_terms(
        dims: Vec<Factor>,
        terms: impl IntoIterator<Item = (Key, QScalar)>,
    ) -> SuperOp {
        let mut op = SuperOp::zero(dims);
        for (k, c) in terms {
            op.add_term(k, &c);
        }
        op
    }

    pub fn add_term(&mut self, key: Key, c: &QScalar) {
        debug_assert_eq!(key.len(), self.dims.len());
        debug_assert!(key
            .iter()
            .zip(&self.dims)
            .all(|(&(i, j), f)| f.rows.contains(i) && f.cols.contains(j)));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[Factor] {
        &self.dims
    }

    pub fn terms(&self) -> &BTreeMap<Key, QScalar> {
        &self.terms
    }

    pub fn coeff(&self, key: &[(i8, i8)]) -> QScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity of an elementary term.
    pub fn key_parity(key: &[(i8, i8)]) -> u8 {
        key.iter().fold(0, |p, &(i, j)| p ^ par(i) ^ par(j))
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|k| SuperOp::key_parity(k) == 0)
    }

    pub fn add(&self, o: &SuperOp) -> Result<SuperOp> {
        if self.dims != o.dims {
            return Err(Error::Shape("sum of operators on different spaces".into()));
        }
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), c);
        }
        Ok(r)
    }

    pub fn scale(&self, c: &QScalar) -> SuperOp {
        SuperOp::from_terms(
            self.dims.clone(),
            self.terms.iter().map(|(k, a)| (k.clone(), a.mul(c))),
        )
    }

    pub fn neg(&self) -> SuperOp {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn sub(&self, o: &SuperOp) -> Result<SuperOp> {
        self.add(&o.neg())
    }

    /// Koszul product: `(A_1⊗…⊗A_k)(B_1⊗…⊗B_k) = (-1)^{Σ_{l<m}|A_m||B_l|} A_1B_1⊗…⊗A_kB_k`.
    pub fn mul(&self, o: &SuperOp) -> Result<SuperOp> {
        if self.arity() != o.arity() {
            return Err(Error::Shape(format!(
                "arity {} vs {}",
                self.arity(),
                o.arity()
            )));
        }
        for (a, b) in self.dims.iter().zip(&o.dims) {
            if a.cols != b.rows {
                return Err(Error::Shape(format!(
                    "column space {:?} vs row space {:?}",
                    a.cols, b.rows
                )));
            }
        }
        let dims: Vec<Factor> = self
            .dims
            .iter()
            .zip(&o.dims)
            .map(|(a, b)| Factor {
                rows: a.rows,
                cols: b.cols,
            })
            .collect();
        let mut by_rows: BTreeMap<Vec<i8>, Vec<(&Key, &QScalar)>> = BTreeMap::new();
        for (k, c) in &o.terms {
            by_rows
                .entry(k.iter().map(|x| x.0).collect())
                .or_default()
                .push((k, c));
        }
        let mut out = SuperOp::zero(dims);
        for (ka, ca) in &self.terms {
            let cols: Vec<i8> = ka.iter().map(|x| x.1).collect();
            let Some(bs) = by_rows.get(&cols) else {
                continue;
            };
            for (kb, cb) in bs {
                let mut s = 0u32;
                let mut pb = 0u8;
                for m in 0..ka.len() {
                    let pa = par(ka[m].0) ^ par(ka[m].1);
                    s += (pa & pb) as u32;
                    pb ^= par(kb[m].0) ^ par(kb[m].1);
                }
                let key: Key = ka.iter().zip(kb.iter()).map(|(a, b)| (a.0, b.1)).collect();
                let c = ca.mul(cb);
                out.add_term(key, &if s % 2 == 0 { c } else { c.neg() });
            }
        }
        Ok(out)
    }

    /// Places a two-factor operator at positions `(i, j)` (1-based, `i < j`) of a
    /// `dims.len()`-fold tensor product, with identities elsewhere.
    pub fn embed(&self, i: usize, j: usize, dims: &[Factor]) -> Result<SuperOp> {
        let k = dims.len();
        if self.arity() != 2 || !(1 <= i && i < j && j <= k) {
            return Err(Error::Position(format!("({i},{j}) in {k} factors")));
        }
        if dims[i - 1] != self.dims[0] || dims[j - 1] != self.dims[1] {
            return Err(Error::Shape(format!(
                "factor spaces at ({i},{j}) do not match"
            )));
        }
        self.embed_at(&[i - 1, j - 1], dims)
    }

    /// General embedding: factor `m` of `self` goes to position `pos[m]` (0-based).
    pub fn embed_at(&self, pos: &[usize], dims: &[Factor]) -> Result<SuperOp> {
        if pos.len() != self.arity() || pos.iter().any(|&p| p >= dims.len()) {
            return Err(Error::Position(format!(
                "{pos:?} in {} factors",
                dims.len()
            )));
        }
        let rest: Vec<usize> = (0..dims.len()).filter(|p| !pos.contains(p)).collect();
        let id = SuperOp::identity(rest.iter().map(|&p| dims[p]).collect());
        let mut out = SuperOp::zero(dims.to_vec());
        for (ka, ca) in &self.terms {
            for kb in id.terms.keys() {
                let mut key = vec![(0i8, 0i8); dims.len()];
                for (m, &p) in pos.iter().enumerate() {
                    key[p] = ka[m];
                }
                for (m, &p) in rest.iter().enumerate() {
                    key[p] = kb[m];
                }
                out.add_term(key, ca);
            }
        }
        Ok(out)
    }

    /// Keeps only terms whose indices all satisfy `keep`, on the given new spaces.
    pub fn restrict(&self, dims: Vec<Factor>, keep: impl Fn(i8) -> bool) -> SuperOp {
        SuperOp::from_terms(
            dims,
            self.terms
                .iter()
                .filter(|(k, _)| k.iter().all(|&(i, j)| keep(i) && keep(j)))
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Relabels every index through `f`.
    pub fn relabel(&self, dims: Vec<Factor>, f: impl Fn(i8) -> i8) -> SuperOp {
        SuperOp::from_terms(
            dims,
            self.terms
                .iter()
                .map(|(k, c)| (k.iter().map(|&(i, j)| (f(i), f(j))).collect(), c.clone())),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == SuperOp::identity(self.dims.clone())
    }

    /// One line per term: `coeff · E_{i1,j1}⊗…⊗E_{ik,jk}`, ordered by multi-index.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, c) in &self.terms {
            let units: Vec<String> = k.iter().map(|(i, j)| format!("E_{{{i},{j}}}")).collect();
            let _ = writeln!(s, "{} · {}", c.to_token(), units.join("⊗"));
        }
        s
    }
}

impl std::fmt::Debug for SuperOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.dump())
    }
}

/// `S^{12}S^{13}S^{23} = S^{23}S^{13}S^{12}` for a two-factor operator on `V⊗V`.
pub fn check_qybe(s: &SuperOp) -> Result<bool> {
    let f = s.dims()[0];
    let dims = [f, f, f];
    let s12 = s.embed(1, 2, &dims)?;
    let s13 = s.embed(1, 3, &dims)?;
    let s23 = s.embed(2, 3, &dims)?;
    let lhs = s12.mul(&s13)?.mul(&s23)?;
    let rhs = s23.mul(&s13)?.mul(&s12)?;
    Ok(lhs == rhs)
}
