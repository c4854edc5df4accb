//! Tensors mixing matrix slots and free-algebra slots.
//!
//! A term is `c · F_1 ⊗ … ⊗ F_k` where a matrix slot holds a unit `E_{ij}` (or a
//! lazy identity) and an algebra slot holds a word in unfolded generator symbols.
//! Products follow the same Koszul rule as [`SuperOp::mul`], with words as
//! additional tensor factors, which is how every matrix identity with generator
//! entries is expanded.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::{par, Space, SuperOp};
use crate::qfield::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    T,
    Tbar,
}

/// An unfolded generator `t_{row,col}` or `t̄_{row,col}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym {
    pub kind: Kind,
    pub row: i8,
    pub col: i8,
}

impl Sym {
    pub fn t(row: i8, col: i8) -> Sym {
        Sym {
            kind: Kind::T,
            row,
            col,
        }
    }

    pub fn tbar(row: i8, col: i8) -> Sym {
        Sym {
            kind: Kind::Tbar,
            row,
            col,
        }
    }

    pub fn parity(&self) -> u8 {
        par(self.row) ^ par(self.col)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::T => "t",
            Kind::Tbar => "tb",
        };
        write!(f, "{k}[{},{}]", self.row, self.col)
    }
}

pub type SymWord = SmallVec<[Sym; 8]>;

pub fn word_parity(w: &[Sym]) -> u8 {
    w.iter().fold(0, |p, s| p ^ s.parity())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fac {
    Id,
    E(i8, i8),
    W(SymWord),
}

impl Fac {
    fn parity(&self) -> u8 {
        match self {
            Fac::Id => 0,
            Fac::E(i, j) => par(*i) ^ par(*j),
            Fac::W(w) => word_parity(w),
        }
    }

    fn mul(&self, o: &Fac) -> Option<Fac> {
        match (self, o) {
            (Fac::Id, x) | (x, Fac::Id) => Some(x.clone()),
            (Fac::E(i, j), Fac::E(k, l)) => (j == k).then_some(Fac::E(*i, *l)),
            (Fac::W(a), Fac::W(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(Fac::W(w))
            }
            _ => panic!("matrix slot multiplied with algebra slot"),
        }
    }
}

/// A matrix slot remembers the space its lazy identity expands over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Mat(Space),
    Alg,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mixed {
    layout: Vec<Slot>,
    terms: BTreeMap<Vec<Fac>, QScalar>,
}

impl Mixed {
    pub fn zero(layout: &[Slot]) -> Mixed {
        Mixed {
            layout: layout.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    fn unit_key(layout: &[Slot]) -> Vec<Fac> {
        layout
            .iter()
            .map(|s| match s {
                Slot::Mat(_) => Fac::Id,
                Slot::Alg => Fac::W(SymWord::new()),
            })
            .collect()
    }

    pub fn one(layout: &[Slot]) -> Mixed {
        let mut m = Mixed::zero(layout);
        m.add_term(Mixed::unit_key(layout), &QScalar::one());
        m
    }

    /// Places the factors of a scalar operator at matrix slots `pos`.
    pub fn from_op(layout: &[Slot], op: &SuperOp, pos: &[usize]) -> Mixed {
        assert_eq!(op.arity(), pos.len());
        let mut m = Mixed::zero(layout);
        for (k, c) in op.terms() {
            let mut key = Mixed::unit_key(layout);
            for (f, &p) in pos.iter().enumerate() {
                assert!(matches!(layout[p], Slot::Mat(_)));
                key[p] = Fac::E(k[f].0, k[f].1);
            }
            m.add_term(key, c);
        }
        m
    }

    /// `Σ c · E_{xy}` in slot `mat` tensored with the word in slot `alg`.
    pub fn matrix<I>(layout: &[Slot], mat: usize, alg: usize, entries: I) -> Mixed
    where
        I: IntoIterator<Item = (i8, i8, QScalar, SymWord)>,
    {
        assert!(matches!(layout[mat], Slot::Mat(_)) && layout[alg] == Slot::Alg);
        let mut m = Mixed::zero(layout);
        for (x, y, c, w) in entries {
            let mut key = Mixed::unit_key(layout);
            key[mat] = Fac::E(x, y);
            key[alg] = Fac::W(w);
            m.add_term(key, &c);
        }
        m
    }

    pub fn layout(&self) -> &[Slot] {
        &self.layout
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Fac>, QScalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<Fac>, c: &QScalar) {
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

    pub fn add(&self, o: &Mixed) -> Mixed {
        assert_eq!(self.layout, o.layout);
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), c);
        }
        r
    }

    pub fn scale(&self, c: &QScalar) -> Mixed {
        let mut r = Mixed::zero(&self.layout);
        for (k, a) in &self.terms {
            r.add_term(k.clone(), &a.mul(c));
        }
        r
    }

    pub fn neg(&self) -> Mixed {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn sub(&self, o: &Mixed) -> Mixed {
        self.add(&o.neg())
    }

    /// Koszul product `(A_1⊗…)(B_1⊗…) = (-1)^{Σ_{l<m}|A_m||B_l|} A_1B_1⊗…`.
    pub fn mul(&self, o: &Mixed) -> Mixed {
        assert_eq!(self.layout, o.layout, "layouts differ");
        let k = self.layout.len();
        let bs: Vec<(&Vec<Fac>, &QScalar, Vec<u8>)> = o
            .terms
            .iter()
            .map(|(key, c)| (key, c, key.iter().map(Fac::parity).collect()))
            .collect();
        let mut out = Mixed::zero(&self.layout);
        for (ka, ca) in &self.terms {
            let pa: Vec<u8> = ka.iter().map(Fac::parity).collect();
            'pairs: for (kb, cb, pb) in &bs {
                let mut key = Vec::with_capacity(k);
                for m in 0..k {
                    match ka[m].mul(&kb[m]) {
                        Some(f) => key.push(f),
                        None => continue 'pairs,
                    }
                }
                let mut s = 0u8;
                let mut acc = 0u8;
                for m in 0..k {
                    s ^= pa[m] & acc;
                    acc ^= pb[m];
                }
                let c = ca.mul(cb);
                out.add_term(key, &if s == 0 { c } else { c.neg() });
            }
        }
        out
    }

    pub fn mul_all(factors: &[&Mixed]) -> Mixed {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, f| acc.mul(f))
    }

    /// Replaces every lazy identity by `Σ_i E_ii` over its slot's space.
    pub fn expand(&self) -> Mixed {
        let mut cur: Vec<(Vec<Fac>, QScalar)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        for (m, slot) in self.layout.iter().enumerate() {
            let Slot::Mat(sp) = slot else { continue };
            let idx = sp.indices();
            let mut next = Vec::with_capacity(cur.len());
            for (k, c) in cur {
                if k[m] == Fac::Id {
                    for &i in &idx {
                        let mut k2 = k.clone();
                        k2[m] = Fac::E(i, i);
                        next.push((k2, c.clone()));
                    }
                } else {
                    next.push((k, c));
                }
            }
            cur = next;
        }
        let mut out = Mixed::zero(&self.layout);
        for (k, c) in cur {
            out.add_term(k, &c);
        }
        out
    }

    /// Groups the expanded tensor by its matrix units: each entry maps the tuple of
    /// `(row, col)` pairs to the list of algebra-slot word tuples with coefficients.
    pub fn components(&self) -> BTreeMap<Vec<(i8, i8)>, Vec<(Vec<SymWord>, QScalar)>> {
        let mut out: BTreeMap<Vec<(i8, i8)>, Vec<(Vec<SymWord>, QScalar)>> = BTreeMap::new();
        for (k, c) in self.expand().terms {
            let mut mk = Vec::new();
            let mut ws = Vec::new();
            for f in k {
                match f {
                    Fac::E(i, j) => mk.push((i, j)),
                    Fac::W(w) => ws.push(w),
                    Fac::Id => unreachable!("expanded"),
                }
            }
            out.entry(mk).or_default().push((ws, c));
        }
        out
    }
}

impl fmt::Debug for Mixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.terms {
            writeln!(f, "{} · {:?}", c.to_token(), k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_s, build_s_inverse, Factor};
    use super::*;

    #[test]
    fn matches_superop_product() {
        let sp = Space::signed(2);
        let layout = [Slot::Mat(sp), Slot::Mat(sp), Slot::Mat(sp)];
        let dims = vec![Factor::square(sp); 3];
        let s = build_s(2);
        let a = Mixed::from_op(&layout, &s, &[0, 2]);
        let b = Mixed::from_op(&layout, &build_s_inverse(2), &[1, 2]);
        let direct = s
            .embed(1, 3, &dims)
            .unwrap()
            .mul(&build_s_inverse(2).embed(2, 3, &dims).unwrap())
            .unwrap();
        let via = Mixed::from_op(&layout, &direct, &[0, 1, 2]);
        assert_eq!(a.mul(&b).expand(), via.expand());
    }

    #[test]
    fn algebra_slot_signs() {
        // (E_{1,-1}⊗t)(E_{-1,1}⊗u) with |t|=1: the odd word passes the odd unit
        let sp = Space::signed(1);
        let layout = [Slot::Mat(sp), Slot::Alg];
        let t = Sym::t(1, -1);
        let u = Sym::t(1, 1);
        let a = Mixed::matrix(
            &layout,
            0,
            1,
            [(1, -1, QScalar::one(), SymWord::from_slice(&[t]))],
        );
        let b = Mixed::matrix(
            &layout,
            0,
            1,
            [(-1, 1, QScalar::one(), SymWord::from_slice(&[u]))],
        );
        let ab = a.mul(&b);
        let key = vec![Fac::E(1, 1), Fac::W(SymWord::from_slice(&[t, u]))];
        assert_eq!(ab.terms().get(&key), Some(&QScalar::from_int(-1)));
        let ba = b.mul(&a);
        let key = vec![Fac::E(-1, -1), Fac::W(SymWord::from_slice(&[u, t]))];
        assert_eq!(ba.terms().get(&key), Some(&QScalar::one()));
    }
}
