//! Words in the folded generators and their linear combinations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::qfield::{Field, QScalar};
use crate::relset::GenId;
use crate::supertensor::Kind;

/// A monomial in the folded generators.
///
/// Ordered degree-lexicographically by [`GenId::elim_key`]; the largest word of a
/// relation is the one eliminated.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[GenId; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_gens(g: &[GenId]) -> Word {
        Word(SmallVec::from_slice(g))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[GenId] {
        &self.0
    }

    pub fn bidegree(&self) -> (usize, usize) {
        let t = self.0.iter().filter(|g| g.kind == Kind::T).count();
        (t, self.0.len() - t)
    }

    pub fn parity(&self) -> u8 {
        self.0.iter().fold(0, |p, g| p ^ g.parity())
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&o.0);
        Word(w)
    }

    pub fn push(&self, g: GenId) -> Word {
        let mut w = self.0.clone();
        w.push(g);
        Word(w)
    }

    pub fn split_last(&self) -> Option<(Word, GenId)> {
        let (last, rest) = self.0.split_last()?;
        Some((Word::from_gens(rest), *last))
    }

    pub fn split_at(&self, p: usize) -> (Word, Word) {
        (Word::from_gens(&self.0[..p]), Word::from_gens(&self.0[p..]))
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| {
            self.0
                .iter()
                .map(GenId::elim_key)
                .cmp(o.0.iter().map(GenId::elim_key))
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<SmallVec<_>>>()
            .map(Word)
    }
}

/// A finite linear combination of words.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement<F: Field = QScalar> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for AlgElement<F> {
    fn default() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<F: Field> AlgElement<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in ts {
            e.add_term(w, &c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> &BTreeMap<Word, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, F> {
        self.terms
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

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// Largest word, the pivot under elimination.
    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn add_scaled(&mut self, o: &Self, c: &F) {
        for (w, a) in &o.terms {
            self.add_term(w.clone(), &a.mul(c));
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElement {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Product in the free algebra (concatenation).
    pub fn concat(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                r.add_term(u.concat(v), &a.mul(b));
            }
        }
        r
    }

    /// The set of bidegrees occurring.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(Word::bidegree).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn is_homogeneous(&self) -> bool {
        self.bidegrees().len() <= 1
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> AlgElement<G> {
        AlgElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl AlgElement<QScalar> {
    pub fn embed<G: Field>(&self, ctx: &G::Ctx) -> Result<AlgElement<G>> {
        let mut r = AlgElement::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), &G::embed(c, ctx)?);
        }
        Ok(r)
    }
}

/// `coeff * word + coeff * word ...`, words in increasing order; `0` for zero.
impl<F: Field> fmt::Display for AlgElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}", c.to_token(), w)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for AlgElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> std::str::FromStr for AlgElement<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut e = Self::zero();
        for part in s.split(" + ") {
            let (c, w) = part
                .split_once(" * ")
                .ok_or_else(|| Error::Parse(format!("term `{part}` lacks ` * `")))?;
            let c = F::from_token(c.trim())
                .ok_or_else(|| Error::Parse(format!("bad coefficient `{c}`")))?;
            e.add_term(w.parse()?, &c);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u8, a: i8) -> GenId {
        GenId::t(i, a)
    }

    #[test]
    fn elimination_order() {
        // within a kind the column order is reversed, and T precedes Tbar
        let w = |g: &[GenId]| Word::from_gens(g);
        assert!(w(&[t(1, 1)]) < w(&[t(1, -1)]));
        assert!(w(&[t(1, 1), t(1, 1)]) < w(&[t(1, 1), t(1, -1)]));
        assert!(w(&[t(1, 1), t(1, -1)]) < w(&[t(1, -1), t(1, 1)]));
        assert!(w(&[t(2, 2)]) < w(&[GenId::tbar(1, 1)]));
        assert!(w(&[t(9, 1)]) < w(&[t(1, 1), t(1, 1)]));
    }

    #[test]
    fn string_syntax_roundtrip() {
        let x = AlgElement::<QScalar>::from_terms([
            (
                Word::from_gens(&[t(1, -1), GenId::tbar(1, -1)]),
                QScalar::one(),
            ),
            (
                Word::from_gens(&[t(1, 1), GenId::tbar(1, 1)]),
                QScalar::xi(),
            ),
            (Word::empty(), QScalar::q_pow(-2)),
        ]);
        let s = x.to_string();
        assert!(s.contains("t[1,1] tb[1,1]"));
        assert_eq!(s.parse::<AlgElement>().unwrap(), x);
        assert_eq!("0".parse::<AlgElement>().unwrap(), AlgElement::zero());
    }
}
