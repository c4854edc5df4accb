//! Quadratic relations of `A_{r,n}`, `Ā_{s,n}` and the cross relations of `𝒪_{r,s}`.
//!
//! Every relation set is produced twice: once from a closed formula and once by
//! expanding the matrix identity with [`Mixed`]. Tests compare the spans.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{AlgElement, Word};
use crate::linalg::{Echelon, SparseVec};
use crate::qfield::QScalar;
use crate::supertensor::{
    build_r, build_r_prime, build_s, build_s_inverse, build_s_prime, build_s_prime_inverse, iset,
    par, phi, Kind, Mixed, Slot, Space, SuperOp, Sym, SymWord,
};

/// A folded generator: `t_{row,col}` with `row ∈ 1..=r` or `t̄_{row,col}` with
/// `row ∈ 1..=s`, `col ∈ I_{n|n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId {
    pub kind: Kind,
    pub row: u8,
    pub col: i8,
}

impl GenId {
    pub fn t(row: u8, col: i8) -> GenId {
        GenId {
            kind: Kind::T,
            row,
            col,
        }
    }

    pub fn tbar(row: u8, col: i8) -> GenId {
        GenId {
            kind: Kind::Tbar,
            row,
            col,
        }
    }

    pub fn parity(&self) -> u8 {
        par(self.col)
    }

    /// Sort key for elimination: kind, then row, then column in reverse `I`-order.
    pub fn elim_key(&self) -> (Kind, u8, i8) {
        (self.kind, self.row, -self.col)
    }

    pub fn as_sym(&self) -> Sym {
        Sym {
            kind: self.kind,
            row: self.row as i8,
            col: self.col,
        }
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::T => "t",
            Kind::Tbar => "tb",
        };
        write!(f, "{k}[{},{}]", self.row, self.col)
    }
}

impl fmt::Debug for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for GenId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenId> {
        let bad = || Error::Parse(format!("bad generator `{s}`"));
        let (kind, rest) = if let Some(r) = s.strip_prefix("tb[") {
            (Kind::Tbar, r)
        } else if let Some(r) = s.strip_prefix("t[") {
            (Kind::T, r)
        } else {
            return Err(bad());
        };
        let (a, b) = rest
            .strip_suffix(']')
            .and_then(|x| x.split_once(','))
            .ok_or_else(bad)?;
        let row: u8 = a.trim().parse().map_err(|_| bad())?;
        let col: i8 = b.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(GenId { kind, row, col })
    }
}

/// Sign convention used when folding `t̄` with a negative row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbarFold {
    /// `t̄_{α,b} = (-1)^{|α|+|b|} t̄_{-α,-b}` read at the unfolded indices.
    Standard,
    /// The same sign read at the folded indices; kept only for comparison.
    Flipped,
}

/// Folds an unfolded symbol to its positive-row representative.
pub fn fold_sym_with(s: Sym, conv: TbarFold) -> (i64, GenId) {
    if s.row > 0 {
        return (
            1,
            GenId {
                kind: s.kind,
                row: s.row as u8,
                col: s.col,
            },
        );
    }
    let g = GenId {
        kind: s.kind,
        row: (-s.row) as u8,
        col: -s.col,
    };
    match s.kind {
        Kind::T => (1, g),
        Kind::Tbar => {
            let e = match conv {
                TbarFold::Standard => 1 + par(s.col),
                TbarFold::Flipped => par(-s.col),
            };
            (if e % 2 == 0 { 1 } else { -1 }, g)
        }
    }
}

pub fn fold_sym(s: Sym) -> (i64, GenId) {
    fold_sym_with(s, TbarFold::Standard)
}

/// `fold_t(i, a)` for `t_{ia}`.
pub fn fold_t(i: i8, a: i8) -> (i64, GenId) {
    fold_sym(Sym::t(i, a))
}

/// `fold` for `t̄_{αb}`.
pub fn fold_tbar(alpha: i8, b: i8) -> (i64, GenId) {
    fold_sym(Sym::tbar(alpha, b))
}

pub fn fold_word_with(w: &[Sym], conv: TbarFold) -> (i64, Word) {
    let mut sgn = 1;
    let mut out = Word::empty();
    for &s in w {
        let (e, g) = fold_sym_with(s, conv);
        sgn *= e;
        out.0.push(g);
    }
    (sgn, out)
}

pub fn fold_word(w: &[Sym]) -> (i64, Word) {
    fold_word_with(w, TbarFold::Standard)
}

fn signed(c: QScalar, s: i64) -> QScalar {
    if s < 0 {
        c.neg()
    } else {
        c
    }
}

fn sg(e: u32) -> QScalar {
    QScalar::from_int(if e % 2 == 0 { 1 } else { -1 })
}

fn delta(b: bool) -> i64 {
    b as i64
}

fn w1(a: Sym) -> SymWord {
    SymWord::from_slice(&[a])
}

fn w2(a: Sym, b: Sym) -> SymWord {
    SymWord::from_slice(&[a, b])
}

/// Builds a folded element from unfolded words.
pub fn fold_element_with(terms: &[(QScalar, SymWord)], conv: TbarFold) -> AlgElement {
    let mut e = AlgElement::zero();
    for (c, w) in terms {
        let (s, w) = fold_word_with(w, conv);
        e.add_term(w, &signed(c.clone(), s));
    }
    e
}

pub fn fold_element(terms: &[(QScalar, SymWord)]) -> AlgElement {
    fold_element_with(terms, TbarFold::Standard)
}

/// Relations read off every matrix entry of `lhs - rhs` (single algebra slot).
pub fn entries_with(lhs: &Mixed, rhs: &Mixed, conv: TbarFold) -> Vec<AlgElement> {
    lhs.sub(rhs)
        .components()
        .into_values()
        .map(|ts| {
            let ts: Vec<(QScalar, SymWord)> = ts
                .into_iter()
                .map(|(mut ws, c)| {
                    assert_eq!(ws.len(), 1, "one algebra slot expected");
                    (c, ws.pop().unwrap())
                })
                .collect();
            fold_element_with(&ts, conv)
        })
        .filter(|e| !e.is_zero())
        .collect()
}

pub fn entries(lhs: &Mixed, rhs: &Mixed) -> Vec<AlgElement> {
    entries_with(lhs, rhs, TbarFold::Standard)
}

fn push_nonzero(out: &mut Vec<AlgElement>, e: AlgElement) {
    if !e.is_zero() {
        out.push(e);
    }
}

/// Generator matrices for the engine. `T_+ = Σ_{i=1..r} E_{ia}⊗t_{ia}`.
pub fn t_plus(layout: &[Slot], mat: usize, alg: usize, r: usize, n: usize) -> Mixed {
    let mut es = Vec::new();
    for i in 1..=r as i8 {
        for &a in &iset(n) {
            es.push((i, a, QScalar::one(), w1(Sym::t(i, a))));
        }
    }
    Mixed::matrix(layout, mat, alg, es)
}

/// `T_- = Σ_{i=1..r} E_{-i,a}⊗t_{-i,a}`.
pub fn t_minus(layout: &[Slot], mat: usize, alg: usize, r: usize, n: usize) -> Mixed {
    let mut es = Vec::new();
    for i in 1..=r as i8 {
        for &a in &iset(n) {
            es.push((-i, a, QScalar::one(), w1(Sym::t(-i, a))));
        }
    }
    Mixed::matrix(layout, mat, alg, es)
}

/// `T = Σ_{i∈I_r} E_{ia}⊗t_{ia}` over all signed rows.
pub fn t_full(layout: &[Slot], mat: usize, alg: usize, r: usize, n: usize) -> Mixed {
    let mut es = Vec::new();
    for &i in &iset(r) {
        for &a in &iset(n) {
            es.push((i, a, QScalar::one(), w1(Sym::t(i, a))));
        }
    }
    Mixed::matrix(layout, mat, alg, es)
}

/// Sign of the entry `E_{bα}` of `T̄`: `(-1)^{|b|(|α|+|b|)}`.
pub fn tbar_entry_sign(alpha: i8, b: i8) -> i64 {
    if par(b) & (par(alpha) ^ par(b)) == 1 {
        -1
    } else {
        1
    }
}

/// `T̄ = Σ_{α∈I_s, b∈I_n} (-1)^{|b|(|α|+|b|)} E_{bα}⊗t̄_{αb}`.
pub fn t_bar(layout: &[Slot], mat: usize, alg: usize, s: usize, n: usize) -> Mixed {
    let mut es = Vec::new();
    for &al in &iset(s) {
        for &b in &iset(n) {
            es.push((
                b,
                al,
                QScalar::from_int(tbar_entry_sign(al, b)),
                w1(Sym::tbar(al, b)),
            ));
        }
    }
    Mixed::matrix(layout, mat, alg, es)
}

fn layout2(n: usize) -> [Slot; 3] {
    let sp = Space::signed(n);
    [Slot::Mat(sp), Slot::Mat(sp), Slot::Alg]
}

/// The closed form of `R^{12}T_+^1T_+^2 = T_+^2T_+^1S^{12}`, one element per
/// `(i, j, a, b)`:
/// `q^{δij} t_ia t_jb - (-1)^{|a||b|} q^{φ(a,b)} t_jb t_ia
///   - ξ(δ_{a<b} - δ_{j<i}) t_ja t_ib - (-1)^{|b|} ξ δ_{-a<b} t_{j,-a} t_{i,-b}`.
pub fn relations_a(r: usize, n: usize) -> Vec<AlgElement> {
    let idx = iset(n);
    let xi = QScalar::xi();
    let mut out = Vec::new();
    for i in 1..=r as u8 {
        for j in 1..=r as u8 {
            for &a in &idx {
                for &b in &idx {
                    let mut e = AlgElement::zero();
                    let t = GenId::t;
                    e.add_term(
                        Word::from_gens(&[t(i, a), t(j, b)]),
                        &QScalar::q_pow((i == j) as i32),
                    );
                    e.add_term(
                        Word::from_gens(&[t(j, b), t(i, a)]),
                        &sg((par(a) & par(b)) as u32)
                            .mul(&QScalar::q_pow(phi(a, b)))
                            .neg(),
                    );
                    let d1 = delta(a < b) - delta(j < i);
                    e.add_term(
                        Word::from_gens(&[t(j, a), t(i, b)]),
                        &xi.mul(&QScalar::from_int(d1)).neg(),
                    );
                    if -a < b {
                        e.add_term(
                            Word::from_gens(&[t(j, -a), t(i, -b)]),
                            &sg(par(b) as u32).mul(&xi).neg(),
                        );
                    }
                    push_nonzero(&mut out, e);
                }
            }
        }
    }
    out
}

/// `R^{12}T_+^1T_+^2 = T_+^2T_+^1S^{12}` expanded by the tensor engine.
pub fn relations_a_engine(r: usize, n: usize) -> Vec<AlgElement> {
    let l = layout2(n);
    let t1 = t_plus(&l, 0, 2, r, n);
    let t2 = t_plus(&l, 1, 2, r, n);
    let rr = Mixed::from_op(&l, &build_r(r), &[0, 1]);
    let s = Mixed::from_op(&l, &build_s(n), &[0, 1]);
    entries(
        &Mixed::mul_all(&[&rr, &t1, &t2]),
        &Mixed::mul_all(&[&t2, &t1, &s]),
    )
}

/// `S^{12}T^1T^2 = T^2T^1S^{12}` over signed rows, then folded by `t_{-i,-a} = t_{ia}`.
pub fn relations_a_unfolded(r: usize, n: usize) -> Vec<AlgElement> {
    let l = layout2(r.max(n));
    let t1 = t_full(&l, 0, 2, r, n);
    let t2 = t_full(&l, 1, 2, r, n);
    let sl = Mixed::from_op(&l, &build_s(r), &[0, 1]);
    let sr = Mixed::from_op(&l, &build_s(n), &[0, 1]);
    entries(
        &Mixed::mul_all(&[&sl, &t1, &t2]),
        &Mixed::mul_all(&[&t2, &t1, &sr]),
    )
}

/// `R'^{12}T_-^1T_-^2 = T_-^2T_-^1S'^{12}`, the presentation through `t_{-i,a}`.
pub fn relations_a_minus(r: usize, n: usize) -> Vec<AlgElement> {
    let l = layout2(r.max(n));
    let t1 = t_minus(&l, 0, 2, r, n);
    let t2 = t_minus(&l, 1, 2, r, n);
    let rr = Mixed::from_op(&l, &build_r_prime(r), &[0, 1]);
    let s = Mixed::from_op(&l, &build_s_prime(n), &[0, 1]);
    entries(
        &Mixed::mul_all(&[&rr, &t1, &t2]),
        &Mixed::mul_all(&[&t2, &t1, &s]),
    )
}

/// Closed form of the unfolded relations for all `i, j ∈ I_{r|r}`, folded:
/// `(-1)^{|i||j|+|j||b|+|b||i|}(q^{φ(i,j)} t_ia t_jb - (-1)^{(|i|+|a|)(|j|+|b|)} q^{φ(a,b)} t_jb t_ia)
///   = ξ(δ_{a<b} - δ_{j<i}) t_ja t_ib + (-1)^{|j|+|b|} ξ(δ_{-a<b} - δ_{j<-i}) t_{j,-a} t_{i,-b}`.
pub fn relations_a_unfolded_closed(r: usize, n: usize) -> Vec<AlgElement> {
    let xi = QScalar::xi();
    let mut out = Vec::new();
    for &i in &iset(r) {
        for &j in &iset(r) {
            for &a in &iset(n) {
                for &b in &iset(n) {
                    let (pi, pj, pa, pb) = (par(i), par(j), par(a), par(b));
                    let pre = sg(((pi & pj) ^ (pj & pb) ^ (pb & pi)) as u32);
                    let ts = vec![
                        (
                            pre.mul(&QScalar::q_pow(phi(i, j))),
                            w2(Sym::t(i, a), Sym::t(j, b)),
                        ),
                        (
                            pre.mul(&sg(((pi ^ pa) & (pj ^ pb)) as u32))
                                .mul(&QScalar::q_pow(phi(a, b)))
                                .neg(),
                            w2(Sym::t(j, b), Sym::t(i, a)),
                        ),
                        (
                            xi.mul(&QScalar::from_int(delta(a < b) - delta(j < i)))
                                .neg(),
                            w2(Sym::t(j, a), Sym::t(i, b)),
                        ),
                        (
                            sg((pj ^ pb) as u32)
                                .mul(&xi)
                                .mul(&QScalar::from_int(delta(-a < b) - delta(j < -i)))
                                .neg(),
                            w2(Sym::t(j, -a), Sym::t(i, -b)),
                        ),
                    ];
                    push_nonzero(&mut out, fold_element(&ts));
                }
            }
        }
    }
    out
}

/// `T̄^1T̄^2S^{12} = S^{12}T̄^2T̄^1`, with `S` for `s` on the left and for `n` on the right.
pub fn relations_abar(s: usize, n: usize) -> Vec<AlgElement> {
    relations_abar_with(s, n, TbarFold::Standard)
}

pub fn relations_abar_with(s: usize, n: usize, conv: TbarFold) -> Vec<AlgElement> {
    let l = layout2(s.max(n));
    let b1 = t_bar(&l, 0, 2, s, n);
    let b2 = t_bar(&l, 1, 2, s, n);
    let ss = Mixed::from_op(&l, &build_s(s), &[0, 1]);
    let sn = Mixed::from_op(&l, &build_s(n), &[0, 1]);
    entries_with(
        &Mixed::mul_all(&[&b1, &b2, &ss]),
        &Mixed::mul_all(&[&sn, &b2, &b1]),
        conv,
    )
}

/// One cross relation in closed form:
/// `t̄_αb t_ia - (-1)^{|a|(|α|+|b|)} q^{-φ(b,a)} t_ia t̄_αb
///   + (-1)^{|a||α|} ξ Σ_{p<a} t_ip (δ_ab t̄_αp + δ_{a,-b} (-1)^{|p|} t̄_{α,-p})`.
pub fn cross_relation(alpha: i8, b: i8, i: i8, a: i8, n: usize, conv: TbarFold) -> AlgElement {
    let xi = QScalar::xi();
    let mut ts = vec![
        (QScalar::one(), w2(Sym::tbar(alpha, b), Sym::t(i, a))),
        (
            sg((par(a) & (par(alpha) ^ par(b))) as u32)
                .mul(&QScalar::q_pow(-phi(b, a)))
                .neg(),
            w2(Sym::t(i, a), Sym::tbar(alpha, b)),
        ),
    ];
    let pre = sg((par(a) & par(alpha)) as u32).mul(&xi);
    for &p in iset(n).iter().filter(|&&p| p < a) {
        if a == b {
            ts.push((pre.clone(), w2(Sym::t(i, p), Sym::tbar(alpha, p))));
        }
        if a == -b {
            ts.push((
                pre.mul(&sg(par(p) as u32)),
                w2(Sym::t(i, p), Sym::tbar(alpha, -p)),
            ));
        }
    }
    fold_element_with(&ts, conv)
}

/// All cross relations for `α ∈ I_{s|s}`, `b, a ∈ I_{n|n}`, `i = 1..r`.
pub fn relations_cross(r: usize, s: usize, n: usize) -> Vec<AlgElement> {
    relations_cross_with(r, s, n, TbarFold::Standard)
}

pub fn relations_cross_with(r: usize, s: usize, n: usize, conv: TbarFold) -> Vec<AlgElement> {
    let mut out = Vec::new();
    for &al in &iset(s) {
        for &b in &iset(n) {
            for i in 1..=r as i8 {
                for &a in &iset(n) {
                    push_nonzero(&mut out, cross_relation(al, b, i, a, n, conv));
                }
            }
        }
    }
    out
}

/// Cross relations restricted to rows of one sign of `α`.
pub fn relations_cross_rows(r: usize, s: usize, n: usize, negative: bool) -> Vec<AlgElement> {
    let mut out = Vec::new();
    for &al in iset(s).iter().filter(|&&al| (al < 0) == negative) {
        for &b in &iset(n) {
            for i in 1..=r as i8 {
                for &a in &iset(n) {
                    push_nonzero(&mut out, cross_relation(al, b, i, a, n, TbarFold::Standard));
                }
            }
        }
    }
    out
}

/// `T̄^1T_+^2 = T_+^2(S^{-1})^{12}T̄^1` expanded by the tensor engine.
pub fn relations_cross_engine(r: usize, s: usize, n: usize) -> Vec<AlgElement> {
    let l = layout2(r.max(s).max(n));
    let tb = t_bar(&l, 0, 2, s, n);
    let tp = t_plus(&l, 1, 2, r, n);
    let si = Mixed::from_op(&l, &build_s_inverse(n), &[0, 1]);
    entries(&tb.mul(&tp), &Mixed::mul_all(&[&tp, &si, &tb]))
}

/// `T̄^1T_-^2 = T_-^2(S'^{-1})^{12}T̄^1`, folded through `t_{-i,a} = t_{i,-a}`.
pub fn relations_cross_minus(r: usize, s: usize, n: usize) -> Vec<AlgElement> {
    let l = layout2(r.max(s).max(n));
    let tb = t_bar(&l, 0, 2, s, n);
    let tm = t_minus(&l, 1, 2, r, n);
    let si = Mixed::from_op(&l, &build_s_prime_inverse(n), &[0, 1]);
    entries(&tb.mul(&tm), &Mixed::mul_all(&[&tm, &si, &tb]))
}

/// Row space of a list of elements over a shared word index.
pub struct Span {
    pub index: BTreeMap<Word, usize>,
    pub echelon: Echelon<QScalar>,
}

fn to_rows(index: &BTreeMap<Word, usize>, els: &[AlgElement]) -> Vec<SparseVec<QScalar>> {
    els.iter()
        .map(|e| {
            let mut v: SparseVec<QScalar> = e
                .terms()
                .iter()
                .map(|(w, c)| (index[w], c.clone()))
                .collect();
            v.sort_by_key(|x| x.0);
            v
        })
        .collect()
}

/// Word index for the union of several lists, in word order.
pub fn word_index<'a>(lists: impl IntoIterator<Item = &'a [AlgElement]>) -> BTreeMap<Word, usize> {
    let mut words: Vec<Word> = lists
        .into_iter()
        .flatten()
        .flat_map(|e| e.terms().keys().cloned())
        .collect();
    words.sort();
    words.dedup();
    words.into_iter().enumerate().map(|(k, w)| (w, k)).collect()
}

impl Span {
    pub fn new(index: BTreeMap<Word, usize>, els: &[AlgElement]) -> Span {
        let mut echelon = Echelon::new(index.len());
        for v in to_rows(&index, els) {
            echelon.insert(&v);
        }
        Span { index, echelon }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Words outside the index make an element lie outside the span unless their
    /// coefficients cancel, which cannot happen in a canonical element.
    pub fn contains(&self, e: &AlgElement) -> bool {
        if e.terms().keys().any(|w| !self.index.contains_key(w)) {
            return false;
        }
        self.echelon
            .contains(&to_rows(&self.index, std::slice::from_ref(e))[0])
    }

    pub fn contains_all(&self, els: &[AlgElement]) -> bool {
        els.iter().all(|e| self.contains(e))
    }

    /// Reduced basis of the span as elements, leading words increasing.
    pub fn basis(&mut self) -> Vec<AlgElement> {
        self.echelon.make_reduced();
        let words: Vec<&Word> = self.index.keys().collect();
        self.echelon
            .pivots()
            .into_iter()
            .map(|p| {
                AlgElement::from_terms(
                    self.echelon
                        .pivot_row(p)
                        .unwrap()
                        .iter()
                        .map(|(j, c)| (words[*j].clone(), c.clone())),
                )
            })
            .collect()
    }
}

/// `span(a) == span(b)`.
pub fn same_span(a: &[AlgElement], b: &[AlgElement]) -> bool {
    let index = word_index([a, b]);
    let sa = Span::new(index.clone(), a);
    let sb = Span::new(index, b);
    sa.rank() == sb.rank() && sa.contains_all(b)
}

/// Deduplicates a relation list by row reduction; returns the reduced basis.
pub fn reduce_relations(els: &[AlgElement]) -> Vec<AlgElement> {
    Span::new(word_index([els]), els).basis()
}

/// Equivalence of presentations: the folded unfolded relations (closed
/// form and engine) span the same space as the positive-row relations (closed form
/// and engine).
pub fn relations_a_unfolded_equivalence(r: usize, n: usize) -> bool {
    let base = relations_a(r, n);
    same_span(&base, &relations_a_engine(r, n))
        && same_span(&base, &relations_a_unfolded_closed(r, n))
        && same_span(&base, &relations_a_unfolded(r, n))
}

/// The alternative intertwiner through `T_-` gives the same cross relations.
pub fn relations_cross_alternative(r: usize, s: usize, n: usize) -> bool {
    same_span(&relations_cross(r, s, n), &relations_cross_minus(r, s, n))
}

/// One relation per line in the element syntax.
pub fn dump(rels: &[AlgElement]) -> String {
    let mut s = String::new();
    for e in rels {
        s.push_str(&e.to_string());
        s.push('\n');
    }
    s
}

/// The reduced relation bases of the three kinds, used by the graded engine.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub a: Vec<AlgElement>,
    pub abar: Vec<AlgElement>,
    pub cross: Vec<AlgElement>,
}

impl RelationSet {
    pub fn new(r: usize, s: usize, n: usize) -> RelationSet {
        RelationSet::with_fold(r, s, n, TbarFold::Standard)
    }

    pub fn with_fold(r: usize, s: usize, n: usize, conv: TbarFold) -> RelationSet {
        RelationSet {
            a: if r > 0 {
                reduce_relations(&relations_a(r, n))
            } else {
                Vec::new()
            },
            abar: if s > 0 {
                reduce_relations(&relations_abar_with(s, n, conv))
            } else {
                Vec::new()
            },
            cross: if r > 0 && s > 0 {
                reduce_relations(&relations_cross_with(r, s, n, conv))
            } else {
                Vec::new()
            },
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &AlgElement> {
        self.a.iter().chain(&self.abar).chain(&self.cross)
    }
}

/// Scalar operator helper shared by callers that embed into two matrix slots.
pub fn op_in(layout: &[Slot], op: &SuperOp, pos: [usize; 2]) -> Mixed {
    Mixed::from_op(layout, op, &pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u8, a: i8) -> GenId {
        GenId::t(i, a)
    }
    fn tb(i: u8, a: i8) -> GenId {
        GenId::tbar(i, a)
    }
    fn w(g: &[GenId]) -> Word {
        Word::from_gens(g)
    }

    #[test]
    fn folding() {
        assert_eq!(fold_t(-1, -2), (1, t(1, 2)));
        assert_eq!(fold_t(1, 1), (1, t(1, 1)));
        assert_eq!(fold_tbar(-1, -1), (1, tb(1, 1)));
        assert_eq!(fold_tbar(-1, 1), (-1, tb(1, -1)));
        assert_eq!(fold_tbar(-2, 2), (-1, tb(2, -2)));
        // idempotent on representatives
        for g in [t(1, 2), tb(1, -1)] {
            assert_eq!(fold_sym(g.as_sym()), (1, g));
        }
        // t̄_{α,b} = (-1)^{|α|+|b|} t̄_{-α,-b} is consistent at α > 0
        for b in [-2i8, -1, 1, 2] {
            let (s, g) = fold_tbar(-1, -b);
            let rhs = if par(b) == 0 { 1 } else { -1 };
            assert_eq!((s, g), (rhs, tb(1, b)));
        }
    }

    #[test]
    fn a11_examples() {
        let rels = relations_a(1, 1);
        let odd2 = AlgElement::term(
            w(&[t(1, -1), t(1, -1)]),
            QScalar::q().add(&QScalar::q_pow(-1)),
        );
        assert!(rels.contains(&odd2));
        // t_{1,-1}t_{1,1} = q^2 t_{1,1}t_{1,-1}
        let mixed = AlgElement::from_terms([
            (w(&[t(1, -1), t(1, 1)]), QScalar::one()),
            (w(&[t(1, 1), t(1, -1)]), QScalar::q_pow(2).neg()),
        ]);
        assert!(same_span(&rels, &[odd2.clone(), mixed.clone()]));
        // a = b = 1 leaves -ξ t_{1,-1}^2 rather than cancelling outright
        assert_eq!(rels.len(), 4);
    }

    #[test]
    fn presentations_agree() {
        for (r, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            assert!(relations_a_unfolded_equivalence(r, n), "({r},{n})");
            assert!(
                same_span(&relations_a(r, n), &relations_a_minus(r, n)),
                "T_- ({r},{n})"
            );
        }
    }

    #[test]
    fn cross_examples() {
        let e = cross_relation(1, 1, 1, 1, 1, TbarFold::Standard);
        let want = AlgElement::from_terms([
            (w(&[tb(1, 1), t(1, 1)]), QScalar::one()),
            (w(&[t(1, 1), tb(1, 1)]), QScalar::q_pow(-1).neg()),
            (w(&[t(1, -1), tb(1, -1)]), QScalar::xi()),
        ]);
        assert_eq!(e, want);
        let e = cross_relation(1, 1, 1, -1, 1, TbarFold::Standard);
        let want = AlgElement::from_terms([
            (w(&[tb(1, 1), t(1, -1)]), QScalar::one()),
            (w(&[t(1, -1), tb(1, 1)]), QScalar::q().neg()),
        ]);
        assert_eq!(e, want);
    }

    #[test]
    fn cross_engine_and_alternative() {
        for (r, s, n) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 2, 1)] {
            let c = relations_cross(r, s, n);
            assert!(
                same_span(&c, &relations_cross_engine(r, s, n)),
                "({r},{s},{n})"
            );
            assert!(relations_cross_alternative(r, s, n), "({r},{s},{n})");
            let pos = relations_cross_rows(r, s, n, false);
            let neg = relations_cross_rows(r, s, n, true);
            let idx = word_index([c.as_slice()]);
            assert!(Span::new(idx, &pos).contains_all(&neg));
        }
    }

    #[test]
    fn abar_is_pure_tbar() {
        for (s, n) in [(1, 1), (1, 2), (2, 1)] {
            for e in relations_abar(s, n) {
                assert_eq!(e.bidegrees(), vec![(0, 2)]);
            }
        }
    }
}
