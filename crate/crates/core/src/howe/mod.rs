//! The map `Δ̃_{r,s}: A_{r,s} → 𝒪_{r,s}`, the operator `Ω` on `A_{r,s}⊗A_{r,s}`,
//! and the checks tying them together.
//!
//! `A_{r,s}` is the coordinate algebra with `r` rows over `I_{s|s}`, i.e.
//! `AlgebraSpec::a(r, s)`. Its generators `t_iα` have `i > 0`, so no folding
//! happens on that side.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{AlgElement, Algebra, AlgebraKind, AlgebraSpec, Bideg, Word};
use crate::invariants::Invariants;
use crate::linalg::Echelon;
use crate::qfield::QScalar;
use crate::relset::{fold_element, t_bar, t_plus, GenId};
use crate::supertensor::{build_s, iset, par, Kind, Mixed, Slot, Space, Sym, SymWord};

#[cfg(test)]
mod tests;

/// An element of `A_{r,s}⊗A_{r,s}` on free words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PairElement {
    terms: BTreeMap<(Word, Word), QScalar>,
}

impl PairElement {
    pub fn zero() -> PairElement {
        PairElement::default()
    }

    pub fn pure(u: Word, v: Word) -> PairElement {
        let mut p = PairElement::zero();
        p.add_term(u, v, &QScalar::one());
        p
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
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

    pub fn add_scaled(&mut self, o: &PairElement, c: &QScalar) {
        for ((u, v), a) in &o.terms {
            self.add_term(u.clone(), v.clone(), &a.mul(c));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Word lengths of the two sides, if homogeneous.
    pub fn degrees(&self) -> Option<(usize, usize)> {
        let ds: BTreeSet<(usize, usize)> =
            self.terms.keys().map(|(u, v)| (u.len(), v.len())).collect();
        (ds.len() == 1).then(|| *ds.iter().next().unwrap())
    }
}

impl fmt::Display for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((u, v), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * ({u}) ⊗ ({v})", c.to_token())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which product of `S`-factors closes the `X`-product evaluation of `Δ̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenDeltaReading {
    /// `S^{12}S^{13}⋯S^{1k}`.
    FirstColumn,
    /// `Π_{m=2..k} S^{1m}S^{2m}⋯S^{m-1,m}`, the product over all pairs obtained by
    /// splitting off the last factor repeatedly.
    AllPairs,
}

impl GenDeltaReading {
    fn pairs(self, k: usize) -> Vec<(usize, usize)> {
        match self {
            GenDeltaReading::FirstColumn => (1..k).map(|m| (0, m)).collect(),
            GenDeltaReading::AllPairs => (1..k).flat_map(|m| (0..m).map(move |l| (l, m))).collect(),
        }
    }
}

fn t_gen(s: &Sym) -> GenId {
    debug_assert!(s.kind == Kind::T && s.row > 0);
    GenId::t(s.row as u8, s.col)
}

fn a_word(w: &[Sym]) -> Word {
    Word(w.iter().map(t_gen).collect())
}

/// `Δ̃(t_{i_1α_1}⋯t_{i_kα_k}) = Σ_b ± t_{i_1b_1}⋯t_{i_kb_k} t̄_{α_kb_k}⋯t̄_{α_1b_1}`
/// as an unreduced element of `𝒪_{r,s}`.
///
/// The coproduct and antipode signs cancel letter by letter; what remains is the
/// Koszul sign of sorting `Π (a_m⊗c_m)` into `Π a_m ⊗ Π c_m` times the reversal
/// sign of the antipode, `Π_{m<l} (-1)^{|c_m|(|a_l|+|c_l|)} = Π_{m<l} (-1)^{|c_m||α_l|}`
/// with `c_m = t_{b_mα_m}`.
pub fn delta_tilde(w: &Word, n: usize) -> AlgElement {
    let k = w.len();
    if k == 0 {
        return AlgElement::one();
    }
    let letters: Vec<(i8, i8)> = w
        .gens()
        .iter()
        .map(|g| {
            assert!(g.kind == Kind::T, "Δ̃ is defined on t-words");
            (g.row as i8, g.col)
        })
        .collect();
    let idx = iset(n);
    let mut terms = Vec::new();
    let mut b = vec![0usize; k];
    loop {
        let mut sgn = 0u8;
        for m in 0..k {
            let cm = par(idx[b[m]]) ^ par(letters[m].1);
            for l in m + 1..k {
                sgn ^= cm & par(letters[l].1);
            }
        }
        let mut sw = SymWord::new();
        for m in 0..k {
            sw.push(Sym::t(letters[m].0, idx[b[m]]));
        }
        for m in (0..k).rev() {
            sw.push(Sym::tbar(letters[m].1, idx[b[m]]));
        }
        terms.push((QScalar::from_int(if sgn == 0 { 1 } else { -1 }), sw));
        let mut p = 0;
        while p < k {
            b[p] += 1;
            if b[p] < idx.len() {
                break;
            }
            b[p] = 0;
            p += 1;
        }
        if p == k {
            break;
        }
    }
    fold_element(&terms)
}

pub fn delta_tilde_element(x: &AlgElement, n: usize) -> AlgElement {
    let mut out = AlgElement::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&delta_tilde(w, n), c);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GenDeltaReport {
    pub k: usize,
    pub reading: GenDeltaReading,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl GenDeltaReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaMulReport {
    pub exhaustive_checked: usize,
    pub random_checked: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl DeltaMulReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityRow {
    pub degree: usize,
    pub domain_dim: usize,
    pub rank: usize,
    pub invariant_dim: usize,
    pub images_invariant: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DescentReport {
    pub degrees: (usize, usize),
    pub checked: usize,
    pub failures: Vec<String>,
}

impl DescentReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Normal forms in `𝒪_{r,s}` as coordinates on `A_{r,n}⊗Ā_{s,n}`.
///
/// A word is read left to right. A `t̄` multiplies the `Ā` factor. A `t` must first
/// pass the current `Ā` basis word `ā`: `ā·t` is rewritten in the small component
/// `𝒪(1, |ā|)`, whose basis words all have the shape `t_x·ā'`, and `t_x` then
/// multiplies the `A` factor. Only components `(1, m)` of `𝒪` are ever built.
/// A zero result proves the element vanishes in `𝒪`.
pub struct Braided<'a> {
    pub o: &'a Algebra,
    pub a: Algebra,
    pub abar: Algebra,
    passes: Mutex<HashMap<(usize, usize, usize), Arc<Vec<(GenId, usize, QScalar)>>>>,
}

/// Coordinates on pairs of basis words, per bidegree.
pub type PairCoords = BTreeMap<(usize, usize), BTreeMap<(usize, usize), QScalar>>;

impl<'a> Braided<'a> {
    pub fn new(o: &'a Algebra) -> Result<Braided<'a>> {
        let sp = o.spec;
        if sp.kind != AlgebraKind::O {
            return Err(Error::Invalid(
                "braided normal forms need the braided product".into(),
            ));
        }
        Ok(Braided {
            o,
            a: Algebra::new(AlgebraSpec::a(sp.r, sp.n)),
            abar: Algebra::new(AlgebraSpec::abar(sp.s, sp.n)),
            passes: Mutex::new(HashMap::new()),
        })
    }

    /// `ā_j·t_g = Σ c·t_x·ā_{j'}` for the basis word `ā_j` of degree `m`.
    fn pass(&self, m: usize, j: usize, g: GenId) -> Result<Arc<Vec<(GenId, usize, QScalar)>>> {
        let gi = self
            .o
            .gen_index(&g)
            .ok_or_else(|| Error::Invalid(format!("{g} is not a generator")))?;
        if let Some(p) = self.passes.lock().unwrap().get(&(m, j, gi)) {
            return Ok(p.clone());
        }
        let bar = self.abar.component((0, m))?;
        let w = bar.basis[j].push(g);
        let target = self.o.component((1, m))?;
        let mut out = Vec::new();
        for (k, c) in self.o.nf_word(&w)? {
            let bw = &target.basis[k];
            let (head, rest) = bw.split_at(1);
            let tx = head.gens()[0];
            let jj = match (tx.kind, bar.index.get(&rest)) {
                (Kind::T, Some(&jj)) => jj,
                _ => {
                    return Err(Error::Invalid(format!(
                        "basis word {bw} of 𝒪(1,{m}) is not of the form t·ā"
                    )));
                }
            };
            out.push((tx, jj, c));
        }
        let out = Arc::new(out);
        self.passes.lock().unwrap().insert((m, j, gi), out.clone());
        Ok(out)
    }

    fn word(&self, w: &Word) -> Result<(Bideg, BTreeMap<(usize, usize), QScalar>)> {
        let mut d: Bideg = (0, 0);
        let mut cur: BTreeMap<(usize, usize), QScalar> =
            [((0, 0), QScalar::one())].into_iter().collect();
        for &g in w.gens() {
            let mut next: BTreeMap<(usize, usize), QScalar> = BTreeMap::new();
            let mut put = |k: (usize, usize), c: QScalar| {
                let e = next.entry(k).or_insert_with(QScalar::zero);
                *e = e.add(&c);
            };
            match g.kind {
                Kind::Tbar => {
                    for ((i, j), c) in &cur {
                        for (jj, a) in self.abar.mul_gen((0, d.1), &[(*j, QScalar::one())], g)?.1 {
                            put((*i, jj), a.mul(c));
                        }
                    }
                    d.1 += 1;
                }
                Kind::T => {
                    for ((i, j), c) in &cur {
                        for (tx, jj, b) in self.pass(d.1, *j, g)?.iter() {
                            let cb = b.mul(c);
                            for (ii, a) in self.a.mul_gen((d.0, 0), &[(*i, QScalar::one())], *tx)?.1
                            {
                                put((ii, *jj), a.mul(&cb));
                            }
                        }
                    }
                    d.0 += 1;
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        Ok((d, cur))
    }

    pub fn coords(&self, x: &AlgElement) -> Result<PairCoords> {
        let mut out = PairCoords::new();
        for (w, c) in x.terms() {
            let (d, v) = self.word(w)?;
            let part = out.entry(d).or_default();
            for (k, a) in v {
                let e = part.entry(k).or_insert_with(QScalar::zero);
                *e = e.add(&a.mul(c));
            }
        }
        for part in out.values_mut() {
            part.retain(|_, c| !c.is_zero());
        }
        out.retain(|_, p| !p.is_empty());
        Ok(out)
    }

    pub fn is_zero(&self, x: &AlgElement) -> Result<bool> {
        Ok(self.coords(x)?.is_empty())
    }

    /// Back to an element of `𝒪` written on words `a·ā`.
    pub fn element(&self, c: &PairCoords) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (&(d1, d2), part) in c {
            let ca = self.a.component((d1, 0))?;
            let cb = self.abar.component((0, d2))?;
            for (&(i, j), x) in part {
                out.add_term(ca.basis[i].concat(&cb.basis[j]), x);
            }
        }
        Ok(out)
    }

    pub fn normal_form(&self, x: &AlgElement) -> Result<AlgElement> {
        self.element(&self.coords(x)?)
    }
}

type OmegaTable = BTreeMap<(Word, Word), PairElement>;

/// `A_{r,s}` and `𝒪_{r,s}` side by side, with cached `Ω` tables per word-length pair.
pub struct Howe<'a> {
    pub a: &'a Algebra,
    pub o: &'a Algebra,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub braided: Braided<'a>,
    omegas: Mutex<HashMap<(usize, usize), Arc<OmegaTable>>>,
}

impl<'a> Howe<'a> {
    pub fn new(a: &'a Algebra, o: &'a Algebra) -> Result<Howe<'a>> {
        let os = o.spec;
        if os.kind != AlgebraKind::O || a.spec != AlgebraSpec::a(os.r, os.s) {
            return Err(Error::Invalid(format!(
                "expected A({},{}) next to the braided product, got {:?}",
                os.r, os.s, a.spec
            )));
        }
        Ok(Howe {
            a,
            o,
            r: os.r,
            s: os.s,
            n: os.n,
            braided: Braided::new(o)?,
            omegas: Mutex::new(HashMap::new()),
        })
    }

    /// All `Ω(u⊗v)` with `|u| = p`, `|v| = q`, read off
    /// `Ω(T_+^1⋯T_+^p T_+^{p+1}⋯T_+^{p+q}) = (same)·S^{(p,k)}⋯S^{(p,p+1)}`, where
    /// `S^{(p,j)} = S^{1j}⋯S^{pj}` acts on the column indices.
    fn omega_table(&self, p: usize, q: usize) -> Arc<OmegaTable> {
        if let Some(t) = self.omegas.lock().unwrap().get(&(p, q)) {
            return t.clone();
        }
        let k = p + q;
        let sp = Space::signed(self.r.max(self.s));
        let mut layout = vec![Slot::Mat(sp); k];
        layout.extend([Slot::Alg, Slot::Alg]);
        let mats: Vec<Mixed> = (0..k)
            .map(|j| t_plus(&layout, j, if j < p { k } else { k + 1 }, self.r, self.s))
            .collect();
        let m = Mixed::mul_all(&mats.iter().collect::<Vec<_>>());
        let s = build_s(self.s);
        let mut sprod = Mixed::one(&layout);
        for j in (p..k).rev() {
            for l in 0..p {
                sprod = sprod.mul(&Mixed::from_op(&layout, &s, &[l, j]));
            }
        }
        let ms = m.mul(&sprod).components();
        let mut table = OmegaTable::new();
        for (key, ts) in m.components() {
            let [(ws, c)] = ts.as_slice() else {
                unreachable!("one word pair per entry of T_+^1⋯T_+^k")
            };
            let inv = c.inv().expect("sign");
            let mut out = PairElement::zero();
            for (ws2, c2) in ms.get(&key).map(Vec::as_slice).unwrap_or(&[]) {
                out.add_term(a_word(&ws2[0]), a_word(&ws2[1]), &c2.mul(&inv));
            }
            table.insert((a_word(&ws[0]), a_word(&ws[1])), out);
        }
        let table = Arc::new(table);
        self.omegas.lock().unwrap().insert((p, q), table.clone());
        table
    }

    pub fn omega(&self, u: &Word, v: &Word) -> Result<PairElement> {
        if u.is_empty() || v.is_empty() {
            return Ok(PairElement::pure(u.clone(), v.clone()));
        }
        let t = self.omega_table(u.len(), v.len());
        t.get(&(u.clone(), v.clone())).cloned().ok_or_else(|| {
            Error::Invalid(format!(
                "({u}) ⊗ ({v}) is not a pair of A({},{}) words",
                self.r, self.s
            ))
        })
    }

    pub fn omega_element(&self, x: &PairElement) -> Result<PairElement> {
        let mut out = PairElement::zero();
        for ((u, v), c) in x.terms() {
            out.add_scaled(&self.omega(u, v)?, c);
        }
        Ok(out)
    }

    pub fn delta_tilde(&self, w: &Word) -> AlgElement {
        delta_tilde(w, self.n)
    }

    /// `Δ̃(w)` in normal form.
    pub fn delta_tilde_nf(&self, w: &Word) -> Result<AlgElement> {
        self.braided.normal_form(&self.delta_tilde(w))
    }

    /// `mul∘(Δ̃⊗Δ̃)(x)`, unreduced.
    pub fn mul_delta(&self, x: &PairElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for ((u, v), c) in x.terms() {
            out.add_scaled(&self.delta_tilde(u).concat(&self.delta_tilde(v)), c);
        }
        out
    }

    /// `Δ̃(fg) = mul∘(Δ̃⊗Δ̃)∘Ω(f⊗g)` in `𝒪_{r,s}`; returns the nonzero difference.
    pub fn delta_mul_defect(&self, f: &Word, g: &Word) -> Result<AlgElement> {
        let lhs = self.delta_tilde(&f.concat(g));
        let rhs = self.mul_delta(&self.omega(f, g)?);
        self.braided.normal_form(&lhs.sub(&rhs))
    }

    pub fn check_delta_mul(&self, f: &Word, g: &Word) -> Result<bool> {
        Ok(self.delta_mul_defect(f, g)?.is_zero())
    }

    /// Every pair of generators, then `samples` random pairs of a length-2 word
    /// and a generator drawn from `seed`.
    pub fn delta_mul_suite(&self, seed: u64, samples: usize) -> Result<DeltaMulReport> {
        let gens = self.a.generators().to_vec();
        let mut pairs: Vec<(Word, Word)> = Vec::new();
        for &x in &gens {
            for &y in &gens {
                pairs.push((Word::from_gens(&[x]), Word::from_gens(&[y])));
            }
        }
        let exhaustive = pairs.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let mut pick = || gens[rng.gen_range(0..gens.len())];
            let f = Word::from_gens(&[pick(), pick()]);
            let g = Word::from_gens(&[pick()]);
            pairs.push((f, g));
        }
        let bad = crate::par::try_map(&pairs, |(f, g)| -> Result<Option<String>> {
            let d = self.delta_mul_defect(f, g)?;
            Ok((!d.is_zero()).then(|| format!("f = {f}, g = {g}: defect {d}")))
        })?;
        Ok(DeltaMulReport {
            exhaustive_checked: exhaustive,
            random_checked: samples,
            seed,
            failures: bad.into_iter().flatten().collect(),
        })
    }

    /// Compares `Δ̃` on every entry of `T_+^1⋯T_+^k` against
    /// `X^1⋯X^k` times the `S`-factors of `reading`.
    pub fn check_gen_delta(&self, k: usize, reading: GenDeltaReading) -> Result<GenDeltaReport> {
        if k == 0 {
            return Err(Error::Invalid("k must be positive".into()));
        }
        let (r, s, n) = (self.r, self.s, self.n);
        let sp = Space::signed(r.max(s).max(n));
        let mut layout = vec![Slot::Mat(sp); k];
        layout.push(Slot::Alg);
        let tps: Vec<Mixed> = (0..k).map(|j| t_plus(&layout, j, k, r, s)).collect();
        let lhs = Mixed::mul_all(&tps.iter().collect::<Vec<_>>()).components();
        let xs: Vec<Mixed> = (0..k)
            .map(|j| t_plus(&layout, j, k, r, n).mul(&t_bar(&layout, j, k, s, n)))
            .collect();
        let mut rhs = Mixed::mul_all(&xs.iter().collect::<Vec<_>>());
        let sm = build_s(s);
        for (l, m) in reading.pairs(k) {
            rhs = rhs.mul(&Mixed::from_op(&layout, &sm, &[l, m]));
        }
        let rhs = rhs.components();
        let keys: BTreeSet<&Vec<(i8, i8)>> = lhs.keys().chain(rhs.keys()).collect();
        let jobs: Vec<(Vec<(i8, i8)>, AlgElement)> = keys
            .into_iter()
            .map(|key| {
                let mut diff = AlgElement::zero();
                for (ws, c) in lhs.get(key).map(Vec::as_slice).unwrap_or(&[]) {
                    diff.add_scaled(&self.delta_tilde(&a_word(&ws[0])), c);
                }
                let rt: Vec<(QScalar, SymWord)> = rhs
                    .get(key)
                    .map(Vec::as_slice)
                    .unwrap_or(&[])
                    .iter()
                    .map(|(ws, c)| (c.clone(), ws[0].clone()))
                    .collect();
                (key.clone(), diff.sub(&fold_element(&rt)))
            })
            .collect();
        let checked = jobs.len();
        let bad = crate::par::try_map(&jobs, |(key, diff)| -> Result<Option<String>> {
            let nf = self.braided.normal_form(diff)?;
            Ok((!nf.is_zero()).then(|| format!("entry {key:?}: {nf}")))
        })?;
        Ok(GenDeltaReport {
            k,
            reading,
            checked,
            mismatches: bad.into_iter().flatten().collect(),
        })
    }

    /// Rank of `Δ̃` on the degree-`d` basis of `A_{r,s}`, the invariant dimension
    /// in bidegree `(d, d)`, and whether every image is invariant.
    pub fn injectivity(&self, inv: &Invariants, d: usize) -> Result<InjectivityRow> {
        if self.n < self.r.max(self.s) {
            return Err(Error::Invalid(format!(
                "injectivity needs n >= max(r, s), got n = {}",
                self.n
            )));
        }
        let comp = self.a.component((d, 0))?;
        let bd = (d, d);
        let images = crate::par::try_map(&comp.basis, |w| self.o.coords(&self.delta_tilde(w), bd))?;
        let mut ech = Echelon::<QScalar>::new(self.o.component(bd)?.dim());
        for v in &images {
            ech.insert(v);
        }
        let invs = inv.invariant_subspace(bd)?;
        let images_invariant = images.iter().all(|v| invs.contains(v));
        let rank = ech.rank();
        Ok(InjectivityRow {
            degree: d,
            domain_dim: comp.dim(),
            rank,
            invariant_dim: invs.dim(),
            images_invariant,
            passed: images_invariant && rank == comp.dim() && rank == invs.dim(),
        })
    }

    /// Image of a pair element in `A(d_1)⊗A(d_2)`, as coordinates on basis pairs.
    pub fn pair_coords(&self, x: &PairElement) -> Result<BTreeMap<(usize, usize), QScalar>> {
        let mut out: BTreeMap<(usize, usize), QScalar> = BTreeMap::new();
        for ((u, v), c) in x.terms() {
            let nu = self.a.nf_word(u)?;
            let nv = self.a.nf_word(v)?;
            for (i, a) in &nu {
                let ca = a.mul(c);
                for (j, b) in &nv {
                    let e = out.entry((*i, *j)).or_insert_with(QScalar::zero);
                    *e = e.add(&ca.mul(b));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// `Ω` maps `(relations)⊗A + A⊗(relations)` into itself in word lengths
    /// `(d_1, d_2)`: for every relation `ρ` and free contexts, `Ω(aρb⊗w)` and
    /// `Ω(w⊗aρb)` vanish in `A⊗A`.
    pub fn check_omega_descent(&self, degrees: (usize, usize)) -> Result<DescentReport> {
        let (d1, d2) = degrees;
        let gens = self.a.generators().to_vec();
        let rels: Vec<AlgElement> = self.a.relations().iter().map(|(_, e)| e.clone()).collect();
        let mut jobs: Vec<(String, PairElement)> = Vec::new();
        let mut push_side = |left: bool, dr: usize, dw: usize| {
            if dr < 2 {
                return;
            }
            for (ri, rho) in rels.iter().enumerate() {
                for split in 0..=dr - 2 {
                    for a in free_words(&gens, split) {
                        for b in free_words(&gens, dr - 2 - split) {
                            let ctx = AlgElement::word(a.clone())
                                .concat(rho)
                                .concat(&AlgElement::word(b.clone()));
                            for w in free_words(&gens, dw) {
                                let mut x = PairElement::zero();
                                for (y, c) in ctx.terms() {
                                    let (u, v) = if left {
                                        (y.clone(), w.clone())
                                    } else {
                                        (w.clone(), y.clone())
                                    };
                                    x.add_term(u, v, c);
                                }
                                let side = if left { "left" } else { "right" };
                                let tag = format!(
                                    "{side} relation #{ri} in context ({a}, {b}) against {w}"
                                );
                                jobs.push((tag, x));
                            }
                        }
                    }
                }
            }
        };
        push_side(true, d1, d2);
        push_side(false, d2, d1);
        let checked = jobs.len();
        let bad = crate::par::try_map(&jobs, |(tag, x)| -> Result<Option<String>> {
            let y = self.omega_element(x)?;
            if !y.is_zero() && y.degrees() != Some(degrees) {
                return Ok(Some(format!("{tag}: degrees not preserved")));
            }
            let c = self.pair_coords(&y)?;
            Ok((!c.is_empty()).then(|| format!("{tag}: {} surviving basis pairs", c.len())))
        })?;
        Ok(DescentReport {
            degrees,
            checked,
            failures: bad.into_iter().flatten().collect(),
        })
    }
}

/// All words of length `k` over `gens`.
pub fn free_words(gens: &[GenId], k: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|w| gens.iter().map(move |&g| w.push(g)))
            .collect();
    }
    out
}
