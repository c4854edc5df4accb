//! Bigraded quotients of the free algebra by the quadratic relations.
//!
//! Components are built degree by degree: the degree-`D` quotient is spanned by
//! `b·y` with `b` a basis word one degree lower and `y` a generator, modulo the
//! images `nf(u·x)·y` of the relations `ρ = Σ c·x·y` placed after basis words `u`.
//! Only these candidate words are ever materialized.

mod element;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub use element::{AlgElement, Word};

use crate::error::{Error, Result};
use crate::linalg::{add_into, Echelon, SparseVec};
use crate::par;
use crate::qfield::{Field, QScalar};
use crate::relset::{GenId, RelationSet, TbarFold};
use crate::supertensor::{iset, Kind};

pub type Bideg = (usize, usize);

/// Default bound on the number of words of one bidegree.
pub const DEFAULT_WORD_CEILING: u128 = 200_000;

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum AlgebraKind {
    /// `A_{r,n}`: generators `t_{ia}`.
    A,
    /// `Ā_{s,n}`: generators `t̄_{αb}`.
    Abar,
    /// `𝒪_{r,s}`: both, with the cross relations.
    O,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl AlgebraSpec {
    pub fn a(r: usize, n: usize) -> AlgebraSpec {
        AlgebraSpec {
            kind: AlgebraKind::A,
            r,
            s: 0,
            n,
        }
    }

    pub fn abar(s: usize, n: usize) -> AlgebraSpec {
        AlgebraSpec {
            kind: AlgebraKind::Abar,
            r: 0,
            s,
            n,
        }
    }

    pub fn o(r: usize, s: usize, n: usize) -> AlgebraSpec {
        AlgebraSpec {
            kind: AlgebraKind::O,
            r,
            s,
            n,
        }
    }

    /// Generators in elimination order.
    pub fn generators(&self) -> Vec<GenId> {
        let mut g = Vec::new();
        if self.kind != AlgebraKind::Abar {
            for i in 1..=self.r as u8 {
                for &a in &iset(self.n) {
                    g.push(GenId::t(i, a));
                }
            }
        }
        if self.kind != AlgebraKind::A {
            for al in 1..=self.s as u8 {
                for &b in &iset(self.n) {
                    g.push(GenId::tbar(al, b));
                }
            }
        }
        g.sort_by_key(GenId::elim_key);
        g
    }

    pub fn relations(&self, conv: TbarFold) -> Vec<AlgElement> {
        match self.kind {
            AlgebraKind::A => RelationSet::with_fold(self.r, 0, self.n, conv).a,
            AlgebraKind::Abar => RelationSet::with_fold(0, self.s, self.n, conv).abar,
            AlgebraKind::O => {
                let rs = RelationSet::with_fold(self.r, self.s, self.n, conv);
                rs.all().cloned().collect()
            }
        }
    }

    /// The bidegrees of total degree `d` this algebra has.
    pub fn bidegrees(&self, d: usize) -> Vec<Bideg> {
        match self.kind {
            AlgebraKind::A => vec![(d, 0)],
            AlgebraKind::Abar => vec![(0, d)],
            AlgebraKind::O => (0..=d).map(|k| (d - k, k)).collect(),
        }
    }

    /// Number of words of a bidegree: interleavings times generator choices.
    pub fn word_count(&self, d: Bideg) -> u128 {
        let gens = self.generators();
        let nt = gens.iter().filter(|g| g.kind == Kind::T).count() as u128;
        let nb = gens.len() as u128 - nt;
        binomial((d.0 + d.1) as u128, d.0 as u128) * nt.pow(d.0 as u32) * nb.pow(d.1 as u32)
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Classical dimension of `Sym^d(C^{m|m})`: `Σ_k C(m,k) C(m+d-k-1, d-k)`.
pub fn classical_dim(m: usize, d: usize) -> u128 {
    let (m, d) = (m as u128, d as u128);
    (0..=d.min(m))
        .map(|k| {
            let rest = d - k;
            let sym = if rest == 0 {
                1
            } else if m == 0 {
                0
            } else {
                binomial(m + rest - 1, rest)
            };
            binomial(m, k) * sym
        })
        .sum()
}

/// All words of a bidegree in increasing order.
pub fn enumerate_words(spec: &AlgebraSpec, d: Bideg) -> Vec<Word> {
    let gens = spec.generators();
    let mut out = vec![Word::empty()];
    for _ in 0..d.0 + d.1 {
        out = out
            .into_iter()
            .flat_map(|w| gens.iter().map(move |&g| w.push(g)))
            .collect();
    }
    out.retain(|w| w.bidegree() == d);
    out.sort();
    out
}

/// One bidegree of the quotient.
#[derive(Clone, Debug)]
pub struct Component<F: Field> {
    pub bidegree: Bideg,
    /// Basis words in increasing order.
    pub basis: Vec<Word>,
    pub index: HashMap<Word, usize>,
    /// Normal form of every candidate `b·y`, keyed by `(generator index, index of b)`.
    pub cand: HashMap<(usize, usize), SparseVec<F>>,
    pub words: u128,
    pub candidates: usize,
    pub rank: usize,
}

impl<F: Field> Component<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn unit() -> Component<F> {
        let basis = vec![Word::empty()];
        Component {
            bidegree: (0, 0),
            index: [(Word::empty(), 0)].into_iter().collect(),
            basis,
            cand: HashMap::new(),
            words: 1,
            candidates: 1,
            rank: 0,
        }
    }
}

pub struct Algebra<F: Field = QScalar> {
    pub spec: AlgebraSpec,
    gens: Vec<GenId>,
    gen_index: HashMap<GenId, usize>,
    rels: Vec<(Bideg, AlgElement<F>)>,
    comps: RwLock<HashMap<Bideg, Arc<Component<F>>>>,
    ceiling: u128,
    store: Option<Arc<dyn ComponentStore<F>>>,
}

/// Persistent storage of components (see [`crate::cache`]).
pub trait ComponentStore<F: Field>: Send + Sync {
    fn load(&self, spec: &AlgebraSpec, d: Bideg) -> Option<Component<F>>;
    fn save(&self, spec: &AlgebraSpec, c: &Component<F>);
}

impl Algebra<QScalar> {
    pub fn new(spec: AlgebraSpec) -> Algebra<QScalar> {
        Algebra::with_field(spec, &()).expect("exact embedding cannot fail")
    }
}

impl<F: Field> Algebra<F> {
    pub fn with_field(spec: AlgebraSpec, ctx: &F::Ctx) -> Result<Algebra<F>> {
        Algebra::with_relations(spec, spec.relations(TbarFold::Standard), ctx)
    }

    pub fn with_relations(
        spec: AlgebraSpec,
        rels: Vec<AlgElement>,
        ctx: &F::Ctx,
    ) -> Result<Algebra<F>> {
        let gens = spec.generators();
        let gen_index = gens.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let mut rs = Vec::with_capacity(rels.len());
        for e in &rels {
            let bd = e.bidegrees();
            if bd.len() != 1 || bd[0].0 + bd[0].1 != 2 {
                return Err(Error::Invalid(format!(
                    "relation `{e}` is not homogeneous quadratic"
                )));
            }
            let ef = e.embed::<F>(ctx)?;
            if !ef.is_zero() {
                rs.push((bd[0], ef));
            }
        }
        let mut comps = HashMap::new();
        comps.insert((0, 0), Arc::new(Component::unit()));
        Ok(Algebra {
            spec,
            gens,
            gen_index,
            rels: rs,
            comps: RwLock::new(comps),
            ceiling: DEFAULT_WORD_CEILING,
            store: None,
        })
    }

    pub fn set_ceiling(&mut self, c: u128) {
        self.ceiling = c;
    }

    pub fn set_store(&mut self, s: Arc<dyn ComponentStore<F>>) {
        self.store = Some(s);
    }

    pub fn generators(&self) -> &[GenId] {
        &self.gens
    }

    pub fn gen_index(&self, g: &GenId) -> Option<usize> {
        self.gen_index.get(g).copied()
    }

    pub fn relations(&self) -> &[(Bideg, AlgElement<F>)] {
        &self.rels
    }

    fn has_bidegree(&self, d: Bideg) -> bool {
        match self.spec.kind {
            AlgebraKind::A => d.1 == 0,
            AlgebraKind::Abar => d.0 == 0,
            AlgebraKind::O => true,
        }
    }

    fn gen_deg(g: &GenId) -> Bideg {
        match g.kind {
            Kind::T => (1, 0),
            Kind::Tbar => (0, 1),
        }
    }

    fn cached(&self, d: Bideg) -> Option<Arc<Component<F>>> {
        self.comps.read().unwrap().get(&d).cloned()
    }

    /// The component of bidegree `d`, building everything below it as needed.
    pub fn component(&self, d: Bideg) -> Result<Arc<Component<F>>> {
        if let Some(c) = self.cached(d) {
            return Ok(c);
        }
        if !self.has_bidegree(d) {
            return Err(Error::Invalid(format!(
                "{:?} has no bidegree {d:?}",
                self.spec.kind
            )));
        }
        let total = d.0 + d.1;
        for t in 1..total {
            let lower: Vec<Bideg> = self
                .spec
                .bidegrees(t)
                .into_iter()
                .filter(|b| b.0 <= d.0 && b.1 <= d.1)
                .collect();
            self.build_all(&lower)?;
        }
        self.build_all(&[d])?;
        Ok(self.cached(d).expect("just built"))
    }

    /// Builds all components of total degree up to `dmax`.
    pub fn ensure_upto(&self, dmax: usize) -> Result<()> {
        for t in 1..=dmax {
            self.build_all(&self.spec.bidegrees(t))?;
        }
        Ok(())
    }

    fn build_all(&self, ds: &[Bideg]) -> Result<()> {
        let todo: Vec<Bideg> = ds
            .iter()
            .copied()
            .filter(|d| self.cached(*d).is_none())
            .collect();
        let built = par::try_map(&todo, |&d| self.build(d))?;
        let mut w = self.comps.write().unwrap();
        for c in built {
            w.entry(c.bidegree).or_insert_with(|| Arc::new(c));
        }
        Ok(())
    }

    fn sub(d: Bideg, e: Bideg) -> Option<Bideg> {
        Some((d.0.checked_sub(e.0)?, d.1.checked_sub(e.1)?))
    }

    fn build(&self, d: Bideg) -> Result<Component<F>> {
        let words = self.spec.word_count(d);
        if words > self.ceiling {
            return Err(Error::ResourceLimit {
                d1: d.0,
                d2: d.1,
                words,
                ceiling: self.ceiling,
            });
        }
        if let Some(st) = &self.store {
            if let Some(c) = st.load(&self.spec, d) {
                return Ok(c);
            }
        }
        let c = self.build_fresh(d, words)?;
        if let Some(st) = &self.store {
            st.save(&self.spec, &c);
        }
        Ok(c)
    }

    fn build_fresh(&self, d: Bideg, words: u128) -> Result<Component<F>> {
        // candidate columns b·y
        let mut cands: Vec<(Word, usize, usize)> = Vec::new();
        for (gi, g) in self.gens.iter().enumerate() {
            let Some(pd) = Algebra::<F>::sub(d, Algebra::<F>::gen_deg(g)) else {
                continue;
            };
            if !self.has_bidegree(pd) {
                continue;
            }
            let prev = self.cached(pd).expect("lower components are built first");
            for (bi, b) in prev.basis.iter().enumerate() {
                cands.push((b.push(*g), gi, bi));
            }
        }
        cands.sort_by(|a, b| a.0.cmp(&b.0));
        let col: HashMap<(usize, usize), usize> = cands
            .iter()
            .enumerate()
            .map(|(k, (_, gi, bi))| ((*gi, *bi), k))
            .collect();

        // relation rows nf(u·x)·y
        let mut jobs: Vec<(usize, usize)> = Vec::new();
        for (ri, (rd, _)) in self.rels.iter().enumerate() {
            if let Some(ud) = Algebra::<F>::sub(d, *rd) {
                if self.has_bidegree(ud) {
                    let uc = self.cached(ud).expect("built");
                    jobs.extend((0..uc.dim()).map(|ui| (ri, ui)));
                }
            }
        }
        let rows: Vec<BTreeMap<usize, F>> = par::map(&jobs, |&(ri, ui)| {
            let (rd, rel) = &self.rels[ri];
            let ud = Algebra::<F>::sub(d, *rd).unwrap();
            let mut row = BTreeMap::new();
            for (w, c) in rel.terms() {
                let (x, y) = (w.gens()[0], w.gens()[1]);
                let xd = Algebra::<F>::gen_deg(&x);
                let md = (ud.0 + xd.0, ud.1 + xd.1);
                let mid = self.cached(md).expect("built");
                let xi = self.gen_index[&x];
                let yi = self.gen_index[&y];
                for (bj, a) in &mid.cand[&(xi, ui)] {
                    add_into(&mut row, col[&(yi, *bj)], &a.mul(c));
                }
            }
            row
        });
        let mut ech = Echelon::<F>::new(cands.len());
        for row in rows {
            ech.insert_map(row);
        }
        ech.make_reduced();

        let free = ech.free_columns();
        let mut pos = vec![usize::MAX; cands.len()];
        for (k, &f) in free.iter().enumerate() {
            pos[f] = k;
        }
        let basis: Vec<Word> = free.iter().map(|&f| cands[f].0.clone()).collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let mut cand = HashMap::with_capacity(cands.len());
        for (k, (_, gi, bi)) in cands.iter().enumerate() {
            let v: SparseVec<F> = match ech.pivot_row(k) {
                None => vec![(pos[k], F::one())],
                Some(row) => row[..row.len() - 1]
                    .iter()
                    .map(|(j, a)| (pos[*j], a.neg()))
                    .collect(),
            };
            cand.insert((*gi, *bi), v);
        }
        Ok(Component {
            bidegree: d,
            basis,
            index,
            cand,
            words,
            candidates: cands.len(),
            rank: ech.rank(),
        })
    }

    /// Coordinates of a word in the basis of its component.
    pub fn nf_word(&self, w: &Word) -> Result<SparseVec<F>> {
        let Some((prefix, last)) = w.split_last() else {
            return Ok(vec![(0, F::one())]);
        };
        let gi = self
            .gen_index(&last)
            .ok_or_else(|| Error::Invalid(format!("generator {last} not in this algebra")))?;
        let comp = self.component(w.bidegree())?;
        if let Some(&k) = comp.index.get(w) {
            return Ok(vec![(k, F::one())]);
        }
        let pv = self.nf_word(&prefix)?;
        let mut acc = BTreeMap::new();
        for (b, c) in pv {
            for (j, a) in &comp.cand[&(gi, b)] {
                add_into(&mut acc, *j, &a.mul(&c));
            }
        }
        Ok(acc.into_iter().collect())
    }

    /// Coordinates of a homogeneous element of bidegree `d`.
    pub fn coords(&self, x: &AlgElement<F>, d: Bideg) -> Result<SparseVec<F>> {
        let mut acc = BTreeMap::new();
        for (w, c) in x.terms() {
            if w.bidegree() != d {
                return Err(Error::Invalid(format!("word {w} is not of bidegree {d:?}")));
            }
            for (j, a) in self.nf_word(w)? {
                add_into(&mut acc, j, &a.mul(c));
            }
        }
        Ok(acc.into_iter().collect())
    }

    pub fn element(&self, d: Bideg, v: &[(usize, F)]) -> Result<AlgElement<F>> {
        let comp = self.component(d)?;
        Ok(AlgElement::from_terms(
            v.iter().map(|(j, c)| (comp.basis[*j].clone(), c.clone())),
        ))
    }

    /// Normal form: every homogeneous part rewritten in the basis.
    pub fn normal_form(&self, x: &AlgElement<F>) -> Result<AlgElement<F>> {
        let mut parts: BTreeMap<Bideg, AlgElement<F>> = BTreeMap::new();
        for (w, c) in x.terms() {
            parts
                .entry(w.bidegree())
                .or_default()
                .add_term(w.clone(), c);
        }
        let mut out = AlgElement::zero();
        for (d, p) in parts {
            let v = self.coords(&p, d)?;
            out = out.add(&self.element(d, &v)?);
        }
        Ok(out)
    }

    pub fn multiply(&self, x: &AlgElement<F>, y: &AlgElement<F>) -> Result<AlgElement<F>> {
        self.normal_form(&x.concat(y))
    }

    /// Right multiplication of a coordinate vector of component `d` by a generator.
    pub fn mul_gen(&self, d: Bideg, v: &[(usize, F)], g: GenId) -> Result<(Bideg, SparseVec<F>)> {
        let gi = self
            .gen_index(&g)
            .ok_or_else(|| Error::Invalid(format!("generator {g} not in this algebra")))?;
        let gd = Algebra::<F>::gen_deg(&g);
        let nd = (d.0 + gd.0, d.1 + gd.1);
        let comp = self.component(nd)?;
        let mut acc = BTreeMap::new();
        for (k, c) in v {
            for (j, a) in &comp.cand[&(gi, *k)] {
                add_into(&mut acc, *j, &a.mul(c));
            }
        }
        Ok((nd, acc.into_iter().collect()))
    }

    /// Right multiplication of a coordinate vector of component `d` by a
    /// homogeneous element.
    pub fn mul_coords(
        &self,
        d: Bideg,
        v: &[(usize, F)],
        x: &AlgElement<F>,
    ) -> Result<(Bideg, SparseVec<F>)> {
        let bd = x.bidegrees();
        if bd.len() != 1 {
            return Err(Error::Invalid(format!("`{x}` is not homogeneous")));
        }
        let nd = (d.0 + bd[0].0, d.1 + bd[0].1);
        let mut acc = BTreeMap::new();
        for (w, c) in x.terms() {
            let mut cur = (d, v.to_vec());
            for &g in w.gens() {
                cur = self.mul_gen(cur.0, &cur.1, g)?;
            }
            for (j, a) in cur.1 {
                add_into(&mut acc, j, &a.mul(c));
            }
        }
        Ok((nd, acc.into_iter().collect()))
    }

    /// Dimensions by total degree, each a list over the algebra's bidegrees.
    pub fn dims_table(&self, dmax: usize) -> Result<BTreeMap<Bideg, usize>> {
        self.ensure_upto(dmax)?;
        let mut t = BTreeMap::new();
        t.insert((0, 0), 1);
        for d in 1..=dmax {
            for b in self.spec.bidegrees(d) {
                t.insert(b, self.component(b)?.dim());
            }
        }
        Ok(t)
    }

    /// Components currently built, by bidegree.
    pub fn built(&self) -> Vec<Arc<Component<F>>> {
        let mut v: Vec<_> = self.comps.read().unwrap().values().cloned().collect();
        v.sort_by_key(|c| c.bidegree);
        v
    }
}

/// Reference construction: all words of the bidegree, all relation contexts
/// `u·ρ·v`, one elimination. Exponential; for cross-checks only.
pub fn component_basis_full(spec: &AlgebraSpec, d: Bideg) -> (Vec<Word>, usize) {
    let words = enumerate_words(spec, d);
    let index: HashMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let rels = spec.relations(TbarFold::Standard);
    let mut ech = Echelon::<QScalar>::new(words.len());
    for rel in &rels {
        let rd = rel.bidegrees()[0];
        let Some(rest) = Algebra::<QScalar>::sub(d, rd) else {
            continue;
        };
        for left in 0..=rest.0 {
            for lb in 0..=rest.1 {
                let ld = (left, lb);
                let rdd = (rest.0 - left, rest.1 - lb);
                let us = enumerate_words(spec, ld);
                let vs = enumerate_words(spec, rdd);
                for u in &us {
                    for v in &vs {
                        let mut row = BTreeMap::new();
                        for (w, c) in rel.terms() {
                            add_into(&mut row, index[&u.concat(w).concat(v)], c);
                        }
                        ech.insert_map(row);
                    }
                }
            }
        }
    }
    let free = ech.free_columns();
    (
        free.into_iter().map(|k| words[k].clone()).collect(),
        ech.rank(),
    )
}

#[cfg(test)]
mod tests;
