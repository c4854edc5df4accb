//! Φ-invariants of `𝒪_{r,s}`: the elements `x_iα`, invariant subspaces per
//! bidegree, the span of products of `x`'s, and the X-relations.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::actions::{ActionTable, Actions, Family};
use crate::error::{Error, Result};
use crate::graded::{AlgElement, Algebra, AlgebraKind, AlgebraSpec, Bideg};
use crate::linalg::{add_into, Echelon, SparseVec};
use crate::qfield::{Field, QScalar};
use crate::relset::{entries, fold_element, t_bar, t_plus};
use crate::supertensor::{
    build_r, build_s, build_s_transpose, iset, Mixed, Slot, Space, Sym, SymWord,
};

#[cfg(test)]
mod tests;

/// A subspace of one component, by a basis in component coordinates.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    pub bidegree: Bideg,
    pub ambient: usize,
    pub basis: Vec<SparseVec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.ambient);
        for v in &self.basis {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.echelon().contains(v)
    }

    /// The first vector of `other` outside this subspace, if any.
    pub fn missing_from(&self, other: &Subspace<F>) -> Option<SparseVec<F>> {
        let e = self.echelon();
        other.basis.iter().find(|v| !e.contains(v)).cloned()
    }
}

/// `x_iα = Σ_p t_ip t̄_αp`, with `t̄_αp` folded when `α < 0`.
pub fn x_element(i: u8, alpha: i8, n: usize) -> AlgElement {
    let terms: Vec<(QScalar, SymWord)> = iset(n)
        .into_iter()
        .map(|p| {
            (
                QScalar::one(),
                SymWord::from_slice(&[Sym::t(i as i8, p), Sym::tbar(alpha, p)]),
            )
        })
        .collect();
    fold_element(&terms)
}

pub struct Invariants<'a, F: Field = QScalar> {
    pub alg: &'a Algebra<F>,
    pub phi: Actions<'a, F>,
    xs: Vec<((u8, i8), AlgElement<F>)>,
    spans: Mutex<BTreeMap<usize, Subspace<F>>>,
}

impl<'a, F: Field> Invariants<'a, F> {
    pub fn new(alg: &'a Algebra<F>, ctx: &F::Ctx) -> Result<Invariants<'a, F>> {
        let spec = alg.spec;
        if spec.kind != AlgebraKind::O {
            return Err(Error::Invalid(
                "invariants live in the braided product".into(),
            ));
        }
        let phi = Actions::new(alg, ActionTable::build(Family::Phi, spec)?, ctx)?;
        let mut xs = Vec::new();
        for i in 1..=spec.r as u8 {
            for &al in &iset(spec.s) {
                let x = alg.normal_form(&x_element(i, al, spec.n).embed::<F>(ctx)?)?;
                xs.push(((i, al), x));
            }
        }
        Ok(Invariants {
            alg,
            phi,
            xs,
            spans: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn x_elements(&self) -> &[((u8, i8), AlgElement<F>)] {
        &self.xs
    }

    /// `L_ab · x_iα = δ_ab x_iα` for every `x` and every `a ≤ b`; returns violations.
    pub fn check_x_invariance(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for ((i, al), x) in &self.xs {
            for &(a, b) in &self.phi.table.pairs {
                let img = self.phi.act((a, b), x)?;
                let want = if a == b {
                    x.clone()
                } else {
                    AlgElement::zero()
                };
                if img != want {
                    bad.push(format!("L[{a},{b}] x[{i},{al}] = {img}"));
                }
            }
        }
        Ok(bad)
    }

    /// Coordinates where every diagonal `L_aa` acts by 1, or `None` when some
    /// diagonal generator is not diagonal on the basis.
    fn weight_zero(&self, d: Bideg) -> Result<Option<Vec<usize>>> {
        let mats = self.phi.matrices(d)?;
        let dim = self.alg.component(d)?.dim();
        let mut keep = vec![true; dim];
        for (&(a, b), m) in mats.iter() {
            if a != b {
                continue;
            }
            for (j, col) in m.iter().enumerate() {
                match col.as_slice() {
                    [(k, c)] if *k == j => keep[j] &= c.is_one(),
                    [] => keep[j] = false,
                    _ => return Ok(None),
                }
            }
        }
        Ok(Some((0..dim).filter(|&j| keep[j]).collect()))
    }

    /// Joint kernel of `L_ab - δ_ab` over all Φ-generators, in one stacked elimination.
    pub fn invariant_subspace(&self, d: Bideg) -> Result<Subspace<F>> {
        let dim = self.alg.component(d)?.dim();
        let support = match self.weight_zero(d)? {
            Some(k) => k,
            None => (0..dim).collect(),
        };
        let mats = self.phi.matrices(d)?;
        let pos: BTreeMap<usize, usize> =
            support.iter().enumerate().map(|(p, &j)| (j, p)).collect();
        let mut ech = Echelon::<F>::new(support.len());
        for (&(a, b), m) in mats.iter() {
            let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
            for (p, &j) in support.iter().enumerate() {
                for (i, c) in &m[j] {
                    add_into(rows.entry(*i).or_default(), p, c);
                }
                if a == b {
                    add_into(rows.entry(j).or_default(), p, &F::one().neg());
                }
            }
            for (i, row) in rows {
                // coordinates outside the support must vanish too
                let _ = pos.get(&i);
                if !row.is_empty() {
                    ech.insert_map(row);
                }
            }
        }
        let basis = ech
            .nullspace()
            .into_iter()
            .map(|v| v.into_iter().map(|(p, c)| (support[p], c)).collect())
            .collect();
        Ok(Subspace {
            bidegree: d,
            ambient: dim,
            basis,
        })
    }

    /// Span of all products of `d` elements `x_iα`, inside component `(d, d)`.
    pub fn x_span(&self, d: usize) -> Result<Subspace<F>> {
        if let Some(s) = self.spans.lock().unwrap().get(&d) {
            return Ok(s.clone());
        }
        let sp = if d == 0 {
            Subspace {
                bidegree: (0, 0),
                ambient: 1,
                basis: vec![vec![(0, F::one())]],
            }
        } else {
            let prev = self.x_span(d - 1)?;
            let dim = self.alg.component((d, d))?.dim();
            let prods = crate::par::try_map(&prev.basis, |v| {
                self.xs
                    .iter()
                    .map(|(_, x)| self.alg.mul_coords((d - 1, d - 1), v, x).map(|r| r.1))
                    .collect::<Result<Vec<_>>>()
            })?;
            let mut ech = Echelon::<F>::new(dim);
            for v in prods.into_iter().flatten() {
                ech.insert(&v);
            }
            ech.make_reduced();
            let basis = ech
                .pivots()
                .into_iter()
                .map(|p| ech.pivot_row(p).unwrap().clone())
                .collect();
            Subspace {
                bidegree: (d, d),
                ambient: dim,
                basis,
            }
        };
        self.spans.lock().unwrap().insert(d, sp.clone());
        Ok(sp)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FftRow {
    pub bidegree: Bideg,
    pub words: u128,
    pub relations_rank: u128,
    pub component_dim: usize,
    pub invariant_dim: usize,
    pub x_span_dim: Option<usize>,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FftReport {
    pub spec: AlgebraSpec,
    pub dmax: usize,
    pub x_invariance_failures: Vec<String>,
    pub rows: Vec<FftRow>,
}

impl FftReport {
    pub fn passed(&self) -> bool {
        self.x_invariance_failures.is_empty() && self.rows.iter().all(|r| r.passed)
    }

    pub fn diagonal_dims(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.bidegree.0 == r.bidegree.1)
            .map(|r| r.invariant_dim)
            .collect()
    }
}

/// For `d ≤ dmax`: x-span ⊆ invariants with equal dimensions on `(d, d)`, and no
/// invariants off the diagonal for `d₁ + d₂ ≤ 2 dmax`.
pub fn fft_check<F: Field>(alg: &Algebra<F>, ctx: &F::Ctx, dmax: usize) -> Result<FftReport> {
    let inv = Invariants::new(alg, ctx)?;
    let spec = alg.spec;
    alg.ensure_upto(2 * dmax)?;
    let x_invariance_failures = inv.check_x_invariance()?;
    let mut bids = Vec::new();
    for t in 0..=2 * dmax {
        bids.extend(spec.bidegrees(t));
    }
    let rows = crate::par::try_map(&bids, |&b| -> Result<FftRow> {
        let comp = alg.component(b)?;
        let is = inv.invariant_subspace(b)?;
        let mut row = FftRow {
            bidegree: b,
            words: comp.words,
            relations_rank: comp.words - comp.dim() as u128,
            component_dim: comp.dim(),
            invariant_dim: is.dim(),
            x_span_dim: None,
            passed: true,
            witness: None,
        };
        if b.0 != b.1 {
            if is.dim() != 0 {
                row.passed = false;
                row.witness = Some(alg.element(b, &is.basis[0])?.to_string());
            }
        } else if b.0 <= dmax {
            let xs = inv.x_span(b.0)?;
            row.x_span_dim = Some(xs.dim());
            if let Some(v) = is.missing_from(&xs) {
                row.passed = false;
                row.witness = Some(format!(
                    "x-product outside invariants: {}",
                    alg.element(b, &v)?
                ));
            } else if xs.dim() != is.dim() {
                row.passed = false;
                let v = xs.missing_from(&is).expect("strictly larger");
                row.witness = Some(format!("invariant outside x-span: {}", alg.element(b, &v)?));
            }
        }
        Ok(row)
    })?;
    let rows = rows
        .into_iter()
        .filter(|r| r.bidegree.0 != r.bidegree.1 || r.bidegree.0 <= dmax)
        .collect();
    Ok(FftReport {
        spec,
        dmax,
        x_invariance_failures,
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct XRelationsReport {
    pub xt: Vec<String>,
    pub xbart: Vec<String>,
    pub xx: Vec<String>,
    pub checked: usize,
}

impl XRelationsReport {
    pub fn passed(&self) -> bool {
        self.xt.is_empty() && self.xbart.is_empty() && self.xx.is_empty()
    }
}

/// `R X^1 T_+^2 = T_+^2 X^1`, `T̄^1 X^2 S^{12} = X^2 T̄^1` and
/// `R X^1 X^2 = X^2 X^1 (S^T)^{12}`, entrywise, after normal form.
pub fn check_x_relations(alg: &Algebra) -> Result<XRelationsReport> {
    let spec = alg.spec;
    let (r, s, n) = (spec.r, spec.s, spec.n);
    let big = r.max(s).max(n);
    let sp = Space::signed(big);
    let l = [Slot::Mat(sp), Slot::Mat(sp), Slot::Alg];
    let x1 = t_plus(&l, 0, 2, r, n).mul(&t_bar(&l, 0, 2, s, n));
    let x2 = t_plus(&l, 1, 2, r, n).mul(&t_bar(&l, 1, 2, s, n));
    let tp2 = t_plus(&l, 1, 2, r, n);
    let tb1 = t_bar(&l, 0, 2, s, n);
    let rr = Mixed::from_op(&l, &build_r(r), &[0, 1]);
    let ss = Mixed::from_op(&l, &build_s(s), &[0, 1]);
    let st = Mixed::from_op(&l, &build_s_transpose(s), &[0, 1]);
    let cases = [
        entries(&Mixed::mul_all(&[&rr, &x1, &tp2]), &tp2.mul(&x1)),
        entries(&Mixed::mul_all(&[&tb1, &x2, &ss]), &x2.mul(&tb1)),
        entries(
            &Mixed::mul_all(&[&rr, &x1, &x2]),
            &Mixed::mul_all(&[&x2, &x1, &st]),
        ),
    ];
    let mut out: Vec<Vec<String>> = Vec::new();
    let mut checked = 0;
    for els in &cases {
        checked += els.len();
        let bad = crate::par::try_map(els, |e| -> Result<Option<String>> {
            let nf = alg.normal_form(e)?;
            Ok((!nf.is_zero()).then(|| format!("{e} ≡ {nf}")))
        })?;
        out.push(bad.into_iter().flatten().collect());
    }
    let xx = out.pop().unwrap();
    let xbart = out.pop().unwrap();
    let xt = out.pop().unwrap();
    Ok(XRelationsReport {
        xt,
        xbart,
        xx,
        checked,
    })
}

/// `𝒪_{r,s}` over `n`, convenience for the exact checks.
pub fn braided(r: usize, s: usize, n: usize) -> Algebra {
    Algebra::new(AlgebraSpec::o(r, s, n))
}
