use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use qqueer::actions::{
    check_psi_defect, check_relation_invariance, matrix_triplets, ActionTable, Actions, Family,
};
use qqueer::cache::JsonStore;
use qqueer::graded::{classical_dim, Algebra, AlgebraSpec, Bideg};
use qqueer::howe::{GenDeltaReading, Howe};
use qqueer::invariants::{check_x_relations, fft_check, FftReport, Invariants};
use qqueer::qfield::{EvalPoint, Fp};
use qqueer::relset::{relations_a_unfolded_equivalence, relations_cross_alternative, RelationSet};
use qqueer::supertensor::{build_r, build_s, build_s_inverse, check_qybe};
use qqueer::Error;

use crate::config::{GridPoint, Mode, RunConfig};
use crate::report::Witnesses;

/// Suite output: pass flag plus the `results` object.
pub type Outcome = Result<(bool, Value), Error>;

/// Exact algebras of one grid point, built lazily and shared between suites.
pub struct Point<'c> {
    pub p: GridPoint,
    pub cfg: &'c RunConfig,
    pub q0: &'c [u64],
    store: Option<Arc<JsonStore>>,
    algebras: BTreeMap<&'static str, Algebra>,
}

impl<'c> Point<'c> {
    pub fn new(p: GridPoint, cfg: &'c RunConfig, q0: &'c [u64]) -> Result<Point<'c>, Error> {
        let store = match &cfg.cache_dir {
            Some(d) => Some(Arc::new(JsonStore::new(d, "exact")?)),
            None => None,
        };
        let mut pt = Point {
            p,
            cfg,
            q0,
            store,
            algebras: BTreeMap::new(),
        };
        let GridPoint { r, s, n } = p;
        for (tag, spec) in [
            ("A", AlgebraSpec::a(r, n)),
            ("Abar", AlgebraSpec::abar(s, n)),
            ("O", AlgebraSpec::o(r, s, n)),
            ("Ars", AlgebraSpec::a(r, s)),
        ] {
            let a = pt.exact(spec);
            pt.algebras.insert(tag, a);
        }
        Ok(pt)
    }

    fn exact(&self, spec: AlgebraSpec) -> Algebra {
        let mut a = Algebra::new(spec);
        a.set_ceiling(self.cfg.ceiling);
        if let Some(st) = &self.store {
            a.set_store(st.clone());
        }
        a
    }

    fn modular(&self, spec: AlgebraSpec, q0: u64) -> Result<Algebra<Fp>, Error> {
        let mut a = Algebra::<Fp>::with_field(spec, &EvalPoint { q0 })?;
        a.set_ceiling(self.cfg.ceiling);
        if let Some(d) = &self.cfg.cache_dir {
            a.set_store(Arc::new(JsonStore::new(d, format!("fp:q0={q0}"))?));
        }
        Ok(a)
    }

    pub fn alg(&self, tag: &str) -> &Algebra {
        &self.algebras[tag]
    }
}

fn count_ok(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

pub fn matrices(pt: &Point) -> Outcome {
    let GridPoint { r, s, n } = pt.p;
    let mut sizes = vec![r, s, n];
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::new();
    let mut ok = true;
    for m in sizes {
        let sm = build_s(m);
        let qybe = check_qybe(&sm)?;
        let inverse = sm.mul(&build_s_inverse(m))?.is_identity();
        let r_qybe = check_qybe(&build_r(m))?;
        ok &= qybe && inverse && r_qybe;
        rows.push(json!({
            "size": m,
            "qybe": count_ok(qybe),
            "inverse": count_ok(inverse),
            "r_qybe": count_ok(r_qybe),
            "s_terms": sm.len(),
        }));
    }
    Ok((ok, json!({ "operators": rows })))
}

pub fn presentations(pt: &Point) -> Outcome {
    let GridPoint { r, s, n } = pt.p;
    let rs = RelationSet::new(r, s, n);
    let unfolded = relations_a_unfolded_equivalence(r, n);
    let cross = relations_cross_alternative(r, s, n);
    Ok((
        unfolded && cross,
        json!({
            "relations": { "a": rs.a.len(), "abar": rs.abar.len(), "cross": rs.cross.len() },
            "a_unfolded_equivalent": unfolded,
            "cross_alternative_equivalent": cross,
        }),
    ))
}

/// Dimension tables, computed at two evaluation points in modular mode and
/// recomputed exactly when those disagree.
fn dims_of(
    pt: &Point,
    tag: &'static str,
    dmax: usize,
) -> Result<(BTreeMap<Bideg, usize>, String), Error> {
    let exact = pt.alg(tag);
    if pt.cfg.mode == Mode::Modular {
        let mut tables = Vec::new();
        for &q0 in pt.q0 {
            match pt.modular(exact.spec, q0).and_then(|a| a.dims_table(dmax)) {
                Ok(t) => tables.push(t),
                Err(Error::BadEvaluationPoint { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        if tables.len() == pt.q0.len() && tables.windows(2).all(|w| w[0] == w[1]) {
            return Ok((tables.pop().unwrap(), "modular".into()));
        }
    }
    Ok((exact.dims_table(dmax)?, "exact".into()))
}

pub fn dims(pt: &Point) -> Outcome {
    let GridPoint { r, s, n } = pt.p;
    let dmax = pt.cfg.dims_degree();
    let mut ok = true;
    let mut sides = Vec::new();
    let mut by_side = BTreeMap::new();
    for (tag, m) in [("A", r * n), ("Abar", s * n)] {
        // one bidegree per total degree, in increasing order
        let (t, field) = dims_of(pt, tag, dmax)?;
        let got: Vec<usize> = t.into_values().collect();
        let want: Vec<u128> = (0..=dmax).map(|d| classical_dim(m, d)).collect();
        let matches = got.iter().zip(&want).all(|(g, w)| *g as u128 == *w);
        ok &= matches;
        sides.push(json!({
            "algebra": tag, "field": field, "dims": got, "classical": want, "matches": matches,
        }));
        by_side.insert(tag, got);
    }
    let (t, field) = dims_of(pt, "O", dmax)?;
    let mut rows = Vec::new();
    let mut flat = true;
    for (&(d1, d2), &dim) in &t {
        let want = by_side["A"][d1] * by_side["Abar"][d2];
        flat &= dim == want;
        rows.push(json!({ "bidegree": [d1, d2], "dim": dim, "product": want }));
    }
    ok &= flat;
    Ok((
        ok,
        json!({ "dmax": dmax, "factors": sides, "braided": { "field": field, "flat": flat, "rows": rows } }),
    ))
}

pub fn actions(pt: &Point) -> Outcome {
    let GridPoint { r, s, n } = pt.p;
    let dmax = pt.cfg.actions_degree();
    let mut ok = true;
    let mut rows = Vec::new();
    for (tag, fams) in [
        ("A", &[Family::Phi, Family::Psi][..]),
        ("Abar", &[Family::Phi, Family::PsiBar][..]),
        ("O", &[Family::Phi, Family::PsiBar][..]),
    ] {
        let alg = pt.alg(tag);
        for &fam in fams {
            let table = ActionTable::build(fam, alg.spec)?;
            let mut checked = 0;
            let mut failures = Vec::new();
            for t in 2..=dmax {
                for d in alg.spec.bidegrees(t) {
                    let rep = check_relation_invariance(alg, &table, d)?;
                    checked += rep.checked;
                    failures.extend(
                        rep.failures
                            .into_iter()
                            .map(|f| format!("({},{}) {f}", d.0, d.1)),
                    );
                }
            }
            let w = Witnesses::new(failures);
            ok &= w.is_empty();
            rows.push(json!({ "algebra": tag, "family": fam, "checked": checked, "failures": w }));
        }
    }
    let defect = check_psi_defect(r, s, n)?;
    ok &= defect.passed();
    if let Some(dir) = &pt.cfg.export_dir {
        export_phi(pt, dir)?;
    }
    Ok((
        ok,
        json!({
            "dmax": dmax,
            "invariance": rows,
            "psi_defect": {
                "checked": defect.checked,
                "nonzero": defect.nonzero,
                "xi_squared": defect.xi_squared,
                "mismatches": Witnesses::new(defect.mismatches),
                "signed_form_mismatches": defect.signed_form_mismatches,
            },
        }),
    ))
}

/// Φ on `𝒪` as `row col coeff` triplets, one file per generator and bidegree of
/// total degree at most 2.
fn export_phi(pt: &Point, dir: &Path) -> Result<(), Error> {
    let GridPoint { r, s, n } = pt.p;
    let o = pt.alg("O");
    let acts = Actions::new(o, ActionTable::build(Family::Phi, o.spec)?, &())?;
    let sub = dir.join(format!("r{r}s{s}n{n}"));
    fs::create_dir_all(&sub)?;
    for t in 0..=2 {
        for d in o.spec.bidegrees(t) {
            for ((a, b), m) in acts.matrices(d)?.iter() {
                let name = format!("phi_{a}_{b}_d{}{}.txt", d.0, d.1);
                fs::write(sub.join(name), matrix_triplets(m))?;
            }
        }
    }
    Ok(())
}

pub fn invariants(pt: &Point) -> Outcome {
    let o = pt.alg("O");
    let inv = Invariants::new(o, &())?;
    let xinv = Witnesses::new(inv.check_x_invariance()?);
    let xr = check_x_relations(o)?;
    let ok = xinv.is_empty() && xr.passed();
    Ok((
        ok,
        json!({
            "x_elements": inv.x_elements().len(),
            "x_invariance_failures": xinv,
            "x_relations": {
                "checked": xr.checked,
                "xt": Witnesses::new(xr.xt),
                "xbart": Witnesses::new(xr.xbart),
                "xx": Witnesses::new(xr.xx),
            },
        }),
    ))
}

fn fft_value(rep: &FftReport, field: &str) -> Value {
    let off_diagonal_max = rep
        .rows
        .iter()
        .filter(|r| r.bidegree.0 != r.bidegree.1)
        .map(|r| r.invariant_dim)
        .max();
    json!({
        "field": field,
        "dmax": rep.dmax,
        "diagonal_invariant_dims": rep.diagonal_dims(),
        "off_diagonal_max": off_diagonal_max.unwrap_or(0),
        "x_invariance_failures": Witnesses::new(rep.x_invariance_failures.clone()),
        "rows": rep.rows,
    })
}

pub fn fft(pt: &Point) -> Outcome {
    let dmax = pt.cfg.fft_degree(pt.p);
    let o = pt.alg("O");
    if pt.cfg.mode == Mode::Modular {
        let mut reps = Vec::new();
        for &q0 in pt.q0 {
            match pt
                .modular(o.spec, q0)
                .and_then(|a| fft_check(&a, &EvalPoint { q0 }, dmax))
            {
                Ok(rep) => reps.push(rep),
                Err(Error::BadEvaluationPoint { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let agree = reps.len() == pt.q0.len()
            && reps.iter().all(|x| x.passed())
            && reps
                .windows(2)
                .all(|w| w[0].diagonal_dims() == w[1].diagonal_dims());
        if agree {
            let rep = reps.pop().unwrap();
            return Ok((true, fft_value(&rep, "modular")));
        }
    }
    let rep = fft_check(o, &(), dmax)?;
    Ok((rep.passed(), fft_value(&rep, "exact")))
}

pub fn howe(pt: &Point) -> Outcome {
    let GridPoint { r, s, n } = pt.p;
    let a = pt.alg("Ars");
    let o = pt.alg("O");
    let h = Howe::new(a, o)?;
    let mut ok = true;
    let mut gen = Vec::new();
    for k in 1..=pt.cfg.gen_delta_length(pt.p) {
        let rep = h.check_gen_delta(k, GenDeltaReading::AllPairs)?;
        ok &= rep.passed();
        gen.push(
            json!({ "k": k, "checked": rep.checked, "mismatches": Witnesses::new(rep.mismatches) }),
        );
    }
    let dm = h.delta_mul_suite(pt.cfg.seed, 50)?;
    ok &= dm.passed();
    let mut descent = Vec::new();
    for dd in [(2, 1), (1, 2)] {
        let rep = h.check_omega_descent(dd)?;
        ok &= rep.passed();
        descent.push(json!({ "degrees": [dd.0, dd.1], "checked": rep.checked, "failures": Witnesses::new(rep.failures) }));
    }
    let injectivity = if n >= r.max(s) {
        let inv = Invariants::new(o, &())?;
        let mut rows = Vec::new();
        for d in 0..=pt.cfg.injectivity_degree() {
            let row = h.injectivity(&inv, d)?;
            ok &= row.passed;
            rows.push(row);
        }
        serde_json::to_value(rows).unwrap()
    } else {
        Value::String("not applicable: n < max(r, s)".into())
    };
    Ok((
        ok,
        json!({
            "gen_delta": gen,
            "delta_mul": {
                "seed": dm.seed,
                "exhaustive_checked": dm.exhaustive_checked,
                "random_checked": dm.random_checked,
                "failures": Witnesses::new(dm.failures),
            },
            "omega_descent": descent,
            "injectivity": injectivity,
        }),
    ))
}
