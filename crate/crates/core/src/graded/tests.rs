use super::*;
use crate::qfield::{EvalPoint, Fp};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn el(s: &str) -> AlgElement {
    s.parse().unwrap()
}

#[test]
fn a11_dimensions_and_basis() {
    let a = Algebra::new(AlgebraSpec::a(1, 1));
    let t = a.dims_table(4).unwrap();
    let dims: Vec<usize> = (0..=4).map(|d| t[&(d, 0)]).collect();
    assert_eq!(dims, vec![1, 2, 2, 2, 2]);
    let c = a.component((2, 0)).unwrap();
    assert_eq!(c.basis, vec![w("t[1,1] t[1,1]"), w("t[1,1] t[1,-1]")]);
}

#[test]
fn a11_rewriting() {
    let a = Algebra::new(AlgebraSpec::a(1, 1));
    let nf = a.normal_form(&el("1*q^0/1*q^0 * t[1,-1] t[1,1]")).unwrap();
    assert_eq!(nf, AlgElement::term(w("t[1,1] t[1,-1]"), QScalar::q_pow(2)));
    assert!(a
        .normal_form(&el("1*q^0/1*q^0 * t[1,-1] t[1,-1]"))
        .unwrap()
        .is_zero());
    let x = el("1*q^0/1*q^0 * t[1,-1]");
    let y = el("1*q^0/1*q^0 * t[1,1] t[1,1]");
    let p = a.multiply(&x, &y).unwrap();
    assert_eq!(
        p,
        AlgElement::term(w("t[1,1] t[1,1] t[1,-1]"), QScalar::q_pow(4))
    );
}

#[test]
fn small_cases_match_full_enumeration() {
    for spec in [
        AlgebraSpec::a(1, 1),
        AlgebraSpec::a(2, 1),
        AlgebraSpec::a(1, 2),
        AlgebraSpec::abar(1, 1),
        AlgebraSpec::abar(2, 1),
        AlgebraSpec::o(1, 1, 1),
    ] {
        let a = Algebra::new(spec);
        for d in 1..=3 {
            for b in spec.bidegrees(d) {
                let c = a.component(b).unwrap();
                let (basis, _) = component_basis_full(&spec, b);
                assert_eq!(c.basis, basis, "{spec:?} {b:?}");
            }
        }
    }
}

#[test]
fn classical_dimensions() {
    assert_eq!(classical_dim(1, 3), 2);
    assert_eq!(classical_dim(4, 2), 10 + 16 + 6);
    for (r, n) in [(1, 1), (2, 1), (1, 2)] {
        let a = Algebra::new(AlgebraSpec::a(r, n));
        let t = a.dims_table(4).unwrap();
        for d in 0..=4 {
            assert_eq!(
                t[&(d, 0)] as u128,
                classical_dim(r * n, d),
                "A({r},{n}) degree {d}"
            );
        }
    }
}

#[test]
fn a22_dimensions() {
    let a = Algebra::new(AlgebraSpec::a(2, 2));
    let t = a.dims_table(4).unwrap();
    let dims: Vec<usize> = (0..=4).map(|d| t[&(d, 0)]).collect();
    assert_eq!(dims, vec![1, 8, 32, 88, 192]);
}

#[test]
fn o111_degree_two() {
    let a = Algebra::new(AlgebraSpec::o(1, 1, 1));
    assert_eq!(a.component((1, 1)).unwrap().dim(), 4);
}

#[test]
fn modular_agrees_with_exact() {
    let spec = AlgebraSpec::o(1, 1, 1);
    let exact = Algebra::new(spec).dims_table(3).unwrap();
    let m = Algebra::<Fp>::with_field(spec, &EvalPoint { q0: 987_654_321 }).unwrap();
    assert_eq!(m.dims_table(3).unwrap(), exact);
}

#[test]
fn ceiling_is_enforced() {
    let mut a = Algebra::new(AlgebraSpec::a(2, 2));
    a.set_ceiling(100);
    assert!(matches!(
        a.component((3, 0)),
        Err(Error::ResourceLimit { d1: 3, d2: 0, .. })
    ));
}

#[test]
fn word_counts() {
    let s = AlgebraSpec::o(1, 1, 1);
    assert_eq!(s.word_count((1, 1)), 8);
    assert_eq!(enumerate_words(&s, (1, 1)).len(), 8);
    assert_eq!(AlgebraSpec::a(2, 2).word_count((3, 0)), 512);
}
