use super::*;
use crate::invariants::x_element;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn algebras(r: usize, s: usize, n: usize) -> (Algebra, Algebra) {
    (
        Algebra::new(AlgebraSpec::a(r, s)),
        Algebra::new(AlgebraSpec::o(r, s, n)),
    )
}

#[test]
fn omega_units_and_generators() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    let t = w("t[1,1]");
    assert_eq!(
        h.omega(&Word::empty(), &t).unwrap(),
        PairElement::pure(Word::empty(), t.clone())
    );
    assert_eq!(
        h.omega(&t, &Word::empty()).unwrap(),
        PairElement::pure(t.clone(), Word::empty())
    );
    // the odd-odd block of S contributes besides the diagonal entry q
    let mut want = PairElement::zero();
    want.add_term(t.clone(), t.clone(), &QScalar::q());
    let tm = w("t[1,-1]");
    want.add_term(tm.clone(), tm, &QScalar::xi().neg());
    assert_eq!(h.omega(&t, &t).unwrap(), want);
}

#[test]
fn delta_tilde_on_generators_is_x() {
    let (a, o) = algebras(2, 1, 2);
    let h = Howe::new(&a, &o).unwrap();
    for g in a.generators() {
        let x = x_element(g.row, g.col, 2);
        assert_eq!(h.delta_tilde(&Word::from_gens(&[*g])), x);
    }
    assert_eq!(h.delta_tilde(&Word::empty()), AlgElement::one());
}

#[test]
fn delta_mul_examples() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    assert!(h.check_delta_mul(&w("t[1,1]"), &w("t[1,1]")).unwrap());
    assert!(h.check_delta_mul(&Word::empty(), &w("t[1,-1]")).unwrap());
    let (a, o) = algebras(1, 1, 2);
    let h = Howe::new(&a, &o).unwrap();
    assert!(h.check_delta_mul(&w("t[1,1]"), &w("t[1,-1]")).unwrap());
}

#[test]
fn gen_delta_small() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    for k in 1..=3 {
        let rep = h.check_gen_delta(k, GenDeltaReading::AllPairs).unwrap();
        assert!(rep.passed(), "k={k}: {:?}", rep.mismatches);
    }
    let (a, o) = algebras(1, 1, 2);
    let h = Howe::new(&a, &o).unwrap();
    assert!(h
        .check_gen_delta(2, GenDeltaReading::FirstColumn)
        .unwrap()
        .passed());
}

#[test]
fn first_column_reading_at_three() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    let rep = h.check_gen_delta(3, GenDeltaReading::FirstColumn).unwrap();
    assert_eq!((rep.mismatches.len(), rep.checked), (4, 8));
}

#[test]
fn injectivity_small() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    let inv = Invariants::new(&o, &()).unwrap();
    for (d, dim) in [(0, 1), (1, 2), (2, 2)] {
        let row = h.injectivity(&inv, d).unwrap();
        assert!(row.passed, "{row:?}");
        assert_eq!(row.rank, dim);
    }
    let (a, o) = algebras(2, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    let inv = Invariants::new(&o, &()).unwrap();
    assert!(h.injectivity(&inv, 1).is_err());
}

#[test]
fn descent_small() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    for dd in [(2, 1), (1, 2)] {
        let rep = h.check_omega_descent(dd).unwrap();
        assert!(rep.passed() && rep.checked > 0, "{:?}", rep.failures);
    }
}

#[test]
fn delta_mul_suite_111() {
    let (a, o) = algebras(1, 1, 1);
    let h = Howe::new(&a, &o).unwrap();
    let rep = h.delta_mul_suite(7, 10).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
    assert_eq!(rep.exhaustive_checked, 4);
}

#[test]
fn braided_normal_form_matches_direct() {
    for (r, s, n) in [(1, 1, 1), (2, 1, 1), (1, 1, 2)] {
        let o = Algebra::new(AlgebraSpec::o(r, s, n));
        let b = Braided::new(&o).unwrap();
        let gens = o.generators().to_vec();
        for w in free_words(&gens, 3) {
            let x = AlgElement::word(w.clone());
            assert_eq!(
                b.normal_form(&x).unwrap(),
                o.normal_form(&x).unwrap(),
                "{w} at {:?}",
                (r, s, n)
            );
        }
    }
}
