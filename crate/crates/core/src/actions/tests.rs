use super::*;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn g(s: &str) -> GenId {
    s.parse().unwrap()
}

#[test]
fn phi_diagonal_entries() {
    let t = ActionTable::build(Family::Phi, AlgebraSpec::a(1, 1)).unwrap();
    let q = QScalar::q();
    assert_eq!(
        t.image((1, 1), g("t[1,1]")),
        AlgElement::term(w("t[1,1]"), q.clone())
    );
    assert_eq!(
        t.image((1, 1), g("t[1,-1]")),
        AlgElement::term(w("t[1,-1]"), q)
    );
}

#[test]
fn invariance_small() {
    for spec in [
        AlgebraSpec::a(1, 1),
        AlgebraSpec::abar(1, 1),
        AlgebraSpec::o(1, 1, 1),
    ] {
        let alg = Algebra::new(spec);
        let mut fams = vec![Family::Phi];
        if spec.kind == AlgebraKind::A {
            fams.push(Family::Psi);
        } else {
            fams.push(Family::PsiBar);
        }
        for f in fams {
            let t = ActionTable::build(f, spec).unwrap();
            for d in 2..=3 {
                for b in spec.bidegrees(d) {
                    let rep = check_relation_invariance(&alg, &t, b).unwrap();
                    assert!(
                        rep.passed(),
                        "{spec:?} {f:?} {b:?}: {:?}",
                        &rep.failures[..rep.failures.len().min(3)]
                    );
                }
            }
        }
    }
}

#[test]
fn psi_defect_matches() {
    let rep = check_psi_defect(1, 1, 1).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn psi_defect_grid() {
    let rep = check_psi_defect(2, 1, 1).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(
        (rep.checked, rep.nonzero, rep.signed_form_mismatches),
        (32, 16, 4)
    );
}

#[test]
fn psi_generator_carries_xi() {
    let t = ActionTable::build(Family::Psi, AlgebraSpec::a(1, 1)).unwrap();
    assert_eq!(
        t.image((-1, 1), g("t[1,1]")),
        AlgElement::term(w("t[1,-1]"), QScalar::xi())
    );
    assert_eq!(
        t.image((-1, 1), g("t[1,-1]")),
        AlgElement::term(w("t[1,1]"), QScalar::xi().neg())
    );
}

#[test]
fn s_tilde_keeps_psibar_invariant() {
    for (s, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let spec = AlgebraSpec::abar(s, n);
        let alg = Algebra::new(spec);
        let t = ActionTable::build_with(Family::PsiBar, spec, &build_s_tilde(s)).unwrap();
        for d in 2..=3 {
            assert!(check_relation_invariance(&alg, &t, (0, d)).unwrap().passed(), "({s},{n}) d={d}");
        }
        let spec = AlgebraSpec::o(1, s, n);
        let alg = Algebra::new(spec);
        let t = ActionTable::build_with(Family::PsiBar, spec, &build_s_tilde(s)).unwrap();
        for b in spec.bidegrees(2) {
            assert!(check_relation_invariance(&alg, &t, b).unwrap().passed(), "({s},{n}) {b:?}");
        }
    }
}

#[test]
fn wrong_matrix_breaks_invariance() {
    let spec = AlgebraSpec::abar(2, 1);
    let alg = Algebra::new(spec);
    let t = ActionTable::build_with(Family::PsiBar, spec, &build_s_inverse(2)).unwrap();
    let rep = check_relation_invariance(&alg, &t, (0, 2)).unwrap();
    assert!(!rep.passed());
}
