use qqueer::graded::{classical_dim, Algebra, AlgebraSpec};
use qqueer::howe::{GenDeltaReading, Howe};
use qqueer::invariants::{fft_check, Invariants};
use qqueer::qfield::{EvalPoint, Fp};
use qqueer::supertensor::{build_s, build_s_inverse, check_qybe};

#[test]
fn s_matrix_qybe_and_inverse() {
    for n in 1..=3 {
        let s = build_s(n);
        assert!(check_qybe(&s).unwrap(), "n={n}");
        assert!(s.mul(&build_s_inverse(n)).unwrap().is_identity());
        assert!(build_s_inverse(n).mul(&s).unwrap().is_identity());
    }
}

#[test]
fn a11_dimensions() {
    let t = Algebra::new(AlgebraSpec::a(1, 1)).dims_table(4).unwrap();
    assert_eq!(t.values().copied().collect::<Vec<_>>(), vec![1, 2, 2, 2, 2]);
    let t = Algebra::new(AlgebraSpec::abar(1, 2)).dims_table(3).unwrap();
    let want: Vec<usize> = (0..=3).map(|d| classical_dim(2, d) as usize).collect();
    assert_eq!(t.values().copied().collect::<Vec<_>>(), want);
}

#[test]
fn braided_flatness_111() {
    let o = Algebra::new(AlgebraSpec::o(1, 1, 1)).dims_table(4).unwrap();
    let a = [1, 2, 2, 2, 2];
    for ((d1, d2), dim) in o {
        assert_eq!(dim, a[d1] * a[d2], "({d1},{d2})");
    }
}

#[test]
fn modular_matches_exact() {
    let spec = AlgebraSpec::o(2, 1, 1);
    let exact = Algebra::new(spec).dims_table(3).unwrap();
    let fp = Algebra::<Fp>::with_field(spec, &EvalPoint { q0: 1_234_577 }).unwrap();
    assert_eq!(fp.dims_table(3).unwrap(), exact);
}

#[test]
fn fft_111() {
    let o = Algebra::new(AlgebraSpec::o(1, 1, 1));
    let rep = fft_check(&o, &(), 2).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.diagonal_dims(), vec![1, 2, 2]);
    let fp = Algebra::<Fp>::with_field(o.spec, &EvalPoint { q0: 7919 }).unwrap();
    assert_eq!(
        fft_check(&fp, &EvalPoint { q0: 7919 }, 2).unwrap().diagonal_dims(),
        vec![1, 2, 2]
    );
}

#[test]
fn howe_ranks_match_invariants_112() {
    let a = Algebra::new(AlgebraSpec::a(1, 1));
    let o = Algebra::new(AlgebraSpec::o(1, 1, 2));
    let h = Howe::new(&a, &o).unwrap();
    let inv = Invariants::new(&o, &()).unwrap();
    for d in 0..=2 {
        let row = h.injectivity(&inv, d).unwrap();
        assert!(row.passed);
        assert_eq!(row.rank, row.invariant_dim);
    }
    assert!(h.check_gen_delta(2, GenDeltaReading::AllPairs).unwrap().passed());
}
