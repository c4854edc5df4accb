use super::*;

#[test]
fn x_elements_111() {
    let alg = braided(1, 1, 1);
    let inv = Invariants::new(&alg, &()).unwrap();
    let x11 = &inv
        .x_elements()
        .iter()
        .find(|(k, _)| *k == (1, 1))
        .unwrap()
        .1;
    assert_eq!(x11.len(), 2);
    assert_eq!(
        x11.to_string(),
        "1*q^0/1*q^0 * t[1,1] tb[1,1] + 1*q^0/1*q^0 * t[1,-1] tb[1,-1]"
    );
    assert!(inv.check_x_invariance().unwrap().is_empty());
}

#[test]
fn invariant_dims_111() {
    let alg = braided(1, 1, 1);
    let inv = Invariants::new(&alg, &()).unwrap();
    assert_eq!(inv.invariant_subspace((0, 0)).unwrap().dim(), 1);
    assert_eq!(inv.invariant_subspace((1, 0)).unwrap().dim(), 0);
    assert_eq!(inv.invariant_subspace((1, 1)).unwrap().dim(), 2);
    assert_eq!(inv.x_span(1).unwrap().dim(), 2);
}

#[test]
fn fft_111() {
    let alg = braided(1, 1, 1);
    let rep = fft_check(&alg, &(), 2).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.diagonal_dims(), vec![1, 2, 2]);
}

#[test]
fn x_relations_111() {
    let rep = check_x_relations(&braided(1, 1, 1)).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.checked > 0);
}
