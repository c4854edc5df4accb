//! The named matrices: `S`, `S^{-1}`, `R`, `R'`, `P`, `J`, `D`, `S̃`, `S'`.

use super::{par, Factor, Key, Space, SuperOp};
use crate::qfield::QScalar;

/// `φ(i,j) = (-1)^{|j|}(δ_{ij} + δ_{i,-j})`.
pub fn phi(i: i8, j: i8) -> i32 {
    let d = (i == j) as i32 + (i == -j) as i32;
    if j < 0 {
        -d
    } else {
        d
    }
}

fn two(s: Space) -> Vec<Factor> {
    vec![Factor::square(s), Factor::square(s)]
}

fn s_with(n: usize, inverse: bool) -> SuperOp {
    let sp = Space::signed(n);
    let idx = sp.indices();
    let e = if inverse { -1 } else { 1 };
    let xi = if inverse {
        QScalar::xi().neg()
    } else {
        QScalar::xi()
    };
    let mut op = SuperOp::zero(two(sp));
    for &i in &idx {
        for &j in &idx {
            op.add_term(vec![(i, i), (j, j)], &QScalar::q_pow(e * phi(i, j)));
        }
    }
    for &i in &idx {
        for &j in idx.iter().filter(|&&j| j > i) {
            let c = if i < 0 { xi.neg() } else { xi.clone() };
            op.add_term(vec![(j, i), (i, j)], &c);
            op.add_term(vec![(-j, -i), (i, j)], &c);
        }
    }
    op
}

/// `S = Σ q^{φ(i,j)} E_ii⊗E_jj + ξ Σ_{i<j} (-1)^{|i|}(E_ji + E_{-j,-i})⊗E_ij`.
pub fn build_s(n: usize) -> SuperOp {
    s_with(n, false)
}

pub fn build_s_inverse(n: usize) -> SuperOp {
    s_with(n, true)
}

/// `R = Σ q^{δ_ij} E_ii⊗E_jj + ξ Σ_{1≤i<j≤r} E_ji⊗E_ij` on the even space `(r|0)`.
pub fn build_r(r: usize) -> SuperOp {
    let sp = Space::even(r);
    let idx = sp.indices();
    let mut op = SuperOp::zero(two(sp));
    for &i in &idx {
        for &j in &idx {
            op.add_term(vec![(i, i), (j, j)], &QScalar::q_pow((i == j) as i32));
            if i < j {
                op.add_term(vec![(j, i), (i, j)], &QScalar::xi());
            }
        }
    }
    op
}

/// The odd operator `J = Σ_a (-1)^{|a|} E_{-a,a}` on `V = C(q)^{n|n}`.
pub fn build_j(n: usize) -> SuperOp {
    let sp = Space::signed(n);
    SuperOp::from_terms(
        vec![Factor::square(sp)],
        sp.indices()
            .into_iter()
            .map(|a| (vec![(-a, a)], QScalar::from_int(if a < 0 { -1 } else { 1 }))),
    )
}

fn one_j(n: usize) -> SuperOp {
    build_j(n)
        .embed_at(&[1], &two(Space::signed(n)))
        .expect("valid embedding")
}

/// `S'`: conjugation of `S` by `1⊗J`, i.e. `(1⊗J) S (1⊗J)^{-1}`.
///
/// With the Koszul product `(1⊗J)^2 = -1`, so this is `-(1⊗J) S (1⊗J)`. Only the
/// conjugation makes the `T_-` intertwiner reproduce the cross relations; the
/// literal product [`build_s_prime_literal`] negates them.
pub fn build_s_prime(n: usize) -> SuperOp {
    build_s_prime_literal(n).neg()
}

pub fn build_s_prime_inverse(n: usize) -> SuperOp {
    build_s_prime_inverse_literal(n).neg()
}

/// `(1⊗J) S (1⊗J)` read as a plain product.
pub fn build_s_prime_literal(n: usize) -> SuperOp {
    let j = one_j(n);
    j.mul(&build_s(n))
        .and_then(|x| x.mul(&j))
        .expect("same spaces")
}

/// Inverse of [`build_s_prime_literal`]: `(1⊗J) S^{-1} (1⊗J)`, since `(1⊗J)^2 = -1`.
pub fn build_s_prime_inverse_literal(n: usize) -> SuperOp {
    let j = one_j(n);
    j.mul(&build_s_inverse(n))
        .and_then(|x| x.mul(&j))
        .expect("same spaces")
}

/// Submatrix of `S'` on the indices `-r..-1`.
pub fn build_r_prime(r: usize) -> SuperOp {
    build_s_prime(r).restrict(two(Space::odd(r)), |i| i < 0)
}

/// Super permutation `P = Σ (-1)^{|α|} E_{βα}⊗E_{αβ}` on `W⊗W`.
pub fn build_p(sp: Space) -> SuperOp {
    let idx = sp.indices();
    let mut op = SuperOp::zero(two(sp));
    for &a in &idx {
        for &b in &idx {
            op.add_term(
                vec![(b, a), (a, b)],
                &QScalar::from_int(if a < 0 { -1 } else { 1 }),
            );
        }
    }
    op
}

/// `D = Σ_α q^{2(-1)^{|α|}α} E_αα`.
pub fn d_exponent(a: i8) -> i32 {
    let a = a as i32;
    if a < 0 {
        -2 * a
    } else {
        2 * a
    }
}

pub fn build_d(s: usize) -> SuperOp {
    diag(s, |a| QScalar::q_pow(d_exponent(a)))
}

pub fn build_d_inverse(s: usize) -> SuperOp {
    diag(s, |a| QScalar::q_pow(-d_exponent(a)))
}

fn diag(s: usize, f: impl Fn(i8) -> QScalar) -> SuperOp {
    let sp = Space::signed(s);
    SuperOp::from_terms(
        vec![Factor::square(sp)],
        sp.indices().into_iter().map(|a| (vec![(a, a)], f(a))),
    )
}

/// `S̃ = (1⊗D) S (1⊗D^{-1})`. `D` is diagonal and even, so entrywise
/// `S̃[(i,j),(k,l)] = D_k S[(i,j),(k,l)] D_l^{-1}`.
pub fn build_s_tilde(s: usize) -> SuperOp {
    let sp = Space::signed(s);
    SuperOp::from_terms(
        two(sp),
        build_s(s).terms().iter().map(|(k, c)| {
            let (r, col) = k[1];
            (
                k.clone(),
                c.mul(&QScalar::q_pow(d_exponent(r) - d_exponent(col))),
            )
        }),
    )
}

/// `S^T = P S P`.
pub fn build_s_transpose(n: usize) -> SuperOp {
    let p = build_p(Space::signed(n));
    p.mul(&build_s(n))
        .and_then(|x| x.mul(&p))
        .expect("same spaces")
}

/// Parity of `E_{ij}`.
pub fn unit_parity(i: i8, j: i8) -> u8 {
    par(i) ^ par(j)
}

/// `E_{i1 j1} ⊗ E_{i2 j2}` key helper.
pub fn key2(a: (i8, i8), b: (i8, i8)) -> Key {
    vec![a, b]
}

#[cfg(test)]
mod tests {
    use super::super::check_qybe;
    use super::*;

    fn q(k: i32) -> QScalar {
        QScalar::q_pow(k)
    }

    #[test]
    fn s_for_n1_term_by_term() {
        let s = build_s(1);
        assert_eq!(s.coeff(&[(1, 1), (1, 1)]), q(1));
        assert_eq!(s.coeff(&[(1, 1), (-1, -1)]), q(-1));
        assert_eq!(s.coeff(&[(-1, -1), (1, 1)]), q(1));
        assert_eq!(s.coeff(&[(-1, -1), (-1, -1)]), q(-1));
        assert_eq!(s.coeff(&[(1, -1), (-1, 1)]), QScalar::xi().neg());
        assert_eq!(s.coeff(&[(-1, 1), (-1, 1)]), QScalar::xi().neg());
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn s_shape_for_larger_n() {
        for n in 1..=3 {
            let s = build_s(n);
            let m = n as i8;
            assert_eq!(s.coeff(&[(m, m), (m, m)]), q(1));
            assert!(s.is_even());
            if n >= 2 {
                assert!(s.coeff(&[(1, 2), (2, 1)]).is_zero());
                assert_eq!(s.coeff(&[(2, 1), (1, 2)]), QScalar::xi());
            }
        }
        assert_eq!(build_s_inverse(2).coeff(&[(1, 1), (1, 1)]), q(-1));
    }

    #[test]
    fn inverse_and_qybe() {
        for n in 1..=3 {
            let s = build_s(n);
            let si = build_s_inverse(n);
            assert!(s.mul(&si).unwrap().is_identity(), "n={n}");
            assert!(si.mul(&s).unwrap().is_identity(), "n={n}");
            assert!(check_qybe(&s).unwrap(), "n={n}");
        }
        assert!(check_qybe(&SuperOp::identity(two(Space::signed(2)))).unwrap());
    }

    #[test]
    fn koszul_sign_of_odd_units() {
        let sp = Space::signed(1);
        let a = SuperOp::from_terms(two(sp), [(vec![(1, -1), (-1, 1)], QScalar::one())]);
        let b = SuperOp::from_terms(two(sp), [(vec![(-1, 1), (1, -1)], QScalar::one())]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.coeff(&[(1, 1), (-1, -1)]), QScalar::from_int(-1));
    }

    #[test]
    fn r_is_positive_submatrix() {
        assert_eq!(build_r(1).dump(), "1*q^1/1*q^0 · E_{1,1}⊗E_{1,1}\n");
        let r2 = build_r(2);
        assert_eq!(r2.len(), 5);
        assert_eq!(r2.coeff(&[(2, 1), (1, 2)]), QScalar::xi());
        assert_eq!(r2.coeff(&[(1, 1), (2, 2)]), QScalar::one());
        for r in 1..=3 {
            let sub = build_s(r).restrict(two(Space::even(r)), |i| i > 0);
            assert_eq!(sub, build_r(r));
        }
    }

    #[test]
    fn j_and_s_prime() {
        for n in 1..=3 {
            let j = build_j(n);
            let jj = j.mul(&j).unwrap();
            assert_eq!(jj, SuperOp::identity(j.dims().to_vec()).neg());
            let dims = two(Space::signed(n));
            let j1 = j.embed_at(&[0], &dims).unwrap();
            let s = build_s(n);
            assert_eq!(
                j1.mul(&s).unwrap(),
                s.mul(&j1).unwrap(),
                "(J⊗1)S = S(J⊗1), n={n}"
            );
            let sp = build_s_prime(n);
            assert!(sp.mul(&build_s_prime_inverse(n)).unwrap().is_identity());
            let lit = build_s_prime_literal(n);
            assert!(lit
                .mul(&build_s_prime_inverse_literal(n))
                .unwrap()
                .is_identity());
            assert_eq!(lit.neg(), sp);
            assert!(sp.is_even());
            assert!(check_qybe(&sp).unwrap());
        }
        assert!(build_r_prime(2).is_even());
    }

    #[test]
    fn permutation_and_transpose() {
        for n in 1..=3 {
            let p = build_p(Space::signed(n));
            assert!(p.mul(&p).unwrap().is_identity());
            assert!(p.is_even());
            // PSP swaps the two tensor factors of every term, with a Koszul sign
            let st = build_s_transpose(n);
            for (k, c) in build_s(n).terms() {
                let pk = SuperOp::key_parity(&k[..1]) as u32 * SuperOp::key_parity(&k[1..]) as u32;
                let c = if pk % 2 == 0 { c.clone() } else { c.neg() };
                assert_eq!(st.coeff(&[k[1], k[0]]), c);
            }
        }
        // on basis vectors v_a⊗v_b -> (-1)^{|a||b|} v_b⊗v_a
        let p = build_p(Space::signed(1));
        assert_eq!(p.coeff(&[(1, -1), (-1, 1)]), QScalar::from_int(-1));
        assert_eq!(p.coeff(&[(-1, 1), (1, -1)]), QScalar::one());
        assert_eq!(p.coeff(&[(-1, -1), (-1, -1)]), QScalar::from_int(-1));
    }

    #[test]
    fn d_and_s_tilde() {
        let d = build_d(1);
        assert_eq!(d.coeff(&[(1, 1)]), q(2));
        assert_eq!(d.coeff(&[(-1, -1)]), q(2));
        assert_eq!(build_d(2).coeff(&[(-2, -2)]), q(4));
        for s in 1..=3 {
            let dims = two(Space::signed(s));
            let d1 = build_d(s).embed_at(&[1], &dims).unwrap();
            let di = build_d_inverse(s).embed_at(&[1], &dims).unwrap();
            let conj = d1.mul(&build_s(s)).unwrap().mul(&di).unwrap();
            assert_eq!(conj, build_s_tilde(s));
        }
    }

    #[test]
    fn embed_basics() {
        let s = build_s(1);
        let d2 = two(Space::signed(1));
        assert_eq!(s.embed(1, 2, &d2).unwrap(), s);
        let d3 = vec![d2[0]; 3];
        let s13 = s.embed(1, 3, &d3).unwrap();
        for (k, c) in s.terms() {
            for m in [1i8, -1] {
                assert_eq!(&s13.coeff(&[k[0], (m, m), k[1]]), c);
            }
        }
        assert_eq!(s13.len(), 2 * s.len());
        assert!(s.embed(2, 4, &d3).is_err());
        assert!(SuperOp::identity(d2.clone())
            .embed(1, 3, &d3)
            .unwrap()
            .is_identity());
    }
}
