//! Exact arithmetic in Q(q) and its modular images.

mod int;
mod modp;
mod poly;
mod scalar;

use std::fmt;

pub use int::Int;
pub use modp::{Fp, ModScalar, P61};
pub use poly::Poly;
pub use scalar::QScalar;

use crate::error::Result;

/// The coefficient fields the linear algebra runs over.
///
/// `Ctx` carries whatever is needed to map an exact scalar into the field; for
/// `QScalar` this is nothing, for `Fp` the evaluation point.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + fmt::Debug + Send + Sync + 'static;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero; callers only invert pivots.
    fn inv(&self) -> Self;
    fn embed(x: &QScalar, ctx: &Self::Ctx) -> Result<Self>;
    fn to_token(&self) -> String;
    fn from_token(s: &str) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for QScalar {
    type Ctx = ();

    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QScalar::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        QScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QScalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QScalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        QScalar::neg(self)
    }
    fn inv(&self) -> Self {
        QScalar::inv(self).expect("pivot is nonzero")
    }
    fn embed(x: &QScalar, _: &()) -> Result<Self> {
        Ok(x.clone())
    }
    fn to_token(&self) -> String {
        QScalar::to_token(self)
    }
    fn from_token(s: &str) -> Option<Self> {
        QScalar::parse(s).ok()
    }
}

/// Evaluation point for the modular fast path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    pub q0: u64,
}

impl Field for Fp {
    type Ctx = EvalPoint;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn inv(&self) -> Self {
        Fp::inv(*self)
    }
    fn embed(x: &QScalar, ctx: &EvalPoint) -> Result<Self> {
        Ok(Fp(x.eval_mod(P61, ctx.q0)?.value()))
    }
    fn to_token(&self) -> String {
        self.0.to_string()
    }
    fn from_token(s: &str) -> Option<Self> {
        s.parse::<u64>().ok().filter(|&v| v < P61).map(Fp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-6i64..=6, 0..4).prop_map(|c| Poly::from_i64(&c))
    }

    fn arb_scalar() -> impl Strategy<Value = QScalar> {
        (arb_poly(), arb_poly(), 0i32..3).prop_filter_map("zero denominator", |(n, d, k)| {
            if d.is_zero() {
                return None;
            }
            Some(QScalar::new(n, d).ok()?.mul(&QScalar::q_pow(-k)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&QScalar::inv(&a).unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_form_is_unique(a in arb_scalar(), b in arb_scalar()) {
            // a*b/b must reproduce a bit for bit
            if !b.is_zero() {
                let back = a.mul(&b).div(&b).unwrap();
                prop_assert_eq!(back.numer(), a.numer());
                prop_assert_eq!(back.denom(), a.denom());
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_scalar(), b in arb_scalar(), q0 in 2u64..1000) {
            let p = 1_000_000_007u64;
            if let (Ok(ea), Ok(eb)) = (a.eval_mod(p, q0), b.eval_mod(p, q0)) {
                if let Ok(s) = a.add(&b).eval_mod(p, q0) {
                    prop_assert_eq!(s, ea.add(&eb));
                }
                if let Ok(m) = a.mul(&b).eval_mod(p, q0) {
                    prop_assert_eq!(m, ea.mul(&eb));
                }
            }
        }
    }
}
