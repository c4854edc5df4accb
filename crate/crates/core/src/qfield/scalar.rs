//! Elements of the rational function field Q(q).

use std::fmt;

use super::int::Int;
use super::modp::ModScalar;
use super::poly::Poly;
use crate::error::{Error, Result};

/// A reduced fraction `num/den` of integer polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1` in `Z[q]` and `lc(den) > 0`; zero is `0/1`.
/// Since the content is also divided out, equal field elements have identical
/// representations and the derived `Eq`/`Hash` are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: Poly,
    den: Poly,
}

impl QScalar {
    pub fn zero() -> QScalar {
        QScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> QScalar {
        QScalar::from_int(1)
    }

    pub fn from_int(v: i64) -> QScalar {
        QScalar {
            num: Poly::constant(Int::from(v)),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> QScalar {
        QScalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> QScalar {
        QScalar::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> QScalar {
        let m = Poly::monomial(Int::ONE, k.unsigned_abs() as usize);
        if k >= 0 {
            QScalar::from_poly(m)
        } else {
            QScalar {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `xi = q - q^{-1}`.
    pub fn xi() -> QScalar {
        QScalar {
            num: Poly::from_i64(&[-1, 0, 1]),
            den: Poly::from_i64(&[0, 1]),
        }
    }

    /// Builds `num/den` and reduces it.
    pub fn new(num: Poly, den: Poly) -> Result<QScalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QScalar::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> QScalar {
        if num.is_zero() {
            return QScalar::zero();
        }
        if den.is_one() {
            return QScalar { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QScalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If this is `±q^k`, returns `(sign, k)`.
    pub fn as_signed_monomial(&self) -> Option<(i32, i32)> {
        let single = |p: &Poly| -> Option<(i32, i32)> {
            let v = p.valuation();
            if p.degree() != Some(v) {
                return None;
            }
            match p.lc() {
                Int::Small(1) => Some((1, v as i32)),
                Int::Small(-1) => Some((-1, v as i32)),
                _ => None,
            }
        };
        let (sn, kn) = single(&self.num)?;
        let (sd, kd) = single(&self.den)?;
        Some((sn * sd, kn - kd))
    }

    pub fn neg(&self) -> QScalar {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &QScalar) -> QScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return QScalar::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return QScalar::canonical(self.num.add(&o.num), self.den.clone());
        }
        // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(that, g).
        let g = self.den.gcd(&o.den);
        let bg = self.den.div_exact(&g);
        let dg = o.den.div_exact(&g);
        let num = self.num.mul(&dg).add(&o.num.mul(&bg));
        if num.is_zero() {
            return QScalar::zero();
        }
        let den = self.den.mul(&dg);
        if g.is_one() {
            return QScalar { num, den };
        }
        let h = num.gcd(&g);
        let (num, den) = if h.is_one() {
            (num, den)
        } else {
            (num.div_exact(&h), den.div_exact(&h))
        };
        QScalar { num, den }
    }

    pub fn sub(&self, o: &QScalar) -> QScalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QScalar) -> QScalar {
        if self.is_zero() || o.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QScalar::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.div_exact(&g1);
        let d = o.den.div_exact(&g1);
        let c = o.num.div_exact(&g2);
        let b = self.den.div_exact(&g2);
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QScalar { num, den }
    }

    pub fn inv(&self) -> Result<QScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QScalar { num, den })
    }

    pub fn div(&self, o: &QScalar) -> Result<QScalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: u32) -> QScalar {
        let mut acc = QScalar::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image under `q -> q0` in `Z/p`.
    pub fn eval_mod(&self, p: u64, q0: u64) -> Result<ModScalar> {
        let d = self.den.eval_mod(p, q0);
        if d == 0 {
            return Err(Error::BadEvaluationPoint { p, q0 });
        }
        let n = self.num.eval_mod(p, q0);
        Ok(ModScalar::new(n, p).mul(&ModScalar::new(d, p).inv()))
    }

    /// `num/den` with both polynomials as sparse `c*q^k` lists.
    pub fn to_token(&self) -> String {
        format!(
            "{}/{}",
            self.num.to_sparse_string(),
            self.den.to_sparse_string()
        )
    }

    pub fn parse(s: &str) -> Result<QScalar> {
        let bad = || Error::Parse(format!("bad scalar `{s}`"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n = Poly::parse_sparse(n).ok_or_else(bad)?;
        let d = Poly::parse_sparse(d).ok_or_else(bad)?;
        QScalar::new(n, d)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token())
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token())
    }
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}
