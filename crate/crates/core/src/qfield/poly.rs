//! Dense univariate polynomials over the integers.

use std::fmt;

use super::int::Int;

/// Polynomial in `q` with coefficients stored from the constant term upwards.
/// No trailing zero coefficients are stored; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Int>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Int, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Int::ZERO; k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Poly {
        while coeffs.last().is_some_and(Int::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> &Int {
        self.coeffs.last().unwrap_or(&Int::ZERO)
    }

    /// Order of vanishing at `q = 0`; zero for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(k).all(Int::is_zero));
        Poly {
            coeffs: self
                .coeffs
                .get(k..)
                .map(<[Int]>::to_vec)
                .unwrap_or_default(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Int::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(Int::neg).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(d);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&Int::ZERO);
            let b = o.coeffs.get(k).unwrap_or(&Int::ZERO);
            coeffs.push(a.sub(b));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.coeffs.len() == 1 {
            return self.scale(&o.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![Int::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn div_exact_scalar(&self, c: &Int) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.div_exact(c)).collect(),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = c.neg();
        }
        self.div_exact_scalar(&c)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("pseudo-remainder by zero");
        let mut r = self.coeffs.clone();
        let lb = b.lc().clone();
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for c in r.iter_mut() {
                *c = c.mul(&lb);
            }
            for (k, bc) in b.coeffs.iter().enumerate() {
                r[shift + k] = r[shift + k].sub(&lr.mul(bc));
            }
            r.pop();
            while r.last().is_some_and(Int::is_zero) {
                r.pop();
            }
        }
        Poly::from_coeffs(r)
    }

    /// Quotient of an exact division in `Z[q]`.
    pub fn div_exact(&self, b: &Poly) -> Poly {
        if b.is_one() {
            return self.clone();
        }
        let db = b.degree().expect("division by zero polynomial");
        if db == 0 {
            return self.div_exact_scalar(&b.coeffs[0]);
        }
        if self.is_zero() {
            return Poly::zero();
        }
        let da = self.degree().unwrap();
        debug_assert!(da >= db);
        let mut r = self.coeffs.clone();
        let mut quo = vec![Int::ZERO; da - db + 1];
        let lb = b.lc();
        for shift in (0..=da - db).rev() {
            let lr = &r[shift + db];
            if lr.is_zero() {
                continue;
            }
            let c = lr.div_exact(lb);
            for (k, bc) in b.coeffs.iter().enumerate() {
                r[shift + k] = r[shift + k].sub(&c.mul(bc));
            }
            quo[shift] = c;
        }
        debug_assert!(r.iter().all(Int::is_zero), "inexact polynomial division");
        Poly::from_coeffs(quo)
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading coefficient.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.sign_normalized();
        }
        if o.is_zero() || self == o {
            return self.sign_normalized();
        }
        let va = self.valuation();
        let vb = o.valuation();
        let a = self.shift_down(va);
        let b = o.shift_down(vb);
        let ca = a.content();
        let cb = b.content();
        let c = ca.gcd(&cb);
        let g = if a.is_constant() || b.is_constant() {
            Poly::one()
        } else {
            let mut x = a.div_exact_scalar(&ca);
            let mut y = b.div_exact_scalar(&cb);
            if x.degree() < y.degree() {
                std::mem::swap(&mut x, &mut y);
            }
            while !y.is_zero() {
                if y.is_constant() {
                    x = Poly::one();
                    break;
                }
                let r = x.pseudo_rem(&y);
                x = y;
                y = r.primitive_part();
            }
            x.primitive_part()
        };
        g.scale(&c).shift_up(va.min(vb))
    }

    pub fn sign_normalized(&self) -> Poly {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Evaluation at `q0` modulo `p`.
    pub fn eval_mod(&self, p: u64, q0: u64) -> u64 {
        let mut acc: u128 = 0;
        for c in self.coeffs.iter().rev() {
            acc = (acc * q0 as u128 + c.rem_euclid_u64(p) as u128) % p as u128;
        }
        acc as u64
    }

    /// Sparse `c*q^k` terms from the highest degree down, e.g. `1*q^2-1*q^0`.
    pub fn to_sparse_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() && !c.is_negative() {
                out.push('+');
            }
            out.push_str(&format!("{c}*q^{k}"));
        }
        out
    }

    pub fn parse_sparse(s: &str) -> Option<Poly> {
        let s = s.trim();
        if s == "0" {
            return Some(Poly::zero());
        }
        let mut coeffs: Vec<Int> = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut terms = Vec::new();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for t in terms {
            let t = t.strip_prefix('+').unwrap_or(t);
            let (c, k) = t.split_once("*q^")?;
            let c: Int = c.parse().ok()?;
            let k: usize = k.parse().ok()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Int::ZERO);
            }
            coeffs[k] = coeffs[k].add(&c);
        }
        Some(Poly::from_coeffs(coeffs))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sparse_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64(cs)
    }

    #[test]
    fn gcd_of_products() {
        // (q+1)(q^2+1) and (q+1)(q-2)
        let a = p(&[1, 1]).mul(&p(&[1, 0, 1]));
        let b = p(&[1, 1]).mul(&p(&[-2, 1]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        // content and q-power handled separately
        let a = p(&[0, 0, 6, 6]);
        let b = p(&[0, 4, 4]);
        assert_eq!(a.gcd(&b), p(&[0, 2, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 6])), p(&[3]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), p(&[-1, -1]));
        assert_eq!(p(&[0, 0, 3]).div_exact(&p(&[0, 3])), p(&[0, 1]));
    }

    #[test]
    fn sparse_string_roundtrip() {
        let a = p(&[-1, 0, 1, -7]);
        let s = a.to_sparse_string();
        assert_eq!(s, "-7*q^3+1*q^2-1*q^0");
        assert_eq!(Poly::parse_sparse(&s), Some(a));
        assert_eq!(Poly::parse_sparse("0"), Some(Poly::zero()));
    }

    #[test]
    fn eval() {
        assert_eq!(p(&[0, 0, 1]).eval_mod(101, 3), 9);
        assert_eq!(p(&[-1]).eval_mod(101, 3), 100);
    }
}
