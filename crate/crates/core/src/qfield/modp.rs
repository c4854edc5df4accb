//! Residues modulo a prime: the targets of evaluation `q -> q0`.

use std::fmt;

/// A residue modulo an arbitrary odd prime `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModScalar {
    value: u64,
    p: u64,
}

impl ModScalar {
    pub fn new(value: u64, p: u64) -> ModScalar {
        ModScalar {
            value: value % p,
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, o: &ModScalar) -> ModScalar {
        debug_assert_eq!(self.p, o.p);
        ModScalar::new(
            ((self.value as u128 + o.value as u128) % self.p as u128) as u64,
            self.p,
        )
    }

    pub fn mul(&self, o: &ModScalar) -> ModScalar {
        debug_assert_eq!(self.p, o.p);
        ModScalar::new(
            ((self.value as u128 * o.value as u128) % self.p as u128) as u64,
            self.p,
        )
    }

    pub fn neg(&self) -> ModScalar {
        ModScalar::new((self.p - self.value) % self.p, self.p)
    }

    pub fn pow(&self, mut e: u64) -> ModScalar {
        let mut base = *self;
        let mut acc = ModScalar::new(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; zero maps to zero.
    pub fn inv(&self) -> ModScalar {
        self.pow(self.p - 2)
    }
}

/// The Mersenne prime `2^61 - 1` used for modular rank computations.
pub const P61: u64 = (1 << 61) - 1;

/// Element of `Z/(2^61 - 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(pub u64);

impl Fp {
    #[inline]
    fn reduce(x: u128) -> u64 {
        let lo = (x as u64) & P61;
        let hi = (x >> 61) as u64;
        let mut s = lo + (hi & P61) + ((x >> 122) as u64);
        while s >= P61 {
            s -= P61;
        }
        s
    }

    pub fn new(v: u64) -> Fp {
        Fp(v % P61)
    }

    pub fn from_i64(v: i64) -> Fp {
        Fp((v as i128).rem_euclid(P61 as i128) as u64)
    }

    #[inline]
    pub fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P61 { s - P61 } else { s })
    }

    #[inline]
    pub fn sub(self, o: Fp) -> Fp {
        if self.0 >= o.0 {
            Fp(self.0 - o.0)
        } else {
            Fp(self.0 + P61 - o.0)
        }
    }

    #[inline]
    pub fn mul(self, o: Fp) -> Fp {
        Fp(Fp::reduce(self.0 as u128 * o.0 as u128))
    }

    pub fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(P61 - self.0)
        }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Fp {
        assert!(self.0 != 0, "inverse of zero in Fp");
        self.pow(P61 - 2)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_prime() {
        let three = ModScalar::new(3, 101);
        assert_eq!(three.inv().value(), 34);
        assert_eq!(three.add(&three.inv().neg()).value(), 70);
    }

    #[test]
    fn mersenne_arithmetic() {
        let a = Fp::new(P61 - 1);
        assert_eq!(a.mul(a), Fp(1));
        assert_eq!(a.add(Fp(1)), Fp(0));
        let x = Fp::new(123456789);
        assert_eq!(x.mul(x.inv()), Fp(1));
        assert_eq!(Fp::from_i64(-1), a);
        assert_eq!(Fp(5).sub(Fp(7)), Fp::from_i64(-2));
    }
}
