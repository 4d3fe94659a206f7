//! Prime-field arithmetic.
//!
//! Matrices store bare residues with the modulus carried by the ring context;
//! [`FpElem`] is the self-describing element type for code that wants values
//! and modulus travelling together.

use crate::arith::{is_prime, mod_pow, mul_mod};
use crate::error::Error;
use crate::Result;

/// The field `Z/p` for a prime `p`, used as a context object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Refuses non-prime moduli.
    pub fn new(p: u64) -> Result<Fp> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(alloc::format!("{p} is not prime")));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::NotInvertible);
        }
        Ok(mod_pow(a, self.p - 2, self.p))
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }
}

/// A prime-field element carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpElem {
    pub value: u64,
    pub modulus: u64,
}

impl FpElem {
    pub fn new(value: i64, modulus: u64) -> Result<FpElem> {
        let field = Fp::new(modulus)?;
        Ok(FpElem {
            value: field.from_i64(value),
            modulus,
        })
    }

    fn field(&self) -> Fp {
        Fp { p: self.modulus }
    }

    pub fn mul(&self, other: &FpElem) -> FpElem {
        debug_assert_eq!(self.modulus, other.modulus);
        FpElem {
            value: self.field().mul(self.value, other.value),
            modulus: self.modulus,
        }
    }
}

/// Inverse of a prime-field element; errors on zero.
pub fn field_inverse(a: &FpElem) -> Result<FpElem> {
    Ok(FpElem {
        value: a.field().inv(a.value)?,
        modulus: a.modulus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bigint_mod_u64, DeterministicRng};
    use num_bigint::BigInt;

    #[test]
    fn inverse_examples() {
        let a = FpElem::new(2, 101).unwrap();
        assert_eq!(field_inverse(&a).unwrap().value, 51);
        let one = FpElem::new(1, 32003).unwrap();
        assert_eq!(field_inverse(&one).unwrap().value, 1);
        let zero = FpElem::new(0, 101).unwrap();
        assert_eq!(field_inverse(&zero), Err(Error::NotInvertible));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Fp::new(32001).is_err());
        assert!(FpElem::new(1, 100).is_err());
    }

    #[test]
    fn inverse_really_inverts() {
        let f = Fp::new(32003).unwrap();
        for a in 1..2000u64 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    /// Field ops agree with big-integer arithmetic reduced mod p.
    #[test]
    fn agrees_with_bigint_reduction() {
        let p = 32003u64;
        let f = Fp::new(p).unwrap();
        let mut rng = DeterministicRng::for_tag(42, 0);
        for _ in 0..10_000 {
            let a = rng.next_u64() as i64 / 2;
            let b = rng.next_u64() as i64 / 2;
            let (ra, rb) = (f.from_i64(a), f.from_i64(b));
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            assert_eq!(f.add(ra, rb), bigint_mod_u64(&(&ba + &bb), p));
            assert_eq!(f.sub(ra, rb), bigint_mod_u64(&(&ba - &bb), p));
            assert_eq!(f.mul(ra, rb), bigint_mod_u64(&(&ba * &bb), p));
        }
    }
}
