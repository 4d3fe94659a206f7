//! The pluggable exact coefficient ring behind sparse polynomials.

use crate::cyclo::{CycloElem, CycloRing};
use crate::fp::Fp;
use core::fmt::Debug;
use num_bigint::BigInt;
use num_traits::Zero;

/// An exact commutative coefficient ring, carried as a context value so that
/// runtime parameters (a prime, a cyclotomic conductor) travel with it.
#[allow(clippy::wrong_self_convention)] // from_i64 converts into the ring's element type
pub trait CoeffRing: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
}

/// The rational integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntRing;

impl CoeffRing for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
}

impl CoeffRing for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        Fp::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        Fp::sub(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        Fp::neg(self, *a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        Fp::mul(self, *a, *b)
    }
    fn from_i64(&self, v: i64) -> u64 {
        Fp::from_i64(self, v)
    }
}

impl CoeffRing for CycloRing {
    type Elem = CycloElem;

    fn zero(&self) -> CycloElem {
        CycloRing::zero(self)
    }
    fn one(&self) -> CycloElem {
        CycloRing::one(self)
    }
    fn is_zero(&self, a: &CycloElem) -> bool {
        CycloRing::is_zero(self, a)
    }
    fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloRing::add(self, a, b)
    }
    fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloRing::sub(self, a, b)
    }
    fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloRing::neg(self, a)
    }
    fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloRing::mul(self, a, b)
    }
    fn from_i64(&self, v: i64) -> CycloElem {
        self.from_bigint(BigInt::from(v))
    }
}
