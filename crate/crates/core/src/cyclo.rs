//! Cyclotomic integers: `Z[z]/Phi_d(z)`, the exact stand-in for a primitive
//! d-th root of unity. No floating-point roots of unity anywhere.

use crate::arith::euler_phi;
use crate::error::Error;
use crate::Result;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of the d-th cyclotomic polynomial, low degree first, monic.
///
/// Computed by the standard recursion `Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e`
/// with exact integer division.
pub fn cyclotomic_polynomial(d: u64) -> Result<Vec<BigInt>> {
    if d == 0 {
        return Err(Error::InvalidParameter("cyclotomic conductor must be >= 1".into()));
    }
    if d == 1 {
        return Ok(vec![BigInt::from(-1), BigInt::one()]);
    }
    // x^d - 1
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            let phi_e = cyclotomic_polynomial(e)?;
            num = poly_div_exact(&num, &phi_e)?;
        }
    }
    Ok(num)
}

/// Exact division of integer polynomials, low degree first; the divisor must
/// be monic and the remainder must vanish.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if dn < dd {
        return Err(Error::Internal("polynomial division underflow".into()));
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i + j] -= t;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::Internal("inexact cyclotomic division".into()));
    }
    Ok(quot)
}

/// The ring `Z[z]/Phi_d(z)`; carries the reduction modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloRing {
    d: u64,
    phi: usize,
    modulus: Vec<BigInt>,
}

/// An element of `Z[z]/Phi_d(z)` as a coefficient vector of length `phi(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem(pub Vec<BigInt>);

impl CycloRing {
    pub fn new(d: u64) -> Result<CycloRing> {
        if d == 0 {
            return Err(Error::InvalidParameter("conductor must be >= 1".into()));
        }
        Ok(CycloRing {
            d,
            phi: euler_phi(d) as usize,
            modulus: cyclotomic_polynomial(d)?,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem(vec![BigInt::zero(); self.phi])
    }

    pub fn one(&self) -> CycloElem {
        self.from_bigint(BigInt::one())
    }

    pub fn from_bigint(&self, v: BigInt) -> CycloElem {
        let mut c = vec![BigInt::zero(); self.phi];
        if self.phi > 0 {
            c[0] = v;
        }
        CycloElem(c)
    }

    /// Reduce an arbitrary integer coefficient vector (a polynomial in `z`,
    /// low degree first) modulo `Phi_d`.
    pub fn reduce(&self, coeffs: &[BigInt]) -> CycloElem {
        let mut rem: Vec<BigInt> = coeffs.to_vec();
        while rem.len() > self.phi {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() - self.phi;
            // rem -= top * z^shift * Phi_d (minus its monic head, already popped)
            for j in 0..self.phi {
                let t = &self.modulus[j] * &top;
                rem[shift + j] -= t;
            }
        }
        rem.resize(self.phi, BigInt::zero());
        CycloElem(rem)
    }

    /// The class of `z` itself, i.e. a primitive d-th root of unity.
    pub fn root(&self) -> CycloElem {
        self.root_pow(1)
    }

    /// `z^e`, reduced.
    pub fn root_pow(&self, e: u64) -> CycloElem {
        let e = (e % self.d) as usize;
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        self.reduce(&coeffs)
    }

    pub fn is_zero(&self, a: &CycloElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        if self.phi == 0 {
            return CycloElem(Vec::new());
        }
        let mut conv = vec![BigInt::zero(); 2 * self.phi];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        self.reduce(&conv)
    }

    /// The rational-integer part if the element is rational, i.e. all
    /// coefficients above degree 0 vanish.
    pub fn as_integer(&self, a: &CycloElem) -> Option<BigInt> {
        if a.0[1..].iter().all(|c| c.is_zero()) {
            Some(a.0[0].clone())
        } else {
            None
        }
    }
}

/// Reduce an integer coefficient vector modulo `Phi_d`: the class of the
/// polynomial `sum coeffs[i] z^i` in `Z[z]/Phi_d`.
pub fn cyclo_reduce(coeffs: &[i64], d: u64) -> Result<(CycloRing, CycloElem)> {
    let ring = CycloRing::new(d)?;
    let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let elem = ring.reduce(&big);
    Ok((ring, elem))
}
