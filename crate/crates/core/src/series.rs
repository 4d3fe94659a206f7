//! Hilbert series: the truncation operator `[..]` (cut before the first
//! nonpositive coefficient) and the closed forms for the quotient families
//! this crate certifies.

use crate::arith::{big_pow, binomial};
use crate::error::Error;
use crate::Result;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A power series truncated before its first nonpositive coefficient; every
/// retained coefficient is strictly positive except that the empty series is
/// allowed. `cut` is the index of the first dropped coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Truncates an untruncated coefficient list.
    pub fn from_raw<I: IntoIterator<Item = BigInt>>(raw: I) -> TruncatedSeries {
        let mut coeffs = Vec::new();
        for c in raw {
            if c.is_positive() {
                coeffs.push(c);
            } else {
                break;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the first dropped (nonpositive) coefficient.
    pub fn cut(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_usize(&self, i: usize) -> usize {
        self.coeff(i).to_usize().expect("coefficient fits usize")
    }

    /// The values as machine integers, for comparison against computed
    /// Hilbert functions.
    pub fn values(&self) -> Vec<usize> {
        self.coeffs.iter().map(|c| c.to_usize().unwrap()).collect()
    }
}

/// Expand `numerator / (1 - t)^n` to degree `bound` and truncate before the
/// first nonpositive coefficient. The numerator is a plain coefficient list,
/// low degree first, possibly with negative entries.
pub fn truncate_series(numerator: &[BigInt], n: usize, bound: usize) -> TruncatedSeries {
    let mut coeffs: Vec<BigInt> = (0..=bound)
        .map(|i| numerator.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    // Dividing by (1 - t) is a running prefix sum.
    for _ in 0..n {
        for i in 1..coeffs.len() {
            let prev = coeffs[i - 1].clone();
            coeffs[i] += prev;
        }
    }
    TruncatedSeries::from_raw(coeffs)
}

/// Numerator `(1 - t^a)^m` as a coefficient list.
pub fn binomial_numerator(a: usize, m: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); a * m + 1];
    for j in 0..=m {
        let c = binomial(m as i64, j as i64);
        let sign = if j % 2 == 0 { c } else { -c };
        out[a * j] = sign;
    }
    out
}

/// The truncated series `[(1 - t^d)^r / (1 - t)^n]`: the generic Hilbert
/// series of a quotient by `r` general forms of degree `d` in `n` variables.
pub fn generic_forms_series(n: usize, d: usize, r: usize) -> TruncatedSeries {
    // The positive prefix dies by degree r*d + n at the latest; a modest
    // bound past the first sign change is enough.
    let bound = d * r + n + 1;
    truncate_series(&binomial_numerator(d, r), n, bound)
}

/// Hilbert series of the power of an ideal of three general forms of one
/// degree in two variables, in its proven window `d >= 3`, `k >= d - 2`:
/// `sum_{i < dk} (i+1) t^i + binomial(d-1, 2) t^{dk}`.
pub fn series_two_vars(d: usize, k: usize) -> Result<TruncatedSeries> {
    if d < 3 || k + 2 < d {
        return Err(Error::InvalidParameter(alloc::format!(
            "series is proven for d >= 3 and k >= d - 2; got d={d} k={k}"
        )));
    }
    let dk = d * k;
    let mut coeffs: Vec<BigInt> = (0..dk).map(|i| BigInt::from(i as i64 + 1)).collect();
    coeffs.push(binomial(d as i64 - 1, 2));
    Ok(TruncatedSeries::from_raw(coeffs))
}

/// Hilbert series of the power of an ideal of four general quadrics in three
/// variables: `sum_{i < 2k} binomial(i+2, 2) t^i + (3k - 1) t^{2k}`.
pub fn series_three_vars_quadrics(k: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let mut coeffs: Vec<BigInt> = (0..2 * k)
        .map(|i| binomial(i as i64 + 2, 2))
        .collect();
    coeffs.push(BigInt::from(3 * k as i64 - 1));
    Ok(TruncatedSeries::from_raw(coeffs))
}

/// Hilbert series of the power of an ideal of four general cubics in three
/// variables. Proven for `k <= 40`: the generic-forms truncation when
/// `k < 9`, and `sum_{i < 3k} binomial(i+2, 2) t^i + (27k - 56) t^{3k}` for
/// `9 <= k <= 40`. Larger `k` is rejected as unproven.
pub fn series_three_vars_cubics(k: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    if k > 40 {
        return Err(Error::UnprovenRange(alloc::format!(
            "the four-cubics series is only established for k <= 40; got k={k}"
        )));
    }
    if k < 9 {
        let r = crate::arith::binomial_usize(k as i64 + 3, 3);
        return Ok(generic_forms_series(3, 3 * k, r));
    }
    let mut coeffs: Vec<BigInt> = (0..3 * k)
        .map(|i| binomial(i as i64 + 2, 2))
        .collect();
    coeffs.push(BigInt::from(27 * k as i64 - 56));
    Ok(TruncatedSeries::from_raw(coeffs))
}

/// The conjectured Hilbert series of a power of an ideal of `n + 1` general
/// forms in `n` variables in the saturated regime `k >= d^{n-1}` (proved for
/// `n = 2`, for `(n, d) = (3, 2)`, and for `(3, 3)` with `k <= 40`):
/// full dimensions below `dk`, and in degree `dk` the count
/// `binomial(dk+n-1, n-1) - binomial(k+n, n) + binomial(k-d^{n-1}+n, n)`.
pub fn series_saturated_power(n: usize, d: usize, k: usize) -> Result<TruncatedSeries> {
    if n < 2 {
        return Err(Error::InvalidParameter("need n >= 2".into()));
    }
    if d == 2 && n == 2 {
        return Err(Error::InvalidParameter(
            "(d, n) = (2, 2) is excluded: the base ideal is the full square of the maximal ideal"
                .into(),
        ));
    }
    let dn1 = big_pow(d as i64, n as u32 - 1)
        .to_i64()
        .ok_or_else(|| Error::Guard("d^{n-1} overflows".into()))?;
    if (k as i64) < dn1 {
        return Err(Error::InvalidParameter(alloc::format!(
            "saturated regime needs k >= d^(n-1) = {dn1}; got k={k}"
        )));
    }
    let dk = d * k;
    let mut coeffs: Vec<BigInt> = (0..dk)
        .map(|i| binomial(i as i64 + n as i64 - 1, n as i64 - 1))
        .collect();
    let last = binomial(dk as i64 + n as i64 - 1, n as i64 - 1)
        - binomial(k as i64 + n as i64, n as i64)
        + binomial(k as i64 - dn1 + n as i64, n as i64);
    coeffs.push(last);
    Ok(TruncatedSeries::from_raw(coeffs))
}

/// Hilbert series of `T_{3,d,k}`, the power of the monomial complete
/// intersection of three degree-`d` powers of variables, from the known
/// resolution of powers of complete intersections:
/// `(1 - binomial(k+2,2) t^{dk} + (k^2+2k) t^{d(k+1)} - binomial(k+1,2)
/// t^{d(k+2)}) / (1-t)^3`. The expansion terminates; it is truncated at its
/// first nonpositive coefficient.
pub fn series_ci_power_three_vars(d: usize, k: usize) -> Result<TruncatedSeries> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParameter("need d, k >= 1".into()));
    }
    let mut num = alloc::vec![BigInt::zero(); d * (k + 2) + 1];
    num[0] = BigInt::one();
    num[d * k] -= binomial(k as i64 + 2, 2);
    num[d * (k + 1)] += BigInt::from((k * k + 2 * k) as i64);
    num[d * (k + 2)] -= binomial(k as i64 + 1, 2);
    Ok(truncate_series(&num, 3, d * (k + 2) + 1))
}

/// The closed-form count that decides whether the obvious product relations
/// among the generators of `I^k` have room to appear in degree `d(k+1)`:
/// `binomial(d+n-1, n-1) binomial(k+n, n) - (binomial(k+n, n)(n+1) -
/// binomial(k+1+n, n)) - binomial(d(k+1)+n-1, n-1)`. Nonnegative values
/// gate the generic-behavior conjecture for `k < d^{n-1}`.
pub fn trivial_relation_slack(n: usize, d: usize, k: usize) -> BigInt {
    let (n, d, k) = (n as i64, d as i64, k as i64);
    binomial(d + n - 1, n - 1) * binomial(k + n, n)
        - (binomial(k + n, n) * (n + 1) - binomial(k + 1 + n, n))
        - binomial(d * (k + 1) + n - 1, n - 1)
}

/// Strict room inequality `binomial(d^n+n-1, n-1) > binomial(d^{n-1}+n, n)`:
/// the target degree has strictly more room than the generator count, which
/// holds for all `d, n >= 2` except `(2, 2)` and `(3, 2)`.
pub fn generator_room_strict(d: usize, n: usize) -> bool {
    let dn = big_pow(d as i64, n as u32);
    let dn1 = big_pow(d as i64, n as u32 - 1);
    big_binomial(&(dn + n as i64 - 1), n as i64 - 1) > big_binomial(&(dn1 + n as i64), n as i64)
}

/// Binomial with a big-integer top argument.
fn big_binomial(n: &BigInt, k: i64) -> BigInt {
    if k < 0 || n.is_negative() {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - BigInt::from(j);
        acc /= j + 1;
    }
    acc
}
