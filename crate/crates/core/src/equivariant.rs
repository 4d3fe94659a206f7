//! S3-equivariant analysis of three-variable monomial quotients
//! `T_{3,d,k} = C[x,y,z]/(x^d,y^d,z^d)^k`: permutation characters on the
//! monomial bases, isotypic multiplicities, the closed-form window values,
//! and the equivariant rank obstruction.
//!
//! The multiplication by `L = x + y + z` is S3-equivariant, so whenever the
//! Hilbert function moves one way between two degrees while some isotypic
//! multiplicity moves the other way, the map cannot have maximal rank: an
//! equivariant map decomposes blockwise over the irreducibles.

use crate::error::Error;
use crate::ideal::monomial_ci_membership;
use crate::monomial::Monomial;
use crate::wlp::{turning_case, TurningCase};
use crate::Result;

/// Values of the permutation character of the degree-`i` piece on the three
/// conjugacy classes of S3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterVector {
    /// Fixed monomials of the identity: the dimension.
    pub identity: usize,
    /// Fixed monomials of a transposition, e.g. `(x y)^m z^c`.
    pub transposition: usize,
    /// Fixed monomials of a 3-cycle: powers of `xyz` only.
    pub three_cycle: usize,
}

/// Multiplicities of the irreducible S3 representations in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsotypicMultiplicities {
    pub trivial: i64,
    pub sign: i64,
    pub standard: i64,
}

fn outside(a: u32, b: u32, c: u32, d: usize, k: usize) -> bool {
    !monomial_ci_membership(&Monomial::new(alloc::vec![a, b, c]), d, k)
}

/// Exact fixed-point counts on the monomial basis of degree `i`.
pub fn character(d: usize, k: usize, i: usize) -> CharacterVector {
    let i = i as u32;
    let mut identity = 0usize;
    for a in 0..=i {
        for b in 0..=(i - a) {
            let c = i - a - b;
            if outside(a, b, c, d, k) {
                identity += 1;
            }
        }
    }
    let mut transposition = 0usize;
    for a in 0..=(i / 2) {
        let c = i - 2 * a;
        if outside(a, a, c, d, k) {
            transposition += 1;
        }
    }
    let three_cycle = if i.is_multiple_of(3) {
        let m = i / 3;
        usize::from(outside(m, m, m, d, k))
    } else {
        0
    };
    CharacterVector {
        identity,
        transposition,
        three_cycle,
    }
}

/// Isotypic multiplicities from the character, by the orthogonality
/// relations for S3 (class sizes 1, 3, 2). Non-integral division means the
/// character computation is broken, so it is an internal error.
pub fn isotypic(d: usize, k: usize, i: usize) -> Result<IsotypicMultiplicities> {
    let chi = character(d, k, i);
    isotypic_from_character(&chi)
}

pub fn isotypic_from_character(chi: &CharacterVector) -> Result<IsotypicMultiplicities> {
    let e = chi.identity as i64;
    let t = chi.transposition as i64;
    let s = chi.three_cycle as i64;
    let trivial6 = e + 3 * t + 2 * s;
    let sign6 = e - 3 * t + 2 * s;
    let standard6 = 2 * e - 2 * s;
    if trivial6 % 6 != 0 || sign6 % 6 != 0 || standard6 % 6 != 0 {
        return Err(Error::Internal(alloc::format!(
            "character ({e}, {t}, {s}) is not a nonnegative combination of irreducibles"
        )));
    }
    let out = IsotypicMultiplicities {
        trivial: trivial6 / 6,
        sign: sign6 / 6,
        standard: standard6 / 6,
    };
    if out.trivial < 0 || out.sign < 0 || out.standard < 0 {
        return Err(Error::Internal(alloc::format!(
            "negative isotypic multiplicity from character ({e}, {t}, {s})"
        )));
    }
    Ok(out)
}

/// Which closed-form window value to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowStat {
    /// `binomial(i+2, 2) - binomial(k+2, 2) binomial(i-dk+2, 2)`.
    Dimension,
    /// `floor((i+2)/2) - floor((k+2)/2) floor((i-dk+2)/2)`.
    TranspositionFixed,
    TrivialMultiplicity,
    SignMultiplicity,
    StandardMultiplicity,
}

/// The closed forms valid in the window `dk <= i < d(k+1)`, where the
/// multiples of the power generators are still pairwise distinct. At
/// `i = d(k+1)` the naive count double-counts (by `k^2 + 2k`), so the right
/// endpoint is excluded. The middle term of the multiplicity formulas is
/// `2 * chi(3-cycle)` computed exactly from the fixed-point count rather
/// than guessed from a congruence.
pub fn window_value(d: usize, k: usize, i: usize, stat: WindowStat) -> Result<i64> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParameter("need d, k >= 1".into()));
    }
    if i < d * k || i >= d * (k + 1) {
        return Err(Error::InvalidParameter(alloc::format!(
            "window formulas are valid for dk <= i < d(k+1); got i={i}, window [{}, {})",
            d * k,
            d * (k + 1)
        )));
    }
    let bin2 = |m: i64| -> i64 {
        if m < 2 {
            0
        } else {
            m * (m - 1) / 2
        }
    };
    let (i64i, i64k) = (i as i64, k as i64);
    let shift = i64i - (d * k) as i64;
    let dimension = bin2(i64i + 2) - bin2(i64k + 2) * bin2(shift + 2);
    let transposition = (i64i + 2) / 2 - ((i64k + 2) / 2) * ((shift + 2) / 2);
    match stat {
        WindowStat::Dimension => return Ok(dimension),
        WindowStat::TranspositionFixed => return Ok(transposition),
        _ => {}
    }
    let sigma = character(d, k, i).three_cycle as i64;
    let middle = 2 * sigma;
    let value = match stat {
        WindowStat::TrivialMultiplicity => (dimension + middle + 3 * transposition) / 6,
        WindowStat::SignMultiplicity => (dimension + middle - 3 * transposition) / 6,
        WindowStat::StandardMultiplicity => (2 * dimension - middle) / 6,
        _ => unreachable!(),
    };
    Ok(value)
}

/// The equivariant rank obstruction at a matched resonance case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchurObstruction {
    pub case: TurningCase,
    /// The two degrees compared: `dk + 2l - 1` and `dk + 2l`.
    pub degrees: (usize, usize),
    pub hilbert_delta: i64,
    pub delta_trivial: i64,
    pub delta_sign: i64,
    pub delta_standard: i64,
    /// True when some isotypic multiplicity moves against the Hilbert
    /// function, ruling out maximal rank for the equivariant map.
    pub obstructed: bool,
}

/// Evaluate the obstruction for `(d, k)`; errors when no resonance case
/// applies.
pub fn schur_obstruction(d: usize, k: usize) -> Result<SchurObstruction> {
    let case = turning_case(d, k).ok_or_else(|| {
        Error::InvalidParameter(alloc::format!(
            "no resonance case applies to (d, k) = ({d}, {k})"
        ))
    })?;
    let i0 = d * k + 2 * case.ell - 1;
    let i1 = i0 + 1;
    let lo = isotypic(d, k, i0)?;
    let hi = isotypic(d, k, i1)?;
    let chi0 = character(d, k, i0);
    let chi1 = character(d, k, i1);
    let hilbert_delta = chi1.identity as i64 - chi0.identity as i64;
    // Cross-check against the closed form k * eps.
    let expected = (k as i64 * case.eps_times_2 as i64) / 2;
    if hilbert_delta != expected {
        return Err(Error::Internal(alloc::format!(
            "Hilbert delta {hilbert_delta} differs from k*eps = {expected} at (d,k)=({d},{k})"
        )));
    }
    let delta_trivial = hi.trivial - lo.trivial;
    let delta_sign = hi.sign - lo.sign;
    let delta_standard = hi.standard - lo.standard;
    let min_delta = delta_trivial.min(delta_sign).min(delta_standard);
    let max_delta = delta_trivial.max(delta_sign).max(delta_standard);
    let obstructed =
        (hilbert_delta >= 0 && min_delta < 0) || (hilbert_delta <= 0 && max_delta > 0);
    Ok(SchurObstruction {
        case,
        degrees: (i0, i1),
        hilbert_delta,
        delta_trivial,
        delta_sign,
        delta_standard,
        obstructed,
    })
}
