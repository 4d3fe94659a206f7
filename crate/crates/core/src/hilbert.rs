//! Hilbert functions of quotients by ideal powers: exact rank over a prime
//! field for arbitrary forms, monomial counting for monomial ideals, and the
//! report assembly with certification labels.
//!
//! Certification follows the two-sided scheme: a theorem-backed series gives
//! a lower bound for the generic value, a prime-field instance gives an upper
//! bound (semicontinuity), and a value is labelled certified exactly when the
//! two meet. An instance value of zero is always certified, since dimensions
//! only grow under specialization.

use crate::arith::binomial_usize;
use crate::error::Error;
use crate::fp::Fp;
use crate::ideal::{power_generators, Family, IdealSpec, MonomialPowerMembership, PowerGeneratorSet};
use crate::limits::Limits;
use crate::matrix::RankAccumulator;
use crate::monomial::enumerate_degree;
use crate::series::{self, TruncatedSeries};
use crate::Result;
use alloc::string::String;
use alloc::vec::Vec;

/// How a Hilbert function was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rank,
    Monomial,
    SeriesFormula,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Rank => "rank",
            Method::Monomial => "monomial",
            Method::SeriesFormula => "series-formula",
        }
    }
}

/// Whether a reported value is the certified generic value or only an
/// instance upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Certified,
    UpperBound,
}

impl Certainty {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certainty::Certified => "certified",
            Certainty::UpperBound => "upper-bound",
        }
    }
}

/// Degree-indexed table of quotient dimensions with provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertReport {
    pub spec: IdealSpec,
    pub method: Method,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
    /// `(degree, value, certainty)` for every degree with a positive value.
    pub values: Vec<(usize, usize, Certainty)>,
    /// First degree where the function is zero and stays zero; `None` for the
    /// zero ideal (power zero), whose quotient never vanishes.
    pub top: Option<usize>,
    pub warnings: Vec<String>,
}

impl HilbertReport {
    /// The positive values in degree order.
    pub fn value_vector(&self) -> Vec<usize> {
        self.values.iter().map(|&(_, v, _)| v).collect()
    }

    pub fn value_at(&self, degree: usize) -> usize {
        self.values
            .iter()
            .find(|&&(d, _, _)| d == degree)
            .map(|&(_, v, _)| v)
            .unwrap_or(0)
    }
}

/// Rank-based evaluator for one `(spec, prime)` instance; the expanded power
/// generators are built once and reused across degrees.
pub struct RankEngine {
    spec: IdealSpec,
    field: Fp,
    power: Option<PowerGeneratorSet<Fp>>,
    limits: Limits,
}

impl RankEngine {
    pub fn new(spec: &IdealSpec, prime: u64, limits: &Limits) -> Result<RankEngine> {
        let field = Fp::new(prime)?;
        let power = if spec.power == 0 {
            None
        } else {
            // Refuse oversized jobs before expanding anything: the expanded
            // generator table is already a matrix of this shape.
            let count = binomial_usize(
                (spec.power + spec.generator_count() - 1) as i64,
                spec.generator_count() as i64 - 1,
            );
            let dim_dk = binomial_usize(
                (spec.degree * spec.power + spec.nvars - 1) as i64,
                spec.nvars as i64 - 1,
            );
            limits.check_matrix(count, dim_dk, "power generator expansion")?;
            let gens = spec.generators_fp(prime)?;
            Some(power_generators(&gens, spec.power)?)
        };
        Ok(RankEngine {
            spec: spec.clone(),
            field,
            power,
            limits: *limits,
        })
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    /// Quotient dimension in one degree: ambient dimension minus the rank of
    /// the degree-`i` piece of the ideal power, with rows `m * g` generated
    /// lazily per power generator `g` and shift monomial `m`.
    pub fn value_at(&self, i: usize) -> Result<usize> {
        let n = self.spec.nvars;
        let dim = binomial_usize(i as i64 + n as i64 - 1, n as i64 - 1);
        self.limits.check_basis(dim, "hilbert rank")?;
        let Some(power) = &self.power else {
            return Ok(dim); // zero-th power: the full ring
        };
        let dk = self.spec.degree * self.spec.power;
        if i < dk {
            return Ok(dim);
        }
        let basis = enumerate_degree(n, i as u32);
        let shifts = enumerate_degree(n, (i - dk) as u32);
        self.limits
            .check_matrix(power.len() * shifts.len(), dim, "hilbert rank")?;
        let mut acc = RankAccumulator::new(self.field, dim);
        'rows: for g in &power.polys {
            for m in shifts.iter() {
                if acc.rank() == dim {
                    break 'rows;
                }
                let mut row: Vec<(u32, u64)> = g
                    .terms()
                    .map(|(t, c)| {
                        let col = basis
                            .index_of(&t.mul(m))
                            .expect("shifted monomial is in the degree basis");
                        (col as u32, *c)
                    })
                    .collect();
                row.sort_unstable_by_key(|&(c, _)| c);
                acc.absorb(row);
            }
        }
        Ok(dim - acc.rank())
    }
}

/// Counting evaluator for monomial families.
pub struct MonomialEngine {
    nvars: usize,
    kind: MembershipKind,
}

enum MembershipKind {
    FullRing,
    Ci { d: usize, k: usize },
    Power(MonomialPowerMembership),
}

impl MonomialEngine {
    pub fn new(spec: &IdealSpec) -> Result<MonomialEngine> {
        let kind = if spec.power == 0 {
            MembershipKind::FullRing
        } else if matches!(spec.family, Family::MonomialCi) {
            MembershipKind::Ci {
                d: spec.degree,
                k: spec.power,
            }
        } else {
            let gens = spec.monomial_generators().ok_or_else(|| {
                Error::InvalidParameter(
                    "monomial method needs a monomial generator family".into(),
                )
            })?;
            MembershipKind::Power(MonomialPowerMembership::new(&gens, spec.power)?)
        };
        Ok(MonomialEngine {
            nvars: spec.nvars,
            kind,
        })
    }

    /// Number of degree-`i` monomials outside the ideal power.
    pub fn value_at(&self, i: usize) -> usize {
        let count = crate::arith::compositions(self.nvars, i as u32);
        match &self.kind {
            MembershipKind::FullRing => count.len(),
            MembershipKind::Ci { d, k } => count
                .iter()
                .filter(|e| {
                    let m = crate::monomial::Monomial::new((*e).clone());
                    !crate::ideal::monomial_ci_membership(&m, *d, *k)
                })
                .count(),
            MembershipKind::Power(member) => count
                .iter()
                .filter(|e| {
                    let m = crate::monomial::Monomial::new((*e).clone());
                    !member.contains(&m)
                })
                .count(),
        }
    }
}

/// One-shot rank-method value (builds the engine each call; use
/// [`RankEngine`] in loops).
pub fn hf_rank(spec: &IdealSpec, i: usize, prime: u64, limits: &Limits) -> Result<usize> {
    RankEngine::new(spec, prime, limits)?.value_at(i)
}

/// One-shot monomial-counting value.
pub fn hf_monomial(spec: &IdealSpec, i: usize) -> Result<usize> {
    Ok(MonomialEngine::new(spec)?.value_at(i))
}

/// The theorem-backed generic lower bound for this shape of spec, when one
/// exists. Values are the proven generic Hilbert function; any prime-field
/// instance is coefficientwise at least this series.
pub fn theoretical_floor(spec: &IdealSpec) -> Option<TruncatedSeries> {
    let (n, d, k, r) = (
        spec.nvars,
        spec.degree,
        spec.power,
        spec.generator_count(),
    );
    if k == 0 {
        return None;
    }
    if n == 2 && r == 3 && d >= 3 && k + 2 >= d {
        return series::series_two_vars(d, k).ok();
    }
    if n == 3 && d == 2 && r == 4 {
        return series::series_three_vars_quadrics(k).ok();
    }
    if n == 3 && d == 3 && r == 4 && k <= 40 {
        return series::series_three_vars_cubics(k).ok();
    }
    if k == 1 && (n <= 3 || r == n + 1) {
        // Single powers: the generic series is known for at most three
        // variables and for n + 1 forms in any number of variables.
        return Some(series::generic_forms_series(n, d, r));
    }
    None
}

/// The closed-form series for this spec when one is known exactly (used by
/// the `series-formula` method).
pub fn closed_form_series(spec: &IdealSpec) -> Result<TruncatedSeries> {
    if spec.nvars == 3 && matches!(spec.family, Family::MonomialCi) && spec.power >= 1 {
        return series::series_ci_power_three_vars(spec.degree, spec.power);
    }
    theoretical_floor(spec).ok_or_else(|| {
        Error::InvalidParameter("no proven closed form for this family".into())
    })
}

fn value_vector_rank(
    spec: &IdealSpec,
    prime: u64,
    limits: &Limits,
) -> Result<Vec<usize>> {
    let engine = RankEngine::new(spec, prime, limits)?;
    let n = spec.nvars;
    let dk = spec.degree * spec.power;
    let cap = spec.degree * (spec.power + 2) + n;
    let mut values: Vec<usize> = (0..dk)
        .map(|i| binomial_usize(i as i64 + n as i64 - 1, n as i64 - 1))
        .collect();
    let mut i = dk;
    loop {
        let v = engine.value_at(i)?;
        if v == 0 {
            // Vanishing persists; verify the next degree rather than assume.
            let next = engine.value_at(i + 1)?;
            if next != 0 {
                return Err(Error::Internal(alloc::format!(
                    "Hilbert function of a graded algebra rose after zero at degree {i}"
                )));
            }
            return Ok(values);
        }
        values.push(v);
        i += 1;
        if i > cap {
            return Err(Error::TopSearchCap { cap });
        }
    }
}

fn value_vector_monomial(spec: &IdealSpec) -> Result<Vec<usize>> {
    let engine = MonomialEngine::new(spec)?;
    let n = spec.nvars;
    let (d, k) = (spec.degree, spec.power);
    // Largest degree of a monomial outside the power, plus slack.
    let cap = (k.saturating_sub(1)) * d + n * (d - 1) + 2;
    let mut values = Vec::new();
    for i in 0.. {
        let v = engine.value_at(i);
        if v == 0 {
            if engine.value_at(i + 1) != 0 {
                return Err(Error::Internal(
                    "monomial count rose after vanishing".into(),
                ));
            }
            break;
        }
        values.push(v);
        if i > cap {
            return Err(Error::TopSearchCap { cap });
        }
    }
    Ok(values)
}

fn certify(values: &[usize], floor: Option<&TruncatedSeries>) -> Vec<(usize, usize, Certainty)> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let certainty = if v == 0 {
                Certainty::Certified
            } else if let Some(f) = floor {
                if f.coeff(i) == num_bigint::BigInt::from(v as i64) {
                    Certainty::Certified
                } else {
                    Certainty::UpperBound
                }
            } else {
                Certainty::UpperBound
            };
            (i, v, certainty)
        })
        .collect()
}

fn respec_seed(spec: &IdealSpec, seed: u64) -> IdealSpec {
    let mut out = spec.clone();
    if let Family::GeneralRandom { count, .. } = spec.family {
        out.family = Family::GeneralRandom { count, seed };
    }
    out
}

/// Compute a full Hilbert report.
///
/// For the rank method, random families are run once per seed and the
/// coefficientwise minimum is reported (each instance is an upper bound for
/// the generic value); all requested primes are compared and any
/// disagreement is recorded as a warning on the report, never silently
/// resolved.
pub fn hilbert_report(
    spec: &IdealSpec,
    method: Method,
    primes: &[u64],
    seeds: &[u64],
    limits: &Limits,
) -> Result<HilbertReport> {
    if spec.power == 0 {
        // The zero-th power is the unit ideal's complement: the full ring.
        // List a token prefix of the (never-vanishing) Hilbert function.
        let cap = spec.degree + spec.nvars + 2;
        let values = (0..=cap)
            .map(|i| {
                let v = binomial_usize(i as i64 + spec.nvars as i64 - 1, spec.nvars as i64 - 1);
                (i, v, Certainty::Certified)
            })
            .collect();
        return Ok(HilbertReport {
            spec: spec.clone(),
            method,
            primes: Vec::new(),
            seeds: Vec::new(),
            values,
            top: None,
            warnings: Vec::new(),
        });
    }
    let mut warnings = Vec::new();
    let floor = theoretical_floor(spec);
    let (values, used_primes, used_seeds): (Vec<usize>, Vec<u64>, Vec<u64>) = match method {
        Method::Monomial => (value_vector_monomial(spec)?, Vec::new(), Vec::new()),
        Method::SeriesFormula => {
            let s = closed_form_series(spec)?;
            (s.values(), Vec::new(), Vec::new())
        }
        Method::Rank => {
            if primes.is_empty() {
                return Err(Error::InvalidParameter("rank method needs a prime".into()));
            }
            let seeds_used: Vec<u64> = if matches!(spec.family, Family::GeneralRandom { .. }) {
                if seeds.is_empty() {
                    alloc::vec![1, 2, 3]
                } else {
                    seeds.to_vec()
                }
            } else {
                alloc::vec![]
            };
            let mut per_prime: Vec<Vec<usize>> = Vec::new();
            for &p in primes {
                let mut min_vec: Option<Vec<usize>> = None;
                let instance_specs: Vec<IdealSpec> = if seeds_used.is_empty() {
                    alloc::vec![spec.clone()]
                } else {
                    seeds_used.iter().map(|&s| respec_seed(spec, s)).collect()
                };
                for inst in &instance_specs {
                    let v = value_vector_rank(inst, p, limits)?;
                    min_vec = Some(match min_vec {
                        None => v,
                        Some(prev) => combine_min(&prev, &v),
                    });
                }
                per_prime.push(min_vec.unwrap());
            }
            let first = per_prime[0].clone();
            let mut combined = first.clone();
            for (idx, other) in per_prime.iter().enumerate().skip(1) {
                if *other != first {
                    warnings.push(alloc::format!(
                        "primes {} and {} disagree (possible unlucky prime): {:?} vs {:?}",
                        primes[0],
                        primes[idx],
                        first,
                        other
                    ));
                    combined = combine_min(&combined, other);
                }
            }
            (combined, primes.to_vec(), seeds_used)
        }
    };
    let certainty_source = match method {
        // Counting and exact closed forms are exact, not instance bounds.
        Method::Monomial | Method::SeriesFormula => None,
        Method::Rank => Some(()),
    };
    let labelled = match certainty_source {
        None => values
            .iter()
            .enumerate()
            .map(|(i, &v)| (i, v, Certainty::Certified))
            .collect(),
        Some(()) => certify(&values, floor.as_ref()),
    };
    let top = Some(values.len());
    Ok(HilbertReport {
        spec: spec.clone(),
        method,
        primes: used_primes,
        seeds: used_seeds,
        values: labelled,
        top,
        warnings,
    })
}

fn combine_min(a: &[usize], b: &[usize]) -> Vec<usize> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            x.min(y)
        })
        .collect()
}

/// Corank of the evaluation map sending the degree-`m` monomials in the
/// `n + 1` generators (with `m = d^{n-1}`) to forms of degree `d^n`: the
/// number of linear relations among those products. One relation is the
/// generic count away from the two degenerate shapes.
pub fn unique_relation_certificate(
    spec: &IdealSpec,
    prime: u64,
    limits: &Limits,
) -> Result<usize> {
    let (n, d) = (spec.nvars, spec.degree);
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidParameter(
            "relation certificate supports 2 or 3 variables".into(),
        ));
    }
    if spec.generator_count() != n + 1 {
        return Err(Error::InvalidParameter(alloc::format!(
            "relation certificate needs n + 1 = {} generators",
            n + 1
        )));
    }
    let m = (d as u64).pow(n as u32 - 1) as usize;
    let product_count = binomial_usize(m as i64 + n as i64, n as i64);
    limits.check_basis(product_count, "relation certificate products")?;
    let target_dim =
        binomial_usize((d as i64) * (m as i64) + n as i64 - 1, n as i64 - 1);
    limits.check_basis(target_dim, "relation certificate target")?;
    limits.check_matrix(product_count, target_dim, "relation certificate")?;
    let gens = spec.generators_fp(prime)?;
    let power = power_generators(&gens, m)?;
    let basis = enumerate_degree(n, (d * m) as u32);
    let field = Fp::new(prime)?;
    let rank = crate::matrix::rank_mod_p(
        field,
        basis.len(),
        power.polys.iter().map(|g| g.dense_row(&basis)),
        None,
    );
    Ok(power.len() - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn rank_values_for_small_general_families() {
        // Three general cubics in two variables, first power: one cubic
        // survives in degree 3.
        let spec = IdealSpec::general(2, 3, 1, 3, 1).unwrap();
        assert_eq!(hf_rank(&spec, 3, 32003, &limits()).unwrap(), 1);
        // Four general quadrics in three variables, squared: 3k - 1 = 5 in
        // degree 4.
        let spec = IdealSpec::general(3, 2, 2, 4, 1).unwrap();
        assert_eq!(hf_rank(&spec, 4, 32003, &limits()).unwrap(), 5);
        // Below the power degree the full ring survives.
        assert_eq!(hf_rank(&spec, 3, 32003, &limits()).unwrap(), 10);
    }

    #[test]
    fn monomial_values_for_ci_powers() {
        // T_{3,2,2} in degree 4: 9 monomials survive.
        let spec = IdealSpec::monomial_ci(3, 2, 2).unwrap();
        assert_eq!(hf_monomial(&spec, 4).unwrap(), 9);
        assert_eq!(hf_monomial(&spec, 6).unwrap(), 0);
        // Below dk - 1 everything survives.
        assert_eq!(
            hf_monomial(&spec, 3).unwrap(),
            binomial_usize(3 + 2, 2)
        );
    }

    #[test]
    fn monomial_report_matches_closed_form() {
        let spec = IdealSpec::monomial_ci(3, 2, 2).unwrap();
        let report =
            hilbert_report(&spec, Method::Monomial, &[], &[], &limits()).unwrap();
        assert_eq!(report.value_vector(), alloc::vec![1, 3, 6, 10, 9, 3]);
        assert_eq!(report.top, Some(6));
        let series = closed_form_series(&spec).unwrap();
        assert_eq!(series.values(), report.value_vector());
    }

    #[test]
    fn rank_report_with_seeds_and_floor() {
        let spec = IdealSpec::general(2, 3, 2, 3, 1).unwrap();
        let report = hilbert_report(
            &spec,
            Method::Rank,
            &[32003],
            &[1, 2, 3],
            &limits(),
        )
        .unwrap();
        assert_eq!(report.value_vector(), alloc::vec![1, 2, 3, 4, 5, 6, 1]);
        assert_eq!(report.top, Some(7));
        assert!(report
            .values
            .iter()
            .all(|&(_, _, c)| c == Certainty::Certified));
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn explicit_quadric_witness_attains_series() {
        for k in 1..=3usize {
            let spec = ideal::explicit_quadric_witness(k).unwrap();
            let report =
                hilbert_report(&spec, Method::Rank, &[32003], &[], &limits()).unwrap();
            let series = series::series_three_vars_quadrics(k).unwrap();
            assert_eq!(report.value_vector(), series.values(), "k={k}");
        }
    }

    #[test]
    fn cubic_witness_small_powers() {
        // k = 2: the witness ideal's square attains the generic truncation,
        // with 18 in degree 6.
        let spec = ideal::explicit_cubic_witness(2).unwrap();
        let report = hilbert_report(
            &spec,
            Method::Rank,
            &[ideal::WITNESS_PRIME],
            &[],
            &limits(),
        )
        .unwrap();
        assert_eq!(report.value_at(6), 18);
        let series = series::series_three_vars_cubics(2).unwrap();
        assert_eq!(report.value_vector(), series.values());
    }

    #[test]
    fn zeroth_power_is_full_ring() {
        let spec = IdealSpec::monomial_ci(2, 2, 0).unwrap();
        let report =
            hilbert_report(&spec, Method::Rank, &[32003], &[], &limits()).unwrap();
        assert_eq!(report.top, None);
    }

    #[test]
    fn non_artinian_quotient_hits_the_visible_cap() {
        // A single generator in two variables never vanishes; the top search
        // must stop at its hard cap with an explicit error, not spin.
        let gen = crate::poly::int_poly(2, 2, &[(&[2, 0], 1)]).unwrap();
        let spec = IdealSpec::explicit(2, 1, alloc::vec![gen]).unwrap();
        let err = hilbert_report(&spec, Method::Rank, &[32003], &[], &limits());
        assert!(matches!(err, Err(crate::Error::TopSearchCap { .. })));
    }

    #[test]
    fn relation_certificate_small_cases() {
        // Three general cubics in two variables: 10 products of degree 9 in a
        // 10-dimensional space, exactly one relation.
        let spec = IdealSpec::general(2, 3, 1, 3, 1).unwrap();
        assert_eq!(
            unique_relation_certificate(&spec, 32003, &limits()).unwrap(),
            1
        );
        // The degenerate conic shape: 6 products, room for 5, corank 1 again
        // but for the forced reason.
        let spec = IdealSpec::general(2, 2, 1, 3, 1).unwrap();
        assert_eq!(
            unique_relation_certificate(&spec, 32003, &limits()).unwrap(),
            1
        );
    }

    #[test]
    fn vanishing_propagates_to_higher_powers() {
        // For an ideal containing all x_i^d: vanishing in degree a >= d(n-1)
        // pushes to degree a + d for the next power; checked on the explicit
        // quadric family.
        for k in 2..=4usize {
            let a = 2 * k + 1; // first zero of the k-th power
            let spec = ideal::explicit_quadric_witness(k).unwrap();
            assert_eq!(hf_rank(&spec, a, 32003, &limits()).unwrap(), 0);
            assert!(a >= 2 * (3 - 1));
            let next = ideal::explicit_quadric_witness(k + 1).unwrap();
            assert_eq!(hf_rank(&next, a + 2, 32003, &limits()).unwrap(), 0);
        }
    }
}
