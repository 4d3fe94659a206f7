//! The claim verifier: one deterministic check procedure per labelled
//! statement, each with a scale dial (`small` finishes in seconds, `medium`
//! in minutes, `full` attempts the widest proven ranges and lets the
//! resource guard mark anything beyond desk scale as skipped).
//!
//! Checks never pass on a guard skip; skips are reported distinctly and
//! surface as exit code 3 rather than success. Conjecture checks are
//! labelled as evidence in their detail text, and failures of conjecture
//! evidence still fail the claim.

use idealpower_core::equivariant::schur_obstruction;
use idealpower_core::hilbert::{
    hilbert_report, unique_relation_certificate, Method, MonomialEngine, RankEngine,
};
use idealpower_core::ideal::{
    ci2_plus_binomial, ci2_plus_monomial, explicit_cubic_witness, explicit_quadric_witness,
    monomial_ci_membership, IdealSpec, WITNESS_PRIME,
};
use idealpower_core::poly::sum_of_variables;
use idealpower_core::relations::{
    build_product_form, compare_reference_table, exponent_divisibility, is_symmetric,
    kernel_element,
};
use idealpower_core::ring::IntRing;
use idealpower_core::series::{
    generator_room_strict, series_three_vars_cubics, series_three_vars_quadrics,
    series_two_vars, trivial_relation_slack,
};
use idealpower_core::wlp::{
    mult_map_rank, scan_grid, turning_case, wlp_check, Verdict, WlpOptions,
};
use idealpower_core::{Error, Limits};
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

/// Identifiers of the verifiable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimId {
    LmUnique,
    LmZerodk1,
    ThmMain,
    ThmMain2,
    Lm32k,
    Thm33k,
    LmGedk,
    LmGedk1,
    LmBinineq,
    ConjDk1,
    ConjGen,
    ThmConjugate,
    ThmNotwlp,
    ThmWlpd2,
    ThmNecessity,
    ConjWlp3,
    TableWlp,
    ThmOddwlp,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::LmUnique,
        ClaimId::LmZerodk1,
        ClaimId::ThmMain,
        ClaimId::ThmMain2,
        ClaimId::Lm32k,
        ClaimId::Thm33k,
        ClaimId::LmGedk,
        ClaimId::LmGedk1,
        ClaimId::LmBinineq,
        ClaimId::ConjDk1,
        ClaimId::ConjGen,
        ClaimId::ThmConjugate,
        ClaimId::ThmNotwlp,
        ClaimId::ThmWlpd2,
        ClaimId::ThmNecessity,
        ClaimId::ConjWlp3,
        ClaimId::TableWlp,
        ClaimId::ThmOddwlp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::LmUnique => "lm-unique",
            ClaimId::LmZerodk1 => "lm-zerodk1",
            ClaimId::ThmMain => "thm-main",
            ClaimId::ThmMain2 => "thm-main2",
            ClaimId::Lm32k => "lm-32k",
            ClaimId::Thm33k => "thm-33k",
            ClaimId::LmGedk => "lm-gedk",
            ClaimId::LmGedk1 => "lm-gedk1",
            ClaimId::LmBinineq => "lm-binineq",
            ClaimId::ConjDk1 => "conj-dk1",
            ClaimId::ConjGen => "conj-gen",
            ClaimId::ThmConjugate => "thm-conjugate",
            ClaimId::ThmNotwlp => "thm-notwlp",
            ClaimId::ThmWlpd2 => "thm-wlpd2",
            ClaimId::ThmNecessity => "thm-necessity",
            ClaimId::ConjWlp3 => "conj-wlp3",
            ClaimId::TableWlp => "table-wlp",
            ClaimId::ThmOddwlp => "thm-oddwlp",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;
    fn from_str(s: &str) -> Result<ClaimId, String> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Small,
    Medium,
    Full,
}

impl Scale {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scale::Small => "small",
            Scale::Medium => "medium",
            Scale::Full => "full",
        }
    }
}

impl FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Scale, String> {
        match s {
            "small" => Ok(Scale::Small),
            "medium" => Ok(Scale::Medium),
            "full" => Ok(Scale::Full),
            other => Err(format!("unknown scale {other:?} (small|medium|full)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
    Info,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "skip",
            CheckStatus::Info => "info",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub scale: Scale,
    pub checks: Vec<CheckResult>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Fail | CheckStatus::Skip))
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn skipped(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Skip)
    }
}

/// Shared execution options.
#[derive(Debug, Clone)]
pub struct ClaimOptions {
    pub limits: Limits,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        ClaimOptions {
            limits: Limits::default(),
            primes: vec![32003, 101],
            seeds: vec![1, 2, 3],
        }
    }
}

struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn new() -> Recorder {
        Recorder { checks: Vec::new() }
    }

    fn record(&mut self, name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.record(
            name,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        );
    }

    /// Record a guard refusal as a skip, any other error as a failure.
    fn error(&mut self, name: impl Into<String>, err: &Error) {
        let status = if matches!(err, Error::Guard(_)) {
            CheckStatus::Skip
        } else {
            CheckStatus::Fail
        };
        self.record(name, status, err.to_string());
    }
}

/// Run one claim at one scale.
pub fn run_claim(claim: ClaimId, scale: Scale, opts: &ClaimOptions) -> ClaimResult {
    let mut rec = Recorder::new();
    match claim {
        ClaimId::LmUnique => claim_unique(&mut rec, scale, opts),
        ClaimId::LmZerodk1 => claim_zerodk1(&mut rec, scale, opts),
        ClaimId::ThmMain => claim_two_var_series(&mut rec, scale, opts),
        ClaimId::ThmMain2 => claim_quadric_series_general(&mut rec, scale, opts),
        ClaimId::Lm32k => claim_quadric_series_explicit(&mut rec, scale, opts),
        ClaimId::Thm33k => claim_cubic_series(&mut rec, scale, opts),
        ClaimId::LmGedk => claim_monomial_third_gen(&mut rec, scale, opts),
        ClaimId::LmGedk1 => claim_binomial_third_gen(&mut rec, scale, opts),
        ClaimId::LmBinineq => claim_room_inequality(&mut rec, scale, opts),
        ClaimId::ConjDk1 => claim_powers_of_linear_vanishing(&mut rec, scale, opts),
        ClaimId::ConjGen => claim_generic_regime(&mut rec, scale, opts),
        ClaimId::ThmConjugate => claim_product_form(&mut rec, scale, opts),
        ClaimId::ThmNotwlp => claim_threshold_failures(&mut rec, scale, opts),
        ClaimId::ThmWlpd2 => claim_quadric_wlp(&mut rec, scale, opts),
        ClaimId::ThmNecessity => claim_resonance_failures(&mut rec, scale, opts),
        ClaimId::ConjWlp3 => claim_three_var_grid(&mut rec, scale, opts),
        ClaimId::TableWlp => claim_table_grids(&mut rec, scale, opts),
        ClaimId::ThmOddwlp => claim_odd_square_square(&mut rec, scale, opts),
    }
    ClaimResult {
        claim,
        scale,
        checks: rec.checks,
    }
}

fn wlp_opts(opts: &ClaimOptions) -> WlpOptions {
    WlpOptions {
        primes: opts.primes.clone(),
        limits: opts.limits,
        ..WlpOptions::default()
    }
}

fn claim_unique(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let mut shapes = vec![(2usize, 3usize), (2, 4)];
    if scale != Scale::Small {
        shapes.push((3, 2));
    }
    for (n, d) in shapes {
        for &p in &opts.primes {
            let mut best: Option<usize> = None;
            for &seed in &opts.seeds {
                let spec = match IdealSpec::general(n, d, 1, n + 1, seed) {
                    Ok(s) => s,
                    Err(e) => {
                        rec.error(format!("relation-count n={n} d={d} p={p}"), &e);
                        continue;
                    }
                };
                match unique_relation_certificate(&spec, p, &opts.limits) {
                    Ok(c) => best = Some(best.map_or(c, |b: usize| b.min(c))),
                    Err(e) => rec.error(format!("relation-count n={n} d={d} p={p}"), &e),
                }
            }
            if let Some(corank) = best {
                rec.check(
                    format!("relation-count n={n} d={d} p={p}"),
                    corank == 1,
                    format!("corank {corank}, expected exactly one relation"),
                );
            }
        }
    }
    // The excluded shapes, reported but not asserted to be 1 for the same
    // reason: (2,2) is forced by dimension, (3,2) is the square case.
    let spec = IdealSpec::general(2, 2, 1, 3, opts.seeds[0]).unwrap();
    match unique_relation_certificate(&spec, opts.primes[0], &opts.limits) {
        Ok(c) => rec.record(
            "excluded shape n=2 d=2",
            CheckStatus::Info,
            format!("corank {c}: 6 products into the 5-dimensional quartics, relation forced by dimension"),
        ),
        Err(e) => rec.error("excluded shape n=2 d=2", &e),
    }
}

fn claim_zerodk1(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let kmax = if scale == Scale::Small { 3 } else { 5 };
    let p = opts.primes[0];
    for k in 2..=kmax {
        let a = 2 * k + 1;
        let run = (|| -> Result<(usize, usize), Error> {
            let spec = explicit_quadric_witness(k)?;
            let base = RankEngine::new(&spec, p, &opts.limits)?.value_at(a)?;
            let next_spec = explicit_quadric_witness(k + 1)?;
            let next = RankEngine::new(&next_spec, p, &opts.limits)?.value_at(a + 2)?;
            Ok((base, next))
        })();
        match run {
            Ok((base, next)) => rec.check(
                format!("vanishing propagates k={k}"),
                base == 0 && next == 0,
                format!("H(I^{k})_{a} = {base}, H(I^{})_{} = {next}", k + 1, a + 2),
            ),
            Err(e) => rec.error(format!("vanishing propagates k={k}"), &e),
        }
    }
}

fn claim_two_var_series(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let dmax = if scale == Scale::Small { 5 } else { 6 };
    for d in 3..=dmax {
        for k in d - 2..=d + 1 {
            let name = format!("two-var series d={d} k={k}");
            let run = (|| -> Result<(Vec<usize>, Vec<usize>), Error> {
                let spec = IdealSpec::general(2, d, k, 3, opts.seeds[0])?;
                let report = hilbert_report(
                    &spec,
                    Method::Rank,
                    &opts.primes[..1],
                    &opts.seeds,
                    &opts.limits,
                )?;
                let series = series_two_vars(d, k)?;
                Ok((report.value_vector(), series.values()))
            })();
            match run {
                Ok((got, want)) => rec.check(
                    name,
                    got == want,
                    format!("computed {got:?}, closed form {want:?}"),
                ),
                Err(e) => rec.error(name, &e),
            }
        }
    }
}

fn claim_quadric_series_general(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let kmax = if scale == Scale::Small { 6 } else { 8 };
    for k in 1..=kmax {
        let name = format!("four general quadrics k={k}");
        let run = (|| -> Result<(Vec<usize>, Vec<usize>), Error> {
            let spec = IdealSpec::general(3, 2, k, 4, opts.seeds[0])?;
            let report = hilbert_report(
                &spec,
                Method::Rank,
                &opts.primes[..1],
                &opts.seeds,
                &opts.limits,
            )?;
            Ok((
                report.value_vector(),
                series_three_vars_quadrics(k)?.values(),
            ))
        })();
        match run {
            Ok((got, want)) => rec.check(
                name,
                got == want,
                format!("computed {got:?}, closed form {want:?}"),
            ),
            Err(e) => rec.error(name, &e),
        }
    }
}

fn claim_quadric_series_explicit(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let kmax = if scale == Scale::Small { 6 } else { 8 };
    for k in 1..=kmax {
        let name = format!("explicit quadric ideal k={k}");
        let run = (|| -> Result<(Vec<usize>, Vec<usize>), Error> {
            let spec = explicit_quadric_witness(k)?;
            let report = hilbert_report(
                &spec,
                Method::Rank,
                &opts.primes[..1],
                &[],
                &opts.limits,
            )?;
            Ok((
                report.value_vector(),
                series_three_vars_quadrics(k)?.values(),
            ))
        })();
        match run {
            Ok((got, want)) => rec.check(
                name,
                got == want,
                format!("computed {got:?}, closed form {want:?}"),
            ),
            Err(e) => rec.error(name, &e),
        }
    }
}

fn claim_cubic_series(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let ks: Vec<usize> = match scale {
        Scale::Small => vec![2, 3, 9],
        Scale::Medium => (2..=12).collect(),
        Scale::Full => (2..=40).collect(),
    };
    for k in ks {
        let name = format!("witness cubic ideal k={k}");
        let run = (|| -> Result<(Vec<usize>, Vec<usize>, bool), Error> {
            let spec = explicit_cubic_witness(k)?;
            let report = hilbert_report(
                &spec,
                Method::Rank,
                &[WITNESS_PRIME],
                &[],
                &opts.limits,
            )?;
            let series = series_three_vars_cubics(k)?;
            Ok((report.value_vector(), series.values(), k > 8))
        })();
        match run {
            Ok((got, want, top_branch)) => {
                let label = if top_branch {
                    format!("27k-56 = {} at degree {}", 27 * k - 56, 3 * k)
                } else {
                    "generic truncation".to_string()
                };
                rec.check(
                    name,
                    got == want,
                    format!("computed {got:?} vs {label}"),
                );
            }
            Err(e) => rec.error(name, &e),
        }
    }
    if scale == Scale::Full {
        rec.record(
            "range note",
            CheckStatus::Info,
            "the closed form is proven for k <= 40 only; larger k is conjectural and rejected",
        );
    }
}

fn claim_monomial_third_gen(rec: &mut Recorder, _scale: Scale, _opts: &ClaimOptions) {
    for d in 2..=6usize {
        for k in (d.saturating_sub(2)).max(1)..=d + 2 {
            let name = format!("monomial third generator d={d} k={k}");
            let run = (|| -> Result<(usize, usize), Error> {
                let spec = ci2_plus_monomial(d, k)?;
                let got = MonomialEngine::new(&spec)?.value_at(d * k);
                let want = idealpower_core::arith::binomial_usize(d as i64 - 1, 2);
                Ok((got, want))
            })();
            match run {
                Ok((got, want)) => rec.check(
                    name,
                    got == want,
                    format!("H at degree {} is {got}, expected {want}", d * k),
                ),
                Err(e) => rec.error(name, &e),
            }
        }
    }
}

fn claim_binomial_third_gen(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    let p = opts.primes[0];
    for d in 2..=6usize {
        for k in (d.saturating_sub(3)).max(1)..=8 {
            let name = format!("binomial third generator d={d} k={k}");
            let run = (|| -> Result<usize, Error> {
                let spec = ci2_plus_binomial(d, k)?;
                RankEngine::new(&spec, p, &opts.limits)?.value_at(d * k + 1)
            })();
            match run {
                Ok(v) => rec.check(
                    name,
                    v == 0,
                    format!("H at degree {} is {v}, expected 0", d * k + 1),
                ),
                Err(e) => rec.error(name, &e),
            }
        }
    }
}

fn claim_room_inequality(rec: &mut Recorder, _scale: Scale, _opts: &ClaimOptions) {
    let mut all_ok = true;
    let mut wrong = Vec::new();
    for d in 2..=8usize {
        for n in 2..=8usize {
            let expect = !matches!((d, n), (2, 2) | (3, 2));
            if generator_room_strict(d, n) != expect {
                all_ok = false;
                wrong.push((d, n));
            }
        }
    }
    rec.check(
        "room inequality grid 2..8",
        all_ok,
        if all_ok {
            "strict for all (d, n) except (2,2) and (3,2)".to_string()
        } else {
            format!("unexpected values at {wrong:?}")
        },
    );
    rec.check(
        "hand instance (d,n)=(2,3)",
        generator_room_strict(2, 3),
        "binomial(10,2) = 45 > 35 = binomial(7,3)",
    );
}

fn claim_powers_of_linear_vanishing(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let (dmax, kmax) = match scale {
        Scale::Small => (4usize, 6usize),
        _ => (6, 8),
    };
    let p = opts.primes[0];
    for d in 3..=dmax {
        for k in (d.saturating_sub(3)).max(1)..=kmax {
            let name = format!("conjecture: powers-of-linear vanishing d={d} k={k}");
            let run = (|| -> Result<usize, Error> {
                let spec = IdealSpec::powers_of_linear(2, d, k)?;
                RankEngine::new(&spec, p, &opts.limits)?.value_at(d * k + 1)
            })();
            match run {
                Ok(v) => rec.check(
                    name,
                    v == 0,
                    format!(
                        "conjecture evidence: H at degree {} is {v}, expected 0",
                        d * k + 1
                    ),
                ),
                Err(e) => rec.error(name, &e),
            }
        }
    }
}

fn claim_generic_regime(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    // Frozen slack evaluations.
    rec.check(
        "slack S(3,2,1)",
        trivial_relation_slack(3, 2, 1) == BigInt::from(3),
        "direct evaluation gives 3",
    );
    rec.record(
        "slack S(2,3,1), S(2,4,2)",
        CheckStatus::Info,
        format!(
            "{}, {}",
            trivial_relation_slack(2, 3, 1),
            trivial_relation_slack(2, 4, 2)
        ),
    );
    // Spot instances with S >= 0 and k < d^{n-1}: the power behaves like
    // binomial(k+n, n) general forms of degree dk.
    for (n, d, k) in [(2usize, 3usize, 2usize), (2, 4, 2), (3, 2, 2)] {
        let name = format!("conjecture: generic regime n={n} d={d} k={k}");
        let slack = trivial_relation_slack(n, d, k);
        let dn1 = (d as u64).pow(n as u32 - 1);
        if slack < BigInt::from(0) || (k as u64) >= dn1 {
            rec.record(
                name,
                CheckStatus::Fail,
                format!("gate violated: S = {slack}, k vs d^(n-1) = {dn1}"),
            );
            continue;
        }
        let run = (|| -> Result<(Vec<usize>, Vec<usize>), Error> {
            let spec = IdealSpec::general(n, d, k, n + 1, opts.seeds[0])?;
            let power_report = hilbert_report(
                &spec,
                Method::Rank,
                &opts.primes[..1],
                &opts.seeds,
                &opts.limits,
            )?;
            let count = idealpower_core::arith::binomial_usize(
                k as i64 + n as i64,
                n as i64,
            );
            let forms = IdealSpec::general(n, d * k, 1, count, opts.seeds[0])?;
            let forms_report = hilbert_report(
                &forms,
                Method::Rank,
                &opts.primes[..1],
                &opts.seeds,
                &opts.limits,
            )?;
            Ok((power_report.value_vector(), forms_report.value_vector()))
        })();
        match run {
            Ok((got, want)) => rec.check(
                name,
                got == want,
                format!("conjecture evidence: power {got:?} vs general forms {want:?}"),
            ),
            Err(e) => rec.error(name, &e),
        }
    }
}

fn claim_product_form(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    // Two-variable forms.
    for d in 2..=5usize {
        let name = format!("product form (2,{d})");
        match build_product_form(2, d, &opts.limits) {
            Ok(form) => {
                let member = exponent_divisibility(&form);
                let kernel = kernel_element(&form);
                rec.check(
                    name,
                    member && kernel.is_ok(),
                    format!(
                        "integral expansion, divisibility {member}, kernel division {}",
                        kernel.as_ref().map(|_| "exact").unwrap_or("failed")
                    ),
                );
            }
            Err(e) => rec.error(name, &e),
        }
    }
    // Symmetric forms with reference rows.
    for (nvars, d) in [(3usize, 2usize), (4, 2)] {
        let name = format!("product form ({nvars},{d})");
        match build_product_form(nvars, d, &opts.limits) {
            Ok(form) => {
                let member = exponent_divisibility(&form);
                let symmetric = is_symmetric(&form).unwrap_or(false);
                let kernel_ok = kernel_element(&form).is_ok();
                rec.check(
                    name,
                    member && symmetric && kernel_ok,
                    format!("divisibility {member}, symmetric {symmetric}, kernel {kernel_ok}"),
                );
            }
            Err(e) => rec.error(name, &e),
        }
        let table_name = format!("reference row ({nvars},{d})");
        match compare_reference_table((nvars, d), &opts.limits) {
            Ok(cmp) => {
                let reading = &cmp.readings[0];
                let detail = if reading.matched {
                    "matches up to one scalar".to_string()
                } else {
                    format!(
                        "deviates from the recomputed expansion: {}",
                        summarize_mismatches(reading)
                    )
                };
                rec.check(table_name, reading.matched, detail);
            }
            Err(e) => rec.error(table_name, &e),
        }
    }
    // The five-variable row is optional under the guard.
    match compare_reference_table((5, 2), &opts.limits) {
        Ok(cmp) => {
            let reading = &cmp.readings[0];
            rec.record(
                "reference row (5,2) [optional]",
                CheckStatus::Info,
                if reading.matched {
                    "matches up to one scalar".to_string()
                } else {
                    format!("deviates: {}", summarize_mismatches(reading))
                },
            );
        }
        Err(Error::Guard(g)) => rec.record(
            "reference row (5,2) [optional]",
            CheckStatus::Info,
            format!("guarded out: {g}"),
        ),
        Err(e) => rec.error("reference row (5,2) [optional]", &e),
    }
    // The inconsistent row must yield a structured report, not a crash.
    match compare_reference_table((3, 3), &opts.limits) {
        Ok(cmp) => {
            let structured = cmp.readings.len() == 2
                && !cmp.readings[0].structural_issues.is_empty()
                && !cmp.readings[1].computed_orbits.is_empty();
            rec.check(
                "reference row (3,3) mismatch report",
                structured,
                format!(
                    "readings as (3,3): {} issues; as (4,3): {} mismatched orbits, ground truth emitted",
                    cmp.readings[0].structural_issues.len(),
                    cmp.readings[1].mismatches.len()
                ),
            );
        }
        Err(e) => rec.error("reference row (3,3) mismatch report", &e),
    }
}

fn summarize_mismatches(reading: &idealpower_core::relations::ReadingReport) -> String {
    reading
        .mismatches
        .iter()
        .map(|m| {
            format!(
                "orbit {:?} listed {} computed {}",
                m.representative.exponents(),
                m.listed,
                m.computed
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn claim_threshold_failures(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    // T_{4,2,4} fails, full per-degree check over two primes.
    let spec = IdealSpec::monomial_ci(4, 2, 4).unwrap();
    match wlp_check(&spec, &wlp_opts(opts)) {
        Ok(report) => rec.check(
            "T(4,2,4) fails",
            report.verdict == Verdict::Fails,
            format!(
                "verdict {} at degrees {:?} ({})",
                report.verdict.as_str(),
                report.failure_degrees,
                report.certification
            ),
        ),
        Err(e) => rec.error("T(4,2,4) fails", &e),
    }
    // T_{4,3,9} small proxy: the explicit kernel element certifies a rank
    // drop at degree dk - 1 = 26 without any modular computation.
    let witness = (|| -> Result<bool, Error> {
        let form = build_product_form(4, 3, &opts.limits)?;
        let g = kernel_element(&form)?;
        let (d, k) = (3usize, 9usize);
        let survives = g.terms().any(|(m, _)| !monomial_ci_membership(m, d, k));
        let killed = g
            .multiply(&sum_of_variables(IntRing, 4))?
            .terms()
            .all(|(m, _)| monomial_ci_membership(m, d, k));
        Ok(survives && killed)
    })();
    match witness {
        Ok(ok) => rec.check(
            "T(4,3,9) kernel witness",
            ok,
            "explicit degree-26 kernel element survives in the quotient and dies under x+y+z+w",
        ),
        Err(e) => rec.error("T(4,3,9) kernel witness", &e),
    }
    if scale != Scale::Small {
        // The modular rank drop itself, over two primes.
        let spec = IdealSpec::monomial_ci(4, 3, 9).unwrap();
        for &p in &opts.primes {
            match mult_map_rank(&spec, 26, p, &opts.limits) {
                Ok((df, dt, r)) => rec.check(
                    format!("T(4,3,9) rank drop p={p}"),
                    r < df.min(dt),
                    format!("rank {r} vs dims ({df}, {dt}) at degree 26"),
                ),
                Err(e) => rec.error(format!("T(4,3,9) rank drop p={p}"), &e),
            }
        }
    }
}

fn claim_quadric_wlp(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    for k in 1..=10usize {
        let spec = IdealSpec::monomial_ci(3, 2, k).unwrap();
        match wlp_check(&spec, &wlp_opts(opts)) {
            Ok(report) => rec.check(
                format!("T(3,2,{k}) has WLP"),
                report.verdict == Verdict::Wlp,
                format!("verdict {}", report.verdict.as_str()),
            ),
            Err(e) => rec.error(format!("T(3,2,{k}) has WLP"), &e),
        }
    }
}

fn claim_resonance_failures(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    let cases = [(9usize, 3usize, 1u8), (10, 4, 3), (11, 4, 3)];
    for (d, k, case_no) in cases {
        let case = turning_case(d, k);
        rec.check(
            format!("resonance case of ({d},{k})"),
            case.map(|c| c.case_number()) == Some(case_no),
            format!("{case:?}"),
        );
        let ob = schur_obstruction(d, k);
        match &ob {
            Ok(ob) => rec.check(
                format!("equivariant obstruction at ({d},{k})"),
                ob.obstructed,
                format!(
                    "degrees {:?}, Hilbert delta {}, isotypic deltas ({}, {}, {})",
                    ob.degrees,
                    ob.hilbert_delta,
                    ob.delta_trivial,
                    ob.delta_sign,
                    ob.delta_standard
                ),
            ),
            Err(e) => rec.error(format!("equivariant obstruction at ({d},{k})"), e),
        }
        let spec = IdealSpec::monomial_ci(3, d, k).unwrap();
        match wlp_check(&spec, &wlp_opts(opts)) {
            Ok(report) => {
                let window_hit = ob
                    .as_ref()
                    .map(|o| report.failure_degrees.contains(&o.degrees.0))
                    .unwrap_or(false);
                rec.check(
                    format!("T(3,{d},{k}) fails"),
                    report.verdict == Verdict::Fails && window_hit,
                    format!(
                        "verdict {} at degrees {:?} ({})",
                        report.verdict.as_str(),
                        report.failure_degrees,
                        report.certification
                    ),
                );
            }
            Err(e) => rec.error(format!("T(3,{d},{k}) fails"), &e),
        }
    }
}

fn claim_three_var_grid(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let max = match scale {
        Scale::Small => 5usize,
        Scale::Medium => 8,
        Scale::Full => 10,
    };
    let cells = scan_grid(3, (1, max), (1, max), &wlp_opts(opts));
    let mut wrong = Vec::new();
    let mut skipped = Vec::new();
    for cell in &cells {
        match cell.verdict {
            Some(v) => {
                let predicted = idealpower_core::wlp::predicted_wlp_three_vars(cell.d, cell.k);
                if (v == Verdict::Wlp) != predicted {
                    wrong.push((cell.d, cell.k));
                }
            }
            None => skipped.push((cell.d, cell.k)),
        }
    }
    rec.check(
        format!("conjectured predicate vs computed grid d,k <= {max}"),
        wrong.is_empty(),
        if wrong.is_empty() {
            format!("{} cells agree", cells.len() - skipped.len())
        } else {
            format!("disagreement at {wrong:?}")
        },
    );
    if !skipped.is_empty() {
        rec.record(
            "guarded cells",
            CheckStatus::Skip,
            format!("{skipped:?}"),
        );
    }
}

fn claim_table_grids(rec: &mut Recorder, _scale: Scale, opts: &ClaimOptions) {
    let expect_4: &[(usize, usize)] = &[(2, 2), (2, 3), (3, 2), (4, 2)];
    let expect_6: &[(usize, usize)] = &[(2, 2), (2, 3), (3, 2)];
    for (n, dmax, kmax, expect) in [(4usize, 4usize, 4usize, expect_4), (6, 3, 3, expect_6)] {
        let cells = scan_grid(n, (2, dmax), (2, kmax), &wlp_opts(opts));
        let mut wlp_cells = Vec::new();
        let mut skipped = Vec::new();
        for cell in &cells {
            match cell.verdict {
                Some(Verdict::Wlp) => wlp_cells.push((cell.d, cell.k)),
                Some(Verdict::Fails) => {}
                None => skipped.push((cell.d, cell.k)),
            }
        }
        if skipped.is_empty() {
            let ok = wlp_cells == expect;
            let mut detail = format!("WLP exactly at {wlp_cells:?}, published row {expect:?}");
            if !ok && n == 6 {
                // The discrepancy is certified: exact integer elimination and
                // an explicit integer kernel element both show T(6,2,3)
                // fails, matching the published even-n rows 8 and 10.
                detail.push_str(
                    "; the (2,3) cell fails with a 1-dimensional kernel in degree 6, \
                     certified by exact integer elimination and an explicit integer \
                     kernel element",
                );
            }
            rec.check(format!("published grid row n={n}"), ok, detail);
        } else {
            rec.record(
                format!("published grid row n={n}"),
                CheckStatus::Skip,
                format!("guarded cells {skipped:?}"),
            );
        }
    }
    // The n = 5 boundary: k = 7 holds, k = 8 fails.
    for (k, expect) in [(7usize, Verdict::Wlp), (8, Verdict::Fails)] {
        let spec = IdealSpec::monomial_ci(5, 2, k).unwrap();
        match wlp_check(&spec, &wlp_opts(opts)) {
            Ok(report) => rec.check(
                format!("T(5,2,{k})"),
                report.verdict == expect,
                format!(
                    "verdict {} (expected {}), failures {:?}",
                    report.verdict.as_str(),
                    expect.as_str(),
                    report.failure_degrees
                ),
            ),
            Err(e) => rec.error(format!("T(5,2,{k})"), &e),
        }
    }
}

fn claim_odd_square_square(rec: &mut Recorder, scale: Scale, opts: &ClaimOptions) {
    let odds: Vec<usize> = match scale {
        Scale::Small => vec![3, 5, 7, 9],
        _ => vec![3, 5, 7, 9, 11],
    };
    for n in odds {
        let spec = IdealSpec::monomial_ci(n, 2, 2).unwrap();
        match wlp_check(&spec, &wlp_opts(opts)) {
            Ok(report) => rec.check(
                format!("T({n},2,2) has WLP (odd n)"),
                report.verdict == Verdict::Wlp,
                format!("verdict {}", report.verdict.as_str()),
            ),
            Err(e) => rec.error(format!("T({n},2,2) has WLP (odd n)"), &e),
        }
    }
    // Even n: the theorem is silent; report the computed verdicts as open.
    for n in [4usize, 6, 8] {
        let spec = IdealSpec::monomial_ci(n, 2, 2).unwrap();
        match wlp_check(&spec, &wlp_opts(opts)) {
            Ok(report) => rec.record(
                format!("T({n},2,2) (even n, open)"),
                CheckStatus::Info,
                format!(
                    "computed verdict {}; the odd-n argument does not apply",
                    report.verdict.as_str()
                ),
            ),
            Err(e) => rec.error(format!("T({n},2,2) (even n, open)"), &e),
        }
    }
}

/// Run several claims, optionally on worker threads; results come back in
/// claim order regardless of completion order.
pub fn run_claims(
    claims: &[ClaimId],
    scale: Scale,
    opts: &ClaimOptions,
    workers: usize,
) -> Vec<ClaimResult> {
    if workers <= 1 || claims.len() <= 1 {
        return claims.iter().map(|&c| run_claim(c, scale, opts)).collect();
    }
    let mut results: Vec<Option<ClaimResult>> = (0..claims.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results_mutex = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(claims.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= claims.len() {
                    break;
                }
                let result = run_claim(claims[idx], scale, opts);
                results_mutex.lock().unwrap()[idx] = Some(result);
            });
        }
    });
    results.into_iter().map(|r| r.unwrap()).collect()
}
