//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criteria 1-9, 11 and 12 pass. Criterion 10 includes two reference-table
//! match clauses that the recomputed expansions contradict (the published
//! rows deviate from the product form in one orbit each, verified by
//! independent evaluation); those assertions are implemented faithfully and
//! fail honestly, with the mismatch reports in the failure message. See the
//! tests and claim output for the certified details.

use idealpower_cli::claims::{run_claim, CheckStatus, ClaimId, ClaimOptions, Scale};
use idealpower_core::equivariant::{
    character, isotypic, schur_obstruction, window_value, WindowStat,
};
use idealpower_core::hilbert::{MonomialEngine, RankEngine};
use idealpower_core::ideal::IdealSpec;
use idealpower_core::wlp::{turning_case, wlp_check, Verdict, WlpOptions};
use idealpower_core::Limits;
use std::time::Instant;

fn report(criterion: u32, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {criterion:2}: {status} - {detail}");
    assert!(passed, "criterion {criterion} failed: {detail}");
}

fn claim_summary(result: &idealpower_cli::claims::ClaimResult) -> String {
    let failed: Vec<String> = result
        .checks
        .iter()
        .filter(|c| matches!(c.status, CheckStatus::Fail | CheckStatus::Skip))
        .map(|c| format!("{} [{}]: {}", c.name, c.status.as_str(), c.detail))
        .collect();
    if failed.is_empty() {
        format!("{} checks pass", result.checks.len())
    } else {
        failed.join(" | ")
    }
}

fn run(claim: ClaimId, scale: Scale) -> idealpower_cli::claims::ClaimResult {
    run_claim(claim, scale, &ClaimOptions::default())
}

/// Powers of three general binary forms match the closed-form series for
/// d in {3,4,5}, k in {d-2,...,d+1}, over p = 32003 with the minimum of
/// three seeds; total runtime under a minute.
#[test]
fn criterion_01_two_variable_series() {
    let start = Instant::now();
    let result = run(ClaimId::ThmMain, Scale::Small);
    let elapsed = start.elapsed();
    let ok = result.passed() && elapsed.as_secs() < 60;
    report(
        1,
        ok,
        &format!("{} in {elapsed:.2?}", claim_summary(&result)),
    );
}

/// Powers of four general quadrics and of the explicit quadric ideal both
/// match the closed form through k = 6.
#[test]
fn criterion_02_three_variable_quadrics() {
    let general = run(ClaimId::ThmMain2, Scale::Small);
    let explicit = run(ClaimId::Lm32k, Scale::Small);
    report(
        2,
        general.passed() && explicit.passed(),
        &format!(
            "general: {}; explicit: {}",
            claim_summary(&general),
            claim_summary(&explicit)
        ),
    );
}

/// The witness cubic ideal over Z/101 attains the closed form: 187 in
/// degree 27 for k = 9, the generic truncation for k = 2, 3.
#[test]
fn criterion_03_witness_cubics() {
    let start = Instant::now();
    let result = run(ClaimId::Thm33k, Scale::Small);
    let elapsed = start.elapsed();
    let ok = result.passed() && elapsed.as_secs() < 300;
    report(
        3,
        ok,
        &format!("{} in {elapsed:.2?}", claim_summary(&result)),
    );
}

/// The two explicit third-generator families pin the power's Hilbert
/// function: binomial(d-1, 2) at degree dk, and vanishing at dk + 1.
#[test]
fn criterion_04_third_generator_families() {
    let monomial = run(ClaimId::LmGedk, Scale::Small);
    let binomial = run(ClaimId::LmGedk1, Scale::Small);
    report(
        4,
        monomial.passed() && binomial.passed(),
        &format!(
            "monomial family: {}; binomial family: {}",
            claim_summary(&monomial),
            claim_summary(&binomial)
        ),
    );
}

/// Exactly one relation among the products for (n, d) = (2, 3) and (2, 4),
/// over two primes.
#[test]
fn criterion_05_unique_relation() {
    let result = run(ClaimId::LmUnique, Scale::Small);
    report(5, result.passed(), &claim_summary(&result));
}

/// The generator-room inequality holds strictly on the whole grid
/// 2 <= d, n <= 8 except at (2,2) and (3,2).
#[test]
fn criterion_06_room_inequality() {
    let result = run(ClaimId::LmBinineq, Scale::Small);
    report(6, result.passed(), &claim_summary(&result));
}

/// The golden verdict set, failures confirmed over two primes.
#[test]
fn criterion_07_wlp_golden_set() {
    let quadrics = run(ClaimId::ThmWlpd2, Scale::Small);
    let thresholds = run(ClaimId::ThmNotwlp, Scale::Small);
    let resonances = run(ClaimId::ThmNecessity, Scale::Small);
    let odd = run(ClaimId::ThmOddwlp, Scale::Small);
    // The five-variable boundary from the published grid.
    let opts = WlpOptions::default();
    let t527 = wlp_check(&IdealSpec::monomial_ci(5, 2, 7).unwrap(), &opts).unwrap();
    let t528 = wlp_check(&IdealSpec::monomial_ci(5, 2, 8).unwrap(), &opts).unwrap();
    let boundary = t527.verdict == Verdict::Wlp
        && t528.verdict == Verdict::Fails
        && t528.certification.contains("confirmed over 2 primes");
    let ok = quadrics.passed()
        && thresholds.passed()
        && resonances.passed()
        && odd.passed()
        && boundary;
    report(
        7,
        ok,
        &format!(
            "T(3,2,k): {}; thresholds: {}; resonances: {}; odd squares: {}; \
             T(5,2,7) {} / T(5,2,8) {} ({})",
            claim_summary(&quadrics),
            claim_summary(&thresholds),
            claim_summary(&resonances),
            claim_summary(&odd),
            t527.verdict.as_str(),
            t528.verdict.as_str(),
            t528.certification
        ),
    );
}

/// The conjectured three-variable predicate agrees with the computed
/// verdicts on the whole grid 1 <= d, k <= 8.
#[test]
fn criterion_08_three_variable_conjecture() {
    let result = run(ClaimId::ConjWlp3, Scale::Medium);
    report(8, result.passed(), &claim_summary(&result));
}

/// Equivariant checks: window formulas equal exact characters across the
/// window for d <= 12, k <= 5; the trivial multiplicity drops by one for
/// (9,3); every obstruction implies a rank failure.
#[test]
fn criterion_09_equivariant() {
    let mut window_ok = true;
    let mut first_bad = String::new();
    for d in 1..=12usize {
        for k in 1..=5usize {
            for i in d * k..d * (k + 1) {
                let chi = character(d, k, i);
                let m = isotypic(d, k, i).unwrap();
                let agree = window_value(d, k, i, WindowStat::Dimension).unwrap()
                    == chi.identity as i64
                    && window_value(d, k, i, WindowStat::TranspositionFixed).unwrap()
                        == chi.transposition as i64
                    && window_value(d, k, i, WindowStat::TrivialMultiplicity).unwrap() == m.trivial
                    && window_value(d, k, i, WindowStat::SignMultiplicity).unwrap() == m.sign
                    && window_value(d, k, i, WindowStat::StandardMultiplicity).unwrap()
                        == m.standard;
                if !agree && window_ok {
                    window_ok = false;
                    first_bad = format!("window mismatch at d={d} k={k} i={i}");
                }
            }
        }
    }
    let lo = isotypic(9, 3, 28).unwrap();
    let hi = isotypic(9, 3, 29).unwrap();
    let drop_ok = hi.trivial - lo.trivial == -1;

    let mut soundness_ok = true;
    let mut tested = 0;
    let opts = WlpOptions::default();
    for d in 1..=12usize {
        for k in 1..=5usize {
            if turning_case(d, k).is_none() {
                continue;
            }
            let ob = schur_obstruction(d, k).unwrap();
            if !ob.obstructed {
                continue;
            }
            tested += 1;
            let spec = IdealSpec::monomial_ci(3, d, k).unwrap();
            let verdict = wlp_check(&spec, &opts).unwrap().verdict;
            if verdict != Verdict::Fails {
                soundness_ok = false;
                first_bad = format!("obstruction at ({d},{k}) but WLP verdict");
            }
        }
    }
    let ok = window_ok && drop_ok && soundness_ok && tested >= 5;
    report(
        9,
        ok,
        &format!(
            "window formulas exact on [dk, d(k+1)) for d <= 12, k <= 5; \
             trivial multiplicity drop at (9,3) = {}; {tested} obstructions all \
             confirmed by rank failure{}",
            hi.trivial - lo.trivial,
            if first_bad.is_empty() {
                String::new()
            } else {
                format!("; {first_bad}")
            }
        ),
    );
}

/// The product-form relation: integrality, exponent divisibility, symmetry
/// and exact kernel division for every buildable shape, and the
/// reference-table comparisons. The (3,2) and (4,2) match clauses are
/// asserted as specified; the recomputed expansions contradict the published
/// rows (one orbit each), so this criterion fails honestly with the
/// mismatches in the message.
#[test]
fn criterion_10_product_form() {
    let start = Instant::now();
    let result = run(ClaimId::ThmConjugate, Scale::Small);
    let elapsed = start.elapsed();
    let ok = result.passed() && elapsed.as_secs() < 300;
    report(
        10,
        ok,
        &format!("{} in {elapsed:.2?}", claim_summary(&result)),
    );
}

/// The rank evaluator and the monomial counter agree on every T_{n,d,k}
/// with n <= 4, d <= 3, k <= 3, every degree up to vanishing.
#[test]
fn criterion_11_oracle_equivalence() {
    let limits = Limits::default();
    let mut checked = 0usize;
    for n in 1..=4usize {
        for d in 1..=3usize {
            for k in 1..=3usize {
                let spec = IdealSpec::monomial_ci(n, d, k).unwrap();
                let rank_engine = RankEngine::new(&spec, 32003, &limits).unwrap();
                let count_engine = MonomialEngine::new(&spec).unwrap();
                let mut i = 0usize;
                loop {
                    let by_rank = rank_engine.value_at(i).unwrap();
                    let by_count = count_engine.value_at(i);
                    assert_eq!(
                        by_rank, by_count,
                        "oracle mismatch at n={n} d={d} k={k} i={i}"
                    );
                    checked += 1;
                    if by_count == 0 {
                        break;
                    }
                    i += 1;
                }
            }
        }
    }
    report(
        11,
        true,
        &format!("rank and counting evaluators agree on {checked} degree values"),
    );
}

/// The trivial-relation slack gate and the generic-regime spot checks.
#[test]
fn criterion_12_generic_regime() {
    let result = run(ClaimId::ConjGen, Scale::Small);
    report(12, result.passed(), &claim_summary(&result));
}
