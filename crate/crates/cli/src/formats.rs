//! JSON and CSV shapes for every report the tools emit.
//!
//! Field order is fixed by struct declaration order and all maps are
//! avoided, so serialization is byte-deterministic; big integers are
//! rendered as decimal strings.

use crate::SCHEMA_VERSION;
use idealpower_core::equivariant::{character, isotypic, SchurObstruction};
use idealpower_core::hilbert::HilbertReport;
use idealpower_core::ideal::{Family, IdealSpec};
use idealpower_core::monomial::Monomial;
use idealpower_core::poly::GradedPoly;
use idealpower_core::relations::{ProductForm, ReadingReport, TableComparison};
use idealpower_core::ring::IntRing;
use idealpower_core::wlp::{GridCell, WlpReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One monomial term: exponent vector plus a decimal coefficient string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

/// Term list in the canonical order: leading monomial first.
pub fn poly_terms(poly: &GradedPoly<IntRing>) -> Vec<TermJson> {
    poly.terms()
        .rev()
        .map(|(m, c)| TermJson {
            exponents: m.exponents().to_vec(),
            coefficient: c.to_string(),
        })
        .collect()
}

/// Parse a term list back into a homogeneous polynomial.
pub fn poly_from_terms(
    nvars: usize,
    terms: &[TermJson],
) -> Result<GradedPoly<IntRing>, String> {
    let degree = terms
        .first()
        .map(|t| t.exponents.iter().sum::<u32>())
        .ok_or("empty term list")?;
    GradedPoly::from_terms(
        IntRing,
        nvars,
        degree,
        terms.iter().map(|t| {
            let c: BigInt = t.coefficient.parse().unwrap_or_default();
            (Monomial::new(t.exponents.clone()), c)
        }),
    )
    .map_err(|e| e.to_string())
}

/// The serialized ideal description; doubles as the cache key component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub k: usize,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<Vec<TermJson>>>,
}

pub fn spec_to_json(spec: &IdealSpec, prime: Option<u64>) -> SpecJson {
    let (family, seed, generators) = match &spec.family {
        Family::GeneralRandom { seed, .. } => ("general".to_string(), Some(*seed), None),
        Family::PowersOfLinear => ("powers-of-linear".to_string(), None, None),
        Family::MonomialCi => ("monomial-ci".to_string(), None, None),
        Family::Explicit(gens) => (
            "explicit".to_string(),
            None,
            Some(gens.iter().map(poly_terms).collect()),
        ),
    };
    SpecJson {
        n: spec.nvars,
        d: spec.degree,
        r: spec.generator_count(),
        k: spec.power,
        family,
        seed,
        prime,
        generators,
    }
}

pub fn spec_from_json(json: &SpecJson) -> Result<IdealSpec, String> {
    match json.family.as_str() {
        "general" => IdealSpec::general(json.n, json.d, json.k, json.r, json.seed.unwrap_or(1))
            .map_err(|e| e.to_string()),
        "powers-of-linear" => {
            IdealSpec::powers_of_linear(json.n, json.d, json.k).map_err(|e| e.to_string())
        }
        "monomial-ci" => IdealSpec::monomial_ci(json.n, json.d, json.k).map_err(|e| e.to_string()),
        "explicit" => {
            let gens = json
                .generators
                .as_ref()
                .ok_or("explicit family needs generators")?
                .iter()
                .map(|terms| poly_from_terms(json.n, terms))
                .collect::<Result<Vec<_>, _>>()?;
            IdealSpec::explicit(json.n, json.k, gens).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown family {other:?}")),
    }
}

/// Hilbert function report: `values` entries are `[degree, value, certainty]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertReportJson {
    pub schema: u32,
    pub spec: SpecJson,
    pub method: String,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
    pub values: Vec<(usize, usize, String)>,
    pub top: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

pub fn hilbert_report_json(report: &HilbertReport) -> HilbertReportJson {
    HilbertReportJson {
        schema: SCHEMA_VERSION,
        spec: spec_to_json(&report.spec, report.primes.first().copied()),
        method: report.method.as_str().to_string(),
        primes: report.primes.clone(),
        seeds: report.seeds.clone(),
        values: report
            .values
            .iter()
            .map(|&(i, v, c)| (i, v, c.as_str().to_string()))
            .collect(),
        top: report.top,
        warnings: report.warnings.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WlpRowJson {
    pub i: usize,
    pub dim_i: usize,
    pub dim_j: usize,
    pub rank: usize,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WlpReportJson {
    pub schema: u32,
    pub spec: SpecJson,
    pub method: String,
    pub verdict: String,
    pub failure_degrees: Vec<usize>,
    pub rows: Vec<WlpRowJson>,
    pub certification: String,
}

pub fn wlp_report_json(report: &WlpReport) -> WlpReportJson {
    WlpReportJson {
        schema: SCHEMA_VERSION,
        spec: spec_to_json(&report.spec, report.primes.first().copied()),
        method: report.method.as_str().to_string(),
        verdict: report.verdict.as_str().to_string(),
        failure_degrees: report.failure_degrees.clone(),
        rows: report
            .rows
            .iter()
            .map(|r| WlpRowJson {
                i: r.degree,
                dim_i: r.dim_from,
                dim_j: r.dim_to,
                rank: r.rank,
                maximal: r.maximal,
            })
            .collect(),
        certification: report.certification.clone(),
    }
}

/// CSV for grid scans, exactly `n,d,k,verdict,predicted,source`.
pub fn grid_csv(cells: &[GridCell]) -> String {
    let mut out = String::from("n,d,k,verdict,predicted,source\n");
    for c in cells {
        let verdict = c.verdict.map(|v| v.as_str().to_string()).unwrap_or_default();
        let predicted = c
            .predicted
            .map(|p| if p { "WLP" } else { "fails" }.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.n, c.d, c.k, verdict, predicted, c.source
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCellJson {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub verdict: Option<String>,
    pub predicted: Option<bool>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridScanJson {
    pub schema: u32,
    pub cells: Vec<GridCellJson>,
}

pub fn grid_json(cells: &[GridCell]) -> GridScanJson {
    GridScanJson {
        schema: SCHEMA_VERSION,
        cells: cells
            .iter()
            .map(|c| GridCellJson {
                n: c.n,
                d: c.d,
                k: c.k,
                verdict: c.verdict.map(|v| v.as_str().to_string()),
                predicted: c.predicted,
                source: c.source.clone(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotypicRowJson {
    pub i: usize,
    /// Character values on (identity, transposition, 3-cycle).
    pub chi: [usize; 3],
    /// Multiplicities of (trivial, sign, standard).
    pub mult: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionJson {
    pub case: u8,
    pub j: usize,
    pub ell: usize,
    pub eps_times_2: i32,
    pub degrees: (usize, usize),
    pub hilbert_delta: i64,
    pub delta_trivial: i64,
    pub delta_sign: i64,
    pub delta_standard: i64,
    pub obstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotypicReportJson {
    pub schema: u32,
    pub d: usize,
    pub k: usize,
    pub rows: Vec<IsotypicRowJson>,
    pub obstruction: Option<ObstructionJson>,
}

pub fn isotypic_report_json(
    d: usize,
    k: usize,
    degrees: impl Iterator<Item = usize>,
    obstruction: Option<&SchurObstruction>,
) -> Result<IsotypicReportJson, String> {
    let rows = degrees
        .map(|i| {
            let chi = character(d, k, i);
            let m = isotypic(d, k, i).map_err(|e| e.to_string())?;
            Ok(IsotypicRowJson {
                i,
                chi: [chi.identity, chi.transposition, chi.three_cycle],
                mult: [m.trivial, m.sign, m.standard],
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(IsotypicReportJson {
        schema: SCHEMA_VERSION,
        d,
        k,
        rows,
        obstruction: obstruction.map(obstruction_json),
    })
}

pub fn obstruction_json(ob: &SchurObstruction) -> ObstructionJson {
    ObstructionJson {
        case: ob.case.case_number(),
        j: ob.case.j,
        ell: ob.case.ell,
        eps_times_2: ob.case.eps_times_2,
        degrees: ob.degrees,
        hilbert_delta: ob.hilbert_delta,
        delta_trivial: ob.delta_trivial,
        delta_sign: ob.delta_sign,
        delta_standard: ob.delta_standard,
        obstructed: ob.obstructed,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitMismatchJson {
    pub representative: Vec<u32>,
    pub listed: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReadingJson {
    pub nvars: usize,
    pub d: usize,
    pub structural_issues: Vec<String>,
    pub scalar: Option<(String, String)>,
    pub matched: bool,
    pub mismatches: Vec<OrbitMismatchJson>,
    /// Recomputed ground truth: one `(representative, coefficient)` per orbit.
    pub computed_orbits: Vec<(Vec<u32>, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableComparisonJson {
    pub schema: u32,
    pub label: (usize, usize),
    pub readings: Vec<ReadingJson>,
}

fn reading_json(r: &ReadingReport) -> ReadingJson {
    ReadingJson {
        nvars: r.nvars,
        d: r.conductor,
        structural_issues: r.structural_issues.clone(),
        scalar: r
            .scalar
            .as_ref()
            .map(|(n, d)| (n.to_string(), d.to_string())),
        matched: r.matched,
        mismatches: r
            .mismatches
            .iter()
            .map(|m| OrbitMismatchJson {
                representative: m.representative.exponents().to_vec(),
                listed: m.listed.to_string(),
                computed: m.computed.to_string(),
            })
            .collect(),
        computed_orbits: r
            .computed_orbits
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), c.to_string()))
            .collect(),
    }
}

pub fn table_comparison_json(t: &TableComparison) -> TableComparisonJson {
    TableComparisonJson {
        schema: SCHEMA_VERSION,
        label: t.label,
        readings: t.readings.iter().map(reading_json).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationReportJson {
    pub schema: u32,
    pub nvars: usize,
    pub d: usize,
    pub degree: u32,
    pub membership: bool,
    pub symmetric: Option<bool>,
    pub f: Vec<TermJson>,
    pub kernel: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<TableComparisonJson>,
}

pub fn relation_report_json(
    form: &ProductForm,
    membership: bool,
    symmetric: Option<bool>,
    kernel: &GradedPoly<IntRing>,
    table: Option<&TableComparison>,
) -> RelationReportJson {
    RelationReportJson {
        schema: SCHEMA_VERSION,
        nvars: form.nvars,
        d: form.conductor,
        degree: form.poly.degree(),
        membership,
        symmetric,
        f: poly_terms(&form.poly),
        kernel: poly_terms(kernel),
        table: table.map(table_comparison_json),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResultJson {
    pub claim: String,
    pub scale: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReportJson {
    pub schema: u32,
    pub results: Vec<ClaimResultJson>,
}

pub fn verify_report_json(results: &[crate::claims::ClaimResult]) -> VerifyReportJson {
    VerifyReportJson {
        schema: SCHEMA_VERSION,
        results: results
            .iter()
            .map(|r| ClaimResultJson {
                claim: r.claim.as_str().to_string(),
                scale: r.scale.as_str().to_string(),
                passed: r.passed(),
                checks: r
                    .checks
                    .iter()
                    .map(|c| CheckJson {
                        name: c.name.clone(),
                        status: c.status.as_str().to_string(),
                        detail: c.detail.clone(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealpower_core::hilbert::{hilbert_report, Method};
    use idealpower_core::Limits;

    #[test]
    fn spec_json_roundtrip() {
        let spec = IdealSpec::general(3, 2, 2, 4, 7).unwrap();
        let json = spec_to_json(&spec, Some(32003));
        let back = spec_from_json(&json).unwrap();
        assert_eq!(spec, back);

        let witness = idealpower_core::ideal::explicit_cubic_witness(2).unwrap();
        let json = spec_to_json(&witness, Some(101));
        let s = serde_json::to_string(&json).unwrap();
        let parsed: SpecJson = serde_json::from_str(&s).unwrap();
        assert_eq!(spec_from_json(&parsed).unwrap(), witness);
    }

    #[test]
    fn hilbert_json_is_deterministic() {
        let spec = IdealSpec::general(2, 3, 2, 3, 1).unwrap();
        let report =
            hilbert_report(&spec, Method::Rank, &[32003], &[1], &Limits::default()).unwrap();
        let a = serde_json::to_string(&hilbert_report_json(&report)).unwrap();
        let b = serde_json::to_string(&hilbert_report_json(&report)).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\":1"));
        assert!(a.contains("\"values\":[[0,1,\"certified\"]"));
    }

    #[test]
    fn grid_csv_header_and_rows() {
        let cells = vec![GridCell {
            n: 4,
            d: 2,
            k: 2,
            verdict: Some(idealpower_core::wlp::Verdict::Wlp),
            predicted: None,
            source: "computed".into(),
        }];
        let csv = grid_csv(&cells);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,d,k,verdict,predicted,source"));
        assert_eq!(lines.next(), Some("4,2,2,WLP,,computed"));
    }

    #[test]
    fn term_lists_lead_with_the_leading_monomial() {
        let p = idealpower_core::poly::int_poly(2, 2, &[(&[0, 2], -1), (&[2, 0], 1)]).unwrap();
        let terms = poly_terms(&p);
        assert_eq!(terms[0].exponents, vec![2, 0]);
        assert_eq!(terms[1].coefficient, "-1");
        let back = poly_from_terms(2, &terms).unwrap();
        assert_eq!(back, p);
    }
}
