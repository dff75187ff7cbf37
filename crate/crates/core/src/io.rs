//! JSON file formats. Rationals are strings `p/q` (or integers), vertex
//! indices are 1-based, and writers emit fields in a fixed order.

use serde::{Deserialize, Serialize};

use crate::calculus::{
    DerivativeWitness, DifferenceScheme, ExactDerivative, FiniteDifference, VanishingReport,
};
use crate::error::{Error, Result};
use crate::harness::{BlowUpCheck, CatalogTarget, DemoRow, DifferenceCheck, TheoremReport};
use crate::homdensity::Basis;
use crate::multigraph::Multigraph;
use crate::norms::{CutDistanceBound, CutNormResult, L1Distance};
use crate::scalar::{format_rational, parse_rational, Rational};
use crate::{RationalCoefficients, RationalDirection, RationalMatrix, RationalPolynomial};

#[derive(Deserialize)]
#[serde(try_from = "String")]
struct RationalText(Rational);

impl TryFrom<String> for RationalText {
    type Error = String;

    fn try_from(text: String) -> std::result::Result<Self, String> {
        parse_rational(&text)
            .map(RationalText)
            .ok_or_else(|| format!("`{text}` is not a rational"))
    }
}

#[derive(Deserialize)]
#[serde(try_from = "String")]
struct GraphText(Multigraph);

impl TryFrom<String> for GraphText {
    type Error = String;

    fn try_from(text: String) -> std::result::Result<Self, String> {
        Multigraph::from_text(&text)
            .map(GraphText)
            .map_err(|e| format!("multigraph: {e}"))
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

fn pretty(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable document");
    out.push('\n');
    out
}

fn rational_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixIn {
    n: usize,
    rows: Vec<Vec<RationalText>>,
}

#[derive(Serialize)]
struct MatrixOut {
    n: usize,
    rows: Vec<Vec<String>>,
}

fn read_rows(text: &str) -> Result<Vec<Vec<Rational>>> {
    let doc: MatrixIn = serde_json::from_str(text).map_err(parse_error)?;
    if doc.rows.len() != doc.n {
        return Err(Error::SizeMismatch {
            expected: doc.n,
            found: doc.rows.len(),
        });
    }
    Ok(doc
        .rows
        .into_iter()
        .map(|r| r.into_iter().map(|q| q.0).collect())
        .collect())
}

/// Reads `{"n": .., "rows": [[..], ..]}`, validating symmetry and the zero diagonal.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    RationalMatrix::new(read_rows(text)?)
}

pub fn write_matrix(a: &RationalMatrix) -> String {
    pretty(&matrix_out(&a.rows()))
}

/// Directions share the matrix format without the `[0, 1]` range.
pub fn parse_direction(text: &str) -> Result<RationalDirection> {
    RationalDirection::new(read_rows(text)?)
}

pub fn write_direction(g: &RationalDirection) -> String {
    pretty(&matrix_out(&g.rows()))
}

fn matrix_out(rows: &[Vec<Rational>]) -> MatrixOut {
    MatrixOut {
        n: rows.len(),
        rows: rational_rows(rows.to_vec()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialIn {
    n: usize,
    terms: Vec<TermIn>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermIn {
    edges: Vec<(usize, usize, u32)>,
    coeff: RationalText,
}

#[derive(Serialize)]
struct PolynomialOut {
    n: usize,
    terms: Vec<TermOut>,
}

#[derive(Serialize)]
struct TermOut {
    edges: Vec<(usize, usize, u32)>,
    coeff: String,
}

/// Reads `{"n": .., "terms": [{"edges": [[i, j, m], ..], "coeff": ".."}]}`.
pub fn parse_polynomial(text: &str) -> Result<RationalPolynomial> {
    let doc: PolynomialIn = serde_json::from_str(text).map_err(parse_error)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for term in doc.terms {
        let mut factors = Vec::with_capacity(term.edges.len());
        for (i, j, m) in term.edges {
            if i == 0 || j == 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 0,
                    vertex_count: doc.n,
                });
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity { u: i, v: j });
            }
            factors.push((i - 1, j - 1, m));
        }
        terms.push((factors, term.coeff.0));
    }
    RationalPolynomial::from_terms(doc.n, terms)
}

pub fn write_polynomial(f: &RationalPolynomial) -> String {
    pretty(&polynomial_out(f))
}

fn polynomial_out(f: &RationalPolynomial) -> PolynomialOut {
    PolynomialOut {
        n: f.ambient_n(),
        terms: f
            .terms()
            .map(|(m, c)| TermOut {
                edges: m
                    .factors()
                    .iter()
                    .map(|&(i, j, e)| (i + 1, j + 1, e))
                    .collect(),
                coeff: format_rational(c),
            })
            .collect(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientsIn {
    basis: String,
    n: usize,
    terms: Vec<CoefficientIn>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientIn {
    graph: GraphText,
    coeff: RationalText,
}

#[derive(Serialize)]
struct CoefficientsOut {
    basis: &'static str,
    n: usize,
    terms: Vec<CoefficientOut>,
}

#[derive(Serialize)]
struct CoefficientOut {
    graph: String,
    coeff: String,
}

pub fn parse_basis(name: &str) -> Result<Basis> {
    match name {
        "t" => Ok(Basis::T),
        "tinj" => Ok(Basis::TInj),
        other => Err(Error::Parse {
            line: 1,
            message: format!("unknown basis `{other}` (expected `t` or `tinj`)"),
        }),
    }
}

/// Reads `{"basis": "t"|"tinj", "n": .., "terms": [{"graph": "<V E ...>", "coeff": ".."}]}`.
pub fn parse_coefficients(text: &str) -> Result<RationalCoefficients> {
    let doc: CoefficientsIn = serde_json::from_str(text).map_err(parse_error)?;
    let basis = parse_basis(&doc.basis)?;
    Ok(RationalCoefficients::from_pairs(
        basis,
        doc.n,
        doc.terms.into_iter().map(|t| (t.graph.0, t.coeff.0)),
    ))
}

pub fn write_coefficients(c: &RationalCoefficients) -> String {
    pretty(&coefficients_out(c))
}

fn coefficients_out(c: &RationalCoefficients) -> CoefficientsOut {
    CoefficientsOut {
        basis: c.basis().name(),
        n: c.ambient_n(),
        terms: c
            .iter()
            .map(|(h, v)| CoefficientOut {
                graph: h.to_text(),
                coeff: format_rational(v),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct GraphOut {
    vertices: usize,
    edges: Vec<(usize, usize, u32)>,
    canonical: String,
    automorphisms: u64,
}

/// A list of multigraphs with 1-based edges and canonical hex encodings.
pub fn write_multigraphs(graphs: &[Multigraph]) -> String {
    let out: Vec<GraphOut> = graphs
        .iter()
        .map(|h| GraphOut {
            vertices: h.vertex_count(),
            edges: h
                .edges()
                .iter()
                .map(|&(u, v, m)| (u + 1, v + 1, m))
                .collect(),
            canonical: h.canonical_hex(),
            automorphisms: h.automorphism_count(),
        })
        .collect();
    pretty(&out)
}

#[derive(Serialize)]
struct CutNormOut {
    value: String,
    #[serde(rename = "S")]
    s: Vec<usize>,
    #[serde(rename = "T")]
    t: Vec<usize>,
}

pub fn write_cut_norm(r: &CutNormResult<Rational>) -> String {
    let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect();
    pretty(&CutNormOut {
        value: format_rational(&r.value),
        s: one_based(&r.s),
        t: one_based(&r.t),
    })
}

#[derive(Serialize)]
struct DistancesOut {
    l1: String,
    l1_off_diagonal_blocks: String,
    cut_distance_upper_bound: Option<CutBoundOut>,
}

#[derive(Serialize)]
struct CutBoundOut {
    value: String,
    permutation: Vec<usize>,
}

/// L1 distance and, when computed, the permutation upper bound on the cut distance.
pub fn write_distances(
    l1: &L1Distance<Rational>,
    cut: Option<&CutDistanceBound<Rational>>,
) -> String {
    pretty(&DistancesOut {
        l1: format_rational(&l1.full),
        l1_off_diagonal_blocks: format_rational(&l1.off_diagonal_blocks),
        cut_distance_upper_bound: cut.map(|c| CutBoundOut {
            value: format_rational(&c.value),
            permutation: c.permutation.iter().map(|i| i + 1).collect(),
        }),
    })
}

#[derive(Serialize)]
struct DerivativeOut {
    order: usize,
    value: String,
    admissible: bool,
    finite_difference: Option<DifferenceOut>,
}

#[derive(Serialize)]
struct DifferenceOut {
    step: String,
    value: String,
    scheme: &'static str,
}

pub fn write_derivative(
    order: usize,
    exact: &ExactDerivative<Rational>,
    fd: Option<&FiniteDifference<Rational>>,
) -> String {
    pretty(&DerivativeOut {
        order,
        value: format_rational(&exact.value),
        admissible: exact.admissible,
        finite_difference: fd.map(|d| DifferenceOut {
            step: format_rational(&d.step),
            value: format_rational(&d.value),
            scheme: match d.scheme {
                DifferenceScheme::Central => "central",
                DifferenceScheme::Forward => "forward",
            },
        }),
    })
}

#[derive(Serialize)]
struct WitnessOut {
    base_point: MatrixOut,
    directions: Vec<MatrixOut>,
    value: String,
}

fn witness_out(w: &DerivativeWitness<Rational>) -> WitnessOut {
    WitnessOut {
        base_point: matrix_out(&w.base_point.rows()),
        directions: w.directions.iter().map(|g| matrix_out(&g.rows())).collect(),
        value: format_rational(&w.value),
    }
}

#[derive(Serialize)]
struct ClassOut {
    passed: bool,
    violation: Option<String>,
}

#[derive(Serialize)]
struct VanishingOut {
    order: u32,
    degree: u32,
    vanishes: bool,
    spot_checks: usize,
    spot_check_failures: usize,
    witness: Option<WitnessOut>,
}

fn vanishing_out(v: &VanishingReport<Rational>) -> VanishingOut {
    VanishingOut {
        order: v.order,
        degree: v.degree,
        vanishes: v.vanishes,
        spot_checks: v.spot_checks,
        spot_check_failures: v.spot_check_failures,
        witness: v.witness.as_ref().map(witness_out),
    }
}

#[derive(Serialize)]
struct BlowUpOut {
    factor: usize,
    size: usize,
    coefficients: CoefficientsOut,
    coefficients_agree: bool,
    pullback_agrees: bool,
}

fn blow_up_out(b: &BlowUpCheck) -> BlowUpOut {
    BlowUpOut {
        factor: b.factor,
        size: b.size,
        coefficients: coefficients_out(&b.coefficients),
        coefficients_agree: b.coefficients_agree,
        pullback_agrees: b.pullback_agrees,
    }
}

#[derive(Serialize)]
struct DifferencesOut {
    trials: usize,
    step: String,
    nonzero: usize,
    witness: Option<WitnessOut>,
    degree_bounds_hold: bool,
}

fn differences_out(d: &DifferenceCheck) -> DifferencesOut {
    DifferencesOut {
        trials: d.trials,
        step: format_rational(&d.step),
        nonzero: d.nonzero,
        witness: d.witness.as_ref().map(witness_out),
        degree_bounds_hold: d.degree_bounds_hold,
    }
}

#[derive(Serialize)]
struct ReportOut {
    direction: &'static str,
    #[serde(rename = "N")]
    max_edges: u32,
    n: usize,
    input: String,
    class_function: ClassOut,
    vanishing: Option<VanishingOut>,
    tinj_coefficients: Option<CoefficientsOut>,
    t_coefficients: Option<CoefficientsOut>,
    residual: Option<PolynomialOut>,
    blow_up: Option<BlowUpOut>,
    differences: Option<DifferencesOut>,
    verdict: &'static str,
    reason: Option<String>,
}

pub fn write_report(r: &TheoremReport) -> String {
    pretty(&ReportOut {
        direction: r.direction.name(),
        max_edges: r.max_edges,
        n: r.n,
        input: r.input.clone(),
        class_function: ClassOut {
            passed: r.class_function,
            violation: r.class_violation.clone(),
        },
        vanishing: r.vanishing.as_ref().map(vanishing_out),
        tinj_coefficients: r.tinj_coefficients.as_ref().map(coefficients_out),
        t_coefficients: r.t_coefficients.as_ref().map(coefficients_out),
        residual: r.residual.as_ref().map(polynomial_out),
        blow_up: r.blow_up.as_ref().map(blow_up_out),
        differences: r.differences.as_ref().map(differences_out),
        verdict: r.verdict.name(),
        reason: r.reason.clone(),
    })
}

#[derive(Serialize)]
struct DemoOut {
    target: String,
    graph: String,
    rows: Vec<DemoRowOut>,
}

#[derive(Serialize)]
struct DemoRowOut {
    n: usize,
    density: String,
    analytic: Option<String>,
    gap: Option<String>,
}

pub fn write_demo(target: &CatalogTarget, h: &Multigraph, rows: &[DemoRow]) -> String {
    pretty(&DemoOut {
        target: target.name(),
        graph: h.to_text(),
        rows: rows
            .iter()
            .map(|r| DemoRowOut {
                n: r.n,
                density: format_rational(&r.density),
                analytic: r.analytic.as_ref().map(format_rational),
                gap: r.gap.as_ref().map(format_rational),
            })
            .collect(),
    })
}
