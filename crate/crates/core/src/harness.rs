//! End-to-end pipelines for the characterization of graphon parameters that
//! are finite linear combinations of homomorphism densities: a class
//! function on `M_n` with vanishing `(N+1)`-st derivatives is `sum c_H t(H, -)`
//! over `H_<=N`, and conversely.
//!
//! All pipelines run in exact rational arithmetic.

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::calculus::{
    gateaux_fd, lambda_expansion, verify_vanishing_seeded, DerivativeRequest, DerivativeWitness,
    VanishingReport, DEFAULT_SPOT_CHECKS,
};
use crate::classpoly::{decompose_t, decompose_tinj_mixed};
use crate::error::{Error, Result};
use crate::homdensity::{self, Basis};
use crate::multigraph::Multigraph;
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};
use crate::weighted_graph::{random_direction_with, random_matrix_with, ValueMode};
use crate::{RationalCoefficients, RationalMatrix, RationalPolynomial};

/// Which implication a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Density combinations have vanishing higher derivatives.
    If,
    /// Class functions with vanishing higher derivatives are density combinations.
    OnlyIf,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::If => "if",
            Direction::OnlyIf => "only-if",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
        }
    }
}

/// Decomposition repeated on the blow-up reading of the recovered
/// combination at size `k n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowUpCheck {
    pub factor: usize,
    pub size: usize,
    pub coefficients: RationalCoefficients,
    /// The coefficients at size `k n` equal those at size `n`.
    pub coefficients_agree: bool,
    /// The size-`k n` polynomial restricted to blow-ups equals `F`.
    pub pullback_agrees: bool,
}

/// Seeded exact iterated differences of the black-box combination.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceCheck {
    pub trials: usize,
    pub step: Rational,
    pub nonzero: usize,
    /// First configuration with a nonzero difference.
    pub witness: Option<DerivativeWitness<Rational>>,
    /// Every `l -> t(H, a + sum l_i g_i)` had degree at most `|E(H)|`.
    pub degree_bounds_hold: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub direction: Direction,
    pub max_edges: u32,
    pub n: usize,
    pub input: String,
    pub class_function: bool,
    pub class_violation: Option<String>,
    pub vanishing: Option<VanishingReport<Rational>>,
    pub tinj_coefficients: Option<RationalCoefficients>,
    pub t_coefficients: Option<RationalCoefficients>,
    /// `F - sum c_H t(H, -)`.
    pub residual: Option<RationalPolynomial>,
    pub blow_up: Option<BlowUpCheck>,
    pub differences: Option<DifferenceCheck>,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

impl TheoremReport {
    fn new(direction: Direction, max_edges: u32, n: usize, input: String) -> Self {
        TheoremReport {
            direction,
            max_edges,
            n,
            input,
            class_function: false,
            class_violation: None,
            vanishing: None,
            tinj_coefficients: None,
            t_coefficients: None,
            residual: None,
            blow_up: None,
            differences: None,
            verdict: Verdict::Refuted,
            reason: None,
        }
    }

    fn refute(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Refuted;
        self.reason = Some(reason.into());
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

/// Checks that a class function `F` on `M_n` whose `(N+1)`-st derivatives
/// vanish is a combination of `t(H, -)` over `H_<=N`, recovering the
/// coefficients and confirming them on the `k`-fold blow-up.
///
/// `seed` drives the vanishing spot checks only.
pub fn verify_only_if(
    f: &RationalPolynomial,
    max_edges: u32,
    blow_up: usize,
    seed: u64,
) -> Result<TheoremReport> {
    let n = f.ambient_n();
    if n < 2 * max_edges as usize {
        return Err(Error::NotUniqueRegime { n, max_edges });
    }
    if blow_up == 0 {
        return Err(Error::ZeroBlowUp);
    }
    let input = format!(
        "edge polynomial on n={n}, {} terms, degree {}",
        f.term_count(),
        f.degree()
    );
    let mut report = TheoremReport::new(Direction::OnlyIf, max_edges, n, input);

    if let Some(v) = f.class_violation() {
        report.class_violation = Some(format!(
            "coefficient of {} is {} but its image {} has {}",
            v.monomial,
            format_rational(&v.coefficient),
            v.image,
            format_rational(&v.image_coefficient)
        ));
        return Ok(report.refute("input is not a class function"));
    }
    report.class_function = true;

    let vanishing = verify_vanishing_seeded(f, max_edges + 1, DEFAULT_SPOT_CHECKS, seed);
    let vanishes = vanishing.vanishes && vanishing.spot_check_failures == 0;
    report.vanishing = Some(vanishing);
    if !vanishes {
        return Ok(report.refute(format!(
            "derivatives of order {} do not vanish (degree {})",
            max_edges + 1,
            f.degree()
        )));
    }

    report.tinj_coefficients = Some(decompose_tinj_mixed(f)?);
    let coeffs = decompose_t(f, max_edges)?;
    let residual = f.minus(&RationalPolynomial::from_coefficients(&coeffs, n))?;
    let residual_zero = residual.is_zero();
    report.residual = Some(residual);
    report.t_coefficients = Some(coeffs.clone());
    if !residual_zero {
        return Ok(report.refute("reconstruction residual is nonzero"));
    }

    let check = blow_up_check(f, &coeffs, max_edges, blow_up)?;
    let consistent = check.coefficients_agree && check.pullback_agrees;
    report.blow_up = Some(check);
    if !consistent {
        return Ok(report.refute("blow-up decomposition disagrees"));
    }
    report.verdict = Verdict::Verified;
    Ok(report)
}

fn blow_up_check(
    f: &RationalPolynomial,
    coeffs: &RationalCoefficients,
    max_edges: u32,
    k: usize,
) -> Result<BlowUpCheck> {
    let size = f.ambient_n() * k;
    let lifted = RationalCoefficients::from_pairs(
        Basis::T,
        size,
        coeffs.iter().map(|(h, c)| (h.clone(), c.clone())),
    );
    let big = RationalPolynomial::from_coefficients(&lifted, size);
    let recovered = decompose_t(&big, max_edges)?;
    let coefficients_agree = recovered.iter().eq(coeffs.iter());
    let pullback_agrees = big.pullback_through_blow_up(k)? == *f;
    Ok(BlowUpCheck {
        factor: k,
        size,
        coefficients: recovered,
        coefficients_agree,
        pullback_agrees,
    })
}

/// Checks that `F = sum c_H t(H, -)` on `M_n` has vanishing derivatives
/// of order `N+1`: symbolically, by exact iterated differences at
/// `trials` seeded interior points, and by the degree of each
/// `l -> t(H, a + sum l_i g_i)`.
pub fn verify_if(
    coeffs: &RationalCoefficients,
    max_edges: u32,
    trials: usize,
    seed: u64,
) -> Result<TheoremReport> {
    let n = coeffs.ambient_n();
    if coeffs.max_vertices() > n {
        return Err(Error::TooManyVertices {
            vertices: coeffs.max_vertices(),
            ambient_n: n,
        });
    }
    let input = format!(
        "{} coefficients over {} graphs on n={n}",
        coeffs.basis().name(),
        coeffs.len()
    );
    let mut report = TheoremReport::new(Direction::If, max_edges, n, input);
    let f = RationalPolynomial::from_coefficients(coeffs, n);
    report.class_function = f.is_class_function();

    let order = max_edges + 1;
    let vanishing = verify_vanishing_seeded(&f, order, trials, seed);
    let vanishes = vanishing.vanishes && vanishing.spot_check_failures == 0;
    report.vanishing = Some(vanishing);

    let differences = difference_check(coeffs, order, trials, seed)?;
    let differences_vanish = differences.nonzero == 0;
    let degrees_ok = differences.degree_bounds_hold;
    report.differences = Some(differences);
    if coeffs.basis() == Basis::T {
        report.t_coefficients = Some(coeffs.clone());
    } else {
        report.tinj_coefficients = Some(coeffs.clone());
    }

    report = if !report.class_function {
        report.refute("combination is not a class function")
    } else if !vanishes {
        report.refute(format!("derivatives of order {order} do not vanish"))
    } else if !differences_vanish {
        report.refute(format!(
            "an iterated difference of order {order} is nonzero"
        ))
    } else if !degrees_ok {
        report.refute("a lambda-expansion exceeds its edge count in degree")
    } else {
        TheoremReport {
            verdict: Verdict::Verified,
            ..report
        }
    };
    Ok(report)
}

fn difference_check(
    coeffs: &RationalCoefficients,
    order: u32,
    trials: usize,
    seed: u64,
) -> Result<DifferenceCheck> {
    let n = coeffs.ambient_n();
    // Interior entries lie in [1/8, 7/8]; this keeps the central stencil inside.
    let step = Rational::from_ratio(1, 16 * i64::from(order));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_d1ff);
    let mut nonzero = 0;
    let mut witness = None;
    let mut degree_bounds_hold = true;
    for trial in 0..trials {
        let base: RationalMatrix = random_matrix_with(n, &mut rng, ValueMode::InteriorGrid);
        let dirs: Vec<_> = (0..order)
            .map(|_| random_direction_with(n, &mut rng))
            .collect();
        let req = DerivativeRequest::new(base, dirs)?;
        let fd = gateaux_fd(|a| coeffs.evaluate(a), &req, step.clone())?;
        if !fd.value.is_zero() {
            nonzero += 1;
            witness.get_or_insert_with(|| DerivativeWitness {
                base_point: req.base_point().clone(),
                directions: req.directions().to_vec(),
                value: fd.value.clone(),
            });
        }
        if trial == 0 {
            for (h, _) in coeffs.iter() {
                let expansion = lambda_expansion(h, req.base_point(), req.directions())?;
                if expansion.degree() > h.edge_count() {
                    degree_bounds_hold = false;
                }
            }
        }
    }
    Ok(DifferenceCheck {
        trials,
        step,
        nonzero,
        witness,
        degree_bounds_hold,
    })
}

/// Replaces every `H` by `H^simple`, merging coefficients. On `{0,1}`
/// matrices the result evaluates identically.
pub fn collapse_to_simple(coeffs: &RationalCoefficients) -> RationalCoefficients {
    RationalCoefficients::from_pairs(
        coeffs.basis(),
        coeffs.ambient_n(),
        coeffs.iter().map(|(h, c)| (h.collapse_simple(), c.clone())),
    )
}

/// Graphons with closed-form densities, used to watch step-function
/// approximations converge.
#[derive(Clone, Debug, PartialEq)]
pub enum CatalogTarget {
    /// `W(x, y) = x y`.
    Product,
    /// `W(x, y) = min(x, y)`.
    Min,
    /// `W(x, y) = p`.
    Constant(Rational),
}

impl CatalogTarget {
    /// Parses `xy`, `min`, or `const:p` with `p` a rational in `[0, 1]`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "xy" | "product" => Ok(CatalogTarget::Product),
            "min" => Ok(CatalogTarget::Min),
            _ => {
                let p = text
                    .strip_prefix("const:")
                    .or_else(|| text.strip_prefix("constant:"))
                    .and_then(parse_rational)
                    .ok_or(Error::NotInCatalog)?;
                if !p.in_unit_interval() {
                    return Err(Error::NotUnitRange);
                }
                Ok(CatalogTarget::Constant(p))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            CatalogTarget::Product => "xy".to_string(),
            CatalogTarget::Min => "min".to_string(),
            CatalogTarget::Constant(p) => format!("const:{}", format_rational(p)),
        }
    }

    /// Cell averages of `W` on the `n x n` grid, with a zero diagonal.
    pub fn discretize(&self, n: usize) -> Result<RationalMatrix> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let denom = 2 * n as i64;
        let midpoint = |i: usize| Rational::from_ratio(2 * i as i64 + 1, denom);
        Ok(RationalMatrix::from_fn(n, |i, j| match self {
            // x y is separable, and min(x, y) = x on a cell strictly below the diagonal.
            CatalogTarget::Product => midpoint(i) * midpoint(j),
            CatalogTarget::Min => midpoint(i.min(j)),
            CatalogTarget::Constant(p) => p.clone(),
        }))
    }

    /// `t(H, W)` when known in closed form.
    pub fn closed_form(&self, h: &Multigraph) -> Option<Rational> {
        match self {
            CatalogTarget::Constant(p) => Some(p.pow_u32(h.edge_count())),
            // Each vertex of degree d contributes the integral of x^d.
            CatalogTarget::Product => Some(
                degrees(h)
                    .into_iter()
                    .fold(Rational::from_ratio(1, 1), |acc, d| {
                        acc * Rational::from_ratio(1, i64::from(d) + 1)
                    }),
            ),
            CatalogTarget::Min => min_table(h),
        }
    }
}

fn degrees(h: &Multigraph) -> Vec<u32> {
    let mut deg = vec![0; h.vertex_count()];
    for &(u, v, m) in h.edges() {
        deg[u] += m;
        deg[v] += m;
    }
    deg
}

fn min_table(h: &Multigraph) -> Option<Rational> {
    let is =
        |n: usize, e: &[(usize, usize, u32)]| Multigraph::canonicalize(n, e).is_ok_and(|g| g == *h);
    let value = if h.is_empty() {
        (1, 1)
    } else if is(2, &[(0, 1, 1)]) {
        (1, 3)
    } else if is(2, &[(0, 1, 2)]) {
        (1, 6)
    } else if is(3, &[(0, 1, 1), (1, 2, 1)]) {
        (2, 15)
    } else if is(4, &[(0, 1, 1), (2, 3, 1)]) {
        (1, 9)
    } else {
        return None;
    };
    Some(Rational::from_ratio(value.0, value.1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DemoRow {
    pub n: usize,
    pub density: Rational,
    pub analytic: Option<Rational>,
    pub gap: Option<Rational>,
}

/// `t(H, -)` on cell-averaged discretizations of `target` at each size,
/// against the closed-form value where one is known.
pub fn l1_density_demo(
    target: &CatalogTarget,
    h: &Multigraph,
    sizes: &[usize],
) -> Result<Vec<DemoRow>> {
    let analytic = target.closed_form(h);
    sizes
        .iter()
        .map(|&n| {
            let a = target.discretize(n)?;
            let density = homdensity::t(h, &a);
            let gap = analytic
                .as_ref()
                .map(|v| (density.clone() - v.clone()).abs());
            Ok(DemoRow {
                n,
                density,
                analytic: analytic.clone(),
                gap,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classpoly::density_polynomial;
    use crate::multigraph::basis_up_to;
    use crate::scalar::ratio;
    use crate::weighted_graph::random_matrix;

    fn k2() -> Multigraph {
        Multigraph::from_pairs(2, &[(0, 1)]).unwrap()
    }
    fn double() -> Multigraph {
        Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()
    }
    fn path2() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }
    fn triangle() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn only_if_recovers_path() {
        let f = density_polynomial::<Rational>(&path2(), Basis::T, 4);
        let report = verify_only_if(&f, 2, 2, 0).unwrap();
        assert!(report.is_verified(), "{report:?}");
        let c = report.t_coefficients.unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&path2()), ratio(1, 1));
        let blow = report.blow_up.unwrap();
        assert_eq!(blow.size, 8);
        assert!(blow.coefficients_agree && blow.pullback_agrees);
        assert!(report.residual.unwrap().is_zero());
    }

    #[test]
    fn only_if_constant() {
        let f = RationalPolynomial::constant(1, ratio(5, 1));
        let report = verify_only_if(&f, 0, 3, 0).unwrap();
        assert!(report.is_verified(), "{report:?}");
        let c = report.t_coefficients.unwrap();
        assert_eq!(c.get(&Multigraph::empty()), ratio(5, 1));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn only_if_localizes_degree_three() {
        let f = density_polynomial::<Rational>(&triangle(), Basis::TInj, 6);
        let report = verify_only_if(&f, 2, 2, 0).unwrap();
        assert_eq!(report.verdict, Verdict::Refuted);
        let vanishing = report.vanishing.unwrap();
        assert_eq!(vanishing.degree, 3);
        let witness = vanishing.witness.unwrap();
        assert_eq!(witness.directions.len(), 3);
        assert!(!witness.value.is_zero());
        assert!(report.t_coefficients.is_none());
    }

    #[test]
    fn only_if_rejects_non_class_function() {
        let f = RationalPolynomial::variable(3, 0, 1).unwrap();
        let report = verify_only_if(&f, 1, 2, 0).unwrap();
        assert!(!report.class_function);
        assert!(report.class_violation.is_some());
        assert_eq!(report.verdict, Verdict::Refuted);
    }

    #[test]
    fn only_if_preconditions() {
        let f = density_polynomial::<Rational>(&path2(), Basis::T, 3);
        assert_eq!(
            verify_only_if(&f, 2, 2, 0),
            Err(Error::NotUniqueRegime { n: 3, max_edges: 2 })
        );
        let f = density_polynomial::<Rational>(&k2(), Basis::T, 2);
        assert_eq!(verify_only_if(&f, 1, 0, 0), Err(Error::ZeroBlowUp));
    }

    #[test]
    fn if_direction_examples() {
        let single = RationalCoefficients::from_pairs(Basis::T, 2, [(k2(), ratio(1, 1))]);
        let report = verify_if(&single, 1, 3, 7).unwrap();
        assert!(report.is_verified(), "{report:?}");

        let dbl = RationalCoefficients::from_pairs(Basis::T, 2, [(double(), ratio(1, 1))]);
        let report = verify_if(&dbl, 1, 3, 7).unwrap();
        assert_eq!(report.verdict, Verdict::Refuted);
        assert!(!report.vanishing.as_ref().unwrap().vanishes);
        assert!(report.vanishing.unwrap().witness.is_some());
        let diff = report.differences.unwrap();
        assert!(diff.nonzero > 0);
        assert!(diff.degree_bounds_hold);
    }

    #[test]
    fn if_then_only_if_round_trip() {
        for seed in 0..3u64 {
            let coeffs = RationalCoefficients::from_pairs(
                Basis::T,
                4,
                basis_up_to(2)
                    .into_iter()
                    .enumerate()
                    .map(|(i, h)| (h, ratio(seed as i64 * 3 + i as i64 - 4, 7))),
            );
            let forward = verify_if(&coeffs, 2, 2, seed).unwrap();
            assert!(forward.is_verified(), "{forward:?}");
            let f = RationalPolynomial::from_coefficients(&coeffs, 4);
            let back = verify_only_if(&f, 2, 2, seed).unwrap();
            assert!(back.is_verified());
            assert_eq!(back.t_coefficients.unwrap(), coeffs);
        }
    }

    #[test]
    fn verify_if_rejects_small_n() {
        let coeffs = RationalCoefficients::from_pairs(Basis::T, 2, [(path2(), ratio(1, 1))]);
        assert!(matches!(
            verify_if(&coeffs, 2, 1, 0),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn reports_are_reproducible() {
        let coeffs = RationalCoefficients::from_pairs(
            Basis::T,
            3,
            [(k2(), ratio(2, 3)), (path2(), ratio(-1, 5))],
        );
        assert_eq!(
            verify_if(&coeffs, 2, 3, 11).unwrap(),
            verify_if(&coeffs, 2, 3, 11).unwrap()
        );
    }

    #[test]
    fn collapse_preserves_zero_one_values() {
        let coeffs = RationalCoefficients::from_pairs(
            Basis::T,
            4,
            basis_up_to(3)
                .into_iter()
                .enumerate()
                .map(|(i, h)| (h, ratio(i as i64 + 1, 3))),
        );
        let simple = collapse_to_simple(&coeffs);
        assert!(simple.iter().all(|(h, _)| h.is_simple()));
        for seed in 0..10 {
            let a: RationalMatrix = random_matrix(4, seed, ValueMode::ZeroOne);
            assert_eq!(coeffs.evaluate(&a), simple.evaluate(&a));
        }
    }

    #[test]
    fn catalog_parse() {
        assert_eq!(CatalogTarget::parse("xy").unwrap(), CatalogTarget::Product);
        assert_eq!(CatalogTarget::parse("min").unwrap(), CatalogTarget::Min);
        assert_eq!(
            CatalogTarget::parse("const:1/2").unwrap(),
            CatalogTarget::Constant(ratio(1, 2))
        );
        assert_eq!(CatalogTarget::parse("const:3/2"), Err(Error::NotUnitRange));
        assert_eq!(CatalogTarget::parse("sin"), Err(Error::NotInCatalog));
        assert_eq!(
            CatalogTarget::parse("const:1/2").unwrap().name(),
            "const:1/2"
        );
    }

    /// Midpoint rule on a fine grid for the closed forms.
    fn numeric_density(w: impl Fn(f64, f64) -> f64, h: &Multigraph) -> f64 {
        let m = 60;
        let points: Vec<f64> = (0..m).map(|i| (i as f64 + 0.5) / m as f64).collect();
        let mut total = 0.0;
        crate::combinatorics::for_each_tuple(m, h.vertex_count(), |tuple| {
            total += h.edges().iter().fold(1.0, |acc, &(u, v, e)| {
                acc * w(points[tuple[u]], points[tuple[v]]).powi(e as i32)
            });
        });
        total / (m as f64).powi(h.vertex_count() as i32)
    }

    #[test]
    fn closed_forms_match_quadrature() {
        for h in basis_up_to(2) {
            let xy = CatalogTarget::Product.closed_form(&h).unwrap().to_f64();
            assert!((xy - numeric_density(|x, y| x * y, &h)).abs() < 1e-3, "{h}");
            let min = CatalogTarget::Min.closed_form(&h).unwrap().to_f64();
            assert!((min - numeric_density(f64::min, &h)).abs() < 1e-3, "{h}");
        }
        assert_eq!(CatalogTarget::Min.closed_form(&triangle()), None);
        assert_eq!(
            CatalogTarget::Constant(ratio(1, 3)).closed_form(&triangle()),
            Some(ratio(1, 27))
        );
    }

    #[test]
    fn demo_examples() {
        let half = CatalogTarget::Constant(ratio(1, 2));
        for row in l1_density_demo(&half, &k2(), &[2, 4, 8, 16]).unwrap() {
            let n = row.n as i64;
            assert_eq!(row.density, ratio(n - 1, 2 * n));
            assert_eq!(row.analytic, Some(ratio(1, 2)));
        }
        let rows = l1_density_demo(&CatalogTarget::Product, &k2(), &[4, 8, 16, 32]).unwrap();
        for row in &rows {
            let n = row.n as i64;
            assert_eq!(
                row.density,
                ratio(1, 4) - ratio(4 * n * n - 1, 12 * n * n * n)
            );
        }
        assert!(rows.windows(2).all(|w| w[1].gap < w[0].gap));
        let rows = l1_density_demo(&CatalogTarget::Min, &triangle(), &[3]).unwrap();
        assert!(rows[0].gap.is_none());
        assert!(l1_density_demo(&CatalogTarget::Min, &k2(), &[0]).is_err());
    }

    #[test]
    fn min_discretization_is_cell_average() {
        let a = CatalogTarget::Min.discretize(3).unwrap();
        assert_eq!(*a.get(0, 2), ratio(1, 6));
        assert_eq!(*a.get(2, 1), ratio(1, 2));
        assert_eq!(*a.get(1, 1), ratio(0, 1));
    }
}
