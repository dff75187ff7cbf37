//! Gateaux derivatives on weighted graphs.
//!
//! On `M_n` a functional is a function of the `n(n-1)/2` edge weights, so
//! the mixed derivative `d^k F(a; g_1..g_k)` is the mixed partial
//! `d^k / dl_1..dl_k` at `l = 0` of `l -> F(a + sum l_i g_i)`. For edge
//! polynomials that is the coefficient of `l_1 l_2 ... l_k` in the
//! expansion; for black boxes it is estimated by iterated differences.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classpoly::EdgePolynomial;
use crate::combinatorics::for_each_tuple;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::scalar::Scalar;
use crate::weighted_graph::{
    random_direction_with, random_matrix_with, DirectionMatrix, ValueMode, WeightedMatrix,
};

/// A base point in `M_{n,[0,1]}` and an ordered list of directions.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeRequest<T> {
    base_point: WeightedMatrix<T>,
    directions: Vec<DirectionMatrix<T>>,
    admissible: Vec<bool>,
}

impl<T: Scalar> DerivativeRequest<T> {
    /// Validates sizes and the base point range, and records which
    /// directions are admissible at the base point.
    pub fn new(base_point: WeightedMatrix<T>, directions: Vec<DirectionMatrix<T>>) -> Result<Self> {
        if !base_point.in_unit_range() {
            return Err(Error::BasePointOutOfRange);
        }
        let admissible = directions
            .iter()
            .map(|g| base_point.check_admissible(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivativeRequest {
            base_point,
            directions,
            admissible,
        })
    }

    pub fn base_point(&self) -> &WeightedMatrix<T> {
        &self.base_point
    }

    pub fn directions(&self) -> &[DirectionMatrix<T>] {
        &self.directions
    }

    pub fn order(&self) -> usize {
        self.directions.len()
    }

    pub fn all_admissible(&self) -> bool {
        self.admissible.iter().all(|&ok| ok)
    }

    pub fn admissible(&self) -> &[bool] {
        &self.admissible
    }
}

/// Polynomial in `l_1..l_k`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPolynomial<T> {
    vars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> LambdaPolynomial<T> {
    pub fn constant(vars: usize, c: T) -> Self {
        let mut p = LambdaPolynomial {
            vars,
            terms: BTreeMap::new(),
        };
        p.add_term(vec![0; vars], c);
        p
    }

    /// `c + sum_i slopes[i] l_i`.
    pub fn affine(c: T, slopes: &[T]) -> Self {
        let vars = slopes.len();
        let mut p = Self::constant(vars, c);
        for (i, s) in slopes.iter().enumerate() {
            let mut e = vec![0; vars];
            e[i] = 1;
            p.add_term(e, s.clone());
        }
        p
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> T {
        self.terms.get(exponents).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn plus(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let mut out = LambdaPolynomial {
            vars: self.vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Product, discarding monomials with any exponent above `cap`.
    pub fn times(&self, other: &Self, cap: Option<u32>) -> Self {
        let mut out = LambdaPolynomial {
            vars: self.vars,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                if cap.is_some_and(|cap| e.iter().any(|&x| x > cap)) {
                    continue;
                }
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, exp: u32, cap: Option<u32>) -> Self {
        let mut out = Self::constant(self.vars, T::one());
        for _ in 0..exp {
            out = out.times(self, cap);
        }
        out
    }

    pub fn evaluate(&self, lambdas: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let term = e
                .iter()
                .zip(lambdas)
                .fold(c.clone(), |t, (&k, l)| t * l.pow_u32(k));
            acc + term
        })
    }
}

fn edge_line<T: Scalar>(
    a: &WeightedMatrix<T>,
    directions: &[DirectionMatrix<T>],
    i: usize,
    j: usize,
) -> LambdaPolynomial<T> {
    let slopes: Vec<T> = directions.iter().map(|g| g.get(i, j).clone()).collect();
    LambdaPolynomial::affine(a.get(i, j).clone(), &slopes)
}

/// Result of [`gateaux_exact`]; `admissible` is false when some direction
/// leaves `[0,1]` immediately (the polynomial derivative still exists).
#[derive(Clone, Debug, PartialEq)]
pub struct ExactDerivative<T> {
    pub value: T,
    pub admissible: bool,
}

/// Mixed derivative `d^k F(a; g_1..g_k)` of an edge polynomial, exactly.
pub fn gateaux_exact<T: Scalar>(
    f: &EdgePolynomial<T>,
    req: &DerivativeRequest<T>,
) -> Result<ExactDerivative<T>> {
    let a = req.base_point();
    if f.ambient_n() != a.size() {
        return Err(Error::SizeMismatch {
            expected: f.ambient_n(),
            found: a.size(),
        });
    }
    for g in req.directions() {
        if g.size() != a.size() {
            return Err(Error::SizeMismatch {
                expected: a.size(),
                found: g.size(),
            });
        }
    }
    let k = req.order();
    let mut lines: BTreeMap<(usize, usize), LambdaPolynomial<T>> = BTreeMap::new();
    let mut total = LambdaPolynomial::constant(k, T::zero());
    for (m, c) in f.terms() {
        let mut product = LambdaPolynomial::constant(k, c.clone());
        for &(i, j, e) in m.factors() {
            let line = lines
                .entry((i, j))
                .or_insert_with(|| edge_line(a, req.directions(), i, j));
            product = product.times(&line.pow(e, Some(1)), Some(1));
        }
        total.plus(&product);
    }
    Ok(ExactDerivative {
        value: total.coefficient(&vec![1; k]),
        admissible: req.all_admissible(),
    })
}

/// The polynomial `l -> t(H, a + sum l_i g_i)`, expanded by summing the
/// edge products over all vertex tuples.
pub fn lambda_expansion<T: Scalar>(
    h: &Multigraph,
    a: &WeightedMatrix<T>,
    directions: &[DirectionMatrix<T>],
) -> Result<LambdaPolynomial<T>> {
    let n = a.size();
    if let Some(g) = directions.iter().find(|g| g.size() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.size(),
        });
    }
    let k = directions.len();
    let mut lines = vec![LambdaPolynomial::constant(k, T::zero()); n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                lines[i * n + j] = edge_line(a, directions, i, j);
            }
        }
    }
    let mut total = LambdaPolynomial::constant(k, T::zero());
    for_each_tuple(n, h.vertex_count(), |tuple| {
        let mut product = LambdaPolynomial::constant(k, T::one());
        for &(u, v, m) in h.edges() {
            if tuple[u] == tuple[v] {
                return;
            }
            product = product.times(&lines[tuple[u] * n + tuple[v]].pow(m, None), None);
        }
        total.plus(&product);
    });
    let weight = T::one() / T::from_count(n).pow_u32(h.vertex_count() as u32);
    Ok(total.scaled(&weight))
}

/// Difference scheme used by [`gateaux_fd`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceScheme {
    Central,
    /// Used when a central stencil point would leave `[0,1]`; first order only.
    Forward,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDifference<T> {
    pub value: T,
    pub step: T,
    pub scheme: DifferenceScheme,
}

impl<T> FiniteDifference<T> {
    pub fn accuracy_warning(&self) -> Option<&'static str> {
        match self.scheme {
            DifferenceScheme::Central => None,
            DifferenceScheme::Forward => {
                Some("forward differences at a boundary point: first-order accurate only")
            }
        }
    }
}

pub const DEFAULT_STEP: f64 = 1e-3;

/// k-fold iterated difference estimate of `d^k F(a; g_1..g_k)` for a
/// black-box functional.
///
/// The central stencil evaluates `F(a + h sum s_i g_i)` for all sign
/// vectors `s in {-1,1}^k`. If one of those points leaves `[0,1]` the
/// forward stencil over `s in {0,1}^k` is used instead; if that fails too
/// the step is rejected. With an exact scalar and an exact step the
/// result is an exact iterated difference.
pub fn gateaux_fd<T: Scalar>(
    f: impl Fn(&WeightedMatrix<T>) -> T,
    req: &DerivativeRequest<T>,
    step: T,
) -> Result<FiniteDifference<T>> {
    let k = req.order();
    let a = req.base_point();
    let stencil = |signs: &[T]| -> Result<WeightedMatrix<T>> {
        let terms: Vec<(T, &DirectionMatrix<T>)> = signs
            .iter()
            .zip(req.directions())
            .map(|(s, g)| (s.clone() * step.clone(), g))
            .collect();
        a.perturbed(&terms)
    };

    let sign_vectors =
        |values: [i64; 2]| -> Vec<(Vec<T>, T)> {
            let mut out = Vec::with_capacity(1 << k);
            for_each_tuple(2, k, |bits| {
                let signs: Vec<T> = bits.iter().map(|&b| T::from_ratio(values[b], 1)).collect();
                out.push(signs);
            });
            out.into_iter()
                .map(|signs| {
                    // weight = product of +-1 for central; (-1)^(k - |s|) for forward
                    let weight = signs.iter().fold(T::one(), |acc, s| {
                        if s.is_zero() {
                            -acc
                        } else {
                            acc * s.clone()
                        }
                    });
                    (signs, weight)
                })
                .collect()
        };

    for (scheme, values, scale) in [
        (
            DifferenceScheme::Central,
            [-1, 1],
            T::from_count(2) * step.clone(),
        ),
        (DifferenceScheme::Forward, [0, 1], step.clone()),
    ] {
        let points = sign_vectors(values)
            .into_iter()
            .map(|(signs, w)| stencil(&signs).map(|p| (p, w)))
            .collect::<Result<Vec<_>>>()?;
        if points.iter().all(|(p, _)| p.in_unit_range()) {
            let sum = points
                .iter()
                .fold(T::zero(), |acc, (p, w)| acc + w.clone() * f(p));
            return Ok(FiniteDifference {
                value: sum / scale.pow_u32(k as u32),
                step,
                scheme,
            });
        }
    }
    Err(Error::StepTooLarge {
        step: step.to_string(),
    })
}

/// A base point and directions at which a derivative is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeWitness<T> {
    pub base_point: WeightedMatrix<T>,
    pub directions: Vec<DirectionMatrix<T>>,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VanishingReport<T> {
    pub order: u32,
    pub degree: u32,
    /// Symbolic verdict: every order-`k` mixed derivative is identically 0.
    pub vanishes: bool,
    /// Number of seeded exact spot checks evaluated.
    pub spot_checks: usize,
    /// Spot checks contradicting the symbolic verdict (always 0 unless a bug).
    pub spot_check_failures: usize,
    pub witness: Option<DerivativeWitness<T>>,
}

pub const DEFAULT_SPOT_CHECKS: usize = 4;

/// Decides whether all order-`k` derivatives of `F` vanish identically,
/// i.e. whether `deg F < k`, with default spot checks.
pub fn verify_vanishing<T: Scalar>(f: &EdgePolynomial<T>, order: u32) -> VanishingReport<T> {
    verify_vanishing_seeded(f, order, DEFAULT_SPOT_CHECKS, 0)
}

/// [`verify_vanishing`] with an explicit number of seeded spot checks.
pub fn verify_vanishing_seeded<T: Scalar>(
    f: &EdgePolynomial<T>,
    order: u32,
    trials: usize,
    seed: u64,
) -> VanishingReport<T> {
    let n = f.ambient_n();
    let degree = f.degree();
    let vanishes = if order == 0 {
        f.is_zero()
    } else {
        f.is_zero() || degree < order
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let base: WeightedMatrix<T> = random_matrix_with(n, &mut rng, ValueMode::InteriorGrid);
        let dirs = (0..order)
            .map(|_| random_direction_with(n, &mut rng))
            .collect();
        let req = DerivativeRequest::new(base, dirs).expect("interior base point");
        let value = gateaux_exact(f, &req).expect("sizes agree").value;
        if vanishes && !value.is_zero() {
            failures += 1;
        }
    }

    let witness = if vanishes {
        None
    } else {
        find_witness(f, order, &mut rng)
    };
    VanishingReport {
        order,
        degree,
        vanishes,
        spot_checks: trials,
        spot_check_failures: failures,
        witness,
    }
}

/// Coordinate directions taken from a top-degree monomial make the
/// derivative a nonzero polynomial in the base point; a few seeded
/// interior points then expose a nonzero value.
fn find_witness<T: Scalar>(
    f: &EdgePolynomial<T>,
    order: u32,
    rng: &mut ChaCha8Rng,
) -> Option<DerivativeWitness<T>> {
    let n = f.ambient_n();
    let degree = f.degree();
    let (top, _) = f.terms().find(|(m, _)| m.degree() == degree)?;
    let directions: Vec<DirectionMatrix<T>> = top
        .factors()
        .iter()
        .flat_map(|&(i, j, e)| std::iter::repeat_n((i, j), e as usize))
        .take(order as usize)
        .map(|(i, j)| DirectionMatrix::unit(n, i, j))
        .collect();
    for attempt in 0..64 {
        let base: WeightedMatrix<T> = if attempt == 0 {
            WeightedMatrix::from_fn(n, |_, _| T::from_ratio(1, 2))
        } else {
            random_matrix_with(n, rng, ValueMode::InteriorGrid)
        };
        let req = DerivativeRequest::new(base, directions.clone()).ok()?;
        let value = gateaux_exact(f, &req).ok()?.value;
        if !value.is_zero() {
            return Some(DerivativeWitness {
                base_point: req.base_point,
                directions: req.directions,
                value,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classpoly::density_polynomial;
    use crate::homdensity::{self, Basis};
    use crate::scalar::{ratio, Rational};
    use crate::weighted_graph::random_matrix;

    fn k2() -> Multigraph {
        Multigraph::from_pairs(2, &[(0, 1)]).unwrap()
    }
    fn double() -> Multigraph {
        Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()
    }

    #[test]
    fn first_derivative_of_edge_density_is_linear_in_g() {
        let n = 3;
        let f = density_polynomial::<Rational>(&k2(), Basis::T, n);
        let a: WeightedMatrix<Rational> = random_matrix(n, 1, ValueMode::InteriorGrid);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g: DirectionMatrix<Rational> = random_direction_with(n, &mut rng);
        let req = DerivativeRequest::new(a, vec![g.clone()]).unwrap();
        let expected = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .fold(ratio(0, 1), |acc, (i, j)| acc + g.get(i, j).clone())
            / ratio(9, 1);
        assert_eq!(gateaux_exact(&f, &req).unwrap().value, expected);

        let req2 = DerivativeRequest::new(req.base_point().clone(), vec![g.clone(), g]).unwrap();
        assert_eq!(gateaux_exact(&f, &req2).unwrap().value, ratio(0, 1));
    }

    #[test]
    fn derivative_reports_inadmissible_directions() {
        let a = WeightedMatrix::from_fn(2, |_, _| ratio(0, 1));
        let down = DirectionMatrix::unit(2, 0, 1).negated();
        let f = density_polynomial::<Rational>(&k2(), Basis::T, 2);
        let req = DerivativeRequest::new(a, vec![down]).unwrap();
        let d = gateaux_exact(&f, &req).unwrap();
        assert!(!d.admissible);
        assert_eq!(d.value, ratio(-1, 2));
    }

    #[test]
    fn request_validation() {
        let outside = WeightedMatrix::from_fn(2, |_, _| ratio(2, 1));
        assert_eq!(
            DerivativeRequest::new(outside, vec![]),
            Err(Error::BasePointOutOfRange)
        );
        let a = WeightedMatrix::from_fn(2, |_, _| ratio(1, 2));
        let g = DirectionMatrix::unit(3, 0, 1);
        assert!(matches!(
            DerivativeRequest::new(a, vec![g]),
            Err(Error::SizeMismatch { .. })
        ));
        let f = density_polynomial::<Rational>(&k2(), Basis::T, 3);
        let req =
            DerivativeRequest::new(WeightedMatrix::from_fn(2, |_, _| ratio(1, 2)), vec![]).unwrap();
        assert!(gateaux_exact(&f, &req).is_err());
    }

    #[test]
    fn lambda_expansion_examples() {
        let a = WeightedMatrix::from_fn(2, |_, _| ratio(1, 1));
        let g = DirectionMatrix::unit(2, 0, 1);
        let p = lambda_expansion(&double(), &a, std::slice::from_ref(&g)).unwrap();
        // (1 + l)^2 / 2
        assert_eq!(p.coefficient(&[0]), ratio(1, 2));
        assert_eq!(p.coefficient(&[1]), ratio(1, 1));
        assert_eq!(p.coefficient(&[2]), ratio(1, 2));
        assert_eq!(p.degree(), 2);

        let p = lambda_expansion(&k2(), &a, &[g]).unwrap();
        assert!(p.degree() <= 1);
        let p = lambda_expansion(&Multigraph::empty(), &a, &[]).unwrap();
        assert_eq!(p, LambdaPolynomial::constant(0, ratio(1, 1)));
    }

    #[test]
    fn lambda_expansion_at_zero_is_density() {
        let a: WeightedMatrix<Rational> = random_matrix(4, 3, ValueMode::RationalGrid);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let dirs: Vec<DirectionMatrix<Rational>> =
            (0..2).map(|_| random_direction_with(4, &mut rng)).collect();
        for h in crate::multigraph::enumerate_up_to(3) {
            let p = lambda_expansion(&h, &a, &dirs).unwrap();
            assert_eq!(
                p.evaluate(&[ratio(0, 1), ratio(0, 1)]),
                homdensity::t(&h, &a)
            );
            assert!(p.degree() <= h.edge_count());
        }
    }

    #[test]
    fn fd_examples() {
        let a: WeightedMatrix<f64> = random_matrix(3, 2, ValueMode::InteriorGrid);
        let g = DirectionMatrix::from_fn(3, |_, _| 0.1);
        let req2 = DerivativeRequest::new(a.clone(), vec![g.clone(), g.clone()]).unwrap();
        let edge = |m: &WeightedMatrix<f64>| homdensity::t(&k2(), m);
        let est = gateaux_fd(edge, &req2, DEFAULT_STEP).unwrap();
        assert!(est.value.abs() < 1e-9, "{}", est.value);
        assert_eq!(est.scheme, DifferenceScheme::Central);

        let req1 = DerivativeRequest::new(a.clone(), vec![g.clone()]).unwrap();
        let est = gateaux_fd(
            |m: &WeightedMatrix<f64>| homdensity::t(&double(), m),
            &req1,
            1e-3,
        )
        .unwrap();
        let f = density_polynomial::<f64>(&double(), Basis::T, 3);
        let exact = gateaux_exact(&f, &req1).unwrap().value;
        assert!(((est.value - exact) / exact).abs() < 1e-6);

        for k in 1..=3 {
            let req = DerivativeRequest::new(a.clone(), vec![g.clone(); k]).unwrap();
            let est = gateaux_fd(|_: &WeightedMatrix<f64>| 4.2, &req, 1e-2).unwrap();
            assert!(est.value.abs() < 1e-6);
        }
    }

    #[test]
    fn fd_falls_back_to_forward_then_rejects() {
        let a = WeightedMatrix::from_fn(2, |_, _| 0.0f64);
        let up = DirectionMatrix::unit(2, 0, 1);
        let req = DerivativeRequest::new(a, vec![up]).unwrap();
        let est = gateaux_fd(
            |m: &WeightedMatrix<f64>| homdensity::t(&k2(), m),
            &req,
            1e-3,
        )
        .unwrap();
        assert_eq!(est.scheme, DifferenceScheme::Forward);
        assert!(est.accuracy_warning().is_some());
        assert!((est.value - 0.5).abs() < 1e-9);

        let b = WeightedMatrix::from_fn(2, |_, _| 0.5f64);
        let req = DerivativeRequest::new(b, vec![DirectionMatrix::unit(2, 0, 1)]).unwrap();
        assert!(matches!(
            gateaux_fd(|_: &WeightedMatrix<f64>| 0.0, &req, 1.0),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn vanishing_examples() {
        let edge_path = density_polynomial::<Rational>(
            &Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap(),
            Basis::T,
            4,
        );
        let report = verify_vanishing(&edge_path, 3);
        assert!(report.vanishes);
        assert_eq!(report.spot_check_failures, 0);
        assert!(report.witness.is_none());

        let v = |i, j| EdgePolynomial::<Rational>::variable(3, i, j).unwrap();
        let tri = v(0, 1).times(&v(1, 2)).unwrap().times(&v(0, 2)).unwrap();
        let report = verify_vanishing(&tri, 3);
        assert!(!report.vanishes);
        let witness = report.witness.expect("witness");
        assert_eq!(witness.value, ratio(1, 1));
        assert_eq!(witness.directions.len(), 3);

        let report = verify_vanishing(&EdgePolynomial::<Rational>::zero(3), 0);
        assert!(report.vanishes);
        let report = verify_vanishing(&EdgePolynomial::constant(3, ratio(2, 1)), 0);
        assert!(!report.vanishes);
    }
}
