//! Polynomials in the edge variables `a_ij` (`i < j`) of an `n`-vertex
//! weighted graph, permutation invariance, and decomposition into the
//! `t^inj` and `t` density bases.
//!
//! A monomial `a_{i1 j1} ... a_{id jd}` is the edge multiset of a labeled
//! multigraph on `[n]`; its `S_n`-orbit is the isomorphism class of that
//! multigraph. Every monomial of `t^inj(H, -)` lies in the orbit of `H`
//! and carries coefficient `|Aut(H)| / n^|V(H)|`, so a class function's
//! coefficient on an orbit determines the `t^inj` coefficient directly.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{factorial, for_each_injective_tuple, for_each_tuple, permutations};
use crate::error::{Error, Result};
use crate::homdensity::{self, transform_matrix, Basis, DensityCoefficients, TransformDirection};
use crate::linalg::rank;
use crate::multigraph::{basis_up_to, Multigraph};
use crate::scalar::Scalar;
use crate::weighted_graph::{random_matrix_with, ValueMode, WeightedMatrix};

/// Product of edge variables: sorted `(i, j, exponent)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(usize, usize, u32)>);

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from `(i, j, exponent)` factors; repeated pairs add up.
    pub fn new(factors: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        let mut merged: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (i, j, e) in factors {
            if e > 0 {
                *merged.entry((i.min(j), i.max(j))).or_insert(0) += e;
            }
        }
        Monomial(merged.into_iter().map(|((i, j), e)| (i, j, e)).collect())
    }

    pub fn factors(&self) -> &[(usize, usize, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.2).sum()
    }

    /// Image under the vertex relabeling `i -> sigma[i]`.
    pub fn permuted(&self, sigma: &[usize]) -> Monomial {
        Monomial::new(self.0.iter().map(|&(i, j, e)| (sigma[i], sigma[j], e)))
    }

    /// The isomorphism class of the edge multiset.
    pub fn multigraph(&self, n: usize) -> Multigraph {
        Multigraph::canonicalize(n, &self.0).expect("monomial variables are off-diagonal")
    }

    pub fn evaluate<T: Scalar>(&self, a: &WeightedMatrix<T>) -> T {
        self.0
            .iter()
            .fold(T::one(), |acc, &(i, j, e)| acc * a.get(i, j).pow_u32(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(i, j, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "a[{},{}]", i + 1, j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial in the `n(n-1)/2` edge variables of `n x n` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgePolynomial<T> {
    n: usize,
    terms: BTreeMap<Monomial, T>,
}

/// A monomial whose coefficient differs from that of one of its images.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitViolation<T> {
    pub monomial: Monomial,
    pub coefficient: T,
    pub image: Monomial,
    pub image_coefficient: T,
}

impl<T: Scalar> EdgePolynomial<T> {
    pub fn zero(n: usize) -> Self {
        EdgePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: T) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(), c);
        p
    }

    /// The single variable `a_ij`.
    pub fn variable(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_terms(n, [(vec![(i, j, 1)], T::one())])
    }

    /// Builds a polynomial from `(factors, coefficient)` pairs, validating
    /// that every factor is an off-diagonal pair inside `[n]`.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Vec<(usize, usize, u32)>, T)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (factors, c) in terms {
            for &(i, j, _) in &factors {
                for v in [i, j] {
                    if v >= n {
                        return Err(Error::VertexOutOfRange {
                            vertex: v + 1,
                            vertex_count: n,
                        });
                    }
                }
                if i == j {
                    return Err(Error::SelfLoop { vertex: i + 1 });
                }
            }
            p.add_term(Monomial::new(factors), c);
        }
        Ok(p)
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_size(other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.plus(&other.scaled(&-T::one()))
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn times(&self, other: &Self) -> Result<Self> {
        self.check_size(other.n)?;
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = Monomial::new(m1.0.iter().chain(&m2.0).copied());
                out.add_term(m, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        EdgePolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, a: &WeightedMatrix<T>) -> Result<T> {
        self.check_size(a.size())?;
        Ok(self
            .terms
            .iter()
            .fold(T::zero(), |acc, (m, c)| acc + c.clone() * m.evaluate(a)))
    }

    /// The first monomial whose coefficient changes under a generator of
    /// `S_n` (a transposition and an `n`-cycle), if any.
    pub fn class_violation(&self) -> Option<OrbitViolation<T>> {
        let n = self.n;
        if n < 2 {
            return None;
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        for (m, c) in &self.terms {
            for generator in [&swap, &cycle] {
                let image = m.permuted(generator);
                let image_coefficient = self.coefficient(&image);
                if image_coefficient != *c {
                    return Some(OrbitViolation {
                        monomial: m.clone(),
                        coefficient: c.clone(),
                        image,
                        image_coefficient,
                    });
                }
            }
        }
        None
    }

    /// True iff coefficients are constant on `S_n`-orbits of monomials.
    pub fn is_class_function(&self) -> bool {
        self.class_violation().is_none()
    }

    fn require_class_function(&self) -> Result<()> {
        match self.class_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotClassFunction {
                monomial: v.monomial.to_string(),
                coefficient: v.coefficient.to_string(),
                image: v.image.to_string(),
                image_coefficient: v.image_coefficient.to_string(),
            }),
        }
    }

    /// Average of `F o sigma` over all `sigma` in `S_n`.
    pub fn symmetrize(&self) -> Self {
        let perms: Vec<Vec<usize>> = permutations(self.n).collect();
        let weight = T::one() / T::from_count(factorial(self.n) as usize);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let share = c.clone() * weight.clone();
            for sigma in &perms {
                out.add_term(m.permuted(sigma), share.clone());
            }
        }
        out
    }

    /// Reads a polynomial on `M_{kn}` on the image of `blow_up(-, k)`:
    /// the result `P` on `M_n` satisfies `P(a) = F(blow_up(a, k))`.
    pub fn pullback_through_blow_up(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroBlowUp);
        }
        if !self.n.is_multiple_of(k) {
            return Err(Error::SizeMismatch {
                expected: self.n - self.n % k,
                found: self.n,
            });
        }
        let mut out = Self::zero(self.n / k);
        for (m, c) in &self.terms {
            // clones of one vertex are joined with weight 0
            if m.0.iter().any(|&(p, q, _)| p / k == q / k) {
                continue;
            }
            out.add_term(
                Monomial::new(m.0.iter().map(|&(p, q, e)| (p / k, q / k, e))),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// `sum_H c_H t(H, -)` (or `t^inj`) expanded on `n x n` matrices.
    pub fn from_coefficients(coeffs: &DensityCoefficients<T>, n: usize) -> Self {
        let mut out = Self::zero(n);
        for (h, c) in coeffs.iter() {
            let expansion = density_polynomial(h, coeffs.basis(), n).scaled(c);
            out = out.plus(&expansion).expect("same ambient size");
        }
        out
    }
}

/// Explicit expansion of `t(H, -)` or `t^inj(H, -)` on `n x n` matrices.
pub fn density_polynomial<T: Scalar>(h: &Multigraph, basis: Basis, n: usize) -> EdgePolynomial<T> {
    let weight = T::one() / T::from_count(n).pow_u32(h.vertex_count() as u32);
    let mut out = EdgePolynomial::zero(n);
    let mut visit = |tuple: &[usize]| {
        if h.edges().iter().any(|&(u, v, _)| tuple[u] == tuple[v]) {
            return;
        }
        let m = Monomial::new(h.edges().iter().map(|&(u, v, e)| (tuple[u], tuple[v], e)));
        out.add_term(m, weight.clone());
    };
    match basis {
        Basis::T => for_each_tuple(n, h.vertex_count(), &mut visit),
        Basis::TInj => for_each_injective_tuple(n, h.vertex_count(), &mut visit),
    }
    out
}

/// Writes a homogeneous class function of degree `d` as
/// `sum_{H in H_d^(n)} c_H t^inj(H, -)`.
pub fn decompose_tinj<T: Scalar>(f: &EdgePolynomial<T>, d: u32) -> Result<DensityCoefficients<T>> {
    f.require_class_function()?;
    if let Some(m) = f.terms.keys().find(|m| m.degree() != d) {
        return Err(Error::NotHomogeneous {
            expected: d,
            found: m.degree(),
        });
    }
    Ok(tinj_from_orbits(f))
}

/// `t^inj` coefficients of a class function of any degree mix; each
/// homogeneous part decomposes independently.
pub fn decompose_tinj_mixed<T: Scalar>(f: &EdgePolynomial<T>) -> Result<DensityCoefficients<T>> {
    f.require_class_function()?;
    Ok(tinj_from_orbits(f))
}

fn tinj_from_orbits<T: Scalar>(f: &EdgePolynomial<T>) -> DensityCoefficients<T> {
    let n = f.n;
    // Terms iterate in increasing order, so the first monomial met in each
    // orbit is its least element.
    let mut representatives: BTreeMap<Multigraph, T> = BTreeMap::new();
    for (m, c) in &f.terms {
        representatives
            .entry(m.multigraph(n))
            .or_insert_with(|| c.clone());
    }
    let ambient = T::from_count(n);
    DensityCoefficients::from_pairs(
        Basis::TInj,
        n,
        representatives.into_iter().map(|(h, c)| {
            let scale = ambient.pow_u32(h.vertex_count() as u32)
                / T::from_count(h.automorphism_count() as usize);
            (h, c * scale)
        }),
    )
}

/// Writes a class function of degree at most `max_edges` as
/// `sum_{H in H_<=N} c_H t(H, -)`. Requires `n >= 2N`, where the
/// coefficients are unique.
pub fn decompose_t<T: Scalar>(
    f: &EdgePolynomial<T>,
    max_edges: u32,
) -> Result<DensityCoefficients<T>> {
    let n = f.n;
    if n < 2 * max_edges as usize {
        return Err(Error::NotUniqueRegime { n, max_edges });
    }
    f.require_class_function()?;
    if f.degree() > max_edges {
        return Err(Error::DegreeTooHigh {
            degree: f.degree(),
            max_degree: max_edges,
        });
    }
    let injective = tinj_from_orbits(f);
    tinj_to_t(&injective, max_edges)
}

/// Re-expresses `t^inj` coefficients over `H_<=N` in the `t` basis.
pub fn tinj_to_t<T: Scalar>(
    injective: &DensityCoefficients<T>,
    max_edges: u32,
) -> Result<DensityCoefficients<T>> {
    let n = injective.ambient_n();
    let basis = basis_up_to(max_edges);
    let inverse = transform_matrix::<T>(&basis, n, TransformDirection::TInjFromT)?;
    // t^inj(H) = sum_H' inverse[H][H'] t(H'), so c_H' = sum_H b_H inverse[H][H'].
    let mut out = DensityCoefficients::new(Basis::T, n);
    for (row, h) in basis.iter().enumerate() {
        let b = injective.get(h);
        if b.is_zero() {
            continue;
        }
        for (col, target) in basis.iter().enumerate().take(row + 1) {
            let entry = inverse.get(row, col);
            if !entry.is_zero() {
                out.add(target.clone(), b.clone() * entry.clone());
            }
        }
    }
    Ok(out)
}

/// Rank of the evaluation matrix `[t(H, a_k)]` over `sample_count` seeded
/// random matrices in `M_{n,[0,1]}`. Full rank certifies linear
/// independence; a deficient rank is only a lower bound.
pub fn independence_rank<T: Scalar>(
    basis: &[Multigraph],
    n: usize,
    sample_count: usize,
    seed: u64,
) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<T>> = (0..sample_count)
        .map(|_| {
            let a: WeightedMatrix<T> = random_matrix_with(n, &mut rng, ValueMode::RationalGrid);
            basis.iter().map(|h| homdensity::t(h, &a)).collect()
        })
        .collect();
    rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::enumerate;
    use crate::scalar::{ratio, Rational};
    use crate::weighted_graph::random_matrix;

    type Poly = EdgePolynomial<Rational>;

    fn var(n: usize, i: usize, j: usize) -> Poly {
        Poly::variable(n, i, j).unwrap()
    }
    fn k2() -> Multigraph {
        Multigraph::from_pairs(2, &[(0, 1)]).unwrap()
    }
    fn double() -> Multigraph {
        Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()
    }
    fn path2() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let a = WeightedMatrix::from_fn(2, |_, _| ratio(1, 3));
        assert_eq!(var(2, 0, 1).evaluate(&a).unwrap(), ratio(1, 3));
        assert_eq!(
            Poly::constant(2, ratio(7, 1)).evaluate(&a).unwrap(),
            ratio(7, 1)
        );
        let swap = WeightedMatrix::from_fn(2, |_, _| ratio(1, 1));
        let t_edge = density_polynomial::<Rational>(&k2(), Basis::T, 2);
        assert_eq!(t_edge.evaluate(&swap).unwrap(), ratio(1, 2));
        assert!(var(3, 0, 1).evaluate(&swap).is_err());
    }

    #[test]
    fn class_function_examples() {
        assert!(var(2, 0, 1).is_class_function());
        assert!(!var(3, 0, 1).is_class_function());
        let sum = var(3, 0, 1)
            .plus(&var(3, 0, 2))
            .unwrap()
            .plus(&var(3, 1, 2))
            .unwrap();
        assert!(sum.is_class_function());
        assert!(Poly::zero(4).is_class_function());
        assert!(Poly::constant(4, ratio(3, 1)).is_class_function());
    }

    #[test]
    fn class_check_agrees_with_full_orbits() {
        // generator check vs. explicit invariance under every permutation
        let candidates = [
            var(3, 0, 1).plus(&var(3, 1, 2)).unwrap(),
            density_polynomial::<Rational>(&path2(), Basis::T, 4),
            var(4, 0, 1).times(&var(4, 2, 3)).unwrap().symmetrize(),
            var(4, 0, 1).times(&var(4, 0, 2)).unwrap(),
        ];
        for f in candidates {
            let brute = permutations(f.ambient_n()).all(|sigma| {
                f.terms()
                    .all(|(m, c)| f.coefficient(&m.permuted(&sigma)) == *c)
            });
            assert_eq!(f.is_class_function(), brute);
        }
    }

    #[test]
    fn symmetrize_examples() {
        let sum = var(3, 0, 1)
            .plus(&var(3, 0, 2))
            .unwrap()
            .plus(&var(3, 1, 2))
            .unwrap();
        assert_eq!(sum.symmetrize(), sum);
        assert_eq!(var(3, 0, 1).symmetrize(), sum.scaled(&ratio(1, 3)));
        assert_eq!(Poly::zero(3).symmetrize(), Poly::zero(3));
        let f = var(4, 0, 1)
            .times(&var(4, 1, 2))
            .unwrap()
            .plus(&var(4, 2, 3))
            .unwrap();
        assert_eq!(f.symmetrize().symmetrize(), f.symmetrize());
    }

    #[test]
    fn density_polynomial_examples() {
        assert_eq!(
            density_polynomial::<Rational>(&k2(), Basis::T, 2),
            var(2, 0, 1).scaled(&ratio(1, 2))
        );
        let a12_sq = var(2, 0, 1).times(&var(2, 0, 1)).unwrap();
        assert_eq!(
            density_polynomial::<Rational>(&double(), Basis::TInj, 2),
            a12_sq.scaled(&ratio(1, 2))
        );
        assert_eq!(
            density_polynomial::<Rational>(&Multigraph::empty(), Basis::T, 3),
            Poly::constant(3, ratio(1, 1))
        );
    }

    #[test]
    fn density_polynomials_match_engines() {
        for n in 2..=4 {
            let a: WeightedMatrix<Rational> = random_matrix(n, n as u64, ValueMode::RationalGrid);
            for h in crate::multigraph::enumerate_up_to(3) {
                let pt = density_polynomial::<Rational>(&h, Basis::T, n);
                let pi = density_polynomial::<Rational>(&h, Basis::TInj, n);
                assert_eq!(pt.evaluate(&a).unwrap(), homdensity::t(&h, &a));
                assert_eq!(pi.evaluate(&a).unwrap(), homdensity::t_inj(&h, &a));
            }
        }
    }

    #[test]
    fn decompose_tinj_examples() {
        let got = decompose_tinj(&var(2, 0, 1), 1).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got.get(&k2()), ratio(2, 1));

        let sq = var(2, 0, 1).times(&var(2, 0, 1)).unwrap();
        let got = decompose_tinj(&sq, 2).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got.get(&double()), ratio(2, 1));

        for d in 0..=2 {
            for h in enumerate(d, Some(4)) {
                let f = density_polynomial::<Rational>(&h, Basis::TInj, 4);
                let got = decompose_tinj(&f, d).unwrap();
                assert_eq!(got.len(), 1);
                assert_eq!(got.get(&h), ratio(1, 1));
            }
        }
    }

    #[test]
    fn decompose_tinj_rejections() {
        let err = decompose_tinj(&var(3, 0, 1), 1).unwrap_err();
        assert!(matches!(err, Error::NotClassFunction { .. }), "{err}");
        let mixed = var(2, 0, 1).plus(&Poly::constant(2, ratio(1, 1))).unwrap();
        assert!(matches!(
            decompose_tinj(&mixed, 1),
            Err(Error::NotHomogeneous {
                expected: 1,
                found: 0
            })
        ));
    }

    #[test]
    fn decompose_t_examples() {
        let c = decompose_t(&Poly::constant(4, ratio(5, 3)), 2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&Multigraph::empty()), ratio(5, 3));

        let f = density_polynomial::<Rational>(&path2(), Basis::T, 4);
        let c = decompose_t(&f, 2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&path2()), ratio(1, 1));
    }

    #[test]
    fn decompose_t_rejections() {
        let f = density_polynomial::<Rational>(&path2(), Basis::T, 3);
        assert!(matches!(
            decompose_t(&f, 2),
            Err(Error::NotUniqueRegime { n: 3, max_edges: 2 })
        ));
        assert!(matches!(
            decompose_t(&var(4, 0, 1), 1),
            Err(Error::NotClassFunction { .. })
        ));
        assert!(matches!(
            decompose_t(&density_polynomial::<Rational>(&path2(), Basis::T, 4), 1),
            Err(Error::DegreeTooHigh {
                degree: 2,
                max_degree: 1
            })
        ));
    }

    #[test]
    fn pullback_matches_blow_up_evaluation() {
        let f = density_polynomial::<Rational>(&path2(), Basis::T, 4)
            .plus(&var(4, 0, 3).times(&var(4, 1, 2)).unwrap())
            .unwrap();
        let pulled = f.pullback_through_blow_up(2).unwrap();
        assert_eq!(pulled.ambient_n(), 2);
        for seed in 0..4 {
            let a: WeightedMatrix<Rational> = random_matrix(2, seed, ValueMode::RationalGrid);
            assert_eq!(
                pulled.evaluate(&a).unwrap(),
                f.evaluate(&a.blow_up(2).unwrap()).unwrap()
            );
        }
        assert!(f.pullback_through_blow_up(3).is_err());
        assert!(f.pullback_through_blow_up(0).is_err());
    }

    #[test]
    fn monomial_supports_are_disjoint() {
        for d in 1..=3 {
            let family = enumerate(d, Some(5));
            let supports: Vec<Vec<Monomial>> = family
                .iter()
                .map(|h| {
                    density_polynomial::<Rational>(h, Basis::TInj, 5)
                        .terms()
                        .map(|(m, _)| m.clone())
                        .collect()
                })
                .collect();
            for i in 0..supports.len() {
                for j in (i + 1)..supports.len() {
                    assert!(supports[i].iter().all(|m| !supports[j].contains(m)));
                }
            }
        }
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_rank::<Rational>(&basis_up_to(2), 4, 12, 7), 5);
        assert_eq!(independence_rank::<Rational>(&[path2()], 2, 3, 1), 1);
        let five = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        // t need not vanish even though t^inj does on 4 vertices
        assert_eq!(independence_rank::<Rational>(&[five], 4, 3, 1), 1);
    }
}
