//! Homomorphism densities `t(H, a)`, injective densities `t^inj(H, a)`, and
//! the unit lower-triangular change of basis between them.
//!
//! Two engines compute `t`: [`t_brute_force`] sums over all `n^|V(H)|`
//! vertex tuples and is the reference semantics; [`t`] eliminates the
//! vertices of `H` one at a time (minimum degree first) and is what the
//! rest of the crate calls. Both are exact for exact scalars.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::combinatorics::{for_each_injective_tuple, for_each_tuple};
use crate::error::{Error, Result};
use crate::linalg::unit_lower_inverse;
use crate::multigraph::Multigraph;
use crate::scalar::Scalar;
use crate::weighted_graph::WeightedMatrix;

/// Which family of density functions a coefficient vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Homomorphism densities `t(H, -)`.
    T,
    /// Injective densities `t^inj(H, -)`.
    TInj,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::T => "t",
            Basis::TInj => "tinj",
        }
    }
}

/// Finite linear combination `sum_H c_H t(H, -)` (or of `t^inj`) on
/// matrices of size `ambient_n`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityCoefficients<T> {
    basis: Basis,
    ambient_n: usize,
    coeffs: BTreeMap<Multigraph, T>,
}

impl<T: Scalar> DensityCoefficients<T> {
    pub fn new(basis: Basis, ambient_n: usize) -> Self {
        DensityCoefficients {
            basis,
            ambient_n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_pairs(
        basis: Basis,
        ambient_n: usize,
        pairs: impl IntoIterator<Item = (Multigraph, T)>,
    ) -> Self {
        let mut out = Self::new(basis, ambient_n);
        for (h, c) in pairs {
            out.add(h, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Adds `c` to the coefficient of `h`.
    pub fn add(&mut self, h: Multigraph, c: T) {
        let entry = self.coeffs.entry(h).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn get(&self, h: &Multigraph) -> T {
        self.coeffs.get(h).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multigraph, &T)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest edge count among the stored multigraphs.
    pub fn max_edges(&self) -> u32 {
        self.coeffs
            .keys()
            .map(Multigraph::edge_count)
            .max()
            .unwrap_or(0)
    }

    pub fn max_vertices(&self) -> usize {
        self.coeffs
            .keys()
            .map(Multigraph::vertex_count)
            .max()
            .unwrap_or(0)
    }

    /// Value of the combination at `a`.
    pub fn evaluate(&self, a: &WeightedMatrix<T>) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, (h, c)| {
            let value = match self.basis {
                Basis::T => t(h, a),
                Basis::TInj => t_inj(h, a),
            };
            acc + c.clone() * value
        })
    }
}

fn normalizer<T: Scalar>(n: usize, vertices: usize) -> T {
    T::one() / T::from_count(n).pow_u32(vertices as u32)
}

fn tuple_weight<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>, tuple: &[usize]) -> T {
    h.edges().iter().fold(T::one(), |acc, &(u, v, m)| {
        acc * a.get(tuple[u], tuple[v]).pow_u32(m)
    })
}

/// Reference engine: `n^-|V(H)|` times the sum over all vertex tuples of
/// the product of edge weights. `t(empty, a) = 1`.
pub fn t_brute_force<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>) -> T {
    let n = a.size();
    let mut total = T::zero();
    for_each_tuple(n, h.vertex_count(), |tuple| {
        total = total.clone() + tuple_weight(h, a, tuple);
    });
    total * normalizer(n, h.vertex_count())
}

/// Injective density: the same sum restricted to pairwise-distinct tuples.
pub fn t_inj<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>) -> T {
    let n = a.size();
    let mut total = T::zero();
    for_each_injective_tuple(n, h.vertex_count(), |tuple| {
        total = total.clone() + tuple_weight(h, a, tuple);
    });
    total * normalizer(n, h.vertex_count())
}

struct Factor<T> {
    vars: Vec<usize>,
    table: Vec<T>,
}

impl<T: Scalar> Factor<T> {
    fn value(&self, assignment: &[usize], n: usize) -> &T {
        let index = self.vars.iter().fold(0, |idx, &v| idx * n + assignment[v]);
        &self.table[index]
    }
}

/// Homomorphism density by vertex elimination.
///
/// Each edge contributes an `n x n` factor `a^m`; vertices are summed out
/// in minimum-degree order (ties to the lowest label), producing factors
/// over the eliminated vertex's neighbours.
pub fn t<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>) -> T {
    let n = a.size();
    let vertices = h.vertex_count();
    let mut factors: Vec<Factor<T>> = h
        .edges()
        .iter()
        .map(|&(u, v, m)| {
            let mut table = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    table.push(a.get(x, y).pow_u32(m));
                }
            }
            Factor {
                vars: vec![u, v],
                table,
            }
        })
        .collect();

    let mut alive = vec![true; vertices];
    let mut assignment = vec![0usize; vertices];
    for _ in 0..vertices {
        let neighbourhood = |v: usize| {
            let mut scope: Vec<usize> = factors
                .iter()
                .filter(|f| f.vars.contains(&v))
                .flat_map(|f| f.vars.iter().copied())
                .filter(|&w| w != v)
                .collect();
            scope.sort_unstable();
            scope.dedup();
            scope
        };
        let vertex = (0..vertices)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (neighbourhood(v).len(), v))
            .expect("a live vertex remains");
        let scope = neighbourhood(vertex);
        let (involved, rest): (Vec<_>, Vec<_>) =
            factors.into_iter().partition(|f| f.vars.contains(&vertex));

        let mut table = Vec::with_capacity(n.pow(scope.len() as u32));
        for_each_tuple(n, scope.len(), |values| {
            for (&var, &val) in scope.iter().zip(values) {
                assignment[var] = val;
            }
            let mut sum = T::zero();
            for x in 0..n {
                assignment[vertex] = x;
                let product = involved
                    .iter()
                    .fold(T::one(), |acc, f| acc * f.value(&assignment, n).clone());
                sum = sum + product;
            }
            table.push(sum);
        });
        factors = rest;
        factors.push(Factor { vars: scope, table });
        alive[vertex] = false;
    }

    let total = factors
        .iter()
        .fold(T::one(), |acc, f| acc * f.table[0].clone());
    total * normalizer(n, vertices)
}

/// `t(H, f_a)` computed on the step graphon: the integral over
/// `[0,1]^V(H)` splits into cells of volume `n^-|V(H)|`, and the integrand
/// is read off [`WeightedMatrix::step_graphon_eval`] at each cell's centre.
pub fn graphon_density<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>) -> T {
    let n = a.size();
    let centre = |b: usize| T::from_ratio(2 * b as i64 + 1, 2 * n as i64);
    let mut total = T::zero();
    for_each_tuple(n, h.vertex_count(), |cells| {
        let points: Vec<T> = cells.iter().map(|&b| centre(b)).collect();
        let product = h.edges().iter().fold(T::one(), |acc, &(u, v, m)| {
            let value = a
                .step_graphon_eval(&points[u], &points[v])
                .expect("cell centres lie in (0,1)");
            acc * value.pow_u32(m)
        });
        total = total.clone() + product;
    });
    total * normalizer(n, h.vertex_count())
}

/// Coefficients `lambda` with `t(H, a) = sum lambda_H' t^inj(H', a)` on
/// `n x n` matrices: each loopless quotient `H/P` contributes
/// `n^(|V(H/P)| - |V(H)|)`.
pub fn t_to_tinj<T: Scalar>(h: &Multigraph, ambient_n: usize) -> DensityCoefficients<T> {
    let mut out = DensityCoefficients::new(Basis::TInj, ambient_n);
    let n = T::from_count(ambient_n);
    for (_, quotient) in h.loopless_quotients() {
        let drop = (h.vertex_count() - quotient.vertex_count()) as u32;
        out.add(quotient, T::one() / n.pow_u32(drop));
    }
    out
}

/// Direction of a [`TransformMatrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformDirection {
    /// Row `H` expresses `t(H, -)` in the `t^inj` basis.
    TFromTInj,
    /// Row `H` expresses `t^inj(H, -)` in the `t` basis.
    TInjFromT,
}

/// Unit lower-triangular change-of-basis matrix over an ordered basis.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformMatrix<T> {
    basis: Vec<Multigraph>,
    entries: Vec<Vec<T>>,
    ambient_n: usize,
    direction: TransformDirection,
}

impl<T: Scalar> TransformMatrix<T> {
    pub fn basis(&self) -> &[Multigraph] {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row][col]
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn direction(&self) -> TransformDirection {
        self.direction
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| match j.cmp(&i) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => x.is_one(),
                std::cmp::Ordering::Greater => x.is_zero(),
            })
        })
    }
}

/// Builds the change-of-basis matrix on `basis`, which must be sorted by
/// vertex count and closed under loopless quotients.
pub fn transform_matrix<T: Scalar>(
    basis: &[Multigraph],
    ambient_n: usize,
    direction: TransformDirection,
) -> Result<TransformMatrix<T>> {
    for (position, pair) in basis.windows(2).enumerate() {
        if pair[0].vertex_count() > pair[1].vertex_count() {
            return Err(Error::BasisUnsorted {
                position: position + 2,
            });
        }
    }
    if direction == TransformDirection::TInjFromT {
        if let Some(h) = basis.iter().find(|h| h.vertex_count() > ambient_n) {
            return Err(Error::TooManyVertices {
                vertices: h.vertex_count(),
                ambient_n,
            });
        }
    }
    let index: HashMap<&Multigraph, usize> =
        basis.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let size = basis.len();
    let mut lower = vec![vec![T::zero(); size]; size];
    for (row, h) in basis.iter().enumerate() {
        for (quotient, lambda) in t_to_tinj::<T>(h, ambient_n).iter() {
            let col = *index.get(quotient).ok_or_else(|| Error::BasisNotClosed {
                element: h.to_string(),
                missing: quotient.to_string(),
            })?;
            lower[row][col] = lambda.clone();
        }
    }
    let entries = match direction {
        TransformDirection::TFromTInj => lower,
        TransformDirection::TInjFromT => unit_lower_inverse(&lower),
    };
    Ok(TransformMatrix {
        basis: basis.to_vec(),
        entries,
        ambient_n,
        direction,
    })
}
