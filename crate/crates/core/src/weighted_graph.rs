//! Symmetric zero-diagonal matrices viewed as edge-weighted complete graphs
//! and as step graphons on `[0,1]^2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symmetric `n x n` matrix with zero diagonal.
///
/// `unit_range` records whether every entry lies in `[0,1]`, i.e. whether
/// the matrix is a weighted graph whose step function is a graphon.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMatrix<T> {
    n: usize,
    entries: Vec<T>,
    unit_range: bool,
}

/// A perturbation direction: symmetric, zero diagonal, unrestricted entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectionMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Value distribution for [`random_matrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueMode {
    /// Entries in `{0, 1/8, ..., 1}`.
    RationalGrid,
    /// Entries in `{0, 1}`.
    ZeroOne,
    /// Entries in `{1/8, ..., 7/8}`; every direction is admissible.
    InteriorGrid,
    /// Entries in `{-1, -7/8, ..., 1}`.
    SignedGrid,
}

fn validate_rows<T: Scalar>(rows: Vec<Vec<T>>) -> Result<(usize, Vec<T>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        if !row[i].is_zero() {
            return Err(Error::NonzeroDiagonal { i: i + 1 });
        }
        if let Some(j) = (i + 1..n).find(|&j| row[j] != rows[j][i]) {
            return Err(Error::Asymmetric { i: i + 1, j: j + 1 });
        }
    }
    Ok((n, rows.into_iter().flatten().collect()))
}

fn symmetric_from_fn<T: Scalar>(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Vec<T> {
    let mut entries = vec![T::zero(); n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let value = f(i, j);
            entries[i * n + j] = value.clone();
            entries[j * n + i] = value;
        }
    }
    entries
}

impl<T: Scalar> WeightedMatrix<T> {
    /// Validates a square array: zero diagonal, symmetric.
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let (n, entries) = validate_rows(rows)?;
        Ok(Self::from_entries(n, entries))
    }

    fn from_entries(n: usize, entries: Vec<T>) -> Self {
        let unit_range = entries.iter().all(T::in_unit_interval);
        WeightedMatrix {
            n,
            entries,
            unit_range,
        }
    }

    /// Builds the matrix whose `(i, j)` entry for `i < j` is `f(i, j)`.
    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> T) -> Self {
        Self::from_entries(n, symmetric_from_fn(n, f))
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn in_unit_range(&self) -> bool {
        self.unit_range
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero() || x.is_one())
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> WeightedMatrix<U> {
        WeightedMatrix::from_entries(self.n, self.entries.iter().map(f).collect())
    }

    /// Value of the step function `f_a(x, y) = a[ceil(n x)][ceil(n y)]`
    /// (1-based cells), which is 0 when `x` or `y` is 0.
    pub fn step_graphon_eval(&self, x: &T, y: &T) -> Result<T> {
        if !x.in_unit_interval() || !y.in_unit_interval() {
            return Err(Error::OutsideUnitSquare {
                x: x.to_string(),
                y: y.to_string(),
            });
        }
        if x.is_zero() || y.is_zero() {
            return Ok(T::zero());
        }
        let n = T::from_count(self.n);
        let cell = |t: &T| {
            (n.clone() * t.clone())
                .ceil_index()
                .map(|c| c.clamp(1, self.n) - 1)
                .expect("coordinate in (0,1]")
        };
        Ok(self.get(cell(x), cell(y)).clone())
    }

    /// The `kn x kn` matrix replacing each vertex by `k` clones. Clones of
    /// one vertex are joined with weight `a[i][i] = 0`.
    pub fn blow_up(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroBlowUp);
        }
        Ok(Self::from_fn(self.n * k, |p, q| {
            self.get(p / k, q / k).clone()
        }))
    }

    /// The matrix `b` with `b[sigma[i]][sigma[j]] = a[i][j]`.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self> {
        check_permutation(sigma, self.n)?;
        let mut inverse = vec![0; self.n];
        for (i, &s) in sigma.iter().enumerate() {
            inverse[s] = i;
        }
        Ok(Self::from_fn(self.n, |p, q| {
            self.get(inverse[p], inverse[q]).clone()
        }))
    }

    /// True iff `a + eps g` has entries in `[0,1]` for some `eps > 0`.
    pub fn check_admissible(&self, g: &DirectionMatrix<T>) -> Result<bool> {
        if !self.unit_range {
            return Err(Error::NotUnitRange);
        }
        if g.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: g.n,
            });
        }
        let ok = self
            .entries
            .iter()
            .zip(&g.entries)
            .all(|(a, g)| !(a.is_zero() && g.is_negative() || a.is_one() && g.is_positive()));
        Ok(ok)
    }

    /// `a + sum_i lambda_i g_i`.
    pub fn perturbed(&self, terms: &[(T, &DirectionMatrix<T>)]) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (lambda, g) in terms {
            if g.n != self.n {
                return Err(Error::SizeMismatch {
                    expected: self.n,
                    found: g.n,
                });
            }
            for (e, d) in entries.iter_mut().zip(&g.entries) {
                *e = e.clone() + lambda.clone() * d.clone();
            }
        }
        Ok(Self::from_entries(self.n, entries))
    }

    /// Entrywise difference `self - other`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self::from_entries(self.n, entries))
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|a| a.clone() * factor.clone())
            .collect();
        Self::from_entries(self.n, entries)
    }
}

impl<T: Scalar> DirectionMatrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let (n, entries) = validate_rows(rows)?;
        Ok(DirectionMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> T) -> Self {
        DirectionMatrix {
            n,
            entries: symmetric_from_fn(n, f),
        }
    }

    /// The coordinate direction for the pair `{i, j}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let key = (i.min(j), i.max(j));
        Self::from_fn(n, |p, q| if (p, q) == key { T::one() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn negated(&self) -> Self {
        DirectionMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DirectionMatrix<U> {
        DirectionMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar> From<WeightedMatrix<T>> for DirectionMatrix<T> {
    fn from(a: WeightedMatrix<T>) -> Self {
        DirectionMatrix {
            n: a.n,
            entries: a.entries,
        }
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "length {} for size {n}",
            sigma.len()
        )));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::InvalidPermutation(format!(
                "{sigma:?} is not a bijection of 0..{n}"
            )));
        }
        seen[s] = true;
    }
    Ok(())
}

fn grid_value<T: Scalar>(rng: &mut impl Rng, mode: ValueMode) -> T {
    match mode {
        ValueMode::RationalGrid => T::from_ratio(rng.gen_range(0..=8), 8),
        ValueMode::ZeroOne => T::from_ratio(rng.gen_range(0..=1), 1),
        ValueMode::InteriorGrid => T::from_ratio(rng.gen_range(1..=7), 8),
        ValueMode::SignedGrid => T::from_ratio(rng.gen_range(-8..=8), 8),
    }
}

/// Deterministic pseudo-random matrix; the output depends only on the arguments.
pub fn random_matrix<T: Scalar>(n: usize, seed: u64, mode: ValueMode) -> WeightedMatrix<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_matrix_with(n, &mut rng, mode)
}

pub fn random_matrix_with<T: Scalar>(
    n: usize,
    rng: &mut impl Rng,
    mode: ValueMode,
) -> WeightedMatrix<T> {
    WeightedMatrix::from_fn(n, |_, _| grid_value(rng, mode))
}

/// Random direction with entries in `{-1, -7/8, ..., 1}`.
pub fn random_direction_with<T: Scalar>(n: usize, rng: &mut impl Rng) -> DirectionMatrix<T> {
    DirectionMatrix::from_fn(n, |_, _| grid_value(rng, ValueMode::SignedGrid))
}
