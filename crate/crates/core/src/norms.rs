//! Cut norm, L1 distance and a permutation-restricted cut distance for
//! step graphons given by weighted matrices.
//!
//! The cut-norm objective of a step function is bilinear in the fractional
//! memberships of the `n` cells, so its supremum is attained on unions of
//! whole cells: `||f_a||_cut = max_{S,T subset [n]} |sum_{S x T} a_ij| / n^2`.
//! For fixed `S` the best `T` takes every column with positive (or every
//! column with negative) partial sum, which leaves a `2^n` scan.

use num_integer::Integer;

use crate::combinatorics::permutations;
use crate::error::{Error, Result};
use crate::homdensity::t;
use crate::multigraph::Multigraph;
use crate::scalar::Scalar;
use crate::weighted_graph::WeightedMatrix;

pub const DEFAULT_CUT_NORM_LIMIT: usize = 16;
pub const CUT_DISTANCE_LIMIT: usize = 8;

/// Cut norm value with maximizing index sets (0-based, sorted).
#[derive(Clone, Debug, PartialEq)]
pub struct CutNormResult<T> {
    pub value: T,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Exact cut norm with the default size limit.
pub fn cut_norm_exact<T: Scalar>(a: &WeightedMatrix<T>) -> Result<CutNormResult<T>> {
    cut_norm_exact_with_limit(a, DEFAULT_CUT_NORM_LIMIT)
}

/// Exact cut norm. Ties are broken toward the smallest `S`, then the
/// smallest `T`, comparing index sets as bitmasks (bit `i` for index `i`).
pub fn cut_norm_exact_with_limit<T: Scalar>(
    a: &WeightedMatrix<T>,
    limit: usize,
) -> Result<CutNormResult<T>> {
    let n = a.size();
    if n > limit || n > 63 {
        return Err(Error::SizeOverLimit { size: n, limit });
    }
    let mut best = (T::zero(), 0u64, 0u64);
    let mut column_sums = vec![T::zero(); n];
    for s in 1u64..(1 << n) {
        column_sums.iter_mut().for_each(|c| *c = T::zero());
        for i in members(s, n) {
            for (j, c) in column_sums.iter_mut().enumerate() {
                *c = c.clone() + a.get(i, j).clone();
            }
        }
        let mut positive = (T::zero(), 0u64);
        let mut negative = (T::zero(), 0u64);
        for (j, c) in column_sums.iter().enumerate() {
            if c.is_positive() {
                positive = (positive.0 + c.clone(), positive.1 | 1 << j);
            } else if c.is_negative() {
                negative = (negative.0 - c.clone(), negative.1 | 1 << j);
            }
        }
        let candidate =
            if negative.0 > positive.0 || (negative.0 == positive.0 && negative.1 < positive.1) {
                negative
            } else {
                positive
            };
        if candidate.0 > best.0 {
            best = (candidate.0, s, candidate.1);
        }
    }
    let scale = T::from_count(n * n);
    Ok(CutNormResult {
        value: best.0 / scale,
        s: members(best.1, n),
        t: members(best.2, n),
    })
}

/// L1 distance between two step graphons.
#[derive(Clone, Debug, PartialEq)]
pub struct L1Distance<T> {
    /// `integral |f_a - f_b|` over `[0,1]^2`.
    pub full: T,
    /// The same integral restricted to cells lying off the diagonal blocks
    /// of both grids.
    pub off_diagonal_blocks: T,
}

/// `integral |f_a - f_b|` computed on the common refinement grid of size
/// `lcm(n_a, n_b)`; the sizes may differ.
pub fn l1_distance<T: Scalar>(a: &WeightedMatrix<T>, b: &WeightedMatrix<T>) -> L1Distance<T> {
    let (na, nb) = (a.size(), b.size());
    let m = na.lcm(&nb);
    let (ka, kb) = (m / na, m / nb);
    let mut full = T::zero();
    let mut off = T::zero();
    for p in 0..m {
        for q in 0..m {
            let (ap, aq, bp, bq) = (p / ka, q / ka, p / kb, q / kb);
            let diff = (a.get(ap, aq).clone() - b.get(bp, bq).clone()).abs();
            if ap != aq && bp != bq {
                off = off + diff.clone();
            }
            full = full + diff;
        }
    }
    let cell = T::from_count(m * m);
    L1Distance {
        full: full / cell.clone(),
        off_diagonal_blocks: off / cell,
    }
}

/// Upper bound on the cut distance from relabelings only.
#[derive(Clone, Debug, PartialEq)]
pub struct CutDistanceBound<T> {
    /// `min_sigma ||a - permute(b, sigma)||_cut`; an upper bound on the
    /// cut distance between the step graphons.
    pub value: T,
    pub permutation: Vec<usize>,
}

/// Minimum over vertex permutations of the cut norm of `a - b^sigma`.
pub fn cut_distance_perm<T: Scalar>(
    a: &WeightedMatrix<T>,
    b: &WeightedMatrix<T>,
) -> Result<CutDistanceBound<T>> {
    let n = a.size();
    if b.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: b.size(),
        });
    }
    if n > CUT_DISTANCE_LIMIT {
        return Err(Error::SizeOverLimit {
            size: n,
            limit: CUT_DISTANCE_LIMIT,
        });
    }
    let mut best: Option<CutDistanceBound<T>> = None;
    for sigma in permutations(n) {
        let value = cut_norm_exact(&a.difference(&b.permute(&sigma)?)?)?.value;
        if best.as_ref().is_none_or(|b| value < b.value) {
            let done = value.is_zero();
            best = Some(CutDistanceBound {
                value,
                permutation: sigma,
            });
            if done {
                break;
            }
        }
    }
    Ok(best.expect("at least the identity permutation"))
}

/// Checks `t(H, a) = t(H^simple, a)` for a `{0,1}`-valued matrix.
pub fn simplify_identity_check<T: Scalar>(h: &Multigraph, a: &WeightedMatrix<T>) -> Result<bool> {
    let n = a.size();
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if !(x.is_zero() || x.is_one()) {
                return Err(Error::NotZeroOne { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(t(h, a) == t(&h.collapse_simple(), a))
}
