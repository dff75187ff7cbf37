//! Dense Gaussian elimination over a [`Scalar`] field.

use crate::scalar::Scalar;

/// Rank of a dense matrix (rows of equal length).
pub fn rank<T: Scalar>(mut rows: Vec<Vec<T>>) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        // Largest magnitude pivot: exact types only need a nonzero one, but
        // this keeps float instantiations stable as well.
        let pivot = (rank..height)
            .filter(|&r| !rows[r][col].is_negligible())
            .max_by(|&a, &b| {
                rows[a][col]
                    .abs()
                    .partial_cmp(&rows[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot_row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse of a unit lower-triangular matrix by forward substitution.
pub fn unit_lower_inverse<T: Scalar>(lower: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = lower.len();
    let mut inv = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = T::one();
        for j in 0..i {
            let mut acc = T::zero();
            for (k, inv_row) in inv.iter().enumerate().take(i).skip(j) {
                acc = acc + lower[i][k].clone() * inv_row[j].clone();
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let inner = b.len();
    let width = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..width)
                .map(|j| {
                    (0..inner).fold(T::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(q(&[&[1, 2], &[3, 4], &[5, 6]])), 2);
        assert_eq!(rank(q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank::<Rational>(Vec::new()), 0);
        assert_eq!(rank(vec![vec![1.0, 2.0], vec![2.0, 4.0 + 1e-15]]), 1);
    }

    #[test]
    fn unit_lower_inverse_is_inverse() {
        let l = vec![
            vec![ratio(1, 1), ratio(0, 1), ratio(0, 1)],
            vec![ratio(1, 4), ratio(1, 1), ratio(0, 1)],
            vec![ratio(-2, 3), ratio(5, 7), ratio(1, 1)],
        ];
        let inv = unit_lower_inverse(&l);
        assert_eq!(mat_mul(&l, &inv), q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(mat_mul(&inv, &l), q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    }
}
