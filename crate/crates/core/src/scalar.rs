//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! Densities, polynomials, norms and derivatives only need field
//! operations and an order, so they are written once over [`Scalar`] and
//! instantiated with exact rationals for verification work or with `f32`
//! / `f64` for numerical estimates.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An ordered field element usable as a matrix entry or coefficient.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// True when arithmetic is exact (no rounding).
    const EXACT: bool;

    /// The value `numer / denom`. `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// `ceil(self)` as an index, or `None` for negative or non-finite values.
    fn ceil_index(&self) -> Option<usize>;

    fn from_count(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }

    /// Zero test used by pivoting and rank computations.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn pow_u32(&self, exp: u32) -> Self {
        num_traits::pow(self.clone(), exp as usize)
    }

    fn in_unit_interval(&self) -> bool {
        *self >= Self::zero() && *self <= Self::one()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_f64(&self) -> f64 {
        match (self.numer().to_f64(), self.denom().to_f64()) {
            (Some(p), Some(q)) => p / q,
            _ => f64::NAN,
        }
    }

    fn ceil_index(&self) -> Option<usize> {
        if self.is_negative() {
            return None;
        }
        self.ceil().to_integer().to_usize()
    }
}

macro_rules! impl_float_scalar {
    ($f:ty, $eps:expr) => {
        impl Scalar for $f {
            const EXACT: bool = false;

            fn from_ratio(numer: i64, denom: i64) -> Self {
                numer as $f / denom as $f
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn ceil_index(&self) -> Option<usize> {
                if !self.is_finite() || *self < 0.0 {
                    return None;
                }
                Some(self.ceil() as usize)
            }

            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }
        }
    };
}

impl_float_scalar!(f32, 1e-5);
impl_float_scalar!(f64, 1e-12);

/// Exact rational number used throughout the verification pipelines.
pub type Rational = BigRational;

/// Shorthand for building a rational `p/q`.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::from_ratio(numer, denom)
}

/// Formats a rational as `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p/q` or an integer string into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
