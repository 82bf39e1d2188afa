//! Arbitrary-precision rational scalar and its decimal renderings.
//!
//! Every closed-form quantity in the crate is carried as an [`ExactScalar`].
//! Values are only turned into text at the edges: fixed-point, significant
//! digit and `mantissa(-p)` renderings all round half away from zero on the
//! exact rational, never on an intermediate float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn from_integer(value: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom`, reduced.
    ///
    /// Panics if `denom` is zero.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        Self(BigRational::new(numer, denom))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Self(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Nearest `f64`; only used for interpolation and plotting.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `"p/q"`, always with an explicit denominator.
    pub fn ratio_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Largest `e` with `10^e <= |self|`. `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let magnitude = self.0.abs();
        let digits = |v: &BigInt| v.to_string().trim_start_matches('-').len() as i64;
        let mut e = digits(magnitude.numer()) - digits(magnitude.denom());
        while pow10(e) > magnitude {
            e -= 1;
        }
        while pow10(e + 1) <= magnitude {
            e += 1;
        }
        Some(e)
    }

    /// `|self| * 10^places`, rounded half away from zero to an integer.
    fn scaled_magnitude(&self, places: i64) -> BigInt {
        let ten = BigInt::from(10u32);
        let (mut numer, mut denom) = (self.0.numer().abs(), self.0.denom().clone());
        if places >= 0 {
            numer *= num_traits::pow(ten, places as usize);
        } else {
            denom *= num_traits::pow(ten, (-places) as usize);
        }
        // floor((2p + q) / 2q) rounds a non-negative p/q half up.
        let twice = &numer * 2u32 + &denom;
        twice.div_floor(&(denom * 2u32))
    }

    fn sign_prefix(&self, magnitude: &BigInt) -> &'static str {
        if self.is_negative() && !magnitude.is_zero() {
            "-"
        } else {
            ""
        }
    }

    /// Fixed-point rendering with exactly `places` fractional digits.
    pub fn to_fixed(&self, places: u32) -> String {
        let magnitude = self.scaled_magnitude(i64::from(places));
        format!(
            "{}{}",
            self.sign_prefix(&magnitude),
            insert_point(&magnitude, places as usize)
        )
    }

    /// Positional rendering with exactly `digits` significant digits
    /// (trailing zeros kept).
    pub fn to_significant(&self, digits: u32) -> String {
        assert!(digits > 0, "at least one significant digit is required");
        let Some(exponent) = self.decimal_exponent() else {
            return insert_point(&BigInt::zero(), digits.saturating_sub(1) as usize);
        };
        let mut places = i64::from(digits) - 1 - exponent;
        let mut magnitude = self.scaled_magnitude(places);
        if magnitude >= pow10_int(i64::from(digits)) {
            // Rounding carried into a new leading digit.
            places -= 1;
            magnitude = self.scaled_magnitude(places);
        }
        let body = if places >= 0 {
            insert_point(&magnitude, places as usize)
        } else {
            (magnitude * pow10_int(-places)).to_string()
        };
        format!("{}{}", self.sign_prefix(&self.scaled_magnitude(places)), body)
    }

    /// `m.mmmm(-p)` shorthand for `m.mmmm × 10^-p`, with `mantissa_places`
    /// digits after the point. Values of magnitude one or more are rendered
    /// without the suffix.
    pub fn to_negative_exponent_shorthand(&self, mantissa_places: u32) -> String {
        let Some(exponent) = self.decimal_exponent() else {
            return self.to_fixed(mantissa_places);
        };
        if exponent >= 0 {
            return self.to_fixed(mantissa_places);
        }
        let mut shift = -exponent;
        let mut magnitude = self.scaled_magnitude(shift + i64::from(mantissa_places));
        if magnitude >= pow10_int(i64::from(mantissa_places) + 1) {
            shift -= 1;
            magnitude = self.scaled_magnitude(shift + i64::from(mantissa_places));
        }
        let mantissa = insert_point(&magnitude, mantissa_places as usize);
        if shift == 0 {
            format!("{}{}", self.sign_prefix(&magnitude), mantissa)
        } else {
            format!("{}{}(-{})", self.sign_prefix(&magnitude), mantissa, shift)
        }
    }
}

fn pow10_int(e: i64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

fn pow10(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow10_int(e))
    } else {
        BigRational::new(BigInt::one(), pow10_int(-e))
    }
}

/// Renders a non-negative integer `m` as `m / 10^places` in positional form.
fn insert_point(magnitude: &BigInt, places: usize) -> String {
    let mut digits = magnitude.to_string();
    if places == 0 {
        return digits;
    }
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let split = digits.len() - places;
    format!("{}.{}", &digits[..split], &digits[split..])
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for ExactScalar {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<u64> for ExactScalar {
    fn from(value: u64) -> Self {
        Self(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl PartialEq<i64> for ExactScalar {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for ExactScalar {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}
