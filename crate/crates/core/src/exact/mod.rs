//! Exact scalars: arbitrary-precision rationals and elements of cyclotomic
//! fields `Q(ζ_N)`.

mod cyclo;
pub mod linalg;
mod poly;
mod serde_impl;

pub use cyclo::CycNum;
pub use poly::{cyclotomic_polynomial, euler_phi, IntPoly};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Integer to [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a [`Rational`]. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::Integer::lcm(&a, &b)
}
