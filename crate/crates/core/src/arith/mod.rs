//! Exact integer arithmetic shared by the graph modules: gcds and Bézout
//! coefficients, 2×2 matrices and elementary matrices, invariant factors of
//! two-column matrices, and prime search in arithmetic progressions.
//!
//! Most routines are generic over [`Integral`], so the same code runs on
//! [`Int`] (arbitrary precision) and on machine integers in exhaustive
//! searches.

mod matrix;
mod prime;
mod smith;

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

pub use matrix::{
    elementary_to_mat2, mat2_det, mat2_mul, matrix_product, ElementaryMatrix, Mat2, Row, Unit,
};
pub use prime::{
    is_prime, prime_in_progression, prime_in_progression_capped, DEFAULT_PRIME_SEARCH_CAP,
};
pub use smith::{row_invariants, smith_invariants, IntMatrix};

/// Arbitrary-precision signed integer.
pub use num_bigint::BigInt as Int;

/// Signed integer types the generic routines accept.
pub trait Integral: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

impl<T> Integral for T where T: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

/// Non-negative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<T: Integral>(a: &T, b: &T) -> T {
    a.gcd(b).abs()
}

/// Returns `(g, s, t)` with `g = gcd(a, b) >= 0` and `s·a + t·b = g`.
///
/// The coefficients are whatever the iterative algorithm produces; callers
/// check the identity rather than particular values.
pub fn ext_gcd<T: Integral>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.clone() / r.clone();
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Least-absolute-remainder division: `a = q·b + r` with `|r| <= |b|/2`.
///
/// When `|r| = |b|/2` exactly the positive remainder is returned.
///
/// # Panics
///
/// If `b` is zero.
pub fn nearest_division<T: Integral>(a: &T, b: &T) -> (T, T) {
    assert!(!b.is_zero(), "division by zero");
    let (q, r) = a.div_mod_floor(b);
    // Floor division leaves r with the sign of b and |r| < |b|; r - b has the
    // opposite sign and magnitude |b| - |r|.
    let two = T::one() + T::one();
    let twice = r.abs() * two;
    let babs = b.abs();
    if twice > babs || (twice == babs && r.is_negative()) {
        (q + T::one(), r - b.clone())
    } else {
        (q, r)
    }
}
