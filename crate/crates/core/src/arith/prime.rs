use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{gcd, Int};
use crate::error::{Error, Result};

/// Candidates examined by [`prime_in_progression`] before giving up.
pub const DEFAULT_PRIME_SEARCH_CAP: u64 = 10_000_000;

const SMALL_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

// Bases 2..=41 are exact below this bound (3.317e24).
const EXACT_BOUND: &str = "3317044064679887385961981";

// Used on top of SMALL_PRIMES above the exact bound.
const EXTRA_BASES: [u64; 7] = [43, 47, 53, 59, 61, 67, 71];

/// Miller–Rabin with fixed bases. Exact for `|n| < 3.3·10^24`; above that a
/// composite is reported prime with negligible but non-zero probability.
pub fn is_prime(n: &Int) -> bool {
    if !n.is_positive() {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let n = n.magnitude();
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let exact: BigUint = EXACT_BOUND.parse().expect("constant parses");
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let witness = |base: u64| -> bool {
        let mut x = BigUint::from(base).modpow(&d, n);
        if x == one || x == n_minus_one {
            return false;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                return false;
            }
        }
        true
    };
    if SMALL_PRIMES.iter().any(|&a| witness(a)) {
        return false;
    }
    if *n >= exact && EXTRA_BASES.iter().any(|&a| witness(a)) {
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest `t >= 0` such that `p = x_star + t·m` is prime and `p > lower`.
pub fn prime_in_progression(x_star: &Int, m: &Int, lower: &Int) -> Result<(Int, Int)> {
    prime_in_progression_capped(x_star, m, lower, DEFAULT_PRIME_SEARCH_CAP)
}

/// [`prime_in_progression`] with an explicit limit on candidates examined.
pub fn prime_in_progression_capped(
    x_star: &Int,
    m: &Int,
    lower: &Int,
    cap: u64,
) -> Result<(Int, Int)> {
    if !m.is_positive() {
        return Err(Error::invalid(format!("modulus {m} must be at least 1")));
    }
    if !gcd(x_star, m).is_one() {
        return Err(Error::invalid(format!(
            "gcd({x_star}, {m}) != 1, progression holds at most one prime"
        )));
    }
    let mut t = if x_star > lower {
        Int::zero()
    } else {
        (lower - x_star).div_floor(m) + 1
    };
    let mut p = x_star + &t * m;
    for _ in 0..cap {
        if is_prime(&p) {
            return Ok((t, p));
        }
        t += 1;
        p += m;
    }
    Err(Error::ResourceExhausted(format!(
        "no prime in {x_star} + t*{m} above {lower} within {cap} candidates"
    )))
}
