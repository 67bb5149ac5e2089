use std::fmt;

use super::{gcd, Int, Integral};
use crate::error::{Error, Result};

/// A `k×2` integer matrix with `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<[Int; 2]>,
}

impl IntMatrix {
    pub fn new(rows: Vec<[Int; 2]>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::invalid("matrix needs at least one row"));
        }
        Ok(IntMatrix { rows })
    }

    /// Builds from rows of arbitrary width; only width 2 is accepted.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| {
                <[Int; 2]>::try_from(r).map_err(|r| {
                    Error::invalid(format!("expected 2 columns, found {}", r.len()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(rows)
    }

    pub fn from_i64(rows: &[(i64, i64)]) -> Result<Self> {
        IntMatrix::new(
            rows.iter()
                .map(|&(a, b)| [Int::from(a), Int::from(b)])
                .collect(),
        )
    }

    pub fn rows(&self) -> &[[Int; 2]] {
        &self.rows
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, [a, b]) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

/// Invariant factors `(d1, d2)` of a two-column matrix.
///
/// `d1` is the gcd of the entries and `d1·d2` the gcd of the 2×2 minors;
/// `d2 = 0` when every minor vanishes. The rows span `Z×Z` iff the result is
/// `(1, 1)`.
pub fn smith_invariants(m: &IntMatrix) -> (Int, Int) {
    row_invariants(m.rows())
}

/// [`smith_invariants`] over any integer type.
pub fn row_invariants<T: Integral>(rows: &[[T; 2]]) -> (T, T) {
    let mut d1 = T::zero();
    for [a, b] in rows {
        d1 = gcd(&gcd(&d1, a), b);
    }
    let mut minors = T::zero();
    for (i, [a, b]) in rows.iter().enumerate() {
        for [c, d] in &rows[i + 1..] {
            let minor = a.clone() * d.clone() - b.clone() * c.clone();
            minors = gcd(&minors, &minor);
        }
    }
    if minors.is_zero() {
        (d1, T::zero())
    } else {
        let d2 = minors / d1.clone();
        (d1, d2)
    }
}
