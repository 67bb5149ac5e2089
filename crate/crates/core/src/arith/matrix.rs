use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use super::{Int, Integral};
use crate::error::{Error, Result};

/// A 2×2 matrix, row-major: `((a, b), (c, d))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T = Int> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Integral> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_rows(first: [T; 2], second: [T; 2]) -> Self {
        let [a, b] = first;
        let [c, d] = second;
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn first_row(&self) -> [T; 2] {
        [self.a.clone(), self.b.clone()]
    }

    pub fn second_row(&self) -> [T; 2] {
        [self.c.clone(), self.d.clone()]
    }

    pub fn neg(&self) -> Self {
        Mat2::new(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Inverse over the integers, defined only when `|det| = 1`.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return None;
        }
        // det = ±1 is its own inverse.
        Some(Mat2::new(
            self.d.clone() * det.clone(),
            -self.b.clone() * det.clone(),
            -self.c.clone() * det.clone(),
            self.a.clone() * det,
        ))
    }

    /// Row vector times matrix: `(x, y)·A`.
    pub fn apply_to_row(&self, row: &[T; 2]) -> [T; 2] {
        let [x, y] = row;
        [
            x.clone() * self.a.clone() + y.clone() * self.c.clone(),
            x.clone() * self.b.clone() + y.clone() * self.d.clone(),
        ]
    }

    pub fn mul_ref(&self, rhs: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
        )
    }
}

impl<T: Integral> Mul for &Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, rhs: &Mat2<T>) -> Mat2<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Integral> Mul for Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, rhs: Mat2<T>) -> Mat2<T> {
        self.mul_ref(&rhs)
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.a, self.b, self.c, self.d)
    }
}

pub fn mat2_mul<T: Integral>(a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
    a.mul_ref(b)
}

pub fn mat2_det<T: Integral>(a: &Mat2<T>) -> T {
    a.det()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    First,
    Second,
}

impl Row {
    pub fn other(self) -> Row {
        match self {
            Row::First => Row::Second,
            Row::Second => Row::First,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Row::First => 1,
            Row::Second => 2,
        }
    }

    pub fn from_index(i: u8) -> Result<Row> {
        match i {
            1 => Ok(Row::First),
            2 => Ok(Row::Second),
            _ => Err(Error::invalid(format!("row index {i} is not 1 or 2"))),
        }
    }
}

/// A unit of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Plus,
    Minus,
}

impl Unit {
    pub fn value(self) -> i32 {
        match self {
            Unit::Plus => 1,
            Unit::Minus => -1,
        }
    }
}

/// Generators of `GL(2, Z)`: the matrices obtained from the identity by one
/// elementary row operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementaryMatrix {
    /// Swap the two rows.
    Transposition,
    /// Multiply `row` by a unit.
    Dilation { row: Row, unit: Unit },
    /// Add `factor` times the other row to `row`, i.e. `T_ij(r)` with
    /// `i = row` and `j = row.other()`.
    Transvection { row: Row, factor: Int },
}

impl ElementaryMatrix {
    /// `T_ij(r)`; requires `{i, j} = {1, 2}`.
    pub fn transvection(i: u8, j: u8, r: Int) -> Result<Self> {
        let row = Row::from_index(i)?;
        if Row::from_index(j)? == row {
            return Err(Error::invalid("transvection needs i != j"));
        }
        Ok(ElementaryMatrix::Transvection { row, factor: r })
    }

    pub fn dilation(row: Row, unit: Unit) -> Self {
        ElementaryMatrix::Dilation { row, unit }
    }

    pub fn inverse(&self) -> Self {
        match self {
            ElementaryMatrix::Transvection { row, factor } => ElementaryMatrix::Transvection {
                row: *row,
                factor: -factor,
            },
            other => other.clone(),
        }
    }

    pub fn to_mat2(&self) -> Mat2 {
        self.apply_left(&Mat2::identity())
    }

    /// `X·M`: performs this row operation on `m`.
    pub fn apply_left(&self, m: &Mat2) -> Mat2 {
        match self {
            ElementaryMatrix::Transposition => {
                Mat2::new(m.c.clone(), m.d.clone(), m.a.clone(), m.b.clone())
            }
            ElementaryMatrix::Dilation { unit: Unit::Plus, .. } => m.clone(),
            ElementaryMatrix::Dilation {
                row: Row::First,
                unit: Unit::Minus,
            } => Mat2::new(-m.a.clone(), -m.b.clone(), m.c.clone(), m.d.clone()),
            ElementaryMatrix::Dilation {
                row: Row::Second,
                unit: Unit::Minus,
            } => Mat2::new(m.a.clone(), m.b.clone(), -m.c.clone(), -m.d.clone()),
            ElementaryMatrix::Transvection {
                row: Row::First,
                factor,
            } => Mat2::new(
                &m.a + factor * &m.c,
                &m.b + factor * &m.d,
                m.c.clone(),
                m.d.clone(),
            ),
            ElementaryMatrix::Transvection {
                row: Row::Second,
                factor,
            } => Mat2::new(
                m.a.clone(),
                m.b.clone(),
                &m.c + factor * &m.a,
                &m.d + factor * &m.b,
            ),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            ElementaryMatrix::Transposition => false,
            ElementaryMatrix::Dilation { unit, .. } => *unit == Unit::Plus,
            ElementaryMatrix::Transvection { factor, .. } => factor.is_zero(),
        }
    }
}

impl fmt::Display for ElementaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMatrix::Transposition => write!(f, "P12"),
            ElementaryMatrix::Dilation { row, unit } => {
                write!(f, "D{}({})", row.index(), unit.value())
            }
            ElementaryMatrix::Transvection { row, factor } => {
                write!(f, "T{}{}({})", row.index(), row.other().index(), factor)
            }
        }
    }
}

pub fn elementary_to_mat2(x: &ElementaryMatrix) -> Mat2 {
    x.to_mat2()
}

/// `J1·J2·…·Jt` for the factors in order.
pub fn matrix_product(factors: &[ElementaryMatrix]) -> Mat2 {
    factors
        .iter()
        .rev()
        .fold(Mat2::identity(), |acc, x| x.apply_left(&acc))
}

impl Mat2 {
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(Int::from(a), Int::from(b), Int::from(c), Int::from(d))
    }
}

impl<T: Integral> Default for Mat2<T> {
    fn default() -> Self {
        Mat2::identity()
    }
}
