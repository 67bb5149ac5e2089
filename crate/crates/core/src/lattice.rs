//! The generating graph of `Z × Z`.
//!
//! `(a, b)` and `(x, y)` are adjacent iff `ay − bx = ±1`, so edges correspond
//! to matrices in `GL(2, Z)` up to swapping rows. Right multiplication by
//! any such matrix is a graph automorphism.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    ext_gcd, gcd, matrix_product, nearest_division, ElementaryMatrix, Int, Mat2, Row, Unit,
};
use crate::error::{Error, Result};

/// Largest box half-width accepted by [`bounded_bfs_distance`].
pub const MAX_BFS_BOX: i64 = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVertex {
    pub a: Int,
    pub b: Int,
}

impl LatticeVertex {
    pub fn new(a: Int, b: Int) -> Self {
        LatticeVertex { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        LatticeVertex::new(Int::from(a), Int::from(b))
    }

    pub fn from_row(row: [Int; 2]) -> Self {
        let [a, b] = row;
        LatticeVertex { a, b }
    }

    pub fn row(&self) -> [Int; 2] {
        [self.a.clone(), self.b.clone()]
    }

    pub fn neg(&self) -> Self {
        LatticeVertex::new(-&self.a, -&self.b)
    }

    pub fn to_i64(&self) -> Option<(i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?))
    }

    /// `v·A`.
    pub fn times(&self, m: &Mat2) -> Self {
        LatticeVertex::from_row(m.apply_to_row(&self.row()))
    }
}

impl fmt::Display for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn det(v: &LatticeVertex, w: &LatticeVertex) -> Int {
    &v.a * &w.b - &v.b * &w.a
}

pub fn is_adjacent_lattice(v: &LatticeVertex, w: &LatticeVertex) -> bool {
    det(v, w).abs().is_one()
}

pub fn is_nonisolated_lattice(v: &LatticeVertex) -> bool {
    gcd(&v.a, &v.b).is_one()
}

fn require_nonisolated(v: &LatticeVertex) -> Result<()> {
    if !is_nonisolated_lattice(v) {
        return Err(Error::isolated(v));
    }
    Ok(())
}

/// `(x, y)` with `a·y − b·x = 1`, read off the Bézout coefficients of
/// `(a, b)`.
pub fn find_witness_lattice(v: &LatticeVertex) -> Result<LatticeVertex> {
    let (g, s, t) = ext_gcd(&v.a, &v.b);
    if !g.is_one() {
        return Err(Error::isolated(v));
    }
    Ok(LatticeVertex::new(-t, s))
}

/// Neighbours `(k·a ± x0, k·b ± y0)` for `|k| <= limit`, sorted and
/// deduplicated, where `(x0, y0)` is [`find_witness_lattice`]'s witness.
pub fn neighborhood(v: &LatticeVertex, limit: u64) -> Result<Vec<LatticeVertex>> {
    let w = find_witness_lattice(v)?;
    let limit = Int::from(limit);
    let mut out = Vec::new();
    let mut k = -limit.clone();
    while k <= limit {
        let (ka, kb) = (&k * &v.a, &k * &v.b);
        out.push(LatticeVertex::new(&ka + &w.a, &kb + &w.b));
        out.push(LatticeVertex::new(&ka - &w.a, &kb - &w.b));
        k += 1;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn transvection(row: Row, factor: Int) -> ElementaryMatrix {
    ElementaryMatrix::Transvection { row, factor }
}

/// Elementary matrices `J1, …, Jt` with `A = J1·…·Jt`.
///
/// Row reduction on the first column with least-absolute-remainder
/// transvections, finished by sign dilations and one transvection. No
/// transpositions are produced.
pub fn factor_elementary(a: &Mat2) -> Result<Vec<ElementaryMatrix>> {
    if !a.is_unimodular() {
        return Err(Error::invalid(format!(
            "{a} has determinant {}, expected ±1",
            a.det()
        )));
    }
    let mut m = a.clone();
    let mut steps = Vec::new();
    let mut apply = |x: ElementaryMatrix, m: &mut Mat2| {
        if !x.is_identity() {
            *m = x.apply_left(m);
            steps.push(x);
        }
    };
    while !m.a.abs().is_one() && !m.c.abs().is_one() {
        // gcd(a, c) = 1, so neither entry is 0 here.
        if m.a.abs() >= m.c.abs() {
            let (q, _) = nearest_division(&m.a, &m.c);
            apply(transvection(Row::First, -q), &mut m);
        } else {
            let (q, _) = nearest_division(&m.c, &m.a);
            apply(transvection(Row::Second, -q), &mut m);
        }
    }
    if m.a.abs().is_one() {
        let f = -(&m.c * &m.a);
        apply(transvection(Row::Second, f), &mut m);
    } else {
        let f = -((&m.a - Int::one()) * &m.c);
        apply(transvection(Row::First, f), &mut m);
        let f = -m.c.clone();
        apply(transvection(Row::Second, f), &mut m);
    }
    if m.a.is_negative() {
        apply(ElementaryMatrix::dilation(Row::First, Unit::Minus), &mut m);
    }
    if m.d.is_negative() {
        apply(ElementaryMatrix::dilation(Row::Second, Unit::Minus), &mut m);
    }
    let f = -m.b.clone();
    apply(transvection(Row::First, f), &mut m);
    if m != Mat2::identity() {
        return Err(Error::verification(format!("row reduction of {a} ended at {m}")));
    }
    let factors: Vec<ElementaryMatrix> = steps.iter().map(ElementaryMatrix::inverse).collect();
    if matrix_product(&factors) != *a {
        return Err(Error::verification(format!("factors of {a} do not multiply back")));
    }
    Ok(factors)
}

/// Path in `Γ(Z × Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub vertices: Vec<LatticeVertex>,
}

impl LatticePath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// Every consecutive pair is adjacent.
    pub fn is_valid(&self) -> bool {
        self.vertices
            .windows(2)
            .all(|p| is_adjacent_lattice(&p[0], &p[1]))
    }

    pub fn map(&self, m: &Mat2) -> LatticePath {
        LatticePath {
            vertices: self.vertices.iter().map(|v| v.times(m)).collect(),
        }
    }

    /// Cuts out every cycle, keeping the endpoints.
    pub fn without_loops(&self) -> LatticePath {
        let mut out: Vec<LatticeVertex> = Vec::new();
        let mut seen: HashMap<LatticeVertex, usize> = HashMap::new();
        for v in &self.vertices {
            if let Some(&i) = seen.get(v) {
                for dropped in out.drain(i + 1..) {
                    seen.remove(&dropped);
                }
            } else {
                seen.insert(v.clone(), out.len());
                out.push(v.clone());
            }
        }
        LatticePath { vertices: out }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " - ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn row_of(m: &Mat2, r: Row) -> LatticeVertex {
    LatticeVertex::from_row(match r {
        Row::First => m.first_row(),
        Row::Second => m.second_row(),
    })
}

/// A path from `(1, 0)` to `v`.
///
/// Factors the matrix with rows `v` and its witness and rebuilds it from the
/// identity one elementary factor at a time. The two rows stay adjacent
/// throughout; the walk moves to the untouched row whenever the row it sits
/// on is modified.
pub fn path_to_basis(v: &LatticeVertex) -> Result<LatticePath> {
    let w = find_witness_lattice(v)?;
    let target = Mat2::from_rows(v.row(), w.row());
    let factors = factor_elementary(&target)?;
    let mut current = Mat2::identity();
    let mut cursor = Row::First;
    let mut walk = vec![row_of(&current, cursor)];
    for x in factors.iter().rev() {
        current = x.apply_left(&current);
        match x {
            ElementaryMatrix::Transposition => cursor = cursor.other(),
            ElementaryMatrix::Dilation { row, .. } | ElementaryMatrix::Transvection { row, .. } => {
                if *row == cursor {
                    cursor = cursor.other();
                    walk.push(row_of(&current, cursor));
                }
            }
        }
    }
    if cursor == Row::Second {
        walk.push(row_of(&current, Row::First));
    }
    let path = LatticePath { vertices: walk }.without_loops();
    if !path.is_valid() || path.vertices.last() != Some(v) {
        return Err(Error::verification(format!("walk to {v} is not a valid path: {path}")));
    }
    Ok(path)
}

/// `A` with `|det A| = 1` and `v·A = (0, 1)`.
pub fn normalize_to_base(v: &LatticeVertex) -> Result<Mat2> {
    let mut u = find_witness_lattice(v)?;
    if u.a.is_negative() || (u.a.is_zero() && u.b.is_negative()) {
        u = u.neg();
    }
    let b = Mat2::from_rows(u.row(), v.row());
    b.inverse()
        .ok_or_else(|| Error::verification(format!("{b} is not invertible")))
}

fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -Integer::div_floor(&-a, &b)
}

/// Range of `k` keeping `k·x + x0` inside `[−m, m]`; `None` if empty.
fn k_range(x: i64, x0: i64, m: i64) -> Option<(i64, i64)> {
    if x == 0 {
        return (x0.abs() <= m).then_some((i64::MIN, i64::MAX));
    }
    let (lo, hi) = if x > 0 {
        (ceil_div(-m - x0, x), floor_div(m - x0, x))
    } else {
        (ceil_div(m - x0, x), floor_div(-m - x0, x))
    };
    (lo <= hi).then_some((lo, hi))
}

/// Neighbours of a non-isolated `(x, y)` with both coordinates in
/// `[−m, m]`, sorted.
pub fn box_neighbors(x: i64, y: i64, m: i64) -> Vec<(i64, i64)> {
    let (g, s, t) = ext_gcd(&x, &y);
    debug_assert_eq!(g, 1);
    let (x0, y0) = (-t, s);
    let mut out = Vec::new();
    for (sx, sy) in [(x0, y0), (-x0, -y0)] {
        let (Some((l1, h1)), Some((l2, h2))) = (k_range(x, sx, m), k_range(y, sy, m)) else {
            continue;
        };
        for k in l1.max(l2)..=h1.min(h2) {
            out.push((k * x + sx, k * y + sy));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn boxed(v: &LatticeVertex, m: i64) -> Result<(i64, i64)> {
    match v.to_i64() {
        Some((a, b)) if a.abs() <= m && b.abs() <= m => Ok((a, b)),
        _ => Err(Error::invalid(format!("{v} lies outside the box of half-width {m}"))),
    }
}

/// Distance from `v` to `w` in the subgraph induced on `[−m, m]²`, or
/// `None` if `w` is unreachable inside the box. Always at least the true
/// distance.
pub fn bounded_bfs_distance(v: &LatticeVertex, w: &LatticeVertex, m: i64) -> Result<Option<usize>> {
    require_nonisolated(v)?;
    require_nonisolated(w)?;
    if m > MAX_BFS_BOX {
        return Err(Error::ResourceExhausted(format!(
            "box half-width {m} exceeds {MAX_BFS_BOX}"
        )));
    }
    let start = boxed(v, m)?;
    let goal = boxed(w, m)?;
    if start == goal {
        return Ok(Some(0));
    }
    let side = (2 * m + 1) as usize;
    let index = |(x, y): (i64, i64)| (x + m) as usize * side + (y + m) as usize;
    let mut seen = vec![false; side * side];
    seen[index(start)] = true;
    let mut frontier = vec![start];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &(x, y) in &frontier {
            for u in box_neighbors(x, y, m) {
                if u == goal {
                    return Ok(Some(depth));
                }
                let i = index(u);
                if !seen[i] {
                    seen[i] = true;
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}
