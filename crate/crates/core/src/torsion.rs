//! The generating graph of `G = Z × Z/nZ`.
//!
//! Two vertices `(a, b̄)` and `(c, d̄)` generate `G` iff `gcd(a, c) = 1` and
//! `ad − bc` is a unit mod `n`. Any two non-isolated vertices are joined by
//! a path of length at most 2; [`common_neighbor`] builds the middle vertex
//! by lifting a solution mod `n` to a prime first coordinate.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd, prime_in_progression, smith_invariants, Int, IntMatrix};
use crate::error::{Error, Result};

/// An element `(a, b̄)` of `Z × Z/nZ`, with `b` stored in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionVertex {
    a: Int,
    b: Int,
    n: Int,
}

impl TorsionVertex {
    pub fn new(a: Int, b: Int, n: Int) -> Result<Self> {
        if n < Int::from(2) {
            return Err(Error::invalid(format!("modulus {n} must be at least 2")));
        }
        let b = b.mod_floor(&n);
        Ok(TorsionVertex { a, b, n })
    }

    pub fn from_i64(a: i64, b: i64, n: i64) -> Result<Self> {
        TorsionVertex::new(Int::from(a), Int::from(b), Int::from(n))
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    /// Canonical residue of the second coordinate.
    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn n(&self) -> &Int {
        &self.n
    }
}

impl fmt::Display for TorsionVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} mod {})", self.a, self.b, self.n)
    }
}

fn same_modulus(v: &TorsionVertex, w: &TorsionVertex) -> Result<()> {
    if v.n != w.n {
        return Err(Error::ModulusMismatch(v.n.clone(), w.n.clone()));
    }
    Ok(())
}

fn det(a: &Int, b: &Int, c: &Int, d: &Int) -> Int {
    a * d - b * c
}

fn adjacent_unchecked(a: &Int, b: &Int, c: &Int, d: &Int, n: &Int) -> bool {
    gcd(a, c).is_one() && gcd(&det(a, b, c, d), n).is_one()
}

pub fn is_adjacent_torsion(v: &TorsionVertex, w: &TorsionVertex) -> Result<bool> {
    same_modulus(v, w)?;
    Ok(adjacent_unchecked(&v.a, &v.b, &w.a, &w.b, &v.n))
}

/// Generation test through the invariant factors of the relation matrix
/// with rows `v`, `w`, `(0, n)`.
pub fn generates_torsion_oracle(v: &TorsionVertex, w: &TorsionVertex) -> Result<bool> {
    same_modulus(v, w)?;
    let m = IntMatrix::new(vec![
        [v.a.clone(), v.b.clone()],
        [w.a.clone(), w.b.clone()],
        [Int::zero(), v.n.clone()],
    ])?;
    let (d1, d2) = smith_invariants(&m);
    Ok(d1.is_one() && d2.is_one())
}

/// `gcd(a, b, n) = 1`.
///
/// Agrees with [`witness_search_torsion`] on every vertex with `|a| <= 20`,
/// `n <= 12` (checked exhaustively in the test suite); not proved beyond.
pub fn is_nonisolated_torsion(v: &TorsionVertex) -> bool {
    gcd(&gcd(&v.a, &v.b), &v.n).is_one()
}

/// Lexicographically smallest neighbour `(c, d̄)` with `c` in `[0, |a|·n)`,
/// or, when `a = 0`, with `c = 1` then `c = −1`.
///
/// The range is complete: `gcd(a, c)` depends only on `c mod a` and the
/// determinant only on `(c, d) mod n`.
pub fn witness_search_torsion(v: &TorsionVertex) -> Option<TorsionVertex> {
    let found = |c: Int| -> Option<TorsionVertex> {
        let mut d = Int::zero();
        while d < v.n {
            if adjacent_unchecked(&v.a, &v.b, &c, &d, &v.n) {
                return Some(TorsionVertex {
                    a: c,
                    b: d,
                    n: v.n.clone(),
                });
            }
            d += 1;
        }
        None
    };
    if v.a.is_zero() {
        return found(Int::one()).or_else(|| found(-Int::one()));
    }
    let bound = v.a.abs() * &v.n;
    let mut c = Int::zero();
    while c < bound {
        if gcd(&v.a, &c).is_one() {
            if let Some(w) = found(c.clone()) {
                return Some(w);
            }
        }
        c += 1;
    }
    None
}

/// How the first coordinate of a common neighbour was chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lift {
    /// `x = u·x*`, `n = u·m`, and `p = x* + t·m` is a prime above both
    /// first coordinates; the neighbour's first coordinate is `u·p`.
    Prime {
        u: Int,
        x_star: Int,
        m: Int,
        t: Int,
        p: Int,
    },
    /// One input has first coordinate 0, so the neighbour's first
    /// coordinate must be a unit.
    Unit,
}

/// A common neighbour together with the data it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonNeighbor {
    pub vertex: TorsionVertex,
    /// Residues `(x, y)` solving the problem mod `n`.
    pub base: (Int, Int),
    pub lift: Lift,
}

fn require_nonisolated(v: &TorsionVertex) -> Result<()> {
    if !is_nonisolated_torsion(v) {
        return Err(Error::isolated(v));
    }
    Ok(())
}

/// A vertex adjacent to both `v` and `w`.
///
/// Finds the smallest `(x, y)` in `[0, n)²` with both determinants units
/// mod `n`, writes `x = u·x*` and `n = u·m` with `u = gcd(x, n)` (a residue
/// `x = 0` is taken as `x = n`), and lifts `x` to `u·p` for the least prime
/// `p ≡ x* (mod m)` exceeding `|v.a|` and `|w.a|`. If either first
/// coordinate is 0, the neighbour `(±1, ȳ)` is used instead.
pub fn common_neighbor(v: &TorsionVertex, w: &TorsionVertex) -> Result<CommonNeighbor> {
    same_modulus(v, w)?;
    require_nonisolated(v)?;
    require_nonisolated(w)?;
    let n = &v.n;
    let result = if v.a.is_zero() || w.a.is_zero() {
        unit_neighbor(v, w)
    } else {
        prime_neighbor(v, w)?
    };
    let cn = result.ok_or_else(|| {
        Error::verification(format!("no residue pair found for {v} and {w} mod {n}"))
    })?;
    if !is_adjacent_torsion(&cn.vertex, v)? || !is_adjacent_torsion(&cn.vertex, w)? {
        return Err(Error::verification(format!(
            "{} is not adjacent to both {v} and {w}",
            cn.vertex
        )));
    }
    Ok(cn)
}

fn unit_neighbor(v: &TorsionVertex, w: &TorsionVertex) -> Option<CommonNeighbor> {
    let n = &v.n;
    for x in [Int::one(), -Int::one()] {
        let mut y = Int::zero();
        while &y < n {
            if adjacent_unchecked(&v.a, &v.b, &x, &y, n) && adjacent_unchecked(&w.a, &w.b, &x, &y, n)
            {
                return Some(CommonNeighbor {
                    vertex: TorsionVertex {
                        a: x.clone(),
                        b: y.clone(),
                        n: n.clone(),
                    },
                    base: (x.mod_floor(n), y),
                    lift: Lift::Unit,
                });
            }
            y += 1;
        }
    }
    None
}

fn prime_neighbor(v: &TorsionVertex, w: &TorsionVertex) -> Result<Option<CommonNeighbor>> {
    let n = &v.n;
    let Some((x, y)) = residue_pair(v, w) else {
        return Ok(None);
    };
    let lifted_x = if x.is_zero() { n.clone() } else { x.clone() };
    let u = gcd(&lifted_x, n);
    let x_star = &lifted_x / &u;
    let m = n / &u;
    let lower = v.a.abs().max(w.a.abs());
    let (t, p) = prime_in_progression(&x_star, &m, &lower)?;
    let vertex = TorsionVertex {
        a: &u * &p,
        b: y.clone(),
        n: n.clone(),
    };
    Ok(Some(CommonNeighbor {
        vertex,
        base: (x, y),
        lift: Lift::Prime {
            u,
            x_star,
            m,
            t,
            p,
        },
    }))
}

fn residue_pair(v: &TorsionVertex, w: &TorsionVertex) -> Option<(Int, Int)> {
    let n = &v.n;
    let mut x = Int::zero();
    while &x < n {
        let mut y = Int::zero();
        while &y < n {
            if gcd(&det(&v.a, &v.b, &x, &y), n).is_one() && gcd(&det(&w.a, &w.b, &x, &y), n).is_one()
            {
                return Some((x, y));
            }
            y += 1;
        }
        x += 1;
    }
    None
}

/// Path in `Γ(Z × Z/nZ)`; consecutive vertices are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionPath {
    pub vertices: Vec<TorsionVertex>,
}

impl TorsionPath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn is_valid(&self) -> bool {
        self.vertices
            .windows(2)
            .all(|p| is_adjacent_torsion(&p[0], &p[1]).unwrap_or(false))
    }
}

/// Shortest path between two non-isolated vertices; never longer than 2.
pub fn path_torsion(v: &TorsionVertex, w: &TorsionVertex) -> Result<TorsionPath> {
    same_modulus(v, w)?;
    require_nonisolated(v)?;
    require_nonisolated(w)?;
    let vertices = if v == w {
        vec![v.clone()]
    } else if is_adjacent_torsion(v, w)? {
        vec![v.clone(), w.clone()]
    } else {
        let cn = common_neighbor(v, w)?;
        vec![v.clone(), cn.vertex, w.clone()]
    };
    Ok(TorsionPath { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(a: i64, b: i64, n: i64) -> TorsionVertex {
        TorsionVertex::from_i64(a, b, n).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(tv(3, -1, 6).b(), &Int::from(5));
        assert!(TorsionVertex::from_i64(1, 0, 1).is_err());
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_adjacent_torsion(&tv(1, 0, 6), &tv(0, 1, 6)).unwrap());
        assert!(is_adjacent_torsion(&tv(2, 1, 6), &tv(3, 1, 6)).unwrap());
        assert!(!is_adjacent_torsion(&tv(2, 1, 6), &tv(4, 1, 6)).unwrap());
        assert!(matches!(
            is_adjacent_torsion(&tv(1, 0, 6), &tv(0, 1, 4)),
            Err(Error::ModulusMismatch(_, _))
        ));
    }

    #[test]
    fn oracle_examples() {
        assert!(generates_torsion_oracle(&tv(1, 0, 6), &tv(0, 1, 6)).unwrap());
        assert!(!generates_torsion_oracle(&tv(2, 1, 6), &tv(4, 1, 6)).unwrap());
        assert!(!generates_torsion_oracle(&tv(0, 1, 2), &tv(0, 1, 2)).unwrap());
    }

    #[test]
    fn nonisolation_and_witnesses() {
        assert!(is_nonisolated_torsion(&tv(2, 3, 6)));
        assert!(!is_nonisolated_torsion(&tv(2, 4, 6)));
        assert!(is_nonisolated_torsion(&tv(0, 1, 2)));
        assert_eq!(witness_search_torsion(&tv(2, 3, 6)), Some(tv(1, 1, 6)));
        assert_eq!(witness_search_torsion(&tv(2, 4, 6)), None);
        assert_eq!(witness_search_torsion(&tv(0, 1, 2)), Some(tv(1, 0, 2)));
    }

    #[test]
    fn common_neighbor_examples() {
        let cn = common_neighbor(&tv(1, 0, 2), &tv(3, 0, 2)).unwrap();
        assert_eq!(cn.vertex, tv(10, 1, 2));
        assert_eq!(cn.base, (Int::from(0), Int::from(1)));
        assert_eq!(
            cn.lift,
            Lift::Prime {
                u: Int::from(2),
                x_star: Int::from(1),
                m: Int::from(1),
                t: Int::from(4),
                p: Int::from(5),
            }
        );
        let cn = common_neighbor(&tv(0, 1, 2), &tv(0, 1, 2)).unwrap();
        assert_eq!(cn.vertex, tv(1, 0, 2));
        let (v, w) = (tv(1, 0, 3), tv(1, 1, 3));
        let cn = common_neighbor(&v, &w).unwrap();
        let (x, _) = &cn.base;
        assert_eq!(cn.vertex.a().mod_floor(&Int::from(3)), *x);
        assert!(is_adjacent_torsion(&cn.vertex, &v).unwrap());
        assert!(is_adjacent_torsion(&cn.vertex, &w).unwrap());
    }

    #[test]
    fn common_neighbor_rejects_isolated() {
        assert!(matches!(
            common_neighbor(&tv(2, 4, 6), &tv(1, 0, 6)),
            Err(Error::Isolated(_))
        ));
    }

    #[test]
    fn paths() {
        let p = path_torsion(&tv(1, 0, 2), &tv(3, 0, 2)).unwrap();
        assert_eq!(p.vertices, vec![tv(1, 0, 2), tv(10, 1, 2), tv(3, 0, 2)]);
        assert!(p.is_valid());
        let p = path_torsion(&tv(1, 0, 6), &tv(0, 1, 6)).unwrap();
        assert_eq!(p.len(), 1);
        let p = path_torsion(&tv(5, 1, 6), &tv(5, 1, 6)).unwrap();
        assert_eq!(p.len(), 0);
    }
}
