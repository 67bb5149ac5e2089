//! Euclidean division chains and distances from `(0, 1)` in `Γ(Z × Z)`.
//!
//! A T-word `(q1, …, qd; η1, η2)` stands for the matrix
//! `T_qd ⋯ T_q1 · (−1)^η1 · E^η2` with `T_α = ((0,1),(1,α))` and
//! `E = ((−1,0),(0,1))`. The second rows of its partial products form a
//! path of length `d` starting at `±(0, 1)`, and running the same quotients
//! as divisions on `(b, ±a)` gives a Euclidean chain of the same length for
//! the endpoint `(a, b)`. Since least-absolute-remainder chains are the
//! shortest ones, their length is a lower bound for the distance, and the
//! path built from that chain meets it.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{nearest_division, Int, Integral, Mat2};
use crate::error::{Error, Result};
use crate::lattice::{
    bounded_bfs_distance, is_nonisolated_lattice, normalize_to_base, LatticePath, LatticeVertex,
};

/// Divisions `r_i = q_{i+1}·r_{i+1} + r_{i+2}` for `0 <= i < k`, with
/// `r_1, …, r_k` non-zero and `r_{k+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanChain<T = Int> {
    pub remainders: Vec<T>,
    pub quotients: Vec<T>,
}

impl<T: Integral> EuclideanChain<T> {
    /// Number of divisions `k`.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// The last non-zero remainder, `±gcd(r0, r1)`.
    pub fn last_nonzero(&self) -> Option<&T> {
        let k = self.quotients.len();
        self.remainders.get(k)
    }
}

impl<T: fmt::Display> fmt::Display for EuclideanChain<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(
                f,
                "{} = {}*{} + {}",
                self.remainders[i],
                q,
                self.remainders[i + 1],
                self.remainders[i + 2]
            )?;
        }
        Ok(())
    }
}

pub fn validate_chain<T: Integral>(c: &EuclideanChain<T>) -> bool {
    let k = c.quotients.len();
    if c.remainders.len() != k + 2 {
        return false;
    }
    let r = &c.remainders;
    let recurrence = (0..k).all(|i| r[i] == c.quotients[i].clone() * r[i + 1].clone() + r[i + 2].clone());
    let nonzero = (1..=k).all(|i| !r[i].is_zero());
    recurrence && nonzero && !r[k].is_zero() && r[k + 1].is_zero()
}

/// The chain of least-absolute-remainder divisions starting from `(a, b)`.
pub fn lar_chain<T: Integral>(a: &T, b: &T) -> Result<EuclideanChain<T>> {
    if b.is_zero() {
        return Err(Error::invalid("second chain entry must be non-zero"));
    }
    let mut remainders = vec![a.clone(), b.clone()];
    let mut quotients = Vec::new();
    loop {
        let n = remainders.len();
        let (x, y) = (&remainders[n - 2], &remainders[n - 1]);
        if y.is_zero() {
            break;
        }
        let (q, r) = nearest_division(x, y);
        quotients.push(q);
        remainders.push(r);
    }
    Ok(EuclideanChain {
        remainders,
        quotients,
    })
}

/// `(q1, …, qd; η1, η2)`, standing for `T_qd ⋯ T_q1 · (−1)^η1 · E^η2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TWord<T = Int> {
    pub quotients: Vec<T>,
    pub eta1: bool,
    pub eta2: bool,
}

impl<T: fmt::Display> fmt::Display for TWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "] eta1={} eta2={}", self.eta1 as u8, self.eta2 as u8)
    }
}

/// `T_α = ((0,1),(1,α))`.
pub fn t_matrix<T: Integral>(alpha: &T) -> Mat2<T> {
    Mat2::new(T::zero(), T::one(), T::one(), alpha.clone())
}

/// `T*_α = ((0,1),(−1,α))`.
pub fn t_star_matrix<T: Integral>(alpha: &T) -> Mat2<T> {
    Mat2::new(T::zero(), T::one(), -T::one(), alpha.clone())
}

/// `E = ((−1,0),(0,1))`.
pub fn e_matrix<T: Integral>() -> Mat2<T> {
    Mat2::new(-T::one(), T::zero(), T::zero(), T::one())
}

fn sign_part<T: Integral>(eta1: bool, eta2: bool) -> Mat2<T> {
    let mut m = if eta2 { e_matrix() } else { Mat2::identity() };
    if eta1 {
        m = m.neg();
    }
    m
}

pub fn t_word_to_matrix<T: Integral>(tw: &TWord<T>) -> Mat2<T> {
    tw.quotients
        .iter()
        .fold(sign_part(tw.eta1, tw.eta2), |acc, q| t_matrix(q).mul_ref(&acc))
}

/// Second rows of `(−1)^η1·E^η2`, `T_q1·(−1)^η1·E^η2`, …, the full
/// product; consecutive rows are adjacent.
pub fn t_word_rows<T: Integral>(tw: &TWord<T>) -> Vec<[T; 2]> {
    let start = sign_part::<T>(tw.eta1, tw.eta2);
    let (mut prev, mut cur) = (start.first_row(), start.second_row());
    let mut rows = vec![cur.clone()];
    for q in &tw.quotients {
        let next = [
            prev[0].clone() + q.clone() * cur[0].clone(),
            prev[1].clone() + q.clone() * cur[1].clone(),
        ];
        prev = std::mem::replace(&mut cur, next);
        rows.push(cur.clone());
    }
    rows
}

/// Path of length `d` from `(0, 1)` to the second row of the T-word's
/// matrix. A start at `(0, −1)` is replaced by `(0, 1)`, which has the same
/// neighbours; for `d = 0` the single vertex `(0, ±1)` is kept.
pub fn path_from_t_word(tw: &TWord) -> LatticePath {
    let mut vertices: Vec<LatticeVertex> =
        t_word_rows(tw).into_iter().map(LatticeVertex::from_row).collect();
    if vertices.len() > 1 && vertices[0].b.is_negative() {
        vertices[0] = vertices[0].neg();
    }
    LatticePath { vertices }
}

/// Runs the T-word's quotients as divisions on `(b, (−1)^η2·a)`, where
/// `(a, b)` is the second row of its matrix, stopping at the first zero
/// remainder.
pub fn chain_from_t_word<T: Integral>(tw: &TWord<T>) -> EuclideanChain<T> {
    let [a, b] = t_word_to_matrix(tw).second_row();
    let r1 = if tw.eta2 { -a } else { a };
    let mut remainders = vec![b, r1];
    let mut quotients = Vec::new();
    for q in &tw.quotients {
        let n = remainders.len();
        if remainders[n - 1].is_zero() {
            break;
        }
        let next = remainders[n - 2].clone() - q.clone() * remainders[n - 1].clone();
        quotients.push(q.clone());
        remainders.push(next);
    }
    EuclideanChain {
        remainders,
        quotients,
    }
}

/// A T-word with the chain's quotients whose matrix has second row `(a, b)`.
///
/// The chain must start `(b, ±a)` and end at `±1`; the signs fix `η2` and
/// `η1`.
pub fn t_word_from_chain<T: Integral>(c: &EuclideanChain<T>, a: &T, b: &T) -> Result<TWord<T>> {
    if !validate_chain(c) {
        return Err(Error::invalid(format!("not a Euclidean chain: {c}")));
    }
    if c.remainders[0] != *b {
        return Err(Error::invalid(format!(
            "chain starts at {}, expected {b}",
            c.remainders[0]
        )));
    }
    let r1 = &c.remainders[1];
    let eta2 = if r1 == a {
        false
    } else if *r1 == -a.clone() {
        true
    } else {
        return Err(Error::invalid(format!("chain entry {r1} is not ±{a}")));
    };
    let last = &c.remainders[c.len()];
    let eta1 = if last.is_one() {
        false
    } else if (-last.clone()).is_one() {
        true
    } else {
        return Err(Error::invalid(format!(
            "chain ends at {last}, so ({a}, {b}) is isolated"
        )));
    };
    let tw = TWord {
        quotients: c.quotients.clone(),
        eta1,
        eta2,
    };
    if t_word_to_matrix(&tw).second_row() != [a.clone(), b.clone()] {
        return Err(Error::verification(format!(
            "T-word {tw} does not end at ({a}, {b})"
        )));
    }
    Ok(tw)
}

fn require_nonisolated(v: &LatticeVertex) -> Result<()> {
    if !is_nonisolated_lattice(v) {
        return Err(Error::isolated(v));
    }
    Ok(())
}

/// The shorter of the least-absolute-remainder chains for `(b, a)` and
/// `(b, −a)`, preferring `(b, a)`.
fn shortest_chain(v: &LatticeVertex) -> Result<EuclideanChain> {
    let plus = lar_chain(&v.b, &v.a)?;
    let minus = lar_chain(&v.b, &-&v.a)?;
    Ok(if minus.len() < plus.len() { minus } else { plus })
}

fn is_base(v: &LatticeVertex) -> bool {
    v.a.is_zero() && v.b.abs().is_one()
}

/// A lower bound on the distance from `(0, 1)` to `v = (a, b)`: the least
/// length of a Euclidean chain for `(b, ±a)`.
pub fn distance_lower_bound(v: &LatticeVertex) -> Result<usize> {
    require_nonisolated(v)?;
    if is_base(v) {
        return Err(Error::invalid(format!("{v} is ±(0, 1)")));
    }
    Ok(shortest_chain(v)?.len())
}

/// A path from `(0, 1)` to `v` of length [`distance_lower_bound`]`(v)`.
pub fn shortest_path_from_base(v: &LatticeVertex) -> Result<LatticePath> {
    require_nonisolated(v)?;
    let base = LatticeVertex::from_i64(0, 1);
    if *v == base {
        return Ok(LatticePath { vertices: vec![base] });
    }
    if *v == base.neg() {
        let mid = LatticeVertex::from_i64(1, 0);
        return Ok(LatticePath {
            vertices: vec![base, mid, v.clone()],
        });
    }
    let chain = shortest_chain(v)?;
    let tw = t_word_from_chain(&chain, &v.a, &v.b)?;
    let path = path_from_t_word(&tw);
    if !path.is_valid() || path.vertices.first() != Some(&base) || path.vertices.last() != Some(v) {
        return Err(Error::verification(format!("T-word path to {v} is invalid: {path}")));
    }
    Ok(path)
}

/// What a boxed breadth-first search contributed to [`DistanceBounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxSearch {
    /// No box given, or an endpoint lies outside it.
    Skipped,
    Unreachable,
    Found(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceBounds {
    pub lower: usize,
    pub upper: usize,
    /// A path from `v` to `w` of length `upper` or shorter when the box
    /// search improved on it.
    pub path: LatticePath,
    pub search: BoxSearch,
}

impl DistanceBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Lower and upper bounds on the distance from `v` to `w`.
///
/// Maps `w` to `(0, 1)` by [`normalize_to_base`]; the lower bound is the
/// chain bound of the image of `v`, the upper bound the length of the path
/// built from that chain, improved by a boxed search when `search_box` is
/// given and contains both endpoints.
pub fn distance_bounds(
    v: &LatticeVertex,
    w: &LatticeVertex,
    search_box: Option<i64>,
) -> Result<DistanceBounds> {
    require_nonisolated(v)?;
    require_nonisolated(w)?;
    let search = match search_box {
        Some(m) if fits(v, m) && fits(w, m) => match bounded_bfs_distance(v, w, m)? {
            Some(d) => BoxSearch::Found(d),
            None => BoxSearch::Unreachable,
        },
        _ => BoxSearch::Skipped,
    };
    let a = normalize_to_base(w)?;
    let image = v.times(&a);
    let lower = if *v == *w {
        0
    } else if is_base(&image) {
        // (0, −1): distinct from (0, 1) and not adjacent to it.
        2
    } else {
        distance_lower_bound(&image)?
    };
    let back = a
        .inverse()
        .ok_or_else(|| Error::verification("normalizing matrix is not invertible"))?;
    let mut path = shortest_path_from_base(&image)?.map(&back);
    path.vertices.reverse();
    if !path.is_valid() || path.vertices.first() != Some(v) || path.vertices.last() != Some(w) {
        return Err(Error::verification(format!("mapped path is invalid: {path}")));
    }
    let mut upper = path.len();
    if let BoxSearch::Found(d) = search {
        upper = upper.min(d);
    }
    if lower > upper {
        return Err(Error::verification(format!(
            "lower bound {lower} exceeds upper bound {upper} for {v}, {w}"
        )));
    }
    Ok(DistanceBounds {
        lower,
        upper,
        path,
        search,
    })
}

fn fits(v: &LatticeVertex, m: i64) -> bool {
    let m = Int::from(m);
    v.a.abs() <= m && v.b.abs() <= m
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(k: u64) -> Int {
    let (mut x, mut y) = (Int::zero(), Int::one());
    for _ in 0..k {
        let z = &x + &y;
        x = std::mem::replace(&mut y, z);
    }
    x
}

/// `(F_{2n}, F_{2n+1})`.
pub fn fib_vertex(n: u64) -> Result<LatticeVertex> {
    if n == 0 {
        return Err(Error::invalid("Fibonacci vertex index must be at least 1"));
    }
    Ok(LatticeVertex::new(fibonacci(2 * n), fibonacci(2 * n + 1)))
}

/// The chain `F_{2n+1} = 2·F_{2n} − F_{2n−2}`, then quotients `±3` down to
/// `F_4 = 3·F_2 − F_0`.
pub fn fibonacci_chain(n: u64) -> Result<EuclideanChain> {
    if n == 0 {
        return Err(Error::invalid("Fibonacci chain index must be at least 1"));
    }
    let mut remainders = vec![fibonacci(2 * n + 1), fibonacci(2 * n)];
    let mut quotients = Vec::new();
    let mut q = Int::from(2);
    loop {
        let k = remainders.len();
        let next = &remainders[k - 2] - &q * &remainders[k - 1];
        quotients.push(q);
        remainders.push(next);
        let k = remainders.len();
        if remainders[k - 1].is_zero() {
            break;
        }
        let sign = remainders[k - 2].signum() * remainders[k - 1].signum();
        q = sign * 3;
    }
    let chain = EuclideanChain {
        remainders,
        quotients,
    };
    if !validate_chain(&chain) || chain.len() as u64 != n {
        return Err(Error::verification(format!("Fibonacci chain {n} is malformed")));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(a: i64, b: i64) -> LatticeVertex {
        LatticeVertex::from_i64(a, b)
    }

    #[test]
    fn lar_chain_examples() {
        let c = lar_chain(&5i64, &3).unwrap();
        assert_eq!(c.remainders, vec![5, 3, -1, 0]);
        assert_eq!(c.quotients, vec![2, -3]);
        let c = lar_chain(&1i64, &1).unwrap();
        assert_eq!((c.remainders, c.quotients), (vec![1, 1, 0], vec![1]));
        assert_eq!(lar_chain(&13i64, &8).unwrap().len(), 3);
        assert_eq!(lar_chain(&0i64, &1).unwrap().remainders, vec![0, 1, 0]);
        assert!(lar_chain(&3i64, &0).is_err());
    }

    #[test]
    fn chain_validation() {
        assert!(validate_chain(&lar_chain(&21i64, &-34).unwrap()));
        let bad = EuclideanChain {
            remainders: vec![5i64, 3, 0],
            quotients: vec![2],
        };
        assert!(!validate_chain(&bad));
        let good = EuclideanChain {
            remainders: vec![4i64, 2, 0],
            quotients: vec![2],
        };
        assert!(validate_chain(&good));
        let short = EuclideanChain {
            remainders: vec![4i64, 2],
            quotients: vec![2],
        };
        assert!(!validate_chain(&short));
    }

    #[test]
    fn t_word_matrices() {
        let tw = |q: Vec<i64>, e1, e2| TWord {
            quotients: q,
            eta1: e1,
            eta2: e2,
        };
        assert_eq!(t_word_to_matrix(&tw(vec![7], false, false)), Mat2::new(0, 1, 1, 7));
        assert_eq!(t_word_to_matrix(&tw(vec![7], false, true)), Mat2::new(0, 1, -1, 7));
        assert_eq!(t_word_to_matrix(&tw(vec![], true, false)), Mat2::new(-1, 0, 0, -1));
        assert_eq!(t_word_to_matrix(&tw(vec![2, -3], true, false)), Mat2::new(-1, -2, 3, 5));
    }

    #[test]
    fn t_word_identities() {
        for a in -20i64..=20 {
            assert_eq!(t_matrix(&a).mul_ref(&e_matrix()), t_star_matrix(&a));
            let e = e_matrix::<i64>();
            // The conjugate picks up a sign, which the (−1)^η1 factor absorbs.
            assert_eq!(e.mul_ref(&t_matrix(&a)).mul_ref(&e), t_matrix(&-a).neg());
        }
    }

    #[test]
    fn t_word_from_chain_examples() {
        let c = lar_chain(&1i64, &1).unwrap();
        let tw = t_word_from_chain(&c, &1, &1).unwrap();
        assert_eq!(tw.quotients, vec![1]);
        let c = lar_chain(&1i64, &0).unwrap_err();
        assert!(matches!(c, Error::InvalidInput(_)));
        let c = EuclideanChain {
            remainders: vec![1i64, 0],
            quotients: vec![],
        };
        let tw = t_word_from_chain(&c, &0, &1).unwrap();
        assert_eq!(t_word_to_matrix(&tw).second_row(), [0, 1]);
        let c = lar_chain(&5i64, &3).unwrap();
        let tw = t_word_from_chain(&c, &3, &5).unwrap();
        assert!(tw.quotients.len() <= 3);
        assert_eq!(t_word_to_matrix(&tw).second_row(), [3, 5]);
        assert!(t_word_from_chain(&c, &4, &5).is_err());
    }

    #[test]
    fn paths_from_t_words() {
        let tw = TWord {
            quotients: vec![Int::one()],
            eta1: false,
            eta2: false,
        };
        assert_eq!(path_from_t_word(&tw).vertices, vec![lv(0, 1), lv(1, 1)]);
        let tw = TWord {
            quotients: vec![],
            eta1: true,
            eta2: false,
        };
        assert_eq!(path_from_t_word(&tw).vertices, vec![lv(0, -1)]);
        let c = lar_chain(&Int::from(5), &Int::from(3)).unwrap();
        let tw = t_word_from_chain(&c, &Int::from(3), &Int::from(5)).unwrap();
        let p = path_from_t_word(&tw);
        assert!(p.is_valid());
        assert_eq!(p.vertices.first(), Some(&lv(0, 1)));
        assert_eq!(p.vertices.last(), Some(&lv(3, 5)));
    }

    #[test]
    fn chains_from_t_words_truncate() {
        // T_0·T_0 = I, so the endpoint is (0, 1) itself.
        let tw = TWord {
            quotients: vec![0i64, 0],
            eta1: false,
            eta2: false,
        };
        let c = chain_from_t_word(&tw);
        assert!(validate_chain(&c));
        assert_eq!(c.len(), 0);
    }

    #[test]
    fn lower_bounds() {
        for k in -10..=10 {
            assert_eq!(distance_lower_bound(&lv(1, k)).unwrap(), 1);
            assert_eq!(distance_lower_bound(&lv(-1, k)).unwrap(), 1);
        }
        assert_eq!(distance_lower_bound(&lv(3, 5)).unwrap(), 2);
        assert_eq!(distance_lower_bound(&lv(8, 13)).unwrap(), 3);
        assert!(distance_lower_bound(&lv(0, 1)).is_err());
        assert!(distance_lower_bound(&lv(0, -1)).is_err());
        assert!(matches!(distance_lower_bound(&lv(2, 4)), Err(Error::Isolated(_))));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), Int::zero());
        assert_eq!(fibonacci(10), Int::from(55));
        assert_eq!(fib_vertex(2).unwrap(), lv(3, 5));
        assert!(fib_vertex(0).is_err());
        let f200: Int = "280571172992510140037611932413038677189525".parse().unwrap();
        assert_eq!(fibonacci(200), f200);
    }

    #[test]
    fn fibonacci_chains() {
        let c = fibonacci_chain(1).unwrap();
        assert_eq!(c.remainders, vec![Int::from(2), Int::from(1), Int::zero()]);
        assert_eq!(fibonacci_chain(2).unwrap(), lar_chain(&Int::from(5), &Int::from(3)).unwrap());
        assert_eq!(fibonacci_chain(3).unwrap().len(), 3);
        for n in 1..=30 {
            let c = fibonacci_chain(n).unwrap();
            let lar = lar_chain(&fibonacci(2 * n + 1), &fibonacci(2 * n)).unwrap();
            assert_eq!(c.len(), lar.len());
        }
    }

    #[test]
    fn bounds_examples() {
        let b = distance_bounds(&lv(1, 5), &lv(0, 1), None).unwrap();
        assert_eq!((b.lower, b.upper), (1, 1));
        let b = distance_bounds(&lv(3, 5), &lv(0, 1), Some(50)).unwrap();
        assert_eq!((b.lower, b.upper), (2, 2));
        assert_eq!(b.search, BoxSearch::Found(2));
        let b = distance_bounds(&lv(3, 5), &lv(3, 5), None).unwrap();
        assert_eq!((b.lower, b.upper), (0, 0));
        let b = distance_bounds(&lv(0, -1), &lv(0, 1), Some(3)).unwrap();
        assert_eq!((b.lower, b.upper), (2, 2));
        let b = distance_bounds(&lv(7, -3), &lv(-2, 5), Some(10)).unwrap();
        assert!(b.lower <= b.upper);
        assert!(b.path.is_valid());
        assert!(distance_bounds(&lv(2, 4), &lv(0, 1), None).is_err());
    }
}
