//! Exhaustive generating graphs of `Z/m × Z/n` with `m | n`.
//!
//! Residues are machine integers: the vertex cap keeps every modulus far
//! below the range where products could overflow.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::arith::{gcd, row_invariants};
use crate::error::{Error, Result};

/// Default bound on `m·n` for [`build_gamma_star`].
pub const DEFAULT_VERTEX_CAP: u64 = 1_000_000;

/// An element `(ā, b̄)` of `Z/m × Z/n`, with canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteVertex {
    a: i64,
    b: i64,
    m: i64,
    n: i64,
}

fn check_moduli(m: i64, n: i64) -> Result<()> {
    if m < 1 || n < 2 {
        return Err(Error::invalid(format!(
            "moduli must satisfy m >= 1 and n >= 2, got ({m}, {n})"
        )));
    }
    if n % m != 0 {
        return Err(Error::invalid(format!("{m} does not divide {n}")));
    }
    Ok(())
}

impl FiniteVertex {
    pub fn new(a: i64, b: i64, m: i64, n: i64) -> Result<Self> {
        check_moduli(m, n)?;
        Ok(FiniteVertex {
            a: a.rem_euclid(m),
            b: b.rem_euclid(n),
            m,
            n,
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn moduli(&self) -> (i64, i64) {
        (self.m, self.n)
    }
}

impl fmt::Display for FiniteVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

fn same_moduli(v: &FiniteVertex, w: &FiniteVertex) -> Result<()> {
    if (v.m, v.n) != (w.m, w.n) {
        return Err(Error::invalid(format!(
            "moduli differ: ({}, {}) vs ({}, {})",
            v.m, v.n, w.m, w.n
        )));
    }
    Ok(())
}

/// Whether `v` and `w` generate `Z/m × Z/n`: the relation matrix with rows
/// `v`, `w`, `(m, 0)`, `(0, n)` has invariant factors `(1, 1)`.
pub fn generates_finite(v: &FiniteVertex, w: &FiniteVertex) -> Result<bool> {
    same_moduli(v, w)?;
    Ok(generates_unchecked(v, w))
}

fn generates_unchecked(v: &FiniteVertex, w: &FiniteVertex) -> bool {
    row_invariants(&[[v.a, v.b], [w.a, w.b], [v.m, 0], [0, v.n]]) == (1, 1)
}

/// A simple undirected graph on residue pairs with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    m: i64,
    n: i64,
    vertices: Vec<FiniteVertex>,
    adjacency: Vec<Vec<usize>>,
}

impl FiniteGraph {
    pub fn moduli(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[FiniteVertex] {
        &self.vertices
    }

    pub fn index_of(&self, v: &FiniteVertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Neighbour indices of vertex `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Each edge once as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, v: &FiniteVertex, w: &FiniteVertex) -> bool {
        match (self.index_of(v), self.index_of(w)) {
            (Some(i), Some(j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }
}

fn all_vertices(m: i64, n: i64) -> Vec<FiniteVertex> {
    (0..m)
        .flat_map(|a| (0..n).map(move |b| FiniteVertex { a, b, m, n }))
        .collect()
}

fn check_cap(m: i64, n: i64, cap: u64) -> Result<()> {
    let count = (m as u64).saturating_mul(n as u64);
    if count > cap {
        return Err(Error::ResourceExhausted(format!(
            "group of order {count} exceeds the vertex cap {cap}"
        )));
    }
    Ok(())
}

/// `Γ(Z/m × Z/n)`, isolated vertices included.
pub fn build_gamma(m: i64, n: i64, cap: u64) -> Result<FiniteGraph> {
    check_moduli(m, n)?;
    check_cap(m, n, cap)?;
    let vertices = all_vertices(m, n);
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if generates_unchecked(&vertices[i], &vertices[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    Ok(FiniteGraph {
        m,
        n,
        vertices,
        adjacency,
    })
}

/// `Γ*(Z/m × Z/n)` with the default vertex cap.
pub fn build_gamma_star(m: i64, n: i64) -> Result<FiniteGraph> {
    build_gamma_star_capped(m, n, DEFAULT_VERTEX_CAP)
}

/// `Γ*(Z/m × Z/n)`: the full graph with zero-degree vertices removed.
pub fn build_gamma_star_capped(m: i64, n: i64, cap: u64) -> Result<FiniteGraph> {
    let full = build_gamma(m, n, cap)?;
    let keep: Vec<usize> = (0..full.vertices.len())
        .filter(|&i| !full.adjacency[i].is_empty())
        .collect();
    let mut new_index = vec![usize::MAX; full.vertices.len()];
    for (k, &i) in keep.iter().enumerate() {
        new_index[i] = k;
    }
    let vertices = keep.iter().map(|&i| full.vertices[i]).collect();
    let adjacency = keep
        .iter()
        .map(|&i| full.adjacency[i].iter().map(|&j| new_index[j]).collect())
        .collect();
    Ok(FiniteGraph {
        m,
        n,
        vertices,
        adjacency,
    })
}

/// Shortest-path distances from `source` to every vertex it reaches.
pub fn bfs_distances(g: &FiniteGraph, source: &FiniteVertex) -> Result<BTreeMap<FiniteVertex, usize>> {
    let s = g
        .index_of(source)
        .ok_or_else(|| Error::invalid(format!("{source} is not a vertex of the graph")))?;
    Ok(bfs_from(g, s)
        .into_iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|d| (g.vertices[i], d)))
        .collect())
}

fn bfs_from(g: &FiniteGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertices.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(i) = queue.pop_front() {
        let d = dist[i].expect("queued vertices have a distance");
        for &j in &g.adjacency[i] {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    /// Some pair of vertices is not joined by any path.
    Disconnected,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => write!(f, "infinite (disconnected)"),
        }
    }
}

/// Largest distance between two vertices; 0 for graphs with at most one
/// vertex.
pub fn diameter(g: &FiniteGraph) -> Diameter {
    let mut best = 0;
    for s in 0..g.vertices.len() {
        for d in bfs_from(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Disconnected,
            }
        }
    }
    Diameter::Finite(best)
}

/// Whether some element generates `Z/m × Z/n` together with `v`.
pub fn is_nonisolated_finite(v: &FiniteVertex) -> bool {
    all_vertices(v.m, v.n)
        .iter()
        .any(|w| w != v && generates_unchecked(v, w))
}

/// Lexicographically smallest `(x, y)` in `[0, n)²` such that both
/// `det(v; x, y)` and `det(w; x, y)` are units mod `n`, for vertices of
/// `Z/n × Z/n`.
pub fn finite_common_neighbor(v: &FiniteVertex, w: &FiniteVertex) -> Result<FiniteVertex> {
    same_moduli(v, w)?;
    let n = v.n;
    if v.m != n {
        return Err(Error::invalid(format!(
            "common neighbours are computed in Z/n x Z/n, got moduli ({}, {n})",
            v.m
        )));
    }
    for u in [v, w] {
        if gcd(&gcd(&u.a, &u.b), &n) != 1 {
            return Err(Error::isolated(u));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let dv = v.a * y - v.b * x;
            let dw = w.a * y - w.b * x;
            if gcd(&dv, &n) == 1 && gcd(&dw, &n) == 1 {
                return Ok(FiniteVertex { a: x, b: y, m: n, n });
            }
        }
    }
    Err(Error::verification(format!(
        "no common neighbour of {v} and {w} mod {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(a: i64, b: i64, m: i64, n: i64) -> FiniteVertex {
        FiniteVertex::new(a, b, m, n).unwrap()
    }

    #[test]
    fn moduli_are_validated() {
        assert!(FiniteVertex::new(0, 0, 2, 3).is_err());
        assert!(FiniteVertex::new(0, 0, 1, 1).is_err());
        assert_eq!(fv(-1, 7, 2, 4), fv(1, 3, 2, 4));
    }

    #[test]
    fn generation_examples() {
        assert!(generates_finite(&fv(1, 0, 2, 2), &fv(0, 1, 2, 2)).unwrap());
        assert!(!generates_finite(&fv(1, 1, 2, 2), &fv(1, 1, 2, 2)).unwrap());
        assert!(generates_finite(&fv(1, 2, 6, 6), &fv(3, 1, 6, 6)).unwrap());
    }

    #[test]
    fn generation_matches_determinant_when_square() {
        for n in 2i64..=8 {
            for [a, b, c, d] in (0..n.pow(4)).map(|k| [k % n, k / n % n, k / n / n % n, k / n / n / n]) {
                let expected = gcd(&(a * d - b * c), &n) == 1;
                assert_eq!(generates_unchecked(&fv(a, b, n, n), &fv(c, d, n, n)), expected);
            }
        }
    }

    #[test]
    fn klein_group_is_a_triangle() {
        let g = build_gamma_star(2, 2).unwrap();
        assert_eq!(g.vertices(), &[fv(0, 1, 2, 2), fv(1, 0, 2, 2), fv(1, 1, 2, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(diameter(&g), Diameter::Finite(1));
        let d = bfs_distances(&g, &fv(1, 0, 2, 2)).unwrap();
        assert!(d.values().all(|&x| x <= 1));
    }

    #[test]
    fn cyclic_group_of_order_two() {
        // 0 and 1 generate Z/2, so Γ*(Z/2) is a single edge.
        let g = build_gamma_star(1, 2).unwrap();
        assert_eq!(g.vertices(), &[fv(0, 0, 1, 2), fv(0, 1, 1, 2)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn order_three_square() {
        let g = build_gamma_star(3, 3).unwrap();
        assert_eq!(g.vertices().len(), 8);
        for (i, v) in g.vertices().iter().enumerate() {
            for (j, w) in g.vertices().iter().enumerate() {
                let det = (v.a * w.b - v.b * w.a).rem_euclid(3);
                assert_eq!(g.is_adjacent(v, w), i != j && det != 0);
            }
        }
    }

    #[test]
    fn square_diameters() {
        for n in [4, 6, 8, 9, 10, 12] {
            assert_eq!(diameter(&build_gamma_star(n, n).unwrap()), Diameter::Finite(2), "n={n}");
        }
    }

    #[test]
    fn cap_and_source_errors() {
        assert!(matches!(build_gamma_star_capped(10, 10, 99), Err(Error::ResourceExhausted(_))));
        let g = build_gamma_star(2, 2).unwrap();
        assert!(bfs_distances(&g, &fv(0, 0, 2, 2)).is_err());
    }

    #[test]
    fn common_neighbor_examples() {
        let cn = |a, b, c, d, n| finite_common_neighbor(&fv(a, b, n, n), &fv(c, d, n, n)).unwrap();
        assert_eq!(cn(1, 0, 1, 0, 2), fv(0, 1, 2, 2));
        assert_eq!(cn(1, 0, 1, 1, 2), fv(0, 1, 2, 2));
        assert_eq!(cn(1, 0, 2, 0, 3), fv(0, 1, 3, 3));
    }

    #[test]
    fn nonisolation_by_search() {
        assert!(is_nonisolated_finite(&fv(1, 1, 2, 2)));
        assert!(!is_nonisolated_finite(&fv(0, 0, 2, 2)));
        assert!(!is_nonisolated_finite(&fv(2, 2, 4, 4)));
        assert!(is_nonisolated_finite(&fv(0, 0, 1, 3)));
    }
}
