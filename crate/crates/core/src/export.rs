//! Deterministic DOT and CSV output.
//!
//! Vertices are labelled `"a,b"` and emitted in ascending order; each
//! undirected edge appears once with the smaller endpoint first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::finite::FiniteGraph;
use crate::lattice::{box_neighbors, is_nonisolated_lattice, LatticeVertex, MAX_BFS_BOX};

/// A vertex set with sorted vertices and edges given as index pairs `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub comment: String,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn from_finite(g: &FiniteGraph, comment: impl Into<String>) -> EdgeList {
        EdgeList {
            comment: comment.into(),
            labels: g.vertices().iter().map(|v| format!("{},{}", v.a(), v.b())).collect(),
            edges: g.edges().collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        let _ = writeln!(out, "  comment=\"{}\";", self.comment.replace('"', "'"));
        for l in &self.labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.labels[i], self.labels[j]);
        }
        out.push_str("}\n");
        out
    }

    /// One `a1,b1,a2,b2` row per edge.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a1,b1,a2,b2\n");
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{},{}", self.labels[i], self.labels[j]);
        }
        out
    }
}

pub fn export_dot_finite(g: &FiniteGraph, comment: &str) -> String {
    EdgeList::from_finite(g, comment).to_dot()
}

pub fn export_csv_finite(g: &FiniteGraph) -> String {
    let (m, n) = g.moduli();
    EdgeList::from_finite(g, format!("Z/{m} x Z/{n}")).to_csv()
}

/// The vertices of `Γ(Z × Z)` within `radius` steps of `center`, moving
/// only through `[−m, m]²`, with every edge among them.
pub fn lattice_ball(center: &LatticeVertex, radius: usize, m: i64) -> Result<EdgeList> {
    if !is_nonisolated_lattice(center) {
        return Err(Error::isolated(center));
    }
    if !(1..=MAX_BFS_BOX).contains(&m) {
        return Err(Error::invalid(format!("box half-width must lie in [1, {MAX_BFS_BOX}]")));
    }
    let start = match center.to_i64() {
        Some((a, b)) if a.abs() <= m && b.abs() <= m => (a, b),
        _ => return Err(Error::invalid(format!("{center} lies outside the box of half-width {m}"))),
    };
    let mut seen = BTreeSet::from([start]);
    let mut frontier = vec![start];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &(x, y) in &frontier {
            for u in box_neighbors(x, y, m) {
                if seen.insert(u) {
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    let index: BTreeMap<(i64, i64), usize> = seen.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (&(x, y), &i) in &index {
        for u in box_neighbors(x, y, m) {
            if let Some(&j) = index.get(&u) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(EdgeList {
        comment: format!("ball center=({}, {}) radius={radius} box={m}", start.0, start.1),
        labels: seen.iter().map(|(a, b)| format!("{a},{b}")).collect(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::build_gamma_star;

    #[test]
    fn klein_four_triangle() {
        let g = build_gamma_star(2, 2).unwrap();
        let dot = export_dot_finite(&g, "Z/2 x Z/2");
        assert_eq!(
            dot,
            "graph G {\n  comment=\"Z/2 x Z/2\";\n  \"0,1\";\n  \"1,0\";\n  \"1,1\";\n  \
             \"0,1\" -- \"1,0\";\n  \"0,1\" -- \"1,1\";\n  \"1,0\" -- \"1,1\";\n}\n"
        );
        assert_eq!(export_csv_finite(&g), "a1,b1,a2,b2\n0,1,1,0\n0,1,1,1\n1,0,1,1\n");
    }

    #[test]
    fn edgeless_graph_has_header_only() {
        let e = EdgeList {
            comment: "empty".into(),
            labels: vec!["0,1".into()],
            edges: vec![],
        };
        assert_eq!(e.to_dot(), "graph G {\n  comment=\"empty\";\n  \"0,1\";\n}\n");
        assert_eq!(e.to_csv(), "a1,b1,a2,b2\n");
    }

    #[test]
    fn ball_around_base() {
        let e = lattice_ball(&LatticeVertex::from_i64(0, 1), 2, 2).unwrap();
        for k in -2..=2 {
            for s in [-1, 1] {
                assert!(e.labels.contains(&format!("{s},{k}")));
            }
        }
        assert_eq!(e.labels[0], "-2,-1");
        assert!(e.edges.iter().all(|&(i, j)| i < j));
        let one = lattice_ball(&LatticeVertex::from_i64(0, 1), 1, 2).unwrap();
        assert_eq!(one.labels.len(), 11);
        assert_eq!(one.edges.iter().filter(|&&(i, j)| one.labels[i] == "0,1" || one.labels[j] == "0,1").count(), 10);
        assert!(lattice_ball(&LatticeVertex::from_i64(2, 2), 1, 3).is_err());
    }
}
