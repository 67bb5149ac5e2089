//! Generating graphs of 2-generated abelian groups and of the free group of
//! rank 2.
//!
//! For a group `G`, the generating graph `Γ(G)` has the elements of `G` as
//! vertices, with an edge between two distinct elements whenever they
//! generate `G`. `Γ*(G)` is the subgraph induced on the non-isolated
//! vertices. This crate computes with these graphs for
//!
//! * `Z × Z/nZ` ([`torsion`]): adjacency, non-isolation, and explicit
//!   two-step paths built from a prime in an arithmetic progression;
//! * finite `Z/m × Z/n` ([`finite`]): exhaustive graphs, BFS and diameters;
//! * `Z × Z` ([`lattice`], [`chains`]): neighbourhoods, connecting paths from
//!   elementary-matrix factorizations, and distance bounds from Euclidean
//!   division chains, including the Fibonacci pairs that push distances up
//!   without bound;
//! * the free group `F₂` ([`free`]): Nielsen reduction of pairs, lifts of
//!   abelian vertices and abelian lower bounds on distances.
//!
//! Every positive answer comes with a certificate (a witness, a path, a
//! factorization, a move list) that can be checked independently.
//!
//! The `gengraph` binary exposes the same operations on the command line; see
//! [`cli`].

pub mod arith;
pub mod chains;
pub mod cli;
pub mod error;
pub mod export;
pub mod finite;
pub mod free;
pub mod lattice;
pub mod torsion;

pub use arith::Int;
pub use error::{Error, Result};
