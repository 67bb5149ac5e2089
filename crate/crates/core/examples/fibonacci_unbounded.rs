//! The vertices (F_2n, F_2n+1) move arbitrarily far from (0, 1).

use gengraph::chains::{distance_bounds, distance_lower_bound, fib_vertex, fibonacci_chain, lar_chain};
use gengraph::lattice::{bounded_bfs_distance, LatticeVertex};

pub fn run_example() -> gengraph::Result<()> {
    let base = LatticeVertex::from_i64(0, 1);
    for n in 1..=4 {
        let v = fib_vertex(n)?;
        let bfs = bounded_bfs_distance(&v, &base, 60)?;
        let bounds = distance_bounds(&v, &base, None)?;
        println!("n = {n}: {v}, box search {bfs:?}, chain bounds {}..{}", bounds.lower, bounds.upper);
    }
    for n in [10, 20, 40, 80] {
        let v = fib_vertex(n)?;
        println!("n = {n}: lower bound {}", distance_lower_bound(&v)?);
    }
    let chain = fibonacci_chain(3)?;
    println!("quotients 2, ±3, ...: {chain}");
    let v = fib_vertex(3)?;
    println!("least-absolute-remainder chain: {}", lar_chain(&v.b, &v.a)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fibonacci example failed");
}
