//! Distances in Γ(Z × Z): a chain lower bound against a path upper bound
//! and a boxed breadth-first search.

use gengraph::chains::{distance_bounds, distance_lower_bound};
use gengraph::lattice::{bounded_bfs_distance, LatticeVertex};

pub fn run_example() -> gengraph::Result<()> {
    let base = LatticeVertex::from_i64(0, 1);
    for (a, b) in [(3, 5), (7, 12), (-11, 30), (34, 55)] {
        let v = LatticeVertex::from_i64(a, b);
        let bounds = distance_bounds(&v, &base, Some(60))?;
        let bfs = bounded_bfs_distance(&v, &base, 60)?;
        println!(
            "{v}: chain bound {}, {} <= d <= {}, box search {:?}, path {}",
            distance_lower_bound(&v)?,
            bounds.lower,
            bounds.upper,
            bfs,
            bounds.path
        );
    }

    let v = LatticeVertex::from_i64(2, 7);
    let w = LatticeVertex::from_i64(-5, 3);
    let bounds = distance_bounds(&v, &w, None)?;
    println!("{v} to {w}: {} <= d <= {}", bounds.lower, bounds.upper);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("distance example failed");
}
