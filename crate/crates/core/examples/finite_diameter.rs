//! Γ*(Z/n × Z/n) has diameter at most 2; Γ*(Z/2 × Z/2) is a triangle.

use gengraph::finite::{build_gamma, build_gamma_star, diameter, finite_common_neighbor, FiniteVertex};

pub fn run_example() -> gengraph::Result<()> {
    for n in 2..=8 {
        let g = build_gamma_star(n, n)?;
        println!(
            "Gamma*(Z/{n} x Z/{n}): {} vertices, {} edges, diameter {}",
            g.vertices().len(),
            g.edge_count(),
            diameter(&g)
        );
    }

    let full = build_gamma(4, 4, 1000)?;
    let star = build_gamma_star(4, 4)?;
    println!(
        "Z/4 x Z/4 has {} elements, {} of them isolated",
        full.vertices().len(),
        full.vertices().len() - star.vertices().len()
    );

    let v = FiniteVertex::new(2, 3, 6, 6)?;
    let w = FiniteVertex::new(4, 1, 6, 6)?;
    println!("{v} and {w} in Z/6 x Z/6 have common neighbour {}", finite_common_neighbor(&v, &w)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("finite example failed");
}
