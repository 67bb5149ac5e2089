//! DOT and CSV output for a finite graph and for a ball in Γ(Z × Z).

use gengraph::export::{export_csv_finite, export_dot_finite, lattice_ball};
use gengraph::finite::build_gamma_star;
use gengraph::lattice::LatticeVertex;

pub fn run_example() -> gengraph::Result<()> {
    let g = build_gamma_star(2, 2)?;
    print!("{}", export_dot_finite(&g, "Gamma*(Z/2 x Z/2)"));
    print!("{}", export_csv_finite(&g));

    let ball = lattice_ball(&LatticeVertex::from_i64(0, 1), 1, 2)?;
    print!("{}", ball.to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("export example failed");
}
