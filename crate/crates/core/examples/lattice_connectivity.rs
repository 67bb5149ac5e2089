//! Γ*(Z × Z) is connected: factor a unimodular matrix into elementary
//! matrices and walk from (1, 0) to any non-isolated vertex.

use gengraph::arith::{matrix_product, Mat2};
use gengraph::lattice::{factor_elementary, find_witness_lattice, neighborhood, path_to_basis, LatticeVertex};

pub fn run_example() -> gengraph::Result<()> {
    let v = LatticeVertex::from_i64(0, 1);
    let ns: Vec<String> = neighborhood(&v, 2)?.iter().map(|x| x.to_string()).collect();
    println!("N(0, 1) for |k| <= 2: {}", ns.join(" "));

    let a = Mat2::from_i64(13, 8, 5, 3);
    let factors = factor_elementary(&a)?;
    let shown: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
    println!("{a} = {}", shown.join(" * "));
    assert_eq!(matrix_product(&factors), a);

    let target = LatticeVertex::from_i64(-89, 144);
    println!("witness for {target}: {}", find_witness_lattice(&target)?);
    let path = path_to_basis(&target)?;
    println!("path of length {}: {path}", path.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lattice example failed");
}
