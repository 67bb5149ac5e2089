//! Two vertices of Γ(Z × Z/2Z) that are not adjacent, joined through a
//! common neighbour whose first coordinate is lifted to a prime multiple.

use gengraph::torsion::{common_neighbor, is_adjacent_torsion, path_torsion, Lift, TorsionVertex};

pub fn run_example() -> gengraph::Result<()> {
    let v = TorsionVertex::from_i64(1, 0, 2)?;
    let w = TorsionVertex::from_i64(3, 0, 2)?;
    println!("{v} ~ {w}: {}", is_adjacent_torsion(&v, &w)?);

    let cn = common_neighbor(&v, &w)?;
    println!("common neighbour {} from residues {:?}", cn.vertex, cn.base);
    if let Lift::Prime { u, x_star, m, t, p } = &cn.lift {
        println!("  p = {x_star} + {t}*{m} = {p}, first coordinate {u}*{p}");
    }

    let path = path_torsion(&v, &w)?;
    let shown: Vec<String> = path.vertices.iter().map(|x| x.to_string()).collect();
    println!("path of length {}: {}", path.len(), shown.join(" - "));

    // Large first coordinates work the same way.
    let v = TorsionVertex::from_i64(999_983, 4, 12)?;
    let w = TorsionVertex::from_i64(-1_000_000, 7, 12)?;
    let cn = common_neighbor(&v, &w)?;
    println!("{v} and {w} meet at {}", cn.vertex);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("torsion example failed");
}
