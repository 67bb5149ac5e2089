//! Lifting vertices of Γ(Z × Z) to Γ(F) and bounding free distances.

use gengraph::chains::fib_vertex;
use gengraph::free::{abelianize, distance_lower_bound_free, lift_vector, CertifiedWord, Word};
use gengraph::lattice::LatticeVertex;

pub fn run_example() -> gengraph::Result<()> {
    for (a, b) in [(1, 0), (2, 1), (-3, 5), (7, -4)] {
        let l = lift_vector(&LatticeVertex::from_i64(a, b))?;
        println!("({a}, {b}) lifts to {} with companion {}", l.word(), l.companion());
        assert_eq!(abelianize(l.word()), LatticeVertex::from_i64(a, b));
    }

    let x2 = CertifiedWord::new(Word::x2(), Word::x1())?;
    for n in [1, 3, 6, 10] {
        let f = lift_vector(&fib_vertex(n)?)?;
        let bound = distance_lower_bound_free(&f, &x2, None)?;
        println!("n = {n}: word of length {}, distance to x2 at least {}", f.word().len(), bound.lower);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lift example failed");
}
