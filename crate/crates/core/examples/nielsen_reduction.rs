//! Nielsen reduction decides whether two words generate the free group.

use gengraph::free::{apply_nielsen_all, generates_free, nielsen_reduce_pair, Word};

pub fn run_example() -> gengraph::Result<()> {
    let pairs = [
        ("x1 x2 x1 x2^-1", "x2 x1"),
        ("x1 x1 x2", "x1 x2"),
        ("x1 x2 x1^-1", "x2 x2"),
    ];
    for (a, b) in pairs {
        let pair: (Word, Word) = (a.parse()?, b.parse()?);
        let red = nielsen_reduce_pair(&pair)?;
        let steps: Vec<String> = red.steps.iter().map(|s| s.to_string()).collect();
        println!("({a}, {b}) -> ({}, {}) via [{}]", red.reduced.0, red.reduced.1, steps.join("; "));
        assert_eq!(apply_nielsen_all(&red.moves(), &pair), red.reduced);
        println!("  generates: {}", generates_free(&pair));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("nielsen example failed");
}
