//! Euclidean chains, their T-words, and the paths they describe.

use gengraph::chains::{
    chain_from_t_word, lar_chain, path_from_t_word, t_word_from_chain, t_word_to_matrix, validate_chain,
};
use gengraph::Int;

pub fn run_example() -> gengraph::Result<()> {
    let (a, b) = (Int::from(89), Int::from(-55));
    let chain = lar_chain(&a, &b)?;
    println!("chain of length {}: {chain}", chain.len());
    assert!(validate_chain(&chain));

    // The chain for (a, b) belongs to the vertex (b, a).
    let tw = t_word_from_chain(&chain, &b, &a)?;
    let m = t_word_to_matrix(&tw);
    println!("T-word {tw} gives {m}");
    println!("path {}", path_from_t_word(&tw));
    println!("back to a chain: {}", chain_from_t_word(&tw));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("chain example failed");
}
