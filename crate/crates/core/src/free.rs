//! The free group `F` on `x1, x2`.
//!
//! Two elements generate `F` iff Nielsen reduction carries them to a pair of
//! single letters, one from each generator. Abelianization maps `F` onto
//! `Z × Z` and sends every edge of `Γ(F)` to an edge, so distances in
//! `Γ(Z × Z)` bound distances in `Γ(F)` from below.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::Int;
use crate::chains::{distance_bounds, t_word_from_chain, DistanceBounds, EuclideanChain};
use crate::error::{Error, Result};
use crate::lattice::{is_nonisolated_lattice, LatticeVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    X1,
    X1Inv,
    X2,
    X2Inv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::X1 => Letter::X1Inv,
            Letter::X1Inv => Letter::X1,
            Letter::X2 => Letter::X2Inv,
            Letter::X2Inv => Letter::X2,
        }
    }

    /// 1 for `x1^±1`, 2 for `x2^±1`.
    pub fn generator(self) -> u8 {
        match self {
            Letter::X1 | Letter::X1Inv => 1,
            Letter::X2 | Letter::X2Inv => 2,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Letter::X1 | Letter::X2 => 1,
            Letter::X1Inv | Letter::X2Inv => -1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X1 => "x1",
            Letter::X1Inv => "x1^-1",
            Letter::X2 => "x2",
            Letter::X2Inv => "x2^-1",
        })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        match s {
            "x1" => Ok(Letter::X1),
            "x1^-1" => Ok(Letter::X1Inv),
            "x2" => Ok(Letter::X2),
            "x2^-1" => Ok(Letter::X2Inv),
            _ => Err(Error::invalid(format!("unknown letter {s:?}"))),
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(raw: &[Letter]) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        if letters.last() == Some(&l.inverse()) {
            letters.pop();
        } else {
            letters.push(l);
        }
    }
    Word { letters }
}

/// Length of the cancellation when `left` is followed by `right`.
fn cancellation<L, R>(left: L, right: R) -> usize
where
    L: Iterator<Item = Letter>,
    R: Iterator<Item = Letter>,
{
    left.zip(right).take_while(|(a, b)| *a == b.inverse()).count()
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn x1() -> Word {
        Word {
            letters: vec![Letter::X1],
        }
    }

    pub fn x2() -> Word {
        Word {
            letters: vec![Letter::X2],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The reduced product `self·other`.
    pub fn mul(&self, other: &Word) -> Word {
        let c = cancellation(self.letters.iter().rev().copied(), other.letters.iter().copied());
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * c);
        letters.extend_from_slice(&self.letters[..self.len() - c]);
        letters.extend_from_slice(&other.letters[c..]);
        Word { letters }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut raw = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            raw.extend_from_slice(&base.letters);
        }
        free_reduce(&raw)
    }

    /// Replaces `x1` by `x1^-1` and/or `x2` by `x2^-1`.
    fn flip_signs(&self, flip1: bool, flip2: bool) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                let flip = if l.generator() == 1 { flip1 } else { flip2 };
                if flip {
                    l.inverse()
                } else {
                    l
                }
            })
            .collect();
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space-separated letters `x1`, `x1^-1`, `x2`, `x2^-1`; `1` is the
    /// empty word. The input is reduced.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::invalid("empty word text; write 1 for the identity"));
        }
        let raw = s
            .split_whitespace()
            .map(Letter::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(free_reduce(&raw))
    }
}

/// Exponent sums `(e1, e2)`.
pub fn abelianize(w: &Word) -> LatticeVertex {
    let (mut e1, mut e2) = (0i64, 0i64);
    for l in &w.letters {
        match l.generator() {
            1 => e1 += l.exponent(),
            _ => e2 += l.exponent(),
        }
    }
    LatticeVertex::from_i64(e1, e2)
}

/// The elementary Nielsen transformations of an ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenMove {
    /// `(w1, w2) ↦ (w2, w1)`.
    Swap,
    /// `(w1, w2) ↦ (w1^-1, w2)`.
    InvertFirst,
    /// `(w1, w2) ↦ (w1·w2, w2)`.
    MultiplyFirst,
}

impl NielsenMove {
    /// Moves that undo this one, in application order.
    pub fn inverse(self) -> Vec<NielsenMove> {
        use NielsenMove::*;
        match self {
            Swap => vec![Swap],
            InvertFirst => vec![InvertFirst],
            MultiplyFirst => vec![Swap, InvertFirst, Swap, MultiplyFirst, Swap, InvertFirst, Swap],
        }
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NielsenMove::Swap => "swap",
            NielsenMove::InvertFirst => "invert",
            NielsenMove::MultiplyFirst => "multiply",
        })
    }
}

pub fn apply_nielsen(m: NielsenMove, pair: &(Word, Word)) -> (Word, Word) {
    let (w1, w2) = pair;
    match m {
        NielsenMove::Swap => (w2.clone(), w1.clone()),
        NielsenMove::InvertFirst => (w1.inverse(), w2.clone()),
        NielsenMove::MultiplyFirst => (w1.mul(w2), w2.clone()),
    }
}

pub fn apply_nielsen_all(moves: &[NielsenMove], pair: &(Word, Word)) -> (Word, Word) {
    moves.iter().fold(pair.clone(), |p, &m| apply_nielsen(m, &p))
}

/// Which product replaces a component in one reduction step; `w` is the
/// component being replaced and `o` the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Product {
    /// `w·o`
    Right,
    /// `w·o^-1`
    RightInverse,
    /// `o·w`
    Left,
    /// `o^-1·w`
    LeftInverse,
}

const PRODUCTS: [Product; 4] = [
    Product::Right,
    Product::RightInverse,
    Product::Left,
    Product::LeftInverse,
];

/// One length-reducing replacement of component `position` (1 or 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NielsenStep {
    pub position: u8,
    pub product: Product,
}

impl NielsenStep {
    /// The same replacement as a sequence of elementary moves.
    pub fn moves(&self) -> Vec<NielsenMove> {
        use NielsenMove::*;
        let right_inverse = [Swap, InvertFirst, Swap, MultiplyFirst, Swap, InvertFirst, Swap];
        let first: Vec<NielsenMove> = match self.product {
            Product::Right => vec![MultiplyFirst],
            Product::RightInverse => right_inverse.to_vec(),
            Product::LeftInverse => vec![InvertFirst, MultiplyFirst, InvertFirst],
            Product::Left => std::iter::once(InvertFirst)
                .chain(right_inverse)
                .chain(std::iter::once(InvertFirst))
                .collect(),
        };
        if self.position == 1 {
            first
        } else {
            std::iter::once(Swap)
                .chain(first)
                .chain(std::iter::once(Swap))
                .collect()
        }
    }
}

impl fmt::Display for NielsenStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (w, o) = if self.position == 1 { ("w1", "w2") } else { ("w2", "w1") };
        match self.product {
            Product::Right => write!(f, "{w} <- {w}*{o}"),
            Product::RightInverse => write!(f, "{w} <- {w}*{o}^-1"),
            Product::Left => write!(f, "{w} <- {o}*{w}"),
            Product::LeftInverse => write!(f, "{w} <- {o}^-1*{w}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NielsenReduction {
    pub reduced: (Word, Word),
    pub steps: Vec<NielsenStep>,
}

impl NielsenReduction {
    /// Elementary moves whose replay carries the input to `reduced`.
    pub fn moves(&self) -> Vec<NielsenMove> {
        self.steps.iter().flat_map(NielsenStep::moves).collect()
    }

    /// Whether the reduced pair is `{x1^±1, x2^±1}`.
    pub fn is_basis(&self) -> bool {
        let (a, b) = &self.reduced;
        a.len() == 1 && b.len() == 1 && a.letters[0].generator() != b.letters[0].generator()
    }
}

fn letters_of(o: &VecDeque<Letter>, inverted: bool) -> Box<dyn DoubleEndedIterator<Item = Letter> + '_> {
    if inverted {
        Box::new(o.iter().rev().map(|l| l.inverse()))
    } else {
        Box::new(o.iter().copied())
    }
}

/// Length of the product and the number of cancelled letter pairs.
fn product_length(w: &VecDeque<Letter>, o: &VecDeque<Letter>, p: Product) -> (usize, usize) {
    let c = match p {
        Product::Right => cancellation(w.iter().rev().copied(), o.iter().copied()),
        Product::RightInverse => cancellation(w.iter().rev().copied(), letters_of(o, true)),
        Product::Left => cancellation(o.iter().rev().copied(), w.iter().copied()),
        Product::LeftInverse => cancellation(letters_of(o, true).rev(), w.iter().copied()),
    };
    (w.len() + o.len() - 2 * c, c)
}

/// Replaces `w` by the product in place, in time linear in `|o|`.
fn apply_product(w: &mut VecDeque<Letter>, o: &VecDeque<Letter>, p: Product, c: usize) {
    match p {
        Product::Right | Product::RightInverse => {
            w.truncate(w.len() - c);
            w.extend(letters_of(o, p == Product::RightInverse).skip(c));
        }
        Product::Left | Product::LeftInverse => {
            w.drain(..c);
            let head: Vec<Letter> = letters_of(o, p == Product::LeftInverse).rev().skip(c).collect();
            for l in head {
                w.push_front(l);
            }
        }
    }
}

/// Greedy Nielsen reduction: repeatedly replaces a component by the first
/// strictly shorter product, scanning position 1 before position 2 and
/// products in the order `w·o`, `w·o^-1`, `o·w`, `o^-1·w`. Stops when no
/// product is shorter or a component becomes trivial.
pub fn nielsen_reduce_pair(pair: &(Word, Word)) -> Result<NielsenReduction> {
    if pair.0.is_empty() || pair.1.is_empty() {
        return Err(Error::invalid("Nielsen reduction needs two non-trivial words"));
    }
    let mut words = [
        VecDeque::from(pair.0.letters.clone()),
        VecDeque::from(pair.1.letters.clone()),
    ];
    let mut steps = Vec::new();
    'outer: while !words[0].is_empty() && !words[1].is_empty() {
        for position in 0..2 {
            for p in PRODUCTS {
                let (len, c) = product_length(&words[position], &words[1 - position], p);
                if len < words[position].len() {
                    let (left, right) = words.split_at_mut(1);
                    let (w, o) = if position == 0 {
                        (&mut left[0], &right[0])
                    } else {
                        (&mut right[0], &left[0])
                    };
                    apply_product(w, o, p, c);
                    steps.push(NielsenStep {
                        position: position as u8 + 1,
                        product: p,
                    });
                    continue 'outer;
                }
            }
        }
        break;
    }
    let [a, b] = words;
    Ok(NielsenReduction {
        reduced: (
            Word {
                letters: a.into_iter().collect(),
            },
            Word {
                letters: b.into_iter().collect(),
            },
        ),
        steps,
    })
}

/// Whether the pair generates `F`.
pub fn generates_free(pair: &(Word, Word)) -> bool {
    nielsen_reduce_pair(pair).is_ok_and(|r| r.is_basis())
}

/// A word together with a companion that generates `F` with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedWord {
    word: Word,
    companion: Word,
}

impl CertifiedWord {
    /// Checks that `word` and `companion` generate `F`.
    pub fn new(word: Word, companion: Word) -> Result<Self> {
        if !generates_free(&(word.clone(), companion.clone())) {
            return Err(Error::invalid(format!(
                "{word} and {companion} do not generate the free group"
            )));
        }
        Ok(CertifiedWord { word, companion })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn companion(&self) -> &Word {
        &self.companion
    }
}

/// Floor-division chain for `(a, b)` with `a, b >= 0`, `b > 0`.
fn floor_chain(a: &Int, b: &Int) -> EuclideanChain {
    let mut remainders = vec![a.clone(), b.clone()];
    let mut quotients = Vec::new();
    while !remainders[remainders.len() - 1].is_zero() {
        let n = remainders.len();
        let (q, r) = remainders[n - 2].div_mod_floor(&remainders[n - 1]);
        quotients.push(q);
        remainders.push(r);
    }
    EuclideanChain {
        remainders,
        quotients,
    }
}

/// A non-isolated vertex of `Γ(F)` lying over `v`, with its companion.
///
/// For `v = (a, b)` with `a, b >= 0` the ordinary Euclidean chain for
/// `(b, a)` gives a product of matrices `((0,1),(1,q))`; each factor is
/// realized on `(x1, x2)` by `w1 <- w1·w2^q` followed by a swap. Negative
/// coordinates are handled by inverting a generator throughout. The lift
/// is a positive word up to those inversions, of length `|a| + |b|`.
pub fn lift_vector(v: &LatticeVertex) -> Result<CertifiedWord> {
    if !is_nonisolated_lattice(v) {
        return Err(Error::isolated(v));
    }
    let (a, b) = (v.a.abs(), v.b.abs());
    let mut pair = (Word::x1(), Word::x2());
    if !a.is_zero() {
        let chain = floor_chain(&b, &a);
        let tw = t_word_from_chain(&chain, &a, &b)?;
        for q in &tw.quotients {
            let q = q
                .to_i64()
                .ok_or_else(|| Error::ResourceExhausted(format!("quotient {q} is too large")))?;
            let w1 = pair.0.mul(&pair.1.pow(q));
            pair = (pair.1, w1);
        }
    }
    let (flip1, flip2) = (v.a.is_negative(), v.b.is_negative());
    let companion = pair.0.flip_signs(flip1, flip2);
    let word = pair.1.flip_signs(flip1, flip2);
    if abelianize(&word) != *v {
        return Err(Error::verification(format!("lift {word} does not lie over {v}")));
    }
    CertifiedWord::new(word, companion).map_err(|e| Error::verification(e.to_string()))
}

/// The abelian lower bound on a distance in `Γ(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeDistanceBound {
    pub lower: usize,
    pub abelian: (LatticeVertex, LatticeVertex),
    pub bounds: DistanceBounds,
}

/// Distance in `Γ(F)` is at least the distance between the
/// abelianizations, and at least 1 between distinct words.
pub fn distance_lower_bound_free(
    w1: &CertifiedWord,
    w2: &CertifiedWord,
    search_box: Option<i64>,
) -> Result<FreeDistanceBound> {
    let (v1, v2) = (abelianize(&w1.word), abelianize(&w2.word));
    let bounds = distance_bounds(&v1, &v2, search_box)?;
    let lower = bounds.lower.max(usize::from(w1.word != w2.word));
    Ok(FreeDistanceBound {
        lower,
        abelian: (v1, v2),
        bounds,
    })
}
