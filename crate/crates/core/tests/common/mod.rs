//! Oracles written independently of the library, shared by the test targets.

#![allow(dead_code)]

use gengraph::free::{Letter, Word};

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(a, b)`, `(c, d)` generate `Z × Z/nZ` iff the rows together with
/// `(0, n)` span `Z²`, i.e. the 2×2 minors have gcd 1.
pub fn generates_torsion(a: i128, b: i128, c: i128, d: i128, n: i128) -> bool {
    gcd(gcd(a * d - b * c, a * n), c * n) == 1
}

/// `(a, b)`, `(c, d)` generate `Z/m × Z/n` iff the rows together with
/// `(m, 0)`, `(0, n)` span `Z²`.
pub fn generates_finite(a: i128, b: i128, c: i128, d: i128, m: i128, n: i128) -> bool {
    let rows = [(a, b), (c, d), (m, 0), (0, n)];
    let mut g = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            g = gcd(g, rows[i].0 * rows[j].1 - rows[i].1 * rows[j].0);
        }
    }
    g == 1
}

pub type M2 = [[i128; 2]; 2];

pub fn mul(x: &M2, y: &M2) -> M2 {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

pub fn neg(x: &M2) -> M2 {
    [[-x[0][0], -x[0][1]], [-x[1][0], -x[1][1]]]
}

pub fn t(q: i128) -> M2 {
    [[0, 1], [1, q]]
}

pub const E: M2 = [[-1, 0], [0, 1]];
pub const I: M2 = [[1, 0], [0, 1]];

/// `T_qd ⋯ T_q1 · (−1)^η1 · E^η2`.
pub fn t_word(qs: &[i128], eta1: bool, eta2: bool) -> M2 {
    let mut m = if eta2 { E } else { I };
    if eta1 {
        m = neg(&m);
    }
    for &q in qs {
        m = mul(&t(q), &m);
    }
    m
}

/// Whether `(x, y)` (coprime, `y != 0`) has a Euclidean chain of length at
/// most `k`, decided exactly for `k <= 4`.
///
/// A chain for `(x, y)` continues with some `r ≡ x (mod y)`, `r != 0`; the
/// infinitely many choices of `r` reduce to divisors of `y ± 1` and a
/// bounded range, case by case.
pub fn chain_at_most_exact(x: i64, y: i64, k: u32) -> bool {
    assert!(y != 0 && k <= 4);
    if y.abs() == 1 {
        return k >= 1;
    }
    match k {
        0 | 1 => false,
        // r must divide y and be coprime to it.
        2 => congruent(x, 1, y) || congruent(x, -1, y),
        3 => {
            chain_at_most_exact(x, y, 2)
                || [-1, 1]
                    .iter()
                    .any(|e| divisors(y - e).any(|r| congruent(r, x, y)))
        }
        _ => {
            if chain_at_most_exact(x, y, 3) {
                return true;
            }
            // Next step (y, r) with a length-3 chain whose second remainder
            // is s = y + j·r dividing r − ε. j = 1 forces s | y + ε, j = −1
            // forces s | y − ε, and |j| >= 2 forces |r| <= |y| + 1.
            for e in [-1i64, 1] {
                for s in divisors(y + e) {
                    let r = s - y;
                    if r.abs() >= 2 && congruent(s, x, y) && chain_at_most_exact(y, r, 3) {
                        return true;
                    }
                }
                for s in divisors(y - e) {
                    let r = y - s;
                    if r.abs() >= 2 && congruent(-s, x, y) && chain_at_most_exact(y, r, 3) {
                        return true;
                    }
                }
            }
            let bound = y.abs() + 1;
            (-bound..=bound).any(|r| r != 0 && congruent(r, x, y) && chain_at_most_exact(y, r, 3))
        }
    }
}

fn congruent(a: i64, b: i64, m: i64) -> bool {
    (a - b).rem_euclid(m.abs()) == 0
}

/// Positive and negative divisors of a non-zero integer.
fn divisors(n: i64) -> impl Iterator<Item = i64> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.extend([d, -d, n / d, -(n / d)]);
        }
        d += 1;
    }
    out.into_iter()
}

/// Remainders of the next step tried by the windowed searches: all
/// `r ≡ x (mod y)` with `0 < |r| <= w·|y|`.
fn window(x: i64, y: i64, w: i64) -> impl Iterator<Item = i64> {
    let m = y.abs();
    let base = x.rem_euclid(m);
    (-w..=w)
        .map(move |j| base + j * m)
        .filter(move |&r| r != 0 && r.abs() <= w * m)
}

/// Chain of length at most `k`: exact below 5, above that the first
/// `k − 4` remainders range over a window of `w·|y|`.
pub fn chain_at_most(x: i64, y: i64, k: u32, w: i64) -> bool {
    if k <= 4 {
        return chain_at_most_exact(x, y, k);
    }
    if y.abs() == 1 {
        return true;
    }
    window(x, y, w).any(|r| chain_at_most(y, r, k - 1, w))
}

/// Least chain length for `(a, b)`, `b != 0`, after dividing out the gcd.
pub fn min_chain_length(a: i64, b: i64, w: i64) -> u32 {
    let g = gcd(a as i128, b as i128) as i64;
    let (x, y) = (a / g, b / g);
    (1..).find(|&k| chain_at_most(x, y, k, w)).expect("some chain exists")
}

/// Depth-first search over windowed remainders at every level.
pub fn min_chain_length_naive(a: i64, b: i64, w: i64, max: u32) -> Option<u32> {
    fn go(x: i64, y: i64, k: u32, w: i64) -> bool {
        if x % y == 0 {
            return true;
        }
        k > 1 && window(x, y, w).any(|r| go(y, r, k - 1, w))
    }
    (1..=max).find(|&k| go(a, b, k, w))
}

/// Whether a set of words generates the free group on `x1, x2`, by
/// Stallings folding: the folded graph must be a single vertex carrying
/// both loops.
pub fn stallings_generates(words: &[Word]) -> bool {
    // Edges (from, generator, to) of the wedge of cycles spelling the words.
    let mut edges: Vec<(usize, u8, usize)> = Vec::new();
    let mut vertices = 1;
    for w in words {
        let letters = w.letters();
        let mut at = 0;
        for (i, &l) in letters.iter().enumerate() {
            let to = if i + 1 == letters.len() {
                0
            } else {
                vertices += 1;
                vertices - 1
            };
            let g = l.generator();
            if matches!(l, Letter::X1 | Letter::X2) {
                edges.push((at, g, to));
            } else {
                edges.push((to, g, at));
            }
            at = to;
        }
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    loop {
        let mut merged = false;
        let mut seen = std::collections::HashMap::new();
        for &(u, g, v) in &edges {
            let (u, v) = (find(&mut parent, u), find(&mut parent, v));
            for key in [(u, g, true), (v, g, false)] {
                let other = if key.2 { v } else { u };
                match seen.get(&key) {
                    Some(&o) => {
                        let (a, b) = (find(&mut parent, o), find(&mut parent, other));
                        if a != b {
                            parent[a] = b;
                            merged = true;
                        }
                    }
                    None => {
                        seen.insert(key, other);
                    }
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut roots: Vec<usize> = (0..vertices).map(|v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    let labels: std::collections::BTreeSet<u8> = edges.iter().map(|e| e.1).collect();
    roots.len() == 1 && labels.len() == 2
}

/// A random reduced word built from `len` random letters.
pub fn random_word<R: rand::Rng>(rng: &mut R, len: usize) -> Word {
    use Letter::*;
    let letters: Vec<Letter> = (0..len).map(|_| [X1, X1Inv, X2, X2Inv][rng.gen_range(0..4)]).collect();
    gengraph::free::free_reduce(&letters)
}
