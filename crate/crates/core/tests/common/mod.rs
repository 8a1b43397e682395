//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use khcurves::algebra::{Element, Vertex, Word, WordKind};
use khcurves::complex::{direct_sum, shift_complex, validate_complex, ComplexB, Generator};
use khcurves::curve::{compile, Family};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Path model of the algebra: a word is a sequence of arrows, products are
// concatenations, and any path containing adjacent D and S arrows is zero.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrow {
    D,
    S,
}

/// Arrow sequence of a word.
pub fn arrows(kind: WordKind) -> Vec<Arrow> {
    match kind {
        WordKind::Id => vec![],
        WordKind::D(k) => vec![Arrow::D; k as usize],
        WordKind::S(m) => vec![Arrow::S; m as usize],
    }
}

/// Canonical word of an arrow path, or `None` if the path is zero.
pub fn path_word(path: &[Arrow]) -> Option<WordKind> {
    if path.windows(2).any(|w| w[0] != w[1]) {
        return None;
    }
    Some(match path.first() {
        None => WordKind::Id,
        Some(Arrow::D) => WordKind::D(path.len() as u64),
        Some(Arrow::S) => WordKind::S(path.len() as u64),
    })
}

/// Product of two elements computed term by term through the path model.
pub fn oracle_mul(a: &Element, b: &Element) -> Element {
    assert_eq!(a.to(), b.from());
    let mut out = Element::zero(a.from(), b.to());
    for x in a.kinds() {
        for y in b.kinds() {
            let mut path = arrows(x);
            path.extend(arrows(y));
            if let Some(w) = path_word(&path) {
                out.toggle(w);
            }
        }
    }
    out
}

/// Every word with power at most `max` starting at `from`.
pub fn words_from(from: Vertex, max: u64) -> Vec<Word> {
    let mut out = vec![Word::id(from)];
    for k in 1..=max {
        out.push(Word::d(from, k));
        out.push(Word::s(from, k));
    }
    out
}

// ---------------------------------------------------------------------------
// Independent Mor homology: dense matrices per quantum grading, products from
// the path model, ranks by plain Gaussian elimination.

type Gen = (usize, usize, WordKind);

fn dense_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn word_between(from: Vertex, to: Vertex, depth: i64) -> Vec<WordKind> {
    if depth < 0 {
        return vec![];
    }
    let d = depth as u64;
    let mut out = Vec::new();
    if from == to {
        if d == 0 {
            out.push(WordKind::Id);
        } else if d.is_multiple_of(2) {
            out.push(WordKind::D(d / 2));
            out.push(WordKind::S(d));
        }
    } else if d % 2 == 1 {
        out.push(WordKind::S(d));
    }
    out
}

fn oracle_gens(x: &ComplexB, y: &ComplexB, qq: i64, h: i64) -> Vec<Gen> {
    let mut out = Vec::new();
    for (i, a) in x.generators().iter().enumerate() {
        for (j, b) in y.generators().iter().enumerate() {
            if b.h - a.h == h {
                for w in word_between(a.vertex, b.vertex, b.q - a.q - qq) {
                    out.push((i, j, w));
                }
            }
        }
    }
    out
}

fn oracle_d(x: &ComplexB, y: &ComplexB, g: Gen) -> BTreeMap<Gen, bool> {
    let (i, j, w) = g;
    let mut out: BTreeMap<Gen, bool> = BTreeMap::new();
    let mut flip = |k: Gen| {
        let e = out.entry(k).or_insert(false);
        *e = !*e;
    };
    for (a, b, label) in y.entries() {
        if a == j {
            for l in label.kinds() {
                let mut p = arrows(w);
                p.extend(arrows(l));
                if let Some(r) = path_word(&p) {
                    flip((i, b, r));
                }
            }
        }
    }
    for (a, b, label) in x.entries() {
        if b == i {
            for l in label.kinds() {
                let mut p = arrows(l);
                p.extend(arrows(w));
                if let Some(r) = path_word(&p) {
                    flip((a, j, r));
                }
            }
        }
    }
    out.retain(|_, v| *v);
    out
}

fn oracle_matrix(x: &ComplexB, y: &ComplexB, qq: i64, h: i64) -> Vec<Vec<bool>> {
    let src = oracle_gens(x, y, qq, h);
    let tgt = oracle_gens(x, y, qq, h + 1);
    src.iter()
        .map(|&g| {
            let d = oracle_d(x, y, g);
            tgt.iter().map(|t| d.contains_key(t)).collect()
        })
        .collect()
}

/// Bigraded ranks of `H(Mor(X, Y))` for `lo <= q <= hi`, zero ranks omitted.
pub fn oracle_mor_homology(x: &ComplexB, y: &ComplexB, lo: i64, hi: i64) -> BTreeMap<(i64, i64), usize> {
    let hs = || {
        let hy: Vec<i64> = y.generators().iter().map(|g| g.h).collect();
        let hx: Vec<i64> = x.generators().iter().map(|g| g.h).collect();
        let min = hy.iter().min().unwrap() - hx.iter().max().unwrap();
        let max = hy.iter().max().unwrap() - hx.iter().min().unwrap();
        min..=max
    };
    let mut out = BTreeMap::new();
    for qq in lo..=hi {
        for h in hs() {
            let n = oracle_gens(x, y, qq, h).len();
            if n == 0 {
                continue;
            }
            let out_rank = dense_rank(oracle_matrix(x, y, qq, h));
            let in_rank = dense_rank(oracle_matrix(x, y, qq, h - 1));
            let r = n - out_rank - in_rank;
            if r > 0 {
                out.insert((qq, h), r);
            }
        }
    }
    out
}

/// Total dimension from the oracle over a generous window.
pub fn oracle_total(x: &ComplexB, y: &ComplexB) -> usize {
    let (xmin, xmax) = x.q_range().unwrap();
    let (ymin, ymax) = y.q_range().unwrap();
    let top = ymax - xmin;
    let span = (xmax - xmin) + (ymax - ymin) + 12;
    oracle_mor_homology(x, y, top - span, top).values().sum()
}

// ---------------------------------------------------------------------------
// Random complexes.

fn point(v: Vertex) -> ComplexB {
    ComplexB::new(vec![Generator::new("p", v, 0, 0)])
}

/// `[v -H^k-> v]` in the symmetric normalization.
pub fn figure_eight_at(v: Vertex, k: u64) -> ComplexB {
    ComplexB::new(vec![Generator::new("f0", v, -(k as i64), -1), Generator::new("f1", v, k as i64, 0)])
        .with_entry(0, 1, Element::h_pow(v, k))
        .unwrap()
}

/// An acyclic pair `[v -id-> v]`.
pub fn contractible(v: Vertex) -> ComplexB {
    ComplexB::new(vec![Generator::new("z0", v, 0, 0), Generator::new("z1", v, 0, 1)])
        .with_entry(0, 1, Element::identity(v))
        .unwrap()
}

fn split_piece(rng: &mut ChaCha8Rng, allow_arc: bool) -> ComplexB {
    match rng.gen_range(0..3) {
        0 if allow_arc => point(Vertex::B),
        _ => compile(Family::E(rng.gen_range(1..=3))).unwrap(),
    }
}

/// Compact (finite-pairing) pieces that contain an essential `c` generator.
fn compact_c_piece(rng: &mut ChaCha8Rng) -> ComplexB {
    let arcs = [
        Family::AInf,
        Family::AlphaPlus,
        Family::AlphaMinus,
        Family::AlphaPlusN(1),
        Family::AlphaMinusN(2),
        Family::AlphaPlusN(3),
    ];
    match rng.gen_range(0..3) {
        0 => figure_eight_at(Vertex::C, rng.gen_range(1..=2)),
        _ => khcurves::complex::cone_h(&compile(*arcs.choose(rng).unwrap()).unwrap()),
    }
}

fn shifted(rng: &mut ChaCha8Rng, x: ComplexB) -> ComplexB {
    shift_complex(&x, rng.gen_range(-4..=4), rng.gen_range(-2..=2))
}

/// Applies a random elementary change of basis `x_i ↦ x_i + w·x_j` with `w`
/// a word of the right degree, which keeps the complex valid.
pub fn scramble(rng: &mut ChaCha8Rng, x: &ComplexB, steps: usize) -> ComplexB {
    let mut m = x.clone();
    let n = m.len();
    for _ in 0..steps {
        if n < 2 {
            break;
        }
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (gi, gj) = (m.generator(i).clone(), m.generator(j).clone());
        if i == j || gi.h != gj.h {
            continue;
        }
        let depth = gj.q - gi.q;
        let words = word_between(gi.vertex, gj.vertex, depth);
        let Some(&w) = words.choose(rng) else { continue };
        let w = Element::from_word(Word::new(gi.vertex, gj.vertex, w).unwrap());
        // rows: d(x_i) += w·d(x_j); columns: entries a->i also reach j via ·w
        let row_j: Vec<(usize, Element)> = m.outgoing(j).map(|(z, e)| (z, e.clone())).collect();
        for (z, e) in row_j {
            m.add_entry(i, z, oracle_mul(&w, &e)).unwrap();
        }
        let col_i: Vec<(usize, Element)> =
            m.entries().filter(|&(_, b, _)| b == i).map(|(a, _, e)| (a, e.clone())).collect();
        for (a, e) in col_i {
            m.add_entry(a, j, oracle_mul(&e, &w)).unwrap();
        }
    }
    m
}

fn assemble(rng: &mut ChaCha8Rng, mut pieces: Vec<ComplexB>) -> ComplexB {
    pieces.shuffle(rng);
    let mut x = ComplexB::empty();
    for p in pieces {
        x = direct_sum(&x, &p);
    }
    let x = scramble(rng, &x, 12);
    let r = validate_complex(&x);
    assert!(r.is_valid(), "fixture invalid: {:?}", r.issues);
    x
}

/// A horizontally split complex: `a`/`e_k` pieces plus acyclic pairs.
pub fn random_split(rng: &mut ChaCha8Rng) -> ComplexB {
    let mut pieces: Vec<ComplexB> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let p = split_piece(rng, true);
            shifted(rng, p)
        })
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        let v = if rng.gen_bool(0.5) { Vertex::B } else { Vertex::C };
        let p = contractible(v);
        pieces.push(shifted(rng, p));
    }
    assemble(rng, pieces)
}

/// A complex that is not split: at least one piece with an essential `c`.
pub fn random_non_split(rng: &mut ChaCha8Rng) -> ComplexB {
    non_split(rng, true)
}

fn non_split(rng: &mut ChaCha8Rng, allow_arc: bool) -> ComplexB {
    let mut pieces = vec![{
        let p = compact_c_piece(rng);
        shifted(rng, p)
    }];
    for _ in 0..rng.gen_range(0..=2) {
        let p = if rng.gen_bool(0.5) { split_piece(rng, allow_arc) } else { compact_c_piece(rng) };
        pieces.push(shifted(rng, p));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let v = if rng.gen_bool(0.5) { Vertex::B } else { Vertex::C };
        let p = contractible(v);
        pieces.push(shifted(rng, p));
    }
    assemble(rng, pieces)
}

/// A complex of compact pieces plus acyclic pairs, paired finitely with any arc.
pub fn random_compact(rng: &mut ChaCha8Rng) -> ComplexB {
    if rng.gen_bool(0.5) {
        non_split(rng, false)
    } else {
        let mut pieces: Vec<ComplexB> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let p = compile(Family::E(rng.gen_range(1..=3))).unwrap();
                shifted(rng, p)
            })
            .collect();
        let p = contractible(Vertex::C);
        pieces.push(shifted(rng, p));
        assemble(rng, pieces)
    }
}
