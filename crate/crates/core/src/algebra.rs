//! The two-object quiver algebra over F₂ generated by `D` loops and `S`
//! arrows, modulo the relations killing every mixed `D`/`S` product.
//!
//! Every nonzero path is one of `Id`, `D^k` (a loop) or `S^m` (alternating
//! between the two objects), so an element is just a set of such words with
//! shared endpoints. Composition is read left to right: `a * b` means "first
//! `a`, then `b`".

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Object of the algebra: `B` is the crossingless tangle drawn `•`,
/// `C` the one drawn `∘`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Vertex {
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 2] = [Vertex::B, Vertex::C];

    pub fn other(self) -> Vertex {
        match self {
            Vertex::B => Vertex::C,
            Vertex::C => Vertex::B,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::B => write!(f, "b"),
            Vertex::C => write!(f, "c"),
        }
    }
}

/// Shape of a basis word, without its endpoints. Powers are positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordKind {
    Id,
    D(u64),
    S(u64),
}

impl WordKind {
    /// Quantum grading: `D` counts −2, `S` counts −1.
    pub fn q(self) -> i64 {
        -(self.depth() as i64)
    }

    /// Negated quantum grading, i.e. the length in `S`-units.
    pub fn depth(self) -> u64 {
        match self {
            WordKind::Id => 0,
            WordKind::D(k) => 2 * k,
            WordKind::S(m) => m,
        }
    }

    /// Multiplies by `D`; `S`-words are killed.
    pub fn times_d(self) -> Option<WordKind> {
        match self {
            WordKind::Id => Some(WordKind::D(1)),
            WordKind::D(k) => Some(WordKind::D(k + 1)),
            WordKind::S(_) => None,
        }
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WordKind::Id => write!(f, "id"),
            WordKind::D(1) => write!(f, "D"),
            WordKind::D(k) => write!(f, "D^{k}"),
            WordKind::S(1) => write!(f, "S"),
            WordKind::S(m) => write!(f, "S^{m}"),
        }
    }
}

/// A basis word of the algebra together with its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    from: Vertex,
    to: Vertex,
    kind: WordKind,
}

impl Word {
    pub fn new(from: Vertex, to: Vertex, kind: WordKind) -> Result<Word> {
        let ok = match kind {
            WordKind::Id => from == to,
            WordKind::D(k) => k > 0 && from == to,
            WordKind::S(m) => m > 0 && ((m % 2 == 1) == (from != to)),
        };
        if ok {
            Ok(Word { from, to, kind })
        } else {
            Err(Error::InvalidWord(format!("{kind} cannot run from {from} to {to}")))
        }
    }

    pub fn id(v: Vertex) -> Word {
        Word { from: v, to: v, kind: WordKind::Id }
    }

    pub fn d(v: Vertex, k: u64) -> Word {
        assert!(k > 0, "D power must be positive");
        Word { from: v, to: v, kind: WordKind::D(k) }
    }

    /// `S^m` starting at `from`; the target is determined by the parity of `m`.
    pub fn s(from: Vertex, m: u64) -> Word {
        assert!(m > 0, "S power must be positive");
        let to = if m % 2 == 1 { from.other() } else { from };
        Word { from, to, kind: WordKind::S(m) }
    }

    pub fn from(&self) -> Vertex {
        self.from
    }

    pub fn to(&self) -> Vertex {
        self.to
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn q(&self) -> i64 {
        self.kind.q()
    }

    pub fn depth(&self) -> u64 {
        self.kind.depth()
    }

    pub fn grading(&self) -> (i64, i64) {
        grading_of(self)
    }

    /// All basis words from `from` to `to` of quantum grading `-depth`.
    pub fn all_of_depth(from: Vertex, to: Vertex, depth: u64) -> Vec<Word> {
        let mut out = Vec::new();
        if depth == 0 {
            if from == to {
                out.push(Word::id(from));
            }
            return out;
        }
        if from == to {
            if depth.is_multiple_of(2) {
                out.push(Word::d(from, depth / 2));
                out.push(Word::s(from, depth));
            }
        } else if depth % 2 == 1 {
            out.push(Word::s(from, depth));
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

/// Bigrading `(q, h)` of a basis word; `h` is always zero.
pub fn grading_of(word: &Word) -> (i64, i64) {
    (word.q(), 0)
}

fn compose_kinds(a: WordKind, b: WordKind) -> Option<WordKind> {
    match (a, b) {
        (WordKind::Id, k) | (k, WordKind::Id) => Some(k),
        (WordKind::D(j), WordKind::D(k)) => Some(WordKind::D(j + k)),
        (WordKind::S(j), WordKind::S(k)) => Some(WordKind::S(j + k)),
        _ => None,
    }
}

/// Product "first `a`, then `b`" of two basis words.
pub fn word_compose(a: &Word, b: &Word) -> Result<Element> {
    if a.to != b.from {
        return Err(Error::CompositionMismatch(format!("{a} ends at {} but {b} starts at {}", a.to, b.from)));
    }
    let mut out = Element::zero(a.from, b.to);
    if let Some(kind) = compose_kinds(a.kind, b.kind) {
        out.words.insert(kind);
    }
    Ok(out)
}

/// An F₂-linear combination of basis words sharing the same endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    from: Vertex,
    to: Vertex,
    words: BTreeSet<WordKind>,
}

impl Element {
    pub fn zero(from: Vertex, to: Vertex) -> Element {
        Element { from, to, words: BTreeSet::new() }
    }

    pub fn identity(v: Vertex) -> Element {
        Element::from_word(Word::id(v))
    }

    pub fn from_word(word: Word) -> Element {
        let mut words = BTreeSet::new();
        words.insert(word.kind);
        Element { from: word.from, to: word.to, words }
    }

    /// Sum of the given words; repeated words cancel in pairs.
    pub fn from_words<I>(from: Vertex, to: Vertex, words: I) -> Result<Element>
    where
        I: IntoIterator<Item = WordKind>,
    {
        let mut out = Element::zero(from, to);
        for kind in words {
            Word::new(from, to, kind)?;
            out.toggle(kind);
        }
        Ok(out)
    }

    /// The central element `H = D + S²` at `v`.
    pub fn h(v: Vertex) -> Element {
        Element::h_pow(v, 1)
    }

    /// `H^k = D^k + S^{2k}` at `v`; `H^0` is the identity.
    pub fn h_pow(v: Vertex, k: u64) -> Element {
        if k == 0 {
            return Element::identity(v);
        }
        let mut words = BTreeSet::new();
        words.insert(WordKind::D(k));
        words.insert(WordKind::S(2 * k));
        Element { from: v, to: v, words }
    }

    /// Multiplication by `D`, which is central and kills every `S`-word.
    pub fn times_d(&self) -> Element {
        let words = self.words.iter().filter_map(|k| k.times_d()).collect();
        Element { from: self.from, to: self.to, words }
    }

    pub fn from(&self) -> Vertex {
        self.from
    }

    pub fn to(&self) -> Vertex {
        self.to
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn kinds(&self) -> impl Iterator<Item = WordKind> + '_ {
        self.words.iter().copied()
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().map(move |&kind| Word { from: self.from, to: self.to, kind })
    }

    pub fn contains(&self, kind: WordKind) -> bool {
        self.words.contains(&kind)
    }

    pub fn is_identity(&self) -> bool {
        self.words.len() == 1 && self.contains(WordKind::Id)
    }

    /// Adds (xors) a single word in place.
    pub fn toggle(&mut self, kind: WordKind) {
        if !self.words.remove(&kind) {
            self.words.insert(kind);
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Element) -> Result<()> {
        if (self.from, self.to) != (other.from, other.to) {
            return Err(Error::CompositionMismatch(format!(
                "cannot add {}->{} and {}->{} elements",
                self.from, self.to, other.from, other.to
            )));
        }
        for &kind in &other.words {
            self.toggle(kind);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        element_mul(self, other)
    }

    /// Common quantum grading of all words, if there is exactly one.
    pub fn homogeneous_q(&self) -> Option<i64> {
        let mut qs = self.words.iter().map(|k| k.q());
        let first = qs.next()?;
        qs.all(|q| q == first).then_some(first)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.words.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// F₂-bilinear extension of [`word_compose`].
pub fn element_mul(a: &Element, b: &Element) -> Result<Element> {
    if a.to != b.from {
        return Err(Error::CompositionMismatch(format!(
            "left factor ends at {} but right factor starts at {}",
            a.to, b.from
        )));
    }
    let mut out = Element::zero(a.from, b.to);
    for &x in &a.words {
        for &y in &b.words {
            if let Some(kind) = compose_kinds(x, y) {
                out.toggle(kind);
            }
        }
    }
    Ok(out)
}

/// Whether `H·a = a·H`, with `H` taken at the source and target of `a`.
pub fn central_commutes(a: &Element) -> bool {
    let left = element_mul(&Element::h(a.from), a);
    let right = element_mul(a, &Element::h(a.to));
    matches!((left, right), (Ok(l), Ok(r)) if l == r)
}

/// Wire form of a word: `{"kind": "id"|"D"|"S", "power": k, "from": "b", "to": "c"}`.
///
/// Inside a differential label the endpoints are implied by the entry and may
/// be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<Vertex>,
}

impl WordJson {
    pub fn from_kind(kind: WordKind) -> WordJson {
        let (name, power) = match kind {
            WordKind::Id => ("id", 0),
            WordKind::D(k) => ("D", k),
            WordKind::S(m) => ("S", m),
        };
        WordJson { kind: name.to_string(), power: Some(power), from: None, to: None }
    }

    pub fn from_word(word: &Word) -> WordJson {
        WordJson { from: Some(word.from), to: Some(word.to), ..WordJson::from_kind(word.kind) }
    }

    pub fn to_kind(&self) -> Result<WordKind> {
        match (self.kind.as_str(), self.power) {
            ("id", None | Some(0)) => Ok(WordKind::Id),
            ("D", Some(k)) if k > 0 => Ok(WordKind::D(k)),
            ("S", Some(m)) if m > 0 => Ok(WordKind::S(m)),
            (kind, power) => Err(Error::Parse(format!("bad word kind/power: {kind:?}/{power:?}"))),
        }
    }

    /// Resolves the word, using `from`/`to` as defaults for missing endpoints.
    pub fn to_word(&self, from: Option<Vertex>, to: Option<Vertex>) -> Result<Word> {
        let kind = self.to_kind()?;
        let pick = |given: Option<Vertex>, default: Option<Vertex>, end: &str| -> Result<Vertex> {
            match (given, default) {
                (Some(g), Some(d)) if g != d => {
                    Err(Error::Parse(format!("word {end} {g} disagrees with entry endpoint {d}")))
                }
                (Some(v), _) | (None, Some(v)) => Ok(v),
                (None, None) => Err(Error::Parse(format!("word is missing its `{end}` vertex"))),
            }
        };
        Word::new(pick(self.from, from, "from")?, pick(self.to, to, "to")?, kind)
    }
}

pub fn element_to_json(e: &Element) -> Vec<WordJson> {
    e.kinds().map(WordJson::from_kind).collect()
}
