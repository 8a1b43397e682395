//! Slopes, curve metadata, the mapping class group action, and the named
//! families of arc and compact-curve complexes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Element, Vertex, Word};
use crate::complex::{cone_h, shift_complex, ComplexB, Generator};
use crate::error::{Error, Result};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A slope `p/q` in lowest terms with `q >= 0`; `∞` is stored as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn is_infinite(self) -> bool {
        self.q == 0
    }

    pub fn is_integer(self) -> bool {
        self.q == 1
    }
}

pub fn normalize_slope(p: i64, q: i64) -> Result<Slope> {
    if p == 0 && q == 0 {
        return Err(Error::InvalidSlope("0/0 is not a slope".into()));
    }
    if q == 0 {
        return Ok(Slope::INFINITY);
    }
    let g = gcd(p, q);
    let sign = q.signum();
    Ok(Slope { p: sign * p / g, q: sign * q / g })
}

/// `|q·p' - p·q'|` for slopes `p/q` and `p'/q'`.
pub fn delta(s: Slope, r: Slope) -> u64 {
    (s.q * r.p - s.p * r.q).unsigned_abs()
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q`, an integer, `inf` or `∞`.
    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Slope::INFINITY);
        }
        let bad = || Error::InvalidSlope(format!("cannot parse `{s}`"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        normalize_slope(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Slope, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Arc,
    Rational,
    Special,
    /// The generalized figure-eight `e_k`; its length is `k`.
    FigureEight,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveKind::Arc => "arc",
            CurveKind::Rational => "rational",
            CurveKind::Special => "special",
            CurveKind::FigureEight => "figure_eight",
        })
    }
}

fn one() -> u64 {
    1
}

fn is_zero(v: &i64) -> bool {
    *v == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveComponent {
    pub kind: CurveKind,
    pub slope: Slope,
    pub length: u64,
    /// Quantum shift relative to the family's default normalization.
    #[serde(skip_serializing_if = "is_zero")]
    pub q_anchor: i64,
    pub local_system_dim: u64,
}

#[derive(Deserialize)]
struct ComponentWire {
    kind: CurveKind,
    slope: Slope,
    #[serde(default = "one")]
    length: u64,
    #[serde(default)]
    q_anchor: i64,
    #[serde(default = "one")]
    local_system_dim: u64,
}

impl<'de> Deserialize<'de> for CurveComponent {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<CurveComponent, D::Error> {
        let w = ComponentWire::deserialize(de)?;
        let c = CurveComponent {
            kind: w.kind,
            slope: w.slope,
            length: w.length,
            q_anchor: w.q_anchor,
            local_system_dim: w.local_system_dim,
        };
        c.check().map_err(serde::de::Error::custom)?;
        Ok(c)
    }
}

impl CurveComponent {
    pub fn new(kind: CurveKind, slope: Slope, length: u64) -> Result<CurveComponent> {
        let c = CurveComponent { kind, slope, length, q_anchor: 0, local_system_dim: 1 };
        c.check()?;
        Ok(c)
    }

    pub fn arc(slope: Slope) -> CurveComponent {
        CurveComponent { kind: CurveKind::Arc, slope, length: 1, q_anchor: 0, local_system_dim: 1 }
    }

    pub fn rational(slope: Slope, length: u64) -> Result<CurveComponent> {
        CurveComponent::new(CurveKind::Rational, slope, length)
    }

    pub fn special(slope: Slope, length: u64) -> Result<CurveComponent> {
        CurveComponent::new(CurveKind::Special, slope, length)
    }

    pub fn figure_eight(k: u64) -> Result<CurveComponent> {
        CurveComponent::new(CurveKind::FigureEight, Slope::ZERO, k)
    }

    pub fn with_anchor(mut self, q_anchor: i64) -> CurveComponent {
        self.q_anchor = q_anchor;
        self
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidComponent(format!("{} {}: {msg}", self.kind, self.slope)));
        if self.length == 0 {
            return bad("length must be positive");
        }
        if self.local_system_dim != 1 {
            return bad("only trivial one-dimensional local systems are supported");
        }
        match self.kind {
            CurveKind::Arc if self.length != 1 => bad("arcs have length 1"),
            CurveKind::Special if !self.length.is_multiple_of(2) => bad("special components have even length"),
            CurveKind::FigureEight if self.slope != Slope::ZERO => bad("figure-eight curves have slope 0"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CurveComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CurveKind::Arc => write!(f, "a({})", self.slope)?,
            CurveKind::Rational => write!(f, "r{}({})", self.length, self.slope)?,
            CurveKind::Special => write!(f, "s{}({})", self.length, self.slope)?,
            CurveKind::FigureEight => write!(f, "e{}({})", self.length, self.slope)?,
        }
        if self.q_anchor != 0 {
            write!(f, "[q{:+}]", self.q_anchor)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multicurve {
    pub components: Vec<CurveComponent>,
}

impl Multicurve {
    pub fn new(components: Vec<CurveComponent>) -> Multicurve {
        Multicurve { components }
    }

    pub fn from_json_str(s: &str) -> Result<Multicurve> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("multicurve serializes")
    }
}

impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub type Matrix2 = [[i64; 2]; 2];

pub fn apply_to_slope(m: &Matrix2, s: Slope) -> Result<Slope> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det != 1 {
        return Err(Error::NotUnimodular(det));
    }
    let (b, a) = (s.q, s.p);
    normalize_slope(m[1][0] * b + m[1][1] * a, m[0][0] * b + m[0][1] * a)
}

/// Acts on every slope through `(q, p) ↦ m·(q, p)`. Kind, length and
/// grading anchor are kept as they are.
pub fn mcg_apply(m: &Matrix2, c: &Multicurve) -> Result<Multicurve> {
    let components = c
        .components
        .iter()
        .map(|comp| Ok(CurveComponent { slope: apply_to_slope(m, comp.slope)?, ..comp.clone() }))
        .collect::<Result<_>>()?;
    Ok(Multicurve { components })
}

/// Named complexes with known geometric meaning.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Horizontal arc `[b]`.
    A0,
    /// Vertical arc `[c]`.
    AInf,
    /// Figure-eight `[b -H^k-> b]`.
    E(u64),
    /// `r1(0)` in the unknot normalization; the same complex as `e1`.
    R1Zero,
    /// `[c -H-> c]`.
    R1Inf,
    /// Arc of slope 2: `[c -D-> c -S-> b]`.
    AlphaPlus,
    /// Arc of slope -2: `[b -S-> c -D-> c]`.
    AlphaMinus,
    /// Arc of slope `1/n`: `c -S-> b -D-> b -S²-> ... b`.
    AlphaPlusN(u64),
    /// Arc of slope `-1/n`: `b ... -D-> b -S-> c`.
    AlphaMinusN(u64),
    /// Arc of slope `1/2n`.
    AlphaHalf(i64),
    /// Arc invariant of the trefoil tangle: `[c -S-> b -D-> b -S²-> b]`.
    BnQ13,
}

impl Family {
    /// Resolves aliases to the family the classifier reports.
    pub fn canonical(self) -> Family {
        match self {
            Family::R1Zero => Family::E(1),
            Family::BnQ13 => Family::AlphaPlusN(3),
            Family::AlphaHalf(n) if n > 0 => Family::AlphaPlusN(2 * n as u64),
            Family::AlphaHalf(0) => Family::AInf,
            Family::AlphaHalf(n) => Family::AlphaMinusN(2 * n.unsigned_abs()),
            f => f,
        }
    }

    pub fn kind(self) -> CurveKind {
        match self {
            Family::E(_) => CurveKind::FigureEight,
            Family::R1Zero | Family::R1Inf => CurveKind::Rational,
            _ => CurveKind::Arc,
        }
    }

    pub fn slope(self) -> Slope {
        match self {
            Family::A0 | Family::E(_) | Family::R1Zero => Slope::ZERO,
            Family::AInf | Family::R1Inf => Slope::INFINITY,
            Family::AlphaPlus => Slope::integer(2),
            Family::AlphaMinus => Slope::integer(-2),
            Family::AlphaPlusN(n) => Slope { p: 1, q: n as i64 },
            Family::AlphaMinusN(n) => Slope { p: -1, q: n as i64 },
            Family::AlphaHalf(0) => Slope::INFINITY,
            Family::AlphaHalf(n) => normalize_slope(1, 2 * n).expect("nonzero"),
            Family::BnQ13 => Slope { p: 1, q: 3 },
        }
    }

    /// Curve metadata for this family (default anchor).
    pub fn component(self) -> CurveComponent {
        let length = match self {
            Family::E(k) => k,
            _ => 1,
        };
        CurveComponent { kind: self.kind(), slope: self.slope(), length, q_anchor: 0, local_system_dim: 1 }
    }

    pub fn is_arc(self) -> bool {
        self.kind() == CurveKind::Arc
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A0 => write!(f, "a0"),
            Family::AInf => write!(f, "a-inf"),
            Family::E(k) => write!(f, "e{k}"),
            Family::R1Zero => write!(f, "r1-0"),
            Family::R1Inf => write!(f, "r1-inf"),
            Family::AlphaPlus => write!(f, "alpha-plus"),
            Family::AlphaMinus => write!(f, "alpha-minus"),
            Family::AlphaPlusN(n) => write!(f, "alpha-plus-n{n}"),
            Family::AlphaMinusN(n) => write!(f, "alpha-minus-n{n}"),
            Family::AlphaHalf(n) if *n < 0 => write!(f, "alpha-2n-m{}", n.unsigned_abs()),
            Family::AlphaHalf(n) => write!(f, "alpha-2n-{n}"),
            Family::BnQ13 => write!(f, "bn-q13"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let unknown = || Error::UnsupportedFamily(format!("unknown family `{s}`"));
        let num = |t: &str| t.parse::<u64>().map_err(|_| unknown());
        let f = match s {
            "a0" => Family::A0,
            "a-inf" => Family::AInf,
            "r1-0" => Family::R1Zero,
            "r1-inf" => Family::R1Inf,
            "alpha-plus" => Family::AlphaPlus,
            "alpha-minus" => Family::AlphaMinus,
            "bn-q13" => Family::BnQ13,
            _ => {
                if let Some(k) = s.strip_prefix("alpha-plus-n") {
                    Family::AlphaPlusN(num(k)?)
                } else if let Some(k) = s.strip_prefix("alpha-minus-n") {
                    Family::AlphaMinusN(num(k)?)
                } else if let Some(k) = s.strip_prefix("alpha-2n-m") {
                    Family::AlphaHalf(-(num(k)? as i64))
                } else if let Some(k) = s.strip_prefix("alpha-2n-") {
                    Family::AlphaHalf(num(k)? as i64)
                } else if let Some(k) = s.strip_prefix('e') {
                    Family::E(num(k)?)
                } else {
                    return Err(unknown());
                }
            }
        };
        Ok(f)
    }
}

fn el(w: Word) -> Element {
    Element::from_word(w)
}

/// Builds a zig-zag `g0 -> g1 -> ... -> g_{n-1}` with all arrows pointing
/// right; the last generator has `h = 0`.
fn chain(points: &[(Vertex, i64)], labels: Vec<Element>) -> ComplexB {
    let n = points.len() as i64;
    let generators =
        points.iter().enumerate().map(|(i, &(v, q))| Generator::new(format!("x{i}"), v, q, i as i64 + 1 - n)).collect();
    let mut x = ComplexB::new(generators);
    for (i, label) in labels.into_iter().enumerate() {
        x.add_entry(i, i + 1, label).expect("chain labels match vertices");
    }
    x
}

fn alpha_plus_n(n: u64) -> ComplexB {
    let n = n as i64;
    let mut points = vec![(Vertex::C, -2 * n)];
    let mut labels = vec![el(Word::s(Vertex::C, 1))];
    for i in 1..=n {
        points.push((Vertex::B, 2 * i - 1 - 2 * n));
        if i < n {
            labels.push(if i % 2 == 1 { el(Word::d(Vertex::B, 1)) } else { el(Word::s(Vertex::B, 2)) });
        }
    }
    chain(&points, labels)
}

fn alpha_minus_n(n: u64) -> ComplexB {
    let n = n as i64;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=n {
        points.push((Vertex::B, 2 * i - 1));
        if i < n {
            labels.push(if (n - i) % 2 == 1 { el(Word::d(Vertex::B, 1)) } else { el(Word::s(Vertex::B, 2)) });
        }
    }
    points.push((Vertex::C, 2 * n));
    labels.push(el(Word::s(Vertex::B, 1)));
    chain(&points, labels)
}

/// The complex of a named family in its default normalization.
pub fn compile(family: Family) -> Result<ComplexB> {
    use Vertex::{B, C};
    let x = match family {
        Family::A0 => chain(&[(B, 0)], vec![]),
        Family::AInf | Family::AlphaHalf(0) => chain(&[(C, 0)], vec![]),
        Family::E(0) => return Err(Error::UnsupportedFamily("e_k needs k >= 1".into())),
        Family::E(k) => chain(&[(B, -(k as i64)), (B, k as i64)], vec![Element::h_pow(B, k)]),
        Family::R1Zero => cone_h(&chain(&[(B, 0)], vec![])),
        Family::R1Inf => cone_h(&chain(&[(C, 0)], vec![])),
        Family::AlphaPlus => chain(&[(C, -5), (C, -3), (B, -2)], vec![el(Word::d(C, 1)), el(Word::s(C, 1))]),
        Family::AlphaMinus => chain(&[(B, -4), (C, -3), (C, -1)], vec![el(Word::s(B, 1)), el(Word::d(C, 1))]),
        Family::AlphaPlusN(0) | Family::AlphaMinusN(0) => {
            return Err(Error::UnsupportedFamily("slope ±1/n needs n >= 1".into()))
        }
        Family::AlphaPlusN(n) => alpha_plus_n(n),
        Family::AlphaMinusN(n) => alpha_minus_n(n),
        Family::AlphaHalf(n) if n > 0 => alpha_plus_n(2 * n as u64),
        Family::AlphaHalf(n) => alpha_minus_n(2 * n.unsigned_abs()),
        Family::BnQ13 => shift_complex(&alpha_plus_n(3), 6, 0),
    };
    Ok(x)
}

/// The arc family of a given slope, if one is compiled.
pub fn arc_family(slope: Slope) -> Option<Family> {
    match (slope.p, slope.q) {
        (0, 1) => Some(Family::A0),
        (1, 0) => Some(Family::AInf),
        (2, 1) => Some(Family::AlphaPlus),
        (-2, 1) => Some(Family::AlphaMinus),
        (1, n) if n > 0 => Some(Family::AlphaPlusN(n as u64)),
        (-1, n) if n > 0 => Some(Family::AlphaMinusN(n as u64)),
        _ => None,
    }
}

/// A complex for a curve component, where one is available.
///
/// Arcs of slope 0, ∞, ±2 and ±1/n compile to their families; a length-one
/// rational component of slope `s` compiles to the `H`-cone of the arc of
/// slope `s`; `e_k` compiles directly. The component's `q_anchor` is applied
/// as a quantum shift.
pub fn compile_component(c: &CurveComponent) -> Result<ComplexB> {
    let unsupported = || Error::UnsupportedFamily(format!("no algebraic complex for {c}"));
    let base = match c.kind {
        CurveKind::Arc => compile(arc_family(c.slope).ok_or_else(unsupported)?)?,
        CurveKind::Rational if c.length == 1 => match arc_family(c.slope).ok_or_else(unsupported)? {
            Family::A0 => compile(Family::R1Zero)?,
            Family::AInf => compile(Family::R1Inf)?,
            f => cone_h(&compile(f)?),
        },
        CurveKind::FigureEight => compile(Family::E(c.length))?,
        CurveKind::Rational | CurveKind::Special => return Err(unsupported()),
    };
    Ok(shift_complex(&base, c.q_anchor, 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentMatch {
    /// `None` when the component matches no compiled family.
    pub family: Option<String>,
    #[serde(skip)]
    pub family_tag: Option<Family>,
    pub q_shift: i64,
    pub h_shift: i64,
    pub generators: Vec<String>,
}

fn path_order(x: &ComplexB, comp: &[usize]) -> Option<Vec<usize>> {
    if comp.len() == 1 {
        return Some(comp.to_vec());
    }
    let mut nbrs: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    let mut edges = 0;
    for (i, j, _) in x.entries() {
        if comp.contains(&i) {
            nbrs.entry(i).or_default().push(j);
            nbrs.entry(j).or_default().push(i);
            edges += 1;
        }
    }
    if edges != comp.len() - 1 || nbrs.values().any(|v| v.len() > 2) {
        return None;
    }
    let start = *comp.iter().find(|i| nbrs[i].len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < comp.len() {
        let next = *nbrs[&cur].iter().find(|&&n| n != prev)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

fn candidates(x: &ComplexB, path: &[usize]) -> Vec<Family> {
    match path.len() {
        1 => vec![Family::A0, Family::AInf],
        2 => {
            let mut out = vec![Family::R1Inf, Family::AlphaPlusN(1), Family::AlphaMinusN(1)];
            let label = x.entry(path[0], path[1]).or_else(|| x.entry(path[1], path[0]));
            if let Some(k) = label.and_then(|e| e.homogeneous_q()).filter(|q| *q < 0 && q % 2 == 0) {
                out.push(Family::E((-k / 2) as u64));
            }
            out
        }
        3 => vec![Family::AlphaPlus, Family::AlphaMinus, Family::AlphaPlusN(2), Family::AlphaMinusN(2)],
        n => vec![Family::AlphaPlusN(n as u64 - 1), Family::AlphaMinusN(n as u64 - 1)],
    }
}

/// Splits a reduced complex into connected components and matches each
/// against the compiled families up to an overall bigrading shift.
pub fn classify_reduced_complex(x: &ComplexB) -> Vec<ComponentMatch> {
    x.components()
        .into_iter()
        .map(|comp| {
            let ids = comp.iter().map(|&i| x.generator(i).id.clone()).collect();
            let found = path_order(x, &comp).and_then(|path| {
                let mut reversed = path.clone();
                reversed.reverse();
                for order in [path, reversed] {
                    let sub = x.restrict(&order);
                    for fam in candidates(x, &order) {
                        let Ok(cand) = compile(fam) else { continue };
                        if cand.len() != sub.len() {
                            continue;
                        }
                        let dq = sub.generator(0).q - cand.generator(0).q;
                        let dh = sub.generator(0).h - cand.generator(0).h;
                        if shift_complex(&cand, dq, dh).same_shape(&sub) {
                            return Some((fam, dq, dh));
                        }
                    }
                }
                None
            });
            match found {
                Some((fam, dq, dh)) => ComponentMatch {
                    family: Some(fam.to_string()),
                    family_tag: Some(fam),
                    q_shift: dq,
                    h_shift: dh,
                    generators: ids,
                },
                None => ComponentMatch { family: None, family_tag: None, q_shift: 0, h_shift: 0, generators: ids },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{direct_sum, validate_complex};

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_slope(2, 4).unwrap(), sl("1/2"));
        assert_eq!(normalize_slope(-3, 0).unwrap(), Slope::INFINITY);
        assert_eq!(normalize_slope(1, -2).unwrap(), Slope { p: -1, q: 2 });
        assert!(normalize_slope(0, 0).is_err());
        assert_eq!(normalize_slope(0, -5).unwrap(), Slope::ZERO);
    }

    #[test]
    fn slope_parsing() {
        assert_eq!(sl("inf"), Slope::INFINITY);
        assert_eq!(sl("-2"), Slope::integer(-2));
        assert_eq!(sl("3/-6"), Slope { p: -1, q: 2 });
        assert!("x/2".parse::<Slope>().is_err());
        assert_eq!(sl(&sl("-1/3").to_string()), sl("-1/3"));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(sl("1/2"), sl("0")), 1);
        assert_eq!(delta(Slope::INFINITY, Slope::ZERO), 1);
        assert_eq!(delta(sl("1/3"), Slope::INFINITY), 3);
        assert_eq!(delta(sl("-2"), sl("2")), 4);
    }

    #[test]
    fn mcg_examples() {
        let r10 = Multicurve::new(vec![CurveComponent::rational(Slope::ZERO, 1).unwrap()]);
        let out = mcg_apply(&[[1, 0], [1, 1]], &r10).unwrap();
        assert_eq!(out.components[0].slope, sl("1"));
        let out = mcg_apply(&[[3, 1], [2, 1]], &r10).unwrap();
        assert_eq!(out.components[0].slope, sl("2/3"));
        assert_eq!(mcg_apply(&[[1, 0], [0, 1]], &r10).unwrap(), r10);
        assert_eq!(mcg_apply(&[[2, 0], [0, 1]], &r10), Err(Error::NotUnimodular(2)));
    }

    #[test]
    fn component_invariants() {
        assert!(CurveComponent::special(Slope::ZERO, 3).is_err());
        assert!(CurveComponent::new(CurveKind::Arc, Slope::ZERO, 2).is_err());
        let parsed: std::result::Result<CurveComponent, _> =
            serde_json::from_str(r#"{"kind":"rational","slope":"1/2","local_system_dim":2}"#);
        assert!(parsed.is_err());
    }

    #[test]
    fn multicurve_json() {
        let text = r#"{"components":[{"kind":"special","slope":"0/1","length":4,"q_anchor":0},
                                    {"kind":"rational","slope":"1/2","length":1}]}"#;
        let c = Multicurve::from_json_str(text).unwrap();
        assert_eq!(c.components[0].length, 4);
        assert_eq!(c.components[1].slope, sl("1/2"));
        assert_eq!(Multicurve::from_json_str(&c.to_json_string()).unwrap(), c);
    }

    #[test]
    fn compile_examples() {
        let a = compile(Family::AlphaPlusN(1)).unwrap();
        let expected =
            ComplexB::new(vec![Generator::new("x0", Vertex::C, -2, -1), Generator::new("x1", Vertex::B, -1, 0)])
                .with_entry(0, 1, el(Word::s(Vertex::C, 1)))
                .unwrap();
        assert_eq!(a, expected);
        assert_eq!(compile(Family::AlphaHalf(0)).unwrap().generators()[0].vertex, Vertex::C);
        let e2 = compile(Family::E(2)).unwrap();
        assert_eq!(e2.entry(0, 1).unwrap().to_string(), "D^2+S^4");
        assert!(compile(Family::E(0)).is_err());
    }

    #[test]
    fn e1_is_cone_of_point() {
        let point = ComplexB::new(vec![Generator::new("x", Vertex::B, 0, 0)]);
        assert!(compile(Family::E(1)).unwrap().same_shape(&cone_h(&point)));
        assert!(compile(Family::R1Zero).unwrap().same_shape(&compile(Family::E(1)).unwrap()));
    }

    #[test]
    fn printed_gradings() {
        let a = compile(Family::AlphaPlusN(4)).unwrap();
        let qs: Vec<i64> = a.generators().iter().map(|g| g.q).collect();
        assert_eq!(qs, vec![-8, -7, -5, -3, -1]);
        let a = compile(Family::AlphaMinusN(4)).unwrap();
        let qs: Vec<i64> = a.generators().iter().map(|g| g.q).collect();
        assert_eq!(qs, vec![1, 3, 5, 7, 8]);
        // the D arrows sit at B^{4j-3-2n} and B^{2n+1-4j}
        assert!(a.entry(0, 1).unwrap().to_string() == "D" && a.entry(2, 3).unwrap().to_string() == "D");
        let h = compile(Family::AlphaHalf(2)).unwrap();
        assert_eq!(h.generator(0).q, -8);
        assert_eq!(compile(Family::AlphaHalf(-2)).unwrap().generators().last().unwrap().q, 8);
    }

    fn grid() -> Vec<Family> {
        let mut out = vec![
            Family::A0,
            Family::AInf,
            Family::R1Zero,
            Family::R1Inf,
            Family::AlphaPlus,
            Family::AlphaMinus,
            Family::BnQ13,
        ];
        for k in 1..=4 {
            out.push(Family::E(k));
        }
        for n in 1..=6 {
            out.push(Family::AlphaPlusN(n));
            out.push(Family::AlphaMinusN(n));
        }
        for n in -3..=3 {
            out.push(Family::AlphaHalf(n));
        }
        out
    }

    #[test]
    fn compiled_are_valid_and_reduced() {
        for f in grid() {
            let x = compile(f).unwrap();
            let r = validate_complex(&x);
            assert!(r.is_valid() && r.reduced, "{f}: {:?}", r.issues);
        }
    }

    #[test]
    fn classify_inverts_compile() {
        for f in grid() {
            let x = compile(f).unwrap();
            let m = classify_reduced_complex(&x);
            assert_eq!(m.len(), 1, "{f}");
            assert_eq!(m[0].family_tag, Some(f.canonical()), "{f}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in grid() {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn classify_examples() {
        let x = ComplexB::new(vec![Generator::new("p", Vertex::B, 5, 2)]);
        let m = classify_reduced_complex(&x);
        assert_eq!((m[0].family_tag, m[0].q_shift), (Some(Family::A0), 5));

        let s = direct_sum(&compile(Family::E(1)).unwrap(), &shift_complex(&compile(Family::A0).unwrap(), 3, 1));
        let tags: Vec<_> = classify_reduced_complex(&s).into_iter().map(|m| m.family_tag).collect();
        assert_eq!(tags, vec![Some(Family::E(1)), Some(Family::A0)]);

        let m = classify_reduced_complex(&compile(Family::AlphaPlus).unwrap());
        assert_eq!((m[0].family_tag, m[0].q_shift), (Some(Family::AlphaPlus), 0));

        // a zig-zag not in the library
        let odd = chain(
            &[(Vertex::B, 0), (Vertex::C, 1), (Vertex::B, 2)],
            vec![el(Word::s(Vertex::B, 1)), el(Word::s(Vertex::C, 1))],
        );
        assert_eq!(classify_reduced_complex(&odd)[0].family, None);
    }
}
