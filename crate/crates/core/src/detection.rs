//! Detection checks on complexes and multicurves: horizontal splitting,
//! rational tangles, connectivity parity, the cosmetic surgery scan, the
//! cosmetic crossing report for twist families, and split closures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::algebra::{Vertex, WordKind};
use crate::complex::{gauss_reduce, ComplexB};
use crate::curve::{
    classify_reduced_complex, compile, normalize_slope, ComponentMatch, CurveComponent, CurveKind, Family, Multicurve,
    Slope,
};
use crate::error::{Error, Result};
use crate::pairing::geometric_dim;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitVerdict {
    pub split: bool,
    /// Offending `c` generators when not split, recognized components otherwise.
    pub evidence: Vec<String>,
    pub components: Vec<ComponentMatch>,
    /// When split: whether every component was recognized as an `a` or `e_k` piece.
    pub classifier_agrees: bool,
}

/// A complex (in either the `H`-cone form or not) is horizontally split
/// exactly when its reduction has no `c` generator.
pub fn detect_split(x: &ComplexB) -> SplitVerdict {
    let reduced = gauss_reduce(x);
    let c_gens: Vec<String> = reduced
        .generators()
        .iter()
        .filter(|g| g.vertex == Vertex::C)
        .map(|g| format!("c generator {} at (q,h)=({},{})", g.id, g.q, g.h))
        .collect();
    let components = classify_reduced_complex(&reduced);
    let split = c_gens.is_empty();
    let classifier_agrees =
        split && components.iter().all(|m| matches!(m.family_tag, Some(Family::A0) | Some(Family::E(_))));
    let evidence = if split {
        components
            .iter()
            .map(|m| match &m.family {
                Some(f) => format!("{f} shifted by q{:+} h{:+}", m.q_shift, m.h_shift),
                None => format!("unrecognized b-only component {:?}", m.generators),
            })
            .collect()
    } else {
        c_gens
    };
    SplitVerdict { split, evidence, components, classifier_agrees }
}

/// A tangle is rational exactly when its curve is a single `r1`.
pub fn detect_rational(c: &Multicurve) -> bool {
    matches!(c.components.as_slice(), [only] if only.kind == CurveKind::Rational && only.length == 1)
}

/// Which pairs of tangle endpoints are connected by the strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    No,
    Ni,
    Nio,
}

impl FromStr for Connectivity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Connectivity> {
        match s.to_ascii_lowercase().as_str() {
            "no" | "n∘" => Ok(Connectivity::No),
            "ni" => Ok(Connectivity::Ni),
            "nio" => Ok(Connectivity::Nio),
            _ => Err(Error::Parse(format!("unknown connectivity `{s}` (expected no, ni or nio)"))),
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::No => "no",
            Connectivity::Ni => "ni",
            Connectivity::Nio => "nio",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub component: String,
    pub reason: String,
}

/// With connectivity `No`, every odd-length rational component must have
/// even numerator. Lists the components that do not.
pub fn connectivity_check(conn: Connectivity, c: &Multicurve) -> Vec<Violation> {
    if conn != Connectivity::No {
        return Vec::new();
    }
    c.components
        .iter()
        .enumerate()
        .filter(|(_, g)| g.kind == CurveKind::Rational && g.length % 2 == 1 && g.slope.p() % 2 != 0)
        .map(|(index, g)| Violation {
            index,
            component: g.to_string(),
            reason: format!("odd-length rational component with odd numerator {}", g.slope.p()),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    DistinguishedByDimension,
    DistinguishedByQuantumShift,
    Indistinguishable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopePair {
    /// The pair of filling slopes being compared, e.g. `2/1` and `-2/1`.
    pub slopes: (Slope, Slope),
    /// Total dimensions of the two fillings.
    pub dims: (u64, u64),
    /// Contribution of the rational component to each.
    pub rational_dims: (u64, u64),
    /// `q(x_-) - q(x_+)` for matched generators on the special components.
    pub shifts: Vec<i64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EcscReport {
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_slope: Option<Slope>,
    pub specials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case1: Option<SlopePair>,
    pub case2: BTreeMap<u64, SlopePair>,
}

impl EcscReport {
    fn inapplicable(reason: impl Into<String>) -> EcscReport {
        EcscReport {
            applicable: false,
            reason: Some(reason.into()),
            rational_slope: None,
            specials: 0,
            case1: None,
            case2: BTreeMap::new(),
        }
    }

    pub fn any_indistinguishable(&self) -> bool {
        self.case1.iter().chain(self.case2.values()).any(|p| p.verdict == Verdict::Indistinguishable)
    }
}

fn b_generator_q(x: &ComplexB, first: bool) -> i64 {
    let mut bs = x.generators().iter().filter(|g| g.vertex == Vertex::B);
    let g = if first { bs.next() } else { bs.next_back() };
    g.expect("arc has a b generator").q
}

/// Sources of the `D`-labelled arrows, ordered by generator position.
fn d_arrow_sources(x: &ComplexB) -> Vec<i64> {
    x.entries().filter(|(_, _, e)| e.contains(WordKind::D(1))).map(|(i, _, _)| x.generator(i).q).collect()
}

/// Quantum shifts between the slope-2 and slope-(-2) arcs on specials:
/// minus the grading difference of their `b` generators.
pub fn case1_shift() -> i64 {
    let plus = compile(Family::AlphaPlus).expect("compiled");
    let minus = compile(Family::AlphaMinus).expect("compiled");
    -(b_generator_q(&minus, true) - b_generator_q(&plus, true))
}

/// Quantum shifts between the slope `1/n` and `-1/n` arcs on specials.
///
/// The `j`-th `D` arrow of the `+` arc from the left is matched with the
/// `j`-th `D` arrow of the `-` arc from the right; for odd `n` the terminal
/// `b` of the `+` arc is also matched with the initial `b` of the `-` arc.
pub fn case2_shifts(n: u64) -> Vec<i64> {
    let plus = compile(Family::AlphaPlusN(n)).expect("compiled");
    let minus = compile(Family::AlphaMinusN(n)).expect("compiled");
    let plus_d = d_arrow_sources(&plus);
    let mut minus_d = d_arrow_sources(&minus);
    minus_d.reverse();
    let mut out: Vec<i64> = plus_d.iter().zip(&minus_d).map(|(p, m)| -(m - p)).collect();
    if n % 2 == 1 {
        out.push(-(b_generator_q(&minus, true) - b_generator_q(&plus, false)));
    }
    out
}

fn total_dim(arc: &CurveComponent, c: &[&CurveComponent]) -> Result<u64> {
    c.iter().map(|g| geometric_dim(arc, g)).sum()
}

fn slope_pair(
    plus: Slope,
    minus: Slope,
    specials: &[&CurveComponent],
    rho: &CurveComponent,
    shifts: Vec<i64>,
) -> Result<SlopePair> {
    let (ap, am) = (CurveComponent::arc(plus), CurveComponent::arc(minus));
    let rational_dims = (geometric_dim(&ap, rho)?, geometric_dim(&am, rho)?);
    let dims = (total_dim(&ap, specials)? + rational_dims.0, total_dim(&am, specials)? + rational_dims.1);
    let verdict = if dims.0 != dims.1 {
        Verdict::DistinguishedByDimension
    } else if !specials.is_empty() && shifts.iter().any(|&s| s != 0) {
        Verdict::DistinguishedByQuantumShift
    } else {
        Verdict::Indistinguishable
    };
    Ok(SlopePair { slopes: (plus, minus), dims, rational_dims, shifts, verdict })
}

/// Compares the fillings `T(±2)` and `T(±1/n)` for `n <= n_max` of a tangle
/// whose curve is a collection of slope-∞ specials plus one `r1` of integer
/// slope.
pub fn ecsc_scan(c: &Multicurve, n_max: u64) -> EcscReport {
    let mut specials = Vec::new();
    let mut rationals = Vec::new();
    for g in &c.components {
        match g.kind {
            CurveKind::Special if g.slope.is_infinite() => specials.push(g),
            CurveKind::Rational => rationals.push(g),
            _ => return EcscReport::inapplicable(format!("component {g} is neither a slope-∞ special nor rational")),
        }
    }
    let [rho] = rationals.as_slice() else {
        return EcscReport::inapplicable(format!("expected exactly one rational component, found {}", rationals.len()));
    };
    if rho.length != 1 || !rho.slope.is_integer() {
        return EcscReport::inapplicable(format!("rational component {rho} is not an r1 of integer slope"));
    }
    let vertical = CurveComponent::arc(Slope::INFINITY);
    match c.components.iter().map(|g| geometric_dim(&vertical, g)).sum::<Result<u64>>() {
        Ok(1) => {}
        Ok(k) => return EcscReport::inapplicable(format!("{k} intersections with the vertical arc, expected 1")),
        Err(e) => return EcscReport::inapplicable(e.to_string()),
    }
    if specials.is_empty() {
        return EcscReport::inapplicable("tangle rational, scan not applicable");
    }
    if let Some(v) = connectivity_check(Connectivity::No, c).first() {
        return EcscReport::inapplicable(format!("rational slope must be even: {}", v.reason));
    }

    let run = || -> Result<EcscReport> {
        let case1 = slope_pair(Slope::integer(2), Slope::integer(-2), &specials, rho, vec![case1_shift()])?;
        let mut case2 = BTreeMap::new();
        for n in 1..=n_max {
            let (plus, minus) = (normalize_slope(1, n as i64)?, normalize_slope(-1, n as i64)?);
            let pair = slope_pair(plus, minus, &specials, rho, case2_shifts(n))?;
            case2.insert(n, pair);
        }
        Ok(EcscReport {
            applicable: true,
            reason: None,
            rational_slope: Some(rho.slope),
            specials: specials.len(),
            case1: Some(case1),
            case2,
        })
    };
    run().unwrap_or_else(|e| EcscReport::inapplicable(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AgcccBranch {
    HorizontallySplit,
    AllZeroWithSpecial,
    NonzeroSlope,
}

fn ser_ratio<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgcccReport {
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<AgcccBranch>,
    /// `max |q_i| / (2|p_i|)` over components of nonzero slope numerator.
    #[serde(serialize_with = "ser_ratio")]
    pub m: Option<Ratio<i64>>,
    /// Smallest integer exceeding `m`.
    pub n: Option<i64>,
    /// Dimension of the twisted closure `K_n` for `|n| <= n_max`.
    pub dims: BTreeMap<i64, u64>,
    /// Values of `n` whose dimension needs an unsupported same-slope count.
    pub undetermined: Vec<i64>,
    /// Quantum shift of the special summand of `K_n` relative to `K_0`.
    pub special_shifts: BTreeMap<i64, i64>,
    /// Whether `d` strictly increases for `n >= N` and strictly decreases
    /// towards `-N` within the window.
    pub monotone: Option<bool>,
    /// `μ - 1` where `μ` is the smallest quantum grading of the supplied
    /// complex; bounds the quantum gradings of `K_n` for `n > 0`.
    pub q_lower_bound: Option<i64>,
    pub q_lower_bound_note: String,
}

impl AgcccReport {
    fn inapplicable(reason: impl Into<String>) -> AgcccReport {
        AgcccReport {
            applicable: false,
            reason: Some(reason.into()),
            branch: None,
            m: None,
            n: None,
            dims: BTreeMap::new(),
            undetermined: Vec::new(),
            special_shifts: BTreeMap::new(),
            monotone: None,
            q_lower_bound: None,
            q_lower_bound_note: "unavailable".into(),
        }
    }
}

/// Arc of slope `1/2n` as curve metadata.
pub fn twist_arc(n: i64) -> CurveComponent {
    Family::AlphaHalf(n).component()
}

/// `-q` of the `c` end of the compiled arc of slope `1/2n`.
pub fn twist_special_shift(n: i64) -> i64 {
    let arc = compile(Family::AlphaHalf(n)).expect("compiled");
    let c = arc.generators().iter().find(|g| g.vertex == Vertex::C).expect("arc has a c end");
    -c.q
}

/// Studies the family `K_n = T(1/2n)` for a tangle with connectivity `No`.
///
/// `kh_complex`, when given, is the `H`-cone complex of the tangle; its
/// minimal quantum grading feeds the lower bound on `K_n` gradings.
pub fn agccc_report(c: &Multicurve, n_max: u64, conn: Connectivity, kh_complex: Option<&ComplexB>) -> AgcccReport {
    if conn != Connectivity::No {
        return AgcccReport::inapplicable(format!("connectivity must be no, got {conn}"));
    }
    if c.components.is_empty() {
        return AgcccReport::inapplicable("empty multicurve");
    }
    if let Some(g) = c.components.iter().find(|g| g.kind == CurveKind::Arc) {
        return AgcccReport::inapplicable(format!("component {g} is an arc, expected a compact curve"));
    }
    let n_max = n_max as i64;
    let all_zero = c.components.iter().all(|g| g.slope == Slope::ZERO);
    let has_special = c.components.iter().any(|g| g.kind == CurveKind::Special);
    let branch = match (all_zero, has_special) {
        (true, false) => AgcccBranch::HorizontallySplit,
        (true, true) => AgcccBranch::AllZeroWithSpecial,
        (false, _) => AgcccBranch::NonzeroSlope,
    };

    let mut dims = BTreeMap::new();
    let mut undetermined = Vec::new();
    for n in -n_max..=n_max {
        let arc = twist_arc(n);
        match c.components.iter().map(|g| geometric_dim(&arc, g)).sum::<Result<u64>>() {
            Ok(d) => {
                dims.insert(n, d);
            }
            Err(_) => undetermined.push(n),
        }
    }

    let mut report = AgcccReport::inapplicable("");
    report.applicable = true;
    report.reason = None;
    report.branch = Some(branch);
    report.dims = dims;
    report.undetermined = undetermined;

    if branch == AgcccBranch::AllZeroWithSpecial {
        report.special_shifts = (-n_max..=n_max).map(|n| (n, twist_special_shift(n))).collect();
    }
    if branch == AgcccBranch::NonzeroSlope {
        let m = c
            .components
            .iter()
            .filter(|g| g.slope.p() != 0)
            .map(|g| Ratio::new(g.slope.q().abs(), 2 * g.slope.p().abs()))
            .max()
            .expect("some component has nonzero numerator");
        let big_n = m.floor().to_integer() + 1;
        let d = &report.dims;
        let step = |a: i64, b: i64| match (d.get(&a), d.get(&b)) {
            (Some(x), Some(y)) => y > x,
            _ => true,
        };
        let up = (big_n..n_max).all(|n| step(n, n + 1));
        let down = ((-n_max + 1)..=-big_n).all(|n| step(n, n - 1));
        report.m = Some(m);
        report.n = Some(big_n);
        report.monotone = Some(up && down);
    }
    match kh_complex.and_then(|x| x.q_range()) {
        Some((mu, _)) => {
            report.q_lower_bound = Some(mu - 1);
            report.q_lower_bound_note = format!("mu = {mu}; bound holds for n > 0");
        }
        None => report.q_lower_bound_note = "unavailable".into(),
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureVerdict {
    /// Some component has nonzero slope, so the closure `T(0)` is not split.
    NecessaryViolated,
    /// All slopes are 0 and rational components have length 1, so `T(0)` is split.
    SufficientHolds,
    Inconclusive,
}

pub fn split_closure_analysis(c: &Multicurve) -> ClosureVerdict {
    if c.components.iter().any(|g| g.slope != Slope::ZERO) {
        ClosureVerdict::NecessaryViolated
    } else if c.components.iter().all(|g| g.kind != CurveKind::Rational || g.length == 1) {
        ClosureVerdict::SufficientHolds
    } else {
        ClosureVerdict::Inconclusive
    }
}
