//! Morphism spaces between complexes, their bigraded homology, the
//! intersection-count formula, and the basepoint action.
//!
//! The morphism complex `Mor(X, Y)` has a generator for every pair of
//! generators `(x, y)` and every algebra word from `v(x)` to `v(y)`. Its
//! differential `f ↦ d_Y∘f + f∘d_X` preserves the quantum grading
//! `Q = q(y) - q(x) + q(word)`, and for fixed `Q` the word depth is pinned to
//! `q(y) - q(x) - Q`. Every `Q`-slice is therefore finite and its homology is
//! computed exactly.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{Element, Word, WordJson, WordKind};
use crate::complex::{cone_h, ComplexB};
use crate::curve::{delta, CurveComponent, CurveKind};
use crate::error::{Error, Result};
use crate::f2::{kernel, rank, BitVec, Echelon};

/// A basis element of `Mor(X, Y)`: the word `word` from generator `src` of
/// `X` to generator `tgt` of `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorGenerator {
    pub src: usize,
    pub tgt: usize,
    pub word: WordKind,
}

impl MorGenerator {
    pub fn bigrading(&self, x: &ComplexB, y: &ComplexB) -> (i64, i64) {
        let (a, b) = (x.generator(self.src), y.generator(self.tgt));
        (b.q - a.q + self.word.q(), b.h - a.h)
    }

    fn order_key(&self) -> (bool, usize, usize, WordKind) {
        (self.word == WordKind::Id, self.src, self.tgt, self.word)
    }
}

/// Wire form of a morphism generator, with generator ids resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorTerm {
    pub src: String,
    pub tgt: String,
    pub word: WordJson,
    pub q: i64,
    pub h: i64,
}

/// An F₂ combination of morphism generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MorClass {
    terms: BTreeSet<MorGenerator>,
}

impl MorClass {
    pub fn zero() -> MorClass {
        MorClass::default()
    }

    pub fn from_terms<I: IntoIterator<Item = MorGenerator>>(terms: I) -> MorClass {
        let mut c = MorClass::zero();
        for t in terms {
            c.toggle(t);
        }
        c
    }

    pub fn toggle(&mut self, g: MorGenerator) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    pub fn add(&mut self, other: &MorClass) {
        for &g in &other.terms {
            self.toggle(g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &MorGenerator> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_identity_term(&self) -> bool {
        self.terms.iter().any(|g| g.word == WordKind::Id)
    }

    pub fn to_terms(&self, x: &ComplexB, y: &ComplexB) -> Vec<MorTerm> {
        self.terms
            .iter()
            .map(|g| {
                let (q, h) = g.bigrading(x, y);
                MorTerm {
                    src: x.generator(g.src).id.clone(),
                    tgt: y.generator(g.tgt).id.clone(),
                    word: WordJson::from_kind(g.word),
                    q,
                    h,
                }
            })
            .collect()
    }

    pub fn render(&self, x: &ComplexB, y: &ComplexB) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|g| format!("({} -{}-> {})", x.generator(g.src).id, g.word, y.generator(g.tgt).id))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The common bigrading of all terms, if there is one.
    pub fn bigrading(&self, x: &ComplexB, y: &ComplexB) -> Option<(i64, i64)> {
        let mut it = self.terms.iter().map(|g| g.bigrading(x, y));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

/// Ranks indexed by `(q, h)`; zero ranks are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedDims(BTreeMap<(i64, i64), usize>);

impl BigradedDims {
    pub fn new() -> BigradedDims {
        BigradedDims::default()
    }

    pub fn add(&mut self, q: i64, h: i64, r: usize) {
        if r > 0 {
            *self.0.entry((q, h)).or_insert(0) += r;
        }
    }

    pub fn get(&self, q: i64, h: i64) -> usize {
        self.0.get(&(q, h)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, dq: i64, dh: i64) -> BigradedDims {
        BigradedDims(self.0.iter().map(|(&(q, h), &r)| ((q + dq, h + dh), r)).collect())
    }

    /// Ranks with `lo <= q <= hi`.
    pub fn restrict_q(&self, lo: i64, hi: i64) -> BigradedDims {
        BigradedDims(self.0.iter().filter(|(&(q, _), _)| lo <= q && q <= hi).map(|(&k, &v)| (k, v)).collect())
    }

    pub fn as_map(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.0
    }

    /// Poincaré polynomial in `q` and `h`, ascending in `q`.
    pub fn poincare(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|(&(q, h), &r)| {
                let coeff = if r == 1 { String::new() } else { r.to_string() };
                format!("{coeff}q^{q}h^{h}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for BigradedDims {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for ((q, h), r) in &self.0 {
            map.serialize_entry(&format!("{q},{h}"), r)?;
        }
        map.end()
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poincare())
    }
}

/// The morphism complex truncated at a maximal word depth.
#[derive(Clone, Debug)]
pub struct MorComplex {
    pub cap: u64,
    pub generators: Vec<MorGenerator>,
    pub bigradings: Vec<(i64, i64)>,
    /// `differential[i]` lists the generators in `d(generators[i])`.
    pub differential: Vec<Vec<usize>>,
    /// Whether some differential term was dropped for exceeding the cap.
    pub truncated: bool,
}

impl MorComplex {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn d_squared_zero(&self) -> bool {
        (0..self.len()).all(|i| {
            let mut acc = BTreeSet::new();
            for &j in &self.differential[i] {
                for &k in &self.differential[j] {
                    if !acc.remove(&k) {
                        acc.insert(k);
                    }
                }
            }
            acc.is_empty()
        })
    }
}

struct Slice {
    gens: Vec<MorGenerator>,
    index: HashMap<MorGenerator, usize>,
    boundaries: Echelon,
    lower: Vec<MorGenerator>,
    homology: Echelon,
    n_boundary_inputs: usize,
    reps: Vec<BitVec>,
    rep_of_input: HashMap<usize, usize>,
}

impl Slice {
    fn vector(&self, c: &MorClass) -> Option<BitVec> {
        let mut v = BitVec::zeros(self.gens.len());
        for g in c.terms() {
            v.flip(*self.index.get(g)?);
        }
        Some(v)
    }

    fn class(&self, v: &BitVec) -> MorClass {
        MorClass::from_terms(v.ones().map(|i| self.gens[i]))
    }

    /// Coordinates of a cycle in the homology basis.
    fn coords(&self, z: &BitVec) -> Option<BitVec> {
        let red = self.homology.reduce(z);
        if !red.residual.is_zero() {
            return None;
        }
        let mut out = BitVec::zeros(self.reps.len());
        for i in red.combination.ones() {
            if i >= self.n_boundary_inputs {
                out.flip(self.rep_of_input[&i]);
            }
        }
        Some(out)
    }

    fn dim(&self) -> usize {
        self.reps.len()
    }
}

/// Exact, slice-by-slice access to `Mor(X, Y)`.
pub struct MorSpace<'a> {
    x: &'a ComplexB,
    y: &'a ComplexB,
    x_in: Vec<Vec<(usize, Element)>>,
    y_out: Vec<Vec<(usize, Element)>>,
    slices: RefCell<HashMap<(i64, i64), std::rc::Rc<Slice>>>,
}

impl<'a> MorSpace<'a> {
    pub fn new(x: &'a ComplexB, y: &'a ComplexB) -> MorSpace<'a> {
        let x_in =
            x.incoming_lists().into_iter().map(|v| v.into_iter().map(|(i, e)| (i, e.clone())).collect()).collect();
        let y_out = (0..y.len()).map(|i| y.outgoing(i).map(|(j, e)| (j, e.clone())).collect()).collect();
        MorSpace { x, y, x_in, y_out, slices: RefCell::new(HashMap::new()) }
    }

    pub fn source(&self) -> &ComplexB {
        self.x
    }

    pub fn target(&self) -> &ComplexB {
        self.y
    }

    /// Largest quantum grading carried by any generator (depth-zero words).
    pub fn q_top(&self) -> Option<i64> {
        let (_, ymax) = self.y.q_range()?;
        let (xmin, _) = self.x.q_range()?;
        Some(ymax - xmin)
    }

    pub fn h_range(&self) -> Option<(i64, i64)> {
        let hy = self.y.generators().iter().map(|g| g.h);
        let hx = self.x.generators().iter().map(|g| g.h);
        let (ymin, ymax) = (hy.clone().min()?, hy.max()?);
        let (xmin, xmax) = (hx.clone().min()?, hx.max()?);
        Some((ymin - xmax, ymax - xmin))
    }

    /// All generators of bidegree `(qq, h)`, identity words last.
    pub fn generators(&self, qq: i64, h: i64) -> Vec<MorGenerator> {
        let mut out = Vec::new();
        for (i, a) in self.x.generators().iter().enumerate() {
            for (j, b) in self.y.generators().iter().enumerate() {
                let depth = b.q - a.q - qq;
                if b.h - a.h != h || depth < 0 {
                    continue;
                }
                for w in Word::all_of_depth(a.vertex, b.vertex, depth as u64) {
                    out.push(MorGenerator { src: i, tgt: j, word: w.kind() });
                }
            }
        }
        out.sort_by_key(|g| g.order_key());
        out
    }

    pub fn differential(&self, g: &MorGenerator) -> MorClass {
        let mut out = MorClass::zero();
        let (vx, vy) = (self.x.generator(g.src).vertex, self.y.generator(g.tgt).vertex);
        let f = Element::from_word(Word::new(vx, vy, g.word).expect("generator words are valid"));
        for (c, label) in &self.y_out[g.tgt] {
            let prod = f.mul(label).expect("composable");
            for w in prod.kinds() {
                out.toggle(MorGenerator { src: g.src, tgt: *c, word: w });
            }
        }
        for (a, label) in &self.x_in[g.src] {
            let prod = label.mul(&f).expect("composable");
            for w in prod.kinds() {
                out.toggle(MorGenerator { src: *a, tgt: g.tgt, word: w });
            }
        }
        out
    }

    pub fn boundary(&self, c: &MorClass) -> MorClass {
        let mut out = MorClass::zero();
        for g in c.terms() {
            out.add(&self.differential(g));
        }
        out
    }

    fn slice(&self, qq: i64, h: i64) -> std::rc::Rc<Slice> {
        if let Some(s) = self.slices.borrow().get(&(qq, h)) {
            return s.clone();
        }
        let s = std::rc::Rc::new(self.build_slice(qq, h));
        self.slices.borrow_mut().insert((qq, h), s.clone());
        s
    }

    fn build_slice(&self, qq: i64, h: i64) -> Slice {
        let gens = self.generators(qq, h);
        let index: HashMap<MorGenerator, usize> = gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let upper = self.generators(qq, h + 1);
        let upper_index: HashMap<MorGenerator, usize> = upper.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let lower = self.generators(qq, h - 1);

        let to_vec = |c: &MorClass, idx: &HashMap<MorGenerator, usize>, n: usize| {
            BitVec::from_indices(n, c.terms().map(|g| idx[g]))
        };
        let images: Vec<BitVec> =
            gens.iter().map(|g| to_vec(&self.differential(g), &upper_index, upper.len())).collect();
        let cycles = kernel(&images, upper.len());

        let mut boundaries = Echelon::new(gens.len(), lower.len());
        let mut homology = Echelon::new(gens.len(), lower.len() + cycles.len());
        for g in &lower {
            let v = to_vec(&self.differential(g), &index, gens.len());
            boundaries.push(&v);
            homology.push(&v);
        }
        let mut reps = Vec::new();
        let mut rep_of_input = HashMap::new();
        for z in cycles {
            let input = homology.inputs();
            if homology.push(&z).is_none() {
                rep_of_input.insert(input, reps.len());
                reps.push(z);
            }
        }
        let n_boundary_inputs = lower.len();
        Slice { gens, index, boundaries, lower, homology, n_boundary_inputs, reps, rep_of_input }
    }

    pub fn homology_rank(&self, qq: i64, h: i64) -> usize {
        self.slice(qq, h).dim()
    }

    /// Exact homology ranks for quantum gradings in `lo..=hi`.
    pub fn homology_window(&self, lo: i64, hi: i64) -> BigradedDims {
        let mut dims = BigradedDims::new();
        let Some((hmin, hmax)) = self.h_range() else { return dims };
        for qq in lo..=hi {
            for h in hmin..=hmax {
                dims.add(qq, h, self.homology_rank(qq, h));
            }
        }
        dims
    }

    /// A basis of homology at `(qq, h)` as cycle representatives.
    pub fn homology_basis(&self, qq: i64, h: i64) -> Vec<MorClass> {
        let s = self.slice(qq, h);
        s.reps.iter().map(|r| s.class(r)).collect()
    }

    pub fn is_cycle(&self, c: &MorClass) -> bool {
        self.boundary(c).is_zero()
    }

    /// Whether a homogeneous class is a boundary; returns a primitive.
    pub fn primitive(&self, c: &MorClass) -> Option<MorClass> {
        if c.is_zero() {
            return Some(MorClass::zero());
        }
        let (qq, h) = c.bigrading(self.x, self.y)?;
        let s = self.slice(qq, h);
        let v = s.vector(c)?;
        let red = s.boundaries.reduce(&v);
        red.residual.is_zero().then(|| MorClass::from_terms(red.combination.ones().map(|i| s.lower[i])))
    }

    fn action_coords(&self, qq: i64, h: i64, power: u32) -> Vec<BitVec> {
        let src = self.slice(qq, h);
        let dst = self.slice(qq - 2 * power as i64, h);
        src.reps
            .iter()
            .map(|r| {
                let mut c = src.class(r);
                for _ in 0..power {
                    c = basepoint_action(&c);
                }
                dst.coords(&dst.vector(&c).expect("action lands in the slice")).expect("action maps cycles to cycles")
            })
            .collect()
    }

    /// Rank of the induced map `H(qq, h) -> H(qq - 2, h)`.
    pub fn action_rank(&self, qq: i64, h: i64) -> usize {
        rank(&self.action_coords(qq, h, 1))
    }
}

/// The basepoint action: every word is multiplied by `D`, so `S` words
/// vanish. Since `D` is central this is a chain map on `Mor(X, Y)`.
pub fn basepoint_action(f: &MorClass) -> MorClass {
    MorClass::from_terms(f.terms().filter_map(|g| g.word.times_d().map(|word| MorGenerator { word, ..*g })))
}

pub fn build_mor_complex(x: &ComplexB, y: &ComplexB, cap: u64) -> MorComplex {
    let space = MorSpace::new(x, y);
    let mut generators = Vec::new();
    for (i, a) in x.generators().iter().enumerate() {
        for (j, b) in y.generators().iter().enumerate() {
            for depth in 0..=cap {
                for w in Word::all_of_depth(a.vertex, b.vertex, depth) {
                    generators.push(MorGenerator { src: i, tgt: j, word: w.kind() });
                }
            }
        }
    }
    let index: HashMap<MorGenerator, usize> = generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut truncated = false;
    let differential = generators
        .iter()
        .map(|g| {
            let mut out: Vec<usize> = Vec::new();
            for t in space.differential(g).terms() {
                match index.get(t) {
                    Some(&k) => out.push(k),
                    None => truncated = true,
                }
            }
            out
        })
        .collect();
    let bigradings = generators.iter().map(|g| g.bigrading(x, y)).collect();
    MorComplex { cap, generators, bigradings, differential, truncated }
}

/// Default cap: the sum of the two quantum spans plus 8.
pub fn default_cap(x: &ComplexB, y: &ComplexB) -> u64 {
    (x.q_span() + y.q_span() + 8) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub cap: u64,
    pub q_top: i64,
    pub at_cap: BigradedDims,
    pub at_cap_plus_4: BigradedDims,
    /// Ranks in the extra band `[q_top - cap - 4, q_top - cap)`.
    pub band: BigradedDims,
}

impl Stabilization {
    pub fn stable(&self) -> bool {
        self.band.is_empty() && self.at_cap_plus_4 == self.at_cap
    }
}

/// Homology ranks in the windows exact at caps `N` and `N + 4`.
pub fn stabilization(x: &ComplexB, y: &ComplexB, cap: Option<u64>) -> Stabilization {
    let cap = cap.unwrap_or_else(|| default_cap(x, y));
    let space = MorSpace::new(x, y);
    let Some(top) = space.q_top() else {
        return Stabilization {
            cap,
            q_top: 0,
            at_cap: BigradedDims::new(),
            at_cap_plus_4: BigradedDims::new(),
            band: BigradedDims::new(),
        };
    };
    let wide = space.homology_window(top - cap as i64 - 4, top);
    let at_cap = wide.restrict_q(top - cap as i64, top);
    let band = wide.restrict_q(top - cap as i64 - 4, top - cap as i64 - 1);
    Stabilization { cap, q_top: top, at_cap, at_cap_plus_4: wide, band }
}

/// Bigraded homology of `Mor(X, Y)` with an explicit cap.
pub fn mor_homology_with_cap(x: &ComplexB, y: &ComplexB, cap: Option<u64>) -> Result<BigradedDims> {
    let s = stabilization(x, y, cap);
    if !s.stable() {
        let lowest = s.band.iter().next().map(|((q, h), r)| format!("rank {r} at (q,h)=({q},{h})"));
        return Err(Error::NonStabilizing(format!(
            "cap {} leaves {}",
            s.cap,
            lowest.unwrap_or_else(|| "differing ranks".into())
        )));
    }
    Ok(s.at_cap)
}

pub fn mor_homology(x: &ComplexB, y: &ComplexB) -> Result<BigradedDims> {
    mor_homology_with_cap(x, y, None)
}

/// Intersection count of an arc with a curve component.
pub fn geometric_dim(a: &CurveComponent, g: &CurveComponent) -> Result<u64> {
    if a.kind != CurveKind::Arc {
        return Err(Error::InvalidComponent(format!("first argument must be an arc, got {a}")));
    }
    if a.slope != g.slope {
        return Ok(g.length * delta(a.slope, g.slope));
    }
    match g.kind {
        CurveKind::Special => Ok(0),
        CurveKind::Rational if g.length == 1 => Ok(2),
        CurveKind::FigureEight => Ok(2 * g.length),
        CurveKind::Rational => {
            Err(Error::UnsupportedPairing(format!("{a} against {g}: same-slope count for length >= 2 is unknown")))
        }
        CurveKind::Arc => Err(Error::UndefinedPairing(format!("{a} and {g} are homotopic arcs"))),
    }
}

/// Which target the torsion search ran against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetForm {
    /// `Mor(X, Y)` as given.
    Direct,
    /// `Mor(X, Y)` did not stabilize, so `Y` was replaced by its `H`-cone.
    HCone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub class: MorClass,
    /// `d(nullhomotopy) = D·class`.
    pub nullhomotopy: MorClass,
    pub q: i64,
    pub h: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub target_form: TargetForm,
    /// The complex actually paired against (the `H`-cone when `target_form` says so).
    pub target: ComplexB,
    pub dims: BigradedDims,
    pub action_rank: usize,
    pub action_squared_zero: bool,
    pub witness: Option<TorsionWitness>,
    /// Checked: the class is a cycle, `D·class` is the boundary of the
    /// nullhomotopy, and the class is not in the image of the action.
    pub certified: bool,
}

impl TorsionReport {
    pub fn dimension(&self) -> usize {
        self.dims.total()
    }

    /// The action is free exactly when its rank is half the dimension.
    pub fn is_free(&self) -> bool {
        2 * self.action_rank == self.dimension()
    }
}

/// Searches `Mor(X, Y)` for a class killed by the basepoint action but not
/// in its image. Identity-word representatives are preferred.
pub fn torsion_witness(x: &ComplexB, y: &ComplexB) -> Result<TorsionReport> {
    let (target_form, target, dims) = match mor_homology(x, y) {
        Ok(d) => (TargetForm::Direct, y.clone(), d),
        Err(Error::NonStabilizing(_)) => {
            let c = cone_h(y);
            let d = mor_homology(x, &c)?;
            (TargetForm::HCone, c, d)
        }
        Err(e) => return Err(e),
    };
    let space = MorSpace::new(x, &target);

    let mut action_rank = 0;
    let mut action_squared_zero = true;
    let mut witness = None;
    let mut certified = false;
    for ((qq, h), _) in dims.iter() {
        let coords = space.action_coords(qq, h, 1);
        action_rank += rank(&coords);
        if space.action_coords(qq, h, 2).iter().any(|v| !v.is_zero()) {
            action_squared_zero = false;
        }
        if witness.is_some() {
            continue;
        }
        let slice = space.slice(qq, h);
        let image_from_above = if dims.get(qq + 2, h) > 0 { space.action_coords(qq + 2, h, 1) } else { Vec::new() };
        let mut image = Echelon::new(slice.dim(), image_from_above.len().max(1));
        for v in &image_from_above {
            image.push(v);
        }
        let target_dim = dims.get(qq - 2, h);
        let killed = kernel(&coords, target_dim);
        let Some(k) = killed.into_iter().find(|k| !image.contains(k)) else { continue };

        let mut z = BitVec::zeros(slice.gens.len());
        for i in k.ones() {
            z.xor_assign(&slice.reps[i]);
        }
        let class = slice.class(&slice.boundaries.reduce(&z).residual);
        let image = basepoint_action(&class);
        let Some(nullhomotopy) = space.primitive(&image) else { continue };
        certified = space.is_cycle(&class) && space.boundary(&nullhomotopy) == image;
        witness = Some(TorsionWitness { class, nullhomotopy, q: qq, h });
    }
    Ok(TorsionReport { target_form, target, dims, action_rank, action_squared_zero, witness, certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vertex::{self, B, C};
    use crate::complex::{shift_complex, Generator};
    use crate::curve::{compile, Family, Slope};

    fn point(v: Vertex) -> ComplexB {
        ComplexB::new(vec![Generator::new("p", v, 0, 0)])
    }

    #[test]
    fn mor_generator_counts() {
        let m = build_mor_complex(&point(B), &point(B), 4);
        assert_eq!(m.len(), 5);
        let m = build_mor_complex(&point(C), &point(B), 5);
        let words: Vec<_> = m.generators.iter().map(|g| g.word).collect();
        assert_eq!(words, vec![WordKind::S(1), WordKind::S(3), WordKind::S(5)]);
    }

    #[test]
    fn mor_differential_multiplies_by_h() {
        let e1 = compile(Family::E(1)).unwrap();
        let pb = point(B);
        let space = MorSpace::new(&pb, &e1);
        let f = MorGenerator { src: 0, tgt: 0, word: WordKind::S(2) };
        let d = space.differential(&f);
        let words: Vec<_> = d.terms().map(|g| (g.tgt, g.word)).collect();
        assert_eq!(words, vec![(1, WordKind::S(4))]);
        let f = MorGenerator { src: 0, tgt: 0, word: WordKind::Id };
        let words: Vec<_> = space.differential(&f).terms().map(|g| g.word).collect();
        assert_eq!(words, vec![WordKind::D(1), WordKind::S(2)]);
    }

    #[test]
    fn d_squared_on_built_complexes() {
        let pairs = [
            (Family::AlphaPlus, Family::R1Zero),
            (Family::BnQ13, Family::R1Inf),
            (Family::AlphaMinusN(3), Family::E(2)),
        ];
        for (a, b) in pairs {
            let (x, y) = (compile(a).unwrap(), compile(b).unwrap());
            for (p, q) in [(&x, &y), (&y, &x)] {
                let m = build_mor_complex(p, q, 10);
                assert!(m.d_squared_zero(), "{a} {b}");
            }
        }
    }

    #[test]
    fn point_against_figure_eights() {
        for k in 1..=3u64 {
            let dims = mor_homology(&point(B), &compile(Family::E(k)).unwrap()).unwrap();
            assert_eq!(dims.total() as u64, 2 * k);
        }
    }

    #[test]
    fn trefoil() {
        let dims = mor_homology(&compile(Family::R1Inf).unwrap(), &compile(Family::BnQ13).unwrap()).unwrap();
        assert_eq!(dims.total(), 3);
    }

    #[test]
    fn homotopic_arcs_do_not_stabilize() {
        let err = mor_homology(&point(B), &point(B)).unwrap_err();
        assert_eq!(err.kind(), "non_stabilizing");
    }

    #[test]
    fn shift_moves_gradings() {
        let x = compile(Family::AlphaPlus).unwrap();
        let y = compile(Family::R1Zero).unwrap();
        let base = mor_homology(&x, &y).unwrap();
        assert_eq!(mor_homology(&shift_complex(&x, 3, 1), &y).unwrap(), base.shifted(-3, -1));
        assert_eq!(mor_homology(&x, &shift_complex(&y, 2, 0)).unwrap(), base.shifted(2, 0));
    }

    #[test]
    fn geometric_examples() {
        let arc = |s: &str| CurveComponent::arc(s.parse().unwrap());
        let r1 = |s: &str| CurveComponent::rational(s.parse().unwrap(), 1).unwrap();
        assert_eq!(geometric_dim(&arc("inf"), &CurveComponent::special(Slope::ZERO, 4).unwrap()).unwrap(), 4);
        assert_eq!(geometric_dim(&arc("-2"), &r1("2")).unwrap(), 4);
        assert_eq!(geometric_dim(&arc("2"), &r1("2")).unwrap(), 2);
        assert_eq!(geometric_dim(&arc("1/3"), &r1("inf")).unwrap(), 3);
        assert_eq!(geometric_dim(&arc("0"), &CurveComponent::figure_eight(3).unwrap()).unwrap(), 6);
        assert_eq!(geometric_dim(&arc("0"), &CurveComponent::special(Slope::ZERO, 2).unwrap()).unwrap(), 0);
        assert_eq!(
            geometric_dim(&arc("0"), &CurveComponent::rational(Slope::ZERO, 2).unwrap()).unwrap_err().kind(),
            "unsupported_pairing"
        );
        assert_eq!(geometric_dim(&arc("0"), &arc("0")).unwrap_err().kind(), "undefined_pairing");
        assert!(geometric_dim(&r1("0"), &arc("0")).is_err());
    }

    #[test]
    fn torsion_examples() {
        let r = torsion_witness(&point(B), &compile(Family::E(1)).unwrap()).unwrap();
        assert_eq!((r.dimension(), r.action_rank), (2, 1));
        assert!(r.witness.is_none() && r.is_free());

        let r = torsion_witness(&point(C), &compile(Family::E(1)).unwrap()).unwrap();
        assert_eq!((r.dimension(), r.action_rank), (1, 0));
        let w = r.witness.expect("witness");
        assert!(r.certified);
        assert!(w.class.terms().all(|g| matches!(g.word, WordKind::S(_))));

        let r = torsion_witness(&point(B), &compile(Family::BnQ13).unwrap()).unwrap();
        assert_eq!(r.target_form, TargetForm::HCone);
        assert!(r.witness.is_some() && r.certified);
    }

    #[test]
    fn action_on_s_words_vanishes() {
        let f = MorClass::from_terms([MorGenerator { src: 0, tgt: 0, word: WordKind::S(3) }]);
        assert!(basepoint_action(&f).is_zero());
        let f = MorClass::from_terms([MorGenerator { src: 0, tgt: 0, word: WordKind::Id }]);
        let g = basepoint_action(&f);
        assert_eq!(g.terms().next().unwrap().word, WordKind::D(1));
    }
}
