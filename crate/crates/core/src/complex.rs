//! Finite bigraded chain complexes over the Bar-Natan algebra.
//!
//! A complex is a list of generators, each sitting at a vertex with a
//! bigrading `(q, h)`, and a differential given by at most one algebra
//! element per ordered pair of generators. An entry `x -a-> y` must satisfy
//! `q(y) - q(x) + q(a) = 0` and `h(y) - h(x) = 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{element_mul, element_to_json, Element, Vertex, WordJson, WordKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub vertex: Vertex,
    pub q: i64,
    pub h: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, vertex: Vertex, q: i64, h: i64) -> Generator {
        Generator { id: id.into(), vertex, q, h }
    }

    /// Twice the δ-grading, from `q = 2(h + δ)`.
    pub fn delta2(&self) -> i64 {
        self.q - 2 * self.h
    }

    pub fn delta(&self) -> f64 {
        self.delta2() as f64 / 2.0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexB {
    generators: Vec<Generator>,
    differential: BTreeMap<(usize, usize), Element>,
}

impl ComplexB {
    pub fn empty() -> ComplexB {
        ComplexB::default()
    }

    pub fn new(generators: Vec<Generator>) -> ComplexB {
        ComplexB { generators, differential: BTreeMap::new() }
    }

    /// Adds `label` to the entry `from -> to` (summing with any existing label).
    pub fn add_entry(&mut self, from: usize, to: usize, label: Element) -> Result<()> {
        let n = self.generators.len();
        if from >= n || to >= n {
            return Err(Error::InvalidComplex(format!("entry {from}->{to} out of range ({n} generators)")));
        }
        let (vf, vt) = (self.generators[from].vertex, self.generators[to].vertex);
        if (label.from(), label.to()) != (vf, vt) {
            return Err(Error::InvalidComplex(format!(
                "label {}->{} does not match generator vertices {vf}->{vt}",
                label.from(),
                label.to()
            )));
        }
        match self.differential.get_mut(&(from, to)) {
            Some(existing) => {
                existing.add_assign(&label)?;
                if existing.is_zero() {
                    self.differential.remove(&(from, to));
                }
            }
            None if !label.is_zero() => {
                self.differential.insert((from, to), label);
            }
            None => {}
        }
        Ok(())
    }

    pub fn with_entry(mut self, from: usize, to: usize, label: Element) -> Result<ComplexB> {
        self.add_entry(from, to, label)?;
        Ok(self)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Element)> {
        self.differential.iter().map(|(&(i, j), e)| (i, j, e))
    }

    pub fn entry(&self, from: usize, to: usize) -> Option<&Element> {
        self.differential.get(&(from, to))
    }

    pub fn entry_count(&self) -> usize {
        self.differential.len()
    }

    pub fn outgoing(&self, from: usize) -> impl Iterator<Item = (usize, &Element)> {
        self.differential.range((from, 0)..=(from, usize::MAX)).map(|(&(_, j), e)| (j, e))
    }

    /// Incoming entries, indexed by target.
    pub fn incoming_lists(&self) -> Vec<Vec<(usize, &Element)>> {
        let mut inc = vec![Vec::new(); self.len()];
        for (i, j, e) in self.entries() {
            inc[j].push((i, e));
        }
        inc
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    pub fn q_range(&self) -> Option<(i64, i64)> {
        let min = self.generators.iter().map(|g| g.q).min()?;
        let max = self.generators.iter().map(|g| g.q).max()?;
        Some((min, max))
    }

    pub fn q_span(&self) -> i64 {
        self.q_range().map_or(0, |(lo, hi)| hi - lo)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.generators.iter().any(|g| g.vertex == v)
    }

    /// No differential entry contains the identity word.
    pub fn is_reduced(&self) -> bool {
        self.differential.values().all(|e| !e.contains(WordKind::Id))
    }

    /// Equality up to generator names: same generators in the same order
    /// (vertex and bigrading) and the same differential.
    pub fn same_shape(&self, other: &ComplexB) -> bool {
        self.len() == other.len()
            && self.generators.iter().zip(&other.generators).all(|(a, b)| (a.vertex, a.q, a.h) == (b.vertex, b.q, b.h))
            && self.differential == other.differential
    }

    /// Connected components of the underlying undirected graph, each as a
    /// sorted list of generator indices, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (i, j, _) in self.entries() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|c| c[0]);
        out
    }

    /// The subcomplex spanned by `indices` (kept in the given order).
    pub fn restrict(&self, indices: &[usize]) -> ComplexB {
        let pos: HashMap<usize, usize> = indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let generators = indices.iter().map(|&i| self.generators[i].clone()).collect();
        let differential =
            self.entries().filter_map(|(i, j, e)| Some(((*pos.get(&i)?, *pos.get(&j)?), e.clone()))).collect();
        ComplexB { generators, differential }
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            generators: self.generators.clone(),
            differential: self
                .entries()
                .map(|(i, j, e)| EntryJson {
                    from: self.generators[i].id.clone(),
                    to: self.generators[j].id.clone(),
                    label: element_to_json(e),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("complex serializes")
    }

    pub fn from_json(json: &ComplexJson) -> Result<ComplexB> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, g) in json.generators.iter().enumerate() {
            index.entry(g.id.as_str()).or_insert(i);
        }
        let mut out = ComplexB::new(json.generators.clone());
        for entry in &json.differential {
            let lookup =
                |id: &str| index.get(id).copied().ok_or_else(|| Error::Parse(format!("unknown generator `{id}`")));
            let (i, j) = (lookup(&entry.from)?, lookup(&entry.to)?);
            let (vf, vt) = (out.generators[i].vertex, out.generators[j].vertex);
            let mut label = Element::zero(vf, vt);
            for w in &entry.label {
                label.toggle(w.to_word(Some(vf), Some(vt))?.kind());
            }
            out.add_entry(i, j, label)?;
        }
        Ok(out)
    }

    pub fn from_json_str(s: &str) -> Result<ComplexB> {
        let json: ComplexJson = serde_json::from_str(s)?;
        ComplexB::from_json(&json)
    }
}

/// Wire format of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub differential: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub from: String,
    pub to: String,
    pub label: Vec<WordJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ids_unique: bool,
    pub homogeneous: bool,
    pub d_squared_zero: bool,
    pub reduced: bool,
    pub issues: Vec<String>,
}

impl ValidationReport {
    /// Ids, grading law and `d² = 0` all hold.
    pub fn is_valid(&self) -> bool {
        self.ids_unique && self.homogeneous && self.d_squared_zero
    }
}

pub fn validate_complex(x: &ComplexB) -> ValidationReport {
    let mut issues = Vec::new();

    let mut seen = HashSet::new();
    for g in x.generators() {
        if !seen.insert(g.id.as_str()) {
            issues.push(format!("duplicate generator id `{}`", g.id));
        }
    }
    let ids_unique = seen.len() == x.len();

    let mut homogeneous = true;
    for (i, j, e) in x.entries() {
        let (a, b) = (x.generator(i), x.generator(j));
        for w in e.words() {
            let dq = b.q - a.q + w.q();
            if dq != 0 {
                homogeneous = false;
                issues.push(format!("entry {}->{} word {w}: q(to) - q(from) + q(word) = {dq}", a.id, b.id));
            }
        }
        if b.h - a.h != 1 {
            homogeneous = false;
            issues.push(format!("entry {}->{}: h(to) - h(from) = {}, expected 1", a.id, b.id, b.h - a.h));
        }
    }

    let mut squares: BTreeMap<(usize, usize), Element> = BTreeMap::new();
    for (i, j, e1) in x.entries() {
        for (k, e2) in x.outgoing(j) {
            // endpoints are consistent by construction
            let prod = element_mul(e1, e2).expect("composable");
            let slot = squares.entry((i, k)).or_insert_with(|| Element::zero(prod.from(), prod.to()));
            slot.add_assign(&prod).expect("same endpoints");
        }
    }
    let mut d_squared_zero = true;
    for ((i, k), e) in &squares {
        if !e.is_zero() {
            d_squared_zero = false;
            issues.push(format!("d² has entry {}->{} = {e}", x.generator(*i).id, x.generator(*k).id));
        }
    }

    ValidationReport { ids_unique, homogeneous, d_squared_zero, reduced: x.is_reduced(), issues }
}

pub fn shift_complex(x: &ComplexB, dq: i64, dh: i64) -> ComplexB {
    let mut out = x.clone();
    for g in &mut out.generators {
        g.q += dq;
        g.h += dh;
    }
    out
}

/// The mapping cone of `H·id`: a copy of `x` shifted by `q^{-1}h^{-1}`, a
/// copy shifted by `q^{+1}`, and an entry `x -H-> x` between the copies.
///
/// Generator `i` of `x` becomes `i` (lower copy, id suffixed `.0`) and
/// `n + i` (upper copy, suffixed `.1`).
pub fn cone_h(x: &ComplexB) -> ComplexB {
    let n = x.len();
    let mut generators = Vec::with_capacity(2 * n);
    for g in x.generators() {
        generators.push(Generator::new(format!("{}.0", g.id), g.vertex, g.q - 1, g.h - 1));
    }
    for g in x.generators() {
        generators.push(Generator::new(format!("{}.1", g.id), g.vertex, g.q + 1, g.h));
    }
    let mut differential = BTreeMap::new();
    for (i, j, e) in x.entries() {
        differential.insert((i, j), e.clone());
        differential.insert((n + i, n + j), e.clone());
    }
    for (i, g) in x.generators().iter().enumerate() {
        differential.insert((i, n + i), Element::h(g.vertex));
    }
    ComplexB { generators, differential }
}

/// Cancels every identity entry by Gaussian elimination.
///
/// Entries `x -id-> y` are processed in lexicographic `(id(x), id(y))` order;
/// each cancellation adds `label(a->y)·label(x->b)` to `a -> b` and removes
/// `x` and `y`.
pub fn gauss_reduce(x: &ComplexB) -> ComplexB {
    let n = x.len();
    let mut alive = vec![true; n];
    let mut out: Vec<BTreeMap<usize, Element>> = vec![BTreeMap::new(); n];
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, j, e) in x.entries() {
        out[i].insert(j, e.clone());
        inc[j].insert(i);
    }

    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, targets) in out.iter().enumerate() {
            for (&j, e) in targets {
                if !e.is_identity() {
                    continue;
                }
                let key = |(a, b): (usize, usize)| (&x.generator(a).id, &x.generator(b).id, a, b);
                if best.is_none_or(|cur| key((i, j)) < key(cur)) {
                    best = Some((i, j));
                }
            }
        }
        let Some((src, tgt)) = best else { break };

        let into_tgt: Vec<(usize, Element)> =
            inc[tgt].iter().filter(|&&a| a != src).map(|&a| (a, out[a][&tgt].clone())).collect();
        let from_src: Vec<(usize, Element)> =
            out[src].iter().filter(|(&b, _)| b != tgt).map(|(&b, e)| (b, e.clone())).collect();
        for (a, alpha) in &into_tgt {
            for (b, beta) in &from_src {
                let prod = element_mul(alpha, beta).expect("composable through cancelled pair");
                if prod.is_zero() {
                    continue;
                }
                let slot = out[*a].entry(*b).or_insert_with(|| Element::zero(prod.from(), prod.to()));
                slot.add_assign(&prod).expect("same endpoints");
                if slot.is_zero() {
                    out[*a].remove(b);
                    inc[*b].remove(a);
                } else {
                    inc[*b].insert(*a);
                }
            }
        }

        for dead in [src, tgt] {
            alive[dead] = false;
            for b in std::mem::take(&mut out[dead]).into_keys() {
                inc[b].remove(&dead);
            }
            for a in std::mem::take(&mut inc[dead]) {
                out[a].remove(&dead);
            }
        }
    }

    let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let generators = keep.iter().map(|&i| x.generator(i).clone()).collect();
    let mut differential = BTreeMap::new();
    for &i in &keep {
        for (j, e) in &out[i] {
            differential.insert((pos[&i], pos[j]), e.clone());
        }
    }
    ComplexB { generators, differential }
}

/// Disjoint union. Ids of `y` that collide with ids already present get a
/// `~k` suffix with the smallest free `k`.
pub fn direct_sum(x: &ComplexB, y: &ComplexB) -> ComplexB {
    let mut taken: HashSet<String> = x.generators().iter().map(|g| g.id.clone()).collect();
    let mut generators = x.generators.clone();
    for g in y.generators() {
        let mut id = g.id.clone();
        let mut k = 1;
        while taken.contains(&id) {
            id = format!("{}~{k}", g.id);
            k += 1;
        }
        taken.insert(id.clone());
        generators.push(Generator { id, ..g.clone() });
    }
    let n = x.len();
    let mut differential = x.differential.clone();
    for (i, j, e) in y.entries() {
        differential.insert((n + i, n + j), e.clone());
    }
    ComplexB { generators, differential }
}
