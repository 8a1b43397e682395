//! Dense linear algebra over F₂: packed bit vectors and an incremental
//! row-echelon basis that remembers how each row was built from its inputs.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    blocks: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { len, blocks: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> BitVec {
        let mut v = BitVec::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.blocks[i / 64] |= mask;
        } else {
            self.blocks[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.blocks.iter().enumerate().find(|(_, &b)| b != 0).map(|(i, b)| i * 64 + b.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    value: BitVec,
    history: BitVec,
}

/// Row-echelon basis of a growing list of input vectors.
///
/// Each stored row is tracked as a combination of the inputs pushed so far,
/// so membership tests can also return a witness combination.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    capacity: usize,
    inputs: usize,
    rows: Vec<Row>,
}

/// Outcome of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction {
    /// What is left after clearing every pivot position.
    pub residual: BitVec,
    /// Inputs whose sum was added to the vector.
    pub combination: BitVec,
}

impl Echelon {
    /// `dim` is the ambient dimension; `capacity` bounds the number of inputs.
    pub fn new(dim: usize, capacity: usize) -> Echelon {
        Echelon { dim, capacity, inputs: 0, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn reduce(&self, v: &BitVec) -> Reduction {
        let mut residual = v.clone();
        let mut combination = BitVec::zeros(self.capacity);
        for row in &self.rows {
            if residual.get(row.pivot) {
                residual.xor_assign(&row.value);
                combination.xor_assign(&row.history);
            }
        }
        Reduction { residual, combination }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).residual.is_zero()
    }

    /// Pushes an input. Returns `None` if it was independent, or the
    /// combination of earlier inputs it equals otherwise (the new input's own
    /// index is not set in that combination).
    pub fn push(&mut self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        assert!(self.inputs < self.capacity, "echelon capacity exceeded");
        let index = self.inputs;
        self.inputs += 1;
        let Reduction { residual, mut combination } = self.reduce(v);
        match residual.first_one() {
            None => Some(combination),
            Some(pivot) => {
                combination.flip(index);
                let at = self.rows.partition_point(|r| r.pivot < pivot);
                self.rows.insert(at, Row { pivot, value: residual, history: combination });
                None
            }
        }
    }
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[BitVec]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut e = Echelon::new(first.len(), rows.len());
    for r in rows {
        e.push(r);
    }
    e.rank()
}

/// Kernel of the linear map sending basis vector `i` to `images[i]`.
pub fn kernel(images: &[BitVec], target_dim: usize) -> Vec<BitVec> {
    let mut e = Echelon::new(target_dim, images.len());
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Some(mut dep) = e.push(img) {
            dep.flip(i);
            out.push(dep);
        }
    }
    out
}
