//! Partition diagrams and Z2-coloured partition diagrams.
//!
//! A partition of size `(k, l)` lives on `k` bottom vertices `1..k` and `l`
//! top vertices `1'..l'`. Vertices are laid out in a fixed linear order
//! (bottom row first, then top row) and a partition is stored as the
//! restricted-growth string of block ids over that order. Blocks are then
//! numbered by first appearance, which is the same as sorting them by their
//! minimal vertex, so derived equality is set-partition equality.

mod enumerate;
mod normal_form;
mod stack;
mod text;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{bell, colored_classes, enumerate, even_partitions, partitions, EnumKind};
pub use normal_form::{normal_form, NormalForm};
pub use stack::{colored_stack, stack, StackResult};
pub use text::ParseDiagramError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Row {
    Bottom,
    Top,
}

/// A vertex of a diagram; `index` is 1-based within its row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub row: Row,
    pub index: usize,
}

impl Vertex {
    pub fn bottom(index: usize) -> Self {
        Vertex {
            row: Row::Bottom,
            index,
        }
    }

    pub fn top(index: usize) -> Self {
        Vertex {
            row: Row::Top,
            index,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Bottom => write!(f, "{}", self.index),
            Row::Top => write!(f, "{}'", self.index),
        }
    }
}

/// An element of Z2, written multiplicatively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("vertex {0} appears in more than one block")]
    DuplicateVertex(Vertex),
    #[error("vertex {0} is not covered by any block")]
    MissingVertex(Vertex),
    #[error("vertex {0} is out of range")]
    OutOfRangeVertex(Vertex),
    #[error("empty block")]
    EmptyBlock,
    #[error("size mismatch: cannot stack onto a diagram with {expected} top vertices using one with {found} bottom vertices")]
    SizeMismatch { expected: usize, found: usize },
    #[error("label vector has length {found}, expected {expected}")]
    LabelLength { expected: usize, found: usize },
}

/// A set partition of `{1..k} ⊔ {1'..l'}` in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    k: usize,
    l: usize,
    /// Block id of each vertex in layout order; restricted-growth string.
    rgs: Vec<usize>,
}

impl Partition {
    /// Validates and canonicalizes an explicit block list.
    pub fn new<B, I>(k: usize, l: usize, blocks: B) -> Result<Self, DiagramError>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut ids: Vec<Option<usize>> = vec![None; k + l];
        for (b, block) in blocks.into_iter().enumerate() {
            let mut empty = true;
            for v in block {
                empty = false;
                let pos = match v.row {
                    Row::Bottom if (1..=k).contains(&v.index) => v.index - 1,
                    Row::Top if (1..=l).contains(&v.index) => k + v.index - 1,
                    _ => return Err(DiagramError::OutOfRangeVertex(v)),
                };
                if ids[pos].is_some() {
                    return Err(DiagramError::DuplicateVertex(v));
                }
                ids[pos] = Some(b);
            }
            if empty {
                return Err(DiagramError::EmptyBlock);
            }
        }
        let mut raw = Vec::with_capacity(k + l);
        for (pos, id) in ids.iter().enumerate() {
            match id {
                Some(b) => raw.push(*b),
                None => {
                    return Err(DiagramError::MissingVertex(vertex_at(k, pos)));
                }
            }
        }
        Ok(Self::from_labels(k, l, &raw))
    }

    /// Builds from arbitrary block labels per vertex (layout order), which
    /// need not be a restricted-growth string.
    pub fn from_labels(k: usize, l: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), k + l, "label vector length");
        Partition {
            k,
            l,
            rgs: normalize_rgs(labels),
        }
    }

    /// Builds from a restricted-growth string; panics if it is not one.
    pub fn from_rgs(k: usize, l: usize, rgs: Vec<usize>) -> Self {
        assert_eq!(rgs.len(), k + l, "rgs length");
        debug_assert_eq!(normalize_rgs(&rgs), rgs, "not a restricted-growth string");
        Partition { k, l, rgs }
    }

    pub fn empty() -> Self {
        Partition {
            k: 0,
            l: 0,
            rgs: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rgs = (0..n).chain(0..n).collect();
        Partition { k: n, l: n, rgs }
    }

    /// Single block containing every vertex.
    pub fn one_block(k: usize, l: usize) -> Self {
        Partition {
            k,
            l,
            rgs: vec![0; k + l],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn size(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Block id of the vertex at layout position `pos`.
    pub fn block_of_pos(&self, pos: usize) -> usize {
        self.rgs[pos]
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.rgs[self.position(v)]
    }

    pub fn position(&self, v: Vertex) -> usize {
        match v.row {
            Row::Bottom => v.index - 1,
            Row::Top => self.k + v.index - 1,
        }
    }

    pub fn vertex(&self, pos: usize) -> Vertex {
        vertex_at(self.k, pos)
    }

    /// Blocks as sorted vertex lists, ordered by minimal vertex.
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (pos, &b) in self.rgs.iter().enumerate() {
            out[b].push(self.vertex(pos));
        }
        out
    }

    /// `(bottom count, top count)` of each block.
    pub fn block_sizes(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.num_blocks()];
        for (pos, &b) in self.rgs.iter().enumerate() {
            if pos < self.k {
                out[b].0 += 1;
            } else {
                out[b].1 += 1;
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.block_sizes().iter().all(|(a, b)| (a + b) % 2 == 0)
    }

    /// Horizontal concatenation; `other` is placed to the right.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let shift = self.num_blocks();
        let mut labels = Vec::with_capacity(self.rgs.len() + other.rgs.len());
        labels.extend_from_slice(&self.rgs[..self.k]);
        labels.extend(other.rgs[..other.k].iter().map(|b| b + shift));
        labels.extend_from_slice(&self.rgs[self.k..]);
        labels.extend(other.rgs[other.k..].iter().map(|b| b + shift));
        Partition::from_labels(self.k + other.k, self.l + other.l, &labels)
    }

    /// Swaps the two rows.
    pub fn involution(&self) -> Partition {
        let mut labels = Vec::with_capacity(self.rgs.len());
        labels.extend_from_slice(&self.rgs[self.k..]);
        labels.extend_from_slice(&self.rgs[..self.k]);
        Partition::from_labels(self.l, self.k, &labels)
    }

    /// Mirror image: vertex `i` becomes `k+1-i` in each row.
    pub fn mirror(&self) -> Partition {
        let mut labels = Vec::with_capacity(self.rgs.len());
        labels.extend(self.rgs[..self.k].iter().rev());
        labels.extend(self.rgs[self.k..].iter().rev());
        Partition::from_labels(self.k, self.l, &labels)
    }

    /// The permutation diagram with blocks `{i, sigma(i)'}`; `sigma` is
    /// given 0-based as an image vector.
    pub fn permutation(sigma: &[usize]) -> Partition {
        let n = sigma.len();
        let mut labels = vec![0; 2 * n];
        for (i, &s) in sigma.iter().enumerate() {
            labels[i] = i;
            labels[n + s] = i;
        }
        Partition::from_labels(n, n, &labels)
    }

    pub fn uncolored(&self) -> ColoredPartition {
        ColoredPartition {
            labels: vec![Sign::Plus; self.rgs.len()],
            base: self.clone(),
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

fn vertex_at(k: usize, pos: usize) -> Vertex {
    if pos < k {
        Vertex::bottom(pos + 1)
    } else {
        Vertex::top(pos - k + 1)
    }
}

/// Relabels block ids by order of first appearance.
pub(crate) fn normalize_rgs(labels: &[usize]) -> Vec<usize> {
    let mut map: Vec<(usize, usize)> = Vec::new();
    labels
        .iter()
        .map(|&b| match map.iter().find(|(from, _)| *from == b) {
            Some((_, to)) => *to,
            None => {
                let to = map.len();
                map.push((b, to));
                to
            }
        })
        .collect()
}

/// A Z2-coloured partition, stored as the canonical representative of its
/// class: the minimal vertex of every block carries `+1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPartition {
    base: Partition,
    labels: Vec<Sign>,
}

impl ColoredPartition {
    /// Canonicalizes `(p, z)`; `labels` is in layout order.
    pub fn new(base: Partition, labels: Vec<Sign>) -> Result<Self, DiagramError> {
        if labels.len() != base.rgs.len() {
            return Err(DiagramError::LabelLength {
                expected: base.rgs.len(),
                found: labels.len(),
            });
        }
        Ok(Self::canon(base, labels))
    }

    pub(crate) fn canon(base: Partition, mut labels: Vec<Sign>) -> Self {
        let mut head: Vec<Option<Sign>> = vec![None; base.num_blocks()];
        for (pos, &b) in base.rgs.iter().enumerate() {
            let h = *head[b].get_or_insert(labels[pos]);
            labels[pos] = labels[pos] * h;
        }
        ColoredPartition { base, labels }
    }

    /// A single strand `{1, 1'}` whose top carries `g`.
    pub fn token(g: Sign) -> Self {
        ColoredPartition {
            base: Partition::identity(1),
            labels: vec![Sign::Plus, g],
        }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn labels(&self) -> &[Sign] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.base.k
    }

    pub fn l(&self) -> usize {
        self.base.l
    }

    pub fn label(&self, v: Vertex) -> Sign {
        self.labels[self.base.position(v)]
    }

    pub fn is_uncolored(&self) -> bool {
        self.labels.iter().all(|&s| s == Sign::Plus)
    }

    pub fn tensor(&self, other: &ColoredPartition) -> ColoredPartition {
        let (k1, k2) = (self.k(), other.k());
        let mut labels = Vec::with_capacity(self.labels.len() + other.labels.len());
        labels.extend_from_slice(&self.labels[..k1]);
        labels.extend_from_slice(&other.labels[..k2]);
        labels.extend_from_slice(&self.labels[k1..]);
        labels.extend_from_slice(&other.labels[k2..]);
        Self::canon(self.base.tensor(&other.base), labels)
    }

    pub fn involution(&self) -> ColoredPartition {
        let k = self.k();
        let mut labels = Vec::with_capacity(self.labels.len());
        labels.extend_from_slice(&self.labels[k..]);
        labels.extend_from_slice(&self.labels[..k]);
        Self::canon(self.base.involution(), labels)
    }

    pub fn mirror(&self) -> ColoredPartition {
        let k = self.k();
        let mut labels = Vec::with_capacity(self.labels.len());
        labels.extend(self.labels[..k].iter().rev());
        labels.extend(self.labels[k..].iter().rev());
        Self::canon(self.base.mirror(), labels)
    }
}

impl fmt::Debug for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredPartition({self})")
    }
}

impl From<Partition> for ColoredPartition {
    fn from(p: Partition) -> Self {
        p.uncolored()
    }
}

/// Permutation helpers; permutations are 0-based image vectors.
pub mod perm {
    pub fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    /// `(a ∘ b)(i) = a(b(i))`.
    pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        b.iter().map(|&i| a[i]).collect()
    }

    pub fn inverse(a: &[usize]) -> Vec<usize> {
        let mut out = vec![0; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[x] = i;
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = identity(n);
        loop {
            out.push(cur.clone());
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}
