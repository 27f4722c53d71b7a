//! Sparse ring-valued tensors over the index set `1..=r`, the vertex tensors
//! `A_{d,k}`, and the two contraction primitives.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, Scalar};

/// Index value; runs over `1..=r`. The value `r` is the background color.
pub type Color = u32;

/// Default cap on the projected entry count of a contraction result.
pub const DEFAULT_MAX_ENTRIES: u64 = 10_000_000;

/// A sparse tensor of fixed arity over `{1..dim}`. Zero entries are not stored.
/// An arity-0 tensor is a scalar stored at the empty tuple.
#[derive(Clone, PartialEq)]
pub struct SparseTensor<S> {
    arity: usize,
    dim: usize,
    entries: BTreeMap<Vec<Color>, S>,
}

impl<S: Scalar> SparseTensor<S> {
    pub fn zero(arity: usize, dim: usize) -> Self {
        SparseTensor { arity, dim, entries: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        let mut t = Self::zero(0, dim);
        t.insert(Vec::new(), value);
        t
    }

    /// Builds a tensor from explicit entries, dropping zeros.
    pub fn from_entries(arity: usize, dim: usize, entries: impl IntoIterator<Item = (Vec<Color>, S)>) -> Result<Self> {
        let mut t = Self::zero(arity, dim);
        for (idx, v) in entries {
            if idx.len() != arity {
                return Err(Error::DimensionMismatch { left: idx.len(), right: arity });
            }
            if let Some(&bad) = idx.iter().find(|&&c| c == 0 || c as usize > dim) {
                return Err(Error::IndexOutOfRange { index: bad as usize, n: dim });
            }
            t.accumulate(idx, v);
        }
        t.prune();
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[Color]) -> Option<&S> {
        self.entries.get(idx)
    }

    /// Entries in ascending tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (&[Color], &S)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The value of an arity-0 tensor (`None` means zero).
    pub fn as_scalar(&self) -> Option<&S> {
        debug_assert_eq!(self.arity, 0);
        self.entries.get(&[][..])
    }

    fn insert(&mut self, idx: Vec<Color>, v: S) {
        if !v.vanishes() {
            self.entries.insert(idx, v);
        }
    }

    /// Adds `v` at `idx` and returns the change in total [`Scalar::cost`].
    fn accumulate(&mut self, idx: Vec<Color>, v: S) -> i64 {
        match self.entries.get_mut(&idx) {
            Some(cur) => {
                let before = cur.cost();
                cur.add_assign_ref(&v);
                cur.cost() as i64 - before as i64
            }
            None => {
                let c = v.cost() as i64;
                self.entries.insert(idx, v);
                c
            }
        }
    }

    fn prune(&mut self) {
        self.entries.retain(|_, v| !v.vanishes());
    }

    /// True iff every entry is invariant under every transposition of positions.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(idx, v)| {
            let mut swapped = idx.clone();
            for i in 0..self.arity {
                for j in i + 1..self.arity {
                    if idx[i] == idx[j] {
                        continue;
                    }
                    swapped.swap(i, j);
                    let same = self.entries.get(&swapped) == Some(v);
                    swapped.swap(i, j);
                    if !same {
                        return false;
                    }
                }
            }
            true
        })
    }
}

impl<S: fmt::Debug> fmt::Debug for SparseTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseTensor(arity={}, dim={}) ", self.arity, self.dim)?;
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// A symmetric bilinear form on `F^r`.
#[derive(Debug, Clone, PartialEq)]
pub enum BilinearForm<S> {
    Identity(usize),
    Matrix(Vec<Vec<S>>),
}

impl<S: Scalar> BilinearForm<S> {
    pub fn identity(dim: usize) -> Self {
        BilinearForm::Identity(dim)
    }

    /// Rejects non-square or non-symmetric matrices.
    pub fn from_matrix(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        for (a, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(Error::DimensionMismatch { left: row.len(), right: r });
            }
            for b in 0..a {
                if row[b] != rows[b][a] {
                    return Err(Error::NotSymmetric(a + 1, b + 1));
                }
            }
        }
        Ok(BilinearForm::Matrix(rows))
    }

    pub fn dim(&self) -> usize {
        match self {
            BilinearForm::Identity(r) => *r,
            BilinearForm::Matrix(m) => m.len(),
        }
    }

    /// Nonzero `(b, B[a][b])` in row `a`; `None` weight means 1.
    fn row(&self, a: Color) -> impl Iterator<Item = (Color, Option<&S>)> {
        let (ident, matrix) = match self {
            BilinearForm::Identity(_) => (Some(a), None),
            BilinearForm::Matrix(m) => (None, Some(&m[a as usize - 1])),
        };
        ident.into_iter().map(|b| (b, None)).chain(
            matrix
                .into_iter()
                .flat_map(|row| row.iter().enumerate())
                .filter(|(_, w)| !w.vanishes())
                .map(|(b, w)| (b as Color + 1, Some(w))),
        )
    }

    fn weight(&self, a: Color, b: Color) -> Option<Option<&S>> {
        match self {
            BilinearForm::Identity(_) => (a == b).then_some(None),
            BilinearForm::Matrix(m) => {
                let w = &m[a as usize - 1][b as usize - 1];
                (!w.vanishes()).then_some(Some(w))
            }
        }
    }
}

fn weighted<S: Scalar>(w: Option<&S>, v: S) -> S {
    match w {
        Some(w) => w.mul_ref(&v),
        None => v,
    }
}

/// Values placed in the vertex tensors: `x1..x_{r-1}` and `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights<S> {
    pub x: Vec<S>,
    pub t: S,
}

impl VertexWeights<MultiPoly> {
    /// The indeterminates `x1..x_{r-1}, t` themselves.
    pub fn symbolic(r: usize) -> Self {
        let m = r.saturating_sub(1);
        VertexWeights { x: (1..=m).map(|i| MultiPoly::x(m, i)).collect(), t: MultiPoly::t(m) }
    }
}

impl<S> VertexWeights<S> {
    pub fn numeric(x: Vec<S>, t: S) -> Self {
        VertexWeights { x, t }
    }

    /// The tensor dimension these weights imply, `r = |x| + 1`.
    pub fn dim(&self) -> usize {
        self.x.len() + 1
    }
}

/// The vertex tensor `A_{d,k}` of dimension `r = weights.dim()`.
///
/// For `d < k` the only entry is `t` at `(r,...,r)`. For `d >= k` every
/// arrangement of `k` copies of color `i < r` among `r`s carries `x_i`, and
/// `(r,...,r)` carries `t`.
pub fn build_vertex_tensor<S: Scalar>(d: usize, k: usize, weights: &VertexWeights<S>) -> Result<SparseTensor<S>> {
    if k == 0 {
        return Err(Error::InvalidDegree);
    }
    let r = weights.dim();
    if r < 2 {
        return Err(Error::DimensionTooSmall(r));
    }
    let bg = r as Color;
    let mut out = SparseTensor::zero(d, r);
    out.insert(vec![bg; d], weights.t.clone());
    if d >= k {
        let mut chosen: Vec<usize> = (0..k).collect();
        loop {
            for (i, xi) in weights.x.iter().enumerate() {
                let mut idx = vec![bg; d];
                for &p in &chosen {
                    idx[p] = i as Color + 1;
                }
                out.insert(idx, xi.clone());
            }
            if !next_combination(&mut chosen, d) {
                break;
            }
        }
    }
    Ok(out)
}

/// Advances a sorted k-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn projected_size(dim: usize, arity: usize, bound: u64) -> u64 {
    let mut p: u64 = 1;
    for _ in 0..arity {
        p = p.saturating_mul(dim as u64);
        if p >= bound {
            return bound;
        }
    }
    p
}

fn without(idx: &[Color], skip: usize) -> impl Iterator<Item = Color> + '_ {
    idx.iter().enumerate().filter(move |&(i, _)| i != skip).map(|(_, &c)| c)
}

/// Contracts position `pos1` of `t1` with position `pos2` of `t2` through `form`.
/// Remaining positions of `t1` come first in the result, then those of `t2`.
pub fn contract_pair<S: Scalar>(
    t1: &SparseTensor<S>,
    pos1: usize,
    t2: &SparseTensor<S>,
    pos2: usize,
    form: &BilinearForm<S>,
    max_entries: u64,
) -> Result<SparseTensor<S>> {
    for dim in [t2.dim, form.dim()] {
        if dim != t1.dim {
            return Err(Error::DimensionMismatch { left: t1.dim, right: dim });
        }
    }
    if pos1 >= t1.arity {
        return Err(Error::PositionOutOfRange { pos: pos1, arity: t1.arity });
    }
    if pos2 >= t2.arity {
        return Err(Error::PositionOutOfRange { pos: pos2, arity: t2.arity });
    }
    let arity = t1.arity + t2.arity - 2;
    let mut by_color: BTreeMap<Color, Vec<(Vec<Color>, &S)>> = BTreeMap::new();
    for (idx, v) in &t2.entries {
        by_color.entry(idx[pos2]).or_default().push((without(idx, pos2).collect(), v));
    }
    let mut left_counts: BTreeMap<Color, u64> = BTreeMap::new();
    for idx in t1.entries.keys() {
        *left_counts.entry(idx[pos1]).or_default() += 1;
    }
    // number of entry pairs that survive the form, an upper bound on the output size
    let pairs = left_counts.iter().fold(0u64, |acc, (&a, &count)| {
        let matching: u64 = form.row(a).map(|(b, _)| by_color.get(&b).map_or(0, |g| g.len() as u64)).sum();
        acc.saturating_add(count.saturating_mul(matching))
    });
    let projected = projected_size(t1.dim, arity, pairs);
    if projected > max_entries {
        return Err(Error::TensorTooLarge { projected, cap: max_entries, step: None });
    }

    let mut out = SparseTensor::zero(arity, t1.dim);
    let mut cost: i64 = 0;
    for (idx, v1) in &t1.entries {
        let head: Vec<Color> = without(idx, pos1).collect();
        for (b, w) in form.row(idx[pos1]) {
            let Some(group) = by_color.get(&b) else { continue };
            let scaled = weighted(w, v1.clone());
            for (tail, v2) in group {
                let mut key = Vec::with_capacity(arity);
                key.extend_from_slice(&head);
                key.extend_from_slice(tail);
                cost += out.accumulate(key, scaled.mul_ref(v2));
            }
        }
        if cost as u64 > max_entries {
            return Err(Error::TensorTooLarge { projected: cost as u64, cap: max_entries, step: None });
        }
    }
    out.prune();
    Ok(out)
}

/// Contracts positions `pos1` and `pos2` of the same tensor through `form`.
pub fn self_trace<S: Scalar>(
    t: &SparseTensor<S>,
    pos1: usize,
    pos2: usize,
    form: &BilinearForm<S>,
) -> Result<SparseTensor<S>> {
    if form.dim() != t.dim {
        return Err(Error::DimensionMismatch { left: t.dim, right: form.dim() });
    }
    for pos in [pos1, pos2] {
        if pos >= t.arity {
            return Err(Error::PositionOutOfRange { pos, arity: t.arity });
        }
    }
    if pos1 == pos2 {
        return Err(Error::SamePosition(pos1));
    }
    let mut out = SparseTensor::zero(t.arity - 2, t.dim);
    for (idx, v) in &t.entries {
        let Some(w) = form.weight(idx[pos1], idx[pos2]) else { continue };
        let key: Vec<Color> =
            idx.iter().enumerate().filter(|&(i, _)| i != pos1 && i != pos2).map(|(_, &c)| c).collect();
        out.accumulate(key, weighted(w, v.clone()));
    }
    out.prune();
    Ok(out)
}
