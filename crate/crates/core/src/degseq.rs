//! Degree sequences and tree-graphicality.

use std::fmt;

use serde::Serialize;

use crate::error::DegreeSequenceError;

/// A degree sequence stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts `values` non-increasing without checking graphicality.
    pub fn new(mut values: Vec<usize>) -> DegreeSequence {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// `(value, multiplicity)` pairs, largest value first: the `x_i^{n_i}` form.
    pub fn multiset(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((x, k)) if *x == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// `(0)` for the single vertex, otherwise positive entries summing to `2(n-1)`.
    pub fn is_tree_graphical(&self) -> bool {
        match self.values.len() {
            0 => false,
            1 => self.values[0] == 0,
            n => self.values.iter().all(|&d| d >= 1) && self.sum() == 2 * (n - 1),
        }
    }

    /// `self` is majorized by `other`: same length and total, and every prefix
    /// sum of `self` is at most the matching prefix sum of `other`.
    pub fn majorized_by(&self, other: &DegreeSequence) -> bool {
        if self.len() != other.len() || self.sum() != other.sum() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        self.values.iter().zip(&other.values).all(|(x, y)| {
            a += x;
            b += y;
            a <= b
        })
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts exactly the tree-graphical sequences, returned sorted non-increasing.
pub fn validate_tree_sequence(values: &[i64]) -> Result<DegreeSequence, DegreeSequenceError> {
    if values.is_empty() {
        return Err(DegreeSequenceError::Empty);
    }
    if values == [0] {
        return Ok(DegreeSequence { values: vec![0] });
    }
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v < 1) {
        return Err(DegreeSequenceError::NonPositive { index, value });
    }
    let sum: i64 = values.iter().sum();
    let expected = 2 * (values.len() as i64 - 1);
    if sum != expected {
        return Err(DegreeSequenceError::BadSum { sum, expected });
    }
    Ok(DegreeSequence::new(values.iter().map(|&v| v as usize).collect()))
}

/// Every tree-graphical sequence of length `n`, in descending lexicographic order.
pub fn tree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![DegreeSequence { values: vec![0] }];
    }
    // partitions of n - 2 into at most n parts, each part adds to a base degree of 1
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(n - 2, n - 2, n, &mut parts, &mut |p| {
        let mut values = vec![1; n];
        for (slot, &extra) in values.iter_mut().zip(p) {
            *slot += extra;
        }
        out.push(DegreeSequence { values });
    });
    out
}

fn partitions(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    parts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    if parts.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        parts.push(p);
        partitions(remaining - p, p, max_len, parts, emit);
        parts.pop();
    }
}
