//! Integer partitions and Young-diagram geometry.
//!
//! A partition λ = [λ₁, …, λᵣ] of n is a weakly decreasing list of positive
//! integers summing to n, drawn as a left-justified diagram with λᵢ cells in
//! row i. Everything downstream is indexed by partitions: tableau shapes,
//! eigenvalue labels, and deck evaluations. This module provides the diagram
//! operations the rest of the crate needs:
//!
//! * enumeration in a canonical order ([`enumerate_partitions`]),
//! * conjugation and containment ([`Partition::conjugate`],
//!   [`Partition::contains`]),
//! * horizontal strips ([`is_horizontal_strip`],
//!   [`horizontal_strip_subshapes`]),
//! * the diagonal index Σ (j − i) ([`Partition::diag_index`]),
//! * dominance order ([`Partition::dominates`]),
//! * standard-tableau counts via hook lengths ([`syt_count`]).

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition of a nonnegative integer: weakly decreasing positive parts.
///
/// The empty partition ∅ (of 0) is a first-class value; trailing zeros are
/// stripped on construction. Partitions order lexicographically by parts,
/// so sorting descending yields the canonical enumeration order
/// [4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// # Panics
    /// Panics if the parts are not weakly decreasing or contain an interior
    /// zero. Use [`Partition::try_new`] for fallible construction.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        Self::try_new(parts.into()).expect("invalid partition")
    }

    /// Fallible constructor; accepts trailing zeros and strips them.
    pub fn try_new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p >= 1);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// The empty partition ∅.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// True for ∅.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts λ₁ ≥ λ₂ ≥ ….
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows r.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// |λ|: the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// λᵢ with 1-based `row`; 0 beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        if row >= 1 {
            self.parts.get(row - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// True iff the diagram of `other` fits inside this one (μ ⊆ λ).
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// The transpose partition λ', with λ'ⱼ = #{i : λᵢ ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The diagonal index Σ_{(i,j)∈λ} (j − i) over 1-indexed cells.
    ///
    /// May be negative; transposing a diagram negates it.
    pub fn diag_index(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                // Row i+1 contributes Σ_{j=1..len} (j - (i+1)).
                let row_sum = (len * (len + 1) / 2) as i64;
                row_sum - (len as i64) * (i as i64 + 1)
            })
            .sum()
    }

    /// Dominance order: λ ⊵ ν iff every prefix sum of λ weakly exceeds the
    /// corresponding prefix sum of ν (missing parts read as 0).
    ///
    /// Defined only between partitions of the same integer; unequal sizes
    /// are rejected.
    pub fn dominates(&self, nu: &Partition) -> Result<bool> {
        if self.size() != nu.size() {
            return Err(Error::SizeMismatch(
                self.to_string(),
                self.size(),
                nu.to_string(),
                nu.size(),
            ));
        }
        let mut acc_l = 0usize;
        let mut acc_n = 0usize;
        for i in 0..self.parts.len().max(nu.parts.len()) {
            acc_l += self.parts.get(i).copied().unwrap_or(0);
            acc_n += nu.parts.get(i).copied().unwrap_or(0);
            if acc_l < acc_n {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::try_new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in lexicographic descending order, optionally with
/// first part capped by `max_first_part`.
///
/// `enumerate_partitions(0, None)` yields `[∅]`.
pub fn enumerate_partitions(n: usize, max_first_part: Option<usize>) -> Vec<Partition> {
    let cap = max_first_part.unwrap_or(n).min(n);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, cap, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for first in (1..=cap.min(remaining)).rev() {
        stack.push(first);
        descend(remaining - first, first, stack, out);
        stack.pop();
    }
}

/// True iff μ ⊆ λ and the skew diagram λ/μ has at most one cell per column
/// (equivalently λ'ᵢ − 1 ≤ μ'ᵢ for every column i).
///
/// The column condition is evaluated row-wise as μᵢ ≥ λᵢ₊₁ for all i, which
/// is the same statement without building conjugates.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (1..=lambda.rows()).all(|i| mu.part(i) >= lambda.part(i + 1))
}

/// All μ with λ/μ a horizontal strip, in lexicographic descending order,
/// filtered to |μ| = `size` when given.
///
/// The choices are independent per row (λᵢ₊₁ ≤ μᵢ ≤ λᵢ), so the result has
/// Π (λᵢ − λᵢ₊₁ + 1) members before filtering. The minimum achievable |μ|
/// is |λ| − λ₁ (remove one cell from every column).
pub fn horizontal_strip_subshapes(lambda: &Partition, size: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    strip_choices(lambda, 1, 0, size, &mut stack, &mut out);
    out
}

fn strip_choices(
    lambda: &Partition,
    row: usize,
    acc: usize,
    size: Option<usize>,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > lambda.rows() {
        if size.is_none_or(|s| s == acc) {
            let parts: Vec<usize> = stack.iter().copied().take_while(|&p| p > 0).collect();
            out.push(Partition { parts });
        }
        return;
    }
    let hi = lambda.part(row);
    let lo = lambda.part(row + 1);
    // Remaining rows can still contribute between Σ lower and Σ upper cells;
    // prune when the requested size is already unreachable.
    for v in (lo..=hi).rev() {
        if let Some(s) = size {
            let rest_max: usize = (row + 1..=lambda.rows()).map(|r| lambda.part(r)).sum();
            if acc + v > s || acc + v + rest_max < s {
                continue;
            }
        }
        stack.push(v);
        strip_choices(lambda, row + 1, acc + v, size, stack, out);
        stack.pop();
    }
}

/// d_λ: the number of standard Young tableaux of shape λ, by the hook length
/// formula |λ|! / Π hooks, in exact big-integer arithmetic (d_∅ = 1).
///
/// The numerator is multiplied out fully and divided once, so no rational
/// intermediate state is needed (the division is exact).
pub fn syt_count(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut numerator = BigUint::one();
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let mut hooks = BigUint::one();
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 1..=len {
            let arm = len - j;
            let leg = conj.part(j) - (i + 1);
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    numerator / hooks
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// C(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return num_traits::Zero::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The multinomial coefficient |ν|! / (ν₁! ··· ν_m!): the number of distinct
/// arrangements of a deck with νᵢ copies of card type i.
pub fn multinomial(nu: &Partition) -> BigUint {
    let mut acc = factorial(nu.size());
    for &part in nu.parts() {
        acc /= factorial(part);
    }
    acc
}
