//! Brute-force ground truth at desk scale.
//!
//! Everything the formula machinery claims — eigenvalues, multiplicities,
//! mixing behavior — can be checked directly for small decks by building
//! the explicit transition matrix on all arrangements, diagonalizing it
//! numerically, and evolving distributions exactly. This module provides:
//!
//! * [`ArrangementIndex`] — a bijection between deck arrangements
//!   (permutations, or multiset words for repeated-card decks) and dense
//!   0-based indices, with the identity arrangement at index 0;
//! * [`build_r2r_matrix`] / [`build_r2t_matrix`] / [`build_r2r_multiset`] —
//!   exact transition matrices, stored as integer move counts over a shared
//!   denominator (n² moves for random-to-random, n for random-to-top);
//! * [`numeric_eigenvalues`] — a dependency-free cyclic Jacobi eigensolver
//!   for the symmetric matrices;
//! * [`Distribution`] / [`evolve_distribution`] — exact-rational or float
//!   walk evolution, with total-variation and χ² distances to uniform;
//! * [`mc_sample`] — seeded Monte Carlo simulation as an independent sanity
//!   channel.
//!
//! The headline identity checked here: the random-to-random matrix P
//! factors through the random-to-top matrix A as P = A·Aᵀ, exactly. That
//! factorization is why P is symmetric positive semidefinite — every
//! eigenvalue is nonnegative — and why one shuffle of this walk dominates
//! two steps of the cyclic-to-random variant in ℓ².
//!
//! ```
//! use r2r_core::oracle::{build_r2r_matrix, Distribution, evolve_distribution};
//!
//! let m = build_r2r_matrix(2).unwrap();
//! // Two cards: every move leads to a uniform deck in one step.
//! let start = Distribution::delta(m.size(), 0);
//! let after = evolve_distribution(&m, &start, 1).unwrap();
//! assert_eq!(after.tv_to_uniform(), 0.0);
//! ```

mod jacobi;
mod montecarlo;

pub use jacobi::{symmetric_eigen_decomposition, symmetric_eigenvalues};
pub use montecarlo::{mc_sample, McSample, MC_DECK_CAP};

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bounds::NeumaierSum;
use crate::partitions::Partition;
use crate::{Error, Result};

/// Largest deck for the permutation matrix builders: 7! = 5040 states is a
/// 25.4M-entry dense matrix, the most this oracle is meant to handle.
pub const ORACLE_DECK_CAP: usize = 7;

/// Largest number of arrangements for any built matrix.
pub const ORACLE_STATE_CAP: usize = 5040;

/// A bijection between the arrangements of a deck and 0..count. Decks are
/// words over card types 0..m−1 in which type i appears νᵢ times; a deck of
/// n distinct cards is ν = [1ⁿ]. Ranking is lexicographic, which for
/// distinct cards coincides with the factorial number system; the sorted
/// (identity) word always has rank 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementIndex {
    evaluation: Partition,
    counts: Vec<usize>,
    size: usize,
}

/// Number of distinct arrangements of a multiset with the given type
/// counts, as a product of binomials (overflow-checked).
fn arrangement_count(counts: &[usize]) -> Option<usize> {
    let mut acc: u128 = 1;
    let mut remaining: usize = counts.iter().sum();
    for &c in counts {
        // acc *= C(remaining, c)
        let mut binom: u128 = 1;
        for i in 0..c {
            binom = binom.checked_mul((remaining - i) as u128)? / (i as u128 + 1);
        }
        acc = acc.checked_mul(binom)?;
        remaining -= c;
    }
    usize::try_from(acc).ok()
}

impl ArrangementIndex {
    /// Builds the index for a deck of evaluation ν (νᵢ cards of type i).
    pub fn new(nu: &Partition) -> Result<Self> {
        if nu.is_empty() {
            return Err(Error::InvalidArgument(
                "arrangement indexing needs a nonempty deck".into(),
            ));
        }
        let counts: Vec<usize> = nu.parts().to_vec();
        let size = arrangement_count(&counts).ok_or_else(|| {
            Error::InvalidArgument(format!("arrangement count overflows for ν = {nu}"))
        })?;
        Ok(ArrangementIndex {
            evaluation: nu.clone(),
            counts,
            size,
        })
    }

    /// The index for a deck of n distinct cards.
    pub fn distinct(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "arrangement indexing needs a nonempty deck".into(),
            ));
        }
        Self::new(&Partition::new(vec![1; n]))
    }

    /// Number of arrangements.
    pub fn len(&self) -> usize {
        self.size
    }

    /// Always false: the empty deck is rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of cards n = |ν|.
    pub fn deck_size(&self) -> usize {
        self.evaluation.size()
    }

    /// The deck evaluation ν.
    pub fn evaluation(&self) -> &Partition {
        &self.evaluation
    }

    /// The sorted word — the identity arrangement, rank 0.
    pub fn identity(&self) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.deck_size());
        for (ty, &c) in self.counts.iter().enumerate() {
            word.extend(std::iter::repeat_n(ty as u8, c));
        }
        word
    }

    fn check_word(&self, word: &[u8]) -> Result<()> {
        let mut seen = vec![0usize; self.counts.len()];
        if word.len() != self.deck_size() {
            return Err(Error::InvalidArgument(format!(
                "word length {} does not match deck size {}",
                word.len(),
                self.deck_size()
            )));
        }
        for &w in word {
            let slot = seen.get_mut(w as usize).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "card type {w} out of range for ν = {}",
                    self.evaluation
                ))
            })?;
            *slot += 1;
        }
        if seen != self.counts {
            return Err(Error::InvalidArgument(format!(
                "word content does not match ν = {}",
                self.evaluation
            )));
        }
        Ok(())
    }

    /// The lexicographic rank of a word among all arrangements of ν.
    pub fn rank(&self, word: &[u8]) -> Result<usize> {
        self.check_word(word)?;
        let mut counts = self.counts.clone();
        let mut r = 0usize;
        for &w in word {
            for ty in 0..w as usize {
                if counts[ty] > 0 {
                    counts[ty] -= 1;
                    r += arrangement_count(&counts).expect("sub-counts of a valid deck fit");
                    counts[ty] += 1;
                }
            }
            counts[w as usize] -= 1;
        }
        Ok(r)
    }

    /// The word with the given lexicographic rank.
    pub fn unrank(&self, mut r: usize) -> Result<Vec<u8>> {
        if r >= self.size {
            return Err(Error::InvalidArgument(format!(
                "rank {r} out of range for {} arrangements",
                self.size
            )));
        }
        let mut counts = self.counts.clone();
        let mut word = Vec::with_capacity(self.deck_size());
        for _ in 0..self.deck_size() {
            for ty in 0..counts.len() {
                if counts[ty] == 0 {
                    continue;
                }
                counts[ty] -= 1;
                let below = arrangement_count(&counts).expect("sub-counts of a valid deck fit");
                if r < below {
                    word.push(ty as u8);
                    break;
                }
                r -= below;
                counts[ty] += 1;
            }
        }
        Ok(word)
    }
}

/// Which shuffle a matrix encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// Remove a uniform card, reinsert at a uniform position: n² moves.
    RandomToRandom,
    /// Move a uniform card to the top: n moves.
    RandomToTop,
}

/// A dense exact transition matrix: integer move counts over a shared
/// denominator (n² or n), with the float view derived on demand. Every row
/// sums to the denominator; random-to-random matrices are symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    kind: MatrixKind,
    index: ArrangementIndex,
    denom: u32,
    counts: Vec<u32>,
}

impl TransitionMatrix {
    /// Number of states (arrangements).
    pub fn size(&self) -> usize {
        self.index.len()
    }

    /// Deck size n.
    pub fn n(&self) -> usize {
        self.index.deck_size()
    }

    /// Deck evaluation ν.
    pub fn evaluation(&self) -> &Partition {
        self.index.evaluation()
    }

    /// Which shuffle this is.
    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// The arrangement indexing shared by rows and columns.
    pub fn arrangement_index(&self) -> &ArrangementIndex {
        &self.index
    }

    /// The shared denominator: n² for random-to-random, n for random-to-top.
    pub fn denominator(&self) -> u32 {
        self.denom
    }

    /// Move count from state i to state j (numerator over the shared
    /// denominator).
    pub fn count(&self, i: usize, j: usize) -> u32 {
        self.counts[i * self.size() + j]
    }

    /// Exact transition probability i → j.
    pub fn entry(&self, i: usize, j: usize) -> Rational64 {
        Rational64::new(i64::from(self.count(i, j)), i64::from(self.denom))
    }

    /// Float transition probability i → j.
    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        f64::from(self.count(i, j)) / f64::from(self.denom)
    }

    /// The full float matrix, row-major.
    pub fn to_f64_matrix(&self) -> Vec<f64> {
        let d = f64::from(self.denom);
        self.counts.iter().map(|&c| f64::from(c) / d).collect()
    }

    /// Exact symmetry check (count-wise; valid because the denominator is
    /// shared).
    pub fn is_symmetric(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| (i + 1..s).all(|j| self.count(i, j) == self.count(j, i)))
    }

    /// Exact double-stochasticity check: every row and column sums to the
    /// denominator.
    pub fn is_doubly_stochastic(&self) -> bool {
        let s = self.size();
        let rows = (0..s).all(|i| {
            (0..s).map(|j| u64::from(self.count(i, j))).sum::<u64>() == u64::from(self.denom)
        });
        let cols = (0..s).all(|j| {
            (0..s).map(|i| u64::from(self.count(i, j))).sum::<u64>() == u64::from(self.denom)
        });
        rows && cols
    }

    /// trace(M^t) in floating point, by repeated multiplication.
    pub fn trace_of_power(&self, t: u32) -> f64 {
        let s = self.size();
        let m = self.to_f64_matrix();
        let mut acc = vec![0.0; s * s];
        for i in 0..s {
            acc[i * s + i] = 1.0;
        }
        for _ in 0..t {
            let mut next = vec![0.0; s * s];
            for i in 0..s {
                for k in 0..s {
                    let a = acc[i * s + k];
                    if a == 0.0 {
                        continue;
                    }
                    for j in 0..s {
                        next[i * s + j] += a * m[k * s + j];
                    }
                }
            }
            acc = next;
        }
        let mut tr = NeumaierSum::default();
        for i in 0..s {
            tr.add(acc[i * s + i]);
        }
        tr.total()
    }

    /// CSV float view: one row per line, no header. Mind the size — n = 7
    /// has 25.4M entries.
    pub fn to_csv_string(&self) -> String {
        let s = self.size();
        let mut out = String::new();
        for i in 0..s {
            for j in 0..s {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{}", self.entry_f64(i, j)));
            }
            out.push('\n');
        }
        out
    }

    /// JSON rational view: integer counts plus the shared denominator, so
    /// entry (i, j) is counts[i][j]/denominator exactly.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: MatrixKind,
            n: usize,
            evaluation: &'a [usize],
            states: usize,
            denominator: u32,
            counts: Vec<&'a [u32]>,
        }
        let s = self.size();
        let repr = Repr {
            kind: self.kind,
            n: self.n(),
            evaluation: self.evaluation().parts(),
            states: s,
            denominator: self.denom,
            counts: self.counts.chunks(s).collect(),
        };
        serde_json::to_string(&repr).expect("plain data serializes")
    }
}

/// Applies the move "remove the card at position p, reinsert so it lands at
/// position q" to a word.
fn apply_move(word: &mut Vec<u8>, p: usize, q: usize) {
    let card = word.remove(p);
    word.insert(q, card);
}

fn build_matrix(index: ArrangementIndex, kind: MatrixKind) -> TransitionMatrix {
    let s = index.len();
    let n = index.deck_size();
    let mut counts = vec![0u32; s * s];
    for i in 0..s {
        let word = index.unrank(i).expect("rank in range");
        match kind {
            MatrixKind::RandomToRandom => {
                for p in 0..n {
                    for q in 0..n {
                        let mut next = word.clone();
                        apply_move(&mut next, p, q);
                        let j = index.rank(&next).expect("moves preserve content");
                        counts[i * s + j] += 1;
                    }
                }
            }
            MatrixKind::RandomToTop => {
                for p in 0..n {
                    let mut next = word.clone();
                    apply_move(&mut next, p, 0);
                    let j = index.rank(&next).expect("moves preserve content");
                    counts[i * s + j] += 1;
                }
            }
        }
    }
    let denom = match kind {
        MatrixKind::RandomToRandom => (n * n) as u32,
        MatrixKind::RandomToTop => n as u32,
    };
    TransitionMatrix {
        kind,
        index,
        denom,
        counts,
    }
}

fn check_deck_cap(what: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "deck size must be at least 1".into(),
        ));
    }
    if n > ORACLE_DECK_CAP {
        return Err(Error::CapExceeded {
            what,
            value: n,
            cap: ORACLE_DECK_CAP,
        });
    }
    Ok(())
}

/// The random-to-random transition matrix on all n! arrangements of n
/// distinct cards: each of the n² (position, slot) moves has weight 1/n².
/// Symmetric and doubly stochastic, with diagonal entries ≥ 1/n (the n
/// moves that reinsert where they removed).
pub fn build_r2r_matrix(n: usize) -> Result<TransitionMatrix> {
    check_deck_cap("build_r2r_matrix deck", n)?;
    Ok(build_matrix(
        ArrangementIndex::distinct(n)?,
        MatrixKind::RandomToRandom,
    ))
}

/// The random-to-top transition matrix A: each of the n card choices (move
/// that card to the top) has weight 1/n. Row-stochastic but not symmetric
/// for n ≥ 3; its symmetrization A·Aᵀ is exactly [`build_r2r_matrix`],
/// which [`adjoint_product_matches_r2r`] verifies.
pub fn build_r2t_matrix(n: usize) -> Result<TransitionMatrix> {
    check_deck_cap("build_r2t_matrix deck", n)?;
    Ok(build_matrix(
        ArrangementIndex::distinct(n)?,
        MatrixKind::RandomToTop,
    ))
}

/// The random-to-random matrix on a repeated-card deck with νᵢ cards of
/// type i: the same n² moves, projected onto the n!/Πνᵢ! distinguishable
/// arrangements. Still symmetric and doubly stochastic.
pub fn build_r2r_multiset(nu: &Partition) -> Result<TransitionMatrix> {
    let index = ArrangementIndex::new(nu)?;
    if index.len() > ORACLE_STATE_CAP {
        return Err(Error::CapExceeded {
            what: "build_r2r_multiset states",
            value: index.len(),
            cap: ORACLE_STATE_CAP,
        });
    }
    Ok(build_matrix(index, MatrixKind::RandomToRandom))
}

/// Verifies the factorization P = A·Aᵀ exactly: the (x, z) entry of A·Aᵀ
/// counts pairs of to-top moves (c, c′) with toTop_c(x) = toTop_{c′}(z),
/// which forces c = c′ (both name the shared top card) — i.e. z is x with
/// one card removed and reinserted, the random-to-random kernel. Note the
/// transpose is on the right: with row-stochastic A, Aᵀ·A is a different
/// walk (top-to-random symmetrized).
pub fn adjoint_product_matches_r2r(n: usize) -> Result<bool> {
    let p = build_r2r_matrix(n)?;
    let a = build_r2t_matrix(n)?;
    let s = p.size();
    for x in 0..s {
        for z in 0..s {
            // (A·Aᵀ)(x,z) over denominator n²: Σ_y A(x,y)·A(z,y).
            let mut acc = 0u32;
            for y in 0..s {
                acc += a.count(x, y) * a.count(z, y);
            }
            if acc != p.count(x, z) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Numeric eigenvalues of a symmetric transition matrix, every one with
/// multiplicity, sorted descending. Uses the cyclic Jacobi solver; rejects
/// matrices that are not symmetric to 1e−12.
pub fn numeric_eigenvalues(m: &TransitionMatrix) -> Result<Vec<f64>> {
    symmetric_eigenvalues(&m.to_f64_matrix(), m.size())
}

/// A probability distribution over arrangement indices, exact or float.
#[derive(Clone, Debug, PartialEq)]
pub enum Distribution {
    /// Numerators over one shared denominator; Σ num = den exactly.
    Exact { num: Vec<BigUint>, den: BigUint },
    /// Float probabilities, summing to 1 within rounding.
    Float(Vec<f64>),
}

impl Distribution {
    /// Point mass at the given state, exact.
    pub fn delta(states: usize, at: usize) -> Distribution {
        assert!(at < states, "state {at} out of range for {states} states");
        let mut num = vec![BigUint::zero(); states];
        num[at] = BigUint::one();
        Distribution::Exact {
            num,
            den: BigUint::one(),
        }
    }

    /// The uniform distribution, exact.
    pub fn uniform(states: usize) -> Distribution {
        assert!(states > 0, "a distribution needs at least one state");
        Distribution::Exact {
            num: vec![BigUint::one(); states],
            den: BigUint::from(states),
        }
    }

    /// Number of states.
    pub fn len(&self) -> usize {
        match self {
            Distribution::Exact { num, .. } => num.len(),
            Distribution::Float(p) => p.len(),
        }
    }

    /// Always false: constructors require at least one state.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether this distribution carries exact rationals.
    pub fn is_exact(&self) -> bool {
        matches!(self, Distribution::Exact { .. })
    }

    /// The probability of one state, as a float.
    pub fn prob_f64(&self, i: usize) -> f64 {
        match self {
            Distribution::Exact { num, den } => {
                BigRational::new(BigInt::from(num[i].clone()), BigInt::from(den.clone()))
                    .to_f64()
                    .unwrap_or(0.0)
            }
            Distribution::Float(p) => p[i],
        }
    }

    /// All probabilities as floats.
    pub fn to_f64_vec(&self) -> Vec<f64> {
        match self {
            Distribution::Exact { num, den } => {
                let d = den.to_f64().unwrap_or(f64::INFINITY);
                num.iter().map(|x| x.to_f64().unwrap_or(0.0) / d).collect()
            }
            Distribution::Float(p) => p.clone(),
        }
    }

    /// Total mass: exactly 1 for exact distributions (asserted), within
    /// 1e−12 of 1 for float ones.
    pub fn total_mass(&self) -> f64 {
        match self {
            Distribution::Exact { num, den } => {
                let total: BigUint = num.iter().cloned().sum();
                debug_assert_eq!(&total, den, "exact distribution must sum to 1");
                BigRational::new(BigInt::from(total), BigInt::from(den.clone()))
                    .to_f64()
                    .unwrap_or(1.0)
            }
            Distribution::Float(p) => {
                let mut acc = NeumaierSum::default();
                for &x in p {
                    acc.add(x);
                }
                acc.total()
            }
        }
    }

    /// Exact total-variation distance to uniform, when exact:
    /// (1/2)Σ|pᵢ − 1/S| = Σ|S·numᵢ − den| / (2·S·den).
    pub fn tv_to_uniform_exact(&self) -> Option<BigRational> {
        let Distribution::Exact { num, den } = self else {
            return None;
        };
        let s = BigInt::from(num.len());
        let den = BigInt::from(den.clone());
        let mut acc = BigInt::zero();
        for x in num {
            let diff = &s * BigInt::from(x.clone()) - &den;
            acc += BigInt::from(diff.magnitude().clone());
        }
        Some(BigRational::new(acc, BigInt::from(2) * s * den))
    }

    /// Exact χ² divergence from uniform, when exact:
    /// Σ (pᵢ − 1/S)²/(1/S) = Σ (S·numᵢ − den)² / (S·den²).
    pub fn chi2_to_uniform_exact(&self) -> Option<BigRational> {
        let Distribution::Exact { num, den } = self else {
            return None;
        };
        let s = BigInt::from(num.len());
        let den = BigInt::from(den.clone());
        let mut acc = BigInt::zero();
        for x in num {
            let diff = &s * BigInt::from(x.clone()) - &den;
            acc += &diff * &diff;
        }
        Some(BigRational::new(acc, s * &den * &den))
    }

    /// Total-variation distance to uniform (exact path when available).
    pub fn tv_to_uniform(&self) -> f64 {
        match self {
            Distribution::Exact { .. } => self
                .tv_to_uniform_exact()
                .expect("exact distribution")
                .to_f64()
                .unwrap_or(0.0),
            Distribution::Float(p) => {
                let u = 1.0 / p.len() as f64;
                let mut acc = NeumaierSum::default();
                for &x in p {
                    acc.add((x - u).abs());
                }
                0.5 * acc.total()
            }
        }
    }

    /// χ² divergence from uniform (exact path when available); equals the
    /// squared ℓ² distance ‖d/π − 1‖² with respect to the uniform π.
    pub fn chi2_to_uniform(&self) -> f64 {
        match self {
            Distribution::Exact { .. } => self
                .chi2_to_uniform_exact()
                .expect("exact distribution")
                .to_f64()
                .unwrap_or(f64::INFINITY),
            Distribution::Float(p) => {
                let s = p.len() as f64;
                let u = 1.0 / s;
                let mut acc = NeumaierSum::default();
                for &x in p {
                    acc.add((x - u) * (x - u) * s);
                }
                acc.total()
            }
        }
    }

    /// CSV view: `rank,probability` with float probabilities.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("rank,probability\n");
        for (i, p) in self.to_f64_vec().into_iter().enumerate() {
            out.push_str(&format!("{i},{p}\n"));
        }
        out
    }
}

/// (1/2)Σ|dᵢ − 1/S|, the total-variation distance to the uniform
/// stationary distribution.
pub fn tv_distance(d: &Distribution) -> f64 {
    d.tv_to_uniform()
}

/// Σ(dᵢ − 1/S)²·S, the χ² divergence from uniform.
pub fn chi2_distance(d: &Distribution) -> f64 {
    d.chi2_to_uniform()
}

/// Threshold on t·states beyond which [`evolve_distribution`] switches
/// from exact rationals to floats.
const EXACT_EVOLVE_BUDGET: u128 = 1_000_000;

/// start·Mᵗ by repeated vector-matrix multiplication. Exact distributions
/// stay exact while t·states ≤ 10⁶ (numerators pick up one factor of the
/// matrix denominator per step); beyond that, or from a float start, the
/// evolution runs in floats.
pub fn evolve_distribution(
    m: &TransitionMatrix,
    start: &Distribution,
    t: u32,
) -> Result<Distribution> {
    let s = m.size();
    if start.len() != s {
        return Err(Error::SizeMismatch(
            "distribution".into(),
            start.len(),
            "matrix".into(),
            s,
        ));
    }
    let exact_ok = u128::from(t) * s as u128 <= EXACT_EVOLVE_BUDGET;
    match start {
        Distribution::Exact { num, den } if exact_ok => {
            let mut num = num.clone();
            let mut den = den.clone();
            for _ in 0..t {
                let mut next = vec![BigUint::zero(); s];
                for (i, ni) in num.iter().enumerate() {
                    if ni.is_zero() {
                        continue;
                    }
                    for (j, slot) in next.iter_mut().enumerate() {
                        let c = m.count(i, j);
                        if c != 0 {
                            *slot += ni * c;
                        }
                    }
                }
                num = next;
                den *= m.denominator();
            }
            Ok(Distribution::Exact { num, den })
        }
        _ => {
            let mut v = start.to_f64_vec();
            let d = f64::from(m.denominator());
            for _ in 0..t {
                let mut next = vec![0.0f64; s];
                for (i, &vi) in v.iter().enumerate() {
                    if vi == 0.0 {
                        continue;
                    }
                    for (j, slot) in next.iter_mut().enumerate() {
                        *slot += vi * f64::from(m.count(i, j));
                    }
                }
                for slot in &mut next {
                    *slot /= d;
                }
                v = next;
            }
            Ok(Distribution::Float(v))
        }
    }
}
