//! Mixing-time bounds for the random-to-random shuffle.
//!
//! The walk exhibits cutoff at (3/4)n·ln n − (1/4)n·ln ln n: by time
//! t = [`cutoff_time`]`(n, c)` the squared ℓ² distance to stationarity —
//! and with it 4·TV² — has dropped below a constant multiple of e^{−2c},
//! while shortly before that time it is still large. This module evaluates
//! every computable piece of that story:
//!
//! * [`l2_bound_exact`] — the exact spectral sum Σ mult·eig^{2t} over the
//!   nontrivial spectrum, which *equals* the squared ℓ² distance from the
//!   identity start (the walk is transitive and reversible) and upper-bounds
//!   4·TV².
//! * [`largesteig_term`] — the λ=[n−1,1] slice Σ_k (n−1)(1−(n+k²+k)/n²)^{2t},
//!   the slowest-decaying family.
//! * [`analytic_upper_bound`] — the closed double sum
//!   Σ_l n^l e^{−2tl/n} Σ_k C(k+l, l−1) e^{−2t(k²+kl)/n²} that dominates the
//!   spectral sum for every n and needs no spectrum enumeration.
//! * [`word_lower_bound_witness`] — the repeated-card lower-bound sum
//!   Σ_k (m−1)(1−(n+k²+k)/n²)^{2t} (m = number of card types), plus its
//!   closed floor [`word_lower_bound_floor`].
//! * [`cyclic_to_random_time`] — the (3/2)n·ln n + cn schedule for the
//!   cyclic-to-random variant, which mixes by comparison with two steps of
//!   this walk (the oracle checks the underlying identity P = A·Aᵀ).
//!
//! All logarithms are natural. Sums are accumulated with compensated
//! (Neumaier) addition in a fixed order, so results are deterministic and
//! accurate to ~1e−15 relative error.
//!
//! ```
//! use r2r_core::bounds::{cutoff_time, l2_bound_exact, analytic_upper_bound};
//! use r2r_core::spectrum::full_spectrum;
//!
//! let s = full_spectrum(5).unwrap();
//! let t = cutoff_time(5, 2.0).unwrap().ceil() as u32;
//! let exact = l2_bound_exact(&s, t);
//! // The analytic bound dominates the exact spectral sum…
//! assert!(exact <= analytic_upper_bound(5, t as f64).unwrap());
//! // …and at time 0 the exact sum counts the nonstationary dimensions.
//! assert_eq!(l2_bound_exact(&s, 0), 119.0);
//! ```

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::spectrum::Spectrum;
use crate::{Error, Result};

/// One sample of a bound curve: the squared ℓ² distance bound at step t.
/// Along any emitted curve the value is nonincreasing in t (strictly
/// decreasing wherever positive).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundPoint {
    /// Step count.
    pub t: u32,
    /// Nonnegative squared-ℓ²-distance bound at step t.
    pub value: f64,
}

/// The cutoff schedule t* = (3/4)n·ln n − (1/4)n·ln ln n + c·n.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CutoffSchedule {
    /// Deck size (≥ 3, so ln ln n is defined and positive).
    pub n: usize,
    /// Window offset in units of n.
    pub c: f64,
    /// The scheduled time.
    pub t_star: f64,
}

impl CutoffSchedule {
    /// Builds the schedule, rejecting n < 3.
    pub fn new(n: usize, c: f64) -> Result<Self> {
        Ok(CutoffSchedule {
            n,
            c,
            t_star: cutoff_time(n, c)?,
        })
    }
}

/// Compensated (Neumaier) accumulator: the error of every addition is
/// carried separately, so sums mixing magnitudes across ~n² terms stay
/// accurate to ~1 ulp regardless of order.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        // Once the running sum overflows, the compensation would be
        // inf − inf = NaN; stop compensating so the total stays at the
        // honest ∞ instead of turning into NaN.
        if t.is_finite() {
            if self.sum.abs() >= x.abs() {
                self.comp += (self.sum - t) + x;
            } else {
                self.comp += (x - t) + self.sum;
            }
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// ln(k!) for k = 0..=n_max, by cumulative summation.
fn ln_factorials(n_max: usize) -> Vec<f64> {
    let mut lf = Vec::with_capacity(n_max + 1);
    lf.push(0.0);
    let mut acc = NeumaierSum::default();
    for k in 1..=n_max {
        acc.add((k as f64).ln());
        lf.push(acc.total());
    }
    lf
}

/// The cutoff time (3/4)n·ln n − (1/4)n·ln ln n + c·n (natural logs).
///
/// Requires n ≥ 3 so that ln ln n is defined and positive; smaller decks
/// are rejected rather than extrapolated.
pub fn cutoff_time(n: usize, c: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cutoff_time needs n >= 3 (ln ln n must be positive), got {n}"
        )));
    }
    Ok(cutoff_time_continuous(n as f64, c))
}

/// [`cutoff_time`] on a real argument x > e, for plotting and analytic
/// spot checks (e.g. x = e^e makes ln ln x exactly 1).
pub fn cutoff_time_continuous(x: f64, c: f64) -> f64 {
    0.75 * x * x.ln() - 0.25 * x * x.ln().ln() + c * x
}

/// The exact squared ℓ² distance from the identity start after t steps:
/// Σ multiplicity·value^{2t} over the nontrivial spectrum. Upper-bounds
/// 4·TV(t)² and coincides with the χ² divergence of the evolved state.
///
/// Entries are summed smallest value first with compensated addition.
pub fn l2_bound_exact(spectrum: &Spectrum, t: u32) -> f64 {
    let mut acc = NeumaierSum::default();
    let two_t = 2.0 * f64::from(t);
    // The spectrum is sorted descending, so iterate in reverse to add the
    // fastest-decaying terms first.
    for e in spectrum.entries().iter().rev() {
        let mult = e.multiplicity.to_f64().unwrap_or(f64::INFINITY);
        if mult == 0.0 {
            continue;
        }
        let value = *e.value.numer() as f64 / *e.value.denom() as f64;
        if value == 1.0 {
            continue; // the stationary eigenvalue
        }
        acc.add(mult * value.powf(two_t));
    }
    acc.total()
}

/// The slowest family of the spectrum: Σ_{k=1}^{n−1} (n−1)·b_k^{2t} with
/// b_k = 1 − (n+k²+k)/n² = (n+k)(n−k−1)/n², the eigenvalues attached to
/// λ = [n−1,1], μ = [k,1] (each of multiplicity n−1). At the cutoff time
/// with offset c this term is at most e^{−2c}.
///
/// Terms are accumulated smallest first (k descending) with compensated
/// addition; at t = 0 the empty-power convention 0⁰ = 1 makes the sum
/// (n−1)².
pub fn largesteig_term(n: usize, t: f64) -> Result<f64> {
    check_pair(n, t)?;
    let nf = n as f64;
    let mut acc = NeumaierSum::default();
    for k in (1..n).rev() {
        let base = ((n + k) * (n - k - 1)) as f64 / (nf * nf);
        acc.add((nf - 1.0) * base.powf(2.0 * t));
    }
    Ok(acc.total())
}

fn check_pair(n: usize, t: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bound terms need n >= 2, got {n}"
        )));
    }
    if t.is_nan() || t < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "bound terms need t >= 0, got {t}"
        )));
    }
    Ok(())
}

/// The analytic upper bound with its diagnostic breakdown.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyticBoundReport {
    /// Deck size.
    pub n: usize,
    /// Evaluation time.
    pub t: f64,
    /// The double sum Σ_l n^l e^{−2tl/n} Σ_k C(k+l,l−1) e^{−2t(k²+kl)/n²}:
    /// the bound itself.
    pub value: f64,
    /// ln(n!·2^{−2t}), the crude estimate that already suffices for the
    /// l ≥ n/2 half of the sum (stored as a log since n! overflows f64).
    pub crude_term_ln: f64,
    /// inner_sums[l−1] = Σ_k C(k+l,l−1) e^{−2t(k²+kl)/n²} for l = 1..n−1.
    pub inner_sums: Vec<f64>,
    /// ln of the closed-form comparator e^{2l}(n²/2t)^{l/2} for each l
    /// (+∞ when t = 0). It dominates the inner sum for 2 ≤ l ≤ n/2 at
    /// cutoff-scale times; kept as a log since it overflows f64 early.
    pub closed_form_ln: Vec<f64>,
    /// Index of the last k included in each inner sum. Equals n−l (the
    /// full range) for n ≤ 200; larger decks truncate once terms are
    /// decreasing and fall below 1e−18 of the running subtotal.
    pub truncated_at: Vec<usize>,
}

impl AnalyticBoundReport {
    /// n!·2^{−2t} as a float (0 after underflow, +∞ after overflow).
    pub fn crude_term(&self) -> f64 {
        self.crude_term_ln.exp()
    }
}

/// The analytic upper bound on the squared ℓ² distance:
///
/// ```text
/// Σ_{l=1}^{n−1} n^l e^{−2tl/n} Σ_{k=0}^{n−l} C(k+l, l−1) e^{−2t(k²+kl)/n²}
/// ```
///
/// It dominates [`l2_bound_exact`] for every deck because each eigenvalue
/// is at most 1 − l/n − (k²+kl)/n² ≤ e^{−l/n−(k²+kl)/n²} for its (l, k)
/// bucket, and the bucket dimensions are at most n^l·C(k+l, l−1). Every
/// term here is an exponential, hence nonnegative by construction: the
/// clamp that the eigenvalue-power form (1 − l/n − (k²+kl)/n²)^{2t} would
/// require for negative bases is vacuous in this form (no eigenvalue lies
/// below 0 anyway, so the clamp preserves the bound either way).
///
/// At the cutoff time with offset c ≥ 2 (n large) the value is below
/// 4e^{−2c}. Evaluation is single-pass and deterministic: l ascending, k
/// ascending, compensated accumulation throughout.
pub fn analytic_upper_bound(n: usize, t: f64) -> Result<f64> {
    Ok(analytic_upper_bound_report(n, t)?.value)
}

/// [`analytic_upper_bound`] plus the per-l diagnostics.
pub fn analytic_upper_bound_report(n: usize, t: f64) -> Result<AnalyticBoundReport> {
    check_pair(n, t)?;
    let nf = n as f64;
    let lf = ln_factorials(n);
    let ln_choose = |a: usize, b: usize| lf[a] - lf[b] - lf[a - b];
    let truncate = n > 200;

    let mut total = NeumaierSum::default();
    let mut inner_sums = Vec::with_capacity(n - 1);
    let mut closed_form_ln = Vec::with_capacity(n - 1);
    let mut truncated_at = Vec::with_capacity(n - 1);
    for l in 1..n {
        let outer_ln = l as f64 * nf.ln() - 2.0 * t * l as f64 / nf;
        let mut inner = NeumaierSum::default();
        let mut last_k = n - l;
        let mut prev = f64::INFINITY;
        for k in 0..=n - l {
            let term_ln = ln_choose(k + l, l - 1) - 2.0 * t * (k * k + k * l) as f64 / (nf * nf);
            let term = term_ln.exp();
            inner.add(term);
            if truncate && k >= 1 && term < prev && term < 1e-18 * inner.total() {
                last_k = k;
                break;
            }
            prev = term;
        }
        let inner_total = inner.total();
        total.add(outer_ln.exp() * inner_total);
        inner_sums.push(inner_total);
        closed_form_ln.push(2.0 * l as f64 + 0.5 * l as f64 * (nf * nf / (2.0 * t)).ln());
        truncated_at.push(last_k);
    }

    Ok(AnalyticBoundReport {
        n,
        t,
        value: total.total(),
        crude_term_ln: lf[n] - 2.0 * t * std::f64::consts::LN_2,
        inner_sums,
        closed_form_ln,
        truncated_at,
    })
}

/// The repeated-card lower-bound witness: for a deck with m ≥ 2 card
/// types, Σ_{k=1}^{n−1} (m−1)(1 − (n+k²+k)/n²)^{2t}. It is a sub-sum of
/// the ν-deck spectral sum (the [n−1,1]/[k,1] family has multiplicity
/// exactly m−1 there), so it lower-bounds the squared ℓ² distance: while
/// the witness is large, the deck cannot be mixed.
pub fn word_lower_bound_witness(n: usize, m: usize, t: f64) -> Result<f64> {
    check_word_args(n, m, t)?;
    let nf = n as f64;
    let mut acc = NeumaierSum::default();
    for k in (1..n).rev() {
        let base = ((n + k) * (n - k - 1)) as f64 / (nf * nf);
        acc.add((m as f64 - 1.0) * base.powf(2.0 * t));
    }
    Ok(acc.total())
}

/// The closed floor under [`word_lower_bound_witness`]: the k ≤ √n − 1
/// terms alone, each bounded below by (m−1)(1 − 2/n)^{2t} (those k satisfy
/// k² + k ≤ n). Evaluates to ⌊√n − 1⌋·(m−1)·(1 − 2/n)^{2t}; at
/// t = (n/4)ln m + (n/8)ln n − cn this is at least (1/2)e^{2c} for large
/// n, which forces the lower bound in the cutoff statement.
pub fn word_lower_bound_floor(n: usize, m: usize, t: f64) -> Result<f64> {
    check_word_args(n, m, t)?;
    let nf = n as f64;
    let count = (nf.sqrt() - 1.0).floor().max(0.0);
    Ok(count * (m as f64 - 1.0) * (1.0 - 2.0 / nf).powf(2.0 * t))
}

fn check_word_args(n: usize, m: usize, t: f64) -> Result<()> {
    check_pair(n, t)?;
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "the witness needs 2 <= m <= n card types, got m={m}, n={n}"
        )));
    }
    Ok(())
}

/// The mixing schedule (3/2)n·ln n + c·n for the cyclic-to-random variant
/// (insert at position t mod n, not a uniform one). One cycle of n
/// cyclic-to-random moves is dominated in ℓ² by random-to-random steps via
/// the factorization P = A·Aᵀ of this walk through the random-to-top
/// matrix A — the oracle verifies that identity exactly — which is why the
/// coefficient is double [`cutoff_time`]'s 3/4.
pub fn cyclic_to_random_time(n: usize, c: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cyclic_to_random_time needs n >= 3, got {n}"
        )));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "cyclic_to_random_time needs c > 0, got {c}"
        )));
    }
    let nf = n as f64;
    Ok(1.5 * nf * nf.ln() + c * nf)
}
