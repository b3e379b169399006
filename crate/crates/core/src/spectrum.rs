//! The exact spectrum of the random-to-random shuffle.
//!
//! One shuffle removes a uniformly random card and reinserts it at a
//! uniformly random position. Its transition matrix on the n! arrangements
//! (or on the multiset arrangements of a repeated-card deck) has eigenvalues
//! indexed by pairs (λ, μ) with λ ⊢ n and λ/μ a horizontal strip:
//!
//! ```text
//! eig(λ/μ) = ( C(n+1,2) − C(|μ|+1,2) + diag(λ) − diag(μ) ) / n²
//! ```
//!
//! occurring with multiplicity d_λ·d^μ for a deck of distinct cards, or
//! K_{λ,ν}·d^μ (restricted to λ ⊵ ν) for a deck of evaluation ν. Everything
//! here is exact: values are rationals with denominator dividing n², and
//! multiplicities are big integers.
//!
//! ```
//! use r2r_core::partitions::Partition;
//! use r2r_core::spectrum::{eigenvalue, full_spectrum};
//!
//! // The second-largest eigenvalue of the n = 3 walk is 4/9.
//! let top = eigenvalue(&Partition::new([2, 1]), &Partition::new([1, 1])).unwrap();
//! assert_eq!(top, num_rational::Rational64::new(4, 9));
//!
//! // Multiplicities over all (λ, μ) pairs always sum to n!.
//! let s = full_spectrum(3).unwrap();
//! assert_eq!(s.total_multiplicity(), 6u32.into());
//! ```

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::partitions::{
    enumerate_partitions, horizontal_strip_subshapes, is_horizontal_strip, syt_count, Partition,
};
use crate::tableaux::{desarrangement_count, kostka_number};
use crate::{Error, Result};

/// Deck-size cap for full-spectrum enumeration. The cost is partition-pair
/// enumeration, not n!, but it still grows quickly: n = 40 has about 9
/// million (λ, μ) pairs, occupying gigabytes once materialized. Stay well
/// below the cap unless that is acceptable.
pub const SPECTRUM_CAP: usize = 40;

/// One eigenvalue of the shuffle: its (λ, μ) label, exact value, and
/// multiplicity. Multiplicity 0 entries are legitimate members of the
/// indexing (d^μ = 0 happens, e.g. single-row μ) and are kept internally;
/// serialization filters them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    /// The outer shape, a partition of the deck size n.
    pub lambda: Partition,
    /// The inner shape; λ/μ is a horizontal strip.
    pub mu: Partition,
    /// The exact eigenvalue, in [0, 1] with denominator dividing n².
    pub value: Rational64,
    /// d_λ·d^μ, or K_{λ,ν}·d^μ for a deck of evaluation ν.
    pub multiplicity: BigUint,
}

/// The complete spectrum for one deck: every (λ, μ) strip pair of weight n,
/// sorted by value descending (ties: λ, then μ, lexicographically
/// descending) for stable output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    n: usize,
    evaluation: Partition,
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// The deck size n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The deck evaluation ν ([1ⁿ] for distinct cards).
    pub fn evaluation(&self) -> &Partition {
        &self.evaluation
    }

    /// Every entry, including multiplicity-0 ones.
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// The entries that actually occur (multiplicity > 0).
    pub fn nonzero_entries(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.multiplicity.is_zero())
    }

    /// Σ multiplicities: n! for distinct decks, the multinomial coefficient
    /// for evaluation ν.
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| e.multiplicity.clone()).sum()
    }

    /// JSON with multiplicity-0 entries filtered; multiplicities are decimal
    /// strings since they outgrow u64 quickly.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct EntryRepr<'a> {
            lambda: &'a [usize],
            mu: &'a [usize],
            num: i64,
            den: i64,
            multiplicity: String,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            evaluation: &'a [usize],
            entries: Vec<EntryRepr<'a>>,
        }
        let repr = Repr {
            n: self.n,
            evaluation: self.evaluation.parts(),
            entries: self
                .nonzero_entries()
                .map(|e| EntryRepr {
                    lambda: e.lambda.parts(),
                    mu: e.mu.parts(),
                    num: *e.value.numer(),
                    den: *e.value.denom(),
                    multiplicity: e.multiplicity.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("plain data serializes")
    }

    /// CSV with columns lambda, mu, num, den, multiplicity; partitions are
    /// quoted since their bracket form contains commas.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("lambda,mu,num,den,multiplicity\n");
        for e in self.nonzero_entries() {
            out.push_str(&format!(
                "\"{}\",\"{}\",{},{},{}\n",
                e.lambda,
                e.mu,
                e.value.numer(),
                e.value.denom(),
                e.multiplicity
            ));
        }
        out
    }
}

/// The exact eigenvalue for a strip pair (λ, μ):
/// ( C(n+1,2) − C(|μ|+1,2) + diag(λ) − diag(μ) ) / n² with n = |λ|.
///
/// Rejects pairs where λ/μ is not a horizontal strip, and the empty λ.
pub fn eigenvalue(lambda: &Partition, mu: &Partition) -> Result<Rational64> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "eigenvalues need a deck of at least one card".into(),
        ));
    }
    if !is_horizontal_strip(lambda, mu) {
        return Err(Error::NotAHorizontalStrip(
            mu.to_string(),
            lambda.to_string(),
        ));
    }
    let n = n as i64;
    let m = mu.size() as i64;
    let num = n * (n + 1) / 2 - m * (m + 1) / 2 + lambda.diag_index() - mu.diag_index();
    Ok(Rational64::new(num, n * n))
}

fn check_cap(what: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "deck size must be at least 1".into(),
        ));
    }
    if n > SPECTRUM_CAP {
        return Err(Error::CapExceeded {
            what,
            value: n,
            cap: SPECTRUM_CAP,
        });
    }
    Ok(())
}

fn sort_entries(entries: &mut [SpectrumEntry]) {
    entries.sort_unstable_by(|a, b| {
        b.value
            .cmp(&a.value)
            .then_with(|| b.lambda.cmp(&a.lambda))
            .then_with(|| b.mu.cmp(&a.mu))
    });
}

/// The full spectrum for a deck of n distinct cards: every strip pair
/// (λ, μ) with |λ| = n, with multiplicity d_λ·d^μ. Total multiplicity n!.
pub fn full_spectrum(n: usize) -> Result<Spectrum> {
    check_cap("full_spectrum", n)?;
    let mut entries = Vec::new();
    for lambda in enumerate_partitions(n, None) {
        let d_lambda = syt_count(&lambda);
        for mu in horizontal_strip_subshapes(&lambda, None) {
            let value = eigenvalue(&lambda, &mu).expect("enumerated pairs are strips");
            let multiplicity = &d_lambda * desarrangement_count(&mu);
            entries.push(SpectrumEntry {
                lambda: lambda.clone(),
                mu,
                value,
                multiplicity,
            });
        }
    }
    sort_entries(&mut entries);
    Ok(Spectrum {
        n,
        evaluation: Partition::new(vec![1; n]),
        entries,
    })
}

/// The spectrum for a deck with νᵢ copies of card type i: entries only for
/// λ ⊵ ν, with multiplicity K_{λ,ν}·d^μ. Total multiplicity is the
/// multinomial coefficient |ν|! / Π νᵢ!.
///
/// ν = [1ⁿ] reproduces [`full_spectrum`] exactly; ν = [n] is the degenerate
/// single-type deck whose only arrangement is fixed (total multiplicity 1).
pub fn spectrum_with_evaluation(nu: &Partition) -> Result<Spectrum> {
    let n = nu.size();
    check_cap("spectrum_with_evaluation", n)?;
    let mut entries = Vec::new();
    for lambda in enumerate_partitions(n, None) {
        if !lambda.dominates(nu).expect("equal sizes by construction") {
            continue;
        }
        let kostka = kostka_number(&lambda, nu).expect("equal sizes by construction");
        for mu in horizontal_strip_subshapes(&lambda, None) {
            let value = eigenvalue(&lambda, &mu).expect("enumerated pairs are strips");
            let multiplicity = &kostka * desarrangement_count(&mu);
            entries.push(SpectrumEntry {
                lambda: lambda.clone(),
                mu,
                value,
                multiplicity,
            });
        }
    }
    sort_entries(&mut entries);
    Ok(Spectrum {
        n,
        evaluation: nu.clone(),
        entries,
    })
}

/// Σ multiplicity·value^t, exactly. This equals the trace of the t-th power
/// of the transition matrix, which the dense oracle cross-checks. At t = 0
/// it counts states (0⁰ = 1 by the empty-product convention).
pub fn spectral_trace_exact(spectrum: &Spectrum, t: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for e in &spectrum.entries {
        if e.multiplicity.is_zero() {
            continue;
        }
        let num = BigInt::from(*e.value.numer()).pow(t);
        let den = BigInt::from(*e.value.denom()).pow(t);
        acc += BigRational::new(num, den) * BigRational::from(BigInt::from(e.multiplicity.clone()));
    }
    acc
}

/// [`spectral_trace_exact`] rounded to f64 (+∞ if it overflows).
pub fn spectral_trace(spectrum: &Spectrum, t: u32) -> f64 {
    spectral_trace_exact(spectrum, t)
        .to_f64()
        .unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binomial, factorial, multinomial};
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn r(num: i64, den: i64) -> Rational64 {
        Rational64::new(num, den)
    }

    #[test]
    fn eigenvalue_examples() {
        for n in 1..=8usize {
            assert_eq!(
                eigenvalue(&p(&[n]), &Partition::empty()).unwrap(),
                Rational64::one(),
                "n={n}"
            );
        }
        // eig([n−1,1]/[k,1]) = 1 − (n + k² + k)/n².
        for n in 3..=9usize {
            for k in 1..=n - 2 {
                let lam = p(&[n - 1, 1]);
                let mu = p(&[k, 1]);
                let expect = Rational64::one() - r((n + k * k + k) as i64, (n * n) as i64);
                assert_eq!(eigenvalue(&lam, &mu).unwrap(), expect, "n={n} k={k}");
            }
        }
        assert_eq!(eigenvalue(&p(&[2, 1]), &p(&[1, 1])).unwrap(), r(4, 9));
    }

    #[test]
    fn eigenvalue_rejects_bad_inputs() {
        assert!(matches!(
            eigenvalue(&p(&[3, 3]), &p(&[1])),
            Err(Error::NotAHorizontalStrip(..))
        ));
        assert!(matches!(
            eigenvalue(&p(&[2]), &p(&[3])),
            Err(Error::NotAHorizontalStrip(..))
        ));
        assert!(matches!(
            eigenvalue(&Partition::empty(), &Partition::empty()),
            Err(Error::InvalidArgument(..))
        ));
    }

    #[test]
    fn eigenvalue_of_equal_shapes_is_zero() {
        // μ = λ is the largest strip subshape and always gives eigenvalue 0,
        // the spectrum's floor.
        for n in 1..=20 {
            for lam in enumerate_partitions(n, None) {
                assert_eq!(eigenvalue(&lam, &lam).unwrap(), Rational64::zero());
            }
        }
        for lam in enumerate_partitions(40, None) {
            assert_eq!(eigenvalue(&lam, &lam).unwrap(), Rational64::zero());
        }
    }

    /// 1 − l/n − (k² + kl)/n² for l = n − λ₁ and k = |μ| − l.
    fn envelope(n: usize, l: usize, k: usize) -> Rational64 {
        Rational64::one() - r(l as i64, n as i64) - r((k * k + k * l) as i64, (n * n) as i64)
    }

    #[test]
    fn values_nonnegative_bounded_and_enveloped() {
        // Exhaustive over every strip pair for n ≤ 30; n = 40 is sampled by
        // striding over λ (the full pair set there is ~9 million).
        let check = |lam: &Partition, n: usize| {
            let l = n - lam.part(1);
            for mu in horizontal_strip_subshapes(lam, None) {
                let v = eigenvalue(lam, &mu).unwrap();
                assert!(v >= Rational64::zero(), "negative at λ={lam} μ={mu}");
                assert!(v <= Rational64::one(), "above 1 at λ={lam} μ={mu}");
                assert_eq!(
                    ((n * n) as i64) % v.denom(),
                    0,
                    "denominator of {v} does not divide n² at λ={lam} μ={mu}"
                );
                let k = mu.size() - l;
                assert!(
                    v <= envelope(n, l, k),
                    "envelope violated at λ={lam} μ={mu}: {v}"
                );
            }
        };
        for n in 1..=30 {
            for lam in enumerate_partitions(n, None) {
                check(&lam, n);
            }
        }
        for lam in enumerate_partitions(40, None).into_iter().step_by(47) {
            check(&lam, 40);
        }
    }

    #[test]
    fn envelope_equality_at_hooks() {
        // The envelope is attained at λ = [n−l, 1^l], μ = [k, 1^l].
        for n in 2..=12usize {
            for l in 1..n {
                let mut lam_parts = vec![n - l];
                lam_parts.extend(std::iter::repeat_n(1, l));
                let lam = Partition::new(lam_parts);
                for k in 1..=n - l {
                    let mut mu_parts = vec![k];
                    mu_parts.extend(std::iter::repeat_n(1, l));
                    let mu = Partition::new(mu_parts);
                    assert_eq!(
                        eigenvalue(&lam, &mu).unwrap(),
                        envelope(n, l, k),
                        "n={n} l={l} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_in_mu_under_containment() {
        for n in 1..=12 {
            for lam in enumerate_partitions(n, None) {
                let strips = horizontal_strip_subshapes(&lam, None);
                for mu_small in &strips {
                    for mu in &strips {
                        if mu.contains(mu_small) {
                            assert!(
                                eigenvalue(&lam, mu).unwrap()
                                    <= eigenvalue(&lam, mu_small).unwrap(),
                                "λ={lam} μ̃={mu_small} μ={mu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn full_spectrum_n2() {
        let s = full_spectrum(2).unwrap();
        assert_eq!(s.n(), 2);
        assert_eq!(s.evaluation(), &p(&[1, 1]));
        // All five strip pairs are kept internally…
        assert_eq!(s.entries().len(), 5);
        // …but only (1, mult 1) and (0, mult 1) actually occur.
        let occupied: Vec<(Rational64, String)> = s
            .nonzero_entries()
            .map(|e| (e.value, e.multiplicity.to_string()))
            .collect();
        assert_eq!(
            occupied,
            vec![
                (Rational64::one(), "1".to_string()),
                (Rational64::zero(), "1".to_string()),
            ]
        );
    }

    #[test]
    fn full_spectrum_n3() {
        let s = full_spectrum(3).unwrap();
        assert_eq!(s.entries().len(), 10);
        assert_eq!(s.total_multiplicity(), BigUint::from(6u32));
        let values: Vec<Rational64> = s.nonzero_entries().map(|e| e.value).collect();
        for expected in [Rational64::one(), r(4, 9), Rational64::zero()] {
            assert!(values.contains(&expected), "missing {expected}");
        }
        // Entry-level detail: 1×1, (4/9)×2, (1/9)×1, 0×2.
        let detail: Vec<(Rational64, u64)> = s
            .nonzero_entries()
            .map(|e| (e.value, e.multiplicity.to_string().parse().unwrap()))
            .collect();
        assert_eq!(
            detail,
            vec![(r(1, 1), 1), (r(4, 9), 2), (r(1, 9), 1), (r(0, 1), 2)]
        );
    }

    #[test]
    fn exactly_one_trivial_eigenvalue() {
        for n in 1..=8 {
            let s = full_spectrum(n).unwrap();
            let trivial: Vec<_> = s
                .entries()
                .iter()
                .filter(|e| e.value == Rational64::one())
                .collect();
            assert_eq!(trivial.len(), 1, "n={n}");
            assert_eq!(trivial[0].lambda, p(&[n]));
            assert_eq!(trivial[0].mu, Partition::empty());
            assert_eq!(trivial[0].multiplicity, BigUint::one());
        }
    }

    #[test]
    fn multiplicities_sum_to_factorial() {
        for n in 1..=12 {
            assert_eq!(
                full_spectrum(n).unwrap().total_multiplicity(),
                factorial(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn multiplicities_group_by_lambda_as_squares() {
        for n in 1..=10 {
            let s = full_spectrum(n).unwrap();
            for lam in enumerate_partitions(n, None) {
                let group: BigUint = s
                    .entries()
                    .iter()
                    .filter(|e| e.lambda == lam)
                    .map(|e| e.multiplicity.clone())
                    .sum();
                let d = syt_count(&lam);
                assert_eq!(group, &d * &d, "λ={lam}");
            }
        }
    }

    #[test]
    fn dimension_sum_bound_per_first_row() {
        // Σ_{λ: n−λ₁=l} d_λ² ≤ C(n,l)·n!/(n−l)!, and pointwise
        // d_λ ≤ C(n,l)·d_{λ minus first row}.
        for n in 1..=12usize {
            for l in 0..n {
                let mut total = BigUint::zero();
                for lam in enumerate_partitions(n, None) {
                    if n - lam.part(1) != l {
                        continue;
                    }
                    let d = syt_count(&lam);
                    let rest = Partition::new(lam.parts()[1..].to_vec());
                    assert!(
                        d <= binomial(n, l) * syt_count(&rest),
                        "pointwise bound at λ={lam}"
                    );
                    total += &d * &d;
                }
                let cap = binomial(n, l) * (factorial(n) / factorial(n - l));
                assert!(total <= cap, "n={n} l={l}: {total} > {cap}");
            }
        }
    }

    #[test]
    fn desarrangement_sum_bound_per_strip_size() {
        // Σ over strips μ of λ with |μ| = l+k of d^μ ≤ C(l+k, l−1)·d_{λ₂…}
        // for l ≥ 1 (the range the mixing-time bound uses). For the single-row
        // case l = 0 the strips are bare rows, so the sum vanishes except at
        // the stationary pair μ = ∅.
        for n in 1..=10usize {
            for lam in enumerate_partitions(n, None) {
                let l = n - lam.part(1);
                let rest = Partition::new(lam.parts()[1..].to_vec());
                for k in 0..=n - l {
                    let lhs: BigUint = horizontal_strip_subshapes(&lam, Some(l + k))
                        .iter()
                        .map(desarrangement_count)
                        .sum();
                    if l == 0 {
                        let expect = if k == 0 {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        };
                        assert_eq!(lhs, expect, "n={n} k={k}");
                    } else {
                        let rhs = binomial(l + k, l - 1) * syt_count(&rest);
                        assert!(lhs <= rhs, "n={n} λ={lam} k={k}: {lhs} > {rhs}");
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_unit_deck_matches_full_spectrum() {
        for n in 1..=6 {
            let nu = Partition::new(vec![1; n]);
            assert_eq!(
                spectrum_with_evaluation(&nu).unwrap(),
                full_spectrum(n).unwrap()
            );
        }
    }

    #[test]
    fn evaluation_two_one_deck() {
        let s = spectrum_with_evaluation(&p(&[2, 1])).unwrap();
        let detail: Vec<(Rational64, u64)> = s
            .nonzero_entries()
            .map(|e| (e.value, e.multiplicity.to_string().parse().unwrap()))
            .collect();
        assert_eq!(detail, vec![(r(1, 1), 1), (r(4, 9), 1), (r(0, 1), 1)]);
        assert_eq!(s.total_multiplicity(), BigUint::from(3u32));
    }

    #[test]
    fn evaluation_respects_dominance_and_multinomial_totals() {
        for n in 1..=7 {
            for nu in enumerate_partitions(n, None) {
                let s = spectrum_with_evaluation(&nu).unwrap();
                assert_eq!(s.total_multiplicity(), multinomial(&nu), "ν={nu}");
                for e in s.entries() {
                    assert!(e.lambda.dominates(&nu).unwrap(), "ν={nu} λ={}", e.lambda);
                }
                // The trivial eigenvalue survives every evaluation.
                let trivial: Vec<_> = s
                    .entries()
                    .iter()
                    .filter(|e| e.value == Rational64::one())
                    .collect();
                assert_eq!(trivial.len(), 1);
                assert_eq!(trivial[0].multiplicity, BigUint::one());
            }
        }
    }

    #[test]
    fn evaluation_near_distinct_deck_keeps_hook_family() {
        // ν = [n−1, 1] has m = 2 types, so K_{[n−1,1],ν} = m−1 = 1 and the
        // [n−1,1]/[k,1] family appears with multiplicity exactly 1 each.
        let n = 6usize;
        let s = spectrum_with_evaluation(&p(&[5, 1])).unwrap();
        for k in 1..=5usize {
            let expect = Rational64::one() - r((n + k * k + k) as i64, (n * n) as i64);
            let hits: Vec<_> = s
                .nonzero_entries()
                .filter(|e| e.lambda == p(&[5, 1]) && e.mu == p(&[k, 1]))
                .collect();
            assert_eq!(hits.len(), 1, "k={k}");
            assert_eq!(hits[0].value, expect);
            assert_eq!(hits[0].multiplicity, BigUint::one());
        }
        assert_eq!(s.total_multiplicity(), BigUint::from(6u32));
    }

    #[test]
    fn degenerate_single_type_deck() {
        let s = spectrum_with_evaluation(&p(&[4])).unwrap();
        assert_eq!(s.total_multiplicity(), BigUint::one());
        let occupied: Vec<_> = s.nonzero_entries().collect();
        assert_eq!(occupied.len(), 1);
        assert_eq!(occupied[0].value, Rational64::one());
    }

    #[test]
    fn caps_and_degenerate_inputs() {
        assert!(matches!(full_spectrum(0), Err(Error::InvalidArgument(..))));
        assert!(matches!(
            full_spectrum(SPECTRUM_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            spectrum_with_evaluation(&Partition::empty()),
            Err(Error::InvalidArgument(..))
        ));
    }

    #[test]
    fn trace_counts_states_at_time_zero() {
        for n in 1..=6 {
            let s = full_spectrum(n).unwrap();
            assert_eq!(
                spectral_trace_exact(&s, 0),
                BigRational::from(BigInt::from(factorial(n)))
            );
        }
        let s = spectrum_with_evaluation(&p(&[2, 2, 1])).unwrap();
        assert_eq!(
            spectral_trace_exact(&s, 0),
            BigRational::from(BigInt::from(30u32))
        );
    }

    #[test]
    fn trace_small_cases_exact() {
        let s2 = full_spectrum(2).unwrap();
        assert_eq!(spectral_trace_exact(&s2, 1), BigRational::one());
        // n = 3: trace(t) = 1 + 2·(4/9)^t + (1/9)^t for t ≥ 1.
        let s3 = full_spectrum(3).unwrap();
        for t in 1..=10u32 {
            let expect = BigRational::one()
                + BigRational::new(
                    BigInt::from(2) * BigInt::from(4).pow(t),
                    BigInt::from(9).pow(t),
                )
                + BigRational::new(BigInt::one(), BigInt::from(9).pow(t));
            assert_eq!(spectral_trace_exact(&s3, t), expect, "t={t}");
        }
        // Float projection agrees with direct evaluation.
        let f = spectral_trace(&s3, 5);
        let direct = 1.0 + 2.0 * (4.0f64 / 9.0).powi(5) + (1.0f64 / 9.0).powi(5);
        assert!((f - direct).abs() < 1e-12);
    }

    #[test]
    fn trace_float_survives_huge_exponents() {
        let s = full_spectrum(4).unwrap();
        let v = spectral_trace(&s, 2000);
        // All nontrivial eigenvalues decay; the trace tends to 1.
        assert!((v - 1.0).abs() < 1e-9, "trace → {v}");
    }

    #[test]
    fn entries_sorted_for_stable_output() {
        for n in 1..=7 {
            let s = full_spectrum(n).unwrap();
            for w in s.entries().windows(2) {
                let key = |e: &SpectrumEntry| (e.value, e.lambda.clone(), e.mu.clone());
                assert!(key(&w[0]) >= key(&w[1]), "n={n}");
            }
        }
    }

    #[test]
    fn json_and_csv_golden() {
        let s = full_spectrum(2).unwrap();
        assert_eq!(
            s.to_json_string(),
            r#"{"n":2,"evaluation":[1,1],"entries":[{"lambda":[2],"mu":[],"num":1,"den":1,"multiplicity":"1"},{"lambda":[1,1],"mu":[1,1],"num":0,"den":1,"multiplicity":"1"}]}"#
        );
        assert_eq!(
            s.to_csv_string(),
            "lambda,mu,num,den,multiplicity\n\"[2]\",\"[]\",1,1,1\n\"[1,1]\",\"[1,1]\",0,1,1\n"
        );
    }
}
