//! Seeded Monte Carlo simulation of the shuffle — an independent sanity
//! channel that exercises none of the exact machinery. Each trial runs on
//! its own counter-derived RNG stream, so results are reproducible for a
//! given (seed, trial count) and invariant under any parallel scheduling
//! that merges by trial index.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ArrangementIndex;
use crate::oracle::Distribution;
use crate::{Error, Result};

/// Largest simulated deck. Beyond 7 cards the n! arrangement table no
/// longer fits, so only summary statistics are reported.
pub const MC_DECK_CAP: usize = 12;

/// Largest deck for which full empirical frequencies are tabulated.
const MC_FREQUENCY_CAP: usize = 7;

/// The outcome of a batch of simulated shuffles started from the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct McSample {
    /// Deck size.
    pub n: usize,
    /// Moves per trial.
    pub t: u32,
    /// Number of trials.
    pub trials: u64,
    /// RNG seed; trial i uses stream i of this seed.
    pub seed: u64,
    /// Hit counts by arrangement rank (present for n ≤ 7).
    pub counts: Option<Vec<u64>>,
    /// Average number of cards found in their starting position. Uniform
    /// decks average exactly 1, independent of n.
    pub mean_fixed_points: f64,
    /// Fraction of trials ending at the identity arrangement.
    pub identity_frequency: f64,
}

impl McSample {
    /// The empirical distribution over arrangement ranks (n ≤ 7 only).
    pub fn empirical_distribution(&self) -> Option<Distribution> {
        let counts = self.counts.as_ref()?;
        let t = self.trials as f64;
        Some(Distribution::Float(
            counts.iter().map(|&c| c as f64 / t).collect(),
        ))
    }
}

/// Simulates `trials` runs of t random-to-random moves from the identity,
/// using ChaCha streams keyed by (seed, trial index): trial i draws from
/// stream i, each move drawing first the position p of the card to remove,
/// then the slot q where it lands. Identical inputs give bit-identical
/// output.
pub fn mc_sample(n: usize, t: u32, trials: u64, seed: u64) -> Result<McSample> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "deck size must be at least 1".into(),
        ));
    }
    if n > MC_DECK_CAP {
        return Err(Error::CapExceeded {
            what: "mc_sample deck",
            value: n,
            cap: MC_DECK_CAP,
        });
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "mc_sample needs at least one trial".into(),
        ));
    }

    let index = if n <= MC_FREQUENCY_CAP {
        Some(ArrangementIndex::distinct(n)?)
    } else {
        None
    };
    let mut counts = index.as_ref().map(|idx| vec![0u64; idx.len()]);
    let mut fixed_points_total = 0u64;
    let mut identity_total = 0u64;

    let mut deck: Vec<u8> = Vec::with_capacity(n);
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        deck.clear();
        deck.extend(0..n as u8);
        for _ in 0..t {
            let p = rng.gen_range(0..n);
            let q = rng.gen_range(0..n);
            let card = deck.remove(p);
            deck.insert(q, card);
        }
        let fixed = deck
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c as usize == i)
            .count();
        fixed_points_total += fixed as u64;
        if fixed == n {
            identity_total += 1;
        }
        if let (Some(idx), Some(counts)) = (&index, counts.as_mut()) {
            counts[idx.rank(&deck).expect("simulated decks are valid")] += 1;
        }
    }

    Ok(McSample {
        n,
        t,
        trials,
        seed,
        counts,
        mean_fixed_points: fixed_points_total as f64 / trials as f64,
        identity_frequency: identity_total as f64 / trials as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_r2r_matrix, evolve_distribution, tv_distance};

    #[test]
    fn zero_steps_stay_at_identity() {
        let s = mc_sample(4, 0, 500, 7).unwrap();
        assert_eq!(s.identity_frequency, 1.0);
        assert_eq!(s.mean_fixed_points, 4.0);
        let counts = s.counts.unwrap();
        assert_eq!(counts[0], 500);
        assert!(counts[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn same_seed_is_bit_identical() {
        let a = mc_sample(5, 10, 2000, 42).unwrap();
        let b = mc_sample(5, 10, 2000, 42).unwrap();
        assert_eq!(a, b);
        let c = mc_sample(5, 10, 2000, 43).unwrap();
        assert_ne!(a.counts, c.counts);
    }

    #[test]
    fn empirical_tv_tracks_exact_tv() {
        let (n, t, trials) = (5usize, 20u32, 1_000_000u64);
        let s = mc_sample(n, t, trials, 20260814).unwrap();
        let empirical = s.empirical_distribution().unwrap();

        let m = build_r2r_matrix(n).unwrap();
        let exact = evolve_distribution(&m, &Distribution::delta(m.size(), 0), t).unwrap();
        let diff = (tv_distance(&empirical) - tv_distance(&exact)).abs();
        assert!(diff <= 0.01, "empirical vs exact TV differ by {diff}");
    }

    #[test]
    fn large_decks_report_summaries_only() {
        let s = mc_sample(9, 100, 20_000, 3).unwrap();
        assert!(s.counts.is_none());
        // Well past the relaxation time the fixed-point count averages 1.
        assert!(
            (s.mean_fixed_points - 1.0).abs() < 0.05,
            "{}",
            s.mean_fixed_points
        );
        assert!(s.identity_frequency < 1e-3);
    }

    #[test]
    fn input_validation() {
        assert!(matches!(
            mc_sample(13, 1, 1, 0),
            Err(Error::CapExceeded { cap: 12, .. })
        ));
        assert!(matches!(
            mc_sample(0, 1, 1, 0),
            Err(Error::InvalidArgument(..))
        ));
        assert!(matches!(
            mc_sample(4, 1, 0, 0),
            Err(Error::InvalidArgument(..))
        ));
    }
}
