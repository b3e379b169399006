//! Implementations of the five subcommands.

use crate::output::{self, csv_float, float_value, Meta};
use crate::{BoundsArgs, CliError, ProfileArgs, SimulateArgs, SpectrumArgs, Suite, VerifyArgs};
use num_traits::ToPrimitive;
use r2r_core::bounds::{analytic_upper_bound, cutoff_time, l2_bound_exact, largesteig_term};
use r2r_core::oracle::{
    build_r2r_matrix, build_r2r_multiset, chi2_distance, evolve_distribution, mc_sample,
    numeric_eigenvalues, tv_distance, Distribution, TransitionMatrix,
};
use r2r_core::partitions::{
    enumerate_partitions, factorial, horizontal_strip_subshapes, syt_count, Partition,
};
use r2r_core::spectrum::{full_spectrum, spectrum_with_evaluation, Spectrum};
use r2r_core::tableaux::{
    desarrangement_count, desarrangement_to_standard, enumerate_desarrangement_tableaux,
    standard_to_desarrangement, StandardTableau,
};
use serde_json::{json, Value};

/// Turns `--n`/`--evaluation` into the deck's evaluation partition. The
/// multiplicities may be given in any order; both flags together must agree.
fn resolve_deck(n: Option<usize>, evaluation: Option<&[usize]>) -> Result<Partition, CliError> {
    match (n, evaluation) {
        (None, None) => Err(CliError::Usage(
            "pass --n, --evaluation, or both".to_string(),
        )),
        (Some(0), _) => Err(CliError::Usage("--n must be at least 1".to_string())),
        (Some(n), None) => Ok(Partition::new(vec![1usize; n])),
        (maybe_n, Some(parts)) => {
            let mut sorted = parts.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let nu = Partition::try_new(sorted)?;
            if nu.is_empty() {
                return Err(CliError::Usage(
                    "--evaluation needs at least one positive part".to_string(),
                ));
            }
            if let Some(n) = maybe_n {
                if nu.size() != n {
                    return Err(CliError::Usage(format!(
                        "--evaluation sums to {} but --n is {n}",
                        nu.size()
                    )));
                }
            }
            Ok(nu)
        }
    }
}

fn is_distinct(nu: &Partition) -> bool {
    nu.parts().iter().all(|&p| p == 1)
}

fn deck_spectrum(nu: &Partition) -> Result<Spectrum, CliError> {
    if is_distinct(nu) {
        Ok(full_spectrum(nu.size())?)
    } else {
        Ok(spectrum_with_evaluation(nu)?)
    }
}

fn deck_matrix(nu: &Partition) -> Result<TransitionMatrix, CliError> {
    if is_distinct(nu) {
        Ok(build_r2r_matrix(nu.size())?)
    } else {
        Ok(build_r2r_multiset(nu)?)
    }
}

pub fn spectrum(args: &SpectrumArgs) -> Result<(), CliError> {
    let nu = resolve_deck(args.n, args.evaluation.as_deref())?;
    let s = deck_spectrum(&nu)?;

    let mut meta = Meta::new("spectrum");
    meta.push("n", json!(s.n()));
    meta.push("evaluation", json!(s.evaluation().parts()));
    meta.push("format", json!(args.out.format.name()));

    let entries: Vec<Value> = s
        .nonzero_entries()
        .map(|e| {
            json!({
                "lambda": e.lambda.parts(),
                "mu": e.mu.parts(),
                "value": format!("{}/{}", e.value.numer(), e.value.denom()),
                "multiplicity": e.multiplicity.to_string(),
            })
        })
        .collect();
    let results = json!({
        "states": s.total_multiplicity().to_string(),
        "entries": entries,
    });

    let text = output::render(&args.out, &meta, results, &s.to_csv_string());
    output::emit(&args.out, &text)
}

pub fn bounds(args: &BoundsArgs) -> Result<(), CliError> {
    if !args.c.is_finite() {
        return Err(CliError::Usage("--c must be a finite number".to_string()));
    }
    let n = args.n;
    let t_star = cutoff_time(n, args.c)?;
    let t_max = args.t_max.unwrap_or(t_star.ceil() as u32);
    if t_max > 1_000_000 {
        return Err(CliError::Usage(
            "--t-max must be at most 1000000".to_string(),
        ));
    }
    // The exact ℓ² column needs the full spectrum, which is only worth
    // tabulating at oracle-checkable sizes.
    let spectrum = if n <= 6 {
        Some(full_spectrum(n)?)
    } else {
        None
    };

    let mut meta = Meta::new("bounds");
    meta.push("n", json!(n));
    meta.push("c", float_value(args.c));
    meta.push("t_max", json!(t_max));
    meta.push("t_star", float_value(t_star));
    meta.push("format", json!(args.out.format.name()));

    let mut rows = Vec::with_capacity(t_max as usize + 1);
    let mut csv_body = String::from("t,l2_exact,analytic,largesteig_term\n");
    for t in 0..=t_max {
        let tf = f64::from(t);
        let l2 = spectrum.as_ref().map(|s| l2_bound_exact(s, t));
        let analytic = analytic_upper_bound(n, tf)?;
        let largest = largesteig_term(n, tf)?;
        rows.push(json!({
            "t": t,
            "l2_exact": l2.map_or(Value::Null, float_value),
            "analytic": float_value(analytic),
            "largesteig_term": float_value(largest),
        }));
        csv_body.push_str(&format!(
            "{t},{},{},{}\n",
            l2.map(csv_float).unwrap_or_default(),
            csv_float(analytic),
            csv_float(largest)
        ));
    }
    let results = json!({ "t_star": float_value(t_star), "rows": rows });

    let text = output::render(&args.out, &meta, results, &csv_body);
    output::emit(&args.out, &text)
}

pub fn profile(args: &ProfileArgs) -> Result<(), CliError> {
    if args.t_max > 1000 {
        return Err(CliError::Usage(
            "--t-max must be at most 1000 for exact profiles".to_string(),
        ));
    }
    let nu = resolve_deck(args.n, args.evaluation.as_deref())?;
    let matrix = deck_matrix(&nu)?;

    let mut meta = Meta::new("profile");
    meta.push("n", json!(nu.size()));
    meta.push("evaluation", json!(nu.parts()));
    meta.push("t_max", json!(args.t_max));
    meta.push("states", json!(matrix.size()));
    meta.push("format", json!(args.out.format.name()));

    // The trajectory starts from the sorted deck (arrangement rank 0).
    let mut d = Distribution::delta(matrix.size(), 0);
    let mut rows = Vec::with_capacity(args.t_max as usize + 1);
    let mut csv_body = String::from("t,tv,chi2\n");
    for t in 0..=args.t_max {
        let tv = tv_distance(&d);
        let chi2 = chi2_distance(&d);
        rows.push(json!({
            "t": t,
            "tv": float_value(tv),
            "chi2": float_value(chi2),
        }));
        csv_body.push_str(&format!("{t},{},{}\n", csv_float(tv), csv_float(chi2)));
        d = evolve_distribution(&matrix, &d, 1)?;
    }
    let results = json!({ "rows": rows });

    let text = output::render(&args.out, &meta, results, &csv_body);
    output::emit(&args.out, &text)
}

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let sample = mc_sample(args.n, args.t, args.trials, args.seed)?;

    let mut meta = Meta::new("simulate");
    meta.push("n", json!(args.n));
    meta.push("t", json!(args.t));
    meta.push("trials", json!(args.trials));
    meta.push("seed", json!(args.seed));
    meta.push("format", json!(args.out.format.name()));

    let mut comparison = Value::Null;
    let mut empirical_probs: Option<Vec<f64>> = None;
    let mut exact_probs: Option<Vec<f64>> = None;
    if let Some(empirical) = sample.empirical_distribution() {
        // Frequency counts exist, so the deck is small enough for the exact
        // oracle answer as well.
        let matrix = build_r2r_matrix(args.n)?;
        let exact = evolve_distribution(&matrix, &Distribution::delta(matrix.size(), 0), args.t)?;
        let e = empirical.to_f64_vec();
        let x = exact.to_f64_vec();
        let tv_empirical_exact = 0.5 * e.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum::<f64>();
        comparison = json!({
            "tv_empirical_uniform": float_value(tv_distance(&empirical)),
            "tv_exact_uniform": float_value(tv_distance(&exact)),
            "tv_empirical_exact": float_value(tv_empirical_exact),
        });
        empirical_probs = Some(e);
        exact_probs = Some(x);
    }

    let results = json!({
        "mean_fixed_points": float_value(sample.mean_fixed_points),
        "identity_frequency": float_value(sample.identity_frequency),
        "empirical": empirical_probs.as_ref().map_or(Value::Null, |v| json!(v)),
        "exact": exact_probs.as_ref().map_or(Value::Null, |v| json!(v)),
        "comparison": comparison,
    });

    let mut csv_body = format!(
        "# mean_fixed_points: {}\n# identity_frequency: {}\n",
        csv_float(sample.mean_fixed_points),
        csv_float(sample.identity_frequency)
    );
    if let (Some(e), Some(x)) = (&empirical_probs, &exact_probs) {
        csv_body.push_str("rank,empirical_probability,exact_probability\n");
        for (i, (a, b)) in e.iter().zip(x).enumerate() {
            csv_body.push_str(&format!("{i},{},{}\n", csv_float(*a), csv_float(*b)));
        }
    } else {
        csv_body.push_str("rank,empirical_probability,exact_probability\n");
    }

    let text = output::render(&args.out, &meta, results, &csv_body);
    output::emit(&args.out, &text)
}

/// One row of the verification table.
struct Check {
    suite: &'static str,
    label: String,
    error: Option<String>,
}

impl Check {
    fn new(suite: &'static str, label: impl Into<String>, error: Option<String>) -> Self {
        Check {
            suite,
            label: label.into(),
            error,
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    if args.n_max == Some(0) {
        return Err(CliError::Usage("--n-max must be at least 1".to_string()));
    }
    let want = |s: Suite| args.suite == Suite::All || args.suite == s;

    let mut checks = Vec::new();
    if want(Suite::Spectra) {
        spectra_checks(args.n_max, &mut checks);
    }
    if want(Suite::Bijection) {
        bijection_checks(args.n_max, &mut checks);
    }
    if want(Suite::Identities) {
        identity_checks(args.n_max, &mut checks);
    }

    println!("{:<11} {:<52} result", "suite", "check");
    let mut failed = 0usize;
    for check in &checks {
        let result = match &check.error {
            None => "pass".to_string(),
            Some(e) => {
                failed += 1;
                format!("fail — {e}")
            }
        };
        println!("{:<11} {:<52} {result}", check.suite, check.label);
    }
    println!();
    println!(
        "{} checks: {} passed, {failed} failed",
        checks.len(),
        checks.len() - failed
    );
    if failed > 0 {
        Err(CliError::VerificationFailed(failed))
    } else {
        Ok(())
    }
}

/// The spectrum as a descending multiset of floats, one copy per unit of
/// multiplicity, lined up against the numeric solver's output.
fn expand(spectrum: &Spectrum) -> Vec<f64> {
    let mut out = Vec::new();
    for e in spectrum.entries() {
        let m = e.multiplicity.to_usize().expect("multiplicity fits usize");
        let v = (*e.value.numer() as f64) / (*e.value.denom() as f64);
        out.extend(std::iter::repeat_n(v, m));
    }
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    out
}

fn spectrum_check(matrix: &TransitionMatrix, s: &Spectrum) -> Option<String> {
    let numeric = match numeric_eigenvalues(matrix) {
        Ok(v) => v,
        Err(e) => return Some(e.to_string()),
    };
    let formula = expand(s);
    if numeric.len() != formula.len() {
        return Some(format!(
            "{} numeric eigenvalues vs {} from the formula",
            numeric.len(),
            formula.len()
        ));
    }
    for (i, (a, b)) in numeric.iter().zip(&formula).enumerate() {
        if (a - b).abs() > 1e-8 {
            return Some(format!("eigenvalue {i}: numeric {a} vs formula {b}"));
        }
    }
    None
}

fn spectra_checks(n_max: Option<usize>, out: &mut Vec<Check>) {
    let cap = n_max.unwrap_or(5).clamp(2, 6);
    for n in 2..=cap {
        let error = match (build_r2r_matrix(n), full_spectrum(n)) {
            (Ok(m), Ok(s)) => spectrum_check(&m, &s),
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        out.push(Check::new(
            "spectra",
            format!("n={n} (distinct deck): numeric vs formula"),
            error,
        ));
    }
    for parts in [
        vec![2usize, 1],
        vec![2, 2],
        vec![2, 1, 1],
        vec![3, 1],
        vec![2, 2, 1],
    ] {
        let nu = Partition::new(parts);
        if nu.size() > cap {
            continue;
        }
        let error = match (build_r2r_multiset(&nu), spectrum_with_evaluation(&nu)) {
            (Ok(m), Ok(s)) => spectrum_check(&m, &s),
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        out.push(Check::new(
            "spectra",
            format!("ν={nu} (multiset deck): numeric vs formula"),
            error,
        ));
    }
}

fn bijection_round_trip(n: usize) -> Option<String> {
    for lam in enumerate_partitions(n, None) {
        for mu in horizontal_strip_subshapes(&lam, None) {
            let tableaux = match enumerate_desarrangement_tableaux(&mu) {
                Ok(t) => t,
                Err(e) => return Some(e.to_string()),
            };
            for q in tableaux {
                let p = match desarrangement_to_standard(&q, &lam) {
                    Ok(p) => p,
                    Err(e) => return Some(format!("forward failed at λ={lam} μ={mu}: {e}")),
                };
                match standard_to_desarrangement(&p) {
                    Ok((mu_back, q_back)) if mu_back == mu && q_back == q => {}
                    Ok(_) => return Some(format!("round trip drifted at λ={lam} μ={mu}")),
                    Err(e) => return Some(format!("inverse failed at λ={lam} μ={mu}: {e}")),
                }
            }
        }
    }
    None
}

fn bijection_checks(n_max: Option<usize>, out: &mut Vec<Check>) {
    let cap = n_max.unwrap_or(7).clamp(1, 10);
    for n in 1..=cap {
        out.push(Check::new(
            "bijection",
            format!("n={n}: every (λ, μ, q) round trip"),
            bijection_round_trip(n),
        ));
    }
    let worked = (|| -> Result<(), String> {
        let q = StandardTableau::try_new(vec![vec![1, 3, 4], vec![2, 6, 7], vec![5]])
            .map_err(|e| e.to_string())?;
        let p = desarrangement_to_standard(&q, &Partition::new([4, 3, 2]))
            .map_err(|e| e.to_string())?;
        if p.rows() != [vec![1, 2, 3, 6], vec![4, 5, 9], vec![7, 8]] {
            return Err(format!("forward produced {:?}", p.rows()));
        }
        let (mu, q_back) = standard_to_desarrangement(&p).map_err(|e| e.to_string())?;
        if mu != Partition::new([3, 3, 1]) || q_back != q {
            return Err("inverse did not recover the input".to_string());
        }
        Ok(())
    })()
    .err();
    out.push(Check::new(
        "bijection",
        "worked pair λ=[4,3,2], μ=[3,3,1]",
        worked,
    ));
}

fn identity_checks(n_max: Option<usize>, out: &mut Vec<Check>) {
    let cap = n_max.unwrap_or(8).clamp(1, 12);

    let mut error = None;
    for n in 1..=cap {
        match full_spectrum(n) {
            Ok(s) if s.total_multiplicity() == factorial(n) => {}
            Ok(s) => {
                error = Some(format!("n={n}: {} ≠ n!", s.total_multiplicity()));
                break;
            }
            Err(e) => {
                error = Some(e.to_string());
                break;
            }
        }
    }
    out.push(Check::new(
        "identities",
        format!("Σ multiplicities = n! for n ≤ {cap}"),
        error,
    ));

    let mut error = None;
    'strips: for n in 1..=cap {
        for lam in enumerate_partitions(n, None) {
            let sum: num_bigint::BigUint = horizontal_strip_subshapes(&lam, None)
                .iter()
                .map(desarrangement_count)
                .sum();
            if sum != syt_count(&lam) {
                error = Some(format!("λ={lam}: {sum} ≠ d_λ"));
                break 'strips;
            }
        }
    }
    out.push(Check::new(
        "identities",
        format!("Σ_μ d^μ = d_λ for λ ⊢ n ≤ {cap}"),
        error,
    ));

    let mut error = None;
    for n in 1..=cap {
        let sum: num_bigint::BigUint = enumerate_partitions(n, None)
            .iter()
            .map(|lam| {
                let d = syt_count(lam);
                &d * &d
            })
            .sum();
        if sum != factorial(n) {
            error = Some(format!("n={n}: {sum} ≠ n!"));
            break;
        }
    }
    out.push(Check::new(
        "identities",
        format!("Σ_λ d_λ² = n! for n ≤ {cap}"),
        error,
    ));

    let mut derangements = vec![
        num_bigint::BigUint::from(1u32),
        num_bigint::BigUint::from(0u32),
    ];
    for k in 2..=cap.max(2) {
        let next = (derangements[k - 1].clone() + derangements[k - 2].clone()) * (k as u32 - 1);
        derangements.push(next);
    }
    let mut error = None;
    for (n, expected) in derangements.iter().enumerate().take(cap + 1).skip(1) {
        let sum: num_bigint::BigUint = enumerate_partitions(n, None)
            .iter()
            .map(|mu| syt_count(mu) * desarrangement_count(mu))
            .sum();
        if sum != *expected {
            error = Some(format!("n={n}: {sum} ≠ D_n"));
            break;
        }
    }
    out.push(Check::new(
        "identities",
        format!("Σ_μ d_μ·d^μ = D_n for n ≤ {cap}"),
        error,
    ));
}
