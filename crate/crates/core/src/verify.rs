//! The built-in verification battery.
//!
//! Ten independent checks tie the closed forms to their brute-force oracles
//! and to the reference values the construction is expected to reproduce.
//! Each criterion reports pass/fail plus a one-line detail; the CLI's
//! `verify-paper` command prints the ledger, and the acceptance test suite
//! asserts every criterion individually. Brute-force criteria shrink their
//! ranges to the configured budget instead of refusing.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::budget::Budget;
use crate::certificates::{check_binom_growth, check_gap_positive, check_tail_dominance, sweep, LemmaTag};
use crate::code::{
    brute_tables, cwe_closed, parameters, weight_distribution_closed, WeightDistribution,
};
use crate::combinatorics::{binomial, krawtchouk, lloyd};
use crate::error::Result;
use crate::function::{set_a_size, Family, WeightClassFunction};
use crate::gf3::{enumerate_by_weight, pow3, weight_table, F3Vector};
use crate::minimality::{ab_condition_closed, ab_report, is_minimal_brute, is_minimal_spectral};
use crate::walsh::{
    character_sum_by_weight, complement_walsh_identity, walsh_re2_class, walsh_re2_closed,
    walsh_spectrum_brute,
};

/// Outcome of one battery criterion.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    fn from_problems(
        index: usize,
        name: &'static str,
        checked: String,
        problems: Result<Vec<String>>,
    ) -> CriterionOutcome {
        match problems {
            Ok(problems) if problems.is_empty() => CriterionOutcome {
                index,
                name,
                passed: true,
                detail: checked,
            },
            Ok(problems) => CriterionOutcome {
                index,
                name,
                passed: false,
                detail: problems.join("; "),
            },
            Err(err) => CriterionOutcome {
                index,
                name,
                passed: false,
                detail: format!("error: {err}"),
            },
        }
    }
}

/// Every named family instance at dimension m: g, gbar and every f_S, for
/// each k in the guaranteed range.
fn family_instances(m: u32) -> Vec<WeightClassFunction> {
    let mut out = Vec::new();
    for k in 2..=(m - 1) / 2 {
        out.extend(family_instances_at(m, k));
    }
    out
}

fn family_instances_at(m: u32, k: u32) -> Vec<WeightClassFunction> {
    let mut out = vec![
        WeightClassFunction::family(Family::G, m, k, None).expect("in range"),
        WeightClassFunction::family(Family::Gbar, m, k, None).expect("in range"),
    ];
    for s in nonempty_subsets(k) {
        out.push(WeightClassFunction::family(Family::F, m, k, Some(s)).expect("in range"));
    }
    out
}

fn nonempty_subsets(k: u32) -> Vec<BTreeSet<u32>> {
    (1u32..1 << k)
        .map(|mask| (1..=k).filter(|j| mask >> (j - 1) & 1 == 1).collect())
        .collect()
}

fn reference_distribution(pairs: &[(u64, u64)]) -> WeightDistribution {
    let mut wd = WeightDistribution::default();
    for &(w, a) in pairs {
        wd.add(BigInt::from(w), BigInt::from(a));
    }
    wd
}

fn diff_distributions(computed: &WeightDistribution, expected: &WeightDistribution) -> Vec<String> {
    let weights: BTreeSet<&BigInt> = computed
        .entries()
        .keys()
        .chain(expected.entries().keys())
        .collect();
    weights
        .into_iter()
        .filter_map(|w| {
            let got = computed.multiplicity(w);
            let want = expected.multiplicity(w);
            (got != want).then(|| format!("weight {w}: computed {got}, reference {want}"))
        })
        .collect()
}

/// Criterion 1: the closed-form path reproduces the reference
/// [19682, 10, 13010] enumerator exactly, flags the AB violation, and stays
/// under one second.
pub fn criterion_golden_example() -> CriterionOutcome {
    const REFERENCE: &[(u64, u64)] = &[
        (0, 1),
        (13010, 36),
        (13052, 288),
        (13085, 1344),
        (13094, 1024),
        (13109, 4032),
        (13115, 4608),
        (13122, 19682),
        (13124, 8064),
        (13130, 10752),
        (13133, 9216),
        (19520, 2),
    ];
    let run = || -> Result<Vec<String>> {
        let start = Instant::now();
        let f = WeightClassFunction::family(Family::Gbar, 9, 2, None)?;
        let spec = parameters(&f)?;
        let wd = weight_distribution_closed(&f)?;
        let ab = ab_report(&wd)?;
        let elapsed = start.elapsed();

        let mut problems = Vec::new();
        if spec.n() != &BigInt::from(19682) || spec.dim() != 10 || spec.d() != &BigInt::from(13010)
        {
            problems.push(format!(
                "parameters [{}, {}, {}] differ from [19682, 10, 13010]",
                spec.n(),
                spec.dim(),
                spec.d()
            ));
        }
        if !ab.violates_ab || ab.w_min != BigInt::from(13010) || ab.w_max != BigInt::from(19520) {
            problems.push(format!(
                "AB verdict: w_min={}, w_max={}, violates={}",
                ab.w_min, ab.w_max, ab.violates_ab
            ));
        }
        let expected = reference_distribution(REFERENCE);
        let diffs = diff_distributions(&wd, &expected);
        if !diffs.is_empty() {
            problems.push(format!(
                "enumerator differs from the reference table at {} term(s): {}",
                diffs.len(),
                diffs.join(", ")
            ));
        }
        if elapsed > Duration::from_secs(1) {
            problems.push(format!("closed-form path took {elapsed:?} (> 1 s)"));
        }
        Ok(problems)
    };
    CriterionOutcome::from_problems(
        1,
        "golden [19682,10,13010] enumerator, exact",
        "parameters, 12-term enumerator and AB verdict reproduced in < 1 s".into(),
        run(),
    )
}

/// Criterion 2: closed-form weight distributions and complete weight
/// enumerators equal their brute-force twins for every family instance with
/// 5 ≤ m ≤ 7.
pub fn criterion_oracle_equivalence(budget: &Budget) -> CriterionOutcome {
    let m_hi = 7.min(budget.max_enum_m);
    let mut checked = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in 5..=m_hi {
            for f in family_instances(m) {
                let (wd_brute, cwe_brute) = brute_tables(&f.to_table(), budget)?;
                if weight_distribution_closed(&f)? != wd_brute {
                    problems.push(format!("{}: weight distribution mismatch", f.label()));
                }
                if cwe_closed(&f)? != cwe_brute {
                    problems.push(format!("{}: CWE mismatch", f.label()));
                }
                checked += 1;
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        2,
        "closed weight tables equal brute-force oracles",
        format!("{checked} functions over m ∈ 5..={m_hi}, exact table equality"),
        outcome,
    )
}

/// Criterion 3: closed-form doubled real Walsh values match the brute
/// transform at every w ∈ 𝔽₃^m for every family instance with 5 ≤ m ≤ 7.
pub fn criterion_walsh_equivalence(budget: &Budget) -> CriterionOutcome {
    let m_hi = 7.min(budget.max_spectrum_m);
    let mut points = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in 5..=m_hi {
            let weights = weight_table(m);
            for f in family_instances(m) {
                let k = f.k().expect("family instance");
                let spectrum = walsh_spectrum_brute(&f.to_table(), budget)?;
                let closed_by_class: Vec<BigInt> = (0..=m)
                    .map(|i| walsh_re2_closed(f.family_tag(), m, k, f.sign_set(), i))
                    .collect::<Result<_>>()?;
                for i in 0..=m {
                    if closed_by_class[i as usize] != walsh_re2_class(&f, i) {
                        problems.push(format!(
                            "{}: class engine disagrees with branch form at class {i}",
                            f.label()
                        ));
                    }
                }
                for (w_idx, value) in spectrum.iter().enumerate() {
                    points += 1;
                    let class = usize::from(weights[w_idx]);
                    if value.re2() != closed_by_class[class] {
                        problems.push(format!(
                            "{}: re2 mismatch at w index {w_idx}",
                            f.label()
                        ));
                        break;
                    }
                }
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        3,
        "closed Walsh real parts equal brute transform",
        format!("{points} spectrum points over m ∈ 5..={m_hi}, exact"),
        outcome,
    )
}

/// Criterion 4: brute-force and spectral minimality agree (and say minimal)
/// for every family instance with m ∈ {5, 6}, k = 2; the spectral check
/// alone confirms minimality for m ∈ {7, 8, 9} over the whole k range.
pub fn criterion_minimality_cross_method(budget: &Budget) -> CriterionOutcome {
    let mut cross = 0usize;
    let mut spectral_only = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in [5u32, 6] {
            if m > budget.max_pair_m {
                continue;
            }
            for f in family_instances_at(m, 2) {
                let brute = is_minimal_brute(&f, budget)?;
                let spectral = is_minimal_spectral(&f)?;
                if brute.minimal != spectral.minimal {
                    problems.push(format!(
                        "{}: brute says {}, spectral says {}",
                        f.label(),
                        brute.minimal,
                        spectral.minimal
                    ));
                }
                if !brute.minimal {
                    problems.push(format!("{}: expected minimal", f.label()));
                }
                cross += 1;
            }
        }
        for m in [7u32, 8, 9] {
            for f in family_instances(m) {
                let spectral = is_minimal_spectral(&f)?;
                if !spectral.minimal || spectral.vacuous {
                    problems.push(format!("{}: spectral verdict not minimal", f.label()));
                }
                spectral_only += 1;
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        4,
        "minimality: brute and spectral methods agree",
        format!("{cross} instances cross-checked (m ∈ {{5,6}}, k = 2), {spectral_only} spectral-only (m ∈ {{7,8,9}})"),
        outcome,
    )
}

/// Criterion 5: the four Krawtchouk/Lloyd identities, items (1)–(3) swept
/// exactly over 1 ≤ x ≤ m ≤ 12 and h ∈ {2,3,4}, item (4) as the brute
/// character-sum identity for m ≤ 6 at h = 3.
pub fn criterion_krawtchouk_identities(_budget: &Budget) -> CriterionOutcome {
    let mut checks = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for h in [2u32, 3, 4] {
            for m in 2..=12u32 {
                for x in 1..=m {
                    for k in 1..m {
                        checks += 1;
                        if lloyd(k, x, m, h) != krawtchouk(k, x - 1, m - 1, h) {
                            problems.push(format!("partial-sum identity fails at h={h} m={m} x={x} k={k}"));
                        }
                    }
                }
                for t in 0..=m {
                    checks += 1;
                    if krawtchouk(t, 0, m, h)
                        != BigInt::from(h - 1).pow(t) * binomial(u64::from(m), i64::from(t))
                    {
                        problems.push(format!("value-at-zero identity fails at h={h} m={m} t={t}"));
                    }
                }
                for k in 1..m {
                    let bound =
                        BigInt::from(h - 1).pow(k) * binomial(u64::from(m - 1), i64::from(k));
                    for x in 1..=m {
                        checks += 1;
                        let psi = lloyd(k, x, m, h);
                        let abs = if psi < BigInt::zero() { -psi } else { psi };
                        if abs > bound {
                            problems.push(format!("bound fails at h={h} m={m} x={x} k={k}"));
                        }
                    }
                    if lloyd(k, 1, m, h) != bound {
                        problems.push(format!("bound tightness fails at h={h} m={m} k={k}"));
                    }
                }
            }
        }
        // item (4), corrected orthogonality form: brute vector summation
        for m in 1..=6u32 {
            for u_idx in 0..pow3(m) {
                let u = F3Vector::from_index(m, u_idx)?;
                for t in 0..=m {
                    checks += 1;
                    let sum = character_sum_by_weight(&u, t);
                    if !sum.b().is_zero() || *sum.a() != krawtchouk(t, u.weight(), m, 3) {
                        problems.push(format!(
                            "character sum differs from K_{t}(wt(u),{m}) at u index {u_idx}"
                        ));
                    }
                }
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        5,
        "Krawtchouk/Lloyd identity suite",
        format!("{checks} identities, h ∈ {{2,3,4}}, m ≤ 12; character sums brute-checked to m = 6"),
        outcome,
    )
}

/// Criterion 6: the f and g families share their real Walsh spectra
/// pointwise (brute force, all w), while their complete weight enumerators
/// differ for every proper nonempty S and coincide at S = {1..k}.
pub fn criterion_spectral_equality_cwe_difference(budget: &Budget) -> CriterionOutcome {
    let m_hi = 7.min(budget.max_spectrum_m);
    let mut pairs = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in 5..=m_hi {
            for k in 2..=(m - 1) / 2 {
                let g = WeightClassFunction::family(Family::G, m, k, None)?;
                let g_re2: Vec<BigInt> = walsh_spectrum_brute(&g.to_table(), budget)?
                    .iter()
                    .map(|v| v.re2())
                    .collect();
                let g_cwe = cwe_closed(&g)?;
                let sigma = set_a_size(m, &(1..=k).collect());
                let mut any_differs = false;
                for s in nonempty_subsets(k) {
                    let f = WeightClassFunction::family(Family::F, m, k, Some(s.clone()))?;
                    let f_re2: Vec<BigInt> = walsh_spectrum_brute(&f.to_table(), budget)?
                        .iter()
                        .map(|v| v.re2())
                        .collect();
                    if f_re2 != g_re2 {
                        problems.push(format!("{}: real spectrum differs from g", f.label()));
                    }
                    let f_cwe = cwe_closed(&f)?;
                    let a_size = set_a_size(m, &s);
                    let proper = !a_size.is_zero() && a_size != sigma;
                    if proper && f_cwe == g_cwe {
                        problems.push(format!("{}: CWE unexpectedly equals g's", f.label()));
                    }
                    if !proper && f_cwe != g_cwe {
                        problems.push(format!("{}: CWE unexpectedly differs from g's", f.label()));
                    }
                    any_differs |= f_cwe != g_cwe;
                    pairs += 1;
                }
                if !any_differs {
                    problems.push(format!("no S with a distinct CWE at m={m} k={k}"));
                }
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        6,
        "f/g real spectra equal, CWEs distinguish proper S",
        format!("{pairs} (f,g) spectrum pairs over m ∈ 5..={m_hi}, all w"),
        outcome,
    )
}

/// Criterion 7: the three inequality sweeps to m = 50 run clean in under
/// ten seconds, with the documented spot slacks.
pub fn criterion_inequality_certificates(_budget: &Budget) -> CriterionOutcome {
    let run = || -> Result<Vec<String>> {
        let start = Instant::now();
        let mut problems = Vec::new();
        for tag in [
            LemmaTag::BinomGrowth,
            LemmaTag::GapPositive,
            LemmaTag::TailDominance,
        ] {
            let report = sweep(50, tag)?;
            if !report.failures.is_empty() {
                problems.push(format!(
                    "{}: {} failures in the stated range",
                    tag.as_str(),
                    report.failures.len()
                ));
            }
            if report.min_slack.as_ref().map_or(true, |s| *s <= BigInt::zero()) {
                problems.push(format!("{}: nonpositive minimum slack", tag.as_str()));
            }
        }
        if check_binom_growth(16).slack != BigInt::from(143) {
            problems.push("binom growth slack at m = 16 is not 143".into());
        }
        if check_tail_dominance(5).slack != BigInt::from(30) {
            problems.push("tail dominance slack at m = 5 is not 30".into());
        }
        if check_gap_positive(5, 2)?.slack != BigInt::from(6) {
            problems.push("gap slack at (5,2) is not 6".into());
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(10) {
            problems.push(format!("sweeps took {elapsed:?} (> 10 s)"));
        }
        Ok(problems)
    };
    CriterionOutcome::from_problems(
        7,
        "inequality certificate sweeps to m = 50",
        "three sweeps, zero stated-range failures, spot slacks verified, < 10 s".into(),
        run(),
    )
}

/// Criterion 8: the complement family strictly improves the minimum
/// distance, exactly, for every in-range (m,k) with m ≤ 12.
pub fn criterion_distance_improvement(_budget: &Budget) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in 5..=12u32 {
            for k in 2..=(m - 1) / 2 {
                let d_g = parameters(&WeightClassFunction::family(Family::G, m, k, None)?)?
                    .d()
                    .clone();
                let d_gbar = parameters(&WeightClassFunction::family(Family::Gbar, m, k, None)?)?
                    .d()
                    .clone();
                if d_gbar <= d_g {
                    problems.push(format!("m={m} k={k}: d_gbar = {d_gbar} ≤ d_g = {d_g}"));
                }
                checked += 1;
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        8,
        "complement family strictly improves distance",
        format!("{checked} (m,k) pairs, m ≤ 12, exact integers"),
        outcome,
    )
}

/// Criterion 9: the complement Walsh identity holds for every S(m,k) subset
/// and for 50 seeded random subsets per m ∈ {3, 4, 5}.
pub fn criterion_complement_identity(budget: &Budget) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e51_c0de);
        for m in [3u32, 4, 5] {
            if m > budget.max_spectrum_m {
                continue;
            }
            for k in 1..=m {
                let mut d = Vec::new();
                for i in 1..=k {
                    d.extend(enumerate_by_weight(m, i));
                }
                if !complement_walsh_identity(&d, m, budget)? {
                    problems.push(format!("identity fails for the weight-≤{k} set at m={m}"));
                }
                checked += 1;
            }
            for trial in 0..50 {
                let d: Vec<F3Vector> = (1..pow3(m))
                    .filter(|_| rng.random_bool(0.5))
                    .map(|idx| F3Vector::from_index(m, idx).expect("index in range"))
                    .collect();
                if !complement_walsh_identity(&d, m, budget)? {
                    problems.push(format!("identity fails for random subset {trial} at m={m}"));
                }
                checked += 1;
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        9,
        "complement Walsh identity (D vs its complement)",
        format!("{checked} subsets over m ∈ {{3,4,5}}, exact ring equality"),
        outcome,
    )
}

/// Criterion 10: the closed-form AB iff inequalities agree with the verdict
/// computed from the closed-form weight distribution for every in-range
/// (m,k) with m ≤ 12.
pub fn criterion_ab_iff(_budget: &Budget) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut run = || -> Result<Vec<String>> {
        let mut problems = Vec::new();
        for m in 5..=12u32 {
            for k in 2..=(m - 1) / 2 {
                for family in [Family::G, Family::Gbar, Family::F] {
                    let s = (family == Family::F).then(|| BTreeSet::from([1u32]));
                    let f = WeightClassFunction::family(family, m, k, s)?;
                    let from_wd = ab_report(&weight_distribution_closed(&f)?)?.violates_ab;
                    if ab_condition_closed(family, m, k)? != from_wd {
                        problems.push(format!(
                            "{}: closed condition disagrees with distribution verdict",
                            f.label()
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(problems)
    };
    let outcome = run();
    CriterionOutcome::from_problems(
        10,
        "AB iff-conditions match distribution verdicts",
        format!("{checked} family instances, m ≤ 12, exact"),
        outcome,
    )
}

/// Runs all ten criteria in order.
pub fn run_battery(budget: &Budget) -> Vec<CriterionOutcome> {
    vec![
        criterion_golden_example(),
        criterion_oracle_equivalence(budget),
        criterion_walsh_equivalence(budget),
        criterion_minimality_cross_method(budget),
        criterion_krawtchouk_identities(budget),
        criterion_spectral_equality_cwe_difference(budget),
        criterion_inequality_certificates(budget),
        criterion_distance_improvement(budget),
        criterion_complement_identity(budget),
        criterion_ab_iff(budget),
    ]
}
