//! Exact certificates for the three supporting binomial inequalities.
//!
//! Each check evaluates its inequality as an exact `BigInt` slack; a sweep
//! runs a check across its stated range up to a requested m, recording every
//! margin, the minimum slack over the stated range, and any failures there.
//! These are exhaustive finite certificates, not symbolic proofs: points
//! outside a lemma's stated range (e.g. m < 16 for the binomial-growth
//! inequality, which is genuinely false at small m) are evaluated and
//! reported as informational margins only.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Which inequality a certificate covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaTag {
    /// C(m+1,t) > 3·C(m−1,t) with t = ⌊(m−1)/2⌋, stated for m ≥ 16.
    BinomGrowth,
    /// 3^{m−1} − 2^k·C(m−1,k) − Σ_{j=0}^k 2^j·C(m,j) > 0 for m ≥ 5,
    /// 1 ≤ k ≤ ⌊(m−1)/2⌋.
    GapPositive,
    /// Σ_{j=t+1}^{m−1} 2^j·C(m−1,j) − Σ_{j=0}^{t−1} 2^{j+1}·C(m−1,j) > 0
    /// with t = ⌊(m−1)/2⌋, stated for m ≥ 2.
    TailDominance,
}

impl LemmaTag {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaTag::BinomGrowth => "binom_growth",
            LemmaTag::GapPositive => "gap_positive",
            LemmaTag::TailDominance => "tail_dominance",
        }
    }

    /// Smallest m of the stated range.
    pub fn stated_m_min(self) -> u32 {
        match self {
            LemmaTag::BinomGrowth => 16,
            LemmaTag::GapPositive => 5,
            LemmaTag::TailDominance => 2,
        }
    }
}

impl std::str::FromStr for LemmaTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<LemmaTag> {
        match s {
            "binom_growth" => Ok(LemmaTag::BinomGrowth),
            "gap_positive" => Ok(LemmaTag::GapPositive),
            "tail_dominance" => Ok(LemmaTag::TailDominance),
            other => Err(Error::Parse(format!("unknown certificate tag {other:?}"))),
        }
    }
}

/// Result of one inequality evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub slack: BigInt,
}

fn outcome(slack: BigInt) -> CheckOutcome {
    CheckOutcome {
        holds: slack > BigInt::zero(),
        slack,
    }
}

/// slack = C(m+1,t) − 3·C(m−1,t), t = ⌊(m−1)/2⌋.
pub fn check_binom_growth(m: u32) -> CheckOutcome {
    assert!(m >= 2, "binom growth check needs m ≥ 2");
    let t = i64::from((m - 1) / 2);
    outcome(binomial(u64::from(m) + 1, t) - BigInt::from(3) * binomial(u64::from(m) - 1, t))
}

/// slack = 3^{m−1} − 2^k·C(m−1,k) − Σ_{j=0}^k 2^j·C(m,j).
pub fn check_gap_positive(m: u32, k: u32) -> Result<CheckOutcome> {
    if m < 5 || k < 1 || k > (m - 1) / 2 {
        return Err(Error::ParameterRange(format!(
            "gap check requires m ≥ 5 and 1 ≤ k ≤ ⌊(m−1)/2⌋, got m = {m}, k = {k}"
        )));
    }
    let sum: BigInt = (0..=k)
        .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
        .sum();
    Ok(outcome(
        BigInt::from(3).pow(m - 1)
            - BigInt::from(2).pow(k) * binomial(u64::from(m - 1), i64::from(k))
            - sum,
    ))
}

/// slack = Σ_{j=t+1}^{m−1} 2^j·C(m−1,j) − Σ_{j=0}^{t−1} 2^{j+1}·C(m−1,j),
/// t = ⌊(m−1)/2⌋.
pub fn check_tail_dominance(m: u32) -> CheckOutcome {
    assert!(m >= 2, "tail dominance check needs m ≥ 2");
    let t = (m - 1) / 2;
    let high: BigInt = (t + 1..=m - 1)
        .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m - 1), i64::from(j)))
        .sum();
    let low: BigInt = (0..t)
        .map(|j| BigInt::from(2).pow(j + 1) * binomial(u64::from(m - 1), i64::from(j)))
        .sum();
    outcome(high - low)
}

/// One evaluated point of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginEntry {
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(with = "crate::json::bigint_string")]
    pub slack: BigInt,
}

/// Exhaustive sweep record for one inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub lemma_tag: LemmaTag,
    /// Largest m evaluated.
    pub m_max: u32,
    /// Smallest m of the inequality's stated range; failures are only
    /// counted there.
    pub stated_m_min: u32,
    /// Stated-range points where the inequality failed (expected empty).
    pub failures: Vec<MarginEntry>,
    /// Minimum slack over the stated range, absent if the sweep did not
    /// reach it.
    #[serde(with = "crate::json::bigint_string_opt")]
    pub min_slack: Option<BigInt>,
    /// Every evaluated point, including informational ones below the stated
    /// range.
    pub margins: Vec<MarginEntry>,
}

/// Runs the tagged check across its range up to `m_max` (at most 200).
pub fn sweep(m_max: u32, tag: LemmaTag) -> Result<CertificateReport> {
    if m_max > 200 {
        return Err(Error::ParameterRange(format!(
            "sweep supports m_max ≤ 200, got {m_max}"
        )));
    }
    let margins: Vec<MarginEntry> = match tag {
        LemmaTag::BinomGrowth => (2..=m_max.max(2))
            .into_par_iter()
            .map(|m| MarginEntry {
                m,
                k: None,
                slack: check_binom_growth(m).slack,
            })
            .collect(),
        LemmaTag::TailDominance => (2..=m_max.max(2))
            .into_par_iter()
            .map(|m| MarginEntry {
                m,
                k: None,
                slack: check_tail_dominance(m).slack,
            })
            .collect(),
        LemmaTag::GapPositive => (5..=m_max.max(5))
            .into_par_iter()
            .flat_map_iter(|m| {
                (1..=(m - 1) / 2).map(move |k| MarginEntry {
                    m,
                    k: Some(k),
                    slack: check_gap_positive(m, k)
                        .expect("in range by construction")
                        .slack,
                })
            })
            .collect(),
    };
    let margins: Vec<MarginEntry> = margins.into_iter().filter(|e| e.m <= m_max).collect();
    let stated_m_min = tag.stated_m_min();
    let failures: Vec<MarginEntry> = margins
        .iter()
        .filter(|e| e.m >= stated_m_min && e.slack <= BigInt::zero())
        .cloned()
        .collect();
    let min_slack = margins
        .iter()
        .filter(|e| e.m >= stated_m_min)
        .map(|e| e.slack.clone())
        .min();
    Ok(CertificateReport {
        lemma_tag: tag,
        m_max,
        stated_m_min,
        failures,
        min_slack,
        margins,
    })
}
