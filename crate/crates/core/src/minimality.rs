//! Minimality verdicts and the Ashikhmin–Barg ratio check.
//!
//! A codeword a covers b when Supp(b) ⊆ Supp(a); a nonzero codeword is
//! minimal when it covers nothing beyond its own scalar multiples, and the
//! code is minimal when every nonzero codeword is. Two independent verdicts
//! are implemented:
//!
//! * **brute** — scans every ordered pair of nonzero codewords with bitset
//!   supports, in deterministic (u, v)-index order, returning the first
//!   non-proportional covering pair as a witness;
//! * **spectral** — for codes C_f, the code is minimal iff for all pairwise
//!   distinct w₁ + w₂ + w₃ = 0 neither Re f̂(w₁) + Re f̂(w₂) − 2·Re f̂(w₃)
//!   nor Re f̂(w₁) + Re f̂(w₂) + Re f̂(w₃) equals 3^m. All comparisons run on
//!   doubled real parts against 2·3^m, so everything stays in ℤ. For
//!   weight-class functions only the realizable weight-class triples are
//!   scanned; realizability is decided by a small search over the five
//!   coordinate overlap patterns a pair (w₁, w₂) can use.
//!
//! The Ashikhmin–Barg check is pure integer arithmetic: a distribution
//! "violates AB" when 3·w_min ≤ 2·w_max (the sufficient minimality criterion
//! w_min/w_max > 2/3 fails). The per-family closed-form inequalities are
//! checked against the distribution verdict in the tests.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::code::WeightDistribution;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::function::{Family, FunctionTable, WeightClassFunction};
use crate::gf3::{double_index_table, dot_table, pow3, F3, F3Vector};
use crate::walsh::{linear_coincidence, walsh_re2_class, walsh_spectrum_brute};

/// Supp(b) ⊆ Supp(a)?
pub fn covers(a: &[F3], b: &[F3]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len() as u32,
            got: b.len() as u32,
        });
    }
    Ok(a.iter().zip(b).all(|(ai, bi)| bi.is_zero() || !ai.is_zero()))
}

/// Which route produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Spectral,
}

/// A codeword of C_f, identified by its (u, v) coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodewordId {
    pub u: F3,
    pub v_index: u64,
}

/// Outcome of a minimality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub method: Method,
    /// For a failed brute verdict: (coverer, covered), the first
    /// non-proportional covering pair in scan order.
    pub witness: Option<(CodewordId, CodewordId)>,
    /// True when no admissible w-triple existed, making the spectral
    /// criterion hold vacuously.
    pub vacuous: bool,
}

/// Brute-force verdict over all ordered pairs of nonzero codewords of C_f.
pub fn is_minimal_brute_table(f: &FunctionTable, budget: &Budget) -> Result<MinimalityVerdict> {
    budget.check_pair(f.m())?;
    let m = f.m();
    let n = pow3(m);
    let total = 3 * n;
    let bits = (n - 1) as usize;
    let words = bits.div_ceil(64);

    let supports: Vec<Vec<u64>> = (0..total)
        .into_par_iter()
        .map(|c| {
            let u = F3::from_residue(c / n);
            let v = F3Vector::from_index(m, c % n).expect("index in range");
            let dots = dot_table(&v);
            let mut mask = vec![0u64; words];
            for (x, (fx, d)) in f.values().iter().zip(&dots).enumerate().skip(1) {
                if (u.value() * fx.value() + d) % 3 != 0 {
                    mask[(x - 1) / 64] |= 1 << ((x - 1) % 64);
                }
            }
            mask
        })
        .collect();

    let dbl = double_index_table(m);
    let double_of = |c: u64| -> u64 {
        let u = (c / n) * 2 % 3;
        u * n + dbl[(c % n) as usize]
    };
    let is_subset = |sub: &[u64], sup: &[u64]| sub.iter().zip(sup).all(|(s, t)| s & !t == 0);

    let witness = (1..total).into_par_iter().find_map_first(|a| {
        let sa = &supports[a as usize];
        let double_a = double_of(a);
        for b in 1..total {
            if b == a || b == double_a {
                continue;
            }
            if is_subset(&supports[b as usize], sa) {
                return Some((a, b));
            }
        }
        None
    });

    let id_of = |c: u64| CodewordId {
        u: F3::from_residue(c / n),
        v_index: c % n,
    };
    Ok(MinimalityVerdict {
        minimal: witness.is_none(),
        method: Method::Brute,
        witness: witness.map(|(a, b)| (id_of(a), id_of(b))),
        vacuous: false,
    })
}

/// Brute-force verdict for a weight-class function's code.
pub fn is_minimal_brute(f: &WeightClassFunction, budget: &Budget) -> Result<MinimalityVerdict> {
    budget.check_pair(f.m())?;
    is_minimal_brute_table(&f.to_table(), budget)
}

/// Can pairwise-distinct w₁, w₂, w₃ with w₁ + w₂ + w₃ = 0 have weights
/// (i₁, i₂, i₃)? Decided by searching over the per-coordinate overlap
/// patterns of (w₁, w₂): a coordinate is zero in both, nonzero in exactly
/// one, equal nonzero (sum nonzero), or opposite nonzero (sum zero).
pub fn weight_triple_realizable(m: u32, i1: u32, i2: u32, i3: u32) -> bool {
    if i1 > m || i2 > m || i3 > m {
        return false;
    }
    let shared_max = i1.min(i2);
    for equal in 0..=shared_max {
        for opposite in 0..=shared_max.saturating_sub(equal) {
            let only1 = i1 - equal - opposite;
            let only2 = match i2.checked_sub(equal + opposite) {
                Some(v) => v,
                None => continue,
            };
            if only1 + only2 + equal != i3 {
                continue;
            }
            if only1 + only2 + equal + opposite > m {
                continue;
            }
            // w₁ = w₂ exactly when every nonzero coordinate is shared-equal
            if only1 + only2 + opposite == 0 {
                continue;
            }
            return true;
        }
    }
    false
}

fn spectral_verdict_from_re2<R>(m: u32, classes: u32, re2: R, realizable: impl Fn(u32, u32, u32) -> bool) -> MinimalityVerdict
where
    R: Fn(u32) -> BigInt,
{
    let target = BigInt::from(2) * BigInt::from(3).pow(m);
    let mut any_triple = false;
    for i1 in 0..classes {
        for i2 in 0..classes {
            for i3 in 0..classes {
                if !realizable(i1, i2, i3) {
                    continue;
                }
                any_triple = true;
                let r1 = re2(i1);
                let r2 = re2(i2);
                let r3 = re2(i3);
                if &r1 + &r2 - BigInt::from(2) * &r3 == target || r1 + r2 + r3 == target {
                    return MinimalityVerdict {
                        minimal: false,
                        method: Method::Spectral,
                        witness: None,
                        vacuous: false,
                    };
                }
            }
        }
    }
    MinimalityVerdict {
        minimal: true,
        method: Method::Spectral,
        witness: None,
        vacuous: !any_triple,
    }
}

/// Spectral verdict for a weight-class function, scanning only realizable
/// weight-class triples with the closed-form doubled real parts.
pub fn is_minimal_spectral(f: &WeightClassFunction) -> Result<MinimalityVerdict> {
    if let Some(w) = f.linear_coincidence() {
        return Err(Error::LinearlyCoincident { w });
    }
    let m = f.m();
    let re2: Vec<BigInt> = (0..=m).map(|i| walsh_re2_class(f, i)).collect();
    Ok(spectral_verdict_from_re2(
        m,
        m + 1,
        |i| re2[i as usize].clone(),
        |i1, i2, i3| weight_triple_realizable(m, i1, i2, i3),
    ))
}

/// Spectral verdict for an arbitrary function table, scanning every ordered
/// pair (w₁, w₂) of distinct vectors with w₃ = −(w₁ + w₂). Θ(9^m), budget
/// capped via the spectrum budget.
pub fn is_minimal_spectral_table(
    f: &FunctionTable,
    budget: &Budget,
) -> Result<MinimalityVerdict> {
    if let Some(w) = linear_coincidence(f) {
        return Err(Error::LinearlyCoincident { w });
    }
    let m = f.m();
    let n = pow3(m);
    let spectrum = walsh_spectrum_brute(f, budget)?;
    let re2: Vec<BigInt> = spectrum.iter().map(|v| v.re2()).collect();
    let target = BigInt::from(2) * BigInt::from(3).pow(m);

    let neg_sum_index = |a: u64, b: u64| -> u64 {
        let mut out = 0u64;
        let mut place = 1u64;
        let (mut ra, mut rb) = (a, b);
        for _ in 0..m {
            let digit = (3 - (ra + rb) % 3) % 3;
            out += digit * place;
            place *= 3;
            ra /= 3;
            rb /= 3;
        }
        out
    };

    let violation = (0..n).into_par_iter().find_any(|&a| {
        let ra = &re2[a as usize];
        for b in 0..n {
            if b == a {
                continue;
            }
            let c = neg_sum_index(a, b);
            let rb = &re2[b as usize];
            let rc = &re2[c as usize];
            if ra + rb - BigInt::from(2) * rc == target || ra + rb + rc == target {
                return true;
            }
        }
        false
    });
    Ok(MinimalityVerdict {
        minimal: violation.is_none(),
        method: Method::Spectral,
        witness: None,
        vacuous: n < 2,
    })
}

/// The extreme nonzero weights and the Ashikhmin–Barg verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbReport {
    #[serde(with = "crate::json::bigint_string")]
    pub w_min: BigInt,
    #[serde(with = "crate::json::bigint_string")]
    pub w_max: BigInt,
    /// 3·w_min ≤ 2·w_max, i.e. the sufficient criterion w_min/w_max > 2/3
    /// does not apply.
    pub violates_ab: bool,
}

/// Reads w_min/w_max off a weight distribution; rejects distributions with
/// no nonzero weight.
pub fn ab_report(wd: &WeightDistribution) -> Result<AbReport> {
    let w_min = wd.min_nonzero_weight().cloned().ok_or_else(|| {
        Error::ParameterRange("degenerate distribution: only the zero weight present".into())
    })?;
    let w_max = wd
        .max_nonzero_weight()
        .cloned()
        .expect("nonzero weight exists");
    let violates_ab = BigInt::from(3) * &w_min <= BigInt::from(2) * &w_max;
    Ok(AbReport {
        w_min,
        w_max,
        violates_ab,
    })
}

/// The closed-form iff inequality for w_min/w_max ≤ 2/3:
/// 3·Σ_{j=1}^k 2^j C(m,j) ≤ 2(3^m − 3^{m−1}) + 2^{k+1} C(m−1,k) − 2 for
/// `g`/`f`, and 2·Σ_{j=1}^k 2^j C(m,j) ≤ 3·2^k C(m−1,k) for `gbar`.
pub fn ab_condition_closed(family: Family, m: u32, k: u32) -> Result<bool> {
    if m < 5 || k < 2 || k > (m - 1) / 2 {
        return Err(Error::ParameterRange(format!(
            "closed-form AB condition requires m ≥ 5 and 2 ≤ k ≤ ⌊(m−1)/2⌋, got m = {m}, k = {k}"
        )));
    }
    let sigma: BigInt = (1..=k)
        .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
        .sum();
    let top = BigInt::from(2).pow(k) * binomial(u64::from(m - 1), i64::from(k));
    match family {
        Family::G | Family::F => {
            let rhs = BigInt::from(2) * (BigInt::from(3).pow(m) - BigInt::from(3).pow(m - 1))
                + BigInt::from(2) * &top
                - 2;
            Ok(BigInt::from(3) * sigma <= rhs)
        }
        Family::Gbar => Ok(BigInt::from(2) * sigma <= BigInt::from(3) * top),
        Family::Custom => Err(Error::ParameterRange(
            "closed-form AB conditions exist for the g/gbar/f families only".into(),
        )),
    }
}

/// Verdict wire form:
/// `{"minimal":…, "method":…, "witness":…, "w_min":…, "w_max":…,
/// "violates_ab":…}` with the witness as `[[u, v-index], [u′, v′-index]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityRecord {
    pub minimal: bool,
    pub method: Method,
    pub witness: Option<[[u64; 2]; 2]>,
    #[serde(with = "crate::json::bigint_string")]
    pub w_min: BigInt,
    #[serde(with = "crate::json::bigint_string")]
    pub w_max: BigInt,
    pub violates_ab: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
}

impl MinimalityRecord {
    pub fn new(verdict: &MinimalityVerdict, ab: &AbReport) -> MinimalityRecord {
        MinimalityRecord {
            minimal: verdict.minimal,
            method: verdict.method,
            witness: verdict.witness.map(|(a, b)| {
                [
                    [u64::from(a.u.value()), a.v_index],
                    [u64::from(b.u.value()), b.v_index],
                ]
            }),
            w_min: ab.w_min.clone(),
            w_max: ab.w_max.clone(),
            violates_ab: ab.violates_ab,
            vacuous: verdict.vacuous,
        }
    }
}
