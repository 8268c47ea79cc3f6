//! Exact Walsh transforms of ternary functions.
//!
//! The Walsh transform of f : 𝔽₃^m → 𝔽₃ at w is the character sum
//!
//! ```text
//! f̂(w) = Σ_{x ∈ 𝔽₃^m} ζ₃^{f(x) − w·x}
//! ```
//!
//! taken over all of 𝔽₃^m including x = 0, with values in ℤ[ζ₃]. Correctness
//! is defined by this naive sum; the implementations below only reorganize it
//! (counting residues instead of accumulating ring elements) and never use a
//! butterfly.
//!
//! For weight-class functions the doubled real part of f̂(w) depends on w only
//! through wt(w) and collapses to a Krawtchouk sum:
//! `2·Re f̂(w) = Σ_j K_j(i,m)·τ(c_j)` with `i = wt(w)`, `τ(0) = 2` and
//! `τ(±1) = −1`. [`walsh_re2_class`] evaluates that sum for any class table;
//! [`walsh_re2_closed`] is the per-family branch form, kept separate so the
//! two can be checked against each other and against [`walsh_brute`].

use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::combinatorics::{binomial, krawtchouk, lloyd};
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::function::{Family, FunctionTable, WeightClassFunction};
use crate::gf3::{dot_table, enumerate_by_weight, pow3, F3, F3Vector};

/// τ(e) = ζ₃^e + ζ₃^{−e} = 2·Re(ζ₃^e): 2 at e = 0, −1 otherwise.
pub(crate) fn tau(e: F3) -> i64 {
    if e.is_zero() {
        2
    } else {
        -1
    }
}

/// f̂(w) by direct summation over all 3^m points.
pub fn walsh_brute(f: &FunctionTable, w: &F3Vector) -> Result<EisensteinInt> {
    if f.m() != w.m() {
        return Err(Error::DimensionMismatch {
            expected: f.m(),
            got: w.m(),
        });
    }
    let dots = dot_table(w);
    let mut counts = [0u64; 3];
    for (fx, d) in f.values().iter().zip(&dots) {
        counts[usize::from((fx.value() + 3 - d) % 3)] += 1;
    }
    Ok(EisensteinInt::from_root_counts(
        counts[0], counts[1], counts[2],
    ))
}

/// The full spectrum (f̂(w) for every w, indexed canonically). Θ(9^m), so
/// budget-capped.
pub fn walsh_spectrum_brute(f: &FunctionTable, budget: &Budget) -> Result<Vec<EisensteinInt>> {
    budget.check_spectrum(f.m())?;
    let m = f.m();
    (0..pow3(m))
        .into_par_iter()
        .map(|w_idx| walsh_brute(f, &F3Vector::from_index(m, w_idx)?))
        .collect()
}

/// Σ_{wt(v)=t} ζ₃^{u·v}, the character sum over a single weight class. Equal
/// to the ternary Krawtchouk value K_t(wt(u), m) — the identity the
/// combinatorics module is tested against.
pub fn character_sum_by_weight(u: &F3Vector, t: u32) -> EisensteinInt {
    let mut counts = [0u64; 3];
    for v in enumerate_by_weight(u.m(), t) {
        let e = u.inner_product(&v).expect("same dimension");
        counts[usize::from(e.value())] += 1;
    }
    EisensteinInt::from_root_counts(counts[0], counts[1], counts[2])
}

/// Doubled real parts of a Walsh spectrum, stored either per weight class
/// (for weight-class functions, where Re f̂ is class-constant) or per vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    data: SpectrumData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum SpectrumData {
    ByClass(Vec<BigInt>),
    Full(Vec<BigInt>),
}

impl WalshSpectrum {
    /// Closed-form class profile of a weight-class function.
    pub fn class_closed(f: &WeightClassFunction) -> WalshSpectrum {
        WalshSpectrum {
            m: f.m(),
            data: SpectrumData::ByClass(
                (0..=f.m()).map(|i| walsh_re2_class(f, i)).collect(),
            ),
        }
    }

    /// Brute-force full spectrum of an arbitrary table.
    pub fn full_brute(f: &FunctionTable, budget: &Budget) -> Result<WalshSpectrum> {
        let spectrum = walsh_spectrum_brute(f, budget)?;
        Ok(WalshSpectrum {
            m: f.m(),
            data: SpectrumData::Full(spectrum.iter().map(EisensteinInt::re2).collect()),
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_by_class(&self) -> bool {
        matches!(self.data, SpectrumData::ByClass(_))
    }

    /// 2·Re f̂(w).
    pub fn re2(&self, w: &F3Vector) -> Result<BigInt> {
        if w.m() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                got: w.m(),
            });
        }
        Ok(match &self.data {
            SpectrumData::ByClass(by_class) => by_class[w.weight() as usize].clone(),
            SpectrumData::Full(full) => full[w.index() as usize].clone(),
        })
    }

    /// 2·Re f̂(w) for any w of weight `i`; only for class-stored spectra.
    pub fn re2_at_class(&self, i: u32) -> Option<&BigInt> {
        match &self.data {
            SpectrumData::ByClass(by_class) => by_class.get(i as usize),
            SpectrumData::Full(_) => None,
        }
    }
}

/// 2·Re f̂(w) for any weight-class function and any w of weight `i`:
/// Σ_{j=0}^m K_j(i,m)·τ(c_j).
pub fn walsh_re2_class(f: &WeightClassFunction, i: u32) -> BigInt {
    assert!(i <= f.m(), "weight class {i} exceeds m = {}", f.m());
    (0..=f.m())
        .map(|j| krawtchouk(j, i, f.m(), 3) * tau(f.class_value(j)))
        .sum()
}

/// Per-family branch formulas for 2·Re f̂(w) at weight class `i`:
///
/// * `g`, `f`: 2·3^m − 3·Σ_{j=1}^k 2^j C(m,j) at i = 0, −3·(Ψ_k(i,m) − 1)
///   for i ≥ 1 (the real spectrum does not depend on S);
/// * `gbar`: −3^m + 3·Σ_{j=0}^k 2^j C(m,j) at i = 0, 3·Ψ_k(i,m) for i ≥ 1.
pub fn walsh_re2_closed(
    family: Family,
    m: u32,
    k: u32,
    s: Option<&BTreeSet<u32>>,
    i: u32,
) -> Result<BigInt> {
    if m < 5 || k < 2 || k > (m - 1) / 2 {
        return Err(Error::ParameterRange(format!(
            "closed-form Walsh values require m ≥ 5 and 2 ≤ k ≤ ⌊(m−1)/2⌋, got m = {m}, k = {k}"
        )));
    }
    if i > m {
        return Err(Error::ParameterRange(format!(
            "weight class {i} exceeds m = {m}"
        )));
    }
    if family == Family::F {
        let s = s.ok_or_else(|| {
            Error::ParameterRange("family f requires a nonempty sign set S".into())
        })?;
        if s.is_empty() || s.iter().any(|&j| j == 0 || j > k) {
            return Err(Error::ParameterRange(
                "S must be a nonempty subset of {1..k}".into(),
            ));
        }
    }
    let sum_1_to_k: BigInt = (1..=k)
        .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
        .sum();
    match family {
        Family::G | Family::F => Ok(if i == 0 {
            BigInt::from(2) * BigInt::from(3).pow(m) - BigInt::from(3) * sum_1_to_k
        } else {
            BigInt::from(-3) * (lloyd(k, i, m, 3) - 1)
        }),
        Family::Gbar => Ok(if i == 0 {
            -BigInt::from(3).pow(m) + BigInt::from(3) * (sum_1_to_k + 1)
        } else {
            BigInt::from(3) * lloyd(k, i, m, 3)
        }),
        Family::Custom => Err(Error::ParameterRange(
            "closed-form Walsh branch values exist for the g/gbar/f families only; \
             use walsh_re2_class for custom tables"
                .into(),
        )),
    }
}

/// The unique w with f(x) = w·x for all x, if one exists. Equivalent to
/// Re f̂(w) = 3^m (all 3^m character-sum terms equal 1); implemented as the
/// direct comparison with early exit.
pub fn linear_coincidence(f: &FunctionTable) -> Option<F3Vector> {
    let m = f.m();
    assert!(
        f.value_at_index(0).is_zero(),
        "linear_coincidence requires f(0) = 0"
    );
    'next_w: for w_idx in 0..pow3(m) {
        let w = F3Vector::from_index(m, w_idx).expect("index in range");
        let dots = dot_table(&w);
        for (fx, d) in f.values().iter().zip(&dots) {
            if fx.value() != *d {
                continue 'next_w;
            }
        }
        return Some(w);
    }
    None
}

/// Verifies f̂_D(w) + f̂_D̄(w) = (q−1)ζ₃ + q + 1 at w = 0 and 1 − ζ₃
/// elsewhere, with D ⊆ 𝔽₃^m∖{0}, D̄ its complement there, q = 3^m, and both
/// transforms computed by [`walsh_brute`].
pub fn complement_walsh_identity(d: &[F3Vector], m: u32, budget: &Budget) -> Result<bool> {
    budget.check_spectrum(m)?;
    let n = pow3(m);
    let mut in_d = vec![false; n as usize];
    for v in d {
        if v.m() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: v.m(),
            });
        }
        if v.is_zero() {
            return Err(Error::ParameterRange(
                "D must be a subset of the nonzero vectors".into(),
            ));
        }
        in_d[v.index() as usize] = true;
    }
    let table_d = FunctionTable::new(
        m,
        in_d.iter()
            .map(|&b| if b { F3::ONE } else { F3::ZERO })
            .collect(),
    )?;
    let table_dbar = FunctionTable::new(
        m,
        in_d.iter()
            .enumerate()
            .map(|(idx, &b)| {
                if idx > 0 && !b {
                    F3::ONE
                } else {
                    F3::ZERO
                }
            })
            .collect(),
    )?;
    let q = BigInt::from(3).pow(m);
    let at_zero = EisensteinInt::new(&q + 1, &q - 1);
    let elsewhere = EisensteinInt::new(1, -1);
    (0..n)
        .into_par_iter()
        .map(|w_idx| {
            let w = F3Vector::from_index(m, w_idx)?;
            let total = walsh_brute(&table_d, &w)? + walsh_brute(&table_dbar, &w)?;
            let expected = if w_idx == 0 { &at_zero } else { &elsewhere };
            Ok(total == *expected)
        })
        .try_reduce(|| true, |a, b| Ok(a && b))
}
