//! The generic code construction and its exact weight tables.
//!
//! From a function f : 𝔽₃^m → 𝔽₃ with f(0) = 0, the construction builds the
//! ternary linear code
//!
//! ```text
//! C_f = { (u·f(x) + v·x)_{x ∈ 𝔽₃^m∖{0}} : u ∈ 𝔽₃, v ∈ 𝔽₃^m }
//! ```
//!
//! of length n = 3^m − 1 and, when f coincides with no linear form,
//! dimension m + 1. Codewords are indexed by the 3^{m+1} pairs (u, v); the
//! coordinate order is the canonical one from [`crate::gf3`].
//!
//! For weight-class functions everything reduces to the symbol-preimage
//! counts
//!
//! ```text
//! N_λ(u,v) = #{x ∈ 𝔽₃^m : u·f(x) + v·x = λ}
//!          = 3^{m−1} + (1/3)·Σ_{j=0}^m K_j(i,m)·τ(u·c_j − λ),   i = wt(v),
//! ```
//!
//! with τ(0) = 2 and τ(±1) = −1; the division by 3 is always exact and is
//! checked. One engine serves every branch — u = 0, v = 0 and the generic
//! case alike — and the per-family case formulas in the tests are regression
//! checks of the engine. The x = 0 coordinate (where the value is always 0)
//! is excluded from codewords, so t₀ = N₀ − 1 while t₁ and t₂ equal N₁, N₂.
//!
//! Closed-form tables are exact for any class function; the brute-force
//! twins enumerate codewords directly and serve as the oracle the closed
//! forms are accepted against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::budget::Budget;
use crate::combinatorics::{binomial, krawtchouk};
use crate::error::{Error, Result};
use crate::function::{Family, FunctionTable, WeightClassFunction};
use crate::gf3::{dot_table, pow3, F3, F3Vector};
use crate::walsh::tau;

/// Per-symbol coordinate counts (t₀, t₁, t₂) of one codeword;
/// t₀ + t₁ + t₂ = 3^m − 1 and the Hamming weight is t₁ + t₂.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolCounts {
    pub t0: BigInt,
    pub t1: BigInt,
    pub t2: BigInt,
}

impl SymbolCounts {
    pub fn new(t0: impl Into<BigInt>, t1: impl Into<BigInt>, t2: impl Into<BigInt>) -> Self {
        SymbolCounts {
            t0: t0.into(),
            t1: t1.into(),
            t2: t2.into(),
        }
    }

    /// Hamming weight t₁ + t₂.
    pub fn weight(&self) -> BigInt {
        &self.t1 + &self.t2
    }

    pub fn total(&self) -> BigInt {
        &self.t0 + &self.t1 + &self.t2
    }
}

impl fmt::Display for SymbolCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.t0, self.t1, self.t2)
    }
}

/// N_λ(u, v) for any v of weight `i` (the count includes x = 0).
///
/// Fails with an internal-consistency error if the Krawtchouk character sum
/// is not divisible by 3, which would indicate a formula bug rather than bad
/// input.
pub fn preimage_count_closed(
    f: &WeightClassFunction,
    u: F3,
    i: u32,
    lambda: F3,
) -> Result<BigInt> {
    let m = f.m();
    if i > m {
        return Err(Error::ParameterRange(format!(
            "weight class {i} exceeds m = {m}"
        )));
    }
    let mut sum = BigInt::zero();
    for j in 0..=m {
        let e = u * f.class_value(j) - lambda;
        sum += krawtchouk(j, i, m, 3) * tau(e);
    }
    let (q, r) = sum.div_rem(&BigInt::from(3));
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!(
            "character sum {sum} for {} (u={u}, i={i}, λ={lambda}) is not divisible by 3",
            f.label()
        )));
    }
    Ok(BigInt::from(3).pow(m - 1) + q)
}

/// Closed-form (t₀, t₁, t₂) of the codeword (u, v) for any v of weight `i`.
pub fn codeword_counts_closed(f: &WeightClassFunction, u: F3, i: u32) -> Result<SymbolCounts> {
    let n0 = preimage_count_closed(f, u, i, F3::ZERO)?;
    let n1 = preimage_count_closed(f, u, i, F3::ONE)?;
    let n2 = preimage_count_closed(f, u, i, F3::TWO)?;
    Ok(SymbolCounts {
        t0: n0 - 1,
        t1: n1,
        t2: n2,
    })
}

/// (t₀, t₁, t₂) of the codeword (u, v) by direct enumeration of every
/// coordinate x ∈ 𝔽₃^m∖{0}, one inner product at a time.
pub fn codeword_counts_brute(f: &FunctionTable, u: F3, v: &F3Vector) -> Result<SymbolCounts> {
    if f.m() != v.m() {
        return Err(Error::DimensionMismatch {
            expected: f.m(),
            got: v.m(),
        });
    }
    let m = f.m();
    let mut counts = [0u64; 3];
    for idx in 1..pow3(m) {
        let x = F3Vector::from_index(m, idx)?;
        let value = u * f.value_at_index(idx) + v.inner_product(&x)?;
        counts[usize::from(value.value())] += 1;
    }
    Ok(SymbolCounts::new(counts[0], counts[1], counts[2]))
}

/// Exact multiplicity table: weight w ↦ number of codewords A_w, keyed in
/// ascending weight order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    entries: BTreeMap<BigInt, BigInt>,
}

impl WeightDistribution {
    pub fn add(&mut self, weight: BigInt, multiplicity: BigInt) {
        if multiplicity.is_zero() {
            return;
        }
        *self.entries.entry(weight).or_default() += multiplicity;
    }

    pub fn entries(&self) -> &BTreeMap<BigInt, BigInt> {
        &self.entries
    }

    pub fn multiplicity(&self, weight: &BigInt) -> BigInt {
        self.entries.get(weight).cloned().unwrap_or_default()
    }

    /// Total number of codewords counted.
    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<&BigInt> {
        self.entries.keys().find(|w| !w.is_zero())
    }

    pub fn max_nonzero_weight(&self) -> Option<&BigInt> {
        self.entries.keys().rev().find(|w| !w.is_zero())
    }

    fn merge(mut self, other: WeightDistribution) -> WeightDistribution {
        for (w, mult) in other.entries {
            self.add(w, mult);
        }
        self
    }
}

/// Exact multiplicity table over symbol-count triples, keyed lexicographically
/// by (t₀, t₁, t₂).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompleteWeightEnumerator {
    terms: BTreeMap<SymbolCounts, BigInt>,
}

impl CompleteWeightEnumerator {
    pub fn add(&mut self, counts: SymbolCounts, multiplicity: BigInt) {
        if multiplicity.is_zero() {
            return;
        }
        *self.terms.entry(counts).or_default() += multiplicity;
    }

    pub fn terms(&self) -> &BTreeMap<SymbolCounts, BigInt> {
        &self.terms
    }

    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Collapses the symbol counts to Hamming weights.
    pub fn to_weight_distribution(&self) -> WeightDistribution {
        let mut wd = WeightDistribution::default();
        for (counts, mult) in &self.terms {
            wd.add(counts.weight(), mult.clone());
        }
        wd
    }

    fn merge(mut self, other: CompleteWeightEnumerator) -> CompleteWeightEnumerator {
        for (counts, mult) in other.terms {
            self.add(counts, mult);
        }
        self
    }
}

/// Closed-form weight distribution: for every u ∈ 𝔽₃ and weight class
/// i ∈ 0..m, the codeword weight 3^m − N₀(u, i) appears with multiplicity
/// 2^i·C(m,i). Multiplicities count (u, v) pairs, which are in bijection
/// with codewords exactly when f has no linear coincidence.
pub fn weight_distribution_closed(f: &WeightClassFunction) -> Result<WeightDistribution> {
    let m = f.m();
    let p3m = BigInt::from(3).pow(m);
    let mut wd = WeightDistribution::default();
    for u in [F3::ZERO, F3::ONE, F3::TWO] {
        for i in 0..=m {
            let n0 = preimage_count_closed(f, u, i, F3::ZERO)?;
            let mult = BigInt::from(2).pow(i) * binomial(u64::from(m), i64::from(i));
            wd.add(&p3m - n0, mult);
        }
    }
    Ok(wd)
}

/// Closed-form complete weight enumerator, assembled from the same branches.
pub fn cwe_closed(f: &WeightClassFunction) -> Result<CompleteWeightEnumerator> {
    let m = f.m();
    let mut cwe = CompleteWeightEnumerator::default();
    for u in [F3::ZERO, F3::ONE, F3::TWO] {
        for i in 0..=m {
            let counts = codeword_counts_closed(f, u, i)?;
            let mult = BigInt::from(2).pow(i) * binomial(u64::from(m), i64::from(i));
            cwe.add(counts, mult);
        }
    }
    Ok(cwe)
}

/// Both brute-force tables in one pass: enumerates all 3^{m+1} pairs (u, v),
/// counting symbols per codeword. Θ(3^{2m}), budget-capped.
pub fn brute_tables(
    f: &FunctionTable,
    budget: &Budget,
) -> Result<(WeightDistribution, CompleteWeightEnumerator)> {
    budget.check_enum(f.m())?;
    let m = f.m();
    let n = pow3(m);
    let result = (0..n)
        .into_par_iter()
        .map(|v_idx| {
            let v = F3Vector::from_index(m, v_idx).expect("index in range");
            let dots = dot_table(&v);
            // joint histogram of (f(x), v·x) over x ≠ 0; the three u values
            // share it
            let mut hist = [[0u64; 3]; 3];
            for (fx, d) in f.values().iter().zip(&dots).skip(1) {
                hist[usize::from(fx.value())][usize::from(*d)] += 1;
            }
            let mut wd = WeightDistribution::default();
            let mut cwe = CompleteWeightEnumerator::default();
            for u in 0..3usize {
                let mut counts = [0u64; 3];
                for a in 0..3 {
                    for b in 0..3 {
                        counts[(u * a + b) % 3] += hist[a][b];
                    }
                }
                let sc = SymbolCounts::new(counts[0], counts[1], counts[2]);
                wd.add(sc.weight(), BigInt::one());
                cwe.add(sc, BigInt::one());
            }
            (wd, cwe)
        })
        .reduce(
            || (WeightDistribution::default(), CompleteWeightEnumerator::default()),
            |(wd_a, cwe_a), (wd_b, cwe_b)| (wd_a.merge(wd_b), cwe_a.merge(cwe_b)),
        );
    Ok(result)
}

/// Brute-force weight distribution of C_f.
pub fn weight_distribution_brute(
    f: &FunctionTable,
    budget: &Budget,
) -> Result<WeightDistribution> {
    Ok(brute_tables(f, budget)?.0)
}

/// Brute-force complete weight enumerator of C_f.
pub fn cwe_brute(
    f: &FunctionTable,
    budget: &Budget,
) -> Result<CompleteWeightEnumerator> {
    Ok(brute_tables(f, budget)?.1)
}

/// Parameters [n, dim, d] of C_f plus the maximum nonzero weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    function: WeightClassFunction,
    n: BigInt,
    dim: u32,
    d: BigInt,
    w_max: BigInt,
}

impl CodeSpec {
    pub fn function(&self) -> &WeightClassFunction {
        &self.function
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Minimum nonzero weight.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Maximum nonzero weight.
    pub fn w_max(&self) -> &BigInt {
        &self.w_max
    }
}

/// [3^m − 1, m + 1, d] from the closed-form weight distribution, with the
/// family distance formulas cross-checked against it:
/// d = Σ_{j=1}^k 2^j C(m,j) for `g`/`f`, d = 3^m − 3^{m−1} − 2^k C(m−1,k)
/// and w_max = 3^m − Σ_{j=0}^k 2^j C(m,j) for `gbar`.
pub fn parameters(f: &WeightClassFunction) -> Result<CodeSpec> {
    if let Some(w) = f.linear_coincidence() {
        return Err(Error::LinearlyCoincident { w });
    }
    let m = f.m();
    let wd = weight_distribution_closed(f)?;
    let d = wd
        .min_nonzero_weight()
        .cloned()
        .ok_or_else(|| Error::Inconsistency("weight distribution has no nonzero weight".into()))?;
    let w_max = wd
        .max_nonzero_weight()
        .cloned()
        .expect("nonzero weight exists");

    let in_range = m >= 5 && f.k().is_some_and(|k| (2..=(m - 1) / 2).contains(&k));
    if in_range {
        let k = f.k().expect("family has k");
        let formula = match f.family_tag() {
            Family::G | Family::F => Some(
                (1..=k)
                    .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
                    .sum::<BigInt>(),
            ),
            Family::Gbar => Some(
                BigInt::from(3).pow(m)
                    - BigInt::from(3).pow(m - 1)
                    - BigInt::from(2).pow(k) * binomial(u64::from(m - 1), i64::from(k)),
            ),
            Family::Custom => None,
        };
        if let Some(formula) = formula {
            if formula != d {
                return Err(Error::Inconsistency(format!(
                    "distance formula {formula} disagrees with the distribution minimum {d} for {}",
                    f.label()
                )));
            }
        }
        if f.family_tag() == Family::Gbar {
            let w_prime = BigInt::from(3).pow(m)
                - (0..=k)
                    .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
                    .sum::<BigInt>();
            if w_prime != w_max {
                return Err(Error::Inconsistency(format!(
                    "maximum-weight formula {w_prime} disagrees with the distribution maximum \
                     {w_max} for {}",
                    f.label()
                )));
            }
        }
    }

    Ok(CodeSpec {
        function: f.clone(),
        n: BigInt::from(3).pow(m) - 1,
        dim: m + 1,
        d,
        w_max,
    })
}

/// An (m+1) × (3^m − 1) generator matrix of C_f: row 0 is (f(x))_x, row j is
/// the coordinate projection x_j, columns in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    m: u32,
    k_label: u32,
    family_label: String,
    rows: Vec<Vec<F3>>,
}

/// Builds the generator matrix; rejects functions with a linear coincidence
/// (the matrix would not have rank m + 1) and dimensions past m = 12 (the
/// dense text form stops being useful around 3^12 columns).
pub fn generator_matrix(f: &WeightClassFunction) -> Result<GeneratorMatrix> {
    if let Some(w) = f.linear_coincidence() {
        return Err(Error::LinearlyCoincident { w });
    }
    let m = f.m();
    if m > 12 {
        return Err(Error::ParameterRange(format!(
            "generator matrix export supports m ≤ 12, got m = {m}"
        )));
    }
    let n = pow3(m);
    let table = f.to_table();
    let mut rows = Vec::with_capacity(m as usize + 1);
    rows.push(table.values()[1..].to_vec());
    for j in 0..m {
        let shift = pow3(m - 1 - j);
        let row = (1..n)
            .map(|idx| F3::from_residue(idx / shift))
            .collect();
        rows.push(row);
    }
    Ok(GeneratorMatrix {
        m,
        k_label: f.k().unwrap_or(0),
        family_label: f.family_tag().as_str().to_string(),
        rows,
    })
}

impl GeneratorMatrix {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn n(&self) -> u64 {
        self.rows[0].len() as u64
    }

    pub fn rows(&self) -> &[Vec<F3>] {
        &self.rows
    }

    /// Rank over 𝔽₃ by Gaussian elimination.
    pub fn rank(&self) -> u32 {
        let mut work: Vec<Vec<u8>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.value()).collect())
            .collect();
        let n_rows = work.len();
        let n_cols = work[0].len();
        let mut rank = 0usize;
        for col in 0..n_cols {
            if rank == n_rows {
                break;
            }
            let Some(pivot) = (rank..n_rows).find(|&r| work[r][col] != 0) else {
                continue;
            };
            work.swap(rank, pivot);
            let inv = work[rank][col]; // self-inverse in 𝔽₃
            for entry in work[rank][col..].iter_mut() {
                *entry = (*entry * inv) % 3;
            }
            let pivot_row = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col];
                    for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *dst = (*dst + (3 - factor) * src % 3) % 3;
                    }
                }
            }
            rank += 1;
        }
        rank as u32
    }

    /// Text form: header `m k family n dim`, then `dim` rows of `n`
    /// space-separated digits.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {} {}\n",
            self.m,
            self.k_label,
            self.family_label,
            self.n(),
            self.dim()
        );
        for row in &self.rows {
            let digits: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&digits.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<GeneratorMatrix> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty generator-matrix file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!(
                "header must be `m k family n dim`, got {header:?}"
            )));
        }
        let m: u32 = fields[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad m in header: {header:?}")))?;
        let k_label: u32 = fields[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad k in header: {header:?}")))?;
        let family_label = fields[2].to_string();
        let n: u64 = fields[3]
            .parse()
            .map_err(|_| Error::Parse(format!("bad n in header: {header:?}")))?;
        let dim: u32 = fields[4]
            .parse()
            .map_err(|_| Error::Parse(format!("bad dim in header: {header:?}")))?;
        if n != pow3(m) - 1 || dim != m + 1 {
            return Err(Error::Parse(format!(
                "header dimensions are inconsistent: m = {m} needs n = {} and dim = {}",
                pow3(m) - 1,
                m + 1
            )));
        }
        let mut rows = Vec::with_capacity(dim as usize);
        for _ in 0..dim {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {dim} matrix rows")))?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    let digit: u8 = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad digit {tok:?}")))?;
                    F3::new(digit)
                })
                .collect::<Result<Vec<F3>>>()?;
            if row.len() as u64 != n {
                return Err(Error::Parse(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        Ok(GeneratorMatrix {
            m,
            k_label,
            family_label,
            rows,
        })
    }

    /// Weight distribution of the row span, by enumerating all 3^dim
    /// coefficient vectors. Exercises the matrix as an independent route to
    /// the code.
    pub fn row_span_weight_distribution(&self) -> WeightDistribution {
        let dim = self.dim();
        let n = self.n() as usize;
        let mut wd = WeightDistribution::default();
        for combo in 0..pow3(dim) {
            let mut coeffs = Vec::with_capacity(dim as usize);
            let mut rest = combo;
            for _ in 0..dim {
                coeffs.push(F3::from_residue(rest));
                rest /= 3;
            }
            let mut weight = 0u64;
            for col in 0..n {
                let mut acc = F3::ZERO;
                for (r, coeff) in coeffs.iter().enumerate() {
                    acc = acc + *coeff * self.rows[r][col];
                }
                if !acc.is_zero() {
                    weight += 1;
                }
            }
            wd.add(BigInt::from(weight), BigInt::one());
        }
        wd
    }
}

/// Wire form of a weight distribution:
/// `{"m":…, "k":…, "family":…, "S":[…], "dist":[{"w":…, "A":…}…]}` with the
/// table sorted by ascending weight and every table number a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistributionReport {
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub family: Family,
    #[serde(rename = "S")]
    pub s: Vec<u32>,
    pub dist: Vec<WeightEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    #[serde(with = "crate::json::bigint_string")]
    pub w: BigInt,
    #[serde(rename = "A", with = "crate::json::bigint_string")]
    pub a: BigInt,
}

impl WeightDistributionReport {
    pub fn new(f: &WeightClassFunction, wd: &WeightDistribution) -> WeightDistributionReport {
        WeightDistributionReport {
            m: f.m(),
            k: f.k(),
            family: f.family_tag(),
            s: f.sign_set().into_iter().flatten().copied().collect(),
            dist: wd
                .entries()
                .iter()
                .map(|(w, a)| WeightEntry {
                    w: w.clone(),
                    a: a.clone(),
                })
                .collect(),
        }
    }

    pub fn to_distribution(&self) -> WeightDistribution {
        let mut wd = WeightDistribution::default();
        for entry in &self.dist {
            wd.add(entry.w.clone(), entry.a.clone());
        }
        wd
    }
}

/// Wire form of a complete weight enumerator:
/// `{"terms":[{"t0":…, "t1":…, "t2":…, "mult":…}…]}` sorted lexicographically
/// by (t₀, t₁, t₂).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CweReport {
    pub terms: Vec<CweTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CweTerm {
    #[serde(with = "crate::json::bigint_string")]
    pub t0: BigInt,
    #[serde(with = "crate::json::bigint_string")]
    pub t1: BigInt,
    #[serde(with = "crate::json::bigint_string")]
    pub t2: BigInt,
    #[serde(with = "crate::json::bigint_string")]
    pub mult: BigInt,
}

impl CweReport {
    pub fn new(cwe: &CompleteWeightEnumerator) -> CweReport {
        CweReport {
            terms: cwe
                .terms()
                .iter()
                .map(|(counts, mult)| CweTerm {
                    t0: counts.t0.clone(),
                    t1: counts.t1.clone(),
                    t2: counts.t2.clone(),
                    mult: mult.clone(),
                })
                .collect(),
        }
    }

    pub fn to_enumerator(&self) -> CompleteWeightEnumerator {
        let mut cwe = CompleteWeightEnumerator::default();
        for term in &self.terms {
            cwe.add(
                SymbolCounts {
                    t0: term.t0.clone(),
                    t1: term.t1.clone(),
                    t2: term.t2.clone(),
                },
                term.mult.clone(),
            );
        }
        cwe
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(items: &[u32]) -> BTreeSet<u32> {
        items.iter().copied().collect()
    }

    fn g(m: u32, k: u32) -> WeightClassFunction {
        WeightClassFunction::family(Family::G, m, k, None).unwrap()
    }

    fn gbar(m: u32, k: u32) -> WeightClassFunction {
        WeightClassFunction::family(Family::Gbar, m, k, None).unwrap()
    }

    fn f_s(m: u32, k: u32, s: &[u32]) -> WeightClassFunction {
        WeightClassFunction::family(Family::F, m, k, Some(set(s))).unwrap()
    }

    #[test]
    fn counts_of_the_zero_codeword() {
        let table = g(5, 2).to_table();
        let counts = codeword_counts_brute(&table, F3::ZERO, &F3Vector::zero(5)).unwrap();
        assert_eq!(counts, SymbolCounts::new(242, 0, 0));
    }

    #[test]
    fn counts_of_pure_linear_codewords() {
        // u = 0, v ≠ 0 splits the nonzero coordinates evenly
        let table = g(5, 2).to_table();
        let v = F3Vector::from_index(5, 7).unwrap();
        let counts = codeword_counts_brute(&table, F3::ZERO, &v).unwrap();
        assert_eq!(counts, SymbolCounts::new(80, 81, 81));
    }

    #[test]
    fn counts_of_the_pure_function_codeword() {
        // u = 1, v = 0 on g(5,2): t₁ = |S(5,2)| = 50
        let table = g(5, 2).to_table();
        let counts = codeword_counts_brute(&table, F3::ONE, &F3Vector::zero(5)).unwrap();
        assert_eq!(counts, SymbolCounts::new(243 - 51, 50, 0));
        let closed = codeword_counts_closed(&g(5, 2), F3::ONE, 0).unwrap();
        assert_eq!(closed, counts);
    }

    #[test]
    fn preimage_counts_match_direct_enumeration() {
        // N_λ(u, v) with x = 0 added back, at a representative of each class
        let f = f_s(5, 2, &[2]);
        let table = f.to_table();
        for i in 0..=5u32 {
            let v = crate::gf3::enumerate_by_weight(5, i)[0].clone();
            for u in [F3::ZERO, F3::ONE, F3::TWO] {
                let brute = codeword_counts_brute(&table, u, &v).unwrap();
                let at_zero = u * f.evaluate(&F3Vector::zero(5)).unwrap(); // always 0
                assert!(at_zero.is_zero());
                for (lambda, t_brute) in
                    [(F3::ZERO, &brute.t0), (F3::ONE, &brute.t1), (F3::TWO, &brute.t2)]
                {
                    let n = preimage_count_closed(&f, u, i, lambda).unwrap();
                    let expected = if lambda.is_zero() { t_brute + 1 } else { t_brute.clone() };
                    assert_eq!(n, expected, "u={u} i={i} λ={lambda}");
                }
            }
        }
    }

    #[test]
    fn gbar_9_2_branch_values() {
        // u = 1, weight-1 class: N₀ = 3^8 + Ψ₂(1,9) = 6673, weight 13010
        let f = gbar(9, 2);
        let n0 = preimage_count_closed(&f, F3::ONE, 1, F3::ZERO).unwrap();
        assert_eq!(n0, BigInt::from(6673));
        let counts = codeword_counts_closed(&f, F3::ONE, 1).unwrap();
        assert_eq!(counts.t0, BigInt::from(6672));
        assert_eq!(counts.weight(), BigInt::from(13010));
        // u = 1, weight-0 class: (162, 19520, 0)
        let counts = codeword_counts_closed(&f, F3::ONE, 0).unwrap();
        assert_eq!(counts, SymbolCounts::new(162, 19520, 0));
        assert_eq!(counts.weight(), BigInt::from(19520));
    }

    #[test]
    fn negating_u_mirrors_the_symbol_counts() {
        let f = f_s(5, 2, &[1]);
        for i in 0..=5u32 {
            let plus = codeword_counts_closed(&f, F3::ONE, i).unwrap();
            let minus = codeword_counts_closed(&f, F3::TWO, i).unwrap();
            assert_eq!(plus.t0, minus.t0);
            assert_eq!(plus.t1, minus.t2);
            assert_eq!(plus.t2, minus.t1);
        }
    }

    #[test]
    fn case_formulas_for_family_f() {
        // the printed per-case values are regression tests of the engine
        let m = 7u32;
        let k = 3u32;
        let s = set(&[1, 3]);
        let f = WeightClassFunction::family(Family::F, m, k, Some(s.clone())).unwrap();
        let sigma: BigInt = (1..=k)
            .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
            .sum();
        let a_size = crate::function::set_a_size(m, &s);
        let p3m1 = BigInt::from(3).pow(m - 1);

        // u ≠ 0, v = 0
        assert_eq!(
            preimage_count_closed(&f, F3::ONE, 0, F3::ONE).unwrap(),
            &sigma - &a_size
        );
        assert_eq!(
            preimage_count_closed(&f, F3::ONE, 0, F3::TWO).unwrap(),
            a_size.clone()
        );
        assert_eq!(
            preimage_count_closed(&f, F3::ONE, 0, F3::ZERO).unwrap(),
            BigInt::from(3).pow(m) - &sigma
        );

        // u ≠ 0, wt(v) = i ≥ 1
        for i in 1..=m {
            let psi = crate::combinatorics::lloyd(k, i, m, 3);
            let t_s: BigInt = s.iter().map(|&t| krawtchouk(t, i, m, 3)).sum();
            assert_eq!(
                preimage_count_closed(&f, F3::ONE, i, F3::ONE).unwrap(),
                &p3m1 + &psi - &t_s - 1
            );
            assert_eq!(
                preimage_count_closed(&f, F3::ONE, i, F3::TWO).unwrap(),
                &p3m1 + &t_s
            );
            assert_eq!(
                preimage_count_closed(&f, F3::ONE, i, F3::ZERO).unwrap(),
                &p3m1 - &psi + 1
            );
        }

        // u = 0
        assert_eq!(
            preimage_count_closed(&f, F3::ZERO, 0, F3::ZERO).unwrap(),
            BigInt::from(3).pow(m)
        );
        for lambda in [F3::ONE, F3::TWO] {
            assert_eq!(
                preimage_count_closed(&f, F3::ZERO, 0, lambda).unwrap(),
                BigInt::zero()
            );
        }
        for i in 1..=m {
            for lambda in [F3::ZERO, F3::ONE, F3::TWO] {
                assert_eq!(
                    preimage_count_closed(&f, F3::ZERO, i, lambda).unwrap(),
                    p3m1,
                    "i={i} λ={lambda}"
                );
            }
        }
    }

    #[test]
    fn g52_weight_distribution() {
        let wd = weight_distribution_closed(&g(5, 2)).unwrap();
        let expected: Vec<(i64, i64)> =
            vec![(0, 1), (50, 2), (158, 320), (162, 242), (167, 144), (185, 20)];
        let got: Vec<(BigInt, BigInt)> = wd
            .entries()
            .iter()
            .map(|(w, a)| (w.clone(), a.clone()))
            .collect();
        let expected: Vec<(BigInt, BigInt)> = expected
            .into_iter()
            .map(|(w, a)| (BigInt::from(w), BigInt::from(a)))
            .collect();
        assert_eq!(got, expected);
        assert_eq!(wd.total(), BigInt::from(729));
        assert_eq!(wd.min_nonzero_weight(), Some(&BigInt::from(50)));
    }

    #[test]
    fn closed_equals_brute_for_g52() {
        let f = g(5, 2);
        let budget = Budget::default();
        let (wd_brute, cwe_brute_tbl) = brute_tables(&f.to_table(), &budget).unwrap();
        assert_eq!(weight_distribution_closed(&f).unwrap(), wd_brute);
        assert_eq!(cwe_closed(&f).unwrap(), cwe_brute_tbl);
        assert_eq!(cwe_brute_tbl.to_weight_distribution(), wd_brute);
    }

    #[test]
    fn gbar52_minimum_weight() {
        // 3^5 − 3^4 − 4·C(4,2) = 138
        let wd = weight_distribution_brute(&gbar(5, 2).to_table(), &Budget::default()).unwrap();
        assert_eq!(wd.min_nonzero_weight(), Some(&BigInt::from(138)));
    }

    #[test]
    fn f_families_share_g_weight_distribution_but_not_cwe() {
        let base = weight_distribution_closed(&g(5, 2)).unwrap();
        let g_cwe = cwe_closed(&g(5, 2)).unwrap();
        for s in [&[1][..], &[2][..], &[1, 2][..]] {
            let f = f_s(5, 2, s);
            assert_eq!(weight_distribution_closed(&f).unwrap(), base);
            let f_cwe = cwe_closed(&f).unwrap();
            if s == [1, 2] {
                // S = [k] negates the whole function: same code, same CWE
                assert_eq!(f_cwe, g_cwe);
            } else {
                assert_ne!(f_cwe, g_cwe);
            }
        }
    }

    #[test]
    fn cwe_monomials_have_total_degree_n() {
        let cwe = cwe_closed(&f_s(5, 2, &[1])).unwrap();
        let n = BigInt::from(242);
        for counts in cwe.terms().keys() {
            assert_eq!(counts.total(), n);
        }
        assert_eq!(cwe.total(), BigInt::from(729));
    }

    #[test]
    fn f_pure_function_monomial() {
        // u = 1, v = 0 term: ω₀^{3^m−Σ−1} ω₁^{Σ−|A|} ω₂^{|A|}
        let s = set(&[1]);
        let f = f_s(5, 2, &[1]);
        let sigma = BigInt::from(50);
        let a_size = crate::function::set_a_size(5, &s);
        let counts = codeword_counts_closed(&f, F3::ONE, 0).unwrap();
        assert_eq!(counts.t0, BigInt::from(243) - &sigma - 1);
        assert_eq!(counts.t1, &sigma - &a_size);
        assert_eq!(counts.t2, a_size);
    }

    #[test]
    fn codeword_weight_matches_walsh_real_part() {
        // for u ≠ 0 and wt(v) = i: 3·weight(u,v) = 2·3^m − 2·Re f̂(v)
        use crate::walsh::walsh_re2_class;
        for f in [g(5, 2), gbar(6, 2), f_s(5, 2, &[1, 2])] {
            let m = f.m();
            let two_p3m = BigInt::from(2) * BigInt::from(3).pow(m);
            for i in 0..=m {
                let re2 = walsh_re2_class(&f, i);
                for u in [F3::ONE, F3::TWO] {
                    let n0 = preimage_count_closed(&f, u, i, F3::ZERO).unwrap();
                    let weight = BigInt::from(3).pow(m) - n0;
                    assert_eq!(
                        BigInt::from(3) * weight + &re2,
                        two_p3m,
                        "{} u={u} i={i}",
                        f.label()
                    );
                }
            }
        }
    }

    #[test]
    fn complement_family_row_weights() {
        // weight at (u ≠ 0, wt(v) = i) for gbar is 3^m − 3^{m−1} − Ψ_k(i,m)
        for (m, k) in [(5u32, 2u32), (7, 3), (9, 2)] {
            let f = gbar(m, k);
            let base = BigInt::from(3).pow(m) - BigInt::from(3).pow(m - 1);
            for i in 1..=m {
                let counts = codeword_counts_closed(&f, F3::ONE, i).unwrap();
                assert_eq!(
                    counts.weight(),
                    &base - crate::combinatorics::lloyd(k, i, m, 3),
                    "m={m} k={k} i={i}"
                );
            }
        }
    }

    #[test]
    fn parameters_for_known_codes() {
        let spec = parameters(&gbar(9, 2)).unwrap();
        assert_eq!(spec.n(), &BigInt::from(19682));
        assert_eq!(spec.dim(), 10);
        assert_eq!(spec.d(), &BigInt::from(13010));
        assert_eq!(spec.w_max(), &BigInt::from(19520));

        let spec = parameters(&g(9, 2)).unwrap();
        assert_eq!(spec.d(), &BigInt::from(162));

        let spec = parameters(&g(5, 2)).unwrap();
        assert_eq!(spec.n(), &BigInt::from(242));
        assert_eq!(spec.dim(), 6);
        assert_eq!(spec.d(), &BigInt::from(50));
    }

    #[test]
    fn gbar_beats_g_on_distance() {
        for m in 5..=10u32 {
            for k in 2..=(m - 1) / 2 {
                let d_g = parameters(&g(m, k)).unwrap().d().clone();
                let d_gbar = parameters(&gbar(m, k)).unwrap().d().clone();
                assert!(d_gbar > d_g, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn parameters_reject_the_zero_function() {
        let zero = WeightClassFunction::custom(5, vec![F3::ZERO; 6]).unwrap();
        assert!(matches!(
            parameters(&zero),
            Err(Error::LinearlyCoincident { .. })
        ));
    }

    #[test]
    fn brute_budget_refusal() {
        let err = brute_tables(&g(8, 2).to_table(), &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn generator_matrix_shape_and_rank() {
        let gen = generator_matrix(&g(5, 2)).unwrap();
        assert_eq!(gen.n(), 242);
        assert_eq!(gen.dim(), 6);
        assert_eq!(gen.rank(), 6);
        // u = 0 rows have weight 2·3^{m−1}
        for row in &gen.rows()[1..] {
            let weight = row.iter().filter(|c| !c.is_zero()).count();
            assert_eq!(weight, 162);
        }
    }

    #[test]
    fn generator_matrix_text_round_trip() {
        let gen = generator_matrix(&g(5, 2)).unwrap();
        let text = gen.to_text();
        assert!(text.starts_with("5 2 g 242 6\n"), "bad header");
        let parsed = GeneratorMatrix::parse_text(&text).unwrap();
        assert_eq!(parsed, gen);
        // row-span enumeration reproduces the closed-form distribution
        assert_eq!(
            parsed.row_span_weight_distribution(),
            weight_distribution_closed(&g(5, 2)).unwrap()
        );
    }

    #[test]
    fn report_round_trips() {
        let f = f_s(5, 2, &[1]);
        let wd = weight_distribution_closed(&f).unwrap();
        let report = WeightDistributionReport::new(&f, &wd);
        let json = serde_json::to_string(&report).unwrap();
        let back: WeightDistributionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_distribution(), wd);

        let cwe = cwe_closed(&f).unwrap();
        let report = CweReport::new(&cwe);
        let json = serde_json::to_string(&report).unwrap();
        let back: CweReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_enumerator(), cwe);
        // decimal strings, not JSON numbers
        assert!(json.contains("\"t0\":\""), "{json}");
    }
}
