//! Weight-class functions 𝔽₃^m → 𝔽₃ and plain function tables.
//!
//! A weight-class function is constant on Hamming-weight classes: it is
//! determined by its class values c₀..c_m with c₀ = 0. The three built-in
//! families, for a level k and (for `f`) a nonempty sign set S ⊆ {1..k}, are
//!
//! * `g`    — 1 on weights 1..k, 0 elsewhere (indicator of S(m,k), the
//!   nonzero vectors of weight at most k);
//! * `gbar` — 1 on weights k+1..m, 0 elsewhere (indicator of the complement
//!   of S(m,k) in 𝔽₃^m∖{0});
//! * `f`    — −1 (stored as 2) on weights in S, +1 on weights in {1..k}∖S,
//!   0 elsewhere.
//!
//! The closed-form machinery in [`crate::code`] and [`crate::walsh`] works
//! uniformly from the class-value table, so custom tables get the same
//! treatment as the named families. The guaranteed parameter range is m ≥ 5,
//! 2 ≤ k ≤ ⌊(m−1)/2⌋; `family_unchecked` bypasses that single check for
//! exploration while keeping all structural validation.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::gf3::{pow3, weight_table, F3, F3Vector};

/// Tag of a weight-class function family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G,
    Gbar,
    F,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::G => "g",
            Family::Gbar => "gbar",
            Family::F => "f",
            Family::Custom => "custom",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "g" => Ok(Family::G),
            "gbar" => Ok(Family::Gbar),
            "f" => Ok(Family::F),
            "custom" => Ok(Family::Custom),
            other => Err(Error::Parse(format!(
                "unknown family {other:?}; expected g, gbar, f or custom"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A function 𝔽₃^m → 𝔽₃ constant on Hamming-weight classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ClassFunctionRepr", into = "ClassFunctionRepr")]
pub struct WeightClassFunction {
    m: u32,
    class_values: Vec<F3>,
    family: Family,
    k: Option<u32>,
    s: Option<BTreeSet<u32>>,
}

/// Wire form of a weight-class function:
/// `{"m":…, "k":…, "S":[…], "family":…, "class_values":[…]}`.
#[derive(Serialize, Deserialize)]
struct ClassFunctionRepr {
    m: u32,
    k: Option<u32>,
    #[serde(rename = "S", default)]
    s: Vec<u32>,
    family: Family,
    class_values: Vec<u8>,
}

impl From<WeightClassFunction> for ClassFunctionRepr {
    fn from(f: WeightClassFunction) -> ClassFunctionRepr {
        ClassFunctionRepr {
            m: f.m,
            k: f.k,
            s: f.s.iter().flatten().copied().collect(),
            family: f.family,
            class_values: f.class_values.iter().map(|c| c.value()).collect(),
        }
    }
}

impl TryFrom<ClassFunctionRepr> for WeightClassFunction {
    type Error = Error;
    fn try_from(repr: ClassFunctionRepr) -> Result<WeightClassFunction> {
        let s: BTreeSet<u32> = repr.s.iter().copied().collect();
        match repr.family {
            Family::Custom => {
                let values = repr
                    .class_values
                    .iter()
                    .map(|&v| F3::new(v))
                    .collect::<Result<Vec<_>>>()?;
                WeightClassFunction::custom(repr.m, values)
            }
            family => {
                let k = repr.k.ok_or_else(|| {
                    Error::Parse(format!("family {} requires k", family.as_str()))
                })?;
                let rebuilt = WeightClassFunction::family_unchecked(
                    family,
                    repr.m,
                    k,
                    if s.is_empty() { None } else { Some(s) },
                )?;
                let stored: Vec<u8> = rebuilt.class_values.iter().map(|c| c.value()).collect();
                if stored != repr.class_values {
                    return Err(Error::Parse(
                        "class_values do not match the named family".into(),
                    ));
                }
                Ok(rebuilt)
            }
        }
    }
}

fn check_structural(m: u32, k: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::ParameterRange("m must be at least 1".into()));
    }
    if k == 0 || k > m {
        return Err(Error::ParameterRange(format!(
            "k must satisfy 1 ≤ k ≤ m, got k = {k}, m = {m}"
        )));
    }
    Ok(())
}

fn check_guaranteed_range(m: u32, k: u32) -> Result<()> {
    if m < 5 {
        return Err(Error::ParameterRange(format!(
            "m ≥ 5 required, got m = {m}"
        )));
    }
    if k < 2 || k > (m - 1) / 2 {
        return Err(Error::ParameterRange(format!(
            "2 ≤ k ≤ ⌊(m−1)/2⌋ = {} required, got k = {k}",
            (m - 1) / 2
        )));
    }
    Ok(())
}

impl WeightClassFunction {
    /// Builds a named family member inside the guaranteed range
    /// (m ≥ 5, 2 ≤ k ≤ ⌊(m−1)/2⌋). `s` is required (nonempty, ⊆ {1..k})
    /// for family `f` and must be absent otherwise.
    pub fn family(
        family: Family,
        m: u32,
        k: u32,
        s: Option<BTreeSet<u32>>,
    ) -> Result<WeightClassFunction> {
        check_guaranteed_range(m, k)?;
        WeightClassFunction::family_unchecked(family, m, k, s)
    }

    /// Same as [`WeightClassFunction::family`] but without the guaranteed
    /// range check; closed-form claims are only made inside the range.
    pub fn family_unchecked(
        family: Family,
        m: u32,
        k: u32,
        s: Option<BTreeSet<u32>>,
    ) -> Result<WeightClassFunction> {
        check_structural(m, k)?;
        if family != Family::F && s.is_some() {
            return Err(Error::ParameterRange(format!(
                "family {} takes no sign set S",
                family.as_str()
            )));
        }
        let mut class_values = vec![F3::ZERO; m as usize + 1];
        let s = match family {
            Family::G => {
                for j in 1..=k {
                    class_values[j as usize] = F3::ONE;
                }
                None
            }
            Family::Gbar => {
                for j in k + 1..=m {
                    class_values[j as usize] = F3::ONE;
                }
                None
            }
            Family::F => {
                let s = s.ok_or_else(|| {
                    Error::ParameterRange("family f requires a nonempty sign set S".into())
                })?;
                if s.is_empty() {
                    return Err(Error::ParameterRange(
                        "family f requires a nonempty sign set S".into(),
                    ));
                }
                if let Some(&bad) = s.iter().find(|&&j| j == 0 || j > k) {
                    return Err(Error::ParameterRange(format!(
                        "S must be a subset of {{1..{k}}}, got element {bad}"
                    )));
                }
                for j in 1..=k {
                    class_values[j as usize] =
                        if s.contains(&j) { F3::TWO } else { F3::ONE };
                }
                Some(s)
            }
            Family::Custom => {
                return Err(Error::ParameterRange(
                    "use WeightClassFunction::custom for custom class tables".into(),
                ))
            }
        };
        Ok(WeightClassFunction {
            m,
            class_values,
            family,
            k: Some(k),
            s,
        })
    }

    /// Wraps an arbitrary class-value table c₀..c_m with c₀ = 0.
    pub fn custom(m: u32, class_values: Vec<F3>) -> Result<WeightClassFunction> {
        if m == 0 {
            return Err(Error::ParameterRange("m must be at least 1".into()));
        }
        if class_values.len() != m as usize + 1 {
            return Err(Error::ParameterRange(format!(
                "class table must have m + 1 = {} entries, got {}",
                m + 1,
                class_values.len()
            )));
        }
        if !class_values[0].is_zero() {
            return Err(Error::ParameterRange(
                "class value c₀ must be 0 (the function must vanish at 0)".into(),
            ));
        }
        Ok(WeightClassFunction {
            m,
            class_values,
            family: Family::Custom,
            k: None,
            s: None,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn family_tag(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    pub fn sign_set(&self) -> Option<&BTreeSet<u32>> {
        self.s.as_ref()
    }

    /// Class values c₀..c_m.
    pub fn class_values(&self) -> &[F3] {
        &self.class_values
    }

    /// c_j for a weight class j ≤ m.
    pub fn class_value(&self, j: u32) -> F3 {
        self.class_values[j as usize]
    }

    /// f(x) = c_{wt(x)}.
    pub fn evaluate(&self, x: &F3Vector) -> Result<F3> {
        if x.m() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                got: x.m(),
            });
        }
        Ok(self.class_values[x.weight() as usize])
    }

    /// Expands the class table to a full function table over 𝔽₃^m.
    pub fn to_table(&self) -> FunctionTable {
        let wt = weight_table(self.m);
        FunctionTable {
            m: self.m,
            values: wt
                .iter()
                .map(|&w| self.class_values[w as usize])
                .collect(),
        }
    }

    /// The unique linear form the function coincides with, if any.
    ///
    /// A weight-class function can only coincide with w·x for w = 0: taking
    /// x = e_j and x = 2e_j forces c₁ = w_j = 2w_j, so every w_j = 0, and
    /// then the whole class table must vanish. Cross-checked against the
    /// table scan in the Walsh module's tests.
    pub fn linear_coincidence(&self) -> Option<F3Vector> {
        if self.class_values.iter().all(|c| c.is_zero()) {
            Some(F3Vector::zero(self.m))
        } else {
            None
        }
    }

    /// A compact human-readable label, e.g. `gbar(m=9,k=2)` or
    /// `f(m=5,k=2,S={1,2})`.
    pub fn label(&self) -> String {
        let mut out = format!("{}(m={}", self.family.as_str(), self.m);
        if let Some(k) = self.k {
            out.push_str(&format!(",k={k}"));
        }
        if let Some(s) = &self.s {
            let items: Vec<String> = s.iter().map(|j| j.to_string()).collect();
            out.push_str(&format!(",S={{{}}}", items.join(",")));
        }
        out.push(')');
        out
    }
}

/// A plain table of values of some 𝔽₃^m → 𝔽₃ function, indexed canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    m: u32,
    values: Vec<F3>,
}

impl FunctionTable {
    pub fn new(m: u32, values: Vec<F3>) -> Result<FunctionTable> {
        if values.len() as u64 != pow3(m) {
            return Err(Error::ParameterRange(format!(
                "table for m = {m} must have 3^{m} = {} entries, got {}",
                pow3(m),
                values.len()
            )));
        }
        Ok(FunctionTable { m, values })
    }

    pub fn from_fn(m: u32, mut f: impl FnMut(&F3Vector) -> F3) -> FunctionTable {
        let values = (0..pow3(m))
            .map(|idx| f(&F3Vector::from_index(m, idx).expect("index in range")))
            .collect();
        FunctionTable { m, values }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[F3] {
        &self.values
    }

    pub fn value_at_index(&self, index: u64) -> F3 {
        self.values[index as usize]
    }
}

/// |A| for A = {x ∈ 𝔽₃^m : wt(x) ∈ S}, i.e. Σ_{j∈S} 2^j·C(m,j).
pub fn set_a_size(m: u32, s: &BTreeSet<u32>) -> BigInt {
    s.iter()
        .map(|&j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
        .sum()
}

/// A sign set S together with the size of the vector set it selects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetA {
    s: BTreeSet<u32>,
    size: BigInt,
}

impl SetA {
    pub fn new(m: u32, s: BTreeSet<u32>) -> SetA {
        let size = set_a_size(m, &s);
        SetA { s, size }
    }

    pub fn sign_set(&self) -> &BTreeSet<u32> {
        &self.s
    }

    pub fn size(&self) -> &BigInt {
        &self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[u32]) -> BTreeSet<u32> {
        items.iter().copied().collect()
    }

    #[test]
    fn family_g_class_table() {
        let g = WeightClassFunction::family(Family::G, 5, 2, None).unwrap();
        let values: Vec<u8> = g.class_values().iter().map(|c| c.value()).collect();
        assert_eq!(values, vec![0, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn family_f_class_table() {
        let f = WeightClassFunction::family(Family::F, 5, 2, Some(set(&[2]))).unwrap();
        let values: Vec<u8> = f.class_values().iter().map(|c| c.value()).collect();
        assert_eq!(values, vec![0, 1, 2, 0, 0, 0]);
    }

    #[test]
    fn family_gbar_class_table() {
        let gbar = WeightClassFunction::family(Family::Gbar, 5, 2, None).unwrap();
        let values: Vec<u8> = gbar.class_values().iter().map(|c| c.value()).collect();
        assert_eq!(values, vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn range_violations_are_named() {
        let err = WeightClassFunction::family(Family::F, 4, 2, Some(set(&[1]))).unwrap_err();
        assert!(err.to_string().contains("m ≥ 5"), "{err}");
        let err = WeightClassFunction::family(Family::G, 9, 5, None).unwrap_err();
        assert!(err.to_string().contains("⌊(m−1)/2⌋"), "{err}");
        let err = WeightClassFunction::family(Family::F, 5, 2, Some(set(&[]))).unwrap_err();
        assert!(err.to_string().contains("nonempty"), "{err}");
        let err = WeightClassFunction::family(Family::F, 5, 2, Some(set(&[3]))).unwrap_err();
        assert!(err.to_string().contains("subset"), "{err}");
    }

    #[test]
    fn unchecked_allows_out_of_range_but_not_malformed() {
        assert!(WeightClassFunction::family_unchecked(Family::G, 4, 1, None).is_ok());
        assert!(WeightClassFunction::family_unchecked(Family::G, 4, 5, None).is_err());
    }

    #[test]
    fn evaluate_by_weight_class() {
        let g = WeightClassFunction::family(Family::G, 5, 2, None).unwrap();
        assert_eq!(g.evaluate(&F3Vector::zero(5)).unwrap(), F3::ZERO);
        let w2 = F3Vector::from_index(5, 4).unwrap(); // (0,0,0,1,1)
        assert_eq!(w2.weight(), 2);
        assert_eq!(g.evaluate(&w2).unwrap(), F3::ONE);
        let f = WeightClassFunction::family(Family::F, 5, 2, Some(set(&[2]))).unwrap();
        assert_eq!(f.evaluate(&w2).unwrap(), F3::TWO);
        // dimension mismatch rejected
        assert!(f.evaluate(&F3Vector::zero(4)).is_err());
    }

    #[test]
    fn set_a_sizes() {
        assert_eq!(set_a_size(5, &set(&[1])), BigInt::from(10));
        assert_eq!(set_a_size(5, &set(&[1, 2])), BigInt::from(50));
        assert_eq!(set_a_size(5, &set(&[])), BigInt::from(0));
        let a = SetA::new(5, set(&[1, 2]));
        assert_eq!(a.size(), &BigInt::from(50));
    }

    #[test]
    fn g_and_gbar_partition_the_nonzero_vectors() {
        for m in [5u32, 6] {
            let g = WeightClassFunction::family(Family::G, m, 2, None).unwrap();
            let gbar = WeightClassFunction::family(Family::Gbar, m, 2, None).unwrap();
            for idx in 0..pow3(m) {
                let x = F3Vector::from_index(m, idx).unwrap();
                let total = g.evaluate(&x).unwrap() + gbar.evaluate(&x).unwrap();
                if idx == 0 {
                    assert_eq!(total, F3::ZERO);
                } else {
                    assert_eq!(total, F3::ONE);
                }
            }
        }
    }

    #[test]
    fn nonzero_count_matches_class_sizes() {
        // |{x : f(x) ≠ 0}| = Σ_{j : c_j ≠ 0} 2^j C(m,j), counted brute force
        for m in 5..=7u32 {
            let f =
                WeightClassFunction::family(Family::F, m, 2, Some(set(&[1]))).unwrap();
            let table = f.to_table();
            let nonzero = table.values().iter().filter(|v| !v.is_zero()).count();
            let expected: BigInt = (1..=m)
                .filter(|&j| !f.class_value(j).is_zero())
                .map(|j| BigInt::from(2).pow(j) * binomial(u64::from(m), i64::from(j)))
                .sum();
            assert_eq!(BigInt::from(nonzero), expected);
        }
    }

    #[test]
    fn linear_coincidence_shortcut() {
        let g = WeightClassFunction::family(Family::G, 5, 2, None).unwrap();
        assert!(g.linear_coincidence().is_none());
        let zero = WeightClassFunction::custom(3, vec![F3::ZERO; 4]).unwrap();
        assert_eq!(zero.linear_coincidence(), Some(F3Vector::zero(3)));
    }

    #[test]
    fn json_round_trip() {
        let f = WeightClassFunction::family(Family::F, 5, 2, Some(set(&[1, 2]))).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"family\":\"f\""), "{json}");
        assert!(json.contains("\"S\":[1,2]"), "{json}");
        let back: WeightClassFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);

        let custom = WeightClassFunction::custom(
            4,
            vec![F3::ZERO, F3::TWO, F3::ZERO, F3::ONE, F3::ONE],
        )
        .unwrap();
        let json = serde_json::to_string(&custom).unwrap();
        let back: WeightClassFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, custom);
    }

    #[test]
    fn table_round_trip() {
        let g = WeightClassFunction::family(Family::G, 5, 2, None).unwrap();
        let table = g.to_table();
        for idx in 0..pow3(5) {
            let x = F3Vector::from_index(5, idx).unwrap();
            assert_eq!(table.value_at_index(idx), g.evaluate(&x).unwrap());
        }
    }
}
