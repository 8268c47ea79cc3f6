//! Arithmetic and enumeration over 𝔽₃ and 𝔽₃^m.
//!
//! Elements of 𝔽₃ are the residues {0, 1, 2} with 2 ≡ −1. Vectors carry a
//! canonical index: the base-3 value of their coordinates, most significant
//! digit first, so index 0 is the zero vector and indices 1..3^m−1 enumerate
//! 𝔽₃^m∖{0} in lexicographic order. Every table-driven computation in the
//! crate (function tables, Walsh spectra, codeword coordinates) uses this
//! ordering, which makes parallel consumption a matter of splitting index
//! ranges.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// An element of 𝔽₃, stored as a residue in {0, 1, 2}.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3(u8);

impl F3 {
    pub const ZERO: F3 = F3(0);
    pub const ONE: F3 = F3(1);
    /// 2 ≡ −1.
    pub const TWO: F3 = F3(2);

    /// Wraps a residue, rejecting values outside {0, 1, 2}.
    pub fn new(value: u8) -> Result<F3> {
        if value < 3 {
            Ok(F3(value))
        } else {
            Err(Error::ParameterRange(format!(
                "F3 residue must be 0, 1 or 2, got {value}"
            )))
        }
    }

    /// Reduces an arbitrary integer mod 3.
    pub const fn from_residue(value: u64) -> F3 {
        F3((value % 3) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Additive inverse: negate(1) = 2, negate(2) = 1, negate(0) = 0.
    pub const fn negate(self) -> F3 {
        F3((3 - self.0) % 3)
    }
}

impl std::ops::Add for F3 {
    type Output = F3;
    fn add(self, rhs: F3) -> F3 {
        F3((self.0 + rhs.0) % 3)
    }
}

impl std::ops::Sub for F3 {
    type Output = F3;
    fn sub(self, rhs: F3) -> F3 {
        F3((self.0 + 3 - rhs.0) % 3)
    }
}

impl std::ops::Mul for F3 {
    type Output = F3;
    fn mul(self, rhs: F3) -> F3 {
        F3((self.0 * rhs.0) % 3)
    }
}

impl std::ops::Neg for F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        self.negate()
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for F3 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for F3 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<F3, D::Error> {
        let v = u8::deserialize(deserializer)?;
        F3::new(v).map_err(serde::de::Error::custom)
    }
}

/// 3^m as a `u64`. Panics beyond m = 39 where it would overflow; every
/// table-driven path in the crate is budget-capped far below that.
pub fn pow3(m: u32) -> u64 {
    assert!(m <= 39, "3^{m} exceeds u64");
    3u64.pow(m)
}

/// A vector in 𝔽₃^m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3Vector {
    coords: Vec<F3>,
}

impl F3Vector {
    pub fn new(coords: Vec<F3>) -> F3Vector {
        F3Vector { coords }
    }

    pub fn zero(m: u32) -> F3Vector {
        F3Vector {
            coords: vec![F3::ZERO; m as usize],
        }
    }

    /// Ambient dimension m.
    pub fn m(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn coords(&self) -> &[F3] {
        &self.coords
    }

    /// Hamming weight: the number of nonzero coordinates, |Supp(v)|.
    pub fn weight(&self) -> u32 {
        self.coords.iter().filter(|c| !c.is_zero()).count() as u32
    }

    /// Positions (0-based) of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinatewise additive inverse.
    pub fn negate(&self) -> F3Vector {
        F3Vector {
            coords: self.coords.iter().map(|c| c.negate()).collect(),
        }
    }

    /// Canonical index: base-3 value of the coordinates, most significant
    /// digit first.
    pub fn index(&self) -> u64 {
        self.coords
            .iter()
            .fold(0u64, |acc, c| acc * 3 + u64::from(c.value()))
    }

    /// Inverse of [`F3Vector::index`]; accepts 0..3^m−1 (0 is the zero
    /// vector).
    pub fn from_index(m: u32, index: u64) -> Result<F3Vector> {
        let n = pow3(m);
        if index >= n {
            return Err(Error::IndexOutOfRange {
                index,
                lo: 0,
                hi: n - 1,
            });
        }
        let mut coords = vec![F3::ZERO; m as usize];
        let mut rest = index;
        for j in (0..m as usize).rev() {
            coords[j] = F3::from_residue(rest);
            rest /= 3;
        }
        Ok(F3Vector { coords })
    }

    /// Σ u_j v_j mod 3.
    pub fn inner_product(&self, other: &F3Vector) -> Result<F3> {
        if self.m() != other.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: other.m(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(F3::ZERO, |acc, (a, b)| acc + *a * *b))
    }
}

impl fmt::Display for F3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Σ u_j v_j mod 3; rejects vectors of different dimension.
pub fn inner_product(u: &F3Vector, v: &F3Vector) -> Result<F3> {
    u.inner_product(v)
}

/// Hamming weight of `v`.
pub fn weight(v: &F3Vector) -> u32 {
    v.weight()
}

/// The j-th nonzero vector of 𝔽₃^m in canonical order, for 1 ≤ j ≤ 3^m−1.
/// Bijective onto 𝔽₃^m∖{0}.
pub fn coordinate_vector(m: u32, j: u64) -> Result<F3Vector> {
    let n = pow3(m);
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange {
            index: j,
            lo: 1,
            hi: n - 1,
        });
    }
    F3Vector::from_index(m, j)
}

/// All 2^i·C(m,i) vectors of weight exactly `i`, in a deterministic order:
/// lexicographic over support position sets, then lexicographic over the
/// nonzero digit patterns on that support.
pub fn enumerate_by_weight(m: u32, i: u32) -> Vec<F3Vector> {
    assert!(i <= m, "weight class {i} exceeds dimension {m}");
    use itertools::Itertools;
    let mut out = Vec::new();
    if i == 0 {
        out.push(F3Vector::zero(m));
        return out;
    }
    for support in (0..m as usize).combinations(i as usize) {
        for pattern in 0u64..(1 << i) {
            let mut coords = vec![F3::ZERO; m as usize];
            for (t, &pos) in support.iter().enumerate() {
                let bit = (pattern >> (i as usize - 1 - t)) & 1;
                coords[pos] = if bit == 0 { F3::ONE } else { F3::TWO };
            }
            out.push(F3Vector::new(coords));
        }
    }
    out
}

/// Table of v·x for every x-index in 0..3^m, built by the tensor recurrence
/// dot(d·3^t + r) = dot(r) + d·v_{m−1−t}.
pub(crate) fn dot_table(v: &F3Vector) -> Vec<u8> {
    let m = v.m() as usize;
    let mut dots = vec![0u8; pow3(m as u32) as usize];
    let mut len = 1usize;
    for t in 0..m {
        let vj = v.coords()[m - 1 - t].value();
        for d in 1..3u8 {
            let add = (d * vj) % 3;
            let (head, tail) = dots.split_at_mut(d as usize * len);
            for (dst, src) in tail[..len].iter_mut().zip(&head[..len]) {
                *dst = (src + add) % 3;
            }
        }
        len *= 3;
    }
    dots
}

/// Table of Hamming weights for every x-index in 0..3^m.
pub(crate) fn weight_table(m: u32) -> Vec<u8> {
    let mut wt = vec![0u8; pow3(m) as usize];
    let mut len = 1usize;
    for _ in 0..m {
        for d in 1..3usize {
            let (head, tail) = wt.split_at_mut(d * len);
            for (dst, src) in tail[..len].iter_mut().zip(&head[..len]) {
                *dst = src + 1;
            }
        }
        len *= 3;
    }
    wt
}

/// Table mapping each x-index to the index of 2x (coordinatewise doubling).
pub(crate) fn double_index_table(m: u32) -> Vec<u64> {
    let mut dbl = vec![0u64; pow3(m) as usize];
    let mut len = 1usize;
    for _ in 0..m {
        for d in 1..3u64 {
            let doubled = (2 * d) % 3;
            let (head, tail) = dbl.split_at_mut(d as usize * len);
            for (dst, src) in tail[..len].iter_mut().zip(&head[..len]) {
                *dst = src + doubled * len as u64;
            }
        }
        len *= 3;
    }
    dbl
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_negation() {
        assert_eq!(F3::ONE.negate(), F3::TWO);
        assert_eq!(F3::TWO.negate(), F3::ONE);
        assert_eq!(F3::ZERO.negate(), F3::ZERO);
    }

    #[test]
    fn f3_rejects_bad_residue() {
        assert!(F3::new(3).is_err());
    }

    fn vec_of(vals: &[u8]) -> F3Vector {
        F3Vector::new(vals.iter().map(|&v| F3::new(v).unwrap()).collect())
    }

    #[test]
    fn inner_product_examples() {
        // zero vector annihilates
        assert_eq!(
            inner_product(&vec_of(&[0, 0, 0]), &vec_of(&[1, 2, 0])).unwrap(),
            F3::ZERO
        );
        // 1·2 + 2·2 = 6 ≡ 0
        assert_eq!(
            inner_product(&vec_of(&[1, 2]), &vec_of(&[2, 2])).unwrap(),
            F3::ZERO
        );
        // 3 ≡ 0
        assert_eq!(
            inner_product(&vec_of(&[1, 1, 1]), &vec_of(&[1, 1, 1])).unwrap(),
            F3::ZERO
        );
    }

    #[test]
    fn inner_product_rejects_dimension_mismatch() {
        let err = inner_product(&vec_of(&[1, 2]), &vec_of(&[1, 2, 0])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&vec_of(&[0, 0, 0])), 0);
        assert_eq!(weight(&vec_of(&[0, 1, 2])), 2);
        assert_eq!(weight(&vec_of(&[1; 7])), 7);
    }

    #[test]
    fn coordinate_vector_examples() {
        assert_eq!(coordinate_vector(2, 1).unwrap(), vec_of(&[0, 1]));
        assert_eq!(coordinate_vector(2, 3).unwrap(), vec_of(&[1, 0]));
        assert_eq!(coordinate_vector(2, 8).unwrap(), vec_of(&[2, 2]));
        assert!(coordinate_vector(2, 0).is_err());
        assert!(coordinate_vector(2, 9).is_err());
    }

    #[test]
    fn coordinate_vector_is_a_bijection() {
        for m in 1..=8 {
            let n = pow3(m);
            let mut seen = std::collections::HashSet::new();
            for j in 1..n {
                let v = coordinate_vector(m, j).unwrap();
                assert!(!v.is_zero());
                assert_eq!(v.index(), j);
                assert!(seen.insert(v));
            }
            assert_eq!(seen.len() as u64, n - 1);
        }
    }

    #[test]
    fn enumerate_by_weight_class_sizes() {
        assert_eq!(enumerate_by_weight(5, 0).len(), 1);
        assert_eq!(enumerate_by_weight(5, 1).len(), 10); // 2·C(5,1)
        assert_eq!(enumerate_by_weight(5, 2).len(), 40); // 2²·C(5,2)
    }

    #[test]
    fn weight_classes_partition_the_space() {
        for m in 1..=6 {
            let mut all = std::collections::HashSet::new();
            let mut total = 0u64;
            for i in 0..=m {
                let class = enumerate_by_weight(m, i);
                for v in &class {
                    assert_eq!(v.weight(), i);
                }
                total += class.len() as u64;
                all.extend(class);
            }
            assert_eq!(total, pow3(m));
            assert_eq!(all.len() as u64, pow3(m));
        }
    }

    #[test]
    fn dot_table_matches_inner_product() {
        let v = vec_of(&[2, 0, 1, 1]);
        let dots = dot_table(&v);
        for idx in 0..pow3(4) {
            let x = F3Vector::from_index(4, idx).unwrap();
            assert_eq!(dots[idx as usize], v.inner_product(&x).unwrap().value());
        }
    }

    #[test]
    fn weight_and_double_tables() {
        let wt = weight_table(4);
        let dbl = double_index_table(4);
        for idx in 0..pow3(4) {
            let x = F3Vector::from_index(4, idx).unwrap();
            assert_eq!(u32::from(wt[idx as usize]), x.weight());
            let doubled = F3Vector::new(x.coords().iter().map(|c| *c + *c).collect());
            assert_eq!(dbl[idx as usize], doubled.index());
        }
    }
}
