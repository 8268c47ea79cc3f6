//! Exact arithmetic in ℤ[ζ₃], the ring of Eisenstein integers.
//!
//! ζ₃ is the primitive cube root of unity; every element is stored as
//! a + b·ζ₃ with exact `BigInt` parts. Since 1 + ζ₃ + ζ₃² = 0, squares of ζ₃
//! reduce as ζ₃² = −1 − ζ₃ and multiplication is closed. Character sums of
//! ternary functions never leave this ring, which is why the Walsh layer can
//! avoid floating point entirely.
//!
//! Real parts of such sums are half-integers (Re(ζ₃) = −1/2), so the
//! canonical exported scalar is the doubled real part `re2(a + bζ₃) = 2a − b`,
//! an exact integer.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

use crate::gf3::F3;

/// An element a + b·ζ₃ of ℤ[ζ₃].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> EisensteinInt {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> EisensteinInt {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> EisensteinInt {
        EisensteinInt::new(1, 0)
    }

    /// n₀·ζ⁰ + n₁·ζ¹ + n₂·ζ² collapsed to the (a, b) basis:
    /// (n₀ − n₂) + (n₁ − n₂)ζ.
    pub fn from_root_counts(n0: u64, n1: u64, n2: u64) -> EisensteinInt {
        let n2 = BigInt::from(n2);
        EisensteinInt {
            a: BigInt::from(n0) - &n2,
            b: BigInt::from(n1) - n2,
        }
    }

    /// Rational part a.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// ζ₃ coefficient b.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Doubled real part 2a − b, always an exact integer.
    pub fn re2(&self) -> BigInt {
        BigInt::from(2) * &self.a - &self.b
    }

    /// Complex conjugate: ζ̄₃ = ζ₃², so conj(a + bζ) = (a − b) − bζ.
    pub fn conjugate(&self) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl std::ops::Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl std::ops::Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: EisensteinInt) -> EisensteinInt {
        &self + &rhs
    }
}

impl std::ops::Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl std::ops::Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: EisensteinInt) -> EisensteinInt {
        &self - &rhs
    }
}

impl std::ops::Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl std::ops::Mul for &EisensteinInt {
    type Output = EisensteinInt;
    /// (a + bζ)(c + dζ) = (ac − bd) + (ad + bc − bd)ζ, using ζ² = −1 − ζ.
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl std::ops::Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        &self * &rhs
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ζ", self.a, self.b)
    }
}

/// ζ₃^e for e ∈ 𝔽₃: ζ⁰ = 1, ζ¹ = ζ, ζ² = −1 − ζ.
pub fn zeta_pow(e: F3) -> EisensteinInt {
    match e.value() {
        0 => EisensteinInt::one(),
        1 => EisensteinInt::new(0, 1),
        _ => EisensteinInt::new(-1, -1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_powers() {
        assert_eq!(zeta_pow(F3::ZERO), EisensteinInt::new(1, 0));
        assert_eq!(zeta_pow(F3::ONE), EisensteinInt::new(0, 1));
        assert_eq!(zeta_pow(F3::TWO), EisensteinInt::new(-1, -1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let sum = zeta_pow(F3::ZERO) + zeta_pow(F3::ONE) + zeta_pow(F3::TWO);
        assert!(sum.is_zero());
    }

    #[test]
    fn zeta_cubed_is_one() {
        let z = zeta_pow(F3::ONE);
        assert_eq!(&(&z * &z) * &z, EisensteinInt::one());
    }

    #[test]
    fn multiplication_matches_power_addition() {
        for e1 in [F3::ZERO, F3::ONE, F3::TWO] {
            for e2 in [F3::ZERO, F3::ONE, F3::TWO] {
                assert_eq!(&zeta_pow(e1) * &zeta_pow(e2), zeta_pow(e1 + e2));
            }
        }
    }

    #[test]
    fn re2_values() {
        assert_eq!(EisensteinInt::new(5, 3).re2(), BigInt::from(7));
        // 2·Re(ζ) = −1
        assert_eq!(zeta_pow(F3::ONE).re2(), BigInt::from(-1));
        assert_eq!(zeta_pow(F3::TWO).re2(), BigInt::from(-1));
    }

    #[test]
    fn conjugation_fixes_re2_and_swaps_roots() {
        assert_eq!(zeta_pow(F3::ONE).conjugate(), zeta_pow(F3::TWO));
        let x = EisensteinInt::new(4, -7);
        assert_eq!(x.conjugate().re2(), x.re2());
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn root_counts_collapse() {
        // 3 + 2ζ + 5ζ² = (3−5) + (2−5)ζ
        assert_eq!(
            EisensteinInt::from_root_counts(3, 2, 5),
            EisensteinInt::new(-2, -3)
        );
        // equal counts of every root sum to zero
        assert!(EisensteinInt::from_root_counts(7, 7, 7).is_zero());
    }
}
