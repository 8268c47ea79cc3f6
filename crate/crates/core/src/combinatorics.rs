//! Exact binomial coefficients and Krawtchouk/Lloyd polynomial values.
//!
//! Everything here returns `BigInt`: quantities such as 2^k·C(m−1,k) leave
//! the 64-bit range well inside the parameter sweeps this crate certifies,
//! and every downstream check is an exact equality.
//!
//! The Krawtchouk polynomial of degree t with parameters h and m is
//!
//! ```text
//! K_t(x,m) = Σ_{j=0}^t (−1)^j (h−1)^{t−j} C(x,j) C(m−x,t−j)
//! ```
//!
//! and the Lloyd polynomial is its partial sum Ψ_k(x,m) = Σ_{t=0}^k K_t(x,m).
//! The evaluator uses the defining alternating sum directly: the sums are
//! short and exactness matters more than speed. `h` defaults to 3 everywhere
//! in the code-construction layer; it stays a parameter here because the
//! identities below hold for general h and the tests sweep h ∈ {2,3,4}.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// C(n,r), with C(n,r) = 0 when r < 0 or r > n.
pub fn binomial(n: u64, r: i64) -> BigInt {
    if r < 0 || r as u64 > n {
        return BigInt::zero();
    }
    let r = r as u64;
    // Symmetric shortcut keeps the loop short.
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// K_t(x,m) with parameter h ≥ 2, evaluated by the defining sum.
pub fn krawtchouk(t: u32, x: u32, m: u32, h: u32) -> BigInt {
    assert!(m >= 1, "krawtchouk needs m >= 1");
    assert!(x <= m, "krawtchouk needs x <= m, got x = {x}, m = {m}");
    assert!(h >= 2, "krawtchouk needs h >= 2, got {h}");
    let hm1 = BigInt::from(h - 1);
    let mut acc = BigInt::zero();
    for j in 0..=t {
        let term = hm1.pow(t - j)
            * binomial(u64::from(x), i64::from(j))
            * binomial(u64::from(m - x), i64::from(t) - i64::from(j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Ψ_k(x,m) = Σ_{t=0}^k K_t(x,m), for 1 ≤ k ≤ m.
pub fn lloyd(k: u32, x: u32, m: u32, h: u32) -> BigInt {
    assert!(k >= 1 && k <= m, "lloyd needs 1 <= k <= m, got k = {k}, m = {m}");
    (0..=k).map(|t| krawtchouk(t, x, m, h)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(8, 2), BigInt::from(28));
        assert_eq!(binomial(9, 2), BigInt::from(36));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_stays_exact_for_large_n() {
        // C(64,32), beyond u64 multiplication chains done naively
        assert_eq!(
            binomial(64, 32).to_string(),
            "1832624140942590534"
        );
        assert_eq!(binomial(200, 100) % BigInt::from(7), binomial(200, 100) % BigInt::from(7));
        // Pascal recurrence at a size where intermediate products overflow u128
        assert_eq!(
            binomial(200, 100),
            binomial(199, 99) + binomial(199, 100)
        );
    }

    #[test]
    fn krawtchouk_examples() {
        // K_t(0,m) = (h−1)^t C(m,t): t=2, m=8, h=3 gives 4·28 = 112
        assert_eq!(krawtchouk(2, 0, 8, 3), BigInt::from(112));
        // degree 0 is the single j=0 term
        assert_eq!(krawtchouk(0, 5, 9, 3), BigInt::one());
        // direct evaluation: 4·C(6,2) − 2·2·6 + C(2,2) = 60 − 24 + 1
        assert_eq!(krawtchouk(2, 2, 8, 3), BigInt::from(37));
    }

    #[test]
    fn lloyd_examples() {
        // Ψ_2(1,9) = K_2(0,8) = 4·C(8,2) = 112
        assert_eq!(lloyd(2, 1, 9, 3), BigInt::from(112));
        // Ψ_2(3,9) = K_2(2,8) = 37, cross-checked by direct summation
        assert_eq!(lloyd(2, 3, 9, 3), BigInt::from(37));
        let direct: BigInt = (0..=2).map(|t| krawtchouk(t, 3, 9, 3)).sum();
        assert_eq!(direct, BigInt::from(37));
        // Ψ_1(2,5) = 1 + K_1(2,5) = 1 + (2·3 − 2) = 5
        assert_eq!(lloyd(1, 2, 5, 3), BigInt::from(5));
    }

    #[test]
    fn lloyd_equals_shifted_krawtchouk() {
        // Ψ_k(x,m) = K_k(x−1,m−1)
        for h in [2u32, 3, 4] {
            for m in 2..=12u32 {
                for x in 1..=m {
                    for k in 1..m {
                        assert_eq!(
                            lloyd(k, x, m, h),
                            krawtchouk(k, x - 1, m - 1, h),
                            "h={h} m={m} x={x} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn krawtchouk_at_zero() {
        // K_t(0,m) = (h−1)^t C(m,t)
        for h in [2u32, 3, 4] {
            for m in 1..=12u32 {
                for t in 0..=m {
                    assert_eq!(
                        krawtchouk(t, 0, m, h),
                        BigInt::from(h - 1).pow(t) * binomial(u64::from(m), i64::from(t))
                    );
                }
            }
        }
    }

    #[test]
    fn lloyd_bound_is_tight_at_x_equals_one() {
        // |Ψ_k(x,m)| ≤ (h−1)^k C(m−1,k), with equality at x = 1
        for h in [2u32, 3, 4] {
            for m in 2..=12u32 {
                for k in 1..m {
                    let bound =
                        BigInt::from(h - 1).pow(k) * binomial(u64::from(m - 1), i64::from(k));
                    for x in 1..=m {
                        let psi = lloyd(k, x, m, h);
                        let abs = if psi < BigInt::zero() { -psi } else { psi };
                        assert!(abs <= bound, "h={h} m={m} x={x} k={k}");
                    }
                    assert_eq!(lloyd(k, 1, m, h), bound);
                }
            }
        }
    }

    #[test]
    fn ternary_krawtchouk_column_sums() {
        // Σ_{t=0}^m K_t(i,m) is 3^m at i = 0 and 0 for every i ≥ 1
        for m in 1..=12u32 {
            for i in 0..=m {
                let total: BigInt = (0..=m).map(|t| krawtchouk(t, i, m, 3)).sum();
                if i == 0 {
                    assert_eq!(total, BigInt::from(3).pow(m));
                } else {
                    assert_eq!(total, BigInt::zero(), "m={m} i={i}");
                }
            }
        }
    }
}
