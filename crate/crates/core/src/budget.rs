//! Cost caps for the exponential brute-force paths.
//!
//! Every exhaustive route refuses to start once its cap is exceeded, and the
//! refusal reports what cap the request would need. Caps can be raised per
//! process via environment variables, or all at once from the CLI.

use crate::error::{Error, Result};

pub const ENV_ENUM: &str = "TERNCODE_MAX_ENUM_M";
pub const ENV_PAIR: &str = "TERNCODE_MAX_PAIR_M";
pub const ENV_SPECTRUM: &str = "TERNCODE_MAX_SPECTRUM_M";
/// Clamps all three caps at once.
pub const ENV_ALL: &str = "TERNCODE_MAX_BRUTE_M";

/// Per-path caps on the ambient dimension m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Full codeword-table enumeration, Θ(3^{2m}) work.
    pub max_enum_m: u32,
    /// Codeword pair scans for minimality, Θ(3^{2m+2}·3^m/64) work.
    pub max_pair_m: u32,
    /// Full Walsh spectra and other per-(w,x) table scans, Θ(3^{2m}) work.
    pub max_spectrum_m: u32,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_enum_m: 7,
            max_pair_m: 6,
            max_spectrum_m: 8,
        }
    }
}

impl Budget {
    /// Defaults, overridden by any of the `TERNCODE_MAX_*_M` variables that
    /// are set. `TERNCODE_MAX_BRUTE_M` applies to all three paths and wins
    /// over the per-path variables.
    pub fn from_env() -> Budget {
        fn read(name: &str) -> Option<u32> {
            std::env::var(name).ok()?.trim().parse().ok()
        }
        let mut budget = Budget::default();
        if let Some(m) = read(ENV_ENUM) {
            budget.max_enum_m = m;
        }
        if let Some(m) = read(ENV_PAIR) {
            budget.max_pair_m = m;
        }
        if let Some(m) = read(ENV_SPECTRUM) {
            budget.max_spectrum_m = m;
        }
        if let Some(m) = read(ENV_ALL) {
            budget = Budget::uniform(m);
        }
        budget
    }

    /// The same cap for every path.
    pub fn uniform(m: u32) -> Budget {
        Budget {
            max_enum_m: m,
            max_pair_m: m,
            max_spectrum_m: m,
        }
    }

    pub(crate) fn check_enum(&self, m: u32) -> Result<()> {
        if m > self.max_enum_m {
            return Err(Error::BudgetExceeded {
                operation: "codeword-table enumeration",
                requested: m,
                cap: self.max_enum_m,
                env: ENV_ENUM,
            });
        }
        Ok(())
    }

    pub(crate) fn check_pair(&self, m: u32) -> Result<()> {
        if m > self.max_pair_m {
            return Err(Error::BudgetExceeded {
                operation: "codeword pair scan",
                requested: m,
                cap: self.max_pair_m,
                env: ENV_PAIR,
            });
        }
        Ok(())
    }

    pub(crate) fn check_spectrum(&self, m: u32) -> Result<()> {
        if m > self.max_spectrum_m {
            return Err(Error::BudgetExceeded {
                operation: "full Walsh spectrum",
                requested: m,
                cap: self.max_spectrum_m,
                env: ENV_SPECTRUM,
            });
        }
        Ok(())
    }
}
