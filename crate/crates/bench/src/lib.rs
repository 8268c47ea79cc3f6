//! Shared fixtures for the engine benchmarks.

use std::collections::BTreeSet;
use terncode::{Family, WeightClassFunction};

/// The [19682, 10, 13010] complement-family code.
pub fn gbar_9_2() -> WeightClassFunction {
    WeightClassFunction::family(Family::Gbar, 9, 2, None).expect("in range")
}

pub fn g_5_2() -> WeightClassFunction {
    WeightClassFunction::family(Family::G, 5, 2, None).expect("in range")
}

pub fn f_7_3() -> WeightClassFunction {
    let s: BTreeSet<u32> = [1u32, 3].into_iter().collect();
    WeightClassFunction::family(Family::F, 7, 3, Some(s)).expect("in range")
}
