//! Shared inputs for the criterion benchmarks.

use isq_core::dimension::PREDEFINED;
use isq_core::DimensionVector;

/// Unit expressions of increasing length.
pub const EXPRESSIONS: [&str; 4] = [
    "m",
    "m / s",
    "kg * (m**2) / (s**2)",
    "(s**4) * (A**2) / kg * (m**2) * (mol**3) * (cd**-2)",
];

pub fn predefined_vectors() -> Vec<DimensionVector> {
    PREDEFINED.iter().map(|&(_, dv)| dv).collect()
}
