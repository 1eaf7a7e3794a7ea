//! Dimensional analysis over the International System of Quantities.
//!
//! Layers, bottom up:
//!
//! - [`dimension`]: the seven base dimensions and integer dimension vectors.
//! - [`quantity`]: magnitudes paired with dimension vectors.
//! - [`conversion`]: conversion schemas and measurement systems.
//! - [`catalog`]: named SI, BIS, CGS and MHC systems, prefixes and the
//!   registry file format.
//! - [`unit_expression`]: rendering and parsing unit strings.
//! - [`numerics`]: rounding and approximate equality.
//!
//! ```
//! use isq_core::catalog::{is_energy, is_pressure, si_volume, KILOGRAM, METRE, SECOND};
//!
//! let pa = KILOGRAM.divide(&METRE.times(&SECOND.itself_n(2)?)?)?;
//! assert!(is_pressure(&pa));
//! assert!(is_energy(&pa.times(&si_volume())?));
//! # Ok::<(), isq_core::Error>(())
//! ```

pub mod catalog;
pub mod conversion;
pub mod dimension;
mod error;
pub mod numerics;
pub mod quantity;
pub mod unit_expression;

pub use catalog::{Catalog, Prefix, TypedPredicate};
pub use conversion::{quant_conv, ConversionSchema, MeasurementSystem, UnitSystem};
pub use dimension::{Dimension, DimensionVector};
pub use error::{Error, Result};
pub use numerics::{approx, approx_eq, Order};
pub use quantity::{MagnitudeN0, Quantity};
pub use unit_expression::{dim_view, expr_to_dv, parse_unit, si_dim_view, DimensionNames, UnitExpr};
