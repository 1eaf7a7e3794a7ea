//! Conversion schemas and measurement systems.
//!
//! A [`ConversionSchema`] gives, for every base dimension, the factor that
//! turns one unit of that dimension in the schema into SI units. Unlike
//! dimension vectors, omitted factors default to 1. [`quant_conv`] lifts a
//! schema to any dimension vector by taking the product of factor^exponent
//! over all seven dimensions.
//!
//! Binary measurement-system operators follow the leading-operand rule: the
//! second operand is first re-expressed in the first operand's schema, and
//! the result carries the first operand's schema and unit label.

use std::borrow::Cow;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::dimension::{Dimension, DimensionVector};
use crate::error::{Error, Result};
use crate::numerics;
use crate::quantity::{finite, MagnitudeN0, Quantity};

/// Per-dimension non-zero factors relative to SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConversionSchema([f64; Dimension::COUNT]);

impl ConversionSchema {
    /// The identity schema: every factor is 1.
    pub const SI: ConversionSchema = ConversionSchema([1.0; Dimension::COUNT]);

    /// Builds a schema from a partial mapping; unlisted dimensions get 1.
    pub fn new<I>(partial: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Dimension, f64)>,
    {
        let mut factors = [1.0; Dimension::COUNT];
        for (dimension, factor) in partial {
            if factor == 0.0 || !factor.is_finite() {
                return Err(Error::InvalidFactor { dimension, factor });
            }
            factors[dimension.index()] = factor;
        }
        Ok(ConversionSchema(factors))
    }

    pub fn from_factors(factors: [f64; Dimension::COUNT]) -> Result<Self> {
        ConversionSchema::new(Dimension::ALL.into_iter().zip(factors))
    }

    /// Schema from literal factors. All factors must be finite and
    /// non-zero.
    pub(crate) const fn from_factors_const(factors: [f64; Dimension::COUNT]) -> Self {
        ConversionSchema(factors)
    }

    pub const fn factors(&self) -> [f64; Dimension::COUNT] {
        self.0
    }

    pub const fn get(&self, dim: Dimension) -> f64 {
        self.0[dim.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Dimension, f64)> + '_ {
        Dimension::ALL.iter().map(move |&d| (d, self.0[d.index()]))
    }

    /// Replaces every factor by its reciprocal.
    pub fn inv(&self) -> ConversionSchema {
        ConversionSchema(self.0.map(|f| 1.0 / f))
    }

    /// Pointwise product of factors.
    pub fn compose(&self, other: &ConversionSchema) -> ConversionSchema {
        let mut out = self.0;
        for (f, g) in out.iter_mut().zip(other.0) {
            *f *= g;
        }
        ConversionSchema(out)
    }

    /// Multiplies the factor at `dim` by `m`.
    pub fn scale(&self, m: f64, dim: Dimension) -> Result<ConversionSchema> {
        let m = MagnitudeN0::new(m)?.get();
        let mut out = self.0;
        let factor = out[dim.index()] * m;
        if factor == 0.0 || !factor.is_finite() {
            return Err(Error::InvalidFactor { dimension: dim, factor });
        }
        out[dim.index()] = factor;
        Ok(ConversionSchema(out))
    }
}

impl Default for ConversionSchema {
    fn default() -> Self {
        ConversionSchema::SI
    }
}

impl Serialize for ConversionSchema {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(Dimension::COUNT))?;
        for (dim, factor) in self.iter() {
            map.serialize_entry(&dim, &factor)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ConversionSchema {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let partial = std::collections::HashMap::<Dimension, f64>::deserialize(deserializer)?;
        ConversionSchema::new(partial).map_err(de::Error::custom)
    }
}

/// Conversion magnitude of `dv` under `cs`: the product of `cs(d)^dv(d)`
/// over all seven dimensions, in canonical order.
///
/// Every dimension contributes its own factor, so two dimensions that share
/// a factor value both count.
pub fn quant_conv(cs: &ConversionSchema, dv: &DimensionVector) -> f64 {
    numerics::product(
        Dimension::ALL
            .iter()
            .map(|&d| cs.get(d).powi(dv.get(d))),
    )
}

/// Name of the unit system a measurement system is expressed in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitSystem(Cow<'static, str>);

impl UnitSystem {
    pub const SI: UnitSystem = UnitSystem::from_static("SI");
    pub const BIS: UnitSystem = UnitSystem::from_static("BIS");
    pub const CGS: UnitSystem = UnitSystem::from_static("CGS");
    pub const MHC: UnitSystem = UnitSystem::from_static("MHC");

    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyUnitSystem);
        }
        Ok(UnitSystem(Cow::Owned(name)))
    }

    /// Compile-time label. Callers must pass a non-empty string.
    pub const fn from_static(name: &'static str) -> Self {
        assert!(!name.is_empty());
        UnitSystem(Cow::Borrowed(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for UnitSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for UnitSystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        UnitSystem::new(name).map_err(de::Error::custom)
    }
}

/// A quantity tagged with the conversion schema and unit system it is
/// expressed in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSystem {
    pub quantity: Quantity,
    pub schema: ConversionSchema,
    pub unit: UnitSystem,
}

impl MeasurementSystem {
    pub const fn new(quantity: Quantity, schema: ConversionSchema, unit: UnitSystem) -> Self {
        MeasurementSystem {
            quantity,
            schema,
            unit,
        }
    }

    pub const fn magnitude(&self) -> f64 {
        self.quantity.magnitude()
    }

    pub const fn dim(&self) -> DimensionVector {
        self.quantity.dim()
    }

    fn with_quantity(&self, quantity: Quantity) -> MeasurementSystem {
        MeasurementSystem {
            quantity,
            schema: self.schema,
            unit: self.unit.clone(),
        }
    }

    /// Multiplies the magnitude by `quant_conv(cs_conv, dim)`, keeping the
    /// schema and label.
    pub fn quant_conv(&self, cs_conv: &ConversionSchema) -> Result<MeasurementSystem> {
        let q = self.quantity.scale(quant_conv(cs_conv, &self.dim()))?;
        Ok(self.with_quantity(q))
    }

    /// Re-expresses `self` in `target`, labelled `unit`.
    pub fn convert(&self, target: &ConversionSchema, unit: UnitSystem) -> Result<MeasurementSystem> {
        let relative = self.schema.compose(&target.inv());
        let q = self.quantity.scale(quant_conv(&relative, &self.dim()))?;
        Ok(MeasurementSystem::new(q, *target, unit))
    }

    /// `other` expressed in this system's schema and label. Labels alone do
    /// not trigger a conversion.
    fn lead(&self, other: &MeasurementSystem) -> Result<Quantity> {
        if self.schema == other.schema {
            Ok(other.quantity)
        } else {
            Ok(other.convert(&self.schema, self.unit.clone())?.quantity)
        }
    }

    pub fn times(&self, other: &MeasurementSystem) -> Result<MeasurementSystem> {
        let q = self.quantity.times(&self.lead(other)?)?;
        Ok(self.with_quantity(q))
    }

    pub fn divide(&self, other: &MeasurementSystem) -> Result<MeasurementSystem> {
        let q = self.quantity.divide(&self.lead(other)?)?;
        Ok(self.with_quantity(q))
    }

    pub fn plus(&self, other: &MeasurementSystem) -> Result<MeasurementSystem> {
        let q = self.quantity.plus(&self.lead(other)?)?;
        Ok(self.with_quantity(q))
    }

    pub fn minus(&self, other: &MeasurementSystem) -> Result<MeasurementSystem> {
        let q = self.quantity.minus(&self.lead(other)?)?;
        Ok(self.with_quantity(q))
    }

    pub fn inverse(&self) -> Result<MeasurementSystem> {
        Ok(self.with_quantity(self.quantity.inverse()?))
    }

    /// Replication: the system multiplied by itself `n` times.
    pub fn itself_n(&self, n: i32) -> Result<MeasurementSystem> {
        Ok(self.with_quantity(self.quantity.powi(n)?))
    }

    pub fn scale(&self, m: f64) -> Result<MeasurementSystem> {
        Ok(self.with_quantity(self.quantity.scale(m)?))
    }

    /// How many of `target` make one of `self`.
    ///
    /// Both systems must share a dimension vector. `target` must have a
    /// non-zero magnitude.
    pub fn factor_to(&self, target: &MeasurementSystem) -> Result<f64> {
        if self.dim() != target.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: target.dim(),
            });
        }
        if target.magnitude() == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let here = self.convert(&target.schema, target.unit.clone())?;
        finite(here.magnitude() / target.magnitude())
    }
}

impl fmt::Display for MeasurementSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.quantity, self.unit)
    }
}
