//! Magnitudes attached to dimension vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimension::{self, DimensionVector};
use crate::error::{Error, Result};

pub(crate) fn finite(m: f64) -> Result<f64> {
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::NonFinite(m))
    }
}

/// A finite, non-zero magnitude.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct MagnitudeN0(f64);

impl MagnitudeN0 {
    pub fn new(m: f64) -> Result<Self> {
        if m == 0.0 {
            return Err(Error::ZeroScale);
        }
        finite(m).map(MagnitudeN0)
    }

    pub const fn get(self) -> f64 {
        self.0
    }
}

impl From<MagnitudeN0> for f64 {
    fn from(m: MagnitudeN0) -> f64 {
        m.0
    }
}

/// A finite magnitude paired with a dimension vector.
///
/// Equality is structural: two quantities are equal only when both the
/// magnitude and the dimension vector match. Use [`Quantity::same_magnitude`]
/// for magnitude-only comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    magnitude: f64,
    dim: DimensionVector,
}

impl Quantity {
    pub fn new(magnitude: f64, dim: DimensionVector) -> Result<Self> {
        Ok(Quantity {
            magnitude: finite(magnitude)?,
            dim,
        })
    }

    /// Magnitude-1 quantity of the given dimension.
    pub const fn unit(dim: DimensionVector) -> Self {
        Quantity { magnitude: 1.0, dim }
    }

    pub const fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub const fn dim(&self) -> DimensionVector {
        self.dim
    }

    pub fn same_magnitude(&self, other: &Quantity) -> bool {
        self.magnitude == other.magnitude
    }

    fn same_dim(&self, other: &Quantity) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn times(&self, other: &Quantity) -> Result<Quantity> {
        Quantity::new(self.magnitude * other.magnitude, self.dim * other.dim)
    }

    pub fn divide(&self, other: &Quantity) -> Result<Quantity> {
        if other.magnitude == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Quantity::new(self.magnitude / other.magnitude, self.dim / other.dim)
    }

    pub fn inverse(&self) -> Result<Quantity> {
        if self.magnitude == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Quantity::new(1.0 / self.magnitude, self.dim.inv())
    }

    pub fn plus(&self, other: &Quantity) -> Result<Quantity> {
        self.same_dim(other)?;
        Quantity::new(self.magnitude + other.magnitude, self.dim)
    }

    pub fn minus(&self, other: &Quantity) -> Result<Quantity> {
        self.same_dim(other)?;
        Quantity::new(self.magnitude - other.magnitude, self.dim)
    }

    pub fn negate(&self) -> Quantity {
        Quantity {
            magnitude: -self.magnitude,
            dim: self.dim,
        }
    }

    /// Replication: magnitude raised to `n`, exponents multiplied by `n`.
    pub fn powi(&self, n: i32) -> Result<Quantity> {
        if n < 0 && self.magnitude == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Quantity::new(self.magnitude.powi(n), self.dim.pow(n))
    }

    /// Multiplies the magnitude by `m`; the dimension vector is unchanged.
    pub fn scale(&self, m: f64) -> Result<Quantity> {
        Quantity::new(finite(m)? * self.magnitude, self.dim)
    }

    /// `self < other`, defined only within one dimension vector.
    pub fn try_lt(&self, other: &Quantity) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self.magnitude < other.magnitude)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.magnitude, self.dim)
    }
}

pub const UNIT_LENGTH: Quantity = Quantity::unit(dimension::LENGTH);
pub const UNIT_MASS: Quantity = Quantity::unit(dimension::MASS);
pub const UNIT_TIME: Quantity = Quantity::unit(dimension::TIME);
pub const UNIT_CURRENT: Quantity = Quantity::unit(dimension::CURRENT);
pub const UNIT_TEMP: Quantity = Quantity::unit(dimension::TEMP);
pub const UNIT_AMOUNT: Quantity = Quantity::unit(dimension::AMOUNT);
pub const UNIT_LUMINOSITY: Quantity = Quantity::unit(dimension::LUMINOSITY);
pub const UNIT_AREA: Quantity = Quantity::unit(dimension::AREA);
pub const UNIT_VOLUME: Quantity = Quantity::unit(dimension::VOLUME);
pub const UNIT_FREQUENCY: Quantity = Quantity::unit(dimension::FREQUENCY);
pub const UNIT_VELOCITY: Quantity = Quantity::unit(dimension::VELOCITY);
pub const UNIT_ACCELERATION: Quantity = Quantity::unit(dimension::ACCELERATION);
pub const UNIT_ENERGY: Quantity = Quantity::unit(dimension::ENERGY);
pub const UNIT_POWER: Quantity = Quantity::unit(dimension::POWER);
pub const UNIT_FORCE: Quantity = Quantity::unit(dimension::FORCE);
pub const UNIT_PRESSURE: Quantity = Quantity::unit(dimension::PRESSURE);
pub const UNIT_CHARGE: Quantity = Quantity::unit(dimension::CHARGE);
pub const UNIT_POTENTIAL_DIFFERENCE: Quantity = Quantity::unit(dimension::POTENTIAL_DIFFERENCE);
pub const UNIT_CAPACITANCE: Quantity = Quantity::unit(dimension::CAPACITANCE);
pub const UNIT_RADIAN: Quantity = Quantity::unit(dimension::RADIAN);
pub const UNIT_STERADIAN: Quantity = Quantity::unit(dimension::STERADIAN);
pub const UNIT_WATTAGE: Quantity = Quantity::unit(dimension::WATTAGE);
