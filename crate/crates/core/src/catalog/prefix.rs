//! Decimal prefixes applicable uniformly to magnitudes, quantities and
//! measurement systems.

use crate::conversion::MeasurementSystem;
use crate::error::{Error, Result};
use crate::quantity::{finite, Quantity};

pub const PREFIX_GIGA: f64 = 1e9;
pub const PREFIX_MEGA: f64 = 1e6;
pub const PREFIX_KILO: f64 = 1e3;
pub const PREFIX_DECI: f64 = 1e-1;
pub const PREFIX_CENTI: f64 = 1e-2;
pub const PREFIX_MILLI: f64 = 1e-3;
pub const PREFIX_MICRO: f64 = 1e-6;
pub const PREFIX_NANO: f64 = 1e-9;

/// Anything a prefix can scale.
#[derive(Debug, Clone, PartialEq)]
pub enum Prefix {
    Magnitude(f64),
    Quantity(Quantity),
    System(MeasurementSystem),
}

impl Prefix {
    /// The magnitude of whichever variant is active.
    pub fn mag(&self) -> f64 {
        match self {
            Prefix::Magnitude(m) => *m,
            Prefix::Quantity(q) => q.magnitude(),
            Prefix::System(ms) => ms.magnitude(),
        }
    }

    /// The underlying quantity; bare magnitudes have none.
    pub fn quantity(&self) -> Result<&Quantity> {
        match self {
            Prefix::Magnitude(_) => Err(Error::BareMagnitude),
            Prefix::Quantity(q) => Ok(q),
            Prefix::System(ms) => Ok(&ms.quantity),
        }
    }

    pub fn into_system(self) -> Option<MeasurementSystem> {
        match self {
            Prefix::System(ms) => Some(ms),
            _ => None,
        }
    }

    pub fn into_quantity(self) -> Option<Quantity> {
        match self {
            Prefix::Quantity(q) => Some(q),
            _ => None,
        }
    }
}

impl From<f64> for Prefix {
    fn from(m: f64) -> Self {
        Prefix::Magnitude(m)
    }
}

impl From<Quantity> for Prefix {
    fn from(q: Quantity) -> Self {
        Prefix::Quantity(q)
    }
}

impl From<MeasurementSystem> for Prefix {
    fn from(ms: MeasurementSystem) -> Self {
        Prefix::System(ms)
    }
}

impl From<&MeasurementSystem> for Prefix {
    fn from(ms: &MeasurementSystem) -> Self {
        Prefix::System(ms.clone())
    }
}

pub fn mag(p: impl Into<Prefix>) -> f64 {
    p.into().mag()
}

/// Scales the active variant by `p`.
pub fn scale_prefix(x: impl Into<Prefix>, p: f64) -> Result<Prefix> {
    Ok(match x.into() {
        Prefix::Magnitude(m) => Prefix::Magnitude(finite(m * p)?),
        Prefix::Quantity(q) => Prefix::Quantity(q.scale(p)?),
        Prefix::System(ms) => Prefix::System(ms.scale(p)?),
    })
}

macro_rules! prefix_fns {
    ($($(#[$meta:meta])* $name:ident => $factor:ident;)*) => {
        $(
            $(#[$meta])*
            pub fn $name(x: impl Into<Prefix>) -> Result<Prefix> {
                scale_prefix(x, $factor)
            }
        )*
    };
}

prefix_fns! {
    giga => PREFIX_GIGA;
    mega => PREFIX_MEGA;
    /// `kilo(METRE)` is a kilometre; `kilo(10.0)` is 10⁴.
    kilo => PREFIX_KILO;
    deci => PREFIX_DECI;
    centi => PREFIX_CENTI;
    milli => PREFIX_MILLI;
    micro => PREFIX_MICRO;
    nano => PREFIX_NANO;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{KILOGRAM, METRE};
    use crate::dimension::LENGTH;
    use crate::quantity::UNIT_VELOCITY;

    #[test]
    fn kilo_of_each_variant() {
        assert_eq!(kilo(10.0).unwrap(), Prefix::Magnitude(10_000.0));
        let km = kilo(METRE).unwrap().into_system().unwrap();
        assert_eq!(km.magnitude(), 1000.0);
        assert_eq!(km.dim(), LENGTH);
        assert_eq!(km.schema, METRE.schema);
        let q = kilo(UNIT_VELOCITY).unwrap().into_quantity().unwrap();
        assert_eq!(q.magnitude(), 1000.0);
    }

    #[test]
    fn milligram_factor() {
        let mg = milli(milli(KILOGRAM).unwrap()).unwrap();
        assert_eq!(mag(mg), 1e-6);
    }

    #[test]
    fn bare_magnitude_has_no_quantity() {
        assert_eq!(Prefix::from(3.0).quantity(), Err(Error::BareMagnitude));
        assert!(Prefix::from(METRE).quantity().is_ok());
    }

    #[test]
    fn kilo_undoes_milli() {
        for x in [Prefix::from(7.25), Prefix::from(UNIT_VELOCITY), Prefix::from(METRE)] {
            let back = kilo(milli(x.clone()).unwrap()).unwrap();
            assert!((back.mag() - x.mag()).abs() <= 1e-12 * x.mag().abs());
        }
    }
}
