//! Named measurement systems: SI base and derived units, the British
//! Imperial (BIS), centimetre-gram-second (CGS) and milligram-hour-Celsius
//! (MHC) systems, prefixes, time granularities, and a few SI constants.
//!
//! Base units are constants. Derived units are nullary functions whose
//! value is computed once, on first use.
//!
//! The MHC temperature factor is stored as the multiplicative value -272.15.
//! Schemas are purely multiplicative, so temperature conversions under MHC
//! are not physically meaningful.

mod predicates;
pub mod prefix;
mod registry;
pub mod time;

pub use predicates::*;
pub use prefix::{centi, deci, giga, kilo, mag, mega, micro, milli, nano, scale_prefix, Prefix};
pub use registry::{Catalog, NamedSystem, RegistryRecord, CATALOG_ENV};
pub use time::{h_day, h_month, h_week, h_year, hour, minute, second, Month};

use crate::conversion::{ConversionSchema, MeasurementSystem, UnitSystem};
use crate::dimension::{Dimension, DimensionVector};
use crate::error::{Error, Result};
use crate::quantity::*;
use prefix::{PREFIX_CENTI, PREFIX_MILLI};

/// Defines a nullary function whose result is computed once and cloned
/// out on every call.
macro_rules! memo {
    ($(#[$meta:meta])* $vis:vis fn $name:ident() -> $ty:ty $body:block) => {
        $(#[$meta])*
        $vis fn $name() -> $ty {
            static CELL: std::sync::LazyLock<$ty> = std::sync::LazyLock::new(|| $body);
            CELL.clone()
        }
    };
}
pub(crate) use memo;

const fn si(q: Quantity) -> MeasurementSystem {
    MeasurementSystem::new(q, ConversionSchema::SI, UnitSystem::SI)
}

fn op(r: Result<MeasurementSystem>) -> MeasurementSystem {
    r.expect("catalog arithmetic stays finite")
}

pub const METRE: MeasurementSystem = si(UNIT_LENGTH);
pub const KILOGRAM: MeasurementSystem = si(UNIT_MASS);
pub const SECOND: MeasurementSystem = si(UNIT_TIME);
pub const AMPERE: MeasurementSystem = si(UNIT_CURRENT);
pub const KELVIN: MeasurementSystem = si(UNIT_TEMP);
pub const MOLE: MeasurementSystem = si(UNIT_AMOUNT);
pub const CANDELA: MeasurementSystem = si(UNIT_LUMINOSITY);

memo! { pub fn si_area() -> MeasurementSystem { op(METRE.itself_n(2)) } }
memo! { pub fn si_volume() -> MeasurementSystem { op(METRE.itself_n(3)) } }
memo! { pub fn si_hertz() -> MeasurementSystem { op(SECOND.inverse()) } }
memo! { pub fn si_velocity() -> MeasurementSystem { op(METRE.divide(&SECOND)) } }
memo! { pub fn si_acceleration() -> MeasurementSystem { op(si_velocity().divide(&SECOND)) } }
memo! { pub fn si_newton() -> MeasurementSystem { op(KILOGRAM.times(&si_acceleration())) } }
memo! { pub fn si_joule() -> MeasurementSystem { op(si_newton().times(&METRE)) } }
memo! { pub fn si_power() -> MeasurementSystem { op(si_joule().divide(&SECOND)) } }
memo! { pub fn si_watt() -> MeasurementSystem { op(si_joule().divide(&SECOND)) } }
memo! { pub fn si_pascal() -> MeasurementSystem { op(si_newton().divide(&si_area())) } }
memo! { pub fn si_coulomb() -> MeasurementSystem { op(AMPERE.times(&SECOND)) } }
memo! { pub fn si_volt() -> MeasurementSystem { op(si_watt().divide(&AMPERE)) } }
memo! { pub fn si_farad() -> MeasurementSystem { op(si_coulomb().divide(&si_volt())) } }
memo! { pub fn si_radian() -> MeasurementSystem { op(METRE.divide(&METRE)) } }
memo! { pub fn si_steradian() -> MeasurementSystem { op(si_area().divide(&si_area())) } }

memo! { pub fn si_yard() -> MeasurementSystem { op(METRE.scale(0.9144)) } }
memo! { pub fn si_foot() -> MeasurementSystem { op(si_yard().scale(1.0 / 3.0)) } }
memo! { pub fn si_mile() -> MeasurementSystem { op(si_yard().scale(1760.0)) } }
memo! { pub fn si_kilometre() -> MeasurementSystem { kilo(METRE).ok().and_then(Prefix::into_system).expect("kilometre") } }

/// British Imperial schema: yard, pound and rankine relative to SI.
pub const BIS: ConversionSchema = ConversionSchema::from_factors_const([
    0.9143993,
    0.453592338,
    1.0,
    1.0,
    5.0 / 9.0,
    1.0,
    1.0,
]);

const fn bis(q: Quantity) -> MeasurementSystem {
    MeasurementSystem::new(q, BIS, UnitSystem::BIS)
}

pub const YARD: MeasurementSystem = bis(UNIT_LENGTH);
pub const BIS_POUND: MeasurementSystem = bis(UNIT_MASS);
pub const BIS_RANKINE: MeasurementSystem = bis(UNIT_TEMP);

memo! { pub fn bis_cubic_yard() -> MeasurementSystem { op(YARD.itself_n(3)) } }
memo! { pub fn bis_yard_per_second() -> MeasurementSystem { op(YARD.divide(&bis(UNIT_TIME))) } }
memo! { pub fn bis_foot() -> MeasurementSystem { op(YARD.scale(1.0 / 3.0)) } }
memo! { pub fn bis_inch() -> MeasurementSystem { op(bis_foot().scale(1.0 / 12.0)) } }
memo! { pub fn bis_mile() -> MeasurementSystem { op(YARD.scale(1760.0)) } }
memo! {
    /// The BIS mile divided by the SI hour, expressed in BIS.
    pub fn bis_mile_per_hour() -> MeasurementSystem {
        op(bis_mile().divide(&hour(ConversionSchema::SI, UnitSystem::SI)))
    }
}

memo! {
    /// SI with length in centimetres and mass in grams.
    pub fn cgs() -> ConversionSchema {
        ConversionSchema::SI
            .scale(PREFIX_CENTI, Dimension::Length)
            .and_then(|cs| cs.scale(PREFIX_MILLI, Dimension::Mass))
            .expect("non-zero prefixes")
    }
}

memo! { pub fn cgs_centimetre() -> MeasurementSystem { MeasurementSystem::new(UNIT_LENGTH, cgs(), UnitSystem::CGS) } }
memo! { pub fn cgs_gram() -> MeasurementSystem { MeasurementSystem::new(UNIT_MASS, cgs(), UnitSystem::CGS) } }

memo! {
    /// SI with mass in milligrams, time in hours and temperature factor
    /// -272.15.
    pub fn mhc() -> ConversionSchema {
        let mass = mag(milli(milli(KILOGRAM).expect("finite")).expect("finite"));
        let time = mag(hour(ConversionSchema::SI, UnitSystem::SI));
        ConversionSchema::new([
            (Dimension::Mass, mass),
            (Dimension::Temperature, -272.15),
            (Dimension::Time, time),
        ])
        .expect("non-zero factors")
    }
}

memo! { pub fn mgram() -> MeasurementSystem { MeasurementSystem::new(UNIT_MASS, mhc(), UnitSystem::MHC) } }
memo! { pub fn mhour() -> MeasurementSystem { MeasurementSystem::new(UNIT_TIME, mhc(), UnitSystem::MHC) } }
memo! { pub fn mcelcius() -> MeasurementSystem { MeasurementSystem::new(UNIT_TEMP, mhc(), UnitSystem::MHC) } }

memo! {
    /// Speed of light in vacuum, 299 792 458 m/s.
    pub fn speed_of_light() -> MeasurementSystem { op(si_velocity().scale(299_792_458.0)) }
}
memo! {
    /// Caesium-133 hyperfine transition frequency, 9 192 631 770 Hz.
    pub fn caesium_frequency() -> MeasurementSystem { op(si_hertz().scale(9_192_631_770.0)) }
}
memo! {
    /// Planck constant, 6.626 070 15e-34 J s.
    pub fn planck() -> MeasurementSystem {
        op(si_joule().times(&SECOND).and_then(|js| js.scale(6.626_070_15e-34)))
    }
}

/// Label of a registered schema, matched on factor values.
pub fn schema_label(cs: &ConversionSchema) -> Option<UnitSystem> {
    if *cs == ConversionSchema::SI {
        Some(UnitSystem::SI)
    } else if *cs == BIS {
        Some(UnitSystem::BIS)
    } else if *cs == cgs() {
        Some(UnitSystem::CGS)
    } else if *cs == mhc() {
        Some(UnitSystem::MHC)
    } else {
        None
    }
}

/// Converts into a registered schema, labelling the result with that
/// schema's catalog name.
pub fn ms_conv(ms: &MeasurementSystem, target: &ConversionSchema) -> Result<MeasurementSystem> {
    let unit = schema_label(target).ok_or(Error::UnknownSchema)?;
    ms.convert(target, unit)
}

/// The SI quantity of `ms`.
pub fn metrify(ms: &MeasurementSystem) -> Quantity {
    ms.convert(&ConversionSchema::SI, UnitSystem::SI)
        .expect("conversion to SI")
        .quantity
}

/// Miles per hour to metres per second.
pub fn mph2mps(mph: f64) -> Result<f64> {
    let ms = bis_mile_per_hour().scale(mph)?;
    Ok(mag(metrify(&ms)))
}

/// The unit measurement system of each of the 22 predefined dimension
/// vectors, in the same order as [`crate::dimension::PREDEFINED`].
pub fn si_predefined() -> [(&'static str, MeasurementSystem); 22] {
    [
        ("METRE", METRE),
        ("KILOGRAM", KILOGRAM),
        ("SECOND", SECOND),
        ("AMPERE", AMPERE),
        ("KELVIN", KELVIN),
        ("MOLE", MOLE),
        ("CANDELA", CANDELA),
        ("SI_AREA", si_area()),
        ("SI_VOLUME", si_volume()),
        ("SI_HERTZ", si_hertz()),
        ("SI_VELOCITY", si_velocity()),
        ("SI_ACCELERATION", si_acceleration()),
        ("SI_JOULE", si_joule()),
        ("SI_POWER", si_power()),
        ("SI_NEWTON", si_newton()),
        ("SI_PASCAL", si_pascal()),
        ("SI_COULOMB", si_coulomb()),
        ("SI_VOLT", si_volt()),
        ("SI_FARAD", si_farad()),
        ("SI_RADIAN", si_radian()),
        ("SI_STERADIAN", si_steradian()),
        ("SI_WATT", si_watt()),
    ]
}

/// The unit system an arbitrary dimension vector would have in SI.
pub fn si_unit(dv: DimensionVector) -> MeasurementSystem {
    si(Quantity::unit(dv))
}
