//! Dimension-typed predicates over measurement systems.
//!
//! An SI-typed predicate holds when the system has the expected dimension
//! vector, the SI schema and the `"SI"` label. MHC-typed predicates only
//! require the MHC schema and the dimension vector.

use std::fmt;
use std::str::FromStr;

use crate::conversion::{ConversionSchema, MeasurementSystem, UnitSystem};
use crate::dimension::{self, DimensionVector};
use crate::error::Error;

use super::mhc;

macro_rules! typed_predicates {
    (
        si { $($si:ident => $si_dim:path, $si_fn:ident;)* }
        mhc { $($mhc:ident => $mhc_dim:path, $mhc_fn:ident;)* }
    ) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum TypedPredicate {
            $($si,)*
            $($mhc,)*
        }

        impl TypedPredicate {
            pub const ALL: &'static [TypedPredicate] = &[$(TypedPredicate::$si,)* $(TypedPredicate::$mhc,)*];

            pub const fn name(self) -> &'static str {
                match self {
                    $(TypedPredicate::$si => stringify!($si),)*
                    $(TypedPredicate::$mhc => stringify!($mhc),)*
                }
            }

            pub const fn dim(self) -> DimensionVector {
                match self {
                    $(TypedPredicate::$si => $si_dim,)*
                    $(TypedPredicate::$mhc => $mhc_dim,)*
                }
            }

            pub const fn is_mhc(self) -> bool {
                match self {
                    $(TypedPredicate::$mhc => true,)*
                    _ => false,
                }
            }
        }

        $(
            pub fn $si_fn(ms: &MeasurementSystem) -> bool {
                TypedPredicate::$si.holds(ms)
            }
        )*
        $(
            pub fn $mhc_fn(ms: &MeasurementSystem) -> bool {
                TypedPredicate::$mhc.holds(ms)
            }
        )*
    };
}

typed_predicates! {
    si {
        Metre => dimension::LENGTH, is_metre;
        Kilogram => dimension::MASS, is_kilogram;
        Second => dimension::TIME, is_second;
        Ampere => dimension::CURRENT, is_ampere;
        Kelvin => dimension::TEMP, is_kelvin;
        Mole => dimension::AMOUNT, is_mole;
        Candela => dimension::LUMINOSITY, is_candela;
        Area => dimension::AREA, is_area;
        Volume => dimension::VOLUME, is_volume;
        Frequency => dimension::FREQUENCY, is_frequency;
        Velocity => dimension::VELOCITY, is_velocity;
        Acceleration => dimension::ACCELERATION, is_acceleration;
        Energy => dimension::ENERGY, is_energy;
        Power => dimension::POWER, is_power;
        Force => dimension::FORCE, is_force;
        Pressure => dimension::PRESSURE, is_pressure;
        Charge => dimension::CHARGE, is_charge;
        PotentialDifference => dimension::POTENTIAL_DIFFERENCE, is_potential_difference;
        Capacitance => dimension::CAPACITANCE, is_capacitance;
        Radian => dimension::RADIAN, is_radian;
        Steradian => dimension::STERADIAN, is_steradian;
        Wattage => dimension::WATTAGE, is_wattage;
    }
    mhc {
        Milligram => dimension::MASS, is_milligram;
        Hour => dimension::TIME, is_hour;
        Celcius => dimension::TEMP, is_celcius;
    }
}

impl TypedPredicate {
    pub fn holds(self, ms: &MeasurementSystem) -> bool {
        if ms.dim() != self.dim() {
            return false;
        }
        if self.is_mhc() {
            ms.schema == mhc()
        } else {
            ms.schema == ConversionSchema::SI && ms.unit == UnitSystem::SI
        }
    }
}

impl fmt::Display for TypedPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TypedPredicate {
    type Err = Error;

    /// Case-insensitive; an optional `is_` prefix and the base dimension
    /// names (`Length`, `Mass`, `Time`, ...) are also accepted.
    fn from_str(s: &str) -> Result<Self, Error> {
        let key: String = s
            .trim()
            .trim_start_matches("is_")
            .chars()
            .filter(|c| *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        let alias = match key.as_str() {
            "length" | "meter" => Some(TypedPredicate::Metre),
            "mass" => Some(TypedPredicate::Kilogram),
            "time" => Some(TypedPredicate::Second),
            "current" => Some(TypedPredicate::Ampere),
            "temperature" | "temp" => Some(TypedPredicate::Kelvin),
            "amount" | "amountofsubstance" => Some(TypedPredicate::Mole),
            "luminosity" | "luminousintensity" => Some(TypedPredicate::Candela),
            "celsius" => Some(TypedPredicate::Celcius),
            _ => None,
        };
        alias
            .or_else(|| {
                TypedPredicate::ALL
                    .iter()
                    .copied()
                    .find(|p| p.name().to_ascii_lowercase() == key)
            })
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn pressure_scenario() {
        let wrong = KILOGRAM.divide(&si_acceleration()).unwrap();
        assert!(!is_pressure(&wrong));
        let pa = KILOGRAM
            .divide(&METRE.times(&SECOND.itself_n(2).unwrap()).unwrap())
            .unwrap();
        assert!(is_pressure(&pa));
        assert!(is_energy(&pa.times(&si_volume()).unwrap()));
    }

    #[test]
    fn every_si_unit_satisfies_its_predicate() {
        let si: Vec<_> = TypedPredicate::ALL.iter().filter(|p| !p.is_mhc()).collect();
        for ((name, ms), pred) in si_predefined().iter().zip(si) {
            assert!(pred.holds(ms), "{name} should satisfy {pred}");
        }
    }

    #[test]
    fn schema_and_label_matter() {
        assert!(!is_metre(&YARD));
        let relabelled = MeasurementSystem::new(METRE.quantity, ConversionSchema::SI, UnitSystem::new("X").unwrap());
        assert!(!is_metre(&relabelled));
        assert!(is_area(&si_area().scale(12.0).unwrap()));
    }

    #[test]
    fn mhc_predicates() {
        assert!(is_milligram(&mgram()));
        assert!(is_hour(&mhour()));
        assert!(is_hour(&h_week()));
        assert!(is_celcius(&mcelcius()));
        assert!(!is_hour(&SECOND));
        assert!(!is_milligram(&mhour()));
    }

    #[test]
    fn parse_names() {
        assert_eq!("Pressure".parse::<TypedPredicate>().unwrap(), TypedPredicate::Pressure);
        assert_eq!("is_energy".parse::<TypedPredicate>().unwrap(), TypedPredicate::Energy);
        assert_eq!("potential_difference".parse::<TypedPredicate>().unwrap(), TypedPredicate::PotentialDifference);
        assert_eq!("length".parse::<TypedPredicate>().unwrap(), TypedPredicate::Metre);
        assert!(matches!("Bogus".parse::<TypedPredicate>(), Err(Error::UnknownPredicate(_))));
    }
}
