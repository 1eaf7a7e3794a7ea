//! Time granularities, parameterised by conversion schema, plus the
//! hour-based calendar views used by the MHC system.

use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use crate::conversion::{ConversionSchema, MeasurementSystem, UnitSystem};
use crate::error::{Error, Result};
use crate::quantity::UNIT_TIME;

use super::{memo, mhour};

pub const SECONDS_PER_MINUTE: f64 = 60.0;
pub const MINUTES_PER_HOUR: f64 = 60.0;
pub const HOURS_PER_DAY: f64 = 24.0;
pub const DAYS_PER_WEEK: f64 = 7.0;
pub const DAYS_PER_YEAR: f64 = 365.0;

/// A unit second under the given schema and label.
pub fn second(cs: ConversionSchema, unit: UnitSystem) -> MeasurementSystem {
    MeasurementSystem::new(UNIT_TIME, cs, unit)
}

pub fn minute(cs: ConversionSchema, unit: UnitSystem) -> MeasurementSystem {
    second(cs, unit)
        .scale(SECONDS_PER_MINUTE)
        .expect("finite")
}

pub fn hour(cs: ConversionSchema, unit: UnitSystem) -> MeasurementSystem {
    second(cs, unit)
        .scale(SECONDS_PER_MINUTE)
        .and_then(|m| m.scale(MINUTES_PER_HOUR))
        .expect("finite")
}

/// Month of a non-leap Gregorian year.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Month {
    January,
    February,
    March,
    April,
    May,
    June,
    July,
    August,
    September,
    October,
    November,
    December,
}

impl Month {
    pub const ALL: [Month; 12] = [
        Month::January,
        Month::February,
        Month::March,
        Month::April,
        Month::May,
        Month::June,
        Month::July,
        Month::August,
        Month::September,
        Month::October,
        Month::November,
        Month::December,
    ];

    pub const fn days(self) -> u32 {
        match self {
            Month::February => 28,
            Month::April | Month::June | Month::September | Month::November => 30,
            _ => 31,
        }
    }

    /// Month from its 1-based number.
    pub fn from_number(n: u32) -> Result<Month> {
        n.checked_sub(1)
            .and_then(|i| Month::ALL.get(i as usize).copied())
            .ok_or_else(|| Error::UnknownMonth(n.to_string()))
    }
}

impl fmt::Display for Month {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Month {
    type Err = Error;

    /// Accepts full English names or their three-letter abbreviations,
    /// case-insensitively.
    fn from_str(s: &str) -> Result<Month> {
        let lower = s.trim().to_ascii_lowercase();
        Month::ALL
            .into_iter()
            .find(|m| {
                let name = m.to_string().to_ascii_lowercase();
                name == lower || (lower.len() == 3 && name.starts_with(&lower))
            })
            .ok_or_else(|| Error::UnknownMonth(s.to_string()))
    }
}

/// Days per month in a non-leap year.
pub const fn days_per_month(m: Month) -> u32 {
    m.days()
}

memo! {
    /// One day, in MHC hours.
    pub fn h_day() -> MeasurementSystem {
        mhour().scale(HOURS_PER_DAY).expect("finite")
    }
}

memo! {
    pub fn h_week() -> MeasurementSystem {
        h_day().scale(DAYS_PER_WEEK).expect("finite")
    }
}

memo! {
    pub fn h_year() -> MeasurementSystem {
        h_day().scale(DAYS_PER_YEAR).expect("finite")
    }
}

pub fn h_month(m: Month) -> MeasurementSystem {
    h_day().scale(f64::from(m.days())).expect("finite")
}

/// Interval in hours between doses taken `times_a_day` times a day.
pub fn every_x_hours(times_a_day: NonZeroU32) -> f64 {
    let doses = mhour().scale(f64::from(times_a_day.get())).expect("finite");
    h_day().scale(1.0 / doses.magnitude()).expect("finite").magnitude()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::mhc;
    use crate::dimension::TIME;

    #[test]
    fn hour_in_si() {
        let h = hour(ConversionSchema::SI, UnitSystem::SI);
        assert_eq!(h.magnitude(), 3600.0);
        assert_eq!(h.dim(), TIME);
        assert_eq!(minute(ConversionSchema::SI, UnitSystem::SI).magnitude(), 60.0);
        assert_eq!(second(ConversionSchema::SI, UnitSystem::SI).magnitude(), 1.0);
    }

    #[test]
    fn calendar_in_mhc_hours() {
        assert_eq!(h_day().magnitude(), 24.0);
        assert_eq!(h_day().schema, mhc());
        assert_eq!(h_week().magnitude(), 168.0);
        assert_eq!(h_year().magnitude(), 8760.0);
        assert_eq!(h_month(Month::February).magnitude(), 28.0 * 24.0);
        assert_eq!(h_month(Month::December).magnitude(), 31.0 * 24.0);
        let total: u32 = Month::ALL.iter().map(|m| m.days()).sum();
        assert_eq!(f64::from(total), DAYS_PER_YEAR);
    }

    #[test]
    fn month_parsing() {
        assert_eq!("feb".parse::<Month>().unwrap(), Month::February);
        assert_eq!("September".parse::<Month>().unwrap(), Month::September);
        assert_eq!(Month::from_number(12).unwrap(), Month::December);
        assert!(matches!("Smarch".parse::<Month>(), Err(Error::UnknownMonth(_))));
        assert!(Month::from_number(0).is_err());
        assert!(Month::from_number(13).is_err());
    }

    #[test]
    fn dosing_interval() {
        assert_eq!(every_x_hours(NonZeroU32::new(3).unwrap()), 8.0);
        assert_eq!(every_x_hours(NonZeroU32::new(1).unwrap()), 24.0);
    }
}
