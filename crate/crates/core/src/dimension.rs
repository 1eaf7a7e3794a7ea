//! The seven ISQ base dimensions and the abelian group of dimension vectors.
//!
//! A [`DimensionVector`] is total: every base dimension carries an integer
//! exponent, and any dimension left out of a construction has exponent zero.
//! Multiplying two vectors adds exponents, so the group identity is the
//! dimensionless (all-zero) vector.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Div, Index, Mul};

use serde::de::Deserializer;
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// An ISQ base dimension, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Dimension {
    Length,
    Mass,
    Time,
    Current,
    Temperature,
    AmountOfSubstance,
    LuminousIntensity,
}

impl Dimension {
    pub const COUNT: usize = 7;

    /// All dimensions in canonical order (length, mass, time, current,
    /// temperature, amount of substance, luminous intensity).
    pub const ALL: [Dimension; Dimension::COUNT] = [
        Dimension::Length,
        Dimension::Mass,
        Dimension::Time,
        Dimension::Current,
        Dimension::Temperature,
        Dimension::AmountOfSubstance,
        Dimension::LuminousIntensity,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    /// Dimension symbol as used in exponent notation.
    pub const fn symbol(self) -> &'static str {
        match self {
            Dimension::Length => "L",
            Dimension::Mass => "M",
            Dimension::Time => "T",
            Dimension::Current => "I",
            Dimension::Temperature => "Θ",
            Dimension::AmountOfSubstance => "N",
            Dimension::LuminousIntensity => "J",
        }
    }

    /// Symbol of the SI base unit for this dimension.
    pub const fn si_unit(self) -> &'static str {
        match self {
            Dimension::Length => "m",
            Dimension::Mass => "kg",
            Dimension::Time => "s",
            Dimension::Current => "A",
            Dimension::Temperature => "K",
            Dimension::AmountOfSubstance => "mol",
            Dimension::LuminousIntensity => "cd",
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Dimension::Length => "Length",
            Dimension::Mass => "Mass",
            Dimension::Time => "Time",
            Dimension::Current => "Current",
            Dimension::Temperature => "Temperature",
            Dimension::AmountOfSubstance => "AmountOfSubstance",
            Dimension::LuminousIntensity => "LuminousIntensity",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Total mapping from every [`Dimension`] to an integer exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DimensionVector([i32; Dimension::COUNT]);

impl DimensionVector {
    /// The dimensionless vector.
    pub const ZERO: DimensionVector = DimensionVector([0; Dimension::COUNT]);

    pub const fn from_exponents(exponents: [i32; Dimension::COUNT]) -> Self {
        DimensionVector(exponents)
    }

    /// Builds a vector from a partial mapping; unlisted dimensions get 0.
    /// A dimension listed more than once keeps its last exponent.
    pub fn new<I>(partial: I) -> Self
    where
        I: IntoIterator<Item = (Dimension, i32)>,
    {
        let mut exponents = [0; Dimension::COUNT];
        for (dim, exp) in partial {
            exponents[dim.index()] = exp;
        }
        DimensionVector(exponents)
    }

    /// Vector with exponent 1 on `dim` and 0 elsewhere.
    pub const fn base(dim: Dimension) -> Self {
        let mut exponents = [0; Dimension::COUNT];
        exponents[dim.index()] = 1;
        DimensionVector(exponents)
    }

    pub const fn exponents(&self) -> [i32; Dimension::COUNT] {
        self.0
    }

    pub const fn get(&self, dim: Dimension) -> i32 {
        self.0[dim.index()]
    }

    pub fn is_dimensionless(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `(dimension, exponent)` pairs in canonical order, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (Dimension, i32)> + '_ {
        Dimension::ALL.iter().map(move |&d| (d, self.0[d.index()]))
    }

    /// Product of units: exponents add.
    pub const fn times(&self, other: &DimensionVector) -> DimensionVector {
        let mut out = [0; Dimension::COUNT];
        let mut i = 0;
        while i < Dimension::COUNT {
            out[i] = self.0[i] + other.0[i];
            i += 1;
        }
        DimensionVector(out)
    }

    pub const fn inv(&self) -> DimensionVector {
        let mut out = [0; Dimension::COUNT];
        let mut i = 0;
        while i < Dimension::COUNT {
            out[i] = -self.0[i];
            i += 1;
        }
        DimensionVector(out)
    }

    pub const fn divide(&self, other: &DimensionVector) -> DimensionVector {
        self.times(&other.inv())
    }

    pub const fn pow(&self, n: i32) -> DimensionVector {
        let mut out = [0; Dimension::COUNT];
        let mut i = 0;
        while i < Dimension::COUNT {
            out[i] = self.0[i] * n;
            i += 1;
        }
        DimensionVector(out)
    }
}

impl Index<Dimension> for DimensionVector {
    type Output = i32;

    fn index(&self, dim: Dimension) -> &i32 {
        &self.0[dim.index()]
    }
}

impl Mul for DimensionVector {
    type Output = DimensionVector;

    fn mul(self, rhs: DimensionVector) -> DimensionVector {
        self.times(&rhs)
    }
}

impl Div for DimensionVector {
    type Output = DimensionVector;

    fn div(self, rhs: DimensionVector) -> DimensionVector {
        self.divide(&rhs)
    }
}

impl FromIterator<(Dimension, i32)> for DimensionVector {
    fn from_iter<T: IntoIterator<Item = (Dimension, i32)>>(iter: T) -> Self {
        DimensionVector::new(iter)
    }
}

impl fmt::Display for DimensionVector {
    /// Exponent notation over the non-zero dimensions, e.g. `L^-1 M T^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("1");
        }
        let mut first = true;
        for (dim, exp) in self.iter().filter(|&(_, e)| e != 0) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                f.write_str(dim.symbol())?;
            } else {
                write!(f, "{}^{}", dim.symbol(), exp)?;
            }
        }
        Ok(())
    }
}

impl Serialize for DimensionVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(Dimension::COUNT))?;
        for (dim, exp) in self.iter() {
            map.serialize_entry(&dim, &exp)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for DimensionVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let partial = HashMap::<Dimension, i32>::deserialize(deserializer)?;
        Ok(DimensionVector::new(partial))
    }
}

pub const LENGTH: DimensionVector = DimensionVector::base(Dimension::Length);
pub const MASS: DimensionVector = DimensionVector::base(Dimension::Mass);
pub const TIME: DimensionVector = DimensionVector::base(Dimension::Time);
pub const CURRENT: DimensionVector = DimensionVector::base(Dimension::Current);
pub const TEMP: DimensionVector = DimensionVector::base(Dimension::Temperature);
pub const AMOUNT: DimensionVector = DimensionVector::base(Dimension::AmountOfSubstance);
pub const LUMINOSITY: DimensionVector = DimensionVector::base(Dimension::LuminousIntensity);

pub const AREA: DimensionVector = LENGTH.pow(2);
pub const VOLUME: DimensionVector = LENGTH.pow(3);
pub const FREQUENCY: DimensionVector = TIME.inv();
pub const VELOCITY: DimensionVector = LENGTH.divide(&TIME);
pub const ACCELERATION: DimensionVector = VELOCITY.divide(&TIME);
pub const FORCE: DimensionVector = MASS.times(&ACCELERATION);
pub const ENERGY: DimensionVector = FORCE.times(&LENGTH);
pub const POWER: DimensionVector = ENERGY.divide(&TIME);
pub const PRESSURE: DimensionVector = FORCE.divide(&AREA);
pub const CHARGE: DimensionVector = CURRENT.times(&TIME);
pub const POTENTIAL_DIFFERENCE: DimensionVector = POWER.divide(&CURRENT);
pub const CAPACITANCE: DimensionVector = CHARGE.divide(&POTENTIAL_DIFFERENCE);
pub const RADIAN: DimensionVector = LENGTH.divide(&LENGTH);
pub const STERADIAN: DimensionVector = AREA.divide(&AREA);
pub const WATTAGE: DimensionVector = ENERGY.divide(&TIME);

/// The 22 predefined vectors with their catalog names: seven base, fifteen
/// coherent derived.
pub const PREDEFINED: [(&str, DimensionVector); 22] = [
    ("LENGTH", LENGTH),
    ("MASS", MASS),
    ("TIME", TIME),
    ("CURRENT", CURRENT),
    ("TEMP", TEMP),
    ("AMOUNT", AMOUNT),
    ("LUMINOSITY", LUMINOSITY),
    ("AREA", AREA),
    ("VOLUME", VOLUME),
    ("FREQUENCY", FREQUENCY),
    ("VELOCITY", VELOCITY),
    ("ACCELERATION", ACCELERATION),
    ("ENERGY", ENERGY),
    ("POWER", POWER),
    ("FORCE", FORCE),
    ("PRESSURE", PRESSURE),
    ("CHARGE", CHARGE),
    ("POTENTIAL_DIFFERENCE", POTENTIAL_DIFFERENCE),
    ("CAPACITANCE", CAPACITANCE),
    ("RADIAN", RADIAN),
    ("STERADIAN", STERADIAN),
    ("WATTAGE", WATTAGE),
];

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Dimension::*;

    fn dv(pairs: &[(Dimension, i32)]) -> DimensionVector {
        DimensionVector::new(pairs.iter().copied())
    }

    #[test]
    fn make_defaults_to_zero() {
        assert_eq!(DimensionVector::new([]), DimensionVector::ZERO);
        let pa = dv(&[(Length, -1), (Mass, 1), (Time, -2)]);
        assert_eq!(pa.exponents(), [-1, 1, -2, 0, 0, 0, 0]);
        assert_eq!(pa, PRESSURE);
        assert_eq!(dv(&[(Length, 2)]), AREA);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(PRESSURE * VOLUME, ENERGY);
        assert_eq!(ENERGY, dv(&[(Length, 2), (Mass, 1), (Time, -2)]));
        assert_eq!(LENGTH * FREQUENCY, dv(&[(Length, 1), (Time, -1)]));
        assert_eq!(ENERGY * DimensionVector::ZERO, ENERGY);
    }

    #[test]
    fn inv_and_div_examples() {
        assert_eq!(TIME.inv(), dv(&[(Time, -1)]));
        assert_eq!(DimensionVector::ZERO.inv(), DimensionVector::ZERO);
        assert_eq!(ENERGY.inv(), dv(&[(Length, -2), (Mass, -1), (Time, 2)]));
        assert_eq!(LENGTH / TIME, VELOCITY);
        assert_eq!(ENERGY / ENERGY, DimensionVector::ZERO);
        // componentwise subtraction: [2,1,-2] - [3,0,0] = [-1,1,-2]
        assert_eq!((ENERGY / VOLUME).exponents(), [-1, 1, -2, 0, 0, 0, 0]);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(LENGTH.pow(3), dv(&[(Length, 3)]));
        assert_eq!(LENGTH.pow(2), dv(&[(Length, 2)]));
        assert_eq!(ENERGY.pow(1), ENERGY);
        assert_eq!(ENERGY.pow(0), DimensionVector::ZERO);
    }

    #[test]
    fn derived_constants() {
        assert_eq!(RADIAN, DimensionVector::ZERO);
        assert_eq!(STERADIAN, DimensionVector::ZERO);
        assert_eq!(POWER, WATTAGE);
        assert_eq!(CAPACITANCE.exponents(), [-2, -1, 4, 2, 0, 0, 0]);
        assert_eq!(POTENTIAL_DIFFERENCE.exponents(), [2, 1, -3, -1, 0, 0, 0]);
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(PRESSURE.to_string(), "L^-1 M T^-2");
        assert_eq!(DimensionVector::ZERO.to_string(), "1");
        let json = serde_json::to_string(&VELOCITY).unwrap();
        assert!(json.starts_with("{\"Length\":1,\"Mass\":0,\"Time\":-1"));
        let back: DimensionVector = serde_json::from_str(r#"{"Time":-1,"Length":1}"#).unwrap();
        assert_eq!(back, VELOCITY);
    }

    fn any_dv() -> impl Strategy<Value = DimensionVector> {
        prop::array::uniform7(-20i32..=20).prop_map(DimensionVector::from_exponents)
    }

    proptest! {
        #[test]
        fn abelian_group(a in any_dv(), b in any_dv(), c in any_dv()) {
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * DimensionVector::ZERO, a);
            prop_assert_eq!(a * a.inv(), DimensionVector::ZERO);
            prop_assert_eq!(a / b, a * b.inv());
        }

        #[test]
        fn power_law(a in any_dv(), m in -5i32..=5, n in -5i32..=5) {
            prop_assert_eq!(a.pow(m + n), a.pow(m) * a.pow(n));
        }
    }
}
