//! The catalog registry: every named measurement system with the symbols
//! that refer to it in unit expressions.
//!
//! The on-disk form is JSON Lines, one record per system. Fields appear in
//! this order: `name`, `unit`, `schema`, `dim`, `magnitude`, `symbols`.
//! `schema` and `dim` are objects keyed by dimension name; omitted schema
//! factors default to 1 and omitted exponents to 0. `symbols` may be
//! omitted. Blank lines and lines starting with `#` are skipped.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::conversion::{ConversionSchema, MeasurementSystem, UnitSystem};
use crate::dimension::DimensionVector;
use crate::error::{Error, Result};
use crate::quantity::Quantity;

use super::*;

/// Environment variable naming a registry file that replaces the built-in
/// catalog in the CLI.
pub const CATALOG_ENV: &str = "UNITC_CATALOG";

#[derive(Debug, Clone, PartialEq)]
pub struct NamedSystem {
    pub name: String,
    pub symbols: Vec<String>,
    pub system: MeasurementSystem,
}

/// One line of a registry file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegistryRecord {
    pub name: String,
    pub unit: UnitSystem,
    pub schema: ConversionSchema,
    pub dim: DimensionVector,
    pub magnitude: f64,
    #[serde(default)]
    pub symbols: Vec<String>,
}

impl From<&NamedSystem> for RegistryRecord {
    fn from(n: &NamedSystem) -> Self {
        RegistryRecord {
            name: n.name.clone(),
            unit: n.system.unit.clone(),
            schema: n.system.schema,
            dim: n.system.dim(),
            magnitude: n.system.magnitude(),
            symbols: n.symbols.clone(),
        }
    }
}

impl TryFrom<RegistryRecord> for NamedSystem {
    type Error = Error;

    fn try_from(r: RegistryRecord) -> Result<Self> {
        Ok(NamedSystem {
            name: r.name,
            symbols: r.symbols,
            system: MeasurementSystem::new(Quantity::new(r.magnitude, r.dim)?, r.schema, r.unit),
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<NamedSystem>,
    by_symbol: HashMap<String, usize>,
    by_name: HashMap<String, usize>,
}

impl Catalog {
    /// Builds a catalog, rejecting repeated names or symbols.
    pub fn new(entries: Vec<NamedSystem>) -> Result<Self> {
        let mut by_symbol = HashMap::new();
        let mut by_name = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if e.name.is_empty() {
                return Err(Error::Registry { line: i + 1, message: "empty name".into() });
            }
            if by_name.insert(e.name.clone(), i).is_some() {
                return Err(Error::Registry {
                    line: i + 1,
                    message: format!("duplicate name `{}`", e.name),
                });
            }
            for s in &e.symbols {
                if by_symbol.insert(s.clone(), i).is_some() {
                    return Err(Error::Registry {
                        line: i + 1,
                        message: format!("duplicate symbol `{s}`"),
                    });
                }
            }
        }
        Ok(Catalog {
            entries,
            by_symbol,
            by_name,
        })
    }

    /// The built-in catalog, built once.
    pub fn builtin() -> &'static Catalog {
        static BUILTIN: LazyLock<Catalog> =
            LazyLock::new(|| Catalog::new(builtin_entries()).expect("built-in catalog is consistent"));
        &BUILTIN
    }

    pub fn entries(&self) -> &[NamedSystem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Looks up a symbol (`"m"`, `"mile"`), falling back to the system
    /// name (`"SI_JOULE"`).
    pub fn lookup(&self, key: &str) -> Option<&NamedSystem> {
        self.by_symbol
            .get(key)
            .or_else(|| self.by_name.get(key))
            .map(|&i| &self.entries[i])
    }

    /// Every symbol, sorted.
    pub fn symbols(&self) -> Vec<String> {
        let mut all: Vec<String> = self.by_symbol.keys().cloned().collect();
        all.sort();
        all
    }

    pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::Registry { line: lineno, message: e.to_string() })?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let record: RegistryRecord = serde_json::from_str(trimmed)
                .map_err(|e| Error::Registry { line: lineno, message: e.to_string() })?;
            let named = NamedSystem::try_from(record)
                .map_err(|e| Error::Registry { line: lineno, message: e.to_string() })?;
            entries.push(named);
        }
        Catalog::new(entries)
    }

    pub fn write_jsonl<W: Write>(&self, mut writer: W) -> io::Result<()> {
        for e in &self.entries {
            serde_json::to_writer(&mut writer, &RegistryRecord::from(e))?;
            writer.write_all(b"\n")?;
        }
        Ok(())
    }
}

fn entry(name: &str, symbols: &[&str], system: MeasurementSystem) -> NamedSystem {
    NamedSystem {
        name: name.to_string(),
        symbols: symbols.iter().map(|s| s.to_string()).collect(),
        system,
    }
}

fn builtin_entries() -> Vec<NamedSystem> {
    let si_symbols: [&[&str]; 22] = [
        &["m", "metre", "meter"],
        &["kg", "kilogram"],
        &["s", "second"],
        &["A", "ampere"],
        &["K", "kelvin"],
        &["mol", "mole"],
        &["cd", "candela"],
        &[],
        &[],
        &["Hz", "hertz"],
        &[],
        &[],
        &["J", "joule"],
        &[],
        &["N", "newton"],
        &["Pa", "pascal"],
        &["C", "coulomb"],
        &["V", "volt"],
        &["F", "farad"],
        &["rad", "radian"],
        &["sr", "steradian"],
        &["W", "watt"],
    ];
    let mut entries: Vec<NamedSystem> = si_predefined()
        .into_iter()
        .zip(si_symbols)
        .map(|((name, ms), syms)| entry(name, syms, ms))
        .collect();

    let si_hour = hour(ConversionSchema::SI, UnitSystem::SI);
    let si_day = si_hour.scale(time::HOURS_PER_DAY).expect("finite");
    entries.extend([
        entry("YARD", &["yard", "yd"], YARD),
        entry("BIS_POUND", &["lb", "pound"], BIS_POUND),
        entry("BIS_RANKINE", &["degR", "rankine"], BIS_RANKINE),
        entry("BIS_CUBIC_YARD", &[], bis_cubic_yard()),
        entry("BIS_YARD_PER_SECOND", &[], bis_yard_per_second()),
        entry("CGS_CENTIMETRE", &["cm", "centimetre"], cgs_centimetre()),
        entry("CGS_GRAM", &["g", "gram"], cgs_gram()),
        entry("MGRAM", &["mg", "milligram"], mgram()),
        entry("MHOUR", &[], mhour()),
        entry("MCELCIUS", &[], mcelcius()),
        entry("SI_YARD", &[], si_yard()),
        entry("SI_FOOT", &[], si_foot()),
        entry("SI_MILE", &[], si_mile()),
        entry("SI_KILOMETRE", &["km", "kilometre"], si_kilometre()),
        entry("BIS_FOOT", &["ft", "foot"], bis_foot()),
        entry("BIS_INCH", &["in", "inch"], bis_inch()),
        entry("BIS_MILE", &["mi", "mile"], bis_mile()),
        entry("BIS_MILE_PER_HOUR", &["mph"], bis_mile_per_hour()),
        entry("SI_MINUTE", &["min", "minute"], minute(ConversionSchema::SI, UnitSystem::SI)),
        entry("SI_HOUR", &["h", "hour"], si_hour.clone()),
        entry("SI_DAY", &["day"], si_day.clone()),
        entry("SI_WEEK", &["week"], si_day.scale(time::DAYS_PER_WEEK).expect("finite")),
        entry("SI_YEAR", &["year"], si_day.scale(time::DAYS_PER_YEAR).expect("finite")),
        entry("H_DAY", &[], h_day()),
        entry("H_WEEK", &[], h_week()),
        entry("H_YEAR", &[], h_year()),
    ]);
    entries
}
