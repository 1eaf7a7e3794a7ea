use isq_core::catalog::*;
use isq_core::dimension::{ENERGY, PRESSURE, VELOCITY};
use isq_core::*;

#[test]
fn pressure_volume_is_energy() {
    let pa = KILOGRAM
        .divide(&METRE.times(&SECOND.itself_n(2).unwrap()).unwrap())
        .unwrap();
    assert_eq!(pa.dim(), PRESSURE);
    let epv = pa.times(&si_volume()).unwrap();
    assert_eq!(epv.dim(), ENERGY);
    assert!(is_energy(&epv));
    assert!(!is_pressure(&epv));
}

#[test]
fn mixed_speeds_follow_leading_operand() {
    let mph = bis_mile_per_hour().scale(20.0).unwrap();
    let kmh = si_kilometre()
        .divide(&hour(ConversionSchema::SI, UnitSystem::SI))
        .unwrap()
        .scale(20.0)
        .unwrap();
    let sum = mph.plus(&kmh).unwrap();
    assert_eq!(sum.unit, UnitSystem::BIS);
    assert_eq!(sum.dim(), VELOCITY);
    // yard per second
    let oracle = (20.0 * 1760.0 + 20.0 * 1000.0 / 0.9143993) / 3600.0;
    assert!((sum.magnitude() - oracle).abs() < 1e-9, "{}", sum.magnitude());

    let flipped = kmh.plus(&mph).unwrap();
    assert_eq!(flipped.unit, UnitSystem::SI);
}

#[test]
fn metric_round_trip_through_every_registered_schema() {
    for entry in Catalog::builtin().entries() {
        let ms = &entry.system;
        let si = metrify(ms);
        let back = MeasurementSystem::new(si, ConversionSchema::SI, UnitSystem::SI)
            .convert(&ms.schema, ms.unit.clone())
            .unwrap();
        let rel = (back.magnitude() - ms.magnitude()).abs() / ms.magnitude().abs();
        assert!(rel < 1e-12, "{}: {} vs {}", entry.name, back.magnitude(), ms.magnitude());
    }
}

#[test]
fn parsed_expression_matches_catalog_dimension() {
    let names = DimensionNames::si();
    for (text, unit) in [("kg * (m**2) / (s**2)", si_joule()), ("m / (s**2)", si_acceleration())] {
        let dv = expr_to_dv(&parse_unit(text).unwrap(), &names).unwrap();
        assert_eq!(dv, unit.dim());
        assert_eq!(dim_view(&names, &dv), text);
    }
}

#[test]
fn registry_file_round_trip() {
    let cat = Catalog::builtin();
    let mut buf = Vec::new();
    cat.write_jsonl(&mut buf).unwrap();
    let back = Catalog::read_jsonl(buf.as_slice()).unwrap();
    assert_eq!(back.entries(), cat.entries());
    let first = String::from_utf8(buf).unwrap();
    let line = first.lines().next().unwrap();
    let keys: Vec<_> = ["\"name\"", "\"unit\"", "\"schema\"", "\"dim\"", "\"magnitude\"", "\"symbols\""]
        .iter()
        .map(|k| line.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "{line}");
}
