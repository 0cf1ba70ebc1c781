//! Deterministic serialization for the CLI: fixed-width decimal floats,
//! normalized rational strings, and the stable record envelope.

use num_rational::BigRational;
use serde_json::{Map, Value};

/// Scientific notation with exactly 17 significant digits (more only if
/// the shortest round-trip form needs them, which f64 never does).
/// 17 digits reparse to the identical bit pattern, so emitted values can
/// be compared exactly downstream.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let shortest = format!("{x:e}");
    let (mantissa, exponent) = shortest.split_once('e').expect("exponential form");
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let mut compact: String = digits.chars().filter(|c| *c != '.').collect();
    while compact.len() < 17 {
        compact.push('0');
    }
    let (head, tail) = compact.split_at(1);
    format!("{sign}{head}.{tail}e{exponent}")
}

/// Normalized "p/q" with gcd(p, q) = 1 and q > 0, the invariants the
/// rational type maintains itself.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Nearest f64 to an exact rational. Safe for any magnitude: unlike the
/// num-traits conversion it cannot produce NaN when numerator and
/// denominator individually overflow the float range.
pub fn ratio_to_float(r: &BigRational) -> f64 {
    crate::numeric::ratio_to_f64(r)
}

/// The output envelope every subcommand emits. Keys serialize sorted
/// (the map is tree-backed), so byte-identical round-trips come free.
pub fn record(
    command: &str,
    inputs: Value,
    results: Value,
    error_bounds: Option<Value>,
) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), Value::String("1".into()));
    map.insert("command".into(), Value::String(command.into()));
    map.insert("inputs".into(), inputs);
    map.insert("results".into(), results);
    if let Some(bounds) = error_bounds {
        map.insert("error_bounds".into(), bounds);
    }
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn float_formatting_is_fixed_width() {
        assert_eq!(format_float(1.29), "1.2900000000000000e0");
        assert_eq!(format_float(0.1), "1.0000000000000000e-1");
        assert_eq!(format_float(-0.0025), "-2.5000000000000000e-3");
        assert_eq!(format_float(0.0), "0.0000000000000000e0");
        assert_eq!(format_float(1e300), "1.0000000000000000e300");
        assert_eq!(format_float(f64::INFINITY), "inf");
        assert_eq!(format_float(f64::NAN), "nan");
    }

    #[test]
    fn float_formatting_round_trips() {
        for x in [
            1.29,
            -1.7,
            std::f64::consts::PI,
            1.0 / 3.0,
            6.02214076e23,
            f64::MIN_POSITIVE,
            5e-324,
            f64::MAX,
            1.0 + f64::EPSILON,
        ] {
            let rendered = format_float(x);
            let back: f64 = rendered.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{rendered}");
            let digits = rendered
                .split('e')
                .next()
                .unwrap()
                .chars()
                .filter(|c| c.is_ascii_digit())
                .count();
            assert!(digits >= 17, "{rendered}");
        }
    }

    #[test]
    fn ratio_formatting_is_normalized() {
        let r = BigRational::new(BigInt::from(34), BigInt::from(20));
        assert_eq!(format_ratio(&r), "17/10");
        let neg = BigRational::new(BigInt::from(3), BigInt::from(-4));
        assert_eq!(format_ratio(&neg), "-3/4");
        let int = BigRational::from(BigInt::from(5));
        assert_eq!(format_ratio(&int), "5/1");
    }

    #[test]
    fn record_round_trips_byte_identically() {
        let value = record(
            "gsum",
            serde_json::json!({"d1": 3, "d2": 4, "n": -2}),
            serde_json::json!({"direct": {"exact": "129/100"}}),
            Some(serde_json::json!({"zeta-a": "1.0000000000000000e-13"})),
        );
        let once = serde_json::to_string(&value).unwrap();
        let reparsed: Value = serde_json::from_str(&once).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), once);
    }
}
