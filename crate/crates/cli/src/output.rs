//! Report envelope and formatting.

use serde_json::{json, Map, Value};
use symmetria::Error;

/// Significant digits of every number in JSON output.
pub const SIG_DIGITS: usize = 12;

pub struct CommandReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub wall_time: f64,
}

/// Rounds to [`SIG_DIGITS`] significant digits; integers pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Applies [`round_sig`] to every float in `v`.
pub fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            json!(round_sig(n.as_f64().unwrap_or(f64::NAN)))
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(m) => {
            Value::Object(m.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

fn envelope(r: &CommandReport) -> Value {
    // serde_json's default map is ordered by key, so output keys are sorted.
    let mut m = Map::new();
    m.insert("command".into(), json!(r.command));
    m.insert("inputs".into(), r.inputs.clone());
    m.insert("result".into(), r.result.clone());
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("wall_time".into(), json!(r.wall_time));
    round_value(Value::Object(m))
}

pub fn to_json(r: &CommandReport) -> String {
    serde_json::to_string_pretty(&envelope(r)).expect("report is serializable")
}

pub fn error_json(e: &Error) -> String {
    let v = json!({
        "error": { "name": e.name(), "message": e.to_string() },
        "version": env!("CARGO_PKG_VERSION"),
    });
    serde_json::to_string_pretty(&v).expect("error is serializable")
}

pub fn to_text(r: &CommandReport, lines: &[String]) -> String {
    let mut s = String::new();
    for l in lines {
        s.push_str(l);
        s.push('\n');
    }
    s.push_str(&format!("({} in {:.3} s)\n", r.command, r.wall_time));
    s
}

/// `x` with [`SIG_DIGITS`] significant digits, for text output.
pub fn num(x: f64) -> String {
    let r = round_sig(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e12) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(0.694_762_960_347_282_2), 0.694_762_960_347);
        assert_eq!(round_sig(1.0), 1.0);
        assert_eq!(round_sig(-123_456.789_012_345_6), -123_456.789_012);
        assert_eq!(
            round_value(json!({"a": [0.1234567890123456, 3]})),
            json!({"a": [0.123456789012, 3]})
        );
        assert_eq!(num(-1.552_787_507_3e-11), "-1.5527875073e-11");
        assert_eq!(num(0.5), "0.5");
    }
}
