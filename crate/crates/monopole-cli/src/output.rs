//! Rendering helpers: fixed 12-decimal floats, closed-form annotations,
//! stable JSON.

use monopole_core::SpectrumLine;
use serde_json::Value;

use crate::reference::closed_form;

/// One spectrum line as `[value]^multiplicity`, annotated when the value has
/// a known closed form.
pub fn render_line(line: &SpectrumLine) -> String {
    // rounding first keeps numerical -0.0000… from printing a sign
    let value = (line.eigenvalue * 1e12).round() / 1e12 + 0.0;
    let mut out = format!("[{value:.12}]^{}", line.multiplicity);
    if let Some(name) = closed_form(line.eigenvalue) {
        out.push_str(&format!("  ({name})"));
    }
    out
}

/// Indented block of lines, largest eigenvalue first.
pub fn render_spectrum(lines: &[SpectrumLine]) -> String {
    lines
        .iter()
        .rev()
        .map(|l| format!("  {}", render_line(l)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Round every number in a JSON tree to 12 decimals so exports are stable.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.as_i64().is_none() && n.as_u64().is_none() {
                    let rounded = (f * 1e12).round() / 1e12;
                    if let Some(num) = serde_json::Number::from_f64(rounded) {
                        *value = Value::Number(num);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn lines_carry_annotations() {
        let line = SpectrumLine::new(3.0f64.sqrt(), 4);
        assert_eq!(render_line(&line), "[1.732050807569]^4  (√3)");
        let plain = SpectrumLine::new(2.0, 3);
        assert_eq!(render_line(&plain), "[2.000000000000]^3");
    }

    #[test]
    fn rounding_is_idempotent_and_preserves_integers() {
        let mut v = json!({"a": 0.1234567890123456, "b": 7, "c": [1.0000000000004]});
        round_floats(&mut v);
        assert_eq!(v["a"], json!(0.123456789012));
        assert_eq!(v["b"], json!(7));
        let reparsed: Value = serde_json::from_str(&v.to_string()).unwrap();
        assert_eq!(reparsed, v);
    }
}
