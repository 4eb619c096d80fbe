//! Machine-readable encodings shared by the subcommands.

use std::str::FromStr;

use naples_core::{IndexedSeries, QPolynomial};
use num_bigint::BigUint;
use serde_json::{json, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Exact JSON number for an arbitrary-size integer.
pub fn big(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits form a JSON number"))
}

/// `{"coeffs":[c0,c1,...]}`
pub fn poly_json(p: &QPolynomial) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(big).collect::<Vec<_>>() })
}

pub fn series_json(s: &IndexedSeries) -> Value {
    Value::Array(
        s.iter()
            .map(|(k, c)| json!([Number::from_str(&k.to_string()).unwrap(), big(c)]))
            .collect(),
    )
}

/// `q+3q^2+q^3+q^6`, ascending keys.
pub fn series_latex(s: &IndexedSeries, logarithmic: bool) -> String {
    if s.is_empty() {
        return "0".into();
    }
    s.iter()
        .map(|(key, c)| {
            let var = match (logarithmic, key) {
                (true, 1) => String::new(),
                (true, k) => format!("q^{{\\ln {k}}}"),
                (false, 1) => "q".to_string(),
                (false, k) if k < 10 => format!("q^{k}"),
                (false, k) => format!("q^{{{k}}}"),
            };
            let one = c == &BigUint::from(1u32);
            match (one, var.is_empty()) {
                (true, false) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

pub fn to_json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values are serializable");
    s.push('\n');
    s
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_stay_exact() {
        let v = BigUint::from(18u32).pow(40);
        let text = serde_json::to_string(&big(&v)).unwrap();
        assert_eq!(text, v.to_string());
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, big(&v));
    }

    #[test]
    fn series_rendering() {
        let f3 = IndexedSeries::from_terms([(1u128, 1u32), (2, 3), (3, 1), (6, 1)]);
        assert_eq!(series_latex(&f3, false), "q+3q^2+q^3+q^6");
        assert_eq!(series_latex(&f3, true), "1+3q^{\\ln 2}+q^{\\ln 3}+q^{\\ln 6}");
        assert_eq!(series_json(&f3).to_string(), "[[1,1],[2,3],[3,1],[6,1]]");
    }

    #[test]
    fn polynomial_json() {
        let p = QPolynomial::from_u64s(&[2, 1]);
        assert_eq!(poly_json(&p).to_string(), r#"{"coeffs":[2,1]}"#);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("abc"), "abc");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
