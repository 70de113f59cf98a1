use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use solidcone::linalg::format_float;

pub const DIGITS: usize = 9;

pub fn f9(x: f64) -> String {
    format_float(x, DIGITS)
}

/// A command result: a text (or CSV) rendering, a JSON rendering and the
/// exit code.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: u8,
    pub out: Option<PathBuf>,
}

impl Output {
    pub fn new(text: String, report: &impl Serialize) -> Result<Self> {
        let mut json = serde_json::to_value(report)?;
        round_floats(&mut json);
        Ok(Self { text, json, code: 0, out: None })
    }

    pub fn code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }

    pub fn to_file(mut self, out: Option<PathBuf>) -> Self {
        self.out = out;
        self
    }

    pub fn emit(self, json: bool) -> Result<u8> {
        let mut body = if json { serde_json::to_string_pretty(&self.json)? } else { self.text };
        if !body.ends_with('\n') {
            body.push('\n');
        }
        match &self.out {
            Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout().lock().write_all(body.as_bytes())?,
        }
        Ok(self.code)
    }
}

/// Round every non-integer number to [`DIGITS`] significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let r: f64 = f9(x).parse().expect("formatted float parses");
            *v = serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number);
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(m) => m.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_are_rounded_and_integers_kept() {
        let mut v = serde_json::json!({"a": 0.1931420068473864, "b": [3, 1e-20], "c": "x"});
        round_floats(&mut v);
        assert_eq!(v.to_string(), r#"{"a":0.193142007,"b":[3,1e-20],"c":"x"}"#);
    }
}
