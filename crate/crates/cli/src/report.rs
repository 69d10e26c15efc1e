//! Output projections. JSON is the source of truth; CSV and text are derived from it.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What a verb hands back: one or more JSON records, and whether its checks held.
pub struct Report {
    pub records: Vec<Value>,
    pub ok: bool,
    /// Overrides the generic text projection.
    pub text: Option<String>,
}

impl Report {
    pub fn one<T: Serialize>(value: &T) -> Result<Report> {
        Ok(Report { records: vec![serde_json::to_value(value)?], ok: true, text: None })
    }

    pub fn many<T: Serialize>(values: &[T]) -> Result<Report> {
        let records = values.iter().map(serde_json::to_value).collect::<Result<_, _>>()?;
        Ok(Report { records, ok: true, text: None })
    }

    pub fn ok(mut self, ok: bool) -> Report {
        self.ok = ok;
        self
    }

    pub fn with_text(mut self, text: String) -> Report {
        self.text = Some(text);
        self
    }

    pub fn emit(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            // one object per line
            Format::Json => {
                for r in &self.records {
                    writeln!(out, "{}", serde_json::to_string(r)?)?;
                }
            }
            Format::Csv => self.emit_csv(out)?,
            Format::Text => match &self.text {
                Some(t) => write!(out, "{t}")?,
                None => {
                    for (i, r) in self.records.iter().enumerate() {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        write_text(r, out)?;
                    }
                }
            },
        }
        Ok(())
    }

    fn emit_csv(&self, out: &mut impl Write) -> Result<()> {
        let mut header: Vec<String> = Vec::new();
        for r in &self.records {
            if let Value::Object(m) = r {
                for k in m.keys() {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
        }
        if header.is_empty() {
            header.push("value".into());
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&header)?;
        for r in &self.records {
            let row: Vec<String> = match r {
                Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
                other => vec![cell(other)],
            };
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_text(v: &Value, out: &mut impl Write) -> Result<()> {
    match v {
        Value::Object(m) => {
            let width = m.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, v) in m {
                writeln!(out, "{k:<width$}  {}", cell(v))?;
            }
        }
        other => writeln!(out, "{}", cell(other))?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(r: &Report, f: Format) -> String {
        let mut buf = Vec::new();
        r.emit(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn projections() {
        let r = Report { records: vec![json!({"a": 1, "b": [1, 2]}), json!({"a": 2, "c": "x,y"})], ok: true, text: None };
        assert_eq!(render(&r, Format::Json), "{\"a\":1,\"b\":[1,2]}\n{\"a\":2,\"c\":\"x,y\"}\n");
        assert_eq!(render(&r, Format::Csv), "a,b,c\n1,\"[1,2]\",\n2,,\"x,y\"\n");
        assert!(render(&r, Format::Text).starts_with("a  1\nb  [1,2]\n"));
    }
}
