use num_bigint::BigInt;
use serde_json::{Map, Value};

/// Output format selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// An ordered record rendered either as an aligned two-column table or as a
/// JSON object.
pub struct Report {
    fields: Vec<(String, Value)>,
    truncate: Option<usize>,
    truncated: bool,
}

impl Report {
    pub fn new(truncate: Option<usize>) -> Self {
        Report { fields: Vec::new(), truncate, truncated: false }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    /// Big integers are emitted as decimal strings, shortened under `--truncate`.
    pub fn put_int(&mut self, key: &str, value: &BigInt) -> &mut Self {
        let text = self.int_text(value);
        self.put(key, text)
    }

    pub fn int_text(&mut self, value: &BigInt) -> String {
        let s = value.to_string();
        let digits = s.trim_start_matches('-').len();
        match self.truncate {
            Some(n) if digits > 2 * n.max(1) => {
                self.truncated = true;
                let sign = if s.starts_with('-') { "-" } else { "" };
                let body = s.trim_start_matches('-');
                format!("{sign}{}...{} ({digits} digits)", &body[..n], &body[digits - n..])
            }
            _ => s,
        }
    }

    /// Table layout with the first value printed alone on its own line.
    pub fn render_bare_first(&self) -> String {
        let Some((_, first)) = self.fields.first() else {
            return String::new();
        };
        let rest = Report {
            fields: self.fields[1..].to_vec(),
            truncate: self.truncate,
            truncated: self.truncated,
        };
        format!("{}\n{}", table_cell(first), rest.render(Format::Table))
    }

    pub fn render(&self, format: Format) -> String {
        let mut fields = self.fields.clone();
        if self.truncated {
            fields.push(("canonical".to_string(), Value::Bool(false)));
        }
        match format {
            Format::Json => {
                let map: Map<String, Value> = fields.into_iter().collect();
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
                s.push('\n');
                s
            }
            Format::Table => {
                let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in &fields {
                    out.push_str(&format!("{k:<width$}  {}\n", table_cell(v)));
                }
                out
            }
        }
    }
}

fn table_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(table_cell).collect::<Vec<_>>().join(","),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}
