//! The `--format records` output: one `key=value` line per datum.
//!
//! Keys never contain `=` or line breaks. In values, `\` is written `\\` and a line break
//! `\n`, so every record fits on one line and [`parse_records`] inverts [`render_records`].

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("line {0}: missing `=`")]
    MissingSeparator(usize),
    #[error("line {0}: empty key")]
    EmptyKey(usize),
    #[error("line {line}: bad escape `\\{found}`")]
    BadEscape { line: usize, found: String },
}

/// An ordered list of records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Records(Vec<(String, String)>);

impl Records {
    pub fn new() -> Self {
        Records::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        let key = key.into();
        assert!(
            !key.is_empty() && !key.contains(['=', '\n', '\r']),
            "invalid record key {key:?}"
        );
        self.0.push((key, value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn render_records(records: &Records) -> String {
    let mut out = String::new();
    for (k, v) in records.iter() {
        let _ = write!(out, "{k}=");
        for c in v.chars() {
            match c {
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                c => out.push(c),
            }
        }
        out.push('\n');
    }
    out
}

pub fn parse_records(text: &str) -> Result<Records, RecordError> {
    let mut records = Records::new();
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let (key, raw) = line
            .split_once('=')
            .ok_or(RecordError::MissingSeparator(n))?;
        if key.is_empty() {
            return Err(RecordError::EmptyKey(n));
        }
        let mut value = String::with_capacity(raw.len());
        let mut chars = raw.chars();
        while let Some(c) = chars.next() {
            if c != '\\' {
                value.push(c);
                continue;
            }
            match chars.next() {
                Some('\\') => value.push('\\'),
                Some('n') => value.push('\n'),
                Some('r') => value.push('\r'),
                other => {
                    return Err(RecordError::BadEscape {
                        line: n,
                        found: other.map(String::from).unwrap_or_default(),
                    })
                }
            }
        }
        records.0.push((key.to_string(), value));
    }
    Ok(records)
}
