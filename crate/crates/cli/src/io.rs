use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{source_name}: {source}")]
    Io {
        source_name: String,
        #[source]
        source: io::Error,
    },
    #[error("{source_name}:{line}: {msg}")]
    Parse {
        source_name: String,
        line: usize,
        msg: String,
    },
    #[error("{source_name}: {msg}")]
    Content { source_name: String, msg: String },
}

/// Reads a whole file, or stdin for `-`.
pub fn read_text(path: &Path) -> Result<String, InputError> {
    let source_name = path.display().to_string();
    let res = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|source| InputError::Io { source_name, source })
}

/// Parsed numeric table: optional header plus rows, each tagged with its
/// 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Option<Vec<String>>,
    pub rows: Vec<(usize, Vec<f64>)>,
}

fn split_fields(line: &str) -> Vec<&str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|f| !f.is_empty())
        .collect()
}

/// Comma or whitespace separated numbers. Blank lines and `#` comments are
/// skipped; a first content line with no parseable field is a header.
pub fn parse_table(text: &str, source_name: &str) -> Result<Table, InputError> {
    let mut header = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = split_fields(line);
        let parsed: Vec<Result<f64, _>> = fields.iter().map(|f| f.parse::<f64>()).collect();
        if header.is_none() && rows.is_empty() && parsed.iter().all(|r| r.is_err()) {
            header = Some(fields.iter().map(|s| s.to_string()).collect());
            continue;
        }
        let mut row = Vec::with_capacity(fields.len());
        for (f, r) in fields.iter().zip(parsed) {
            match r {
                Ok(v) if v.is_finite() => row.push(v),
                _ => {
                    return Err(InputError::Parse {
                        source_name: source_name.to_string(),
                        line: i + 1,
                        msg: format!("expected a finite number, found {f:?}"),
                    })
                }
            }
        }
        rows.push((i + 1, row));
    }
    if rows.is_empty() {
        return Err(InputError::Content {
            source_name: source_name.to_string(),
            msg: "no data rows".into(),
        });
    }
    Ok(Table { header, rows })
}

impl Table {
    /// Every number in reading order.
    pub fn flatten(&self) -> Vec<f64> {
        self.rows.iter().flat_map(|(_, r)| r.iter().copied()).collect()
    }

    /// Index of a column given by header name or 0-based position.
    pub fn column_index(&self, spec: &str, source_name: &str) -> Result<usize, InputError> {
        if let Ok(i) = spec.parse::<usize>() {
            return Ok(i);
        }
        self.header
            .as_ref()
            .and_then(|h| h.iter().position(|name| name == spec))
            .ok_or_else(|| InputError::Content {
                source_name: source_name.to_string(),
                msg: format!("no column named {spec:?}"),
            })
    }

    pub fn column(&self, idx: usize, source_name: &str) -> Result<Vec<f64>, InputError> {
        self.rows
            .iter()
            .map(|(line, r)| {
                r.get(idx).copied().ok_or_else(|| InputError::Parse {
                    source_name: source_name.to_string(),
                    line: *line,
                    msg: format!("row has {} fields, column {idx} requested", r.len()),
                })
            })
            .collect()
    }
}

/// `%.15g`-style rendering: 15 significant digits, trailing zeros removed.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{v:.14e}");
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        trim_zeros(&format!("{:.*}", (14 - exp) as usize, v)).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mant), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// CSV text with a header row; cells are pre-rendered.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

/// Writes to `path`, or stdout when `None`.
pub fn emit(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| anyhow::anyhow!("{}: {e}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
