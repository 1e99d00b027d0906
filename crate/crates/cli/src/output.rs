use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::args::{Format, OutputArgs};
use crate::error::{Failure, Outcome};

/// Directory for output files when `--output` is relative or absent.
pub const OUTPUT_DIR_VAR: &str = "AMPDIST_OUTPUT_DIR";

/// One table entry. Non-numeric outcomes stay distinguishable from numbers:
/// CSV writes them as bare tokens, JSON as tagged variants.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Cell {
    Value(f64),
    Label(String),
    Singular,
    Excluded,
    Na,
}

impl Cell {
    pub fn num(x: f64) -> Cell {
        if x.is_finite() {
            Cell::Value(x)
        } else {
            Cell::Na
        }
    }

    pub fn label(s: impl Into<String>) -> Cell {
        Cell::Label(s.into())
    }

    fn csv(&self) -> String {
        match self {
            // 17 significant digits round-trip every f64
            Cell::Value(x) => format!("{x:.16e}"),
            Cell::Label(s) => s.clone(),
            Cell::Singular => "singular".into(),
            Cell::Excluded => "excluded".into(),
            Cell::Na => "na".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        let metadata = vec![
            ("tool".to_string(), format!("ampdist {}", env!("CARGO_PKG_VERSION"))),
            ("command".to_string(), command.to_string()),
        ];
        Table { metadata, columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.metadata.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("tables serialize");
                s.push('\n');
                s
            }
        }
    }

    fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(s, "# {k}: {v}");
        }
        let _ = writeln!(s, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(s, "{}", cells.join(","));
        }
        s
    }
}

/// Where a command's output goes: an explicit path (relative ones under
/// the output directory when it is set), a default file name in the output
/// directory, or stdout.
pub fn destination(out: &OutputArgs, default_stem: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(OUTPUT_DIR_VAR).filter(|d| !d.is_empty()).map(PathBuf::from);
    match (&out.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => Some(d.join(format!("{default_stem}.{}", out.format.extension()))),
        (None, None) => None,
    }
}

pub fn emit(table: &Table, out: &OutputArgs, default_stem: &str) -> Outcome<()> {
    let text = table.render(out.format);
    match destination(out, default_stem) {
        Some(path) => write_file(&path, &text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| Failure::Io { path: "stdout".into(), source })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Outcome<()> {
    let io = |source| Failure::Io { path: path.display().to_string(), source };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(io)?;
    }
    std::fs::write(path, text).map_err(io)
}
