//! Table, CSV and JSON output.

use std::collections::BTreeSet;

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use twintau_core::{Catalog, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// How module and subcategory names are spelled in table cells.
#[derive(Clone, Copy, Debug)]
pub struct Names<'a> {
    pub cat: &'a Catalog,
    pub concat: bool,
}

impl Names<'_> {
    pub fn labels<I: IntoIterator<Item = usize>>(&self, idx: I) -> Vec<String> {
        idx.into_iter().map(|i| self.cat.label(i).to_string()).collect()
    }

    /// `S1+S3+P1`, or `S1S3P1` (with `Λ`/`DΛ`) with `--paper-names`; `0` if empty.
    pub fn module(&self, labels: &[String]) -> String {
        if labels.is_empty() {
            return "0".into();
        }
        if self.concat {
            let idx: BTreeSet<usize> = labels.iter().filter_map(|l| self.cat.index_of(l)).collect();
            let same = |v: Result<Vec<usize>>| {
                v.is_ok_and(|v| v.len() == labels.len() && v.into_iter().collect::<BTreeSet<_>>() == idx)
            };
            if same(self.cat.projectives()) {
                return "Λ".into();
            }
            if same(self.cat.injectives()) {
                return "DΛ".into();
            }
            labels.concat()
        } else {
            labels.join("+")
        }
    }

    /// `add{S1,S3}`, `0` or `mod`.
    pub fn subcat(&self, labels: &[String]) -> String {
        if labels.is_empty() {
            "0".into()
        } else if labels.len() == self.cat.len() {
            "mod".into()
        } else {
            format!("add{{{}}}", labels.join(","))
        }
    }
}

/// A record that can be shown as a table row.
pub trait Row {
    fn headers() -> Vec<&'static str>;
    fn cells(&self, names: &Names) -> Vec<String>;
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Output<R> {
    pub algebra: String,
    pub records: Vec<R>,
}

pub fn render<R: Row + Serialize>(out: &Output<R>, format: Format, names: &Names) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(out)?,
        Format::Csv => {
            let csv_names = Names {
                concat: false,
                ..*names
            };
            let mut lines = vec![R::headers().join(",")];
            for r in &out.records {
                lines.push(
                    r.cells(&csv_names)
                        .iter()
                        .map(|c| csv_field(c))
                        .collect::<Vec<_>>()
                        .join(","),
                );
            }
            lines.join("\n") + "\n"
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = out.records.iter().map(|r| r.cells(names)).collect();
            table(&R::headers(), &rows)
        }
    })
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| twintau_core::Error::Parse(e.to_string()))
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| twintau_core::Error::Parse(e.to_string()))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(|h| width(h)).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(width(c));
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.push(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .join("-+-"),
    );
    for r in rows {
        out.push(line(r.iter().map(String::as_str).collect()));
    }
    out.join("\n") + "\n"
}

/// `key  value` lines with the keys padded to a common width.
pub fn key_values(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|r| format!("{:<width$}  {}\n", r[0], r[1]))
        .collect()
}
