//! Algebra files, bundled fixtures and module expressions.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use twintau_core::{BoundQuiverAlgebra, Catalog, Error, Field, MonomialRelation, Quiver, Result};

pub const NAKAYAMA_A3: &str = include_str!("../data/nakayama_a3.json");
pub const HEREDITARY_A2: &str = include_str!("../data/hereditary_a2.json");

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub field: FieldSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: 2 }
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra file: {e}")))
    }

    /// Builds the algebra; `p` overrides the file's field.
    pub fn build(&self, p: Option<u32>) -> Result<BoundQuiverAlgebra> {
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str()))
            .collect();
        let quiver = Quiver::new(&vertices, &arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|r| MonomialRelation::new(&quiver, r))
            .collect::<Result<Vec<_>>>()?;
        let field = Field::new(p.unwrap_or(self.field.p))?;
        BoundQuiverAlgebra::build(quiver, relations, field)
    }
}

pub fn parse_algebra_file(path: &Path, p: Option<u32>) -> Result<BoundQuiverAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    AlgebraFile::parse(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        .build(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fixture {
    #[value(name = "nakayama_a3")]
    NakayamaA3,
    #[value(name = "hereditary_a2")]
    HereditaryA2,
}

impl Fixture {
    pub fn source(self) -> &'static str {
        match self {
            Fixture::NakayamaA3 => NAKAYAMA_A3,
            Fixture::HereditaryA2 => HEREDITARY_A2,
        }
    }

    pub fn algebra(self, p: Option<u32>) -> Result<Arc<BoundQuiverAlgebra>> {
        Ok(Arc::new(AlgebraFile::parse(self.source())?.build(p)?))
    }
}

/// Resolves `"L1+L2+..."` to a sorted multiset of catalog indices; `"0"`
/// summands are dropped.
pub fn parse_module_expr(expr: &str, cat: &Catalog) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in expr.split('+').map(str::trim) {
        if part == "0" {
            continue;
        }
        if part.is_empty() {
            return Err(Error::Parse(format!("empty summand in '{expr}'")));
        }
        out.push(
            cat.index_of(part)
                .ok_or_else(|| Error::UnknownLabel(part.to_string()))?,
        );
    }
    out.sort_unstable();
    Ok(out)
}

/// Splits the concatenated notation `S1S3P1` (also `Λ`, `DΛ`, `0`) into
/// labels. `Λ` and `DΛ` expand to the projectives and injectives of `cat`.
pub fn parse_concat_module(text: &str, cat: &Catalog) -> Result<Vec<usize>> {
    let text = text.trim();
    match text {
        "0" => return Ok(Vec::new()),
        "Λ" => return cat.projectives(),
        "DΛ" => return cat.injectives(),
        _ => {}
    }
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        if !matches!(chars[k], 'S' | 'P' | 'I') {
            return Err(Error::Parse(format!("unexpected '{}' in '{text}'", chars[k])));
        }
        let mut end = k + 1;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        let label: String = chars[k..end].iter().collect();
        out.push(
            cat.index_of(&label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?,
        );
        k = end;
    }
    out.sort_unstable();
    Ok(out)
}

/// `0`, `mod` or `add{L1,L2,...}`.
pub fn parse_add_subcat(text: &str, cat: &Catalog) -> Result<Vec<usize>> {
    let text = text.trim();
    match text {
        "0" => return Ok(Vec::new()),
        "mod" => return Ok((0..cat.len()).collect()),
        _ => {}
    }
    let inner = text
        .strip_prefix("add{")
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected add{{...}}, got '{text}'")))?;
    let mut out = inner
        .split(',')
        .map(|l| {
            cat.index_of(l.trim())
                .ok_or_else(|| Error::UnknownLabel(l.trim().to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}
