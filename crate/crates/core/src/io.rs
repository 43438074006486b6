//! JSON complex files.
//!
//! ```json
//! {
//!   "name": "octahedron",
//!   "facets": [[0, 2, 4], [0, 2, 5]],
//!   "coloring": {"0": 1, "2": 2},
//!   "metadata": {"source": "construct"}
//! }
//! ```
//!
//! Labels are non-negative integers or strings. Files whose labels are all
//! integers below `2^32` keep them as vertex ids; otherwise labels are sorted
//! (integers first, then strings) and numbered from 0. Coloring keys are label
//! strings.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::Coloring;
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
  Int(u64),
  Str(String),
}

impl fmt::Display for Label {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      Label::Int(i) => write!(f, "{i}"),
      Label::Str(s) => write!(f, "{s}"),
    }
  }
}

/// The on-disk document.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub name:     Option<String>,
  pub facets:   Vec<Vec<Label>>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub coloring: Option<BTreeMap<String, u32>>,
  #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
  pub metadata: BTreeMap<String, Value>,
}

/// A parsed and validated file.
#[derive(Clone, Debug)]
pub struct Loaded {
  pub name:     Option<String>,
  pub complex:  Complex,
  pub coloring: Option<Coloring>,
  pub metadata: BTreeMap<String, Value>,
  labels:       BTreeMap<Vertex, Label>,
}

impl Loaded {
  /// The file label of a vertex.
  pub fn label(&self, v: Vertex) -> Label { self.labels.get(&v).cloned().unwrap_or(Label::Int(v.0 as u64)) }

  pub fn face_labels(&self, f: &Face) -> Vec<Label> { f.vertices().iter().map(|v| self.label(*v)).collect() }

  /// Replaces the complex, keeping name, metadata and labels.
  pub fn with_complex(self, complex: Complex, coloring: Option<Coloring>) -> Loaded { Loaded { complex, coloring, ..self } }
}

fn parse_error(e: serde_json::Error) -> Error {
  Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

pub fn parse_str(text: &str) -> Result<Loaded> {
  let file: ComplexFile = serde_json::from_str(text).map_err(parse_error)?;
  load(file)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Loaded> {
  let path = path.as_ref();
  let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
  parse_str(&text)
}

/// Validates a document and maps its labels to vertices.
pub fn load(file: ComplexFile) -> Result<Loaded> {
  let mut all: Vec<&Label> = file.facets.iter().flatten().collect();
  all.sort();
  all.dedup();
  let identity = all.iter().all(|l| matches!(l, Label::Int(i) if *i <= u32::MAX as u64));
  let ids: BTreeMap<&Label, Vertex> = all
    .iter()
    .enumerate()
    .map(|(k, l)| {
      let v = match (identity, l) {
        (true, Label::Int(i)) => Vertex(*i as u32),
        _ => Vertex(k as u32),
      };
      (*l, v)
    })
    .collect();
  let labels: BTreeMap<Vertex, Label> = ids.iter().map(|(l, v)| (*v, (*l).clone())).collect();

  let mut faces = Vec::with_capacity(file.facets.len());
  for facet in &file.facets {
    let face = Face::new(facet.iter().map(|l| ids[l])).map_err(|e| match e {
      Error::MalformedFace(v) => Error::Construction(format!("facet {facet:?} repeats label {}", labels[&v])),
      other => other,
    })?;
    faces.push(face);
  }
  let complex = Complex::from_faces(faces);

  let coloring = match &file.coloring {
    None => None,
    Some(map) => {
      let by_text: BTreeMap<String, Vertex> = ids.iter().map(|(l, v)| (l.to_string(), *v)).collect();
      let mut colors = BTreeMap::new();
      for (key, &c) in map {
        let v = by_text
          .get(key)
          .ok_or_else(|| Error::InvalidColoring(format!("label {key} does not occur in any facet")))?;
        colors.insert(*v, c);
      }
      let coloring = Coloring::new(colors, complex.d() as u32);
      coloring.validate(&complex).map_err(|e| match e {
        Error::ImproperColoring { u, v, color } => Error::InvalidColoring(format!(
          "edge {{{}, {}}} has both endpoints colored {color}",
          labels[&u], labels[&v]
        )),
        other => other,
      })?;
      Some(coloring)
    }
  };
  Ok(Loaded { name: file.name, complex, coloring, metadata: file.metadata, labels })
}

/// Canonical document for a complex whose vertex ids are its labels.
pub fn to_file(
  complex: &Complex,
  coloring: Option<&Coloring>,
  name: Option<&str>,
  metadata: BTreeMap<String, Value>,
) -> ComplexFile {
  ComplexFile {
    name: name.map(str::to_string),
    facets: complex.facets().iter().map(|f| f.vertices().iter().map(|v| Label::Int(v.0 as u64)).collect()).collect(),
    coloring: coloring.map(|k| k.iter().map(|(v, c)| (v.0.to_string(), c)).collect()),
    metadata,
  }
}

impl Loaded {
  /// The document this was read from, in canonical form and with the
  /// original labels.
  pub fn to_file(&self) -> ComplexFile {
    ComplexFile {
      name:     self.name.clone(),
      facets:   self.complex.facets().iter().map(|f| self.face_labels(f)).collect(),
      coloring: self.coloring.as_ref().map(|k| k.iter().map(|(v, c)| (self.label(v).to_string(), c)).collect()),
      metadata: self.metadata.clone(),
    }
  }
}

/// Renders a document with one facet per line; keys and facets come out in
/// a fixed order.
pub fn emit(file: &ComplexFile) -> String {
  let mut parts = Vec::new();
  if let Some(name) = &file.name {
    parts.push(format!("  \"name\": {}", json(name.as_str())));
  }
  let facets: Vec<String> = file.facets.iter().map(|f| format!("    [{}]", f.iter().map(json).collect::<Vec<_>>().join(", "))).collect();
  if facets.is_empty() {
    parts.push("  \"facets\": []".to_string());
  } else {
    parts.push(format!("  \"facets\": [\n{}\n  ]", facets.join(",\n")));
  }
  if let Some(coloring) = &file.coloring {
    let mut entries: Vec<(&String, &u32)> = coloring.iter().collect();
    entries.sort_by(|a, b| natural_key(a.0).cmp(&natural_key(b.0)));
    let body: Vec<String> = entries.iter().map(|(k, c)| format!("{}: {c}", json(k.as_str()))).collect();
    parts.push(format!("  \"coloring\": {{{}}}", body.join(", ")));
  }
  if !file.metadata.is_empty() {
    parts.push(format!("  \"metadata\": {}", json(&file.metadata)));
  }
  format!("{{\n{}\n}}\n", parts.join(",\n"))
}

/// Integers in numeric order before everything else.
fn natural_key(s: &str) -> (u8, u64, &str) {
  match s.parse::<u64>() {
    Ok(i) => (0, i, s),
    Err(_) => (1, 0, s),
  }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String { serde_json::to_string(v).expect("plain data serializes") }

pub fn write_file(path: impl AsRef<Path>, file: &ComplexFile) -> Result<()> {
  let path = path.as_ref();
  std::fs::write(path, emit(file)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::constructions::{cross_polytope, named};

  #[test]
  fn triangle() {
    let l = parse_str(r#"{"facets":[[1,2],[2,3],[1,3]]}"#).unwrap();
    assert_eq!(l.complex, Complex::from_facets([[1u32, 2], [2, 3], [1, 3]]).unwrap());
    assert!(l.coloring.is_none());
  }

  #[test]
  fn string_labels_are_reindexed() {
    let l = parse_str(r#"{"facets":[["b","a"],["c","b"],[7,"a"]]}"#).unwrap();
    // sorted labels: 7, a, b, c
    assert_eq!(l.complex, Complex::from_facets([[0u32, 1], [1, 2], [2, 3]]).unwrap());
    assert_eq!(l.label(Vertex(0)), Label::Int(7));
    assert_eq!(l.label(Vertex(3)), Label::Str("c".into()));
    let again = parse_str(&emit(&l.to_file())).unwrap();
    assert_eq!(again.complex, l.complex);
    assert_eq!(again.to_file(), l.to_file());
  }

  #[test]
  fn parse_errors_have_positions() {
    let err = parse_str("{\n  \"facets\": [[1, 2],\n   [3,]\n}").unwrap_err();
    let Error::Parse { line, column, .. } = err else { panic!("expected a parse error, got {err}") };
    assert_eq!(line, 3);
    assert!(column > 0);
    assert!(matches!(parse_str(r#"{"facets":[[1,-2]]}"#), Err(Error::Parse { .. })));
    assert!(matches!(parse_str(r#"{"faces":[]}"#), Err(Error::Parse { .. })));
    assert!(matches!(parse_str(r#"{"facets":[[1,1]]}"#), Err(Error::Construction(_))));
  }

  #[test]
  fn improper_coloring_names_the_edge() {
    let err = parse_str(r#"{"facets":[["x","y"],["y","z"]],"coloring":{"x":1,"y":2,"z":2}}"#).unwrap_err();
    assert_eq!(err.to_string(), "invalid coloring: edge {y, z} has both endpoints colored 2");
    let err = parse_str(r#"{"facets":[[1,2]],"coloring":{"1":1}}"#).unwrap_err();
    assert!(matches!(err, Error::InvalidColoring(_)));
  }

  #[test]
  fn octahedron_round_trip() {
    let (oct, k) = cross_polytope(3);
    let text = emit(&to_file(&oct, Some(&k), Some("octahedron"), BTreeMap::new()));
    let l = parse_str(&text).unwrap();
    assert_eq!(l.complex, oct);
    assert_eq!(l.coloring.as_ref(), Some(&k));
    assert_eq!(l.name.as_deref(), Some("octahedron"));
    assert_eq!(emit(&l.to_file()), text);
  }

  #[test]
  fn emit_is_canonical() {
    let a = parse_str(r#"{"facets":[[3,1],[2,1],[3,2],[1,2]],"metadata":{"k":[1,2]}}"#).unwrap();
    let text = emit(&a.to_file());
    assert_eq!(text, "{\n  \"facets\": [\n    [1, 2],\n    [1, 3],\n    [2, 3]\n  ],\n  \"metadata\": {\"k\":[1,2]}\n}\n");
    let rp2 = named("rp2_min").unwrap();
    let file = to_file(&rp2, None, None, BTreeMap::new());
    assert_eq!(parse_str(&emit(&file)).unwrap().complex, rp2);
  }

  #[test]
  fn void_file() {
    let l = parse_str(r#"{"facets":[]}"#).unwrap();
    assert!(l.complex.is_void());
    let l = parse_str(r#"{"facets":[[]]}"#).unwrap();
    assert_eq!(l.complex, Complex::empty());
  }
}
