use thiserror::Error;

use crate::complex::{Face, Vertex};

/// Errors produced by complex construction, homology queries and file IO.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
  #[error("malformed face: vertex {0} appears more than once")]
  MalformedFace(Vertex),

  #[error("face {0} is not a face of the complex")]
  FaceNotPresent(Face),

  #[error("unknown vertex {0}")]
  UnknownVertex(Vertex),

  #[error("vertex {0} appears in both join factors")]
  LabelCollision(Vertex),

  #[error("complex is not pure")]
  NotPure,

  #[error("complex is void (it has no faces)")]
  VoidComplex,

  #[error("domain error: {0}")]
  Domain(String),

  #[error("{0} is not a prime")]
  NotPrime(u64),

  #[error("shape mismatch: {0}")]
  Shape(String),

  #[error("invalid coloring: {0}")]
  InvalidColoring(String),

  #[error("improper coloring: edge {{{u}, {v}}} has both endpoints colored {color}")]
  ImproperColoring { u: Vertex, v: Vertex, color: u32 },

  #[error("construction error: {0}")]
  Construction(String),

  #[error("unknown {kind} `{name}`")]
  Lookup { kind: &'static str, name: String },

  #[error("infeasible parameters: {0}")]
  Infeasible(String),

  #[error("parse error at line {line}, column {column}: {message}")]
  Parse { line: usize, column: usize, message: String },

  #[error("io error: {0}")]
  Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
  fn from(e: std::io::Error) -> Self { Error::Io(e.to_string()) }
}
