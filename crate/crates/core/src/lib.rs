//! Exact computations on finite simplicial complexes: face numbers, reduced
//! homology over `Q` and prime fields, Cohen-Macaulay and Buchsbaum-type
//! predicates, and the constructions used to exercise them.

pub mod classify;
pub mod complex;
pub mod constructions;
pub mod enumerative;
pub mod error;
pub mod explore;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod par;
pub mod suites;

pub use classify::{Coloring, ColoringSearch, Property, PropertyReport, Witness};
pub use complex::{Complex, Face, Vertex};
pub use error::{Error, Result};
pub use homology::BettiVector;
pub use linalg::CoefficientField;
