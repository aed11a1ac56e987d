//! Shared data model: angles, dependency expressions, open graphs with
//! measurement planes, measurement patterns and stable-index circuits.

pub mod angle;
pub mod circuit;
pub mod dep;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod fresh;
pub mod geometry;
pub mod json;
pub mod pattern;

pub use angle::Angle;
pub use circuit::{interaction_graph, same_gate_multiset, CircuitIR, Gate};
pub use dep::{bit_qubit, result_bit, DepExpr};
pub use error::{CoreError, CoreResult};
pub use fresh::FreshLabels;
pub use geometry::{compose_geometries, Geometry, IndexedGeometry, Plane};
pub use pattern::{pattern_geometry, patterns_congruent, validate_pattern, Command, Diagnostic, MeasurementPattern, Rule};
