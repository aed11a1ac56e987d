//! Simulators: dense circuit and pattern semantics, state vectors and a
//! stabilizer tableau.

mod circuit;
mod dense;
mod error;
mod pattern;
mod reg;
mod state;
mod tableau;

pub use circuit::{circuit_unitary, cz_matrix, czpow_matrix, j_matrix, MAX_CIRCUIT_WIRES};
pub use dense::{c64, equal_up_to_phase, equal_up_to_phase_and_scale, DenseMatrix, DEFAULT_TOL};
pub use error::{SimError, SimResult};
pub use pattern::{pattern_unitary, pattern_unitary_on, pattern_unitary_with, SimOptions, MAX_ENTRIES, MAX_MEASUREMENTS};
pub use state::{PauliString, StateVector};
pub use tableau::{CliffordGate, MeasureOutcome, StabilizerTableau};
