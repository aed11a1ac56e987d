//! Circuit to pattern direction: the gate homomorphism, standardisation,
//! Pauli simplification, signal shifting and dependency matrices.

mod deps;
mod error;
mod gf2;
mod phi;
mod rewrite;

pub use deps::{dependency_matrices, expected_dependencies, is_flow_function, test_dependencies, Dependencies};
pub use error::{DkpError, DkpResult};
pub use gf2::{gf2_inverse, Gf2Matrix};
pub use phi::phi;
pub use rewrite::{commute_pauli_first, dkp_complete, eliminate_pi, pauli_simplify, signal_shift, standardize};
