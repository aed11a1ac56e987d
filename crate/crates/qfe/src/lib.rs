//! Quadratic form expansions `C Σ_x e^{iQ(x)} |x_O⟩⟨x_I|`: a brute-force
//! evaluator, scalar-preserving rewrites, and synthesis of circuits and
//! measurement patterns from them.

mod error;
mod eval;
mod expansion;
mod generators;
mod rewrite;
mod synth;

pub use error::{QfeError, QfeResult};
pub use eval::{evaluate, Evaluation, MAX_EVAL_INDICES};
pub use expansion::{compose_qfe, induced_geometry, qfe_from_json, qfe_to_json, QfeDoc, QuadraticFormExpansion, TermDoc};
pub use generators::{
    circuit_qfe, identity_qfe, nonuniformity_gadget, parity_gadget, qft_qfe, zz_many_pattern, zz_many_qfe, zz_many_yz_pattern,
};
pub use rewrite::{decross, pad_outputs, telescope};
pub use synth::{synth_circuit_via_flow, synth_pattern_via_eflow, synth_pattern_via_gflow};
