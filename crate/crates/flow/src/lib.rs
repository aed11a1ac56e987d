//! Flow machinery: path families, influence digraphs, systems of infima,
//! flow and eflow search, gflow checking, extremal graphs and a brute-force
//! reference search.

mod brute;
mod cert;
mod eflow;
mod error;
mod extremal;
mod find;
mod gflow;
mod infima;
mod paths;
mod successor;

pub use brute::{brute_force_flow, BRUTE_FORCE_LIMIT};
pub use cert::{check_flow_conditions, FlowCertificate, FlowKind, Order};
pub use eflow::find_eflow;
pub use error::{FlowError, FlowResult};
pub use extremal::{edge_bound, extremal_graph, extremal_label};
pub use find::find_flow;
pub use gflow::{gflow_violations, lift_eflow_to_gflow, lift_flow_to_gflow, odd_neighborhood, verify_gflow, GflowCertificate};
pub use infima::{natural_preorder, preceq_query, NaturalPreorder, SystemOfInfima};
pub use paths::{max_path_family, max_path_family_indexed};
pub use successor::{influence_digraph, Digraph, SuccessorMap};
