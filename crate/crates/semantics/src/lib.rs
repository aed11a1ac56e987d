//! Pattern to circuit: star decomposition of flow geometries and extraction
//! of a {J, CZ} circuit from a standard DKP-form pattern.

mod error;
mod extract;
mod star;

pub use error::{SemanticsError, SemanticsResult};
pub use extract::semantic_dkp;
pub use star::{maximal_star_vertex, star_decompose, StarDecomposition, StarGeometry};
