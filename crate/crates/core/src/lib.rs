//! Cycle-family saturation: exact search, verifiers, named constructions and
//! structural analysis for graphs that avoid every cycle whose length lies in
//! a given set `I` but gain one from any added edge.

pub mod analysis;
pub mod bitset;
pub mod canon;
pub mod constructions;
pub mod families;
pub mod graph;
pub mod saturation;
pub mod search;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use canon::{canonical_form, CanonicalForm};
pub use constructions::{generate, sat_formula, Construction};
pub use families::CycleFamily;
pub use graph::{Graph, Graph6Error, GraphError};
pub use saturation::{check_saturated, SaturationVerdict, Verdict};
pub use search::{compute_sat, enumerate_connected, Budget, SearchMode, SearchResult};
