//! Sign-vector systems, tope graphs, VC-dimension and a proper labeled
//! sample compression scheme of size `vcd` for complexes of oriented
//! matroids (COMs).

pub mod axioms;
pub mod error;
pub mod generators;
mod io;
pub mod lemmas;
pub mod samples;
pub mod scheme;
pub mod sign;
pub mod system;
pub mod topegraph;
pub mod vcdim;

pub use axioms::{Classification, Violation};
pub use error::{Error, Result, ENUMERATION_CAP};
pub use generators::catalog;
pub use sign::{ElementSet, Sign, SignVector};
pub use system::SignSystem;
pub use topegraph::{ConvexRegion, DistanceTable, ThetaRelation, TopeGraph};
