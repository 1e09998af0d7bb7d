//! Realizable COMs from affine arrangements, a named catalog, and seeded
//! random instances.

pub mod arrangement;
pub mod catalog;
pub mod feasibility;
pub mod random;
pub mod rational;

pub use arrangement::{com_from_arrangement, Arrangement, HalfSpace, Hyperplane, Sense};
pub use feasibility::{feasible, Constraint};
pub use random::{random_com, RandomSpec};
pub use rational::Rational;
