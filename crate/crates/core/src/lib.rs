//! Construction, recognition, transformation, and analysis of veto-interval
//! graphs and their relatives: unit/proper/midpoint veto, k-veto, single and
//! double approval, and point-core bitolerance.
//!
//! All coordinates are exact rationals. The core is generic over the scalar
//! through [`scalar::Coord`]; [`Q`] is the default concrete choice.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod families;
pub mod graph;
pub mod io;
pub mod linear;
pub mod model;
pub mod randgen;
pub mod recognize;
pub mod scalar;
pub mod semantics;

/// Default coordinate type: arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

/// A marked interval over the default scalar.
pub type Interval = model::MarkedInterval<Q>;

/// A representation over the default scalar.
pub type Rep = model::Representation<Q>;

pub use graph::{Digraph, SimpleGraph};
pub use model::{Flavor, FlavorSet, OrderingWord};
pub use scalar::Coord;
pub use semantics::SemanticsTag;
