//! Exact enumeration and verification toolkit for simultaneous core
//! partitions.
//!
//! The pieces fit together as follows: a generator set `S` with `gcd(S) = 1`
//! determines the finite poset of gaps of the numerical semigroup it
//! generates ([`poset::GapPoset`]); lower ideals of that poset are in
//! bijection with `S`-core partitions via first-column hook lengths
//! ([`partition`]); for two generators they are also counted by rectangular
//! Dyck paths, and for consecutive generators by generalized Dyck paths
//! ([`paths`]). [`verify`] turns each counting statement into a check with an
//! independent oracle.

pub mod algebra;
pub mod error;
pub mod partition;
pub mod paths;
pub mod poset;
pub mod verify;

pub use algebra::{binomial, catalan, q_binomial, Integer, PowerSeries, QPoly};
pub use error::{Error, Result};
pub use partition::{HookSet, Orientation, Partition};
pub use paths::{GdStep, GeneralizedDyckPath, RectPath, Step};
pub use poset::{multi_catalan, GapPoset, GeneratorSet, LowerIdeal};
