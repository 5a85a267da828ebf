//! Exact counts of rhombus tilings of the hexagon with sides
//! `N, M, N, N, M, N` that contain a fixed rhombus on the symmetry axis.
//!
//! The crate has three independent routes to each count:
//!
//! * [`closed_forms`]: product and sum formulas in exact rational arithmetic;
//! * [`lgv`]: determinants of lattice-path matrices, evaluated exactly;
//! * [`oracle`]: exhaustive enumeration of tilings of explicit regions built in
//!   [`hexagon`].
//!
//! [`verify`] runs the cross-checks between them and [`sweep`] produces
//! convergence tables for the arcsine asymptotics.

pub mod closed_forms;
pub mod error;
pub mod exact_math;
pub mod hexagon;
pub mod lgv;
pub mod oracle;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use exact_math::{ExactInteger, ExactRational, RationalPolynomial};
pub use hexagon::{AxisIndex, HexagonSpec, Parity, RegionDescriptor, RegionKind, TheoremParams};
