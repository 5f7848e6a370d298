pub mod error;
pub mod geometry;
pub mod linalg;
pub mod numrange;
pub mod regions;
pub mod rng;
pub mod sectorial;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{CMatrix, Complex, HermEigen};
pub use regions::{Angle, RegionFamily, RegionSpec};
