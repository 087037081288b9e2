//! Exact arithmetic, verification, construction and search for perfect and
//! odd perfect quaternion sequences and the Williamson-type designs behind
//! them.

pub mod catalog;
pub mod constructions;
pub mod correlation;
pub mod designs;
pub mod error;
pub mod quaternion;
pub mod search;
pub mod sequence;

pub use error::{Error, Result};
pub use quaternion::{Alphabet, HurwitzUnit, Quat};
pub use sequence::{QSeq, Quad};
