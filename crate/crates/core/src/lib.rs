//! Exact classification of limit sets `L(x)`, extended limit sets `J(x)` and
//! extended mixing limit sets `J^mix(0)` of vectors under matrices in Jordan
//! normal form, together with explicit witness sequences and a floating-point
//! oracle that cross-checks the classifier.

pub mod error;
pub mod exact;
pub mod hp;
pub mod jordan;
pub mod linalg;
pub mod classify;
pub mod witness;
pub mod oracle;
pub mod io;
pub mod selftest;

pub use error::{Error, Result};
