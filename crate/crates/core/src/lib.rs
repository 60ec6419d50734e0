//! Simplicial abelian groups, their normalized chains, the
//! Eilenberg–Zilber maps and the Dold–Kan correspondence, computed exactly
//! over the integers on degree-truncated free models.

mod error;
pub mod delta;
pub mod linalg;
pub mod report;
pub mod simplicial;
pub mod chain;
pub mod ez;
pub mod dold_kan;
pub mod monoid;
pub mod verify;

pub use error::{Error, Result};
