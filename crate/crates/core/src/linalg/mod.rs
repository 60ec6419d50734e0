//! Exact integer linear algebra on sparse matrices.

mod matrix;
pub mod smith;
pub mod solve;

pub use matrix::{format_combination, EntryDiff, Int, Matrix, SparseVec};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use solve::{inverse, kernel_basis, solve_integer_system, solve_many};
