//! Exact integer linear algebra.
//!
//! Relation matrices throughout the crate follow one convention: a matrix
//! `A` with `rows` rows and `cols` columns is read as a homomorphism
//! `Z^cols -> Z^rows`. Rows index generators, each column is one relation,
//! and the presented group is the cokernel `Z^rows / im(A)`.

mod abelian;
mod matrix;
mod smith;

pub use abelian::{AbelianGroup, GroupOrder};
pub use matrix::IntMatrix;
pub use smith::{cokernel, smith_normal_form, SmithForm};
