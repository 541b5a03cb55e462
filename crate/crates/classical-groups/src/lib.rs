//! Exact-arithmetic construction of the split classical group schemes.
//!
//! The crate builds, over explicit small rings, the objects that underlie
//! the classical groups of types A, B, C and D: quadratic modules and
//! their Clifford algebras, orthogonal/symplectic/similitude groups and
//! their spin covers, Lie algebras computed from first-order deformations,
//! and split root data with Dynkin classification and center computations.
//! Every scalar is exact; there is no floating point in the crate.
//!
//! Start with the runnable examples (`cargo run -p classical-groups
//! --example root_data`, etc.) or the `cgv` command-line companion.

pub mod ring;
pub mod matrix;
pub mod clifford;
pub mod groups;
pub mod lie;
pub mod models;
pub mod pairs;
pub mod quadform;
pub mod snf;
pub mod rootdata;
pub mod tables;
pub mod tori;
pub mod laurent;

pub use matrix::Matrix;
pub use ring::{Dual, Field, Int, Rat, Ring, Tangent, Zmod, F2, F3, F5, F7};
