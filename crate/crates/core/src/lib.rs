//! Numerical verification of log-majorization and matrix-mean inequalities.
//!
//! - [`linalg`]: complex matrices, Hermitian eigensolver, SVD, PSD powers and
//!   spectra of products.
//! - [`means`]: weighted geometric means `A #_t B`, `A #_{r,t} B` and `A ♮♮ B`,
//!   with an `εI` limit for semi-definite inputs.
//! - [`majorization`] and [`norms`]: (weak, reverse) log-majorization with
//!   per-k margins; Schatten and Ky Fan norms.
//! - [`randgen`]: counter-based random streams and matrix generators with a
//!   prescribed condition number.
//! - [`registry`]: the inequality catalog, its evaluators and the suite runner.
//! - [`search`]: random-restart hill climbing for counterexamples.

// `!(x >= 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod linalg;
pub mod majorization;
pub mod means;
pub mod norms;
pub mod randgen;
pub mod registry;
pub mod search;
pub mod serde_ext;
