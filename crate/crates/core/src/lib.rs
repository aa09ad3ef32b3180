//! Quantum dynamical maps in A-form and B-form: construction, conversion,
//! composition, complete-positivity diagnostics, model families, and
//! Markov/non-Markov classification from intermediate-map positivity.

// Negated float comparisons are used on purpose so that NaN takes the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dynmaps;
pub mod markov;
pub mod matcore;
pub mod models;
