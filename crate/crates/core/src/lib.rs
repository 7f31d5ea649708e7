//! Verification and fixed-point toolkit for F-metric spaces.
//!
//! * [`fclass`]: class-F generators `f` and altering distances `φ`, with sampled
//!   property checks.
//! * [`fspace`]: axioms (D1)–(D3) on finite spaces, the minimal slack `α`, open
//!   balls, disjoint-ball and local-base witnesses.
//! * [`conditions`]: Edelstein-, Kannan- and shift-type contraction checks.
//! * [`solver`]: Picard iteration, cycle detection, orbit diagnostics.
//! * [`corpus`]: the worked examples and random spaces.
//! * [`cli`]: the `fmetric` command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]
pub mod cli;
pub mod conditions;
pub mod corpus;
pub mod error;
pub mod fclass;
pub mod fspace;
pub mod io;
pub mod reproduce;
pub mod solver;
pub mod space;

pub use error::{Error, Result};
pub use fclass::{AlteringDistance, FGenerator};
pub use fspace::Witness;
pub use space::{AnalyticSpace, Basis, FiniteSpace, Map, Space};
