//! Exact verification toolkit for binary error-correcting codes.
//!
//! * [`f2core`]: words, codes, linear spans, duals and distance distributions.
//! * [`golay`]: the extended Golay code, its shortenings and the optimal
//!   constant-weight and `(20,8)` codes derived from it.
//! * [`lpbound`]: exact-rational Delsarte LP bounds with side constraints.
//! * [`canon`]: code equivalence through canonical labels of colored graphs.
//! * [`classify20`]: the `2^16` coset-flip codes and their classification.
//! * [`certcheck`]: rigorous checking of approximate dual certificates.
//! * [`cli`]: the command-line front end.

#![allow(clippy::needless_range_loop, clippy::len_without_is_empty)]

pub mod canon;
pub mod certcheck;
pub mod classify20;
pub mod cli;
pub mod error;
pub mod f2core;
pub mod golay;
pub mod lpbound;
pub mod rational;

pub use error::{Error, Result};
pub use f2core::{Code, LinearCode, Word};
