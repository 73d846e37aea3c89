//! Quantum invariants of Seifert fibered integral homology spheres Σ(p₁,…,pₙ).
//!
//! The crate computes the GPPV series Ẑ₀ through its plumbing lattice sum and
//! the theta-like series Ψ from the rational function G, the normalized WRT
//! invariant through its integral/residue decomposition, the Borel transform
//! of the Ohtsuki series with its pole set, complex Chern–Simons values, and
//! the radial asymptotics of Ψ at roots of unity.
//!
//! ```no_run
//! use seifert_quantum::seifert::SeifertData;
//! use seifert_quantum::qseries;
//!
//! let sd = SeifertData::new(&[2, 3, 5, 7]).unwrap();
//! let report = qseries::verify_zhat_psi(&sd, &rug::Rational::from(50)).unwrap();
//! assert!(report.verified);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod chern_simons;
pub mod cli;
pub mod error;
pub mod plumbing;
pub mod qseries;
pub mod radial;
pub mod resurgence;
pub mod seifert;
pub mod wrt;

pub use error::{Error, Result};

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 256;
