//! Syllable invariants, normal forms and extremal-length bounds for 3-braids.
//!
//! The crate is organised bottom-up:
//!
//! - [`braid_words`]: parsing, free reduction, cyclic words, syllables and `L(w)`.
//! - [`normal_form`]: the factorization `b = σ_j^k · b₁ · Δ^ℓ` and the map ϑ.
//! - [`matrix_oracles`]: Burau and PSL(2,ℤ) images, Nielsen–Thurston type, entropy.
//! - [`invariant_bounds`]: two-sided bounds on extremal length and entropy.
//! - [`analytic_blocks`]: elliptic integrals, slalom exact values, block maps,
//!   gluing and the constant audits.
//! - [`cli`]: the `braid3` command line front end.

pub mod analytic_blocks;
pub mod braid_words;
pub mod cli;
mod error;
pub mod invariant_bounds;
pub mod matrix_oracles;
pub mod normal_form;

pub use error::{Error, Result};
