//! Interlacing families of polynomials.
//!
//! Real-rooted polynomial operators and barrier-function root bounds, mixed
//! characteristic polynomials of independent rank-one sums, and greedy
//! conditional-expectation selection for restricted invertibility, two-way
//! partitions of isotropic systems, and Ramanujan 2-lift signings. Every
//! identity is paired with a brute-force route so the bounds can be certified
//! on small instances.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`realroot`] | polynomials, `(1 − cD)`, Sturm counting, roots, interlacing |
//! | [`barrier`] | lower/upper barrier functions, soft spectral edges, shift lemmas |
//! | [`mixedchar`] | mixed characteristic polynomials and expected characteristic polynomials |
//! | [`select`] | the interlacing-family greedy and its instantiations |
//! | [`graphs`] | adjacency, Laplacians, matching polynomials, 2-lifts, Ramanujan checks |

pub mod barrier;
pub mod error;
pub mod graphs;
pub mod mixedchar;
pub mod realroot;
pub mod select;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};

/// Arithmetic used for identity checks: exact rationals or 64-bit floats.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    #[default]
    Float,
}

/// Default enumeration budget (leaf evaluations per greedy level).
pub const DEFAULT_BUDGET: u64 = 1 << 20;
