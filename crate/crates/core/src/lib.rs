//! Exact construction and verification of symmetric orthogonal polynomials
//! of a discrete variable.
//!
//! The family `S_n(a,b,c,d;x)` solves a second-order difference equation on
//! the integer lattice determined by the characteristic vector `(a,b,c,d)`.
//! Everything is computed over ℚ (values involving `π^{k/2}` are carried as
//! [`PiValue`]), so orthogonality and norm identities are checked exactly.
//!
//! ```
//! use symdisc::{s_explicit, CharVector, Polynomial};
//!
//! let cv = CharVector::from_ints(1, 30, 299, 990);
//! assert_eq!(s_explicit(&cv, 2).unwrap(), Polynomial::from_ints(&[33, 0, 1]));
//! ```

pub mod classical_limits;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod field;
pub mod hyper;
pub mod ortho_moments;
pub mod polynomial;
pub mod ratfunc;
pub mod spolys;
pub mod symmetric_basis;
pub mod weights;

pub use error::{Error, Result};
pub use exact_arith::{PiValue, Rational};
pub use polynomial::{Parity, Polynomial};
pub use spolys::{s_explicit, s_recurrence, CharVector};
pub use weights::{SequenceParams, WeightFamily, WeightFamilyId};
