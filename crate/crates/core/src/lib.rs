//! Exact computations for compatible pre-Lie algebras given by structure
//! constants over ℚ.
//!
//! The crate covers the Matsushima–Nijenhuis graded Lie algebra of cochains,
//! the total cochain complexes with adjoint or module coefficients and their
//! cohomology, Nijenhuis operators, infinitesimal and truncated formal
//! deformations (with an order-by-order trivialization probe), and abelian
//! extensions classified by second cohomology.
//!
//! ```
//! use copre::{algebra::{fixtures, validate_compatible}, cohomology::TotalComplex};
//!
//! let a = fixtures::a2_with_zero();
//! assert!(validate_compatible(&a).passed());
//! let h1 = TotalComplex::adjoint(&a).cohomology(1);
//! assert_eq!(h1.dim_h, h1.dim_cocycles);
//! ```

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod io;
pub mod lift;
pub mod linalg;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational};
