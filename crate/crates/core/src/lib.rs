//! Exterior 3-forms on `K^n` viewed as superpotentials.
//!
//! Given a 3-form `α`, this crate decides nondegeneracy and 3-regularity,
//! computes the Lie algebra generated by the slot matrices `A_k`, builds the
//! quadratic algebra `K⟨x¹,…,xⁿ⟩/[∂_iα]` degree by degree and checks its
//! Hilbert series and Koszul complex up to a truncation degree.
//!
//! ```
//! use x3form_core::forms::CatalogName;
//! use x3form_core::regularity;
//!
//! let rho = CatalogName::Rho7.build().unwrap().form;
//! assert!(regularity::is_three_regular(&rho).three_regular);
//! ```

pub mod algebra;
pub mod error;
pub mod field;
pub mod forms;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod regularity;
pub mod report;
pub mod sparse;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, PrimeField, Rational, Rationals, DEFAULT_PRIMES};
pub use forms::{CatalogEntry, CatalogName, ExteriorThreeForm, FormSource};
pub use matrix::Matrix;
pub use sparse::{SparseMatrix, SparseVec};
