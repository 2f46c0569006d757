//! Exact computations with modules over bound quiver algebras, their
//! monomorphism categories and Auslander–Reiten theory.

pub mod algebra;
pub mod ar;
pub mod decompose;
pub mod error;
pub mod field;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod morphcat;
pub mod poly;
pub mod rep;
pub mod subcat;

pub use error::{Error, Result};
