//! Exact computations with ω-Lie algebras: anticommutative algebras whose
//! Jacobian equals `ω(x,y)z + ω(z,x)y + ω(y,z)x` for a skew form ω.
//!
//! Everything is exact, over ℚ or over GF(p) with p ≥ 5.

pub mod algebra;
pub mod catalog;
pub mod derivations;
pub mod error;
pub mod exactfield;
pub mod exactla;
pub mod extensions;
pub mod identities;
pub mod io;
pub mod poly;
pub mod scan;
pub mod structure;

pub use algebra::{AnticommAlgebra, LinearForm, OmegaAlgebra, Simplicity, Violation};
pub use derivations::AlphaLambdaDerivation;
pub use error::{Error, Result};
pub use exactfield::{Field, FieldError, Scalar};
pub use exactla::{Matrix, Subspace, Vector};
