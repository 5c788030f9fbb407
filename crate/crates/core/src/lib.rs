//! Quasisymmetric functions in superspace: dotted compositions, the monomial and
//! fundamental bases, their Hopf structure, and superspace Schur expansions.

pub mod algebra;
pub mod cli;
pub mod composition;
pub mod error;
pub mod hopf;
pub mod realize;
pub mod shuffles;
pub mod superschur;

pub use algebra::{Basis, Coeff, Expr, TensorExpr};
pub use composition::{DottedComposition, DottedPart};
pub use error::{Error, Result};
