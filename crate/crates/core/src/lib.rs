//! Exact quasisymmetric function toolkit: the monomial, fundamental and
//! quasisymmetric power sum bases, alpha-unimodal sets, labeled posets and
//! Psi-positive expansions of P-partition generating functions.

pub mod cli;
pub mod composition;
pub mod error;
pub mod families;
pub mod json;
pub mod posets;
pub mod ppartitions;
pub mod qsym;
pub mod report;
pub mod ring;
pub mod search;
pub mod special;
pub mod sym;
pub mod textfmt;
pub mod unimodal;
pub mod verify;

pub use composition::{Composition, Partition};
pub use error::{QsymError, Result};
pub use qsym::{Basis, QSymElement};
pub use ring::{ParamPoly, Rational};
pub use sym::{SymBasis, SymElement};
