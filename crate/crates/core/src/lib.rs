//! Counting negative eigenvalues of planar Schrödinger operators with measure potentials:
//! Orlicz norms, measure generators, the annular decomposition, bounds, a
//! finite-element oracle and sharpness constructions.

// `!(x > 0.0)` is used throughout so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod decomposition;
pub mod error;
pub mod measure;
pub mod oracle;
pub mod orlicz;
pub mod potential;
pub mod roots;
pub mod sharpness;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/orlicz.md")]
    mod orlicz {}
    #[doc = include_str!("../../../book/src/measures.md")]
    mod measures {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/sharpness.md")]
    mod sharpness {}
}
