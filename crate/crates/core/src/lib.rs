//! Exact spectral combinatorics for Casimir and generalized Laplace
//! operators on compact Lie groups.

// Index loops read closer to the matrix formulas.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod hidden;
pub mod oplab;
pub mod rational;
pub mod rootsys;
pub mod reps;
pub mod spectra;
pub mod weights;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/casimir-classes.md")]
    mod casimir_classes {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/hidden-symmetries.md")]
    mod hidden_symmetries {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/spectral-reports.md")]
    mod spectral_reports {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
