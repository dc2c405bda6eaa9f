//! Exact computational homology of complex braid groups.
//!
//! This crate computes group homology of the braid groups B(e,e,r) and
//! B(2e,e,r) of the complex reflection groups G(e,e,r), G(2e,e,r), and of a
//! number of exceptional types, over ℤ, ℚ and prime fields, using three
//! independent chain complexes:
//!
//! * the Dehornoy–Lafont order complex of a Garside monoid ([`dl`]),
//! * the Charney–Meier–Whittlesey bar-type complex on simple elements ([`cmw`]),
//! * the algebraic Salvetti complex of the Artin group of type B_r with
//!   coefficients in `k[t]/(1-(-t)^e)` ([`salvetti`]).
//!
//! Everything is exact: arbitrary-precision integers, rationals, and prime
//! fields; no floating point. The [`linalg`] module provides sparse exact
//! ranks, integer Smith normal form and homology of a composable pair of
//! boundary maps. The [`series`] module evaluates closed-form Poincaré
//! series used to audit the direct computations, and [`tables`] bundles the
//! reference dimension tables the toolkit reproduces.

pub mod engine;
pub mod garside;
pub mod linalg;
pub mod presentations;
pub mod qanalog;
pub mod quotients;
pub mod rs_even;
pub mod series;
pub mod tables;

pub mod cmw;
pub mod dl;
pub mod salvetti;

#[cfg(any())]
mod book_doctests {
    //! Runs every code block in the book as a doctest, so the guide cannot
    //! drift from the library.
    #![doc = include_str!("../../../book/src/introduction.md")]

    #[doc = include_str!("../../../book/src/monoids.md")]
    mod monoids {}
    #[doc = include_str!("../../../book/src/qanalogs.md")]
    mod qanalogs {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/even_braids.md")]
    mod even_braids {}
}
