//! Exact computation with `U(h)`-free modules over the symplectic Lie
//! algebra `sp(2n)` and the coherent families they produce under the
//! weighting functor.
//!
//! The crate is organized bottom-up:
//!
//! - [`polyring`]: rational polynomials in `h1..hn`, shift automorphisms and
//!   polynomial-shift operators.
//! - [`liealg`]: the matrix basis of `sp(2n)`, structure constants, Casimir,
//!   Weyl and diagonal automorphisms.
//! - [`hfree`]: modules given by action tables, relation checking, twisting,
//!   tensoring with the natural representation.
//! - [`coherent`]: weight coefficients, support graphs, submodule closures,
//!   composition components and semisimplification.
//! - [`classify`]: scaling equivalence and canonicalization of rank-one
//!   modules.

pub mod classify;
pub mod coherent;
mod error;
pub mod hfree;
pub mod liealg;
pub mod polyring;
pub mod qmatrix;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/coherent.md")]
    mod coherent {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
