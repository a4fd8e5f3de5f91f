//! The symplectic Lie algebra `sp(2n)` in its defining `2n x 2n`
//! realization: the fixed basis of root vectors and Cartan elements, exact
//! structure constants, the quadratic Casimir, and the two families of
//! Cartan-stabilizing automorphisms used for twisting modules.

mod auto;
mod basis;
mod casimir;
mod root;

pub use auto::{diag_twist_scalars, diagonal_auto, weyl_twist_auto, AutomorphismTable, RootImage};
pub use basis::{build_sp2n, AlgebraKind, BasisElement, Coords, ElementKind, SpBasis};
pub use casimir::{casimir, trace_form, CasimirElement, UElement};
pub use root::Root;
