//! Exact polynomial arithmetic in `h1, ..., hn` over the rationals, shift
//! automorphisms `h_k -> h_k - s_k`, and the algebra of polynomial-shift
//! operators through which every enveloping-algebra word acts on a free
//! module.
//!
//! An operator `(A, s)` sends a column `v` of polynomials to `A * sigma_s(v)`.
//! Composition follows from pushing the shift through the second matrix:
//!
//! ```
//! use cartanfree::polyring::{int, MultiPoly, PolyMatrix, PolyShiftOp, ShiftVector};
//!
//! let h = MultiPoly::var(1, 0);
//! let a = PolyShiftOp::new(PolyMatrix::single(h.clone()), ShiftVector::new(vec![1]))?;
//! let aa = a.compose(&a)?;
//! assert_eq!(aa.matrix, PolyMatrix::single(&h * &MultiPoly::var_minus(1, 0, int(1))));
//! assert_eq!(aa.shift, ShiftVector::new(vec![2]));
//! # Ok::<(), cartanfree::Error>(())
//! ```

mod matrix;
mod poly;
mod shift;

pub use matrix::PolyMatrix;
pub use poly::{format_rational, int, parse_rational, rat, Exponents, MultiPoly, Rational};
pub use shift::{op_compose, shift_apply, OpSum, PolyShiftOp, ShiftVector};

/// Exact evaluation of `p` at `point`.
pub fn poly_eval(p: &MultiPoly, point: &[Rational]) -> crate::Result<Rational> {
    p.eval(point)
}
