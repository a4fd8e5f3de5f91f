//! Modules that are free of finite rank over `U(h) = C[h1..hn]`.
//!
//! A module is stored as its action table `alpha -> A_alpha`; the root vector
//! `X_alpha` acts by the polynomial-shift operator `(A_alpha, alpha)` and
//! `h_i` multiplies every coordinate by `h_i`.
//!
//! ```
//! use cartanfree::hfree::{make_m0, verify_relations};
//! use cartanfree::liealg::build_sp2n;
//!
//! let basis = build_sp2n(2).unwrap();
//! let m0 = make_m0(2).unwrap();
//! assert!(verify_relations(&m0, &basis).unwrap().passed());
//! ```

mod builtin;
mod module;
mod probe;
mod tensor;
mod twist;
mod verify;
mod word;

pub use builtin::{make_m0, make_sl2_example};
pub use module::HFreeModule;
pub use probe::{simplicity_probe, whittaker_locally_finite, whittaker_roots};
pub use tensor::{natural_weights, tensor_natural};
pub use twist::twist;
pub use verify::{verify_relations, PairCheck, VerificationReport};
pub use word::{word_action, word_action_single};
