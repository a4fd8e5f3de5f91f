//! Rank-one classification: every rank-one table is `M_0` twisted by an
//! automorphism, and this module finds the twist.
//!
//! ```
//! use cartanfree::classify::canonicalize;
//! use cartanfree::coherent::DEFAULT_NODE_CAP;
//! use cartanfree::hfree::{make_m0, twist};
//! use cartanfree::liealg::{build_sp2n, weyl_twist_auto};
//!
//! let basis = build_sp2n(2).unwrap();
//! let m = twist(&make_m0(2).unwrap(), &basis, &weyl_twist_auto(&basis, 1).unwrap()).unwrap();
//! let result = canonicalize(&m, &basis, None, DEFAULT_NODE_CAP).unwrap();
//! assert!(result.verdict);
//! assert_eq!(result.omega, vec![1]);
//! ```

mod canon;
mod identities;
mod scaling;

pub use canon::{canonicalize, min_submodule_support_signs, CanonicalizationResult};
pub use identities::{factor_structure_holds, has_linear_factor, root_pair_product};
pub use scaling::{scaling_equivalent, ScalingCertificate, ScalingVerdict};
