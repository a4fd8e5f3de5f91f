//! The weighting functor and the coherent families it produces.
//!
//! `W(M)` has a basis `v_lambda` (times `d`) for every weight `lambda`, and
//! `X_alpha v_lambda` is `A_alpha(lambda + alpha) v_{lambda + alpha}`. The
//! family is kept as a coefficient function; finite windows of one coset
//! `mu + Q` are materialized as [`SupportGraph`]s.
//!
//! ```
//! use cartanfree::coherent::{composition_components, support_graph, CoherentAction,
//!     WeightBox, WeightPoint, DEFAULT_NODE_CAP};
//! use cartanfree::hfree::make_m0;
//! use cartanfree::liealg::build_sp2n;
//!
//! let basis = build_sp2n(2).unwrap();
//! let w = CoherentAction::new(make_m0(2).unwrap(), &basis).unwrap();
//! let mu = WeightPoint::lambda0(2);
//! let g = support_graph(&w, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
//! assert_eq!(composition_components(&g, true).len(), 4);
//! ```

mod action;
mod components;
mod export;
mod graph;
mod weight;

pub use action::{
    semisimplify, trace_polynomial, verify_weighting_table, weight_coeff, weight_coeff_poly,
    weighting_row, weighting_table_matches, CoherentAction,
};
pub use components::{composition_components, Component, ComponentDag};
pub use export::{components_json, to_dot, to_json};
pub use graph::{
    node_cap_from_env, support_graph, Closure, Edge, Sign, SupportGraph, WeightBox, ZeroEdge,
    DEFAULT_NODE_CAP,
};
pub use weight::{coset_test, WeightPoint};
