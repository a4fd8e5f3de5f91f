use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::liealg::{AutomorphismTable, SpBasis};
use crate::polyring::{MultiPoly, Rational};

use super::HFreeModule;

/// The twisted module `M^tau`, where `X` acts as `tau(X)` did on `M`.
///
/// When `tau` moves the Cartan, the variables are substituted back so that
/// `h_i` again acts by multiplication with `h_i`: with `psi(h_i) = tau(h_i)`
/// and `tau(X_alpha) = c X_beta`, the new entry is `c psi^{-1}(A_beta)`.
pub fn twist(m: &HFreeModule, basis: &SpBasis, tau: &AutomorphismTable) -> Result<HFreeModule> {
    m.check_against(basis)?;
    let t = tau
        .cartan_matrix(basis)
        .ok_or_else(|| Error::input("twist needs an automorphism that preserves the Cartan"))?;
    let t_inv = t
        .inverse()
        .ok_or_else(|| Error::Internal("Cartan part of automorphism is singular".into()))?;
    let n = m.n();
    let psi_inv: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let mut p = MultiPoly::zero(n);
            for j in 0..n {
                p += &MultiPoly::var(n, j).scale(&t_inv[(j, i)]);
            }
            p
        })
        .collect();
    let identity_on_h = t.is_square() && t == crate::qmatrix::QMatrix::identity(n);
    let mut actions = BTreeMap::new();
    for img in tau.root_images(basis)? {
        // the weight of tau(X_alpha) under the new Cartan action must be alpha
        for i in 0..n {
            let w: Rational = (0..n)
                .map(|j| &t[(j, i)] * Rational::from_integer(img.target.coords()[j].into()))
                .sum();
            if w != Rational::from_integer(img.source.coords()[i].into()) {
                return Err(Error::Internal(format!(
                    "automorphism sends X({}) to a vector of the wrong weight",
                    img.source
                )));
            }
        }
        let a = m.action(&img.target).expect("table checked against basis");
        let scaled = a.scale(&img.scalar);
        let entry = if identity_on_h {
            scaled
        } else {
            scaled.try_map(|p| p.substitute(&psi_inv))?
        };
        actions.insert(img.source, entry);
    }
    HFreeModule::new(n, m.d(), actions)
}
