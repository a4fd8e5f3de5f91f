use serde_json::{json, Value};

use super::scaling::{scaling_equivalent, ScalingCertificate, ScalingVerdict};
use crate::coherent::{
    composition_components, support_graph, CoherentAction, Sign, WeightBox, WeightPoint,
};
use crate::error::{Error, Result};
use crate::hfree::{make_m0, twist, verify_relations, HFreeModule};
use crate::liealg::{weyl_twist_auto, AlgebraKind, AutomorphismTable, SpBasis};
use crate::polyring::rat;

/// Smallest distance (in lattice steps) required between `lambda_0` and the
/// box boundary.
const MIN_MARGIN: i64 = 3;

/// For each `i`, the half-space `S_{+-e_i}` holding the support of the
/// minimal submodule of `W(M)[lambda_0]`.
///
/// The minimal submodule is read off the box as the unique sink component
/// of the interior support graph. If the sink is not unique or straddles a
/// hyperplane, the window is reported as too small.
pub fn min_submodule_support_signs(
    m: &HFreeModule,
    basis: &SpBasis,
    bbox: Option<&WeightBox>,
    node_cap: usize,
) -> Result<Vec<Sign>> {
    if m.d() != 1 {
        return Err(Error::Unsupported(
            "minimal support signs need a rank-one module".into(),
        ));
    }
    let n = m.n();
    let mu = WeightPoint::lambda0(n);
    let bbox = bbox.cloned().unwrap_or_else(|| WeightBox::default_for(&mu));
    if bbox.rank() != n {
        return Err(Error::dims("box", n, bbox.rank()));
    }
    let margin = rat(MIN_MARGIN, 1);
    for i in 0..n {
        let c = &mu.coords()[i];
        if bbox.lo()[i] > c - &margin || bbox.hi()[i] < c + &margin {
            return Err(Error::Resource(format!(
                "box {bbox} reaches less than {MIN_MARGIN} steps from lambda_0; use a larger box"
            )));
        }
    }
    let action = CoherentAction::new(m.clone(), basis)?;
    let g = support_graph(&action, &mu, &bbox, node_cap)?;
    let dag = composition_components(&g, true);
    let sink = match dag.sinks().as_slice() {
        [s] => *s,
        sinks => {
            return Err(Error::Resource(format!(
                "{} minimal components in box {bbox}; the minimal submodule is not determined, use a larger box",
                sinks.len()
            )))
        }
    };
    dag.components[sink]
        .signs
        .iter()
        .copied()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            Error::Resource(format!(
                "minimal component in box {bbox} crosses a coordinate hyperplane; use a larger box"
            ))
        })
}

/// Outcome of [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalizationResult {
    /// One-based indices `i` with the minimal support in `S_{e_i}`.
    pub omega: Vec<usize>,
    pub signs: Vec<Sign>,
    /// Weyl twists applied, in order (one-based).
    pub twists: Vec<usize>,
    /// Certificate comparing `M_0` with the normalized module:
    /// `A_alpha = c_alpha A0_alpha`.
    pub certificate: Option<ScalingCertificate>,
    pub verdict: bool,
    pub reason: Option<String>,
}

impl CanonicalizationResult {
    /// Applies the recorded Weyl twists to `m`, then undoes the scalars.
    /// For a successful result this returns `M_0` exactly.
    pub fn replay(&self, m: &HFreeModule, basis: &SpBasis) -> Result<HFreeModule> {
        let cert = self
            .certificate
            .as_ref()
            .ok_or_else(|| Error::input("canonicalization failed, nothing to replay"))?;
        let mut cur = m.clone();
        for &k in &self.twists {
            cur = twist(&cur, basis, &weyl_twist_auto(basis, k)?)?;
        }
        let undo = AutomorphismTable::root_scaling(basis, &cert.inverse().scalars)?;
        twist(&cur, basis, &undo)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "omega": self.omega,
            "signs": self.signs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "twists": self.twists.iter().map(|k| format!("weyl:{k}")).collect::<Vec<_>>(),
            "certificate": self.certificate.as_ref().map(ScalingCertificate::to_json),
            "verdict": self.verdict,
            "reason": self.reason,
        })
    }
}

/// Normalizes a rank-one table to `M_0`: finds `Omega` from the minimal
/// submodule of `W(M)[lambda_0]`, applies `phi_i` for `i` in `Omega` and
/// compares with `M_0` up to root scalars.
///
/// The verdict is checked by replaying the certificate, so `verdict = true`
/// means the replay reproduced `M_0`'s table exactly.
pub fn canonicalize(
    m: &HFreeModule,
    basis: &SpBasis,
    bbox: Option<&WeightBox>,
    node_cap: usize,
) -> Result<CanonicalizationResult> {
    if basis.kind() != AlgebraKind::Symplectic {
        return Err(Error::Unsupported(
            "canonicalization needs the sp(2n) basis".into(),
        ));
    }
    if m.d() != 1 {
        return Err(Error::Unsupported(
            "canonicalization needs a rank-one module".into(),
        ));
    }
    let report = verify_relations(m, basis)?;
    if !report.passed() {
        return Err(Error::input(format!(
            "table does not define a module: {} relations fail",
            report.failure_count()
        )));
    }
    let signs = min_submodule_support_signs(m, basis, bbox, node_cap)?;
    let omega: Vec<usize> = signs
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Sign::Plus)
        .map(|(i, _)| i + 1)
        .collect();
    let mut normalized = m.clone();
    for &k in &omega {
        normalized = twist(&normalized, basis, &weyl_twist_auto(basis, k)?)?;
    }
    let m0 = make_m0(m.n())?;
    let mut result = CanonicalizationResult {
        omega: omega.clone(),
        signs,
        twists: omega,
        certificate: None,
        verdict: false,
        reason: None,
    };
    match scaling_equivalent(&m0, &normalized, basis)? {
        ScalingVerdict::Equivalent(cert) => {
            result.certificate = Some(cert);
            if result.replay(m, basis)? == m0 {
                result.verdict = true;
            } else {
                result.reason = Some("replaying the certificate does not reproduce M_0".into());
            }
        }
        ScalingVerdict::NotEquivalent(why) => result.reason = Some(why),
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::DEFAULT_NODE_CAP;
    use crate::liealg::{build_sp2n, diagonal_auto};
    use crate::polyring::int;

    #[test]
    fn m0_signs_and_identity_canonicalization() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let s = min_submodule_support_signs(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(s, vec![Sign::Minus, Sign::Minus]);
        let r = canonicalize(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
        assert!(r.verdict);
        assert!(r.omega.is_empty());
        assert!(r.certificate.unwrap().is_trivial());
    }

    #[test]
    fn weyl_twist_flips_sign() {
        let b = build_sp2n(2).unwrap();
        let m = twist(&make_m0(2).unwrap(), &b, &weyl_twist_auto(&b, 1).unwrap()).unwrap();
        let s = min_submodule_support_signs(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(s, vec![Sign::Plus, Sign::Minus]);
        let r = canonicalize(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
        assert!(r.verdict, "{:?}", r.reason);
        assert_eq!(r.omega, vec![1]);
    }

    #[test]
    fn weyl_then_diagonal() {
        let b = build_sp2n(2).unwrap();
        let m = twist(&make_m0(2).unwrap(), &b, &weyl_twist_auto(&b, 2).unwrap()).unwrap();
        let m = twist(&m, &b, &diagonal_auto(&b, &[int(5), int(7)]).unwrap()).unwrap();
        let r = canonicalize(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
        assert!(r.verdict, "{:?}", r.reason);
        assert_eq!(r.omega, vec![2]);
        assert_eq!(r.replay(&m, &b).unwrap(), make_m0(2).unwrap());
    }

    #[test]
    fn small_box_is_resource_error() {
        let b = build_sp2n(2).unwrap();
        let bx = WeightBox::cube(2, rat(-3, 2), rat(3, 2)).unwrap();
        assert!(matches!(
            min_submodule_support_signs(&make_m0(2).unwrap(), &b, Some(&bx), DEFAULT_NODE_CAP),
            Err(Error::Resource(_))
        ));
    }
}
