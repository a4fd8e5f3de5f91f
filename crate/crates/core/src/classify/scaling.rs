use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hfree::HFreeModule;
use crate::liealg::{AlgebraKind, Root, SpBasis};
use crate::polyring::{format_rational, MultiPoly, Rational};

/// Scalars `c_alpha` with `A'_alpha = c_alpha A_alpha` for every root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingCertificate {
    pub scalars: BTreeMap<Root, Rational>,
    /// Rational `c` with `c_alpha = prod c_i^{alpha_i}`, when one exists.
    pub witness: Option<Vec<Rational>>,
}

impl ScalingCertificate {
    pub fn is_trivial(&self) -> bool {
        self.scalars.values().all(One::is_one)
    }

    pub fn scalar(&self, alpha: &Root) -> Option<&Rational> {
        self.scalars.get(alpha)
    }

    /// The certificate of the reverse comparison.
    pub fn inverse(&self) -> ScalingCertificate {
        ScalingCertificate {
            scalars: self
                .scalars
                .iter()
                .map(|(r, c)| (r.clone(), c.recip()))
                .collect(),
            witness: self
                .witness
                .as_ref()
                .map(|w| w.iter().map(Rational::recip).collect()),
        }
    }

    /// Certificate for `M -> M''` from `M -> M'` (self) and `M' -> M''`.
    pub fn then(&self, next: &ScalingCertificate) -> ScalingCertificate {
        ScalingCertificate {
            scalars: self
                .scalars
                .iter()
                .map(|(r, c)| {
                    (
                        r.clone(),
                        c * next.scalars.get(r).cloned().unwrap_or_else(Rational::one),
                    )
                })
                .collect(),
            witness: match (&self.witness, &next.witness) {
                (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| x * y).collect()),
                _ => None,
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let scalars: BTreeMap<String, String> = self
            .scalars
            .iter()
            .map(|(r, c)| (r.to_string(), format_rational(c)))
            .collect();
        json!({
            "scalars": scalars,
            "witness": self
                .witness
                .as_ref()
                .map(|w| w.iter().map(format_rational).collect::<Vec<_>>()),
        })
    }
}

/// Result of [`scaling_equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalingVerdict {
    Equivalent(ScalingCertificate),
    NotEquivalent(String),
}

impl ScalingVerdict {
    pub fn certificate(&self) -> Option<&ScalingCertificate> {
        match self {
            ScalingVerdict::Equivalent(c) => Some(c),
            ScalingVerdict::NotEquivalent(_) => None,
        }
    }

    pub fn is_equivalent(&self) -> bool {
        matches!(self, ScalingVerdict::Equivalent(_))
    }
}

/// `Some(c)` when `b = c a` for a nonzero constant `c`.
fn constant_ratio(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
    let la = a.leading_coeff()?;
    let lb = b.leading_coeff()?;
    let c = lb / la;
    (a.scale(&c) == *b).then_some(c)
}

/// Simple roots of the basis, used to read off the witness.
fn simple_roots(basis: &SpBasis) -> Vec<Root> {
    let n = basis.n();
    match basis.kind() {
        AlgebraKind::Sl2Fixture => vec![Root::new(vec![1])],
        AlgebraKind::Symplectic => {
            let mut s: Vec<Root> = (0..n.saturating_sub(1))
                .map(|i| Root::pair(n, i, 1, i + 1, -1))
                .collect();
            s.push(Root::pair(n, n - 1, 1, n - 1, 1));
            s
        }
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

fn monomial(c: &[Rational], alpha: &Root) -> Rational {
    let mut v = Rational::one();
    for (ci, &a) in c.iter().zip(alpha.coords()) {
        v *= ci.pow(a as i32);
    }
    v
}

fn witness(basis: &SpBasis, scalars: &BTreeMap<Root, Rational>) -> Option<Vec<Rational>> {
    let simple = simple_roots(basis);
    let n = basis.n();
    let c = match basis.kind() {
        AlgebraKind::Sl2Fixture => vec![scalars.get(&simple[0])?.clone()],
        AlgebraKind::Symplectic => {
            let mut c = vec![Rational::zero(); n];
            c[n - 1] = rational_sqrt(scalars.get(&simple[n - 1])?)?;
            for i in (0..n - 1).rev() {
                c[i] = scalars.get(&simple[i])? * &c[i + 1];
            }
            c
        }
    };
    scalars
        .iter()
        .all(|(r, v)| monomial(&c, r) == *v)
        .then_some(c)
}

/// Decides whether `m2` is `m1` with every `A_alpha` rescaled by a nonzero
/// constant `c_alpha` that is multiplicative along root sums.
///
/// Neither table is checked against the Lie relations here.
pub fn scaling_equivalent(
    m1: &HFreeModule,
    m2: &HFreeModule,
    basis: &SpBasis,
) -> Result<ScalingVerdict> {
    if m1.d() != 1 || m2.d() != 1 {
        return Err(Error::Unsupported(
            "scaling equivalence is implemented for rank-one tables".into(),
        ));
    }
    m1.check_against(basis)?;
    m2.check_against(basis)?;
    let mut scalars = BTreeMap::new();
    let mut undetermined = Vec::new();
    for alpha in basis.roots() {
        let a = m1.scalar_action(alpha).expect("checked");
        let b = m2.scalar_action(alpha).expect("checked");
        match (a.is_zero(), b.is_zero()) {
            (true, true) => undetermined.push(alpha.clone()),
            (false, false) => match constant_ratio(a, b) {
                Some(c) => {
                    scalars.insert(alpha.clone(), c);
                }
                None => {
                    return Ok(ScalingVerdict::NotEquivalent(format!(
                        "X({alpha}): {b} is not a constant multiple of {a}"
                    )))
                }
            },
            _ => {
                return Ok(ScalingVerdict::NotEquivalent(format!(
                    "X({alpha}) acts by zero in only one of the tables"
                )))
            }
        }
    }
    if !undetermined.is_empty() {
        // both tables vanish there, so any value fits; take it from the simple roots
        let simple = simple_roots(basis);
        if simple.iter().any(|s| !scalars.contains_key(s)) {
            return Ok(ScalingVerdict::NotEquivalent(
                "a simple root acts by zero in both tables, scalars are not determined".into(),
            ));
        }
        let w = witness(
            basis,
            &simple
                .iter()
                .map(|s| (s.clone(), scalars[s].clone()))
                .collect(),
        );
        match w {
            Some(c) => {
                for r in undetermined {
                    let v = monomial(&c, &r);
                    scalars.insert(r, v);
                }
            }
            None => {
                return Ok(ScalingVerdict::NotEquivalent(
                    "cannot fill scalars for roots that act by zero".into(),
                ))
            }
        }
    }
    for (a, ca) in &scalars {
        for (b, cb) in &scalars {
            let s = a.add(b);
            if let Some(cs) = scalars.get(&s) {
                if *cs != ca * cb {
                    return Ok(ScalingVerdict::NotEquivalent(format!(
                        "c({s}) = {} but c({a}) c({b}) = {}",
                        format_rational(cs),
                        format_rational(&(ca * cb))
                    )));
                }
            }
        }
    }
    let witness = witness(basis, &scalars);
    Ok(ScalingVerdict::Equivalent(ScalingCertificate {
        scalars,
        witness,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::{make_m0, twist};
    use crate::liealg::{build_sp2n, diag_twist_scalars, diagonal_auto};
    use crate::polyring::{int, rat, PolyMatrix};

    #[test]
    fn reflexive() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let v = scaling_equivalent(&m, &m, &b).unwrap();
        let c = v.certificate().unwrap();
        assert!(c.is_trivial());
        assert_eq!(c.witness, Some(vec![int(1), int(1)]));
    }

    #[test]
    fn recovers_diagonal_scalars() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let c = [int(2), int(3)];
        let t = twist(&m, &b, &diagonal_auto(&b, &c).unwrap()).unwrap();
        let v = scaling_equivalent(&m, &t, &b).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.scalars, diag_twist_scalars(&b, &c).unwrap());
        assert_eq!(cert.witness.as_deref(), Some(&c[..]));
        let back = scaling_equivalent(&t, &m, &b).unwrap();
        assert_eq!(back.certificate().unwrap(), &cert.inverse());
    }

    #[test]
    fn non_multiplicative_fails() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let up = Root::new(vec![2, 0]);
        let scaled = m.scalar_action(&up).unwrap().scale(&int(2));
        let t = m.with_action(up, PolyMatrix::single(scaled)).unwrap();
        assert!(!scaling_equivalent(&m, &t, &b).unwrap().is_equivalent());
    }

    #[test]
    fn irrational_witness_is_absent() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        // c_alpha = 2^{alpha_1/2 + alpha_2/2} is multiplicative on Q with no rational witness
        let scalars: BTreeMap<Root, Rational> = b
            .roots()
            .map(|r| {
                let e = (r.coords()[0] + r.coords()[1]) / 2;
                (r.clone(), rat(2, 1).pow(e as i32))
            })
            .collect();
        let auto = crate::liealg::AutomorphismTable::root_scaling(&b, &scalars).unwrap();
        let t = twist(&m, &b, &auto).unwrap();
        let cert = scaling_equivalent(&m, &t, &b)
            .unwrap()
            .certificate()
            .cloned()
            .unwrap();
        assert_eq!(cert.scalars, scalars);
        assert_eq!(cert.witness, None);
    }

    #[test]
    fn rank_two_is_unsupported() {
        let b = build_sp2n(2).unwrap();
        let t = crate::hfree::tensor_natural(&make_m0(2).unwrap(), &b).unwrap();
        assert!(matches!(
            scaling_equivalent(&t, &t, &b),
            Err(Error::Unsupported(_))
        ));
    }
}
