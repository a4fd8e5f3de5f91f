use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::liealg::SpBasis;
use crate::polyring::{OpSum, Rational};

use super::HFreeModule;

/// Outcome of one bracket relation `[B_a, B_b] = sum_k c_k B_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub a: usize,
    pub b: usize,
    pub labels: (String, String),
    /// `[op_a, op_b] - sum_k c_k op_k`, present only when nonzero.
    pub residual: Option<OpSum>,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_none()
    }
}

/// Every basis pair `a < b`, sorted by `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<PairCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PairCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    /// The check for an unordered pair, if present.
    pub fn pair(&self, a: usize, b: usize) -> Option<&PairCheck> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.checks.iter().find(|c| c.a == a && c.b == b)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Failure<'a> {
            pair: [&'a str; 2],
            residual: String,
        }
        let failures: Vec<Failure> = self
            .failures()
            .map(|c| Failure {
                pair: [&c.labels.0, &c.labels.1],
                residual: c
                    .residual
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
            })
            .collect();
        serde_json::json!({
            "passed": self.passed(),
            "pairs_checked": self.checks.len(),
            "failures": failures,
        })
    }
}

/// Checks every bracket relation of the basis symbolically on the module.
///
/// Pairs are independent and evaluated in parallel; the report is in pair
/// order regardless of scheduling.
pub fn verify_relations(m: &HFreeModule, basis: &SpBasis) -> Result<VerificationReport> {
    let ops = m.element_ops(basis)?;
    let dim = basis.dim();
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|a| (a + 1..dim).map(move |b| (a, b)))
        .collect();
    let one = Rational::one();
    let checks = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<PairCheck> {
            let mut residual = OpSum::zero(m.d(), m.n());
            residual.add_op(&ops[a].compose(&ops[b])?, &one);
            residual.add_op(&ops[b].compose(&ops[a])?, &-&one);
            for (k, c) in basis.bracket_basis(a, b) {
                residual.add_op(&ops[k], &-c);
            }
            Ok(PairCheck {
                a,
                b,
                labels: (
                    basis.element(a).label.clone(),
                    basis.element(b).label.clone(),
                ),
                residual: (!residual.is_zero()).then_some(residual),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { checks })
}
