use num_traits::Zero;

use super::weight::WeightPoint;
use crate::error::{Error, Result};
use crate::hfree::{make_m0, word_action, HFreeModule};
use crate::liealg::{ElementKind, Root, SpBasis, UElement};
use crate::polyring::{rat, MultiPoly, PolyMatrix, Rational};
use crate::qmatrix::QMatrix;

/// Coefficient of `X_alpha v_lambda` on `v_{lambda + alpha}` in `W(M)`:
/// `A_alpha` evaluated at `lambda + alpha`.
pub fn weight_coeff(m: &HFreeModule, alpha: &Root, lambda: &WeightPoint) -> Result<QMatrix> {
    let a = m
        .action(alpha)
        .ok_or_else(|| Error::input(format!("action table has no entry for root {alpha}")))?;
    a.eval(lambda.add_root(alpha).coords())
}

/// The same coefficient as a polynomial in `lambda`: `A_alpha(h + alpha)`.
pub fn weight_coeff_poly(m: &HFreeModule, alpha: &Root) -> Result<PolyMatrix> {
    let a = m
        .action(alpha)
        .ok_or_else(|| Error::input(format!("action table has no entry for root {alpha}")))?;
    alpha.neg().shift().apply_matrix(a)
}

/// Row of the weight-vector table of `W(M_0)` for one root, written out
/// directly in the variables `lambda_i = lambda(h_i)`.
pub fn weighting_row(n: usize, alpha: &Root) -> Result<MultiPoly> {
    let plus = |i: usize, c: Rational| MultiPoly::var_minus(n, i, -c);
    let pos: Vec<usize> = (0..n).filter(|&i| alpha.coords()[i] > 0).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| alpha.coords()[i] < 0).collect();
    let bad = || Error::input(format!("{alpha} is not a root of C_{n}"));
    if alpha.rank() != n {
        return Err(bad());
    }
    Ok(match (pos.as_slice(), neg.as_slice()) {
        ([i], []) if alpha.coords()[*i] == 2 => &plus(*i, rat(3, 2)) * &plus(*i, rat(1, 2)),
        ([i, j], []) => &plus(*i, rat(1, 2)) * &plus(*j, rat(1, 2)),
        ([i], [_]) => plus(*i, rat(1, 2)),
        ([], _) => MultiPoly::one(n),
        _ => return Err(bad()),
    })
}

/// Compares the symbolic coefficients of `W(m)` with `rows` for every root.
pub fn weighting_table_matches(
    m: &HFreeModule,
    basis: &SpBasis,
    rows: impl Fn(&Root) -> Result<MultiPoly>,
) -> Result<bool> {
    if m.d() != 1 {
        return Err(Error::input(
            "weighting table comparison needs a rank-one module",
        ));
    }
    m.check_against(basis)?;
    for alpha in basis.roots() {
        if weight_coeff_poly(m, alpha)?.get(0, 0) != &rows(alpha)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Symbolic check of `W(M_0)` against the reference weight-vector table.
pub fn verify_weighting_table(n: usize) -> Result<bool> {
    let basis = crate::liealg::build_sp2n(n)?;
    weighting_table_matches(&make_m0(n)?, &basis, |a| weighting_row(n, a))
}

/// Trace of an element of `U(g)_0` on a generic weight space, as a
/// polynomial in `h`; evaluating at `lambda` gives the trace on `W(M)_lambda`.
pub fn trace_polynomial(m: &HFreeModule, basis: &SpBasis, u: &UElement) -> Result<MultiPoly> {
    let sum = word_action(m, basis, u)?;
    if !sum.is_degree_zero() {
        return Err(Error::input(
            "element is not in U(g)_0: it has a nonzero total shift",
        ));
    }
    Ok(sum
        .part(&crate::polyring::ShiftVector::zero(m.n()))
        .map_or_else(|| MultiPoly::zero(m.n()), PolyMatrix::trace))
}

/// `W(M)` described by its coefficient function, with optional forced zeros.
///
/// A zero locus `(beta, p)` kills the coefficient of `X_beta` at every
/// `lambda` with `p(lambda) = 0`.
#[derive(Clone, Debug)]
pub struct CoherentAction {
    module: HFreeModule,
    basis: SpBasis,
    zero_loci: Vec<(Root, MultiPoly)>,
    semisimple: bool,
}

impl CoherentAction {
    pub fn new(module: HFreeModule, basis: &SpBasis) -> Result<Self> {
        module.check_against(basis)?;
        Ok(CoherentAction {
            module,
            basis: basis.clone(),
            zero_loci: Vec::new(),
            semisimple: false,
        })
    }

    pub fn module(&self) -> &HFreeModule {
        &self.module
    }

    pub fn basis(&self) -> &SpBasis {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    /// Dimension of every weight space.
    pub fn degree(&self) -> usize {
        self.module.d()
    }

    pub fn zero_loci(&self) -> &[(Root, MultiPoly)] {
        &self.zero_loci
    }

    pub fn is_semisimplified(&self) -> bool {
        self.semisimple
    }

    pub fn coefficient(&self, alpha: &Root, lambda: &WeightPoint) -> Result<QMatrix> {
        if lambda.rank() != self.n() {
            return Err(Error::dims("weight", self.n(), lambda.rank()));
        }
        for (beta, p) in &self.zero_loci {
            if beta == alpha && p.eval(lambda.coords())?.is_zero() {
                let d = self.degree();
                return Ok(QMatrix::zeros(d, d));
            }
        }
        weight_coeff(&self.module, alpha, lambda)
    }

    /// Roots of the underlying algebra, in basis order.
    pub fn roots(&self) -> Vec<Root> {
        self.basis
            .elements()
            .iter()
            .filter_map(|el| match &el.kind {
                ElementKind::Root(r) => Some(r.clone()),
                ElementKind::Cartan(_) => None,
            })
            .collect()
    }
}

/// Degree-one semisimplification: wherever `X_alpha` kills `v_lambda`, the
/// coefficient of `X_{-alpha}` on `v_{lambda + alpha}` is set to zero.
///
/// `X_alpha v_lambda = A_alpha(lambda + alpha)`, so the coefficient of
/// `X_beta` at `mu` is zeroed exactly where `A_{-beta}(mu)` vanishes. The
/// loci come from the source table, which makes the operation idempotent.
pub fn semisimplify(action: &CoherentAction) -> Result<CoherentAction> {
    if action.degree() != 1 {
        return Err(Error::Unsupported(
            "semisimplification is only implemented for degree one".into(),
        ));
    }
    let mut zero_loci = Vec::new();
    for beta in action.roots() {
        let p = action
            .module
            .scalar_action(&beta.neg())
            .expect("table checked against basis");
        if !p.is_constant() || p.is_zero() {
            zero_loci.push((beta, p.clone()));
        }
    }
    Ok(CoherentAction {
        module: action.module.clone(),
        basis: action.basis.clone(),
        zero_loci,
        semisimple: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::make_sl2_example;
    use crate::liealg::build_sp2n;

    #[test]
    fn m0_long_root_coefficient() {
        let m = make_m0(2).unwrap();
        let a = Root::new(vec![2, 0]);
        let c = weight_coeff(&m, &a, &WeightPoint::lambda0(2)).unwrap();
        assert!(c.is_zero());
        let l = WeightPoint::new(vec![rat(1, 3), rat(5, 1)]);
        // (1/3 + 3/2)(1/3 + 1/2) = 55/36
        assert_eq!(weight_coeff(&m, &a, &l).unwrap()[(0, 0)], rat(55, 36));
        let down = weight_coeff(&m, &a.neg(), &l).unwrap();
        assert_eq!(down[(0, 0)], rat(1, 1));
    }

    #[test]
    fn weighting_table() {
        assert!(verify_weighting_table(2).unwrap());
        assert!(verify_weighting_table(3).unwrap());
        let n = 2;
        let basis = build_sp2n(n).unwrap();
        let wrong = weighting_table_matches(&make_m0(n).unwrap(), &basis, |a| {
            if a.coords() == [2, 0] {
                Ok(MultiPoly::var_minus(n, 0, rat(-1, 2)).pow(2))
            } else {
                weighting_row(n, a)
            }
        })
        .unwrap();
        assert!(!wrong);
    }

    #[test]
    fn trace_of_identity_is_rank() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        assert_eq!(
            trace_polynomial(&m, &b, &UElement::one()).unwrap(),
            MultiPoly::one(2)
        );
        assert!(trace_polynomial(&m, &b, &UElement::word(vec![0])).is_err());
    }

    #[test]
    fn semisimplify_is_idempotent() {
        let b = SpBasis::sl2_fixture();
        let a = CoherentAction::new(make_sl2_example(), &b).unwrap();
        let s1 = semisimplify(&a).unwrap();
        let s2 = semisimplify(&s1).unwrap();
        assert_eq!(s1.zero_loci(), s2.zero_loci());
        // e at 0 now vanishes because f kills v_1
        let e = Root::new(vec![1]);
        assert!(s1.coefficient(&e, &WeightPoint::zero(1)).unwrap().is_zero());
        assert!(!a.coefficient(&e, &WeightPoint::zero(1)).unwrap().is_zero());
    }
}
