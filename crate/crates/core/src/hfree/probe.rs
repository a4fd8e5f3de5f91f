use crate::error::{Error, Result};
use crate::liealg::Root;
use crate::polyring::MultiPoly;

use super::HFreeModule;

/// The roots `-e_i - e_j`, `i <= j`, spanning the Whittaker subalgebra.
pub fn whittaker_roots(n: usize) -> Vec<Root> {
    (0..n)
        .flat_map(|i| (i..n).map(move |j| Root::pair(n, i, -1, j, -1)))
        .collect()
}

/// True when every `-e_i - e_j` acts with constant coefficients, so it never
/// raises degree and `U(n) v` is finite dimensional for every `v`.
pub fn whittaker_locally_finite(m: &HFreeModule) -> Result<bool> {
    for r in whittaker_roots(m.n()) {
        let a = m
            .action(&r)
            .ok_or_else(|| Error::input(format!("action table has no entry for root {r}")))?;
        if !a.entries().iter().all(MultiPoly::is_constant) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Applies `1 - X_{-2e_i}` repeatedly, each time on the variable of largest
/// degree (lowest index on ties), and returns the number of steps after
/// which `f` became a nonzero constant.
///
/// `None` is inconclusive: the budget ran out or the value hit zero.
pub fn simplicity_probe(m: &HFreeModule, f: &MultiPoly, max_steps: usize) -> Result<Option<usize>> {
    if m.d() != 1 {
        return Err(Error::input("simplicity probe needs a rank-one module"));
    }
    if f.is_zero() {
        return Err(Error::input("simplicity probe needs a nonzero polynomial"));
    }
    if f.nvars() != m.n() {
        return Err(Error::dims("probe polynomial variables", m.n(), f.nvars()));
    }
    let n = m.n();
    let lowering = (0..n)
        .map(|i| m.root_op(&Root::pair(n, i, -1, i, -1)))
        .collect::<Result<Vec<_>>>()?;
    let mut cur = f.clone();
    for step in 0..=max_steps {
        if cur.is_zero() {
            return Ok(None);
        }
        if cur.is_constant() {
            return Ok(Some(step));
        }
        if step == max_steps {
            break;
        }
        let var = (0..n)
            .max_by_key(|&i| (cur.degree_in(i).unwrap_or(0), std::cmp::Reverse(i)))
            .expect("n >= 1");
        let lowered = lowering[var].apply(std::slice::from_ref(&cur))?;
        cur = &cur - &lowered[0];
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::make_m0;
    use crate::polyring::{int, PolyMatrix};

    #[test]
    fn one_step_on_h1() {
        // (1 - X_{-2e1}) h1 = h1 - (h1 + 2) = -2
        let m = make_m0(2).unwrap();
        let op = m.root_op(&Root::new(vec![-2, 0])).unwrap();
        let h1 = MultiPoly::var(2, 0);
        let out = &h1 - &op.apply(std::slice::from_ref(&h1)).unwrap()[0];
        assert_eq!(out, MultiPoly::constant(2, int(-2)));
        assert_eq!(simplicity_probe(&m, &h1, 2).unwrap(), Some(1));
    }

    #[test]
    fn constants_take_zero_steps() {
        let m = make_m0(2).unwrap();
        assert_eq!(
            simplicity_probe(&m, &MultiPoly::one(2), 5).unwrap(),
            Some(0)
        );
        assert!(simplicity_probe(&m, &MultiPoly::zero(2), 5).is_err());
    }

    #[test]
    fn mixed_monomial() {
        let m = make_m0(2).unwrap();
        let f = &MultiPoly::var(2, 0).pow(2) * &MultiPoly::var(2, 1);
        assert_eq!(simplicity_probe(&m, &f, 10).unwrap(), Some(3));
        assert_eq!(simplicity_probe(&m, &f, 2).unwrap(), None);
    }

    #[test]
    fn whittaker_check() {
        let m = make_m0(3).unwrap();
        assert_eq!(whittaker_roots(3).len(), 6);
        assert!(whittaker_locally_finite(&m).unwrap());
        let bad = m
            .with_action(
                Root::new(vec![-2, 0, 0]),
                PolyMatrix::single(MultiPoly::var(3, 1)),
            )
            .unwrap();
        assert!(!whittaker_locally_finite(&bad).unwrap());
    }
}
