use crate::error::{Error, Result};
use crate::hfree::HFreeModule;
use crate::liealg::Root;
use crate::polyring::{rat, MultiPoly, Rational};

/// `A_alpha * sigma_alpha(A_{-alpha})`, the polynomial by which
/// `X_alpha X_{-alpha}` multiplies in a rank-one module.
pub fn root_pair_product(m: &HFreeModule, alpha: &Root) -> Result<MultiPoly> {
    let get = |r: &Root| {
        m.scalar_action(r)
            .ok_or_else(|| Error::input(format!("no rank-one entry for root {r}")))
    };
    let up = get(alpha)?;
    let down = get(&alpha.neg())?;
    Ok(up * &alpha.shift().apply(down)?)
}

/// Whether `h_i - c` divides `p` (`i` zero-based).
pub fn has_linear_factor(p: &MultiPoly, i: usize, c: &Rational) -> Result<bool> {
    let n = p.nvars();
    let images: Vec<MultiPoly> = (0..n)
        .map(|k| {
            if k == i {
                MultiPoly::constant(n, c.clone())
            } else {
                MultiPoly::var(n, k)
            }
        })
        .collect();
    Ok(p.substitute(&images)?.is_zero())
}

/// `(h_i - 1/2)` divides `A_{2e_i}`, `A_{e_i+e_j}` and `A_{e_i-e_j}`, and
/// `(h_i - 3/2)` divides `A_{2e_i}`, for all `i != j`.
pub fn factor_structure_holds(m: &HFreeModule) -> Result<bool> {
    let n = m.n();
    let half = rat(1, 2);
    let get = |r: Root| {
        m.scalar_action(&r)
            .cloned()
            .ok_or_else(|| Error::input(format!("no rank-one entry for root {r}")))
    };
    for i in 0..n {
        let long = get(Root::pair(n, i, 1, i, 1))?;
        if !has_linear_factor(&long, i, &half)? || !has_linear_factor(&long, i, &rat(3, 2))? {
            return Ok(false);
        }
        for j in (0..n).filter(|&j| j != i) {
            for b in [1, -1] {
                if !has_linear_factor(&get(Root::pair(n, i, 1, j, b))?, i, &half)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::make_m0;

    #[test]
    fn m0_factors() {
        assert!(factor_structure_holds(&make_m0(3).unwrap()).unwrap());
        let p = MultiPoly::var_minus(2, 1, rat(1, 2));
        assert!(has_linear_factor(&p, 1, &rat(1, 2)).unwrap());
        assert!(!has_linear_factor(&p, 0, &rat(1, 2)).unwrap());
    }

    #[test]
    fn long_root_product() {
        let m = make_m0(2).unwrap();
        let p = root_pair_product(&m, &Root::new(vec![2, 0])).unwrap();
        let expected =
            &MultiPoly::var_minus(2, 0, rat(1, 2)) * &MultiPoly::var_minus(2, 0, rat(3, 2));
        assert_eq!(p, expected);
    }
}
