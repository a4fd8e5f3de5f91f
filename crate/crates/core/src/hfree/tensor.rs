use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Result;
use crate::liealg::{ElementKind, SpBasis};
use crate::polyring::{MultiPoly, PolyMatrix, Rational};

use super::HFreeModule;

/// Weights of the standard basis vectors of the defining representation,
/// read from the diagonals of the Cartan matrices.
pub fn natural_weights(basis: &SpBasis) -> Vec<Vec<Rational>> {
    let size = basis.matrix_size();
    (0..size)
        .map(|j| {
            (0..basis.n())
                .map(|i| basis.element(basis.cartan_index(i)).matrix[(j, j)].clone())
                .collect()
        })
        .collect()
}

/// `M (x) V` for the defining representation `V`, as a free module of rank
/// `d * dim V`.
///
/// Coordinate `j * d + i` stands for `g_i (x) e_j`, with its polynomial
/// variable translated by the weight `mu_j` of `e_j` so that `h` again acts
/// by multiplication. Block `(j, j)` of `A'_alpha` is `A_alpha(h - mu_j)` and
/// block `(k, j)` is `X_alpha[k, j]` times the identity.
#[allow(clippy::needless_range_loop)]
pub fn tensor_natural(m: &HFreeModule, basis: &SpBasis) -> Result<HFreeModule> {
    m.check_against(basis)?;
    let n = m.n();
    let d = m.d();
    let size = basis.matrix_size();
    let mu = natural_weights(basis);
    let mut actions = BTreeMap::new();
    for el in basis.elements() {
        let ElementKind::Root(alpha) = &el.kind else {
            continue;
        };
        let a = m.action(alpha).expect("table checked against basis");
        let mut big = PolyMatrix::zero(d * size, n);
        for j in 0..size {
            let block = a.try_map(|p| p.translate(&mu[j]))?;
            for r in 0..d {
                for c in 0..d {
                    big.set(j * d + r, j * d + c, block.get(r, c).clone());
                }
            }
            for k in 0..size {
                let x = &el.matrix[(k, j)];
                if x.is_zero() {
                    continue;
                }
                for i in 0..d {
                    let entry = big.get(k * d + i, j * d + i) + &MultiPoly::constant(n, x.clone());
                    big.set(k * d + i, j * d + i, entry);
                }
            }
        }
        actions.insert(alpha.clone(), big);
    }
    HFreeModule::new(n, d * size, actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::{make_m0, make_sl2_example, verify_relations};
    use crate::liealg::build_sp2n;
    use crate::polyring::rat;

    #[test]
    fn weights_of_sp4() {
        let b = build_sp2n(2).unwrap();
        let mu = natural_weights(&b);
        assert_eq!(mu[0], vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(mu[3], vec![rat(0, 1), rat(-1, 1)]);
    }

    #[test]
    fn tensor_of_m0_verifies() {
        for n in 1..=2 {
            let b = build_sp2n(n).unwrap();
            let t = tensor_natural(&make_m0(n).unwrap(), &b).unwrap();
            assert_eq!(t.d(), 2 * n);
            assert!(verify_relations(&t, &b).unwrap().passed());
        }
    }

    #[test]
    fn tensor_of_sl2_fixture_verifies() {
        let b = SpBasis::sl2_fixture();
        let t = tensor_natural(&make_sl2_example(), &b).unwrap();
        assert_eq!(t.d(), 2);
        assert!(verify_relations(&t, &b).unwrap().passed());
    }

    #[test]
    fn tensor_twice() {
        let b = build_sp2n(2).unwrap();
        let t = tensor_natural(&make_m0(2).unwrap(), &b).unwrap();
        let tt = tensor_natural(&t, &b).unwrap();
        assert_eq!(tt.d(), 16);
        assert!(verify_relations(&tt, &b).unwrap().passed());
    }
}
