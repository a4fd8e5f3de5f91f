use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::basis::{AlgebraKind, Coords, SpBasis};
use super::root::Root;
use crate::error::{Error, Result};
use crate::polyring::{format_rational, rat, Rational};
use crate::qmatrix::QMatrix;

/// Linear automorphism of the algebra given on basis elements.
///
/// Construction always checks that brackets are preserved on every basis
/// pair, so a value of this type is a Lie algebra automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismTable {
    images: Vec<Coords>,
    h_stable: bool,
}

/// Where one root vector goes: `X_source -> scalar * X_target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootImage {
    pub source: Root,
    pub target: Root,
    #[serde(serialize_with = "ser_rational")]
    pub scalar: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

impl AutomorphismTable {
    /// Builds from explicit images and verifies bracket preservation and invertibility.
    pub fn from_images(basis: &SpBasis, images: Vec<Coords>) -> Result<Self> {
        if images.len() != basis.dim() {
            return Err(Error::dims(
                "automorphism images",
                basis.dim(),
                images.len(),
            ));
        }
        let h_stable = basis.elements().iter().zip(&images).all(|(el, img)| {
            !el.is_cartan() || img.iter().all(|(i, _)| basis.element(*i).is_cartan())
        });
        let table = AutomorphismTable { images, h_stable };
        table.check(basis)?;
        Ok(table)
    }

    /// The inner automorphism `X -> U X U^{-1}`.
    pub fn conjugation(basis: &SpBasis, u: &QMatrix) -> Result<Self> {
        let u_inv = u
            .inverse()
            .ok_or_else(|| Error::input("conjugating matrix is singular"))?;
        let images = basis
            .elements()
            .iter()
            .map(|el| basis.expand(&(&(u * &el.matrix) * &u_inv)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(basis, images)
    }

    pub fn identity(basis: &SpBasis) -> Self {
        AutomorphismTable {
            images: (0..basis.dim())
                .map(|i| vec![(i, Rational::one())])
                .collect(),
            h_stable: true,
        }
    }

    /// Fixes the Cartan pointwise and rescales `X_alpha` by `scalars[alpha]`.
    ///
    /// Fails unless the scalars are multiplicative along root sums.
    pub fn root_scaling(basis: &SpBasis, scalars: &BTreeMap<Root, Rational>) -> Result<Self> {
        let mut images = Vec::with_capacity(basis.dim());
        for (idx, el) in basis.elements().iter().enumerate() {
            let c = match el.root() {
                Some(r) => scalars
                    .get(r)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("no scalar for root {r}")))?,
                None => Rational::one(),
            };
            if c.is_zero() {
                return Err(Error::input("root scalars must be nonzero"));
            }
            images.push(vec![(idx, c)]);
        }
        Self::from_images(basis, images)
    }

    pub fn h_stable(&self) -> bool {
        self.h_stable
    }

    pub fn image(&self, idx: usize) -> &Coords {
        &self.images[idx]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AutomorphismTable) -> AutomorphismTable {
        let images = other
            .images
            .iter()
            .map(|img| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (c, coeff) in img {
                    for (d, inner) in &self.images[*c] {
                        *acc.entry(*d).or_insert_with(Rational::zero) += coeff * inner;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        AutomorphismTable {
            images,
            h_stable: self.h_stable && other.h_stable,
        }
    }

    /// Matrix `T` with `tau(h_i) = sum_j T[j][i] h_j`; `None` unless h-stable.
    pub fn cartan_matrix(&self, basis: &SpBasis) -> Option<QMatrix> {
        if !self.h_stable {
            return None;
        }
        let n = basis.n();
        let mut t = QMatrix::zeros(n, n);
        for i in 0..n {
            for (idx, c) in &self.images[basis.cartan_index(i)] {
                if let super::basis::ElementKind::Cartan(j) = basis.element(*idx).kind {
                    t[(j, i)] = c.clone();
                }
            }
        }
        Some(t)
    }

    /// Image of a root vector, which must be a multiple of a single root vector.
    pub fn root_image(&self, basis: &SpBasis, alpha: &Root) -> Result<RootImage> {
        let idx = basis
            .index_of_root(alpha)
            .ok_or_else(|| Error::input(format!("{alpha} is not a root")))?;
        match self.images[idx].as_slice() {
            [(j, c)] => match basis.element(*j).root() {
                Some(target) => Ok(RootImage {
                    source: alpha.clone(),
                    target: target.clone(),
                    scalar: c.clone(),
                }),
                None => Err(Error::input(format!(
                    "image of X({alpha}) lies in the Cartan"
                ))),
            },
            _ => Err(Error::input(format!(
                "image of X({alpha}) is not a single root vector"
            ))),
        }
    }

    /// Images of all root vectors, in basis order.
    pub fn root_images(&self, basis: &SpBasis) -> Result<Vec<RootImage>> {
        basis.roots().map(|r| self.root_image(basis, r)).collect()
    }

    fn image_matrix(&self, basis: &SpBasis, idx: usize) -> QMatrix {
        basis.combine(&self.images[idx])
    }

    fn check(&self, basis: &SpBasis) -> Result<()> {
        let mats: Vec<QMatrix> = (0..basis.dim())
            .map(|i| self.image_matrix(basis, i))
            .collect();
        // invertibility: the image matrices must stay linearly independent
        let mut coord_rows = Vec::with_capacity(basis.dim());
        for img in &self.images {
            let mut row = vec![Rational::zero(); basis.dim()];
            for (i, c) in img {
                row[*i] = c.clone();
            }
            coord_rows.push(row);
        }
        if QMatrix::from_rows(coord_rows)?.inverse().is_none() {
            return Err(Error::input("automorphism table is not invertible"));
        }
        for a in 0..basis.dim() {
            for b in a + 1..basis.dim() {
                let lhs = mats[a].commutator(&mats[b]);
                let bracket = basis.bracket_basis(a, b);
                let m = basis.matrix_size();
                let mut rhs = QMatrix::zeros(m, m);
                for (c, coeff) in &bracket {
                    rhs = &rhs + &mats[*c].scale(coeff);
                }
                if lhs != rhs {
                    return Err(Error::input(format!(
                        "table does not preserve [{}, {}]",
                        basis.element(a).label,
                        basis.element(b).label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks bracket preservation again; always true for constructed tables.
    pub fn preserves_brackets(&self, basis: &SpBasis) -> bool {
        self.check(basis).is_ok()
    }
}

/// The automorphism `exp(ad X_k) exp(-ad X_{-k}) exp(ad X_k)` for the
/// one-based index `k`, where `X_k = X_{2e_k}/2` and `X_{-k} = -X_{-2e_k}/2`.
///
/// Computed as conjugation by the product of the three matrix exponentials,
/// so every sign in the resulting table is exact.
pub fn weyl_twist_auto(basis: &SpBasis, k: usize) -> Result<AutomorphismTable> {
    if basis.kind() != AlgebraKind::Symplectic {
        return Err(Error::Unsupported(
            "Weyl twists are defined for the sp(2n) basis".into(),
        ));
    }
    let n = basis.n();
    if k == 0 || k > n {
        return Err(Error::input(format!("twist index {k} outside 1..={n}")));
    }
    let up = basis
        .index_of_root(&Root::pair(n, k - 1, 1, k - 1, 1))
        .expect("long root present");
    let down = basis
        .index_of_root(&Root::pair(n, k - 1, -1, k - 1, -1))
        .expect("long root present");
    let xk = basis.element(up).matrix.scale(&rat(1, 2));
    let x_minus_k = basis.element(down).matrix.scale(&rat(-1, 2));
    let e1 = xk.exp_nilpotent()?;
    let e2 = (-&x_minus_k).exp_nilpotent()?;
    let u = &(&e1 * &e2) * &e1;
    AutomorphismTable::conjugation(basis, &u)
}

/// Scalars `c_alpha = prod c_i^{alpha_i}` for every root.
pub fn diag_twist_scalars(basis: &SpBasis, c: &[Rational]) -> Result<BTreeMap<Root, Rational>> {
    if c.len() != basis.n() {
        return Err(Error::dims("twist scalars", basis.n(), c.len()));
    }
    if c.iter().any(Zero::is_zero) {
        return Err(Error::input("diagonal twist scalars must be nonzero"));
    }
    Ok(basis
        .roots()
        .map(|r| {
            let mut v = Rational::one();
            for (ci, &a) in c.iter().zip(r.coords()) {
                v *= ci.pow(a as i32);
            }
            (r.clone(), v)
        })
        .collect())
}

/// The diagonal automorphism `X_alpha -> c_alpha X_alpha` fixing the Cartan.
pub fn diagonal_auto(basis: &SpBasis, c: &[Rational]) -> Result<AutomorphismTable> {
    AutomorphismTable::root_scaling(basis, &diag_twist_scalars(basis, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_sp2n;
    use crate::polyring::int;

    #[test]
    fn weyl_twist_on_cartan() {
        let b = build_sp2n(3).unwrap();
        for k in 1..=3 {
            let phi = weyl_twist_auto(&b, k).unwrap();
            assert!(phi.h_stable());
            for i in 0..3 {
                let sign = if i + 1 == k { int(-1) } else { int(1) };
                assert_eq!(
                    phi.image(b.cartan_index(i)),
                    &vec![(b.cartan_index(i), sign)]
                );
            }
        }
    }

    #[test]
    fn weyl_twist_swaps_long_roots() {
        let b = build_sp2n(2).unwrap();
        let phi = weyl_twist_auto(&b, 1).unwrap();
        let img = phi.root_image(&b, &Root::new(vec![2, 0])).unwrap();
        assert_eq!(img.target, Root::new(vec![-2, 0]));
        assert_eq!(img.scalar, int(1));
    }

    #[test]
    fn weyl_twist_index_checked() {
        let b = build_sp2n(2).unwrap();
        assert!(weyl_twist_auto(&b, 0).is_err());
        assert!(weyl_twist_auto(&b, 3).is_err());
        assert!(weyl_twist_auto(&SpBasis::sl2_fixture(), 1).is_err());
    }

    #[test]
    fn diag_scalars_hand_values() {
        let b1 = build_sp2n(1).unwrap();
        let s = diag_twist_scalars(&b1, &[int(3)]).unwrap();
        assert_eq!(s[&Root::new(vec![2])], int(9));
        let b2 = build_sp2n(2).unwrap();
        let s = diag_twist_scalars(&b2, &[int(2), int(3)]).unwrap();
        assert_eq!(s[&Root::new(vec![1, -1])], rat(2, 3));
        let ones = diag_twist_scalars(&b2, &[int(1), int(1)]).unwrap();
        assert!(ones.values().all(|v| v.is_one()));
        assert!(diag_twist_scalars(&b2, &[int(0), int(1)]).is_err());
    }

    #[test]
    fn non_multiplicative_scaling_rejected() {
        let b = build_sp2n(2).unwrap();
        let mut s = diag_twist_scalars(&b, &[int(1), int(1)]).unwrap();
        s.insert(Root::new(vec![2, 0]), int(2));
        assert!(AutomorphismTable::root_scaling(&b, &s).is_err());
    }

    #[test]
    fn compose_with_identity() {
        let b = build_sp2n(2).unwrap();
        let phi = weyl_twist_auto(&b, 2).unwrap();
        let id = AutomorphismTable::identity(&b);
        assert_eq!(phi.compose(&id), phi);
        assert_eq!(id.compose(&phi), phi);
    }
}
