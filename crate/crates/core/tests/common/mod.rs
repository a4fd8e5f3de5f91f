//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use cartanfree::coherent::WeightPoint;
use cartanfree::hfree::HFreeModule;
use cartanfree::liealg::{ElementKind, SpBasis, UElement};
use cartanfree::polyring::{int, rat, MultiPoly, Rational};
use cartanfree::qmatrix::QMatrix;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Rational with numerator in [-40, 40] and denominator in [1, 9].
pub fn random_rational(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-40..=40), r.gen_range(1..=9))
}

pub fn random_point(r: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(r)).collect()
}

/// `h_i - c` as a polynomial in `n` variables.
pub fn lin(n: usize, i: usize, c: Rational) -> MultiPoly {
    MultiPoly::var_minus(n, i, c)
}

/// Action of a word on the weight space `W(M)_lambda`, computed by walking
/// the weights from the right: root vectors use the evaluated table entries
/// `A_alpha(mu + alpha)`, Cartan elements multiply by `mu(h_i)`.
///
/// Returns the final weight and the `d x d` matrix `W(M)_lambda -> W(M)_mu`.
pub fn weight_space_word(
    m: &HFreeModule,
    basis: &SpBasis,
    word: &[usize],
    lambda: &[Rational],
) -> (Vec<Rational>, QMatrix) {
    let d = m.d();
    let mut mu: Vec<Rational> = lambda.to_vec();
    let mut acc = QMatrix::identity(d);
    for &idx in word.iter().rev() {
        match &basis.element(idx).kind {
            ElementKind::Root(alpha) => {
                let target: Vec<Rational> = mu
                    .iter()
                    .zip(alpha.coords())
                    .map(|(x, &a)| x + int(a))
                    .collect();
                let c = m.action(alpha).unwrap().eval(&target).unwrap();
                acc = &c * &acc;
                mu = target;
            }
            ElementKind::Cartan(i) => {
                acc = acc.scale(&mu[*i]);
            }
        }
    }
    (mu, acc)
}

/// Sum of `weight_space_word` over the terms of `u`; panics unless every
/// term returns to `lambda`.
pub fn weight_space_element(
    m: &HFreeModule,
    basis: &SpBasis,
    u: &UElement,
    lambda: &[Rational],
) -> QMatrix {
    let d = m.d();
    let mut total = QMatrix::zeros(d, d);
    for (c, word) in &u.terms {
        let (mu, mat) = weight_space_word(m, basis, word, lambda);
        assert_eq!(mu, lambda, "element does not preserve weights");
        total = &total + &mat.scale(c);
    }
    total
}

/// Points of `mu + Q` in the cube `[lo, hi]^n`, by scanning the half-integer
/// grid (`mu` must have coordinates in `Z/2`).
pub fn lattice_points(basis: &SpBasis, mu: &[Rational], lo: &Rational, hi: &Rational) -> usize {
    let n = mu.len();
    let two = int(2);
    let lo2 = (lo * &two).ceil().to_integer();
    let hi2 = (hi * &two).floor().to_integer();
    let lo2: i64 = lo2.try_into().unwrap();
    let hi2: i64 = hi2.try_into().unwrap();
    let mut count = 0;
    let mut cur = vec![lo2; n];
    loop {
        let mut offs = Vec::with_capacity(n);
        let mut ok = true;
        for i in 0..n {
            let diff = rat(cur[i], 2) - &mu[i];
            if !diff.is_integer() {
                ok = false;
                break;
            }
            offs.push(diff.to_integer().try_into().unwrap());
        }
        if ok && basis.in_root_lattice(&offs) {
            count += 1;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if cur[i] < hi2 {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = lo2;
                }
                break;
            }
        }
    }
}

pub fn is_zero_matrix(m: &QMatrix) -> bool {
    m.entries().all(|(_, v)| v.is_zero())
}

pub fn weight(coords: &[(i64, i64)]) -> WeightPoint {
    WeightPoint::new(coords.iter().map(|&(p, q)| rat(p, q)).collect())
}
