use num_traits::Zero;

use super::basis::SpBasis;
use crate::error::{Error, Result};
use crate::polyring::{format_rational, Rational};
use crate::qmatrix::QMatrix;

/// Element of the enveloping algebra: a rational combination of words in
/// basis indices. The word `[a, b]` stands for the product `B_a B_b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UElement {
    pub terms: Vec<(Rational, Vec<usize>)>,
}

impl UElement {
    pub fn word(word: Vec<usize>) -> Self {
        UElement {
            terms: vec![(Rational::from_integer(1.into()), word)],
        }
    }

    /// The unit (empty word).
    pub fn one() -> Self {
        Self::word(vec![])
    }

    pub fn push(&mut self, c: Rational, word: Vec<usize>) {
        if !c.is_zero() {
            self.terms.push((c, word));
        }
    }

    /// Formats with basis labels, e.g. `1/2 X(2e1) X(-2e1) + h1 h1`.
    pub fn display(&self, basis: &SpBasis) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, w)| {
                let word: Vec<&str> = w.iter().map(|&i| basis.element(i).label.as_str()).collect();
                let word = if word.is_empty() {
                    "1".into()
                } else {
                    word.join(" ")
                };
                format!("{} {}", format_rational(c), word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Quadratic Casimir `sum_a B_a B^a`, with `{B^a}` dual to the basis under
/// the trace form `tr(XY)` of the defining representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirElement {
    pub terms: Vec<(Rational, [usize; 2])>,
}

impl CasimirElement {
    pub fn to_uelement(&self) -> UElement {
        UElement {
            terms: self
                .terms
                .iter()
                .map(|(c, [a, b])| (c.clone(), vec![*a, *b]))
                .collect(),
        }
    }
}

/// Gram matrix of the trace form on the basis.
pub fn trace_form(basis: &SpBasis) -> QMatrix {
    let d = basis.dim();
    let mut g = QMatrix::zeros(d, d);
    for a in 0..d {
        for b in a..d {
            let v = basis
                .element(a)
                .matrix
                .trace_product(&basis.element(b).matrix);
            g[(a, b)] = v.clone();
            g[(b, a)] = v;
        }
    }
    g
}

pub fn casimir(basis: &SpBasis) -> Result<CasimirElement> {
    let g = trace_form(basis);
    let inv = g
        .inverse()
        .ok_or_else(|| Error::Internal("trace form is degenerate".into()))?;
    let mut terms = Vec::new();
    for ((b, a), c) in inv.entries() {
        if !c.is_zero() {
            terms.push((c.clone(), [a, b]));
        }
    }
    terms.sort_by_key(|(_, w)| *w);
    Ok(CasimirElement { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_sp2n;

    #[test]
    fn casimir_commutes_in_defining_rep() {
        // the Casimir acts on C^{2n} as a scalar by Schur's lemma
        for n in 1..=3 {
            let b = build_sp2n(n).unwrap();
            let c = casimir(&b).unwrap();
            let m = b.matrix_size();
            let mut total = QMatrix::zeros(m, m);
            for (coef, [x, y]) in &c.terms {
                total = &total + &(&b.element(*x).matrix * &b.element(*y).matrix).scale(coef);
            }
            let s = total[(0, 0)].clone();
            assert_eq!(total, QMatrix::identity(m).scale(&s));
            for el in b.elements() {
                assert!(total.commutator(&el.matrix).is_zero());
            }
        }
    }

    #[test]
    fn trace_form_is_nondegenerate() {
        let b = build_sp2n(2).unwrap();
        assert!(trace_form(&b).inverse().is_some());
        assert!(trace_form(&SpBasis::sl2_fixture()).inverse().is_some());
    }
}
