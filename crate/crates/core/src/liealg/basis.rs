use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::root::Root;
use crate::error::{Error, Result};
use crate::polyring::{int, rat, Rational};
use crate::qmatrix::QMatrix;

/// Which realization a basis describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// `sp(2n)` with root vectors `X_alpha`, `alpha` in `{+-e_i +- e_j}`.
    Symplectic,
    /// `sl(2)` with `h = (e11 - e22)/2`, `e = e12`, `f = e21`; roots `+-1`.
    Sl2Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Root(Root),
    /// Zero-based index of the Cartan basis element.
    Cartan(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub kind: ElementKind,
    pub matrix: QMatrix,
}

impl BasisElement {
    pub fn root(&self) -> Option<&Root> {
        match &self.kind {
            ElementKind::Root(r) => Some(r),
            ElementKind::Cartan(_) => None,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self.kind, ElementKind::Cartan(_))
    }
}

/// Sparse coordinates in a basis: `(element index, coefficient)`, ascending.
pub type Coords = Vec<(usize, Rational)>;

/// Fixed basis of `sp(2n)` as exact `2n x 2n` matrices.
///
/// Root vectors come first, then the Cartan elements `h_1..h_n`. Every
/// element has a pivot entry where all other elements vanish, so the
/// coordinates of a matrix can be read off directly and then confirmed by
/// reconstruction.
#[derive(Clone, Debug)]
pub struct SpBasis {
    n: usize,
    kind: AlgebraKind,
    elements: Vec<BasisElement>,
    root_index: BTreeMap<Root, usize>,
    pivots: Vec<(usize, usize)>,
}

/// Builds the basis of `sp(2n)` with root vectors
/// `X_{2e_i} = 2e_{i,n+i}`, `X_{-2e_i} = -2e_{n+i,i}`,
/// `X_{e_i+e_j} = e_{i,n+j} + e_{j,n+i}`, `X_{-e_i-e_j} = -e_{n+i,j} - e_{n+j,i}`,
/// `X_{e_i-e_j} = e_{i,j} - e_{n+j,n+i}` and `h_i = e_{i,i} - e_{n+i,n+i}`.
pub fn build_sp2n(n: usize) -> Result<SpBasis> {
    if n == 0 {
        return Err(Error::input("sp(2n) needs n >= 1"));
    }
    let m = 2 * n;
    let e = |i: usize, j: usize, c: i64| QMatrix::unit(m, i, j, int(c));
    let mut elements = Vec::with_capacity(2 * n * n + n);
    let mut push = |root: Root, matrix: QMatrix| {
        elements.push(BasisElement {
            label: format!("X({root})"),
            kind: ElementKind::Root(root),
            matrix,
        });
    };
    for i in 0..n {
        push(Root::pair(n, i, 1, i, 1), e(i, n + i, 2));
    }
    for i in 0..n {
        push(Root::pair(n, i, -1, i, -1), e(n + i, i, -2));
    }
    for i in 0..n {
        for j in i + 1..n {
            push(Root::pair(n, i, 1, j, 1), &e(i, n + j, 1) + &e(j, n + i, 1));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            push(
                Root::pair(n, i, -1, j, -1),
                &e(n + i, j, -1) + &e(n + j, i, -1),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                push(
                    Root::pair(n, i, 1, j, -1),
                    &e(i, j, 1) - &e(n + j, n + i, 1),
                );
            }
        }
    }
    for i in 0..n {
        elements.push(BasisElement {
            label: format!("h{}", i + 1),
            kind: ElementKind::Cartan(i),
            matrix: &e(i, i, 1) - &e(n + i, n + i, 1),
        });
    }
    SpBasis::from_elements(n, AlgebraKind::Symplectic, elements)
}

impl SpBasis {
    /// The `sl(2)` basis `{e, f, h}` with `h = (e11 - e22)/2`, so that `e`
    /// and `f` carry roots `+1` and `-1`.
    pub fn sl2_fixture() -> SpBasis {
        let elements = vec![
            BasisElement {
                label: "e".into(),
                kind: ElementKind::Root(Root::new(vec![1])),
                matrix: QMatrix::unit(2, 0, 1, int(1)),
            },
            BasisElement {
                label: "f".into(),
                kind: ElementKind::Root(Root::new(vec![-1])),
                matrix: QMatrix::unit(2, 1, 0, int(1)),
            },
            BasisElement {
                label: "h".into(),
                kind: ElementKind::Cartan(0),
                matrix: &QMatrix::unit(2, 0, 0, rat(1, 2)) - &QMatrix::unit(2, 1, 1, rat(1, 2)),
            },
        ];
        SpBasis::from_elements(1, AlgebraKind::Sl2Fixture, elements)
            .expect("sl2 fixture basis is well formed")
    }

    fn from_elements(n: usize, kind: AlgebraKind, elements: Vec<BasisElement>) -> Result<SpBasis> {
        let mut root_index = BTreeMap::new();
        for (idx, el) in elements.iter().enumerate() {
            if let Some(r) = el.root() {
                root_index.insert(r.clone(), idx);
            }
        }
        let mut pivots = Vec::with_capacity(elements.len());
        for (idx, el) in elements.iter().enumerate() {
            let pivot = el
                .matrix
                .entries()
                .filter(|(_, v)| !v.is_zero())
                .map(|(pos, _)| pos)
                .find(|&pos| {
                    elements
                        .iter()
                        .enumerate()
                        .all(|(o, other)| o == idx || other.matrix[pos].is_zero())
                })
                .ok_or_else(|| Error::Internal(format!("no pivot entry for {}", el.label)))?;
            pivots.push(pivot);
        }
        Ok(SpBasis {
            n,
            kind,
            elements,
            root_index,
            pivots,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.elements[0].matrix.rows()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &BasisElement {
        &self.elements[idx]
    }

    /// Roots in basis order.
    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.elements.iter().filter_map(BasisElement::root)
    }

    pub fn root_count(&self) -> usize {
        self.root_index.len()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_index.contains_key(r)
    }

    pub fn index_of_root(&self, r: &Root) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.elements
            .iter()
            .position(|e| e.kind == ElementKind::Cartan(i))
            .expect("cartan index in range")
    }

    /// Membership in the root lattice: even coordinate sum for `C_n`, all
    /// integers for the `sl(2)` fixture.
    pub fn in_root_lattice(&self, v: &[i64]) -> bool {
        match self.kind {
            AlgebraKind::Symplectic => v.iter().sum::<i64>() % 2 == 0,
            AlgebraKind::Sl2Fixture => true,
        }
    }

    /// Checks `S A = -A^T S` with `S = [[0, I], [-I, 0]]`.
    pub fn is_member(&self, a: &QMatrix) -> bool {
        let m = self.matrix_size();
        if a.rows() != m || a.cols() != m {
            return false;
        }
        let half = m / 2;
        let mut s = QMatrix::zeros(m, m);
        for i in 0..half {
            s[(i, half + i)] = Rational::one();
            s[(half + i, i)] = -Rational::one();
        }
        &s * a == -&(&a.transpose() * &s)
    }

    /// Exact coordinates of `a` in the basis.
    pub fn expand(&self, a: &QMatrix) -> Result<Coords> {
        let mut coords = Vec::new();
        for (idx, (el, &pos)) in self.elements.iter().zip(&self.pivots).enumerate() {
            let v = &a[pos];
            if !v.is_zero() {
                coords.push((idx, v / &el.matrix[pos]));
            }
        }
        if self.combine(&coords) != *a {
            return Err(Error::input("matrix does not lie in the span of the basis"));
        }
        Ok(coords)
    }

    /// The matrix `sum c_i B_i`.
    pub fn combine(&self, coords: &[(usize, Rational)]) -> QMatrix {
        let m = self.matrix_size();
        let mut out = QMatrix::zeros(m, m);
        for (idx, c) in coords {
            out = &out + &self.elements[*idx].matrix.scale(c);
        }
        out
    }

    /// Coordinates of `[x, y] = xy - yx`.
    pub fn bracket(&self, x: &QMatrix, y: &QMatrix) -> Result<Coords> {
        if !self.is_member(x) || !self.is_member(y) {
            return Err(Error::input("bracket argument is not in sp(2n)"));
        }
        self.expand(&x.commutator(y))
    }

    /// Structure constants: coordinates of `[B_a, B_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Coords {
        let c = self.elements[a].matrix.commutator(&self.elements[b].matrix);
        self.expand(&c)
            .expect("brackets of basis elements stay in the algebra")
    }

    /// Resolves labels such as `X(2e1)`, `X(e1-e2)`, `h2`, or `e`/`f`/`h` for
    /// the `sl(2)` fixture.
    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        let t = label.trim();
        if let Some(idx) = self.elements.iter().position(|e| e.label == t) {
            return Ok(idx);
        }
        if let Some(inner) = t.strip_prefix("X(").and_then(|r| r.strip_suffix(')')) {
            let root = Root::parse(inner, self.n)?;
            return self
                .index_of_root(&root)
                .ok_or_else(|| Error::input(format!("{root} is not a root")));
        }
        if let Some(k) = t.strip_prefix('h').and_then(|k| k.parse::<usize>().ok()) {
            if (1..=self.n).contains(&k) {
                return Ok(self.cartan_index(k - 1));
            }
        }
        Err(Error::input(format!("unknown basis label {label:?}")))
    }

    /// Serializable dump with structure constants.
    pub fn to_json(&self) -> serde_json::Value {
        let mut constants = Vec::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let coords = self.bracket_basis(a, b);
                if coords.is_empty() {
                    continue;
                }
                let terms: Vec<_> = coords
                    .iter()
                    .map(|(i, c)| {
                        serde_json::json!({
                            "element": self.elements[*i].label,
                            "coeff": crate::polyring::format_rational(c),
                        })
                    })
                    .collect();
                constants.push(serde_json::json!({
                    "left": self.elements[a].label,
                    "right": self.elements[b].label,
                    "bracket": terms,
                }));
            }
        }
        serde_json::json!({
            "n": self.n,
            "kind": self.kind,
            "dimension": self.dim(),
            "elements": self.elements,
            "structure_constants": constants,
        })
    }
}
