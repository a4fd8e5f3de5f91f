use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::poly::{MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;

/// Square `d x d` matrix of polynomials in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        PolyMatrix {
            dim,
            nvars,
            entries: vec![MultiPoly::zero(nvars); dim * dim],
        }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        Self::scalar(dim, MultiPoly::one(nvars))
    }

    /// `p` times the identity.
    pub fn scalar(dim: usize, p: MultiPoly) -> Self {
        let mut m = Self::zero(dim, p.nvars());
        for i in 0..dim {
            m.entries[i * dim + i] = p.clone();
        }
        m
    }

    /// Rank-one shorthand: the `1 x 1` matrix `[p]`.
    pub fn single(p: MultiPoly) -> Self {
        PolyMatrix {
            dim: 1,
            nvars: p.nvars(),
            entries: vec![p],
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::input("empty action matrix"));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::dims("matrix row", dim, row.len()));
            }
            for p in row {
                entries.push(p.with_nvars(nvars)?);
            }
        }
        Ok(PolyMatrix {
            dim,
            nvars,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.dim + j] = p;
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.dim, self.nvars)
    }

    pub fn trace(&self) -> MultiPoly {
        let mut t = MultiPoly::zero(self.nvars);
        for i in 0..self.dim {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&MultiPoly) -> Result<MultiPoly>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        let nvars = entries.first().map_or(self.nvars, MultiPoly::nvars);
        Ok(PolyMatrix {
            dim: self.dim,
            nvars,
            entries,
        })
    }

    /// Entrywise evaluation at a point.
    pub fn eval(&self, point: &[Rational]) -> Result<QMatrix> {
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j).eval(point))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QMatrix::from_rows(rows)
    }

    /// Matrix-vector product with a column of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                let mut acc = MultiPoly::zero(self.nvars);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn check(&self, rhs: &PolyMatrix) {
        assert_eq!(
            (self.dim, self.nvars),
            (rhs.dim, rhs.nvars),
            "polynomial matrix shape mismatch"
        );
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.check(rhs);
        let d = self.dim;
        let mut out = PolyMatrix::zero(d, self.nvars);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.check(rhs);
        PolyMatrix {
            dim: self.dim,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.check(rhs);
        PolyMatrix {
            dim: self.dim,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}

/// A 1x1 matrix prints as its entry, larger ones as `[[a, b], [c, d]]`.
impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 1 {
            return write!(f, "{}", self.get(0, 0));
        }
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[MultiPoly]> = (0..self.dim)
            .map(|i| &self.entries[i * self.dim..(i + 1) * self.dim])
            .collect();
        rows.serialize(s)
    }
}
