use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::PolyMatrix;
use super::poly::{int, MultiPoly, Rational};
use crate::error::{Error, Result};

/// Integer vector `s` standing for the automorphism `h_k -> h_k - s_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftVector(Vec<i64>);

impl ShiftVector {
    pub fn new(s: Vec<i64>) -> Self {
        ShiftVector(s)
    }

    pub fn zero(n: usize) -> Self {
        ShiftVector(vec![0; n])
    }

    /// The shift by `c` in coordinate `i` (zero-based).
    pub fn unit(n: usize, i: usize, c: i64) -> Self {
        let mut v = vec![0; n];
        v[i] = c;
        ShiftVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Applies `h_k -> h_k - s_k` to `p`.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.nvars() != self.len() {
            return Err(Error::dims("shift vector", p.nvars(), self.len()));
        }
        p.translate(&self.to_rationals())
    }

    pub fn apply_matrix(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        if self.is_zero() {
            return Ok(m.clone());
        }
        m.try_map(|p| self.apply(p))
    }

    /// The shift as a rational point, for evaluation offsets.
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| int(x)).collect()
    }
}

impl Add for &ShiftVector {
    type Output = ShiftVector;
    fn add(self, rhs: &ShiftVector) -> ShiftVector {
        assert_eq!(self.len(), rhs.len(), "shift length mismatch");
        ShiftVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ShiftVector {
    type Output = ShiftVector;
    fn sub(self, rhs: &ShiftVector) -> ShiftVector {
        self + &(-rhs)
    }
}

impl Neg for &ShiftVector {
    type Output = ShiftVector;
    fn neg(self) -> ShiftVector {
        ShiftVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Substitutes `h_k -> h_k - s_k` in `p`.
pub fn shift_apply(s: &ShiftVector, p: &MultiPoly) -> Result<MultiPoly> {
    s.apply(p)
}

/// Operator `v -> A * sigma_s(v)` on columns of `d` polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyShiftOp {
    pub matrix: PolyMatrix,
    pub shift: ShiftVector,
}

impl PolyShiftOp {
    pub fn new(matrix: PolyMatrix, shift: ShiftVector) -> Result<Self> {
        if matrix.nvars() != shift.len() {
            return Err(Error::dims("operator shift", matrix.nvars(), shift.len()));
        }
        Ok(PolyShiftOp { matrix, shift })
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        PolyShiftOp {
            matrix: PolyMatrix::identity(dim, nvars),
            shift: ShiftVector::zero(nvars),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn nvars(&self) -> usize {
        self.matrix.nvars()
    }

    /// `self` after `other`: `(A * sigma_a(B), a + b)`.
    pub fn compose(&self, other: &PolyShiftOp) -> Result<PolyShiftOp> {
        if self.dim() != other.dim() || self.nvars() != other.nvars() {
            return Err(Error::input(format!(
                "cannot compose operators of shape {}x{} and {}x{}",
                self.dim(),
                self.nvars(),
                other.dim(),
                other.nvars()
            )));
        }
        let shifted = self.shift.apply_matrix(&other.matrix)?;
        Ok(PolyShiftOp {
            matrix: &self.matrix * &shifted,
            shift: &self.shift + &other.shift,
        })
    }

    /// Action on a column of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        if v.len() != self.dim() {
            return Err(Error::dims("operand column", self.dim(), v.len()));
        }
        let shifted = v
            .iter()
            .map(|p| self.shift.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.matrix.apply(&shifted))
    }
}

/// Composition `a` after `b`.
pub fn op_compose(a: &PolyShiftOp, b: &PolyShiftOp) -> Result<PolyShiftOp> {
    a.compose(b)
}

/// Formal sum of polynomial-shift operators, one matrix per distinct shift.
///
/// This is the image of a general element of the enveloping algebra, which
/// need not have a single shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSum {
    dim: usize,
    nvars: usize,
    parts: BTreeMap<ShiftVector, PolyMatrix>,
}

impl OpSum {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        OpSum {
            dim,
            nvars,
            parts: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        Self::from_op(PolyShiftOp::identity(dim, nvars))
    }

    pub fn from_op(op: PolyShiftOp) -> Self {
        let mut s = OpSum::zero(op.dim(), op.nvars());
        s.add_op(&op, &Rational::from_integer(1.into()));
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `c * op`, merging with any summand of the same shift.
    pub fn add_op(&mut self, op: &PolyShiftOp, c: &Rational) {
        assert_eq!((op.dim(), op.nvars()), (self.dim, self.nvars));
        if c.is_zero() || op.matrix.is_zero() {
            return;
        }
        let term = op.matrix.scale(c);
        let merged = match self.parts.remove(&op.shift) {
            Some(m) => &m + &term,
            None => term,
        };
        if !merged.is_zero() {
            self.parts.insert(op.shift.clone(), merged);
        }
    }

    pub fn add_sum(&mut self, other: &OpSum, c: &Rational) {
        for op in other.ops() {
            self.add_op(&op, c);
        }
    }

    /// Distributes composition over both sums.
    pub fn compose(&self, other: &OpSum) -> Result<OpSum> {
        let mut out = OpSum::zero(self.dim, self.nvars);
        let one = Rational::from_integer(1.into());
        for a in self.ops() {
            for b in other.ops() {
                out.add_op(&a.compose(&b)?, &one);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Summands in ascending shift order.
    pub fn ops(&self) -> impl Iterator<Item = PolyShiftOp> + '_ {
        self.parts.iter().map(|(s, m)| PolyShiftOp {
            matrix: m.clone(),
            shift: s.clone(),
        })
    }

    pub fn shifts(&self) -> impl Iterator<Item = &ShiftVector> {
        self.parts.keys()
    }

    pub fn part(&self, s: &ShiftVector) -> Option<&PolyMatrix> {
        self.parts.get(s)
    }

    /// True when every summand has zero shift, i.e. the element commutes with the Cartan.
    pub fn is_degree_zero(&self) -> bool {
        self.parts.keys().all(ShiftVector::is_zero)
    }

    /// Collapses to a single operator when at most one shift occurs.
    pub fn as_single(&self) -> Option<PolyShiftOp> {
        match self.parts.len() {
            0 => Some(PolyShiftOp {
                matrix: PolyMatrix::zero(self.dim, self.nvars),
                shift: ShiftVector::zero(self.nvars),
            }),
            1 => self.ops().next(),
            _ => None,
        }
    }
}

impl fmt::Display for PolyShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.matrix, self.shift)
    }
}

impl fmt::Display for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.ops().map(|op| op.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Sub for &OpSum {
    type Output = OpSum;
    fn sub(self, rhs: &OpSum) -> OpSum {
        let mut out = self.clone();
        out.add_sum(rhs, &Rational::from_integer((-1).into()));
        out
    }
}
