use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{ElementKind, Root, SpBasis};
use crate::polyring::{MultiPoly, PolyMatrix, PolyShiftOp};

/// A module that is free of rank `d` over `C[h1..hn]`, given by its action
/// table: root `alpha` acts as `v -> A_alpha * sigma_alpha(v)` and `h_i` acts
/// coordinatewise by multiplication with `h_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFreeModule {
    n: usize,
    d: usize,
    actions: BTreeMap<Root, PolyMatrix>,
}

impl HFreeModule {
    pub fn new(n: usize, d: usize, actions: BTreeMap<Root, PolyMatrix>) -> Result<Self> {
        if d == 0 {
            return Err(Error::input("module rank must be positive"));
        }
        for (root, m) in &actions {
            if root.rank() != n {
                return Err(Error::dims(&format!("root {root}"), n, root.rank()));
            }
            if m.dim() != d || m.nvars() != n {
                return Err(Error::input(format!(
                    "action of {root} is {}x{} in {} variables, expected {d}x{d} in {n}",
                    m.dim(),
                    m.dim(),
                    m.nvars()
                )));
            }
        }
        Ok(HFreeModule { n, d, actions })
    }

    /// Rank-one module from scalar polynomials.
    pub fn rank_one(
        n: usize,
        actions: impl IntoIterator<Item = (Root, MultiPoly)>,
    ) -> Result<Self> {
        Self::new(
            n,
            1,
            actions
                .into_iter()
                .map(|(r, p)| (r, PolyMatrix::single(p)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn action(&self, root: &Root) -> Option<&PolyMatrix> {
        self.actions.get(root)
    }

    /// Scalar action polynomial of a rank-one module.
    pub fn scalar_action(&self, root: &Root) -> Option<&MultiPoly> {
        if self.d != 1 {
            return None;
        }
        self.actions.get(root).map(|m| m.get(0, 0))
    }

    pub fn actions(&self) -> impl Iterator<Item = (&Root, &PolyMatrix)> {
        self.actions.iter()
    }

    /// Copy with one table entry replaced.
    pub fn with_action(&self, root: Root, matrix: PolyMatrix) -> Result<Self> {
        let mut actions = self.actions.clone();
        actions.insert(root, matrix);
        Self::new(self.n, self.d, actions)
    }

    /// The full operator `(A_alpha, alpha)` of a root vector.
    pub fn root_op(&self, root: &Root) -> Result<PolyShiftOp> {
        let m = self
            .actions
            .get(root)
            .ok_or_else(|| Error::input(format!("action table has no entry for root {root}")))?;
        PolyShiftOp::new(m.clone(), root.shift())
    }

    /// Checks that the table is keyed by exactly the roots of `basis`.
    pub fn check_against(&self, basis: &SpBasis) -> Result<()> {
        if basis.n() != self.n {
            return Err(Error::input(format!(
                "module has n = {} but the algebra has rank {}",
                self.n,
                basis.n()
            )));
        }
        if let Some(r) = basis.roots().find(|r| !self.actions.contains_key(*r)) {
            return Err(Error::input(format!(
                "action table has no entry for root {r}"
            )));
        }
        if let Some(r) = self.actions.keys().find(|r| !basis.is_root(r)) {
            return Err(Error::input(format!("{r} is not a root of the algebra")));
        }
        Ok(())
    }

    /// Operators of every basis element, in basis order.
    pub fn element_ops(&self, basis: &SpBasis) -> Result<Vec<PolyShiftOp>> {
        self.check_against(basis)?;
        basis
            .elements()
            .iter()
            .map(|el| match &el.kind {
                ElementKind::Root(r) => self.root_op(r),
                ElementKind::Cartan(i) => Ok(PolyShiftOp::identity(self.d, self.n)
                    .with_matrix(PolyMatrix::scalar(self.d, MultiPoly::var(self.n, *i)))),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ModuleRepr::from(self)).expect("module serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&ModuleRepr::from(self)).expect("module serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let repr: ModuleRepr =
            serde_json::from_str(s).map_err(|e| Error::input(format!("bad module JSON: {e}")))?;
        repr.into_module()
    }
}

impl PolyShiftOp {
    fn with_matrix(mut self, m: PolyMatrix) -> Self {
        self.matrix = m;
        self
    }
}

#[derive(Serialize, Deserialize)]
struct ActionRepr {
    root: Root,
    matrix: Vec<Vec<MultiPoly>>,
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    n: usize,
    d: usize,
    actions: Vec<ActionRepr>,
}

impl From<&HFreeModule> for ModuleRepr {
    fn from(m: &HFreeModule) -> Self {
        ModuleRepr {
            n: m.n,
            d: m.d,
            actions: m
                .actions
                .iter()
                .map(|(root, mat)| ActionRepr {
                    root: root.clone(),
                    matrix: (0..m.d)
                        .map(|i| (0..m.d).map(|j| mat.get(i, j).clone()).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

impl ModuleRepr {
    fn into_module(self) -> Result<HFreeModule> {
        let mut actions = BTreeMap::new();
        for a in self.actions {
            if a.matrix.len() != self.d {
                return Err(Error::input(format!(
                    "matrix for root {} has {} rows, expected {}",
                    a.root,
                    a.matrix.len(),
                    self.d
                )));
            }
            let m = PolyMatrix::from_rows(self.n, a.matrix)?;
            if actions.insert(a.root.clone(), m).is_some() {
                return Err(Error::input(format!("duplicate entry for root {}", a.root)));
            }
        }
        HFreeModule::new(self.n, self.d, actions)
    }
}
