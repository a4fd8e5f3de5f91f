use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::action::CoherentAction;
use super::weight::WeightPoint;
use crate::error::{Error, Result};
use crate::liealg::Root;
use crate::polyring::{int, parse_rational, rat, Rational};
use crate::qmatrix::QMatrix;

pub const DEFAULT_NODE_CAP: usize = 100_000;

/// Node cap from `CARTANFREE_NODE_CAP`, falling back to [`DEFAULT_NODE_CAP`].
pub fn node_cap_from_env() -> usize {
    std::env::var("CARTANFREE_NODE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_NODE_CAP)
}

/// Closed axis-parallel box of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBox {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

impl WeightBox {
    pub fn new(lo: Vec<Rational>, hi: Vec<Rational>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::dims("box upper bounds", lo.len(), hi.len()));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::input("box is empty"));
        }
        Ok(WeightBox { lo, hi })
    }

    /// `[lo, hi]^n`.
    pub fn cube(n: usize, lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(vec![lo; n], vec![hi; n])
    }

    /// Parses `lo:hi` into a cube, e.g. `-9/2:9/2`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("box {s:?} is not of the form lo:hi")))?;
        Self::cube(n, parse_rational(lo)?, parse_rational(hi)?)
    }

    /// `[c_i - r, c_i + r]` with `c_i` the integer nearest to `mu_i`
    /// (halves round up).
    pub fn around(mu: &WeightPoint, radius: &Rational) -> Self {
        let centers: Vec<Rational> = mu
            .coords()
            .iter()
            .map(|x| (x + rat(1, 2)).floor())
            .collect();
        WeightBox {
            lo: centers.iter().map(|c| c - radius).collect(),
            hi: centers.iter().map(|c| c + radius).collect(),
        }
    }

    /// [`WeightBox::around`] with radius `9/2`; `[-9/2, 9/2]^n` at `lambda_0`.
    pub fn default_for(mu: &WeightPoint) -> Self {
        Self::around(mu, &rat(9, 2))
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[Rational] {
        &self.lo
    }

    pub fn hi(&self) -> &[Rational] {
        &self.hi
    }

    pub fn contains(&self, p: &WeightPoint) -> bool {
        p.coords()
            .iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (a, b))| a <= x && x <= b)
    }
}

impl fmt::Display for WeightBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| {
                format!(
                    "[{}, {}]",
                    crate::polyring::format_rational(a),
                    crate::polyring::format_rational(b)
                )
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Which closed half-space `S_{+-e_i}` a set of weights lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// Nonzero coefficient of `X_root` from `v_from` to `v_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub root: Root,
    pub coeff: QMatrix,
}

/// Root step between box nodes whose coefficient vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroEdge {
    pub from: usize,
    pub to: usize,
    pub root: Root,
}

/// Forward closure of a node set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub nodes: BTreeSet<usize>,
    /// The closure reached a node with a neighbour outside the box, so it
    /// may be cut short by the truncation.
    pub touches_boundary: bool,
}

/// The part of `W(M)[mu]` visible in a box.
#[derive(Clone, Debug)]
pub struct SupportGraph {
    mu: WeightPoint,
    bbox: WeightBox,
    nodes: Vec<WeightPoint>,
    index: HashMap<Vec<i64>, usize>,
    interior: Vec<bool>,
    edges: Vec<Edge>,
    zero_edges: Vec<ZeroEdge>,
    out: Vec<Vec<usize>>,
}

fn offset_range(mu: &Rational, lo: &Rational, hi: &Rational) -> (i64, i64) {
    let a = (lo - mu).ceil().to_integer().to_i64().unwrap_or(i64::MAX);
    let b = (hi - mu).floor().to_integer().to_i64().unwrap_or(i64::MIN);
    (a, b)
}

/// Builds the support graph on `(mu + Q) ∩ bbox`.
///
/// Nodes are ordered lexicographically by weight. Fails with a resource
/// error when the node count would exceed `node_cap`.
pub fn support_graph(
    action: &CoherentAction,
    mu: &WeightPoint,
    bbox: &WeightBox,
    node_cap: usize,
) -> Result<SupportGraph> {
    let n = action.n();
    if mu.rank() != n {
        return Err(Error::dims("weight", n, mu.rank()));
    }
    if bbox.rank() != n {
        return Err(Error::dims("box", n, bbox.rank()));
    }
    if !bbox.contains(mu) {
        return Err(Error::input(format!("box {bbox} does not contain {mu}")));
    }
    let ranges: Vec<(i64, i64)> = (0..n)
        .map(|i| offset_range(&mu.coords()[i], &bbox.lo[i], &bbox.hi[i]))
        .collect();
    let raw: f64 = ranges.iter().map(|(a, b)| (b - a + 1) as f64).product();
    // a coset keeps at least half of the integer points
    if raw / 2.0 > node_cap as f64 {
        return Err(Error::Resource(format!(
            "box {bbox} holds about {raw} lattice points, over the node cap {node_cap}"
        )));
    }
    let basis = action.basis();
    let mut offsets = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    'outer: loop {
        if basis.in_root_lattice(&cur) {
            offsets.push(cur.clone());
        }
        for i in (0..n).rev() {
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for (j, r) in ranges.iter().enumerate().skip(i + 1) {
                    cur[j] = r.0;
                }
                continue 'outer;
            }
        }
        break;
    }
    if offsets.len() > node_cap {
        return Err(Error::Resource(format!(
            "{} nodes exceed the node cap {node_cap}",
            offsets.len()
        )));
    }
    let index: HashMap<Vec<i64>, usize> = offsets
        .iter()
        .enumerate()
        .map(|(i, k)| (k.clone(), i))
        .collect();
    let nodes: Vec<WeightPoint> = offsets.iter().map(|k| mu.add_offset(k)).collect();
    let roots = action.roots();
    let mut interior = vec![true; nodes.len()];
    let mut edges = Vec::new();
    let mut zero_edges = Vec::new();
    let mut out = vec![Vec::new(); nodes.len()];
    for (from, k) in offsets.iter().enumerate() {
        for alpha in &roots {
            let target: Vec<i64> = k.iter().zip(alpha.coords()).map(|(a, b)| a + b).collect();
            let Some(&to) = index.get(&target) else {
                interior[from] = false;
                continue;
            };
            let coeff = action.coefficient(alpha, &nodes[from])?;
            if coeff.is_zero() {
                zero_edges.push(ZeroEdge {
                    from,
                    to,
                    root: alpha.clone(),
                });
            } else {
                out[from].push(edges.len());
                edges.push(Edge {
                    from,
                    to,
                    root: alpha.clone(),
                    coeff,
                });
            }
        }
    }
    Ok(SupportGraph {
        mu: mu.clone(),
        bbox: bbox.clone(),
        nodes,
        index,
        interior,
        edges,
        zero_edges,
        out,
    })
}

impl SupportGraph {
    pub fn mu(&self) -> &WeightPoint {
        &self.mu
    }

    pub fn bbox(&self) -> &WeightBox {
        &self.bbox
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[WeightPoint] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &WeightPoint {
        &self.nodes[i]
    }

    pub fn index_of(&self, lambda: &WeightPoint) -> Option<usize> {
        if lambda.rank() != self.mu.rank() {
            return None;
        }
        let mut k = Vec::with_capacity(lambda.rank());
        for (x, m) in lambda.coords().iter().zip(self.mu.coords()) {
            let d = x - m;
            if !d.is_integer() {
                return None;
            }
            k.push(d.to_integer().to_i64()?);
        }
        self.index.get(&k).copied()
    }

    /// Every root neighbour of the node lies in the box.
    pub fn is_interior(&self, i: usize) -> bool {
        self.interior[i]
    }

    pub fn interior_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.interior[i])
            .collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn zero_edges(&self) -> &[ZeroEdge] {
        &self.zero_edges
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[i].iter().map(|&e| self.edges[e].to)
    }

    /// Coefficient of the edge `from -> to`, if it exists.
    pub fn edge_between(&self, from: usize, to: usize) -> Option<&Edge> {
        self.out[from]
            .iter()
            .map(|&e| &self.edges[e])
            .find(|e| e.to == to)
    }

    /// Smallest edge-closed superset of `seeds`.
    pub fn submodule_closure(&self, seeds: &[usize]) -> Closure {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seeds {
            if s < self.nodes.len() && seen.insert(s) {
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for w in self.successors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        let touches_boundary = seen.iter().any(|&v| !self.interior[v]);
        Closure {
            nodes: seen,
            touches_boundary,
        }
    }

    /// Whether a node set is closed under the edges.
    pub fn is_closed(&self, set: &BTreeSet<usize>) -> bool {
        set.iter()
            .all(|&v| self.successors(v).all(|w| set.contains(&w)))
    }

    /// Nodes in the half-space `S_{-e_i}`, i.e. with `lambda_i <= 0`.
    pub fn lower_half(&self, i: usize) -> BTreeSet<usize> {
        (0..self.nodes.len())
            .filter(|&v| self.nodes[v].coords()[i] <= Rational::zero())
            .collect()
    }

    /// For each coordinate, the closed half-space holding all given nodes;
    /// `None` when they straddle `lambda_i = 0` or the set is empty.
    pub fn half_space_signs(&self, nodes: &[usize]) -> Vec<Option<Sign>> {
        let zero = int(0);
        (0..self.mu.rank())
            .map(|i| {
                if nodes.is_empty() {
                    return None;
                }
                let vals = nodes.iter().map(|&v| &self.nodes[v].coords()[i]);
                if vals.clone().all(|x| x <= &zero) {
                    Some(Sign::Minus)
                } else if vals.clone().all(|x| x >= &zero) {
                    Some(Sign::Plus)
                } else {
                    None
                }
            })
            .collect()
    }
}
