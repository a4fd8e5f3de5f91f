use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::graph::{Sign, SupportGraph};

/// Strongly connected component of the edge relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Node indices, ascending.
    pub nodes: Vec<usize>,
    pub signs: Vec<Option<Sign>>,
}

/// Components and their order: `a -> b` when `b` lies in the submodule
/// generated by `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDag {
    pub components: Vec<Component>,
    /// All strict order relations `(a, b)`.
    pub order: Vec<(usize, usize)>,
    /// Covering relations of `order`.
    pub hasse: Vec<(usize, usize)>,
    pub interior_only: bool,
}

impl ComponentDag {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Components generating no other component.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|c| self.order.iter().all(|(a, _)| a != c))
            .collect()
    }

    /// Components not generated by any other component.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|c| self.order.iter().all(|(_, b)| b != c))
            .collect()
    }

    /// The unique sink, i.e. the support of the unique minimal submodule.
    pub fn minimal(&self) -> Option<usize> {
        match self.sinks().as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// No component reaches another, so the window splits as a direct sum.
    pub fn is_antichain(&self) -> bool {
        self.order.is_empty()
    }

    pub fn component_of(&self, node: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.nodes.binary_search(&node).is_ok())
    }
}

/// Strongly connected components of the support graph and their order.
///
/// Components are computed on the whole box. With `interior_only`, each is
/// then cut down to its interior nodes and dropped if none remain; the order
/// still comes from reachability in the whole box. Components are numbered
/// by their smallest node.
pub fn composition_components(g: &SupportGraph, interior_only: bool) -> ComponentDag {
    let count = g.node_count();
    let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(count, g.edge_count());
    let idx: Vec<_> = (0..count).map(|_| pg.add_node(())).collect();
    for e in g.edges() {
        pg.add_edge(idx[e.from], idx[e.to], ());
    }
    let sccs = tarjan_scc(&pg);
    let mut scc_of = vec![0usize; count];
    for (s, comp) in sccs.iter().enumerate() {
        for v in comp {
            scc_of[v.index()] = s;
        }
    }
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); sccs.len()];
    for e in g.edges() {
        let (a, b) = (scc_of[e.from], scc_of[e.to]);
        if a != b {
            succ[a].insert(b);
        }
    }
    // kept components as (scc id, nodes)
    let mut kept: Vec<(usize, Vec<usize>)> = sccs
        .iter()
        .enumerate()
        .filter_map(|(s, comp)| {
            let mut nodes: Vec<usize> = comp
                .iter()
                .map(|v| v.index())
                .filter(|&v| !interior_only || g.is_interior(v))
                .collect();
            nodes.sort_unstable();
            (!nodes.is_empty()).then_some((s, nodes))
        })
        .collect();
    kept.sort_by_key(|(_, nodes)| nodes[0]);
    let mut kept_id = vec![None; sccs.len()];
    for (c, (s, _)) in kept.iter().enumerate() {
        kept_id[*s] = Some(c);
    }
    let mut order = Vec::new();
    for (c, (s, _)) in kept.iter().enumerate() {
        let mut seen = vec![false; sccs.len()];
        let mut stack = vec![*s];
        seen[*s] = true;
        while let Some(x) = stack.pop() {
            for &y in &succ[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                    if let Some(d) = kept_id[y] {
                        order.push((c, d));
                    }
                }
            }
        }
    }
    order.sort_unstable();
    let related: BTreeSet<(usize, usize)> = order.iter().copied().collect();
    let hasse = order
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !(0..kept.len()).any(|m| related.contains(&(a, m)) && related.contains(&(m, b)))
        })
        .collect();
    let components = kept
        .into_iter()
        .map(|(_, nodes)| Component {
            signs: g.half_space_signs(&nodes),
            nodes,
        })
        .collect();
    ComponentDag {
        components,
        order,
        hasse,
        interior_only,
    }
}
