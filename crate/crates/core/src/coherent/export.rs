use std::fmt::Write as _;

use serde_json::{json, Value};

use super::components::ComponentDag;
use super::graph::SupportGraph;

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Boundary nodes are dotted; with `dashed_zeros` the
/// vanishing root steps are drawn as dashed grey arrows.
pub fn to_dot(g: &SupportGraph, dag: Option<&ComponentDag>, dashed_zeros: bool) -> String {
    let mut s = String::from("digraph support {\n  node [shape=box, fontsize=10];\n");
    for (i, lambda) in g.nodes().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", dot_escape(&lambda.to_string()))];
        if !g.is_interior(i) {
            attrs.push("style=dotted".into());
        }
        if let Some(c) = dag.and_then(|d| d.component_of(i)) {
            attrs.push(format!("group=\"c{c}\""));
        }
        let _ = writeln!(s, "  n{i} [{}];", attrs.join(", "));
    }
    for e in g.edges() {
        let _ = writeln!(
            s,
            "  n{} -> n{} [label=\"{}\"];",
            e.from,
            e.to,
            dot_escape(&e.root.to_string())
        );
    }
    if dashed_zeros {
        for e in g.zero_edges() {
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{}\", style=dashed, color=gray];",
                e.from,
                e.to,
                dot_escape(&e.root.to_string())
            );
        }
    }
    s.push_str("}\n");
    s
}

/// `{mu, box, nodes, edges, components}`; components are present when
/// `dag` is given.
pub fn to_json(g: &SupportGraph, dag: Option<&ComponentDag>) -> Value {
    let nodes: Vec<Value> = g
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, l)| json!({"id": i, "lambda": l, "interior": g.is_interior(i)}))
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| {
            json!({
                "from": e.from,
                "to": e.to,
                "root": e.root.to_string(),
                "coeff": e.coeff,
            })
        })
        .collect();
    let mut out = json!({
        "mu": g.mu(),
        "box": g.bbox().to_string(),
        "node_count": g.node_count(),
        "interior_count": g.interior_nodes().len(),
        "nodes": nodes,
        "edges": edges,
    });
    if let Some(d) = dag {
        out["components"] = components_json(d);
    }
    out
}

pub fn components_json(d: &ComponentDag) -> Value {
    let comps: Vec<Value> = d
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let signs: Vec<String> = c
                .signs
                .iter()
                .map(|s| s.map_or_else(|| "?".to_string(), |s| s.to_string()))
                .collect();
            json!({"id": i, "size": c.nodes.len(), "nodes": c.nodes, "signs": signs})
        })
        .collect();
    json!({
        "interior_only": d.interior_only,
        "count": d.len(),
        "list": comps,
        "order": d.order,
        "hasse": d.hasse,
        "sinks": d.sinks(),
        "minimal": d.minimal(),
    })
}
