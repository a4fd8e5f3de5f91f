use std::fmt::Write as _;

use cartanfree::classify::canonicalize;
use cartanfree::coherent::{
    composition_components, coset_test, node_cap_from_env, semisimplify, support_graph, to_dot,
    to_json, trace_polynomial, CoherentAction, WeightBox, WeightPoint,
};
use cartanfree::hfree::{tensor_natural, verify_relations, HFreeModule};
use cartanfree::liealg::{casimir, SpBasis, UElement};
use cartanfree::{Error, Result};
use serde_json::{json, Value};

use crate::args::{ClassifyArgs, Command, CommonArgs, DumpArgs, Format, SupportArgs, TraceArgs};
use crate::source::{load, Loaded};

/// What to print and the exit code on success.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Input(
            "DOT output is only available for `support`".into(),
        ));
    }
    Ok(())
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Support(a) => support(a),
        Command::Classify(a) => classify(a),
        Command::Trace(a) => trace(a),
        Command::Twist(a) => dump_module(a, |l| Ok(l.module.clone())),
        Command::Tensor(a) => dump_module(a, |l| tensor_natural(&l.module, &l.basis)),
        Command::Dump(a) => dump(a),
    }
}

fn verify(args: &CommonArgs) -> Result<Output> {
    no_dot(args.format)?;
    let l = load(args)?;
    let report = verify_relations(&l.module, &l.basis)?;
    let code = if report.passed() { 0 } else { 1 };
    let text = match args.format {
        Format::Json => {
            let mut v = report.to_json();
            v["twists"] = json!(l.twists);
            pretty(&v)
        }
        _ => {
            let mut s = format!(
                "pairs checked: {}\nfailures: {}\n",
                report.checks.len(),
                report.failure_count()
            );
            for c in report.failures() {
                let residual = c
                    .residual
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default();
                let _ = writeln!(s, "  [{}, {}]: residual {residual}", c.labels.0, c.labels.1);
            }
            s.push_str(if report.passed() { "ok\n" } else { "FAILED\n" });
            s
        }
    };
    Ok(Output { text, code })
}

fn node_cap(arg: Option<usize>) -> usize {
    arg.unwrap_or_else(node_cap_from_env)
}

fn support(args: &SupportArgs) -> Result<Output> {
    let l = load(&args.common)?;
    let n = l.module.n();
    let mu = match &args.mu {
        Some(s) => WeightPoint::parse(s)?,
        None => WeightPoint::lambda0(n),
    };
    if mu.rank() != n {
        return Err(Error::Input(format!(
            "weight has {} coordinates, expected {n}",
            mu.rank()
        )));
    }
    let bbox = match &args.bbox {
        Some(s) => WeightBox::parse(s, n)?,
        None => WeightBox::default_for(&mu),
    };
    let mut action = CoherentAction::new(l.module.clone(), &l.basis)?;
    if args.semisimplify {
        action = semisimplify(&action)?;
    }
    let g = support_graph(&action, &mu, &bbox, node_cap(args.node_cap))?;
    let dag = composition_components(&g, !args.all_nodes);
    let cosets: Vec<bool> = (0..n).map(|i| coset_test(&mu, i)).collect();
    let half_closed: Vec<Option<bool>> = (0..n)
        .map(|i| cosets[i].then(|| g.is_closed(&g.lower_half(i))))
        .collect();
    let boundary = g.node_count() - g.interior_nodes().len();
    let text = match args.common.format {
        Format::Dot => to_dot(&g, Some(&dag), args.dashed),
        Format::Json => {
            let mut v = to_json(&g, Some(&dag));
            v["semisimplified"] = json!(args.semisimplify);
            v["coset_test"] = json!(cosets);
            v["lower_half_closed"] = json!(half_closed);
            v["boundary_nodes"] = json!(boundary);
            v["twists"] = json!(l.twists);
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "mu: {mu}");
            let _ = writeln!(s, "box: {bbox}");
            let _ = writeln!(
                s,
                "nodes: {} ({} interior), edges: {}",
                g.node_count(),
                g.interior_nodes().len(),
                g.edge_count()
            );
            let _ = writeln!(s, "components: {}", dag.len());
            for (i, c) in dag.components.iter().enumerate() {
                let signs: Vec<String> = c
                    .signs
                    .iter()
                    .map(|x| x.map_or_else(|| "?".into(), |x| x.to_string()))
                    .collect();
                let _ = writeln!(
                    s,
                    "  c{i}: {} nodes, signs ({})",
                    c.nodes.len(),
                    signs.join(",")
                );
            }
            let hasse: Vec<String> = dag
                .hasse
                .iter()
                .map(|(a, b)| format!("c{a} -> c{b}"))
                .collect();
            let _ = writeln!(
                s,
                "order: {}",
                if hasse.is_empty() {
                    "none".into()
                } else {
                    hasse.join(", ")
                }
            );
            match dag.minimal() {
                Some(m) => {
                    let _ = writeln!(s, "minimal: c{m}");
                }
                None => s.push_str("minimal: not unique\n"),
            }
            for (i, c) in half_closed.iter().enumerate() {
                if let Some(closed) = c {
                    let _ = writeln!(s, "lambda_{} <= 0 closed: {closed}", i + 1);
                }
            }
            if boundary > 0 && !args.all_nodes {
                let _ = writeln!(
                    s,
                    "note: {boundary} boundary nodes excluded from components"
                );
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn classify(args: &ClassifyArgs) -> Result<Output> {
    no_dot(args.common.format)?;
    let l = load(&args.common)?;
    let bbox = args
        .bbox
        .as_deref()
        .map(|s| WeightBox::parse(s, l.module.n()))
        .transpose()?;
    let r = canonicalize(&l.module, &l.basis, bbox.as_ref(), node_cap(args.node_cap))?;
    let code = if r.verdict { 0 } else { 1 };
    let text = match args.common.format {
        Format::Json => {
            let mut v = r.to_json();
            v["input_twists"] = json!(l.twists);
            pretty(&v)
        }
        _ => {
            let mut s = String::new();
            let signs: Vec<String> = r.signs.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "signs: ({})", signs.join(","));
            let _ = writeln!(s, "omega: {:?}", r.omega);
            if let Some(c) = &r.certificate {
                for (root, v) in &c.scalars {
                    let _ = writeln!(
                        s,
                        "  c({root}) = {}",
                        cartanfree::polyring::format_rational(v)
                    );
                }
                if let Some(w) = &c.witness {
                    let w: Vec<String> = w
                        .iter()
                        .map(cartanfree::polyring::format_rational)
                        .collect();
                    let _ = writeln!(s, "witness: ({})", w.join(","));
                }
            }
            if let Some(why) = &r.reason {
                let _ = writeln!(s, "reason: {why}");
            }
            let _ = writeln!(s, "verdict: {}", r.verdict);
            s
        }
    };
    Ok(Output { text, code })
}

fn parse_word(basis: &SpBasis, word: &str) -> Result<UElement> {
    let idx = word
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| basis.index_of_label(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(UElement::word(idx))
}

fn trace(args: &TraceArgs) -> Result<Output> {
    no_dot(args.common.format)?;
    let l = load(&args.common)?;
    let u = if args.casimir {
        casimir(&l.basis)?.to_uelement()
    } else {
        parse_word(&l.basis, args.word.as_deref().unwrap_or(""))?
    };
    let p = trace_polynomial(&l.module, &l.basis, &u)?;
    let text = match args.common.format {
        Format::Json => pretty(&json!({
            "element": u.display(&l.basis),
            "trace": p.to_string(),
            "constant": p.is_constant(),
        })),
        _ => p.to_string(),
    };
    Ok(Output::ok(text))
}

fn module_text(m: &HFreeModule, basis: &SpBasis) -> String {
    let mut s = format!("n = {}, d = {}\n", m.n(), m.d());
    for el in basis.elements() {
        if let Some(root) = el.root() {
            let a = m.action(root).expect("table checked against basis");
            let _ = writeln!(s, "{}: {}", el.label, a);
        }
    }
    s
}

fn dump_module(args: &CommonArgs, f: impl Fn(&Loaded) -> Result<HFreeModule>) -> Result<Output> {
    no_dot(args.format)?;
    let l = load(args)?;
    let m = f(&l)?;
    Ok(Output::ok(match args.format {
        Format::Json => m.to_json_string(),
        _ => module_text(&m, &l.basis),
    }))
}

fn dump(args: &DumpArgs) -> Result<Output> {
    if !args.basis {
        return dump_module(&args.common, |l| Ok(l.module.clone()));
    }
    no_dot(args.common.format)?;
    let l = load(&args.common)?;
    Ok(Output::ok(match args.common.format {
        Format::Json => pretty(&l.basis.to_json()),
        _ => {
            let mut s = String::new();
            for el in l.basis.elements() {
                let _ = writeln!(s, "{}:\n{}", el.label, el.matrix);
            }
            s
        }
    }))
}
