mod common;

use cartanfree::classify::{canonicalize, min_submodule_support_signs};
use cartanfree::coherent::{
    composition_components, coset_test, support_graph, to_dot, to_json, CoherentAction, Sign,
    WeightBox, WeightPoint, DEFAULT_NODE_CAP,
};
use cartanfree::hfree::{make_m0, make_sl2_example, simplicity_probe, tensor_natural, twist};
use cartanfree::liealg::{build_sp2n, weyl_twist_auto, SpBasis};
use cartanfree::polyring::{rat, MultiPoly};
use cartanfree::Error;
use common::{lattice_points, weight};

#[test]
fn node_counts_match_lattice_scan() {
    for n in 1..=3 {
        let b = build_sp2n(n).unwrap();
        let action = CoherentAction::new(make_m0(n).unwrap(), &b).unwrap();
        for mu in [WeightPoint::lambda0(n), WeightPoint::zero(n)] {
            let bx = WeightBox::default_for(&mu);
            let g = support_graph(&action, &mu, &bx, DEFAULT_NODE_CAP).unwrap();
            let want = lattice_points(&b, mu.coords(), &bx.lo()[0], &bx.hi()[0]);
            assert_eq!(g.node_count(), want, "n = {n}, mu = {mu}");
        }
    }
    let b = SpBasis::sl2_fixture();
    let action = CoherentAction::new(make_sl2_example(), &b).unwrap();
    let mu = WeightPoint::zero(1);
    let bx = WeightBox::default_for(&mu);
    let g = support_graph(&action, &mu, &bx, DEFAULT_NODE_CAP).unwrap();
    assert_eq!(
        g.node_count(),
        lattice_points(&b, mu.coords(), &rat(-9, 2), &rat(9, 2))
    );
    assert_eq!(g.node_count(), 9);
}

#[test]
fn lambda0_window_n2() {
    let b = build_sp2n(2).unwrap();
    let action = CoherentAction::new(make_m0(2).unwrap(), &b).unwrap();
    let mu = WeightPoint::lambda0(2);
    let g = support_graph(&action, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
    assert_eq!(g.node_count(), 50);
    assert_eq!(g.interior_nodes().len(), 18);
    assert!(coset_test(&mu, 0) && coset_test(&mu, 1));
    assert!(!coset_test(&weight(&[(1, 3), (-1, 2)]), 0));
    // X_{2e1} from (-1/2, y) to (3/2, y) vanishes: A_{2e1}(3/2, y) = 0
    let from = g.index_of(&weight(&[(-1, 2), (-1, 2)])).unwrap();
    let to = g.index_of(&weight(&[(3, 2), (-1, 2)])).unwrap();
    assert!(g.edge_between(from, to).is_none());
    assert!(g.edge_between(to, from).is_some());
}

#[test]
fn exports_are_consistent() {
    let b = build_sp2n(2).unwrap();
    let action = CoherentAction::new(make_m0(2).unwrap(), &b).unwrap();
    let mu = WeightPoint::lambda0(2);
    let g = support_graph(&action, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
    let dag = composition_components(&g, true);
    let dot = to_dot(&g, Some(&dag), true);
    assert!(dot.starts_with("digraph support {"));
    assert_eq!(
        dot.matches(" -> ").count(),
        g.edge_count() + g.zero_edges().len()
    );
    let js = to_json(&g, Some(&dag));
    assert_eq!(js["node_count"], 50);
    assert_eq!(js["components"]["count"], 4);
    assert_eq!(js["components"]["minimal"], 0);
    assert_eq!(js["edges"].as_array().unwrap().len(), g.edge_count());
}

#[test]
fn generic_and_integral_weights() {
    let b = build_sp2n(2).unwrap();
    let action = CoherentAction::new(make_m0(2).unwrap(), &b).unwrap();
    let mu = weight(&[(1, 3), (2, 7)]);
    let g = support_graph(&action, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
    assert_eq!(composition_components(&g, true).len(), 1);
    assert!(g.zero_edges().is_empty());
    let mu = WeightPoint::zero(2);
    let g = support_graph(&action, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
    assert_eq!(composition_components(&g, true).len(), 1);
}

#[test]
fn node_cap_is_a_resource_error() {
    let b = build_sp2n(3).unwrap();
    let action = CoherentAction::new(make_m0(3).unwrap(), &b).unwrap();
    let mu = WeightPoint::lambda0(3);
    let err = support_graph(&action, &mu, &WeightBox::default_for(&mu), 100).unwrap_err();
    assert!(matches!(err, Error::Resource(_)), "{err}");
}

#[test]
fn small_box_is_refused_by_classification() {
    let b = build_sp2n(2).unwrap();
    let m0 = make_m0(2).unwrap();
    let tiny = WeightBox::cube(2, rat(-3, 2), rat(3, 2)).unwrap();
    let err = min_submodule_support_signs(&m0, &b, Some(&tiny), DEFAULT_NODE_CAP).unwrap_err();
    assert!(matches!(err, Error::Resource(_)), "{err}");
}

#[test]
fn double_weyl_twist_n3() {
    let b = build_sp2n(3).unwrap();
    let m0 = make_m0(3).unwrap();
    let mut m = twist(&m0, &b, &weyl_twist_auto(&b, 1).unwrap()).unwrap();
    m = twist(&m, &b, &weyl_twist_auto(&b, 3).unwrap()).unwrap();
    let signs = min_submodule_support_signs(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
    assert_eq!(signs, vec![Sign::Plus, Sign::Minus, Sign::Plus]);
    let res = canonicalize(&m, &b, None, DEFAULT_NODE_CAP).unwrap();
    assert_eq!(res.omega, vec![1, 3]);
    assert!(res.verdict);
    assert_eq!(res.replay(&m, &b).unwrap(), m0);
}

#[test]
fn simplicity_probe_examples() {
    let m0 = make_m0(2).unwrap();
    let h1 = MultiPoly::var(2, 0);
    let h2 = MultiPoly::var(2, 1);
    assert_eq!(simplicity_probe(&m0, &h1, 5).unwrap(), Some(1));
    let f = &h1.pow(2) * &h2;
    assert_eq!(simplicity_probe(&m0, &f, 5).unwrap(), Some(3));
    assert_eq!(simplicity_probe(&m0, &f, 2).unwrap(), None);
    assert_eq!(
        simplicity_probe(&m0, &MultiPoly::one(2), 0).unwrap(),
        Some(0)
    );
}

#[test]
fn tensor_support_is_connected() {
    // the off-diagonal blocks of the tensor table are constant, so every
    // weight space reaches every other one at lambda_0
    let b = build_sp2n(2).unwrap();
    let m = tensor_natural(&make_m0(2).unwrap(), &b).unwrap();
    let action = CoherentAction::new(m, &b).unwrap();
    let mu = WeightPoint::lambda0(2);
    let g = support_graph(&action, &mu, &WeightBox::default_for(&mu), DEFAULT_NODE_CAP).unwrap();
    let dag = composition_components(&g, true);
    assert_eq!(dag.len(), 1);
    assert_eq!(dag.components[0].signs, vec![None, None]);
}
