use qcrystal::axioms::{
    build_counterexample, check_c1prime_c2prime, check_connectivity, true_counterexample_component,
    verify_graph, Family,
};
use qcrystal::graph::{build_g_abstract, graph_isomorphic};
use qcrystal::operators::{e_chain, f_chain, f_minus1, is_i0_lowest, phi};
use qcrystal::sweep::{all_words, components_of_length};
use qcrystal::{build_g, generate_component, ComponentGraph, CrystalIndex, EdgeLabel, Word};

#[test]
fn true_component_satisfies_everything() {
    let g = true_counterexample_component();
    let r = verify_graph(&g, &Family::ALL);
    assert!(r.passed(), "{}", r.to_text(5));
    let d = generate_component(&Word::parse("121121", 2).unwrap());
    let witness = graph_isomorphic(&build_g_abstract(&g), &build_g(&d)).unwrap();
    assert_eq!(witness, (0..witness.len()).collect::<Vec<_>>());
}

#[test]
fn rewired_crystal_fails_only_the_graph_condition() {
    let g = build_counterexample();
    let r = verify_graph(
        &g,
        &[Family::Local, Family::Queer, Family::Connectivity, Family::Appendix],
    );
    assert!(r.passed(), "{}", r.to_text(5));
    let iso = verify_graph(&g, &[Family::GraphIso]);
    assert_eq!(iso.failed_axioms().into_iter().collect::<Vec<_>>(), vec!["GISO"]);
}

fn with_edges(g: &ComponentGraph, edges: Vec<(String, String, EdgeLabel)>) -> ComponentGraph {
    ComponentGraph::from_keyed(g.rank, g.kind, g.vertices.clone(), edges).unwrap()
}

#[test]
fn non_box_edge_is_reported() {
    let c = generate_component(&Word::parse("112121321", 3).unwrap());
    let cg = build_g(&c);
    let mut edges = cg.keyed_edges();
    edges.push(("112121321".into(), "434121321".into(), EdgeLabel::None));
    let r = check_connectivity(&c.to_abstract(&[]), &with_edges(&cg, edges));
    assert_eq!(r.failed_axioms().into_iter().collect::<Vec<_>>(), vec!["BOX"]);
}

#[test]
fn missing_edge_breaks_the_pinning() {
    let c = generate_component(&Word::parse("121121", 2).unwrap());
    let cg = build_g(&c);
    let edges = cg
        .keyed_edges()
        .into_iter()
        .filter(|(s, d, _)| !(s == "121121" && d == "221121"))
        .collect();
    let r = check_connectivity(&c.to_abstract(&[]), &with_edges(&cg, edges));
    assert!(!r.passed());
    assert!(r.failed_axioms().iter().all(|a| a == "C2"), "{}", r.to_text(5));
}

#[test]
fn odd_string_of_gjk_matches_its_top() {
    let m1 = CrystalIndex::OddMinus(1);
    let mut cases = 0;
    for n in 1..=3 {
        for len in 1..=6 {
            for v in all_words(n, len).into_iter().filter(is_i0_lowest) {
                for k in 1..=n {
                    let Some(top) = e_chain(&v, &(1..=k).collect::<Vec<_>>()) else { continue };
                    for j in 1..=k {
                        let Some(g) = e_chain(&top, &(1..=j).collect::<Vec<_>>()) else { continue };
                        cases += 1;
                        assert_eq!(phi(&g, m1) == 0, phi(&top, m1) == 0, "{v} j={j} k={k}");
                    }
                }
            }
        }
    }
    assert!(cases > 100);
}

/// Instances where the odd chain from g_{j,k} does not return to v but
/// lands on a different I₀-lowest element.
#[test]
fn second_chain_condition_has_both_branches() {
    let mut returns = 0;
    let mut elsewhere = 0;
    let down = |x: &Word, h: usize| f_chain(x, &(1..=h).rev().collect::<Vec<_>>());
    let down_odd = |x: &Word, j: usize| f_minus1(x).and_then(|y| f_chain(&y, &(2..=j).rev().collect::<Vec<_>>()));
    for len in 1..=6 {
        for comp in components_of_length(3, len) {
            for v in comp.words().iter().filter(|w| is_i0_lowest(w)) {
                for k in 1..=3 {
                    for j in 1..=k {
                        let Some(g) = e_chain(v, &(1..=k).collect::<Vec<_>>())
                            .and_then(|x| e_chain(&x, &(1..=j).collect::<Vec<_>>()))
                        else {
                            continue;
                        };
                        if f_minus1(&g).is_none() {
                            continue;
                        }
                        if j != k && down_odd(&g, k).and_then(|y| down(&y, j)).as_ref() == Some(v) {
                            returns += 1;
                            continue;
                        }
                        let landing = (0..j)
                            .filter_map(|h| down_odd(&g, j).and_then(|y| down(&y, h)))
                            .find(is_i0_lowest);
                        let landing = landing.expect("one of the two branches holds");
                        if &landing != v {
                            elsewhere += 1;
                        }
                    }
                }
            }
            assert!(check_c1prime_c2prime(&comp.to_abstract(&[])).passed());
        }
    }
    assert!(returns > 0 && elsewhere > 0, "returns {returns}, elsewhere {elsewhere}");
}
