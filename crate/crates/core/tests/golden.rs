use std::path::PathBuf;

use qcrystal::axioms::build_counterexample;
use qcrystal::graph::build_g_abstract;
use qcrystal::io::{crystal_from_json, crystal_to_json, graph_from_json, graph_to_json};
use qcrystal::{build_g, build_gbar, build_gtilde, generate_component, ComponentGraph, Word};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn canonical_fixture(name: &str) -> String {
    graph_to_json(&graph_from_json(&fixture(name)).unwrap())
}

fn graphs(seed: &str, n: usize) -> (ComponentGraph, ComponentGraph, ComponentGraph) {
    let c = generate_component(&Word::parse(seed, n).unwrap());
    (build_g(&c), build_gbar(&c), build_gtilde(&c))
}

#[test]
fn letters_crystal() {
    let c = generate_component(&Word::parse("1", 3).unwrap());
    let ours = crystal_to_json(&c.to_abstract(&[]));
    let want = crystal_to_json(&crystal_from_json(&fixture("queer_letters_rank3.json")).unwrap());
    assert_eq!(ours, want);
}

#[test]
fn queer12_graphs() {
    let (g, gbar, _) = graphs("121121", 2);
    assert_eq!(graph_to_json(&gbar), canonical_fixture("queer12_gbar.json"));
    assert_eq!(graph_to_json(&g), canonical_fixture("queer12_g.json"));
}

#[test]
fn queer12_counterexample_graph() {
    let g = build_g_abstract(&build_counterexample());
    assert_eq!(graph_to_json(&g), canonical_fixture("queer12_counterexample_g.json"));
}

#[test]
fn nine_letter_graphs() {
    let (g, gbar, gtilde) = graphs("112121321", 3);
    assert_eq!(graph_to_json(&g), canonical_fixture("gc_g.json"));
    assert_eq!(graph_to_json(&gbar), canonical_fixture("gc_gbar.json"));
    assert_eq!(graph_to_json(&gtilde), canonical_fixture("gc_gtilde.json"));
}

#[test]
fn four_letter_chain() {
    let (g, _, _) = graphs("2111", 3);
    assert_eq!(graph_to_json(&g), canonical_fixture("chain2111_g.json"));
}

#[test]
fn fixtures_are_canonical() {
    for name in [
        "queer12_gbar.json",
        "queer12_g.json",
        "queer12_counterexample_g.json",
        "gc_g.json",
        "gc_gbar.json",
        "gc_gtilde.json",
        "chain2111_g.json",
    ] {
        assert_eq!(fixture(name), canonical_fixture(name), "{name}");
    }
}
