//! A crystal satisfying the local queer axioms whose component graph differs
//! from that of any queer crystal.

use crate::component::generate_component;
use crate::crystal::AbstractCrystalGraph;
use crate::index::CrystalIndex;
use crate::word::Word;

/// −1 arrows removed from the true component.
pub const REMOVED: [(&str, &str); 3] = [
    ("331131", "332131"),
    ("331132", "332132"),
    ("331231", "332231"),
];

/// −1 arrows added in their place.
pub const ADDED: [(&str, &str); 3] = [
    ("331131", "331231"),
    ("331132", "332231"),
    ("332131", "332132"),
];

/// The component of 121121 in the crystal of words of rank 2, highest weight (4,2,0).
pub fn true_counterexample_component() -> AbstractCrystalGraph {
    let seed = Word::parse("121121", 2).expect("valid seed");
    generate_component(&seed).to_abstract(&[])
}

/// The true component with the −1 arrows rewired.
pub fn build_counterexample() -> AbstractCrystalGraph {
    let mut g = true_counterexample_component();
    let m1 = CrystalIndex::OddMinus(1);
    for (s, d) in REMOVED {
        let removed = g.remove_edge(m1, s, d).expect("labels exist");
        assert!(removed, "arrow {s} -> {d} is present in the true component");
    }
    for (s, d) in ADDED {
        g.add_edge(m1, s, d).expect("labels exist");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_abstract_queer, check_local_queer, check_stembridge};
    use crate::graph::{build_g_abstract, graph_isomorphic};

    #[test]
    fn true_component_shape() {
        let g = true_counterexample_component();
        let hw = g.index_of("121121").unwrap();
        assert_eq!(g.weight(hw), &[4, 2, 0]);
        assert!(g.is_i0_highest(hw));
    }

    #[test]
    fn rewired_passes_local_axioms() {
        let g = build_counterexample();
        assert!(check_stembridge(&g).passed());
        let r = check_local_queer(&g);
        assert!(r.passed(), "{}", r.to_text(5));
        let r = check_abstract_queer(&g);
        assert!(r.passed(), "{}", r.to_text(5));
    }

    #[test]
    fn component_graph_changes() {
        let t = build_g_abstract(&true_counterexample_component());
        let c = build_g_abstract(&build_counterexample());
        assert_eq!(t.vertices.len(), 6);
        assert_eq!(c.vertices.len(), 6);
        assert!(graph_isomorphic(&t, &c).is_none());
        let v = c.vertex_index("132121").unwrap();
        assert_eq!(c.in_degree(v), 0);
    }
}
