use proptest::prelude::*;

use qcrystal::graph::{graph_isomorphic, Vertex};
use qcrystal::io::{crystal_from_json, crystal_to_json, graph_from_json, graph_to_json};
use qcrystal::odd::{e_minus_explicit, f_minus_explicit, initial_sequence, k_bracketed, has_unbracketed_descending};
use qcrystal::operators::*;
use qcrystal::{build_gtilde, generate_component, ComponentGraph, CrystalIndex, Word};

fn word_of(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=(rank as u16 + 1), 0..=max_len)
        .prop_map(move |letters| Word::new(rank, letters).unwrap())
}

fn any_word() -> impl Strategy<Value = Word> {
    (1usize..=3).prop_flat_map(|n| word_of(n, 8))
}

fn all_indices(rank: usize) -> Vec<CrystalIndex> {
    let mut v = Vec::new();
    for i in 1..=rank {
        v.push(CrystalIndex::Even(i));
        v.push(CrystalIndex::OddMinus(i));
        v.push(CrystalIndex::OddMinusPrime(i));
    }
    v
}

fn weight(b: &Word) -> Vec<i64> {
    b.weight().0.iter().map(|&c| c as i64).collect()
}

fn lowers_by_root(b: &Word, c: &Word, i: usize) -> bool {
    let (x, y) = (weight(b), weight(c));
    (0..x.len()).all(|m| {
        let want = x[m] - i64::from(m + 1 == i) + i64::from(m + 1 == i + 1);
        y[m] == want
    })
}

/// A word raised to be {1..i}-highest by e₁…eᵢ only.
fn highest_word() -> impl Strategy<Value = (Word, usize)> {
    any_word()
        .prop_flat_map(|b| {
            let n = b.rank();
            (Just(b), 1..=n)
        })
        .prop_map(|(mut b, i)| {
            while let Some(c) = (1..=i).find_map(|j| e_even(&b, j)) {
                b = c;
            }
            (b, i)
        })
}

fn renamed(g: &ComponentGraph, perm_seed: u64) -> ComponentGraph {
    let n = g.vertices.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut s = perm_seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        order.swap(i, (s >> 33) as usize % (i + 1));
    }
    let name = |v: usize| format!("v{:03}", order[v]);
    let vertices = (0..n)
        .map(|v| Vertex {
            key: name(v),
            weight: g.vertices[v].weight.clone(),
        })
        .collect();
    let edges = g.edges.iter().map(|e| (name(e.src), name(e.dst), e.label)).collect();
    ComponentGraph::from_keyed(g.rank, g.kind, vertices, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn f_and_e_are_partial_inverses(b in any_word()) {
        for idx in all_indices(b.rank()) {
            if let Some(c) = apply_f(&b, idx) {
                prop_assert_eq!(apply_e(&c, idx), Some(b.clone()), "{}", idx);
            }
            if let Some(c) = apply_e(&b, idx) {
                prop_assert_eq!(apply_f(&c, idx), Some(b.clone()), "{}", idx);
            }
        }
    }

    #[test]
    fn lowering_subtracts_the_simple_root(b in any_word()) {
        for idx in all_indices(b.rank()) {
            if let Some(c) = apply_f(&b, idx) {
                prop_assert!(lowers_by_root(&b, &c, idx.value()), "{} {} {}", idx, b, c);
            }
        }
    }

    #[test]
    fn odd_string_statistics_are_bits(b in any_word()) {
        for i in 1..=b.rank() {
            let idx = CrystalIndex::OddMinus(i);
            let (p, e) = (phi(&b, idx), eps(&b, idx));
            prop_assert!(p + e <= 1);
        }
        let w = b.weight();
        let (p, e) = (phi(&b, CrystalIndex::OddMinus(1)), eps(&b, CrystalIndex::OddMinus(1)));
        prop_assert_eq!(p + e == 1, w.get(1) + w.get(2) > 0);
    }

    #[test]
    fn reflections_invert(b in any_word()) {
        for i in 1..=b.rank() {
            prop_assert_eq!(s_reflect(&s_reflect(&b, i), i), b.clone());
            prop_assert_eq!(s_w_inverse(&s_w(&b, i), i), b.clone());
            prop_assert_eq!(weight(&s_reflect(&b, i)), {
                let mut w = weight(&b);
                w.swap(i - 1, i);
                w
            });
        }
    }

    #[test]
    fn longest_element_is_independent_of_reduced_word(b in any_word()) {
        let n = b.rank();
        let other: Vec<usize> = (1..=n).rev().flat_map(|s| s..=n).collect();
        prop_assert_eq!(other.len(), n * (n + 1) / 2);
        prop_assert_eq!(apply_reflections(&b, &other), s_w0(&b));
    }

    #[test]
    fn odd_recursion(b in any_word()) {
        for i in 1..b.rank() {
            let inner = apply_reflections(&b, &[i + 1, i]);
            let via = f_minus(&inner, i).map(|c| apply_reflections(&c, &[i, i + 1]));
            prop_assert_eq!(f_minus(&b, i + 1), via);
        }
    }

    #[test]
    fn odd_and_even_agree_on_single_strings(b in any_word()) {
        let m1 = CrystalIndex::OddMinus(1);
        if phi_even(&b, 1) == 1 && phi(&b, m1) == 1 {
            prop_assert_eq!(f_even(&b, 1), f_minus1(&b));
        }
        if b.rank() >= 2 && phi_even(&b, 2) > 0 && phi(&b, m1) > 0 {
            let a = f_minus1(&b).and_then(|c| f_even(&c, 2));
            let z = f_even(&b, 2).and_then(|c| f_minus1(&c));
            prop_assert_eq!(a, z);
            let c = f_minus1(&b).unwrap();
            prop_assert_eq!(phi_even(&b, 2), phi_even(&c, 2) - 1);
        }
    }

    #[test]
    fn raising_is_order_independent(b in any_word()) {
        let up = raise_to_hw_with(&b, SweepOrder::Ascending);
        prop_assert_eq!(&up, &raise_to_hw_with(&b, SweepOrder::Descending));
        prop_assert!(is_i0_highest(&up));
        let down = lower_to_lw_with(&b, SweepOrder::Ascending);
        prop_assert_eq!(&down, &lower_to_lw_with(&b, SweepOrder::Descending));
        prop_assert!(is_i0_lowest(&down));
    }

    #[test]
    fn explicit_lowering_keeps_highest_or_agrees_with_even((b, i) in highest_word()) {
        if phi(&b, CrystalIndex::OddMinus(i)) == 1 {
            let c = f_minus_explicit(&b, i).unwrap();
            prop_assert_eq!(Some(c.clone()), f_minus(&b, i));
            prop_assert!(f_even(&b, i) == Some(c.clone()) || is_highest_up_to(&c, i));
        }
        if eps(&b, CrystalIndex::OddMinus(i)) == 1 {
            let (c, _) = e_minus_explicit(&b, i).unwrap();
            prop_assert_eq!(Some(c), e_minus(&b, i));
        }
    }

    #[test]
    fn bracketing_descends((b, i) in highest_word()) {
        for k in 1..=i {
            let outer = k_bracketed(&b, k);
            for j in 1..k {
                let inner = k_bracketed(&b, j);
                for pos in outer.positions() {
                    let a = b.at(pos) as usize;
                    if a < j {
                        prop_assert!(inner.is_marked(pos), "{} k={} j={} pos={}", b, k, j, pos);
                    }
                }
            }
        }
    }

    #[test]
    fn unbracketed_descents_survive_lowering((b, i) in highest_word()) {
        if eps(&b, CrystalIndex::OddMinus(i)) != 1 {
            return Ok(());
        }
        let p = initial_sequence(&b, i + 1).unwrap();
        let mut letters = b.letters().to_vec();
        for j in 2..=i + 1 {
            letters[p.p(j) - 1] = j as u16 - 1;
        }
        let c = Word::new(b.rank(), letters).unwrap();
        for i2 in 1..=i {
            for k in 1..=i2 {
                if has_unbracketed_descending(&b, &k_bracketed(&b, i2), k, p.p(1)) {
                    prop_assert!(has_unbracketed_descending(&c, &k_bracketed(&c, i2), k, p.p(1)));
                }
            }
        }
    }

    #[test]
    fn component_graphs_survive_relabeling(b in (1usize..=2).prop_flat_map(|n| word_of(n, 6)), seed in any::<u64>()) {
        let g = build_gtilde(&generate_component(&b));
        let h = renamed(&g, seed);
        prop_assert!(graph_isomorphic(&g, &h).is_some());
        prop_assert!(graph_isomorphic(&g.unlabeled(), &h.unlabeled()).is_some());
    }

    #[test]
    fn json_is_a_fixed_point(b in (1usize..=3).prop_flat_map(|n| word_of(n, 5))) {
        let c = generate_component(&b);
        let g = build_gtilde(&c);
        let text = graph_to_json(&g);
        prop_assert_eq!(graph_to_json(&graph_from_json(&text).unwrap()), text);
        let x = crystal_to_json(&c.to_abstract(&[]));
        prop_assert_eq!(crystal_to_json(&crystal_from_json(&x).unwrap()), x);
    }

    #[test]
    fn highest_weights_are_strict_partitions(b in (1usize..=3).prop_flat_map(|n| word_of(n, 6))) {
        let c = generate_component(&b);
        let hws = c.highest_weight_words();
        prop_assert_eq!(hws.len(), 1);
        prop_assert!(hws[0].weight().is_strict_partition());
    }
}
