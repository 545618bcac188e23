//! Abstract queer crystal axioms Q1–Q4.

use crate::crystal::AbstractCrystalGraph;
use crate::index::CrystalIndex;
use crate::word::Weight;

use super::AxiomReport;

pub fn check_abstract_queer(g: &AbstractCrystalGraph) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.declare(&["Q1", "Q2", "Q3", "Q4"]);
    let n = g.rank();
    let name = |x: usize| g.label(x).to_string();
    let show = |o: Option<usize>| o.map_or("0".to_string(), |x| g.label(x).to_string());

    for x in 0..g.len() {
        let wt = g.weight(x);
        r.check("Q1", wt.iter().all(|&c| c >= 0), || {
            (vec![name(x)], "nonnegative weight".into(), format!("{wt:?}"))
        });
    }
    for &(s, t) in g.edges(CrystalIndex::OddMinus(1)) {
        let delta: Vec<i64> = g.weight(t).iter().zip(g.weight(s)).map(|(a, b)| a - b).collect();
        r.check("Q2", Weight::is_minus_root(&delta, 1), || {
            (vec![name(s), name(t)], "weight change -alpha_1".into(), format!("{delta:?}"))
        });
    }
    for d in g.defects() {
        if d.index == CrystalIndex::OddMinus(1) {
            let dir = if d.incoming { "into" } else { "out of" };
            r.check("Q3", false, || {
                (
                    vec![name(d.element)],
                    format!("at most one f_-1 edge {dir} the element"),
                    "several".into(),
                )
            });
        }
    }
    r.check("Q3", true, || unreachable!());

    for b in 0..g.len() {
        for i in 3..=n {
            let pairs = [
                ("f_-1 f_i", g.f_even(i, b).and_then(|y| g.f_m1(y)), g.f_m1(b).and_then(|y| g.f_even(i, y))),
                ("e_-1 e_i", g.e_even(i, b).and_then(|y| g.e_m1(y)), g.e_m1(b).and_then(|y| g.e_even(i, y))),
                ("f_-1 e_i", g.e_even(i, b).and_then(|y| g.f_m1(y)), g.f_m1(b).and_then(|y| g.e_even(i, y))),
                ("e_-1 f_i", g.f_even(i, b).and_then(|y| g.e_m1(y)), g.e_m1(b).and_then(|y| g.f_even(i, y))),
            ];
            for (what, lhs, rhs) in pairs {
                r.check("Q4", lhs == rhs, || {
                    (
                        vec![name(b)],
                        format!("{what} commute for i={i}"),
                        format!("{} vs {}", show(lhs), show(rhs)),
                    )
                });
            }
            if let Some(c) = g.e_m1(b) {
                let ok = g.eps_i(i, c) == g.eps_i(i, b) && g.phi_i(i, c) == g.phi_i(i, b);
                r.check("Q4", ok, || {
                    (
                        vec![name(b)],
                        format!("eps_{i}, phi_{i} preserved by e_-1"),
                        format!(
                            "({}, {}) -> ({}, {})",
                            g.eps_i(i, b),
                            g.phi_i(i, b),
                            g.eps_i(i, c),
                            g.phi_i(i, c)
                        ),
                    )
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::generate_component;
    use crate::crystal::LabelKind;
    use crate::word::Word;

    #[test]
    fn words_pass() {
        let c = generate_component(&Word::parse("31421", 4).unwrap());
        let r = check_abstract_queer(&c.to_abstract(&[]));
        assert!(r.passed(), "{}", r.to_text(3));
        assert!(r.checks["Q4"] > 0);
    }

    #[test]
    fn wrong_root_fails_q2_only() {
        let elems = vec![
            ("a".to_string(), vec![0, 1, 0]),
            ("b".to_string(), vec![0, 0, 1]),
        ];
        let mut g = AbstractCrystalGraph::new(2, LabelKind::Id, elems).unwrap();
        g.add_edge(CrystalIndex::OddMinus(1), "a", "b").unwrap();
        let r = check_abstract_queer(&g);
        assert_eq!(r.failed_axioms().into_iter().collect::<Vec<_>>(), vec!["Q2"]);
    }
}
