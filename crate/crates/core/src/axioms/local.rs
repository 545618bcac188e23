//! Local queer axioms LQ2–LQ7 (LQ1 is the Stembridge check).
//!
//! Where LQ5(b) allows two configurations for the −1 arrow below a 2-string,
//! either one passes.

use crate::crystal::AbstractCrystalGraph;
use crate::index::CrystalIndex;

use super::AxiomReport;

const MINUS_ONE: CrystalIndex = CrystalIndex::OddMinus(1);

pub fn check_local_queer(g: &AbstractCrystalGraph) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.declare(&["LQ2", "LQ3", "LQ4", "LQ5", "LQ6", "LQ7"]);
    let n = g.rank();
    let name = |x: usize| g.label(x).to_string();
    let show = |o: Option<usize>| o.map_or("0".to_string(), |x| g.label(x).to_string());

    for b in 0..g.len() {
        let phi_m = g.phi(MINUS_ONE, b);
        let eps_m = g.eps(MINUS_ONE, b);
        let small = |v: Option<usize>| matches!(v, Some(0) | Some(1));
        r.check("LQ2", small(phi_m) && small(eps_m), || {
            (
                vec![name(b)],
                "phi_-1, eps_-1 in {0,1}".into(),
                format!("{phi_m:?}, {eps_m:?}"),
            )
        });
        let wt = g.weight(b);
        if wt[0] + wt[1] > 0 {
            let total = phi_m.unwrap_or(1) + eps_m.unwrap_or(1);
            r.check("LQ3", total > 0, || {
                (vec![name(b)], "phi_-1 + eps_-1 > 0".into(), total.to_string())
            });
        }

        if let Some(c) = g.f_m1(b).filter(|_| phi_m == Some(1)) {
            let phi1 = g.phi_i(1, b);
            if phi1 > 2 {
                let lhs = g.f_even(1, c);
                let rhs = g.f_even(1, b).and_then(|y| g.f_m1(y));
                let ok = lhs == rhs
                    && lhs.is_some()
                    && phi1 == g.phi_i(1, c) + 2
                    && g.eps_i(1, b) == g.eps_i(1, c);
                r.check("LQ4", ok, || {
                    (
                        vec![name(b)],
                        "f_1 f_-1 = f_-1 f_1, phi_1 drops by 2, eps_1 kept".into(),
                        format!("{} vs {}", show(lhs), show(rhs)),
                    )
                });
            } else if phi1 == 1 {
                let f1 = g.f_even(1, b);
                r.check("LQ4", f1 == Some(c), || {
                    (vec![name(b)], format!("f_1 b = {}", name(c)), show(f1))
                });
            }

            if n >= 2 {
                let (p_b, p_c) = (g.phi_i(2, b), g.phi_i(2, c));
                let (e_b, e_c) = (g.eps_i(2, b), g.eps_i(2, c));
                if p_b > 0 {
                    let lhs = g.f_even(2, c);
                    let rhs = g.f_even(2, b).and_then(|y| g.f_m1(y));
                    let ok = lhs == rhs && lhs.is_some() && p_b == p_c - 1 && e_b == e_c;
                    r.check("LQ5", ok, || {
                        (
                            vec![name(b)],
                            "f_2 f_-1 = f_-1 f_2, phi_2 grows by 1, eps_2 kept".into(),
                            format!("{} vs {}, phi {p_b}->{p_c}, eps {e_b}->{e_c}", show(lhs), show(rhs)),
                        )
                    });
                } else {
                    let ok = (p_c == 1 && e_b == e_c) || (p_c == 0 && e_b == e_c + 1);
                    r.check("LQ5", ok, || {
                        (
                            vec![name(b)],
                            "phi_2(f_-1 b) = 1 with eps_2 kept, or phi_2(f_-1 b) = 0 with eps_2 dropping by 1".into(),
                            format!("phi {p_b}->{p_c}, eps {e_b}->{e_c}"),
                        )
                    });
                }
            }

            for i in 3..=n {
                if g.phi_i(i, b) > 0 {
                    let lhs = g.f_even(i, c);
                    let rhs = g.f_even(i, b).and_then(|y| g.f_m1(y));
                    let ok = lhs == rhs
                        && lhs.is_some()
                        && g.phi_i(i, b) == g.phi_i(i, c)
                        && g.eps_i(i, b) == g.eps_i(i, c);
                    r.check("LQ6", ok, || {
                        (
                            vec![name(b)],
                            format!("f_{i} f_-1 = f_-1 f_{i}, phi_{i} and eps_{i} kept"),
                            format!("{} vs {}", show(lhs), show(rhs)),
                        )
                    });
                }
            }
        }

        if n >= 2 && g.eps_i(2, b) > 0 {
            let e2 = g.e_even(2, b).expect("eps_2 > 0");
            if g.eps_i(1, e2) > g.eps_i(1, b) {
                let top = g.e_even(1, e2).expect("eps_1 > 0");
                let (lo, hi) = (g.phi(MINUS_ONE, b), g.phi(MINUS_ONE, top));
                r.check("LQ7", lo <= hi, || {
                    (
                        vec![name(b), name(top)],
                        "phi_-1(b) <= phi_-1(e_1 e_2 b)".into(),
                        format!("{lo:?} > {hi:?}"),
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
        for (seed, n) in [("121121", 2), ("2113", 3), ("1", 1), ("43211", 3)] {
            let c = generate_component(&Word::parse(seed, n).unwrap());
            let r = check_local_queer(&c.to_abstract(&[]));
            assert!(r.passed(), "{seed}: {}", r.to_text(3));
        }
    }

    #[test]
    fn missing_minus_one_arrow_fails_lq3() {
        let elems = vec![("1".to_string(), vec![1, 0]), ("2".to_string(), vec![0, 1])];
        let mut g = AbstractCrystalGraph::new(1, LabelKind::Word, elems).unwrap();
        g.add_edge(CrystalIndex::Even(1), "1", "2").unwrap();
        assert!(check_local_queer(&g).failed_axioms().contains("LQ3"));
        g.add_edge(MINUS_ONE, "1", "2").unwrap();
        assert!(check_local_queer(&g).passed());
    }
}
