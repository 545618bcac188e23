//! Type A Stembridge axioms on the I₀ arrows.
//!
//! Notation: δ(x, j) = −εⱼ(x). Along an i-edge the difference operators take
//! "upper end minus lower end": Δᵢs(x, j) = s(eᵢx, j) − s(x, j) and
//! ∇ᵢs(x, j) = s(x, j) − s(fᵢx, j) for s ∈ {δ, φ}.
//!
//! - A1: at most one fᵢ edge out of and into each element, and fᵢ subtracts αᵢ.
//! - P1: every i-string is finite.
//! - SN: φᵢ(x) − εᵢ(x) = wtᵢ − wtᵢ₊₁.
//! - P3: Δᵢδ(x, j) + Δᵢφ(x, j) = aᵢⱼ whenever eᵢx is defined.
//! - P4: Δᵢδ(x, j) ≤ 0 and Δᵢφ(x, j) ≤ 0 for i ≠ j.
//! - P5: eᵢx, eⱼx defined and Δᵢδ(x, j) = 0 imply eᵢeⱼx = eⱼeᵢx = y with ∇ⱼφ(y, i) = 0.
//! - P6: eᵢx, eⱼx defined and Δᵢδ(x, j) = Δⱼδ(x, i) = −1 imply
//!   eᵢeⱼ²eᵢx = eⱼeᵢ²eⱼx = y with ∇ᵢφ(y, j) = ∇ⱼφ(y, i) = −1.
//! - P5′, P6′: the same with e and f, Δ and ∇ exchanged.

use crate::crystal::AbstractCrystalGraph;
use crate::index::CrystalIndex;
use crate::word::Weight;

use super::AxiomReport;

const AXIOMS: [&str; 9] = ["A1", "P1", "SN", "P3", "P4", "P5", "P6", "P5'", "P6'"];

fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

struct Stats<'a> {
    g: &'a AbstractCrystalGraph,
}

impl Stats<'_> {
    fn phi(&self, x: usize, j: usize) -> i64 {
        self.g.phi_i(j, x)
    }

    fn delta(&self, x: usize, j: usize) -> i64 {
        -self.g.eps_i(j, x)
    }

    fn up_delta(&self, x: usize, i: usize, j: usize) -> Option<i64> {
        self.g.e_even(i, x).map(|y| self.delta(y, j) - self.delta(x, j))
    }

    fn up_phi(&self, x: usize, i: usize, j: usize) -> Option<i64> {
        self.g.e_even(i, x).map(|y| self.phi(y, j) - self.phi(x, j))
    }

    fn down_phi(&self, x: usize, i: usize, j: usize) -> Option<i64> {
        self.g.f_even(i, x).map(|y| self.phi(x, j) - self.phi(y, j))
    }

    fn e(&self, x: usize, chain: &[usize]) -> Option<usize> {
        self.g.e_chain(x, chain)
    }

    fn f(&self, x: usize, chain: &[usize]) -> Option<usize> {
        self.g.f_chain(x, chain)
    }
}

pub fn check_stembridge(g: &AbstractCrystalGraph) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.declare(&AXIOMS);
    let n = g.rank();
    let name = |x: usize| g.label(x).to_string();
    let show = |o: Option<usize>| o.map_or("0".to_string(), |x| g.label(x).to_string());

    for d in g.defects() {
        if let CrystalIndex::Even(i) = d.index {
            let dir = if d.incoming { "into" } else { "out of" };
            r.check("A1", false, || {
                (
                    vec![name(d.element)],
                    format!("at most one f_{i} edge {dir} the element"),
                    "several".into(),
                )
            });
        }
    }
    for i in 1..=n {
        for &(s, t) in g.edges(CrystalIndex::Even(i)) {
            let delta: Vec<i64> = g.weight(t).iter().zip(g.weight(s)).map(|(a, b)| a - b).collect();
            r.check("A1", Weight::is_minus_root(&delta, i), || {
                (
                    vec![name(s), name(t)],
                    format!("weight change -alpha_{i}"),
                    format!("{delta:?}"),
                )
            });
        }
    }

    let st = Stats { g };
    let mut finite = vec![true; g.len()];
    for (x, fin) in finite.iter_mut().enumerate() {
        for i in 1..=n {
            let ok = g.phi(CrystalIndex::Even(i), x).is_some() && g.eps(CrystalIndex::Even(i), x).is_some();
            *fin &= ok;
            r.check("P1", ok, || (vec![name(x)], format!("finite {i}-string"), "cycle".into()));
        }
    }

    for x in 0..g.len() {
        if !finite[x] {
            continue;
        }
        for i in 1..=n {
            let lhs = g.phi_i(i, x) - g.eps_i(i, x);
            let rhs = g.weight(x)[i - 1] - g.weight(x)[i];
            r.check("SN", lhs == rhs, || {
                (vec![name(x)], format!("phi_{i} - eps_{i} = {rhs}"), lhs.to_string())
            });
        }
        for i in 1..=n {
            let Some(xi) = g.e_even(i, x) else { continue };
            if !finite[xi] {
                continue;
            }
            for j in 1..=n {
                let dd = st.up_delta(x, i, j).unwrap();
                let dp = st.up_phi(x, i, j).unwrap();
                r.check("P3", dd + dp == cartan(i, j), || {
                    (
                        vec![name(x)],
                        format!("Delta_{i} delta + Delta_{i} phi at {j} = {}", cartan(i, j)),
                        (dd + dp).to_string(),
                    )
                });
                if i != j {
                    r.check("P4", dd <= 0 && dp <= 0, || {
                        (
                            vec![name(x)],
                            format!("Delta_{i} delta, Delta_{i} phi at {j} nonpositive"),
                            format!("{dd}, {dp}"),
                        )
                    });
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                // upward relations
                if let (Some(_), Some(_)) = (g.e_even(i, x), g.e_even(j, x)) {
                    let dij = st.up_delta(x, i, j).unwrap();
                    let dji = st.up_delta(x, j, i).unwrap();
                    if dij == 0 {
                        let a = st.e(x, &[i, j]);
                        let b = st.e(x, &[j, i]);
                        let ok = a.is_some()
                            && a == b
                            && st.down_phi(a.unwrap(), j, i) == Some(0);
                        r.check("P5", ok, || {
                            (
                                vec![name(x)],
                                format!("e_{i} e_{j} x = e_{j} e_{i} x with nabla_{j} phi = 0"),
                                format!("{} vs {}", show(a), show(b)),
                            )
                        });
                    }
                    if dij == -1 && dji == -1 {
                        let a = st.e(x, &[i, j, j, i]);
                        let b = st.e(x, &[j, i, i, j]);
                        let ok = a.is_some()
                            && a == b
                            && st.down_phi(a.unwrap(), i, j) == Some(-1)
                            && st.down_phi(a.unwrap(), j, i) == Some(-1);
                        r.check("P6", ok, || {
                            (
                                vec![name(x)],
                                format!("e_{i} e_{j}^2 e_{i} x = e_{j} e_{i}^2 e_{j} x with nabla phi = -1"),
                                format!("{} vs {}", show(a), show(b)),
                            )
                        });
                    }
                }
                // downward relations
                if let (Some(_), Some(_)) = (g.f_even(i, x), g.f_even(j, x)) {
                    let dij = st.down_phi(x, i, j).unwrap();
                    let dji = st.down_phi(x, j, i).unwrap();
                    if dij == 0 {
                        let a = st.f(x, &[i, j]);
                        let b = st.f(x, &[j, i]);
                        let ok = a.is_some()
                            && a == b
                            && st.up_delta(a.unwrap(), j, i) == Some(0);
                        r.check("P5'", ok, || {
                            (
                                vec![name(x)],
                                format!("f_{i} f_{j} x = f_{j} f_{i} x with Delta_{j} delta = 0"),
                                format!("{} vs {}", show(a), show(b)),
                            )
                        });
                    }
                    if dij == -1 && dji == -1 {
                        let a = st.f(x, &[i, j, j, i]);
                        let b = st.f(x, &[j, i, i, j]);
                        let ok = a.is_some()
                            && a == b
                            && st.up_delta(a.unwrap(), i, j) == Some(-1)
                            && st.up_delta(a.unwrap(), j, i) == Some(-1);
                        r.check("P6'", ok, || {
                            (
                                vec![name(x)],
                                format!("f_{i} f_{j}^2 f_{i} x = f_{j} f_{i}^2 f_{j} x with Delta delta = -1"),
                                format!("{} vs {}", show(a), show(b)),
                            )
                        });
                    }
                }
            }
        }
    }
    r
}
