//! The chain conditions C1′ and C2′ on the elements g_{j,k}.

use crate::crystal::AbstractCrystalGraph;

use super::connectivity::gjk_in;
use super::AxiomReport;

/// f_h⋯f₁ with f₁ applied first.
fn f_down(g: &AbstractCrystalGraph, x: usize, h: usize) -> Option<usize> {
    let product: Vec<usize> = (1..=h).rev().collect();
    g.f_chain(x, &product)
}

/// f_j⋯f₂f₋₁ with f₋₁ applied first.
fn f_down_odd(g: &AbstractCrystalGraph, x: usize, j: usize) -> Option<usize> {
    let product: Vec<usize> = (2..=j).rev().collect();
    g.f_m1(x).and_then(|y| g.f_chain(y, &product))
}

pub fn check_c1prime_c2prime(g: &AbstractCrystalGraph) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.declare(&["C1'", "C2'"]);
    let n = g.rank();
    let name = |x: usize| g.label(x).to_string();
    let show = |o: Option<usize>| o.map_or("0".to_string(), |x| g.label(x).to_string());
    let lowest = |o: Option<usize>| o.filter(|&x| g.is_i0_lowest(x));

    for v in (0..g.len()).filter(|&x| g.is_i0_lowest(x)) {
        for k in 1..=n {
            let odd: Vec<Option<usize>> = (0..=k)
                .map(|j| {
                    if j == 0 {
                        return None;
                    }
                    gjk_in(g, v, j, k).and_then(|x| f_down_odd(g, x, j))
                })
                .collect();

            for h in 0..k {
                let Some(j) = (h + 1..=k).find(|&j| lowest(odd[j].and_then(|y| f_down(g, y, h))).is_some())
                else {
                    continue;
                };
                for j2 in h + 1..=k {
                    if gjk_in(g, v, j2, k).is_none() {
                        continue;
                    }
                    r.check("C1'", odd[j2] == odd[j], || {
                        (
                            vec![name(v), format!("h={h} j={j} j'={j2} k={k}")],
                            show(odd[j]),
                            show(odd[j2]),
                        )
                    });
                }
            }

            for (j, &odd_j) in odd.iter().enumerate().skip(1) {
                let Some(x) = gjk_in(g, v, j, k) else { continue };
                if g.f_m1(x).is_none() {
                    continue;
                }
                let returns = j != k && f_down_odd(g, x, k).and_then(|y| f_down(g, y, j)) == Some(v);
                let lands = (0..j).any(|h| lowest(odd_j.and_then(|y| f_down(g, y, h))).is_some());
                r.check("C2'", returns || lands, || {
                    (
                        vec![name(v), format!("j={j} k={k}")],
                        "returns to v or lands on an I0-lowest element".into(),
                        "neither".into(),
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
    use crate::word::Word;

    #[test]
    fn small_components_pass() {
        for (seed, n) in [("121121", 2), ("2111", 3), ("112121321", 3)] {
            let c = generate_component(&Word::parse(seed, n).unwrap());
            let r = check_c1prime_c2prime(&c.to_abstract(&[]));
            assert!(r.passed(), "{seed}: {}", r.to_text(3));
        }
    }
}
