//! The elements g_{j,k} and the connectivity axioms C0–C2.

use std::collections::HashMap;

use crate::crystal::AbstractCrystalGraph;
use crate::error::{Error, Result};
use crate::graph::ComponentGraph;
use crate::index::CrystalIndex;
use crate::operators::{e_chain, is_i0_lowest, phi_even};
use crate::word::Word;

use super::AxiomReport;

/// g_{j,k} = (e₁⋯e_j)(e₁⋯e_k) v for an I₀-lowest v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GjkElement {
    pub j: usize,
    pub k: usize,
    pub v: Word,
    pub word: Option<Word>,
}

fn up_to(m: usize) -> Vec<usize> {
    (1..=m).collect()
}

pub fn gjk(v: &Word, j: usize, k: usize) -> Result<GjkElement> {
    if !is_i0_lowest(v) {
        return Err(Error::Precondition(format!("{v} is not I0-lowest")));
    }
    if j == 0 || j > k || k > v.rank() {
        return Err(Error::Precondition(format!(
            "need 1 <= j <= k <= n, got j={j}, k={k}"
        )));
    }
    let word = e_chain(v, &up_to(k)).and_then(|x| e_chain(&x, &up_to(j)));
    Ok(GjkElement {
        j,
        k,
        v: v.clone(),
        word,
    })
}

/// φ₁ = 2 and φᵢ = 0 for the other even indices.
pub fn almost_lowest(b: &Word) -> bool {
    phi_even(b, 1) == 2 && (2..=b.rank()).all(|i| phi_even(b, i) == 0)
}

/// g_{j,k} inside an explicit crystal graph.
pub fn gjk_in(g: &AbstractCrystalGraph, v: usize, j: usize, k: usize) -> Option<usize> {
    g.e_chain(v, &up_to(k)).and_then(|x| g.e_chain(x, &up_to(j)))
}

/// An edge u → u′ of G moving one box from row n+1−k down to row n+1−h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMove {
    pub h: usize,
    pub k: usize,
    pub target: String,
}

/// Reads (h, k) off the weights at the ends of an edge of G.
pub fn box_move(rank: usize, from: &[i64], to: &[i64]) -> Option<(usize, usize)> {
    let delta: Vec<i64> = to.iter().zip(from).map(|(a, b)| a - b).collect();
    let src = delta.iter().position(|&d| d == -1)?;
    let dst = delta.iter().position(|&d| d == 1)?;
    let others_zero = delta
        .iter()
        .enumerate()
        .all(|(idx, &d)| idx == src || idx == dst || d == 0);
    let (src_row, dst_row) = (src + 1, dst + 1);
    if !others_zero || src_row >= dst_row || src_row > rank {
        return None;
    }
    Some((rank + 1 - dst_row, rank + 1 - src_row))
}

pub(crate) struct ClassInfo {
    pub key: String,
    pub lw: usize,
}

/// Per I₀-class: the key used by G (the I₀-highest label), the highest and
/// lowest elements. Classes without a unique highest and lowest element are
/// reported under CLASS.
pub(crate) fn class_info(g: &AbstractCrystalGraph, report: &mut AxiomReport) -> Vec<ClassInfo> {
    let mut out = Vec::new();
    for members in g.i0_classes() {
        let hws: Vec<usize> = members.iter().copied().filter(|&x| g.is_i0_highest(x)).collect();
        let lws: Vec<usize> = members.iter().copied().filter(|&x| g.is_i0_lowest(x)).collect();
        let ok = hws.len() == 1 && lws.len() == 1;
        report.check("CLASS", ok, || {
            (
                members.iter().take(3).map(|&x| g.label(x).to_string()).collect(),
                "one I0-highest and one I0-lowest element".into(),
                format!("{} highest, {} lowest", hws.len(), lws.len()),
            )
        });
        if ok {
            out.push(ClassInfo {
                key: g.label(hws[0]).to_string(),
                lw: lws[0],
            });
        }
    }
    out
}

pub fn check_connectivity(g: &AbstractCrystalGraph, cg: &ComponentGraph) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.declare(&["BOX", "C0", "C1", "C2"]);
    let n = g.rank();
    let minus_one = CrystalIndex::OddMinus(1);
    let name = |x: usize| g.label(x).to_string();
    let show = |o: Option<usize>| o.map_or("0".to_string(), |x| g.label(x).to_string());
    let classes = class_info(g, &mut r);
    let by_key: HashMap<&str, &ClassInfo> = classes.iter().map(|c| (c.key.as_str(), c)).collect();

    for class in &classes {
        let v = class.lw;
        let Some(u) = cg.vertex_index(&class.key) else {
            r.check("BOX", false, || {
                (vec![class.key.clone()], "class is a vertex of G".into(), "missing".into())
            });
            continue;
        };
        let mut moves = Vec::new();
        for e in cg.edges.iter().filter(|e| e.src == u) {
            let target = cg.key(e.dst).to_string();
            let bm = box_move(n, &cg.vertices[u].weight, &cg.vertices[e.dst].weight);
            r.check("BOX", bm.is_some(), || {
                (
                    vec![class.key.clone(), target.clone()],
                    "weights differ by one box moved down".into(),
                    format!("{:?} -> {:?}", cg.vertices[u].weight, cg.vertices[e.dst].weight),
                )
            });
            if let Some((h, k)) = bm {
                moves.push(BoxMove { h, k, target });
            }
        }

        for k in 1..=n {
            let Some(top) = g.e_chain(v, &up_to(k)) else { continue };
            for j in 1..=k {
                let Some(x) = gjk_in(g, v, j, k) else { continue };
                let p = g.phi(minus_one, top);
                let ok = g.phi(minus_one, x) != Some(0) || p == Some(0);
                r.check("C0", ok, || {
                    (
                        vec![name(x), name(top)],
                        format!("phi_-1(e_1..e_{k} v) = 0 since phi_-1(g_{j},{k}) = 0"),
                        format!("{p:?}"),
                    )
                });
            }
        }

        for m in &moves {
            let Some(target) = by_key.get(m.target.as_str()) else { continue };
            let v2 = target.lw;
            for j in m.h + 1..=m.k {
                let Some(x) = gjk_in(g, v, j, m.k) else { continue };
                let found = g.f_m1(x);
                let expected = g
                    .e_chain(v2, &up_to(m.h))
                    .and_then(|y| g.e_chain(y, &(2..=j).collect::<Vec<_>>()));
                r.check("C1", found.is_some() && found == expected, || {
                    (
                        vec![name(x), m.target.clone()],
                        format!("f_-1 g_{j},{} = (e_2..e_{j})(e_1..e_{}) v' = {}", m.k, m.h, show(expected)),
                        show(found),
                    )
                });
            }
        }

        for k in 1..=n {
            let with_k: Vec<&BoxMove> = moves.iter().filter(|m| m.k == k).collect();
            let js: Vec<usize> = if with_k.is_empty() {
                (1..=k).collect()
            } else {
                let mut js: Vec<usize> = with_k.iter().flat_map(|m| 1..=m.h).collect();
                js.sort_unstable();
                js.dedup();
                js
            };
            for j in js {
                let Some(x) = gjk_in(g, v, j, k) else { continue };
                let Some(found) = g.f_m1(x) else { continue };
                let expected = g
                    .e_chain(v, &up_to(j))
                    .and_then(|y| g.e_chain(y, &(2..=k).collect::<Vec<_>>()));
                r.check("C2", expected == Some(found), || {
                    (
                        vec![name(x)],
                        format!("f_-1 g_{j},{k} = (e_2..e_{k})(e_1..e_{j}) v = {}", show(expected)),
                        name(found),
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
    use crate::graph::build_g;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn gjk_examples() {
        let v = w("4344", 3);
        assert_eq!(gjk(&v, 2, 3).unwrap().word, Some(w("4114", 3)));
        assert_eq!(gjk(&v, 3, 3).unwrap().word, Some(w("4113", 3)));
        assert!(almost_lowest(&w("4114", 3)));
        assert!(gjk(&w("2111", 3), 1, 1).is_err());
        assert!(gjk(&v, 3, 2).is_err());
    }

    #[test]
    fn box_moves() {
        // row 2 -> row 3 in rank 2: k = 1, h = 0
        assert_eq!(box_move(2, &[2, 1, 0], &[2, 0, 1]), Some((0, 1)));
        // row 1 -> row 2: k = 2, h = 1
        assert_eq!(box_move(2, &[3, 1, 0], &[2, 2, 0]), Some((1, 2)));
        assert_eq!(box_move(2, &[2, 1, 0], &[3, 0, 0]), None);
        assert_eq!(box_move(2, &[2, 1, 0], &[1, 0, 2]), None);
    }

    #[test]
    fn small_components_pass() {
        for (seed, n) in [("121121", 2), ("2111", 3), ("211", 2)] {
            let c = generate_component(&w(seed, n));
            let r = check_connectivity(&c.to_abstract(&[]), &build_g(&c));
            assert!(r.passed(), "{seed}: {}", r.to_text(3));
        }
    }
}
