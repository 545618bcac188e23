//! Component graphs G, Ḡ and G̃ on the type-A classes of a queer component.

mod dot;
mod iso;

pub use dot::{parse_dot, to_dot};
pub use iso::graph_isomorphic;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::component::QueerComponent;
use crate::crystal::AbstractCrystalGraph;
use crate::error::{Error, Result};
use crate::operators::{e_minus, f_even, f_minus, f_minus1, is_highest_up_to, raise_to_hw, OpResult};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    G,
    Gbar,
    Gtilde,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::G => "G",
            GraphKind::Gbar => "Gbar",
            GraphKind::Gtilde => "Gtilde",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "G" => Ok(GraphKind::G),
            "Gbar" => Ok(GraphKind::Gbar),
            "Gtilde" => Ok(GraphKind::Gtilde),
            other => Err(Error::Schema(format!("unknown graph kind {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    None,
    /// (−i, h)
    Pair(usize, usize),
    /// −i
    Minus(usize),
}

impl EdgeLabel {
    pub fn text(self) -> Option<String> {
        match self {
            EdgeLabel::None => None,
            EdgeLabel::Pair(i, h) => Some(format!("(-{i},{h})")),
            EdgeLabel::Minus(i) => Some(format!("-{i}")),
        }
    }

    pub fn parse(text: Option<&str>) -> Result<Self> {
        let Some(t) = text else {
            return Ok(EdgeLabel::None);
        };
        let bad = || Error::Schema(format!("bad edge label {t:?}"));
        let t = t.trim();
        if let Some(inner) = t.strip_prefix("(-").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let i = a.trim().parse().map_err(|_| bad())?;
            let h = b.trim().parse().map_err(|_| bad())?;
            return Ok(EdgeLabel::Pair(i, h));
        }
        if let Some(rest) = t.strip_prefix('-') {
            return Ok(EdgeLabel::Minus(rest.parse().map_err(|_| bad())?));
        }
        Err(bad())
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub key: String,
    pub weight: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: EdgeLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGraph {
    pub rank: usize,
    pub kind: GraphKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl ComponentGraph {
    /// Builds a graph from keyed vertices and keyed edges, in canonical order
    /// (vertices by key, edges by source key, target key, label).
    pub fn from_keyed(
        rank: usize,
        kind: GraphKind,
        vertices: Vec<Vertex>,
        edges: Vec<(String, String, EdgeLabel)>,
    ) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort_by(|a, b| a.key.cmp(&b.key));
        if vertices.windows(2).any(|w| w[0].key == w[1].key) {
            return Err(Error::Schema("duplicate vertex".into()));
        }
        let pos: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.key.as_str(), i))
            .collect();
        let mut out = Vec::with_capacity(edges.len());
        for (s, d, label) in &edges {
            let src = *pos
                .get(s.as_str())
                .ok_or_else(|| Error::Schema(format!("edge source {s:?} is not a vertex")))?;
            let dst = *pos
                .get(d.as_str())
                .ok_or_else(|| Error::Schema(format!("edge target {d:?} is not a vertex")))?;
            out.push(Edge { src, dst, label: *label });
        }
        out.sort();
        Ok(ComponentGraph {
            rank,
            kind,
            vertices,
            edges: out,
        })
    }

    pub fn vertex_index(&self, key: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.key.as_str().cmp(key))
            .ok()
    }

    pub fn key(&self, v: usize) -> &str {
        &self.vertices[v].key
    }

    /// Edges as (source key, target key, label) triples.
    pub fn keyed_edges(&self) -> Vec<(String, String, EdgeLabel)> {
        self.edges
            .iter()
            .map(|e| (self.key(e.src).to_string(), self.key(e.dst).to_string(), e.label))
            .collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.dst == v && e.src != v).count()
    }

    /// Drops labels and merges parallel edges, giving a graph of kind G.
    pub fn unlabeled(&self) -> ComponentGraph {
        let set: BTreeSet<(usize, usize)> = self.edges.iter().map(|e| (e.src, e.dst)).collect();
        ComponentGraph {
            rank: self.rank,
            kind: GraphKind::G,
            vertices: self.vertices.clone(),
            edges: set
                .into_iter()
                .map(|(src, dst)| Edge {
                    src,
                    dst,
                    label: EdgeLabel::None,
                })
                .collect(),
        }
    }
}

fn weight_of(b: &Word) -> Vec<i64> {
    b.weight().0.iter().map(|&c| c as i64).collect()
}

fn class_vertices(c: &QueerComponent) -> (Vec<Vertex>, Vec<Word>) {
    let hws: Vec<Word> = c.type_a_components().into_iter().map(|cl| cl.hw).collect();
    let verts = hws
        .iter()
        .map(|h| Vertex {
            key: h.to_string(),
            weight: weight_of(h),
        })
        .collect();
    (verts, hws)
}

/// G: an edge C₁ → C₂ whenever f₋₁ maps some element of C₁ into C₂ ≠ C₁.
pub fn build_g(c: &QueerComponent) -> ComponentGraph {
    let (verts, _) = class_vertices(c);
    let mut edges = BTreeSet::new();
    for b in c.words() {
        if let Some(t) = f_minus1(b) {
            let (s, d) = (raise_to_hw(b), raise_to_hw(&t));
            if s != d {
                edges.insert((s.to_string(), d.to_string()));
            }
        }
    }
    let edges = edges.into_iter().map(|(s, d)| (s, d, EdgeLabel::None)).collect();
    ComponentGraph::from_keyed(c.rank(), GraphKind::G, verts, edges).expect("keys come from the component")
}

/// G of an explicit crystal graph: vertices are I₀-classes keyed by their
/// I₀-highest element (smallest label if a class has none or several).
pub fn build_g_abstract(g: &AbstractCrystalGraph) -> ComponentGraph {
    let classes = g.i0_classes();
    let mut class_of = vec![0; g.len()];
    let mut verts = Vec::new();
    let mut keys = Vec::new();
    for (id, members) in classes.iter().enumerate() {
        for &x in members {
            class_of[x] = id;
        }
        let top = members
            .iter()
            .copied()
            .filter(|&x| g.is_i0_highest(x))
            .min_by(|&a, &b| g.label(a).cmp(g.label(b)))
            .unwrap_or_else(|| *members.iter().min_by(|&&a, &&b| g.label(a).cmp(g.label(b))).unwrap());
        keys.push(g.label(top).to_string());
        verts.push(Vertex {
            key: g.label(top).to_string(),
            weight: g.weight(top).to_vec(),
        });
    }
    let mut edges = BTreeSet::new();
    for x in 0..g.len() {
        if let Some(y) = g.f_m1(x) {
            if class_of[x] != class_of[y] {
                edges.insert((keys[class_of[x]].clone(), keys[class_of[y]].clone()));
            }
        }
    }
    let edges = edges.into_iter().map(|(s, d)| (s, d, EdgeLabel::None)).collect();
    ComponentGraph::from_keyed(g.rank(), GraphKind::G, verts, edges).expect("keys come from the graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    Combinatorial,
    Bypass,
}

/// The arrow into u₂ witnessed by e₋ᵢ is combinatorial iff e₋ᵢ u₂ is {1..i}-highest.
pub fn classify_arrow(u2: &Word, i: usize) -> Result<ArrowKind> {
    let e = e_minus(u2, i)
        .ok_or_else(|| Error::Precondition(format!("e_-{i} annihilates {u2}")))?;
    Ok(if is_highest_up_to(&e, i) {
        ArrowKind::Combinatorial
    } else {
        ArrowKind::Bypass
    })
}

/// f₍₋ᵢ,ₕ₎ = f₋ᵢ f_{i+1} ⋯ f_{h−1}, with f_{h−1} applied first.
pub fn f_bracket(u: &Word, i: usize, h: usize) -> OpResult {
    assert!(i >= 1 && i < h && h <= u.rank() + 1, "need 1 <= i < h <= n+1");
    let mut cur = u.clone();
    for m in (i + 1..h).rev() {
        cur = f_even(&cur, m)?;
    }
    f_minus(&cur, i)
}

/// Ḡ: the combinatorial edges of G, each labeled (−i, h) with the smallest
/// combinatorial i and the minimal h > i for which f₍₋ᵢ,ₕ₎ u₁ = u₂.
pub fn build_gbar(c: &QueerComponent) -> ComponentGraph {
    let g = build_g(c);
    let n = c.rank();
    let mut edges = Vec::new();
    for e in &g.edges {
        let u1 = Word::parse(g.key(e.src), n).expect("vertex keys are words");
        let u2 = Word::parse(g.key(e.dst), n).expect("vertex keys are words");
        let witness = (1..=n).find(|&i| {
            e_minus(&u2, i).is_some_and(|x| is_highest_up_to(&x, i) && raise_to_hw(&x) == u1)
        });
        let Some(i) = witness else { continue };
        if let Some(h) = (i + 1..=n + 1).find(|&h| f_bracket(&u1, i, h).as_ref() == Some(&u2)) {
            edges.push((g.key(e.src).to_string(), g.key(e.dst).to_string(), EdgeLabel::Pair(i, h)));
        }
    }
    ComponentGraph::from_keyed(n, GraphKind::Gbar, g.vertices.clone(), edges).expect("keys come from G")
}

/// G̃: for every vertex u and every i with e₋ᵢ u ≠ 0, an edge ↑e₋ᵢ u → u labeled −i.
pub fn build_gtilde(c: &QueerComponent) -> ComponentGraph {
    let (verts, hws) = class_vertices(c);
    let n = c.rank();
    let mut edges = Vec::new();
    for u in &hws {
        for i in 1..=n {
            if let Some(x) = e_minus(u, i) {
                edges.push((raise_to_hw(&x).to_string(), u.to_string(), EdgeLabel::Minus(i)));
            }
        }
    }
    ComponentGraph::from_keyed(n, GraphKind::Gtilde, verts, edges).expect("sources lie in the component")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::generate_component;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    fn labeled(g: &ComponentGraph) -> Vec<(String, String, String)> {
        g.keyed_edges()
            .into_iter()
            .map(|(s, d, l)| (s, d, l.to_string()))
            .collect()
    }

    #[test]
    fn label_text_round_trip() {
        for l in [EdgeLabel::None, EdgeLabel::Pair(2, 4), EdgeLabel::Minus(3)] {
            assert_eq!(EdgeLabel::parse(l.text().as_deref()).unwrap(), l);
        }
        assert!(EdgeLabel::parse(Some("(-1;2)")).is_err());
    }

    #[test]
    fn f_bracket_examples() {
        assert_eq!(f_bracket(&w("121121", 2), 1, 2), Some(w("221121", 2)));
        assert_eq!(f_bracket(&w("231121", 2), 1, 3), Some(w("332121", 2)));
    }

    #[test]
    fn small_gbar() {
        let c = generate_component(&w("121121", 2));
        let gbar = build_gbar(&c);
        let want = [
            ("121121", "131121", "(-2,3)"),
            ("121121", "221121", "(-1,2)"),
            ("131121", "231121", "(-1,2)"),
            ("221121", "132121", "(-2,3)"),
            ("231121", "332121", "(-1,3)"),
        ];
        let mut want: Vec<(String, String, String)> = want
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect();
        want.sort();
        assert_eq!(labeled(&gbar), want);
        assert_eq!(gbar.unlabeled(), build_g(&c));
    }

    #[test]
    fn small_gtilde_extends_gbar() {
        let c = generate_component(&w("121121", 2));
        let gbar = build_gbar(&c);
        let gt = build_gtilde(&c);
        let from_bar: Vec<(String, String, EdgeLabel)> = gbar
            .keyed_edges()
            .into_iter()
            .map(|(s, d, l)| match l {
                EdgeLabel::Pair(i, _) => (s, d, EdgeLabel::Minus(i)),
                other => (s, d, other),
            })
            .collect();
        let tilde = gt.keyed_edges();
        assert!(from_bar.iter().all(|e| tilde.contains(e)));
        assert!(tilde.contains(&("231121".into(), "332121".into(), EdgeLabel::Minus(2))));
        assert_eq!(gt.unlabeled(), build_g(&c));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_arrow(&w("221121", 2), 1), Ok(ArrowKind::Combinatorial));
        assert!(classify_arrow(&w("121121", 2), 1).is_err());
    }

    #[test]
    fn abstract_g_matches_word_g() {
        let c = generate_component(&w("112121321", 3));
        assert_eq!(build_g_abstract(&c.to_abstract(&[])), build_g(&c));
    }
}
