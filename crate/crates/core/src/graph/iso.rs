use std::collections::HashMap;

use super::{ComponentGraph, EdgeLabel};

type Adjacency = HashMap<(usize, usize), Vec<EdgeLabel>>;

fn adjacency(g: &ComponentGraph) -> Adjacency {
    let mut adj: Adjacency = HashMap::new();
    for e in &g.edges {
        adj.entry((e.src, e.dst)).or_default().push(e.label);
    }
    for labels in adj.values_mut() {
        labels.sort();
    }
    adj
}

fn signature(g: &ComponentGraph, v: usize) -> (Vec<i64>, usize, usize) {
    let out = g.edges.iter().filter(|e| e.src == v).count();
    let inn = g.edges.iter().filter(|e| e.dst == v).count();
    (g.vertices[v].weight.clone(), out, inn)
}

/// Decides whether a bijection of vertices preserves weights and the edge
/// multiset (with labels). Returns the map from `g1` vertex indices to `g2`
/// vertex indices when one exists.
pub fn graph_isomorphic(g1: &ComponentGraph, g2: &ComponentGraph) -> Option<Vec<usize>> {
    let n = g1.vertices.len();
    if n != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return None;
    }
    let sig1: Vec<_> = (0..n).map(|v| signature(g1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| signature(g2, v)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| sig2[w] == sig1[v]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), v));
    let search = Search {
        adj1: adjacency(g1),
        adj2: adjacency(g2),
        order,
        candidates,
    };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search.extend(0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

struct Search {
    adj1: Adjacency,
    adj2: Adjacency,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search {
    fn labels(adj: &Adjacency, a: usize, b: usize) -> &[EdgeLabel] {
        adj.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    fn consistent(&self, v: usize, w: usize, map: &[usize]) -> bool {
        if Self::labels(&self.adj1, v, v) != Self::labels(&self.adj2, w, w) {
            return false;
        }
        map.iter().enumerate().all(|(u, &mu)| {
            mu == usize::MAX
                || (Self::labels(&self.adj1, v, u) == Self::labels(&self.adj2, w, mu)
                    && Self::labels(&self.adj1, u, v) == Self::labels(&self.adj2, mu, w))
        })
    }

    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // trying w = v first makes the identity the witness for equal graphs
        let same = self.candidates[v].iter().copied().filter(|&w| w == v);
        let rest = self.candidates[v].iter().copied().filter(|&w| w != v);
        for w in same.chain(rest) {
            if used[w] || !self.consistent(v, w, map) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::generate_component;
    use crate::graph::{build_g, build_gtilde};
    use crate::word::Word;

    #[test]
    fn reflexive_with_identity() {
        let c = generate_component(&Word::parse("112121321", 3).unwrap());
        let g = build_g(&c);
        let map = graph_isomorphic(&g, &g).unwrap();
        assert_eq!(map, (0..g.vertices.len()).collect::<Vec<_>>());
        let gt = build_gtilde(&c);
        assert!(graph_isomorphic(&gt, &gt).is_some());
        assert!(graph_isomorphic(&g, &gt.unlabeled()).is_some());
    }

    #[test]
    fn different_sizes() {
        let a = build_g(&generate_component(&Word::parse("2111", 3).unwrap()));
        let b = build_g(&generate_component(&Word::parse("121121", 2).unwrap()));
        assert!(graph_isomorphic(&a, &b).is_none());
    }
}
