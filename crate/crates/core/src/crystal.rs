//! Explicit finite crystal graphs: elements with weights and partial f maps.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::index::CrystalIndex;
use crate::word::Word;

/// Whether element labels are words of the crystal of words or opaque ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelKind {
    Word,
    Id,
}

/// A structural defect of a colour class: two f edges out of (or into) one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub index: CrystalIndex,
    pub element: usize,
    pub incoming: bool,
}

#[derive(Clone, Debug)]
pub struct AbstractCrystalGraph {
    rank: usize,
    label_kind: LabelKind,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    lookup: HashMap<String, usize>,
    edges: BTreeMap<CrystalIndex, Vec<(usize, usize)>>,
    f: BTreeMap<CrystalIndex, Vec<Option<usize>>>,
    e: BTreeMap<CrystalIndex, Vec<Option<usize>>>,
    defects: Vec<Defect>,
}

impl AbstractCrystalGraph {
    pub fn new(rank: usize, label_kind: LabelKind, elements: Vec<(String, Vec<i64>)>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut labels = Vec::with_capacity(elements.len());
        let mut weights = Vec::with_capacity(elements.len());
        let mut lookup = HashMap::with_capacity(elements.len());
        for (label, wt) in elements {
            if wt.len() != rank + 1 {
                return Err(Error::Schema(format!(
                    "element {label:?} has weight of length {} (expected {})",
                    wt.len(),
                    rank + 1
                )));
            }
            if lookup.insert(label.clone(), labels.len()).is_some() {
                return Err(Error::Schema(format!("duplicate element {label:?}")));
            }
            labels.push(label);
            weights.push(wt);
        }
        let mut g = AbstractCrystalGraph {
            rank,
            label_kind,
            labels,
            weights,
            lookup,
            edges: BTreeMap::new(),
            f: BTreeMap::new(),
            e: BTreeMap::new(),
            defects: Vec::new(),
        };
        for i in 1..=rank {
            g.edges.insert(CrystalIndex::Even(i), Vec::new());
        }
        g.edges.insert(CrystalIndex::OddMinus(1), Vec::new());
        g.rebuild();
        Ok(g)
    }

    /// Materializes the words with their f_i (i ∈ I₀) and f₋₁ arrows, plus f₋ᵢ for
    /// the listed extra odd indices.
    pub fn from_words(rank: usize, words: &[Word], extra_odd: &[usize]) -> Self {
        let elements = words
            .iter()
            .map(|w| (w.to_string(), w.weight().0.iter().map(|&c| c as i64).collect()))
            .collect();
        let mut g = AbstractCrystalGraph::new(rank, LabelKind::Word, elements)
            .expect("words give a well-formed graph");
        let mut indices: Vec<CrystalIndex> = (1..=rank).map(CrystalIndex::Even).collect();
        indices.push(CrystalIndex::OddMinus(1));
        indices.extend(extra_odd.iter().filter(|&&i| i > 1).map(|&i| CrystalIndex::OddMinus(i)));
        for idx in indices {
            let list = g.edges.entry(idx).or_default();
            for (src, w) in words.iter().enumerate() {
                if let Some(t) = crate::operators::apply_f(w, idx) {
                    if let Some(&dst) = g.lookup.get(&t.to_string()) {
                        list.push((src, dst));
                    }
                }
            }
        }
        g.rebuild();
        g
    }

    fn rebuild(&mut self) {
        let n = self.labels.len();
        self.f.clear();
        self.e.clear();
        self.defects.clear();
        for (&idx, list) in &mut self.edges {
            list.sort_unstable();
            list.dedup();
            let mut f = vec![None; n];
            let mut e = vec![None; n];
            for &(src, dst) in list.iter() {
                if f[src].is_some() {
                    self.defects.push(Defect {
                        index: idx,
                        element: src,
                        incoming: false,
                    });
                } else {
                    f[src] = Some(dst);
                }
                if e[dst].is_some() {
                    self.defects.push(Defect {
                        index: idx,
                        element: dst,
                        incoming: true,
                    });
                } else {
                    e[dst] = Some(src);
                }
            }
            self.f.insert(idx, f);
            self.e.insert(idx, e);
        }
    }

    pub fn add_edge(&mut self, idx: CrystalIndex, src: &str, dst: &str) -> Result<()> {
        let s = self.require(src)?;
        let d = self.require(dst)?;
        self.edges.entry(idx).or_default().push((s, d));
        self.rebuild();
        Ok(())
    }

    /// Removes an edge; returns whether it was present.
    pub fn remove_edge(&mut self, idx: CrystalIndex, src: &str, dst: &str) -> Result<bool> {
        let s = self.require(src)?;
        let d = self.require(dst)?;
        let list = self.edges.entry(idx).or_default();
        let before = list.len();
        list.retain(|&e| e != (s, d));
        let removed = list.len() != before;
        self.rebuild();
        Ok(removed)
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::Schema(format!("unknown element {label:?}")))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label_kind(&self) -> LabelKind {
        self.label_kind
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn weight(&self, x: usize) -> &[i64] {
        &self.weights[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn indices(&self) -> impl Iterator<Item = CrystalIndex> + '_ {
        self.edges.keys().copied()
    }

    pub fn edges(&self, idx: CrystalIndex) -> &[(usize, usize)] {
        self.edges.get(&idx).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn defects(&self) -> &[Defect] {
        &self.defects
    }

    pub fn f(&self, idx: CrystalIndex, x: usize) -> Option<usize> {
        self.f.get(&idx).and_then(|m| m[x])
    }

    pub fn e(&self, idx: CrystalIndex, x: usize) -> Option<usize> {
        self.e.get(&idx).and_then(|m| m[x])
    }

    pub fn f_even(&self, i: usize, x: usize) -> Option<usize> {
        self.f(CrystalIndex::Even(i), x)
    }

    pub fn e_even(&self, i: usize, x: usize) -> Option<usize> {
        self.e(CrystalIndex::Even(i), x)
    }

    pub fn f_m1(&self, x: usize) -> Option<usize> {
        self.f(CrystalIndex::OddMinus(1), x)
    }

    pub fn e_m1(&self, x: usize) -> Option<usize> {
        self.e(CrystalIndex::OddMinus(1), x)
    }

    /// Length of the f-string from x; `None` if the string cycles.
    pub fn phi(&self, idx: CrystalIndex, x: usize) -> Option<usize> {
        self.walk(x, |y| self.f(idx, y))
    }

    /// Length of the e-string from x; `None` if the string cycles.
    pub fn eps(&self, idx: CrystalIndex, x: usize) -> Option<usize> {
        self.walk(x, |y| self.e(idx, y))
    }

    fn walk(&self, x: usize, step: impl Fn(usize) -> Option<usize>) -> Option<usize> {
        let mut count = 0;
        let mut cur = x;
        while let Some(next) = step(cur) {
            count += 1;
            if count > self.len() {
                return None;
            }
            cur = next;
        }
        Some(count)
    }

    /// φᵢ for an even index, treating a cyclic string as infinitely long.
    pub fn phi_i(&self, i: usize, x: usize) -> i64 {
        self.phi(CrystalIndex::Even(i), x).map_or(i64::MAX, |v| v as i64)
    }

    pub fn eps_i(&self, i: usize, x: usize) -> i64 {
        self.eps(CrystalIndex::Even(i), x).map_or(i64::MAX, |v| v as i64)
    }

    /// Chain of even e's written as a product (rightmost first).
    pub fn e_chain(&self, x: usize, product: &[usize]) -> Option<usize> {
        product.iter().rev().try_fold(x, |acc, &i| self.e_even(i, acc))
    }

    /// Chain of even f's written as a product (rightmost first).
    pub fn f_chain(&self, x: usize, product: &[usize]) -> Option<usize> {
        product.iter().rev().try_fold(x, |acc, &i| self.f_even(i, acc))
    }

    pub fn is_i0_highest(&self, x: usize) -> bool {
        (1..=self.rank).all(|i| self.e_even(i, x).is_none())
    }

    pub fn is_i0_lowest(&self, x: usize) -> bool {
        (1..=self.rank).all(|i| self.f_even(i, x).is_none())
    }

    /// Connected components under I₀ arrows (either direction), as sorted member lists.
    pub fn i0_classes(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut class = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if class[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            class[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for i in 1..=self.rank {
                    for y in [self.f_even(i, x), self.e_even(i, x)].into_iter().flatten() {
                        if class[y] == usize::MAX {
                            class[y] = id;
                            members.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::generate_component;

    #[test]
    fn letters_graph() {
        let c = generate_component(&Word::parse("1", 3).unwrap());
        let g = AbstractCrystalGraph::from_words(3, c.words(), &[]);
        assert_eq!(g.len(), 4);
        let one = g.index_of("1").unwrap();
        let two = g.index_of("2").unwrap();
        assert_eq!(g.f_even(1, one), Some(two));
        assert_eq!(g.f_m1(one), Some(two));
        assert_eq!(g.e_m1(two), Some(one));
        assert_eq!(g.phi_i(1, one), 1);
        assert!(g.defects().is_empty());
        assert_eq!(g.i0_classes().len(), 1);
    }

    #[test]
    fn defects_are_recorded() {
        let elems = vec![
            ("a".to_string(), vec![1, 0]),
            ("a2".to_string(), vec![1, 0]),
            ("b".to_string(), vec![0, 1]),
        ];
        let mut g = AbstractCrystalGraph::new(1, LabelKind::Id, elems).unwrap();
        g.add_edge(CrystalIndex::Even(1), "a", "b").unwrap();
        assert!(g.defects().is_empty());
        g.add_edge(CrystalIndex::Even(1), "a2", "b").unwrap();
        assert_eq!(g.defects().len(), 1);
        assert!(g.defects()[0].incoming);
        assert!(g.remove_edge(CrystalIndex::Even(1), "a2", "b").unwrap());
        assert!(g.defects().is_empty());
    }

    #[test]
    fn rejects_bad_elements() {
        let bad = vec![("a".to_string(), vec![1])];
        assert!(AbstractCrystalGraph::new(1, LabelKind::Id, bad).is_err());
        let dup = vec![("a".to_string(), vec![1, 0]), ("a".to_string(), vec![0, 1])];
        assert!(AbstractCrystalGraph::new(1, LabelKind::Id, dup).is_err());
    }
}
