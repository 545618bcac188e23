//! Checkers for the Stembridge, local queer, abstract queer and connectivity axioms.

mod appendix;
mod connectivity;
mod counterexample;
mod local;
mod queer;
mod stembridge;

pub use appendix::check_c1prime_c2prime;
pub use connectivity::{almost_lowest, box_move, check_connectivity, gjk, gjk_in, BoxMove, GjkElement};
pub use counterexample::{build_counterexample, true_counterexample_component};
pub use local::check_local_queer;
pub use queer::check_abstract_queer;
pub use stembridge::check_stembridge;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::Serialize;

use crate::component::{generate_component, QueerComponent};
use crate::crystal::AbstractCrystalGraph;
use crate::error::{Error, Result};
use crate::graph::{build_g, build_g_abstract, graph_isomorphic};
use crate::operators::{e_minus, is_i0_highest};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub expected: String,
    pub found: String,
}

/// Number of instances examined per axiom and the violations found.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn declare(&mut self, axioms: &[&str]) {
        for a in axioms {
            self.checks.entry(a.to_string()).or_insert(0);
        }
    }

    /// Records one checked instance; on failure `detail` gives witness, expected, found.
    pub(crate) fn check<F>(&mut self, axiom: &str, ok: bool, detail: F)
    where
        F: FnOnce() -> (Vec<String>, String, String),
    {
        *self.checks.entry(axiom.to_string()).or_insert(0) += 1;
        if !ok {
            let (witness, expected, found) = detail();
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness,
                expected,
                found,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn axiom_passed(&self, axiom: &str) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn failed_axioms(&self) -> BTreeSet<String> {
        self.violations.iter().map(|v| v.axiom.clone()).collect()
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for (k, v) in other.checks {
            *self.checks.entry(k).or_insert(0) += v;
        }
        self.violations.extend(other.violations);
    }

    /// One line per axiom, then up to `max_violations` violation lines.
    pub fn to_text(&self, max_violations: usize) -> String {
        let mut out = String::new();
        for (axiom, count) in &self.checks {
            let status = if self.axiom_passed(axiom) { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{axiom:<8} {status} ({count} checks)");
        }
        for v in self.violations.iter().take(max_violations) {
            let _ = writeln!(
                out,
                "violation {}: at [{}] expected {} found {}",
                v.axiom,
                v.witness.join(", "),
                v.expected,
                v.found
            );
        }
        if self.violations.len() > max_violations {
            let _ = writeln!(out, "... {} more violations", self.violations.len() - max_violations);
        }
        let _ = writeln!(out, "overall: {}", if self.passed() { "pass" } else { "FAIL" });
        out
    }
}

/// Groups of axioms that can be selected for verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Type A Stembridge axioms on the I₀ arrows.
    Stembridge,
    /// LQ1 (Stembridge) through LQ7.
    Local,
    /// Q1–Q4.
    Queer,
    /// C0–C2.
    Connectivity,
    /// C1′ and C2′.
    Appendix,
    /// G is isomorphic to G of a component of the crystal of words.
    GraphIso,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Stembridge,
        Family::Local,
        Family::Queer,
        Family::Connectivity,
        Family::Appendix,
        Family::GraphIso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stembridge => "stembridge",
            Family::Local => "local",
            Family::Queer => "queer",
            Family::Connectivity => "connectivity",
            Family::Appendix => "appendix",
            Family::GraphIso => "graph-iso-vs-true",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown axiom family {s:?}")))
    }
}

/// Runs the selected families on an explicit crystal graph.
pub fn verify_graph(g: &AbstractCrystalGraph, families: &[Family]) -> AxiomReport {
    let mut report = AxiomReport::new();
    let fams: BTreeSet<Family> = families.iter().copied().collect();
    if fams.contains(&Family::Stembridge) || fams.contains(&Family::Local) {
        report.merge(check_stembridge(g));
    }
    if fams.contains(&Family::Local) {
        report.merge(check_local_queer(g));
    }
    if fams.contains(&Family::Queer) {
        report.merge(check_abstract_queer(g));
    }
    if fams.contains(&Family::Connectivity) {
        report.merge(check_connectivity(g, &build_g_abstract(g)));
    }
    if fams.contains(&Family::Appendix) {
        report.merge(check_c1prime_c2prime(g));
    }
    if fams.contains(&Family::GraphIso) {
        report.merge(check_graph_iso_vs_true(g));
    }
    report
}

/// Runs the selected families on a component of the crystal of words.
pub fn verify_component(c: &QueerComponent, families: &[Family]) -> AxiomReport {
    verify_graph(&c.to_abstract(&[]), families)
}

/// First word of the given weight (in lexicographic order) satisfying `pred`.
fn first_word_of_weight(rank: usize, weight: &[i64], pred: &dyn Fn(&Word) -> bool) -> Option<Word> {
    fn rec(
        rank: usize,
        left: &mut [i64],
        cur: &mut Vec<Letter>,
        pred: &dyn Fn(&Word) -> bool,
    ) -> Option<Word> {
        if left.iter().all(|&c| c == 0) {
            let w = Word::from_raw(rank, cur.clone());
            return pred(&w).then_some(w);
        }
        for m in 0..left.len() {
            if left[m] > 0 {
                left[m] -= 1;
                cur.push(m as Letter + 1);
                let found = rec(rank, left, cur, pred);
                cur.pop();
                left[m] += 1;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
    let mut left = weight.to_vec();
    rec(rank, &mut left, &mut Vec::new(), pred)
}

/// A component of the crystal of words whose highest weight word has weight λ.
pub fn word_component_with_highest_weight(rank: usize, lambda: &[i64]) -> Option<QueerComponent> {
    if lambda.len() != rank + 1 || lambda.iter().any(|&c| c < 0) {
        return None;
    }
    let is_hw = |b: &Word| is_i0_highest(b) && (1..=rank).all(|i| e_minus(b, i).is_none());
    first_word_of_weight(rank, lambda, &is_hw).map(|b| generate_component(&b))
}

/// G of the graph is isomorphic to G of some
/// component of the crystal of words. Candidates are the strict-partition
/// weights of the vertices of G.
pub fn check_graph_iso_vs_true(g: &AbstractCrystalGraph) -> AxiomReport {
    let mut report = AxiomReport::new();
    let ours = build_g_abstract(g);
    let candidates: BTreeSet<Vec<i64>> = ours
        .vertices
        .iter()
        .map(|v| v.weight.clone())
        .filter(|w| {
            let nz = w.iter().take_while(|&&c| c > 0).count();
            w[nz..].iter().all(|&c| c == 0) && w[..nz].windows(2).all(|p| p[0] > p[1])
        })
        .collect();
    let found = candidates.iter().find_map(|lambda| {
        let d = word_component_with_highest_weight(g.rank(), lambda)?;
        graph_isomorphic(&ours, &build_g(&d)).map(|_| d.hw().to_string())
    });
    report.check("GISO", found.is_some(), || {
        (
            ours.vertices.iter().map(|v| v.key.clone()).collect(),
            "G isomorphic to G of a word component".into(),
            format!("no match among {} candidate highest weights", candidates.len()),
        )
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_bookkeeping() {
        let mut r = AxiomReport::new();
        r.declare(&["X"]);
        r.check("X", true, || unreachable!());
        r.check("Y", false, || (vec!["a".into()], "1".into(), "2".into()));
        assert_eq!(r.checks["X"], 1);
        assert!(!r.passed());
        assert!(r.axiom_passed("X") && !r.axiom_passed("Y"));
        let text = r.to_text(5);
        assert!(text.contains("Y        FAIL (1 checks)"));
        let mut other = AxiomReport::new();
        other.check("X", true, || unreachable!());
        r.merge(other);
        assert_eq!(r.checks["X"], 2);
    }

    #[test]
    fn families_parse() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()).unwrap(), f);
        }
        assert!(Family::parse("nope").is_err());
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(
            first_word_of_weight(2, &[2, 1, 0], &|w| w.at(1) == 2),
            Some(Word::parse("211", 2).unwrap())
        );
        let d = word_component_with_highest_weight(2, &[4, 2, 0]).unwrap();
        assert_eq!(d.hw().weight().0, vec![4, 2, 0]);
    }
}
