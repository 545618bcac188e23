//! Canonical JSON for component graphs, explicit crystals, components and reports.
//!
//! Objects are emitted with sorted keys, two-space indentation and a trailing
//! newline, so emit → ingest → emit is byte-stable.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::axioms::AxiomReport;
use crate::component::QueerComponent;
use crate::crystal::{AbstractCrystalGraph, LabelKind};
use crate::error::{Error, Result};
use crate::graph::{ComponentGraph, EdgeLabel, GraphKind, Vertex};
use crate::index::CrystalIndex;

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

/// Pretty-prints a value with sorted keys and a trailing newline.
pub fn canonical(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing field {key:?}")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(format!("{what} must be a string")))
}

fn rank_of(obj: &Map<String, Value>) -> Result<usize> {
    let r = field(obj, "rank")?
        .as_u64()
        .ok_or_else(|| schema("rank must be a non-negative integer"))?;
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(r as usize)
}

fn weight_of(v: &Value, rank: usize, what: &str) -> Result<Vec<i64>> {
    let arr = as_array(v, what)?;
    if arr.len() != rank + 1 {
        return Err(schema(format!("{what} must have {} entries", rank + 1)));
    }
    arr.iter()
        .map(|c| c.as_i64().ok_or_else(|| schema(format!("{what} entries must be integers"))))
        .collect()
}

pub fn graph_to_value(g: &ComponentGraph) -> Value {
    let vertices: Vec<Value> = g
        .vertices
        .iter()
        .map(|v| json!({"word": v.key, "weight": v.weight}))
        .collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| {
            json!({
                "src": g.key(e.src),
                "dst": g.key(e.dst),
                "label": e.label.text(),
            })
        })
        .collect();
    json!({
        "rank": g.rank,
        "kind": g.kind.as_str(),
        "vertices": vertices,
        "edges": edges,
    })
}

pub fn graph_to_json(g: &ComponentGraph) -> String {
    canonical(&graph_to_value(g))
}

pub fn graph_from_value(v: &Value) -> Result<ComponentGraph> {
    let obj = as_object(v, "graph")?;
    let rank = rank_of(obj)?;
    let kind = GraphKind::parse(as_str(field(obj, "kind")?, "kind")?)?;
    let mut vertices = Vec::new();
    for vert in as_array(field(obj, "vertices")?, "vertices")? {
        let vo = as_object(vert, "vertex")?;
        vertices.push(Vertex {
            key: as_str(field(vo, "word")?, "vertex word")?.to_string(),
            weight: weight_of(field(vo, "weight")?, rank, "vertex weight")?,
        });
    }
    let mut edges = Vec::new();
    for e in as_array(field(obj, "edges")?, "edges")? {
        let eo = as_object(e, "edge")?;
        let label = match eo.get("label") {
            None | Some(Value::Null) => None,
            Some(l) => Some(as_str(l, "edge label")?),
        };
        edges.push((
            as_str(field(eo, "src")?, "edge src")?.to_string(),
            as_str(field(eo, "dst")?, "edge dst")?.to_string(),
            EdgeLabel::parse(label)?,
        ));
    }
    ComponentGraph::from_keyed(rank, kind, vertices, edges)
}

pub fn graph_from_json(text: &str) -> Result<ComponentGraph> {
    graph_from_value(&parse_value(text)?)
}

pub fn crystal_to_value(g: &AbstractCrystalGraph) -> Value {
    let key = match g.label_kind() {
        LabelKind::Word => "word",
        LabelKind::Id => "id",
    };
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    let elements: Vec<Value> = order
        .iter()
        .map(|&x| {
            let mut m = Map::new();
            m.insert(key.into(), Value::from(g.label(x)));
            m.insert("weight".into(), json!(g.weight(x)));
            Value::Object(m)
        })
        .collect();
    let mut f = Map::new();
    for idx in g.indices() {
        let mut pairs: Vec<(&str, &str)> = g
            .edges(idx)
            .iter()
            .map(|&(s, d)| (g.label(s), g.label(d)))
            .collect();
        pairs.sort();
        f.insert(idx.to_string(), json!(pairs));
    }
    json!({
        "rank": g.rank(),
        "elements": elements,
        "f": f,
    })
}

pub fn crystal_to_json(g: &AbstractCrystalGraph) -> String {
    canonical(&crystal_to_value(g))
}

pub fn crystal_from_value(v: &Value) -> Result<AbstractCrystalGraph> {
    let obj = as_object(v, "crystal")?;
    let rank = rank_of(obj)?;
    let mut kind = None;
    let mut elements = Vec::new();
    for el in as_array(field(obj, "elements")?, "elements")? {
        let eo = as_object(el, "element")?;
        let (k, label) = match (eo.get("word"), eo.get("id")) {
            (Some(w), None) => (LabelKind::Word, as_str(w, "element word")?),
            (None, Some(i)) => (LabelKind::Id, as_str(i, "element id")?),
            _ => return Err(schema("each element needs exactly one of \"word\" or \"id\"")),
        };
        if kind.is_some_and(|prev| prev != k) {
            return Err(schema("elements mix \"word\" and \"id\" labels"));
        }
        kind = Some(k);
        elements.push((label.to_string(), weight_of(field(eo, "weight")?, rank, "element weight")?));
    }
    let mut g = AbstractCrystalGraph::new(rank, kind.unwrap_or(LabelKind::Id), elements)?;
    let arrows = as_object(field(obj, "f")?, "f")?;
    let mut parsed: BTreeMap<CrystalIndex, Vec<(String, String)>> = BTreeMap::new();
    for (name, list) in arrows {
        let idx: CrystalIndex = name.parse()?;
        let idx = idx.check(rank)?;
        let entry = parsed.entry(idx).or_default();
        for pair in as_array(list, "arrow list")? {
            let p = as_array(pair, "arrow")?;
            if p.len() != 2 {
                return Err(schema(format!("arrow under {name:?} must be [src, dst]")));
            }
            entry.push((
                as_str(&p[0], "arrow src")?.to_string(),
                as_str(&p[1], "arrow dst")?.to_string(),
            ));
        }
    }
    for (idx, pairs) in parsed {
        for (s, d) in pairs {
            g.add_edge(idx, &s, &d)?;
        }
    }
    Ok(g)
}

pub fn crystal_from_json(text: &str) -> Result<AbstractCrystalGraph> {
    crystal_from_value(&parse_value(text)?)
}

/// Words, type-A classes and highest weight of a component.
pub fn component_to_value(c: &QueerComponent) -> Value {
    let classes: Vec<Value> = c
        .type_a_components()
        .iter()
        .map(|cl| {
            json!({
                "highest": cl.hw.to_string(),
                "lowest": cl.lw.to_string(),
                "weight": cl.hw.weight(),
                "members": cl.members.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "rank": c.rank(),
        "highest_weight_word": c.hw().to_string(),
        "highest_weight": c.hw().weight(),
        "size": c.len(),
        "words": c.words().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "classes": classes,
    })
}

pub fn component_to_json(c: &QueerComponent) -> String {
    canonical(&component_to_value(c))
}

pub fn report_to_value(r: &AxiomReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks,
        "violations": r.violations,
    })
}

pub fn report_to_json(r: &AxiomReport) -> String {
    canonical(&report_to_value(r))
}
