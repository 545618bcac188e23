use std::fmt::Write;

use super::{ComponentGraph, EdgeLabel, GraphKind, Vertex};
use crate::error::{Error, Result};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn tensor_label(key: &str) -> String {
    let parts: Vec<&str> = if key.contains(',') {
        key.split(',').collect()
    } else {
        key.char_indices().map(|(i, c)| &key[i..i + c.len_utf8()]).collect()
    };
    if parts.iter().all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_digit())) {
        parts.join(" ⊗ ")
    } else {
        key.to_string()
    }
}

/// DOT text: vertices labeled by the tensor word, edges by (−i,h) or −i.
/// Vertex weights and the rank are carried in custom attributes so the text
/// can be read back with [`parse_dot`].
pub fn to_dot(g: &ComponentGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", g.kind.as_str());
    let _ = writeln!(out, "  graph [qrank={}];", g.rank);
    let _ = writeln!(out, "  node [shape=plaintext];");
    for v in &g.vertices {
        let wt: Vec<String> = v.weight.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "  {} [label={}, wt={}];",
            quote(&v.key),
            quote(&tensor_label(&v.key)),
            quote(&wt.join(","))
        );
    }
    for e in &g.edges {
        let _ = write!(out, "  {} -> {}", quote(g.key(e.src)), quote(g.key(e.dst)));
        match e.label.text() {
            Some(t) => {
                let _ = writeln!(out, " [label={}];", quote(&t));
            }
            None => {
                let _ = writeln!(out, ";");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Splits a line into quoted strings and bare tokens.
fn tokens(line: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('\\') => s.extend(chars.next()),
                    Some('"') => break,
                    Some(ch) => s.push(ch),
                    None => return Err(Error::Schema(format!("unterminated string in {line:?}"))),
                }
            }
            out.push(s);
        } else if c.is_whitespace() || c == ',' {
            chars.next();
        } else if "[]=;{}".contains(c) {
            out.push(c.to_string());
            chars.next();
        } else if c == '-' {
            chars.next();
            if chars.peek() == Some(&'>') {
                chars.next();
                out.push("->".into());
            } else {
                let mut s = String::from("-");
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(s);
            }
        } else {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphanumeric() || d == '_' || d == '.' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            if s.is_empty() {
                return Err(Error::Schema(format!("unexpected {c:?} in {line:?}")));
            }
            out.push(s);
        }
    }
    Ok(out)
}

fn attrs(toks: &[String]) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let Some(start) = toks.iter().position(|t| t == "[") else {
        return out;
    };
    let mut idx = start + 1;
    while idx + 2 < toks.len() && toks[idx] != "]" {
        if toks[idx + 1] == "=" {
            out.push((toks[idx].clone(), toks[idx + 2].clone()));
            idx += 3;
        } else {
            idx += 1;
        }
    }
    out
}

/// Reads back the DOT text produced by [`to_dot`].
pub fn parse_dot(text: &str) -> Result<ComponentGraph> {
    let mut kind = None;
    let mut rank = None;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines() {
        let toks = tokens(line.trim())?;
        if toks.is_empty() || toks[0] == "}" {
            continue;
        }
        match toks[0].as_str() {
            "digraph" => {
                let name = toks.get(1).ok_or_else(|| Error::Schema("digraph without name".into()))?;
                kind = Some(GraphKind::parse(name)?);
            }
            "graph" => {
                for (k, v) in attrs(&toks) {
                    if k == "qrank" {
                        rank = Some(v.parse().map_err(|_| Error::Schema(format!("bad rank {v:?}")))?);
                    }
                }
            }
            "node" | "edge" => {}
            _ if toks.get(1).map(String::as_str) == Some("->") => {
                let dst = toks.get(2).ok_or_else(|| Error::Schema(format!("bad edge {line:?}")))?;
                let label = attrs(&toks).into_iter().find(|(k, _)| k == "label").map(|(_, v)| v);
                edges.push((toks[0].clone(), dst.clone(), EdgeLabel::parse(label.as_deref())?));
            }
            _ => {
                let wt = attrs(&toks)
                    .into_iter()
                    .find(|(k, _)| k == "wt")
                    .map(|(_, v)| v)
                    .ok_or_else(|| Error::Schema(format!("vertex without weight: {line:?}")))?;
                let weight = wt
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Schema(format!("bad weight {wt:?}")))?;
                vertices.push(Vertex {
                    key: toks[0].clone(),
                    weight,
                });
            }
        }
    }
    let kind = kind.ok_or_else(|| Error::Schema("missing digraph header".into()))?;
    let rank = rank.ok_or_else(|| Error::Schema("missing qrank attribute".into()))?;
    ComponentGraph::from_keyed(rank, kind, vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::generate_component;
    use crate::graph::{build_gbar, build_gtilde};
    use crate::word::Word;

    #[test]
    fn round_trip() {
        let c = generate_component(&Word::parse("121121", 2).unwrap());
        let g = build_gbar(&c);
        let text = to_dot(&g);
        assert!(text.contains("\"121121\" -> \"221121\" [label=\"(-1,2)\"];"));
        assert!(text.contains("label=\"1 ⊗ 2 ⊗ 1 ⊗ 1 ⊗ 2 ⊗ 1\""));
        assert_eq!(parse_dot(&text).unwrap(), g);
        let gt = build_gtilde(&generate_component(&Word::parse("112121321", 3).unwrap()));
        assert_eq!(parse_dot(&to_dot(&gt)).unwrap(), gt);
        assert_eq!(to_dot(&gt), to_dot(&gt.clone()));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_dot("digraph Foo {\n}\n").is_err());
        assert!(parse_dot("digraph G {\n  \"1\" [label=\"1\"];\n}\n").is_err());
    }
}
