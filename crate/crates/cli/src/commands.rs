//! Subcommand bodies. Each returns whether everything checked passed.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use qcrystal::axioms::{build_counterexample, verify_graph, Family};
use qcrystal::crosscheck::crosscheck as run_crosscheck;
use qcrystal::graph::{build_g_abstract, parse_dot, to_dot};
use qcrystal::io::{
    canonical, component_to_json, crystal_from_json, crystal_to_json, graph_from_json,
    graph_to_json, report_to_json,
};
use qcrystal::sweep::components_of_length;
use qcrystal::{
    build_g, build_gbar, build_gtilde, generate_component, AbstractCrystalGraph, AxiomReport,
    ComponentGraph, QueerComponent, Word,
};

use crate::error::CliError;
use crate::{Format, Kind, OutputArgs, SeedArgs};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes to stdout, or to a sibling temporary file renamed over the target.
fn emit(text: &str, out: &OutputArgs) -> Result<(), CliError> {
    let Some(path) = &out.out else {
        print!("{text}");
        let _ = std::io::stdout().flush();
        return Ok(());
    };
    let err = |source| CliError::Write {
        path: path.clone(),
        source,
    };
    let mut tmp = path.clone().into_os_string();
    tmp.push(".tmp");
    std::fs::write(&tmp, text).map_err(err)?;
    std::fs::rename(&tmp, path).map_err(err)
}

fn component_of(rank: usize, seed: &str) -> Result<QueerComponent, CliError> {
    if rank == 0 {
        return Err(qcrystal::Error::ZeroRank.into());
    }
    Ok(generate_component(&Word::parse(seed, rank)?))
}

fn component_text(c: &QueerComponent) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "rank {} component of {} words", c.rank(), c.len());
    let _ = writeln!(s, "highest weight word {} of weight {}", c.hw(), c.hw().weight());
    for cl in c.type_a_components() {
        let _ = writeln!(
            s,
            "class {} weight {} lowest {} size {}",
            cl.hw,
            cl.hw.weight(),
            cl.lw,
            cl.members.len()
        );
    }
    s
}

pub fn component(seed: &SeedArgs, out: &OutputArgs) -> Result<bool, CliError> {
    let c = component_of(seed.rank, &seed.seed)?;
    let text = match out.format {
        Format::Json => component_to_json(&c),
        Format::Text => component_text(&c),
        Format::Dot => return Err(usage("components have no DOT form; use the graph subcommand")),
    };
    emit(&text, out)?;
    Ok(true)
}

fn graph_text(g: &ComponentGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} of rank {}: {} vertices, {} edges",
        g.kind.as_str(),
        g.rank,
        g.vertices.len(),
        g.edges.len()
    );
    for v in &g.vertices {
        let w: Vec<String> = v.weight.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "vertex {} ({})", v.key, w.join(","));
    }
    for (src, dst, label) in g.keyed_edges() {
        match label.text() {
            Some(l) => {
                let _ = writeln!(s, "edge {src} -> {dst} {l}");
            }
            None => {
                let _ = writeln!(s, "edge {src} -> {dst}");
            }
        }
    }
    s
}

fn render_graph(g: &ComponentGraph, format: Format) -> String {
    match format {
        Format::Json => graph_to_json(g),
        Format::Dot => to_dot(g),
        Format::Text => graph_text(g),
    }
}

fn load_graph(path: &Path) -> Result<ComponentGraph, CliError> {
    let text = read(path)?;
    let g = if text.trim_start().starts_with("digraph") {
        parse_dot(&text)?
    } else {
        graph_from_json(&text)?
    };
    Ok(g)
}

fn build_kind(c: &QueerComponent, kind: Kind) -> ComponentGraph {
    match kind {
        Kind::G => build_g(c),
        Kind::Gbar => build_gbar(c),
        Kind::Gtilde => build_gtilde(c),
    }
}

pub fn graph(
    rank: Option<usize>,
    seed: Option<&str>,
    input: Option<&Path>,
    kind: Kind,
    out: &OutputArgs,
) -> Result<bool, CliError> {
    let g = match (input, seed) {
        (Some(path), _) => load_graph(path)?,
        (None, Some(seed)) => {
            let rank = rank.ok_or_else(|| usage("--rank is required with --seed"))?;
            build_kind(&component_of(rank, seed)?, kind)
        }
        (None, None) => return Err(usage("give --seed with --rank, or --input")),
    };
    emit(&render_graph(&g, out.format), out)?;
    Ok(true)
}

fn parse_families(names: &[String]) -> Result<Vec<Family>, CliError> {
    if names.is_empty() {
        return Ok(Family::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| Family::parse(n.trim()).map_err(CliError::from))
        .collect()
}

fn verify_targets(
    rank: Option<usize>,
    seed: Option<&str>,
    len: Option<usize>,
    input: Option<&Path>,
) -> Result<Vec<AbstractCrystalGraph>, CliError> {
    if let Some(path) = input {
        return Ok(vec![crystal_from_json(&read(path)?)?]);
    }
    let rank = rank.ok_or_else(|| usage("--rank is required unless --input is given"))?;
    if rank == 0 {
        return Err(qcrystal::Error::ZeroRank.into());
    }
    match (seed, len) {
        (Some(seed), _) => Ok(vec![component_of(rank, seed)?.to_abstract(&[])]),
        (None, Some(len)) => Ok((1..=len)
            .flat_map(|l| components_of_length(rank, l))
            .map(|c| c.to_abstract(&[]))
            .collect()),
        (None, None) => Err(usage("give --seed, --len or --input")),
    }
}

pub fn verify(
    rank: Option<usize>,
    seed: Option<&str>,
    len: Option<usize>,
    input: Option<&Path>,
    families: &[String],
    out: &OutputArgs,
) -> Result<bool, CliError> {
    let families = parse_families(families)?;
    let targets = verify_targets(rank, seed, len, input)?;
    let mut report = AxiomReport::new();
    for g in &targets {
        report.merge(verify_graph(g, &families));
    }
    let text = match out.format {
        Format::Json => report_to_json(&report),
        Format::Text => {
            let mut s = format!("{} crystal(s) checked\n", targets.len());
            s.push_str(&report.to_text(20));
            s
        }
        Format::Dot => return Err(usage("reports have no DOT form")),
    };
    emit(&text, out)?;
    Ok(report.passed())
}

pub fn crosscheck(rank: usize, len: usize, out: &OutputArgs) -> Result<bool, CliError> {
    if rank == 0 {
        return Err(qcrystal::Error::ZeroRank.into());
    }
    if len == 0 {
        return Err(usage("--len must be at least 1"));
    }
    let r = run_crosscheck(rank, len);
    let text = match out.format {
        Format::Json => canonical(&serde_json::to_value(&r).expect("report serializes")),
        Format::Text => r.to_text(),
        Format::Dot => return Err(usage("cross-check results have no DOT form")),
    };
    emit(&text, out)?;
    Ok(r.total_divergences() == 0)
}

pub fn counterexample(kind: Option<Kind>, out: &OutputArgs) -> Result<bool, CliError> {
    let g = build_counterexample();
    let text = match (kind, out.format) {
        (Some(Kind::G), f) => render_graph(&build_g_abstract(&g), f),
        (Some(_), _) => {
            return Err(usage("only the unlabeled graph G is defined for the rewired crystal"))
        }
        (None, Format::Json) => crystal_to_json(&g),
        (None, Format::Text) => {
            let g_graph = build_g_abstract(&g);
            let mut s = format!("rewired crystal with {} elements\n", g.len());
            s.push_str(&graph_text(&g_graph));
            s
        }
        (None, Format::Dot) => to_dot(&build_g_abstract(&g)),
    };
    emit(&text, out)?;
    Ok(true)
}

