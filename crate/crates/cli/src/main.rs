//! jsjcalc: run the orbifold, arc and graph-of-groups operations on JSON
//! documents read from a file or stdin.
//!
//! Exit status is 0 on success, 1 when the input fails validation or an
//! operation rejects it, and 2 when the input cannot be parsed.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use arc_calculus::{
    catalog_all, catalog_dim3, catalog_entry, catalog_export, cut_along_arc, essential_arcs_oracle, isolated_arcs,
    CatalogEntry,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fixtures::{build, Fixture, FixtureId};
use gog_engine::{
    classify_edges, collapse_special_intervals, complete, dot_export, special_splittings, validate_graph,
    waldhausen_refine, EdgeClass, GogError, GraphOfGroups,
};
use orbifold_core::{Orbifold2, Violation};
use serde_json::json;

#[derive(Parser)]
#[command(name = "jsjcalc", version, about = "Orbifolds, isolated arcs and graphs of groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct Io {
    /// Input document; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct GraphIo {
    #[command(flatten)]
    io: Io,
    /// Use a built-in fixture instead of reading a document.
    #[arg(long)]
    fixture: Option<String>,
    /// Ambient dimension for `--fixture scott`.
    #[arg(long, default_value_t = 1)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted Euler characteristic of an orbifold.
    OrbChi(Io),
    /// Essential arcs found by the exhaustive oracle.
    OrbArcs(Io),
    /// Isolated essential arcs, from the catalog or the oracle.
    OrbIsolated(Io),
    /// Pieces after cutting along the isolated arc.
    OrbCut(Io),
    /// The catalog of orbifolds with isolated arcs.
    Catalog {
        /// Only entries legal in ambient dimension 3.
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long)]
        catalog_id: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    GogValidate(GraphIo),
    GogComplete(GraphIo),
    GogClassify(GraphIo),
    GogCollapse(GraphIo),
    GogRefine(GraphIo),
    GogDot(GraphIo),
    /// Print a built-in fixture document.
    Fixture {
        name: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

enum Failure {
    Invalid(Vec<String>),
    Rejected(String),
    Parse(String),
}

impl From<GogError> for Failure {
    fn from(e: GogError) -> Self {
        match e {
            GogError::Invalid(vs) => Failure::Invalid(vs.iter().map(Violation::to_string).collect()),
            other => Failure::Rejected(other.to_string()),
        }
    }
}

impl From<arc_calculus::ArcError> for Failure {
    fn from(e: arc_calculus::ArcError) -> Self {
        Failure::Rejected(e.to_string())
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_orbifold(io: &Io) -> Result<Orbifold2, Failure> {
    let o = Orbifold2::from_json(&read_input(&io.input)?).map_err(|e| Failure::Parse(e.to_string()))?;
    o.validate().map_err(|vs| Failure::Invalid(vs.iter().map(Violation::to_string).collect()))?;
    Ok(o)
}

fn read_graph(g: &GraphIo) -> Result<GraphOfGroups, Failure> {
    let graph = match &g.fixture {
        Some(name) => match build(FixtureId::parse(name, g.n).map_err(|e| Failure::Parse(e.to_string()))?) {
            Fixture::Graph(graph) => graph,
            Fixture::Orbifold(_) => return Err(Failure::Parse(format!("fixture {name} is an orbifold, not a graph"))),
        },
        None => GraphOfGroups::from_json(&read_input(&g.io.input)?).map_err(|e| Failure::Parse(e.to_string()))?,
    };
    validate_graph(&graph).map_err(|vs| Failure::Invalid(vs.iter().map(Violation::to_string).collect()))?;
    Ok(graph)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

fn graph_out(g: &GraphOfGroups, format: Option<Format>) -> String {
    match format {
        Some(Format::Dot) => dot_export(g),
        Some(Format::Text) => text_graph(g),
        _ => g.to_json(),
    }
}

fn text_graph(g: &GraphOfGroups) -> String {
    let mut out = format!("n = {}\n", g.n);
    for v in &g.vertices {
        out.push_str(&format!("vertex {} {:?} {}", v.id, v.part, v.kind));
        if let Some(o) = &v.base_orbifold {
            out.push_str(&format!(" over {o}"));
        }
        out.push('\n');
    }
    for e in &g.edges {
        out.push_str(&format!("edge {} {}--{} {} {}\n", e.id, e.ends.0, e.ends.1, e.kind, e.group));
    }
    out
}

fn entry_line(e: &CatalogEntry) -> String {
    let arc = e.isolated_arc.as_ref().map_or("no isolated arc".to_string(), |a| a.to_string());
    let mut flags = Vec::new();
    if e.requires_non_vpc_ambient {
        flags.push("nonVPC ambient");
    }
    if e.dim3_legal {
        flags.push("dim 3");
    }
    if e.ns_omission {
        flags.push("ns omission");
    }
    format!("{}\tχ = {}\t{}\t{}\t{}\n", e.figure_id, e.euler_char, e.orbifold, arc, flags.join(", "))
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), Failure> {
    Ok(match cli.command {
        Command::OrbChi(io) => {
            let chi = read_orbifold(&io)?.euler_char().map_err(|e| Failure::Rejected(e.to_string()))?;
            let text = match io.format {
                Some(Format::Json) => pretty(&json!({ "euler_char": chi })),
                _ => format!("{chi}\n"),
            };
            (text, io.output)
        }
        Command::OrbArcs(io) => {
            let o = read_orbifold(&io)?;
            (arcs_out(&essential_arcs_oracle(&o)?, io.format), io.output)
        }
        Command::OrbIsolated(io) => {
            let o = read_orbifold(&io)?;
            (arcs_out(&isolated_arcs(&o)?, io.format), io.output)
        }
        Command::OrbCut(io) => {
            let o = read_orbifold(&io)?;
            let arcs = isolated_arcs(&o)?;
            let arc = arcs.first().ok_or_else(|| Failure::Rejected(format!("{o} has no isolated arc")))?;
            let pieces = cut_along_arc(&o, arc)?;
            let text = match io.format {
                Some(Format::Text) => pieces.iter().map(|p| format!("{p}\n")).collect(),
                _ => pretty(&serde_json::to_value(&pieces).expect("orbifolds serialize")),
            };
            (text, io.output)
        }
        Command::Catalog { dim, catalog_id, output, format } => {
            let entries = match (&catalog_id, dim) {
                (Some(id), _) => {
                    vec![catalog_entry(id).ok_or_else(|| Failure::Rejected(format!("no catalog entry {id}")))?]
                }
                (None, Some(3)) => catalog_dim3(),
                (None, Some(d)) if d >= 4 => catalog_all(),
                (None, Some(d)) => return Err(Failure::Parse(format!("dimension {d} is below 3"))),
                (None, None) => catalog_all(),
            };
            let text = match format {
                Some(Format::Json) if catalog_id.is_none() && dim.is_none() => catalog_export(),
                Some(Format::Json) => pretty(&serde_json::to_value(&entries).expect("entries serialize")),
                _ => entries.iter().map(entry_line).collect(),
            };
            (text, output)
        }
        Command::GogValidate(g) => {
            read_graph(&g)?;
            ("ok\n".to_string(), g.io.output)
        }
        Command::GogComplete(g) => {
            let c = complete(&read_graph(&g)?)?;
            (graph_out(&c.graph, g.io.format), g.io.output)
        }
        Command::GogClassify(g) => {
            let graph = read_graph(&g)?;
            let classes = classify_edges(&graph)?;
            let splittings = special_splittings(&graph)?;
            let text = match g.io.format {
                Some(Format::Json) => pretty(&json!({ "edges": classes, "special_splittings": splittings })),
                _ => {
                    let mut t: String = classes
                        .iter()
                        .map(|(e, c)| {
                            let label = match c {
                                EdgeClass::Canonical => "Canonical",
                                EdgeClass::SpecialCanonicalTorus => "Special",
                            };
                            format!("edge {e}: {label}\n")
                        })
                        .collect();
                    for s in &splittings {
                        let ids: Vec<String> = s.iter().map(u32::to_string).collect();
                        t.push_str(&format!("special splitting: edges {}\n", ids.join(" ")));
                    }
                    t.push_str(&format!("special splittings: {}\n", splittings.len()));
                    t
                }
            };
            (text, g.io.output)
        }
        Command::GogCollapse(g) => (graph_out(&collapse_special_intervals(&read_graph(&g)?)?, g.io.format), g.io.output),
        Command::GogRefine(g) => (graph_out(&waldhausen_refine(&read_graph(&g)?)?, g.io.format), g.io.output),
        Command::GogDot(g) => (dot_export(&read_graph(&g)?), g.io.output),
        Command::Fixture { name, n, output, format } => {
            let id = FixtureId::parse(&name, n).map_err(|e| Failure::Parse(e.to_string()))?;
            let text = match (build(id), format) {
                (Fixture::Graph(g), f) => graph_out(&g, f),
                (Fixture::Orbifold(o), Some(Format::Text)) => format!("{o}\n"),
                (f, _) => f.to_json(),
            };
            (text, output)
        }
    })
}

fn arcs_out(arcs: &[arc_calculus::ArcClass], format: Option<Format>) -> String {
    match format {
        Some(Format::Text) => arcs.iter().map(|a| format!("{a}\n")).collect(),
        _ => pretty(&serde_json::to_value(arcs).expect("arcs serialize")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, output)) => {
            let written = match output {
                Some(p) => std::fs::write(&p, text),
                None => io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("jsjcalc: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Invalid(vs)) => {
            for v in vs {
                println!("violation: {v}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("jsjcalc: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("jsjcalc: {msg}");
            ExitCode::from(2)
        }
    }
}
