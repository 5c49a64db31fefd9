//! Command-line surface: family generation, curvature and connectivity
//! queries, and the theorem-check suite.
//!
//! Exit codes: 0 on success with all non-vacuous checks passing, 1 when a
//! check fails, 2 on input errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use curvcon::families;
use curvcon::io::{emit_curvatures, emit_report, parse_document, GraphDocument, ReportFormat};
use curvcon::rational::Rational;
use curvcon::report::CheckId;
use curvcon::theorems::run_suite;
use curvcon::{
    curvature_at_scale, edge_connectivity, lly_curvature, vertex_connectivity,
    ConnectivityWitness, Graph, Separator, TheoremReport,
};

#[derive(Parser)]
#[command(
    name = "curvcon",
    version,
    about = "Exact Lin-Lu-Yau curvature and connectivity of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when omitted. Accepts the edge-list text
    /// format or a JSON graph document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Label used for the graph in report output.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family as an edge list.
    ///
    /// Families: complete N | cycle N | path N | kn-minus-matching N M |
    /// join2kn N T | hamming P Q | product N M | sharp-example N K |
    /// random N A/B (with --seed).
    Generate {
        family: String,
        params: Vec<String>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// RNG seed for the random family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Per-edge, per-pair, or per-scale Lin-Lu-Yau curvature.
    Curvature {
        #[command(flatten)]
        input: InputArgs,
        /// One vertex pair, e.g. --pair 0 1.
        #[arg(long, num_args = 2, value_names = ["U", "V"], conflicts_with_all = ["all_edges", "scale"])]
        pair: Option<Vec<usize>>,
        /// Every edge of the graph (the default).
        #[arg(long, conflicts_with = "scale")]
        all_edges: bool,
        /// Minimum curvature over pairs at this exact distance.
        #[arg(long)]
        scale: Option<u32>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Vertex and edge connectivity with separator / cut witnesses.
    Connectivity {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex connectivity only.
        #[arg(long, conflicts_with = "edge")]
        vertex: bool,
        /// Edge connectivity only.
        #[arg(long)]
        edge: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run theorem checks against the input graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// `all` or a comma-separated list of check ids (whitney, thm_1_1,
        /// thm_1_2, thm_3_2, thm_1_4, thm_1_5, thm_1_6, cor_1_3, lemma_2_4,
        /// lemma_4_1).
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Full report: per-edge curvature, connectivity, and every check.
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// Anything that should terminate with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Generate {
            family,
            params,
            out,
            seed,
        } => {
            let (doc, comment) = generate(&family, &params, seed)?;
            let text = doc.to_edge_list(Some(&comment));
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Curvature {
            input,
            pair,
            all_edges,
            scale,
            format,
        } => {
            let format = ReportFormat::from_str(&format)?;
            let (_, g) = load_graph(&input)?;
            let rows: Vec<(usize, usize, Rational)> = if let Some(pair) = pair {
                let (x, y) = (pair[0], pair[1]);
                vec![(x, y, lly_curvature(&g, x, y)?.value)]
            } else if let Some(scale) = scale {
                return match curvature_at_scale(&g, scale) {
                    Some(kappa) => {
                        print_scale(scale, &kappa, format);
                        Ok(ExitCode::SUCCESS)
                    }
                    None => Err(InputError(format!("no vertex pair at distance {scale}"))),
                };
            } else {
                let _ = all_edges; // the default view
                g.edges()
                    .into_iter()
                    .map(|(x, y)| Ok::<_, InputError>((x, y, lly_curvature(&g, x, y)?.value)))
                    .collect::<Result<_, _>>()?
            };
            print!("{}", emit_curvatures(&rows, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Connectivity {
            input,
            vertex,
            edge,
            format,
        } => {
            let format = ReportFormat::from_str(&format)?;
            let (_, g) = load_graph(&input)?;
            let both = vertex == edge; // neither flag set
            let vertex_witness = (vertex || both).then(|| vertex_connectivity(&g));
            let edge_witness = (edge || both).then(|| edge_connectivity(&g));
            print!(
                "{}",
                render_connectivity(vertex_witness, edge_witness, format)?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            suite,
            format,
        } => {
            let format = ReportFormat::from_str(&format)?;
            let checks = parse_suite(&suite)?;
            let (label, g) = load_graph(&input)?;
            let reports = run_suite(&[(label, g)], &checks);
            print!("{}", emit_report(&reports, format));
            Ok(exit_for(&reports))
        }
        Command::Report { input, format } => {
            let format = ReportFormat::from_str(&format)?;
            let (label, g) = load_graph(&input)?;
            let rows: Vec<(usize, usize, Rational)> = g
                .edges()
                .into_iter()
                .map(|(x, y)| Ok::<_, InputError>((x, y, lly_curvature(&g, x, y)?.value)))
                .collect::<Result<_, _>>()?;
            let vertex_witness = vertex_connectivity(&g);
            let edge_witness = edge_connectivity(&g);
            let reports = run_suite(&[(label, g)], CheckId::per_graph());
            match format {
                ReportFormat::Json => {
                    let combined = serde_json::json!({
                        "curvature": serde_json::from_str::<serde_json::Value>(
                            &emit_curvatures(&rows, ReportFormat::Json))?,
                        "connectivity": serde_json::from_str::<serde_json::Value>(
                            &render_connectivity(Some(vertex_witness), Some(edge_witness),
                                ReportFormat::Json)?)?,
                        "checks": serde_json::from_str::<serde_json::Value>(
                            &emit_report(&reports, ReportFormat::Json))?,
                    });
                    println!("{}", serde_json::to_string_pretty(&combined)?);
                }
                ReportFormat::Csv => {
                    // CSV keeps only the tabular check results.
                    print!("{}", emit_report(&reports, ReportFormat::Csv));
                }
                ReportFormat::Text => {
                    println!("edge curvature:");
                    print!("{}", emit_curvatures(&rows, ReportFormat::Text));
                    println!();
                    print!(
                        "{}",
                        render_connectivity(
                            Some(vertex_witness),
                            Some(edge_witness),
                            ReportFormat::Text
                        )?
                    );
                    println!();
                    print!("{}", emit_report(&reports, ReportFormat::Text));
                }
            }
            Ok(exit_for(&reports))
        }
    }
}

fn exit_for(reports: &[TheoremReport]) -> ExitCode {
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_graph(input: &InputArgs) -> Result<(String, Graph), InputError> {
    let (text, default_label) = match &input.input {
        Some(path) => {
            let label = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".to_string());
            (fs::read_to_string(path)?, label)
        }
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            (text, "stdin".to_string())
        }
    };
    let doc = parse_document(&text)?;
    let graph = doc.graph()?;
    let label = input.label.clone().unwrap_or(default_label);
    Ok((label, graph))
}

fn parse_suite(entries: &[String]) -> Result<Vec<CheckId>, InputError> {
    if entries.iter().any(|e| e == "all") {
        if entries.len() > 1 {
            return Err(InputError("'all' cannot be combined with check ids".into()));
        }
        return Ok(CheckId::per_graph().to_vec());
    }
    entries
        .iter()
        .map(|e| CheckId::from_str(e).map_err(InputError))
        .collect()
}

fn generate(
    family: &str,
    params: &[String],
    seed: u64,
) -> Result<(GraphDocument, String), InputError> {
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    let named = families::generate_named(family, &params, seed)?;
    let mut comment = format!("curvcon generate {family} {}", params.join(" "))
        .trim_end()
        .to_string();
    let mut doc = GraphDocument::from_graph(&named.graph);
    if let Some((x, y)) = named.marked {
        comment.push_str(&format!("\nmarked: x={x} y={y}"));
        doc.marked = Some(BTreeMap::from([("x".to_string(), x), ("y".to_string(), y)]));
    }
    Ok((doc, comment))
}

fn print_scale(scale: u32, kappa: &Rational, format: ReportFormat) {
    match format {
        ReportFormat::Json => println!(
            "{}",
            serde_json::json!({
                "scale": scale,
                "kappa": { "num": kappa.numer().to_string(), "den": kappa.denom().to_string() },
            })
        ),
        ReportFormat::Csv => {
            println!("scale,kappa");
            println!("{scale},{}/{}", kappa.numer(), kappa.denom());
        }
        ReportFormat::Text => println!("kappa at scale {scale}: {kappa}"),
    }
}

fn render_connectivity(
    vertex: Option<ConnectivityWitness>,
    edge: Option<ConnectivityWitness>,
    format: ReportFormat,
) -> Result<String, InputError> {
    match format {
        ReportFormat::Json => {
            let side = |w: &ConnectivityWitness| {
                let separator = match &w.separator {
                    Separator::Vertices(vs) => serde_json::json!(vs),
                    Separator::Edges(es) => serde_json::json!(es),
                };
                serde_json::json!({
                    "value": w.value,
                    "separator": separator,
                    "components": w.components,
                })
            };
            let mut object = serde_json::Map::new();
            if let Some(w) = &vertex {
                object.insert("vertex".to_string(), side(w));
            }
            if let Some(w) = &edge {
                object.insert("edge".to_string(), side(w));
            }
            Ok(serde_json::to_string_pretty(&serde_json::Value::Object(object))? + "\n")
        }
        ReportFormat::Csv => {
            let mut out = String::from("kind,value,separator\n");
            if let Some(w) = &vertex {
                let Separator::Vertices(vs) = &w.separator else {
                    unreachable!()
                };
                let _ = writeln!(
                    out,
                    "vertex,{},\"{}\"",
                    w.value,
                    vs.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            if let Some(w) = &edge {
                let Separator::Edges(es) = &w.separator else {
                    unreachable!()
                };
                let _ = writeln!(
                    out,
                    "edge,{},\"{}\"",
                    w.value,
                    es.iter()
                        .map(|(u, v)| format!("{u}-{v}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(out)
        }
        ReportFormat::Text => {
            let mut out = String::new();
            if let Some(w) = &vertex {
                let Separator::Vertices(vs) = &w.separator else {
                    unreachable!()
                };
                let _ = writeln!(out, "vertex connectivity: {}", w.value);
                let _ = writeln!(out, "  minimum separator: {vs:?}");
                let _ = writeln!(out, "  components after removal: {:?}", w.components);
            }
            if let Some(w) = &edge {
                let Separator::Edges(es) = &w.separator else {
                    unreachable!()
                };
                let _ = writeln!(out, "edge connectivity: {}", w.value);
                let _ = writeln!(out, "  minimum cut: {es:?}");
                let _ = writeln!(out, "  components after removal: {:?}", w.components);
            }
            Ok(out)
        }
    }
}
