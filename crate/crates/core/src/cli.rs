//! Command-line front end. [`run`] takes the argument list and output
//! streams so it can be driven from tests; the binary is a thin wrapper.
//!
//! Exit status: 0 on success, 1 when a verification fails or a search is
//! truncated, 2 on bad input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ball::{classify_sharp, enumerate_quartic, BallTypeId, IncompleteTwoBall};
use crate::catalog::{check_bonnet_myers, published_extensions, verify_named, NONNEG_TOL};
use crate::curvature::{format_sig12, k_infinity, ser_sig12, CurvatureReport, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::NamedGraph;
use crate::search::{search_from_seed, SearchConfig, SearchOutcome, DEFAULT_MAX_VERTICES};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "quartic-sharp", version, about = "Bakry-Emery curvature of quartic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Nonneg,
    Sharp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Curvature at vertices of a graph read from an edge list.
    Curvature {
        #[arg(long)]
        input: PathBuf,
        /// Only this vertex (default: every vertex).
        #[arg(long, conflicts_with = "all")]
        vertex: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Curvature at the centre of an incomplete 2-ball given as JSON.
    Ball {
        #[arg(long)]
        json: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// All quartic incomplete 2-balls up to isomorphism, with curvatures.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Write the catalogue here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Checks the eight classified graphs end to end.
    VerifyClassification {
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Completes sharp seed balls into globally sharp quartic graphs.
    Search {
        /// A sharp ball type such as `4.5`, or `all`.
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long)]
        no_rigidity_prune: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for one edge-list file per completed graph and a
        /// `summary.json`.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Builds one of the eight classified graphs.
    Named {
        name: String,
        #[arg(long)]
        emit_edges: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Verification { .. } | Error::Inconsistent(_) => EXIT_MISMATCH,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Curvature {
            input,
            vertex,
            all: _,
            tol,
            format,
        } => {
            let g = Graph::parse_edge_list(&read(&input)?)?;
            let vertices: Vec<usize> = match vertex {
                Some(v) if v >= g.n() => {
                    return Err(Error::input(format!("vertex {v} outside 0..{}", g.n())))
                }
                Some(v) => vec![v],
                None => (0..g.n()).collect(),
            };
            let reports = vertices
                .iter()
                .map(|&v| Ok((v, k_infinity(&IncompleteTwoBall::extract(&g, v)?, tol)?)))
                .collect::<Result<Vec<_>>>()?;
            match format {
                Format::Tsv => {
                    writeln!(out, "vertex\t{}", REPORT_HEADER)?;
                    for (v, r) in &reports {
                        writeln!(out, "{v}\t{}", report_tsv(r))?;
                    }
                }
                Format::Json if vertex.is_some() => writeln!(out, "{}", reports[0].1.to_json())?,
                Format::Json => {
                    let list: Vec<&CurvatureReport> = reports.iter().map(|(_, r)| r).collect();
                    writeln!(out, "{}", serde_json::to_string(&list)?)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ball { json, tol, format } => {
            let ball = IncompleteTwoBall::from_json(&read(&json)?)?;
            let r = k_infinity(&ball, tol)?;
            match format {
                Format::Tsv => writeln!(out, "{REPORT_HEADER}\n{}", report_tsv(&r))?,
                Format::Json => writeln!(out, "{}", r.to_json())?,
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            filter,
            out: path,
            format,
            jobs,
        } => {
            let rows = with_jobs(jobs, || catalogue(filter))??;
            let text = match format {
                Format::Tsv => {
                    let mut s = String::from("structure\tball\tk_infinity\tsharp\tball_type\n");
                    for r in &rows {
                        s.push_str(&format!(
                            "{}\t{}\t{}\t{}\t{}\n",
                            r.structure,
                            r.ball.to_json(),
                            format_sig12(r.k_infinity),
                            r.sharp,
                            r.ball_type.map_or("-".to_string(), |t| t.to_string())
                        ));
                    }
                    s
                }
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            match path {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::VerifyClassification { format } => verify_classification(format, out),
        Command::Search {
            seed,
            max_vertices,
            no_rigidity_prune,
            jobs,
            out_dir,
        } => {
            let seeds: Vec<BallTypeId> = if seed.eq_ignore_ascii_case("all") {
                BallTypeId::all().collect()
            } else {
                vec![seed.parse()?]
            };
            let config = SearchConfig {
                max_vertices,
                rigidity_prune: !no_rigidity_prune,
                jobs,
                ..SearchConfig::default()
            };
            let outcomes = seeds
                .iter()
                .map(|&s| search_from_seed(s, &config))
                .collect::<Result<Vec<_>>>()?;
            if let Some(dir) = &out_dir {
                write_search_files(dir, &outcomes)?;
            }
            let summaries: Vec<_> = outcomes.iter().map(SearchOutcome::summary).collect();
            if summaries.len() == 1 {
                writeln!(out, "{}", serde_json::to_string_pretty(&summaries[0])?)?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&summaries)?)?;
            }
            let truncated = outcomes.iter().any(|o| o.truncated > 0);
            let mismatch = outcomes.iter().any(|o| {
                let found: Vec<Option<NamedGraph>> = o.identify();
                let want: Vec<Option<NamedGraph>> =
                    published_extensions(o.seed).into_iter().map(Some).collect();
                let found: BTreeSet<_> = found.into_iter().collect();
                found != want.into_iter().collect()
            });
            Ok(if truncated || mismatch { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Named { name, emit_edges } => {
            let named: NamedGraph = name.parse()?;
            let g = named.build();
            writeln!(out, "name\tvertices\tedges\tdiameter")?;
            writeln!(out, "{named}\t{}\t{}\t{}", g.n(), g.num_edges(), g.diameter()?)?;
            if let Some(p) = emit_edges {
                fs::write(p, g.to_edge_list())?;
            }
            Ok(EXIT_OK)
        }
    }
}

const REPORT_HEADER: &str = "k_infinity\tupper_bound\tsharp\ttriangles_vertex\tdegree";

fn report_tsv(r: &CurvatureReport) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}",
        format_sig12(r.k_infinity),
        format_sig12(r.upper_bound),
        r.sharp,
        r.triangles_vertex,
        r.degree
    )
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        Some(0) => Err(Error::input("jobs must be positive")),
        Some(j) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Inconsistent(e.to_string()))?
            .install(f)),
        None => Ok(f()),
    }
}

#[derive(Serialize)]
struct CatalogueRow {
    structure: usize,
    ball: IncompleteTwoBall,
    #[serde(serialize_with = "ser_sig12")]
    k_infinity: f64,
    sharp: bool,
    ball_type: Option<BallTypeId>,
}

fn catalogue(filter: Filter) -> Result<Vec<CatalogueRow>> {
    use rayon::prelude::*;
    let rows = enumerate_quartic()
        .into_par_iter()
        .map(|ball| {
            let r = k_infinity(&ball, DEFAULT_TOL)?;
            Ok(CatalogueRow {
                structure: ball.structure_index().expect("canonical quartic ball"),
                ball_type: if r.sharp { classify_sharp(&ball) } else { None },
                k_infinity: r.k_infinity,
                sharp: r.sharp,
                ball,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows
        .into_iter()
        .filter(|r| match filter {
            Filter::All => true,
            Filter::Nonneg => r.k_infinity >= -NONNEG_TOL,
            Filter::Sharp => r.sharp,
        })
        .collect())
}

#[derive(Serialize)]
struct VerificationRow {
    name: String,
    vertices: usize,
    #[serde(serialize_with = "ser_sig12")]
    k_infinity: f64,
    diameter: usize,
    sharp_everywhere: bool,
    ball_type: String,
    #[serde(serialize_with = "ser_sig12")]
    bonnet_myers_slack: f64,
}

fn verify_classification(format: Format, out: &mut dyn Write) -> Result<u8> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for g in NamedGraph::ALL {
        match verify_named(g) {
            Ok(rec) => {
                let bm = check_bonnet_myers(&g.build())?;
                let types: Vec<String> = rec.ball_types.iter().map(|t| t.to_string()).collect();
                rows.push(VerificationRow {
                    name: rec.graph_name,
                    vertices: rec.vertex_count,
                    k_infinity: rec.curvature,
                    diameter: rec.diam,
                    sharp_everywhere: rec.sharp_everywhere,
                    ball_type: types.join(","),
                    bonnet_myers_slack: bm.slack,
                });
            }
            Err(e) => failures.push(e),
        }
    }
    match format {
        Format::Tsv => {
            writeln!(
                out,
                "name\t|V|\tK_infinity\tdiameter\tsharp_everywhere\tball_type\tbonnet_myers_slack"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.name,
                    r.vertices,
                    format_sig12(r.k_infinity),
                    r.diameter,
                    r.sharp_everywhere,
                    r.ball_type,
                    format_sig12(r.bonnet_myers_slack)
                )?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
    }
    match failures.into_iter().next() {
        Some(e) => Err(e),
        None => Ok(EXIT_OK),
    }
}

fn write_search_files(dir: &PathBuf, outcomes: &[SearchOutcome]) -> Result<()> {
    fs::create_dir_all(dir)?;
    for o in outcomes {
        for (i, (g, name)) in o.completed_graphs.iter().zip(o.identify()).enumerate() {
            let label = name.map_or_else(|| format!("graph{i}"), |n| n.to_string());
            fs::write(dir.join(format!("seed_{}_{label}.txt", o.seed)), g.to_edge_list())?;
        }
    }
    let summaries: Vec<_> = outcomes.iter().map(SearchOutcome::summary).collect();
    fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&summaries)? + "\n")?;
    Ok(())
}
