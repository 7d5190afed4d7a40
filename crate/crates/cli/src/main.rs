mod draw;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use planar_cages::bounds::{known_bounds_table, regular_report, CageParams};
use planar_cages::error::BoundsError;
use planar_cages::families::FamilySpec;
use planar_cages::graph::{encode_graph6, parse_graph_text, write_edge_list, SimpleGraph};
use planar_cages::search::{enumerate, min_order, SearchOptions};
use planar_cages::verify::{self, certify};

#[derive(Parser)]
#[command(name = "pcage", version, about = "Planar regular and biregular cages: constructions, bounds and searches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance, e.g. `construct O 4 6` or `construct platonic cube`.
    Construct {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Known bounds for `r m g` (biregular) or `k g` (regular).
    Bounds {
        #[arg(num_args = 2..=3, required = true)]
        degrees: Vec<u32>,
    },
    /// Regenerate a bound table: `lower`, `3`, `4`, `5` or `6` (girth 6 and up).
    Table { which: String },
    /// Certify a graph6 or edge-list file against `r m g` or `k g`.
    Check {
        path: PathBuf,
        #[arg(num_args = 2..=3, required = true)]
        degrees: Vec<u32>,
    },
    /// Exhaustive search at one order (`--n`) or up to an order (`--max-n`).
    Search {
        #[arg(num_args = 2..=3, required = true)]
        degrees: Vec<u32>,
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Also accept disconnected graphs.
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// Draw a planar graph as SVG. The source is a file path, `-`, or a family.
    Draw {
        #[arg(required = true)]
        source: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Failure that maps to exit code 1 rather than 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Violation(String);

fn params_from(degrees: &[u32]) -> Result<CageParams> {
    Ok(match *degrees {
        [k, g] => CageParams::regular(k, g)?,
        [r, m, g] => CageParams::biregular(r, m, g)?,
        _ => bail!("expected `r m g` or `k g`"),
    })
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<SimpleGraph> {
    let text = read_input(path)?;
    parse_graph_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_output(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn serialize(g: &SimpleGraph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => encode_graph6(g)? + "\n",
        Format::Edgelist => write_edge_list(g),
        Format::Dot => to_dot(g),
        Format::Svg => draw::render_svg(g).map_err(|e| Violation(e.to_string()))?,
    })
}

fn family(tag: &str, params: &[String]) -> Result<SimpleGraph> {
    let args: Vec<&str> = params.iter().map(String::as_str).collect();
    let spec = FamilySpec::parse(tag, &args)?;
    Ok(spec.build()?)
}

fn max_r(g: u32) -> u32 {
    (2 * g - 1) / (g - 2)
}

fn cmd_bounds(degrees: &[u32]) -> Result<ExitCode> {
    let params = params_from(degrees)?;
    let report = match params {
        CageParams::Regular { k, g } => regular_report(k, g),
        CageParams::Biregular { r, m, g } => known_bounds_table(r, m, g),
    };
    match report {
        Ok(rep) => {
            println!("{rep}");
            Ok(ExitCode::SUCCESS)
        }
        Err(BoundsError::Infeasible { r, m, g }) => {
            println!("params: ({{{r},{m}}};{g})");
            println!("infeasible: r(g-2) < 2g fails, girth {g} allows r <= {}", max_r(g));
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_table(which: &str) -> Result<ExitCode> {
    let table = match which {
        "lower" => verify::corollary_table()?,
        "3" => verify::girth3_table()?,
        "4" => verify::girth4_table()?,
        "5" => verify::girth5_table()?,
        "6" => verify::girth6_table()?,
        _ => bail!("unknown table {which:?}; expected lower, 3, 4, 5 or 6"),
    };
    print!("{table}");
    let bad = table.mismatches().len();
    if bad > 0 {
        eprintln!("{bad} mismatched rows");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(path: &Path, degrees: &[u32]) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let params = params_from(degrees)?;
    let cert = certify(&g, params);
    print!("{cert}");
    Ok(if cert.status.is_violation() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_search(degrees: &[u32], n: Option<usize>, max_n: Option<usize>, opts: SearchOptions) -> Result<ExitCode> {
    let params = params_from(degrees)?;
    let start = Instant::now();
    let outcome = match (n, max_n) {
        (Some(n), _) => enumerate(params, n, &opts)?,
        (None, Some(max)) => min_order(params, max, &opts)?,
        (None, None) => bail!("one of --n or --max-n is required"),
    };
    print!("{outcome}");
    eprintln!("elapsed {:.3}s, {} nodes", start.elapsed().as_secs_f64(), outcome.stats().total_nodes());
    Ok(if outcome.exhaustive { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_draw(source: &[String], output: Option<&Path>) -> Result<ExitCode> {
    let first = Path::new(&source[0]);
    let g = if source.len() == 1 && (first == Path::new("-") || first.is_file()) {
        read_graph(first)?
    } else {
        let rest = if source[0] == "family" { &source[1..] } else { source };
        let Some((tag, params)) = rest.split_first() else { bail!("missing family name") };
        family(tag, params)?
    };
    let svg = draw::render_svg(&g).map_err(|e| Violation(e.to_string()))?;
    write_output(output, &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { family: tag, params, format, output } => {
            let g = family(&tag, &params)?;
            write_output(output.as_deref(), &serialize(&g, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { degrees } => cmd_bounds(&degrees),
        Command::Table { which } => cmd_table(&which),
        Command::Check { path, degrees } => cmd_check(&path, &degrees),
        Command::Search { degrees, n, max_n, threads, checkpoint, allow_disconnected } => {
            let opts = SearchOptions { threads, checkpoint, connected_only: !allow_disconnected, ..Default::default() };
            cmd_search(&degrees, n, max_n, opts)
        }
        Command::Draw { source, output } => cmd_draw(&source, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Violation>() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
