use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use wellcover::json::{BasisJson, MdNodeJson, SystemJson};
use wellcover::mis::size_witness;
use wellcover::{
    md_tree, parse_graph, solve, Error, Graph, GraphFormat, Rational, SolverConfig, Strategy,
    WeightVector, DEFAULT_MIS_CAP,
};

/// Well-covering systems, well-covered dimensions and modular decompositions.
///
/// Exit status: 0 success, 1 unreadable input or bad arguments, 2 strategy
/// does not apply to the graph, 3 maximal independent set cap exceeded.
#[derive(Parser)]
#[command(name = "wellcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a well-covering system, one tagged equation per line.
    System(Common),
    /// Print the well-covered dimension.
    Dimension(Common),
    /// Print a basis of the well-covered vector space.
    Basis(Common),
    /// Decide whether all maximal independent sets have the same size.
    IsWellCovered(Common),
    /// Decide whether a weighting gives all maximal independent sets equal weight.
    CheckWeighting {
        #[command(flatten)]
        common: Common,
        /// File with one rational weight per line, in vertex order.
        #[arg(long)]
        weights: PathBuf,
    },
    /// Print the modular decomposition tree.
    Mdtree(Common),
    /// Report structural properties of the graph.
    Recognize(Common),
}

#[derive(Args)]
struct Common {
    /// Graph file; standard input when omitted.
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Give up after enumerating this many maximal independent sets.
    #[arg(long, default_value_t = DEFAULT_MIS_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    mis_cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Bruteforce,
    Cograph,
    Modular,
    Forkfree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

impl Common {
    fn config(&self) -> SolverConfig {
        let strategy = match self.strategy {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Bruteforce => Strategy::Bruteforce,
            StrategyArg::Cograph => Strategy::Cograph,
            StrategyArg::Modular => Strategy::Modular,
            StrategyArg::Forkfree => Strategy::ForkFree,
        };
        SolverConfig {
            strategy,
            mis_cap: self.mis_cap as usize,
            ..SolverConfig::default()
        }
    }

    fn graph(&self) -> anyhow::Result<Graph> {
        let text = read_input(self.path.as_ref())?;
        let format = match self.format {
            Format::EdgeList => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        };
        Ok(parse_graph(&text, format)?)
    }

    fn json(&self) -> bool {
        self.output == Output::Json
    }
}

fn read_input(path: Option<&PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(text)
        }
    }
}

fn read_weights(path: &PathBuf, n: usize) -> anyhow::Result<WeightVector> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let w = Rational::from_str(line).map_err(|_| {
            anyhow!(
                "{}:{}: `{line}` is not a rational number",
                path.display(),
                i + 1
            )
        })?;
        values.push(w);
    }
    if values.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: values.len(),
        })
        .context("weights file");
    }
    Ok(WeightVector(values))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serialisable") + "\n"
}

fn run(cli: Cli) -> anyhow::Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::System(c) => {
            let g = c.graph()?;
            let (system, _) = solve(&g, &c.config())?;
            if c.json() {
                out = pretty(&SystemJson::from(&system));
            } else {
                for row in system.rows() {
                    writeln!(out, "{row}    [{}]", row.tag)?;
                }
            }
        }
        Command::Dimension(c) => {
            let g = c.graph()?;
            let (system, strategy) = solve(&g, &c.config())?;
            let dim = g.n() - system.rank();
            if c.json() {
                out = pretty(&json!({ "dimension": dim, "strategy": strategy.as_str() }));
            } else {
                writeln!(out, "{dim}")?;
            }
        }
        Command::Basis(c) => {
            let g = c.graph()?;
            let (system, _) = solve(&g, &c.config())?;
            let basis = system.null_space();
            if c.json() {
                out = pretty(&BasisJson::new(g.n(), &basis));
            } else {
                for v in &basis.vectors {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::IsWellCovered(c) => {
            let g = c.graph()?;
            let cfg = c.config();
            let (system, strategy) = solve(&g, &cfg)?;
            let answer = system.satisfied_by(&WeightVector::ones(g.n()))?;
            let witness = if !answer && strategy == Strategy::Bruteforce {
                size_witness(&g, cfg.mis_cap)?
            } else {
                None
            };
            if c.json() {
                let witness = witness.as_ref().map(|(a, b)| {
                    json!([
                        { "set": a.as_slice(), "weight": a.len() },
                        { "set": b.as_slice(), "weight": b.len() },
                    ])
                });
                out = pretty(&json!({
                    "well_covered": answer,
                    "strategy": strategy.as_str(),
                    "witness": witness,
                }));
            } else {
                writeln!(out, "{}", yes_no(answer))?;
                if let Some((a, b)) = witness {
                    writeln!(out, "{a} weight {}", a.len())?;
                    writeln!(out, "{b} weight {}", b.len())?;
                }
            }
        }
        Command::CheckWeighting { common: c, weights } => {
            let g = c.graph()?;
            let w = read_weights(&weights, g.n())?;
            let (system, strategy) = solve(&g, &c.config())?;
            let answer = system.satisfied_by(&w)?;
            if c.json() {
                out = pretty(&json!({ "w_well_covered": answer, "strategy": strategy.as_str() }));
            } else {
                writeln!(out, "{}", yes_no(answer))?;
            }
        }
        Command::Mdtree(c) => {
            let g = c.graph()?;
            let tree = md_tree(&g)?;
            if c.json() {
                out = pretty(&MdNodeJson::from(&tree));
            } else {
                write!(out, "{tree}")?;
            }
        }
        Command::Recognize(c) => {
            let g = c.graph()?;
            let flags = [
                ("claw-free", g.is_claw_free()),
                ("fork-free", g.is_fork_free()),
                ("P4-free", g.is_p4_free()),
                ("prime", wellcover::is_prime(&g)),
                ("connected", g.is_connected()),
                ("co-connected", g.is_co_connected()),
            ];
            if c.json() {
                let map: serde_json::Map<String, serde_json::Value> = flags
                    .iter()
                    .map(|&(k, v)| (k.to_string(), v.into()))
                    .collect();
                out = pretty(&map);
            } else {
                for (k, v) in flags {
                    writeln!(out, "{k}: {v}")?;
                }
            }
        }
    }
    Ok(out)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::StrategyInapplicable { .. }) => 2,
        Some(Error::CapExceeded { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("wellcover: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
