use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use spectral_stability::experiment::{
    analyze, certify, emit_report, run_probe, ExperimentConfig, Mode,
};
use spectral_stability::graph::{random_graph_fixed_edges, turan_graph, Graph};
use spectral_stability::io::{parse_edge_list, write_edge_list};
use spectral_stability::stability::{
    check_certificate, derived_params, CertificateDocument, Overrides,
};

#[derive(Parser)]
#[command(name = "specstab", version, about = "Spectral stability certificates for K_{r+1}-rich graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius, clique count and joint number of a graph.
    Analyze {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Runs the dichotomy on a graph and writes a checked certificate.
    Dichotomy {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Random graphs at Turán density: JSON report plus CSV table.
    Probe {
        #[arg(long)]
        n: usize,
        /// Edge count; defaults to ceil((1 - 1/r) n^2 / 2).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        params: ParamArgs,
        /// Report path; the CSV table goes next to it. Without it the CSV
        /// is printed.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Fill the `ms` column with wall-clock times.
        #[arg(long)]
        timing: bool,
    },
    /// Writes a random graph or a Turán graph as an edge list.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "turan")]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit T_r(n) instead of a random graph.
        #[arg(long, value_name = "R")]
        turan: Option<usize>,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Re-checks a certificate document against a graph.
    Verify {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 0.5)]
    c: f64,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    joint_threshold: Option<f64>,
    #[arg(long)]
    edit_budget: Option<u64>,
    /// Part size of the multipartite search when c ln n < 1.
    #[arg(long)]
    s: Option<usize>,
}

impl ParamArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            joint_threshold: self.joint_threshold,
            edit_budget: self.edit_budget,
            part_size_s: self.s,
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { input, r, eps, output } => {
            let g = read_graph(&input)?;
            let a = analyze(&g, r, eps).map_err(anyhow::Error::msg)?;
            let mut text = serde_json::to_string_pretty(&a)?;
            text.push('\n');
            emit(output.as_deref(), &text)?;
        }
        Command::Dichotomy { input, params, output } => {
            let g = read_graph(&input)?;
            let p = derived_params(params.r, params.c, params.eps, g.n(), params.overrides())?;
            let doc = certify(&g, &p).map_err(anyhow::Error::msg)?;
            eprintln!(
                "condition {} ({}), verified: {}",
                doc.certificate.tag(),
                doc.certificate.headline(),
                doc.verdict.valid
            );
            emit(output.as_deref(), &format!("{}\n", doc.to_json()))?;
            if !doc.verdict.valid {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Probe { n, m, trials, seed, params, output, timing } => {
            let cfg = ExperimentConfig {
                mode: Mode::Probe,
                r: params.r,
                c: params.c,
                eps: params.eps,
                n,
                m,
                trials,
                seed,
                overrides: params.overrides(),
                input: None,
                output: output.clone(),
                record_timing: timing,
            };
            let report = run_probe(&cfg)?;
            match output {
                Some(p) => emit_report(&report, &p)?,
                None => print!("{}", report.to_csv()),
            }
            if report.aggregate.failed > 0 {
                eprintln!("{} of {trials} trials failed", report.aggregate.failed);
                return Ok(ExitCode::from(2));
            }
        }
        Command::Generate { n, m, seed, turan, output } => {
            let g = match (turan, m) {
                (Some(r), _) => turan_graph(n, r)?,
                (None, Some(m)) => random_graph_fixed_edges(n, m, seed)?,
                (None, None) => bail!("give --m or --turan"),
            };
            emit(output.as_deref(), &write_edge_list(&g))?;
        }
        Command::Verify { input, cert } => {
            let g = read_graph(&input)?;
            let text = fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let doc = CertificateDocument::from_json(&text)
                .with_context(|| format!("parsing {}", cert.display()))?;
            let verdict = check_certificate(&g, &doc.certificate, &doc.params);
            if verdict.valid {
                println!("valid");
            } else {
                println!("invalid: {}", verdict.reason.unwrap_or_default());
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
