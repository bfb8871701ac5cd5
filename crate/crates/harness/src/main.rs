use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zagreb_harness::extremal::parse_params;
use zagreb_harness::{emit_extremal, run_sweep, Check, CorpusSource, HarnessError, SweepOptions};

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Exhaustive checks of first-Zagreb-index conditions on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// graph6 corpus, one graph per line
    #[arg(long)]
    input: Option<PathBuf>,
    /// Enumerate every labeled graph on N vertices (N <= 7)
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks over a corpus and report violations
    Verify {
        #[command(flatten)]
        source: Source,
        /// Restrict enumeration to connected graphs
        #[arg(long)]
        connected_only: bool,
        /// Comma-separated: t1,t2,t3,ce,ce_ham,ce_trace,moon,jackson,sandwich,roundtrip,all
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the text report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write one CSV record per check here
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Emit extremal graphs as graph6 lines
    Extremal {
        /// kkp1 (K_{k,k+1}), kkp2 (K_{k,k+2}) or t3family
        #[arg(long)]
        kind: String,
        /// k, k1,k2 or n,beta,delta
        #[arg(long)]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of M1 relative to the upper bound
    Stats {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "t3")]
        bound: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn write(path: &Path, contents: &str) -> Result<(), HarnessError> {
    fs::write(path, contents).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::Verify {
            source,
            connected_only,
            checks,
            jobs,
            report,
            csv,
        } => {
            let source = match (source.input, source.enumerate) {
                (Some(path), _) => CorpusSource::File(path),
                (None, Some(n)) => CorpusSource::Enumerate { n, connected_only },
                (None, None) => unreachable!("clap enforces one source"),
            };
            let checks = Check::parse_list(&checks)?;
            let result = run_sweep(
                &source,
                &SweepOptions {
                    checks,
                    jobs,
                    tightness: false,
                },
            )?;
            let text = result.render_text();
            print!("{text}");
            if let Some(path) = report {
                write(&path, &text)?;
            }
            if let Some(path) = csv {
                write(&path, &result.render_csv())?;
            }
            Ok(result.passed())
        }
        Command::Extremal { kind, params, out } => {
            let lines = emit_extremal(kind.parse()?, &parse_params(&params)?)?;
            let mut text = lines.join("\n");
            text.push('\n');
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Stats {
            input,
            bound,
            jobs,
            csv,
        } => {
            if bound != "t3" {
                return Err(HarnessError::Usage(format!("unsupported bound {bound:?}")));
            }
            let options = SweepOptions {
                checks: vec![Check::T3],
                jobs,
                tightness: true,
            };
            let result = run_sweep(&CorpusSource::File(input), &options)?;
            print!("{}", result.render_text());
            if let Some(path) = csv {
                write(&path, &result.render_tightness_csv())?;
            }
            Ok(result.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
