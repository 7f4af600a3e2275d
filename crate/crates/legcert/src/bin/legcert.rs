use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legcert::diagram::{RenderOptions, render_svg};
use legcert::pipeline::{
    BatchOutcome, Certificate, Config, Family, Input, PipelineError, batch, certify, explain, summary_table, verify,
};
use legcert::rational::{Q, parse_q};

const CERTIFIED: u8 = 0;
const INCONCLUSIVE: u8 = 2;
const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "legcert",
    version,
    about = "Certify vanishing contact homology and tightness of contact +1 surgeries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one knot; exit 0 when certified, 2 when inconclusive, 3 on input errors.
    Certify(CertifyArgs),
    /// Draw a diagram as SVG.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "FILE")]
        svg: PathBuf,
        #[arg(long, default_value_t = 60.0)]
        scale: f64,
    },
    /// Certify every member of a braid family and print a summary table.
    Batch(BatchArgs),
    /// Re-check a certificate offline.
    Verify {
        cert: PathBuf,
        /// Also print the proof narrative.
        #[arg(long)]
        explain: bool,
    },
    /// Print the proof narrative of a certificate.
    Explain { cert: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Positive braid, e.g. "p=2;1,1,1".
    #[arg(long)]
    braid: Option<String>,
    /// Diagram file (text format or JSON).
    #[arg(long, value_name = "FILE")]
    diagram: Option<PathBuf>,
}

#[derive(Args)]
struct ConfigArgs {
    /// Target Reeb chord word, e.g. α1.
    #[arg(long)]
    target: Option<String>,
    /// eps as a fraction of the smallest chord action.
    #[arg(long, default_value = "1/1000", value_parser = rational)]
    epsilon: Q,
    /// Gap factor G used by `<<` constraints.
    #[arg(long, default_value = "100", value_parser = rational)]
    gap: Q,
    /// Cross-check the verdict with exhaustive integer search over [0, N]^n.
    #[arg(long, value_name = "N")]
    oracle_box: Option<u64>,
    /// Action constraint such as "act(a8) << act(a4)"; repeatable.
    #[arg(long = "constraint")]
    constraints: Vec<String>,
    /// Slice genus of a loaded diagram's knot type.
    #[arg(long)]
    slice_genus: Option<u64>,
    /// Longest candidate word enumerated for generic diagrams.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
}

impl ConfigArgs {
    fn config(&self) -> Config {
        Config {
            target: self.target.clone(),
            epsilon_factor: self.epsilon.clone(),
            gap: self.gap.clone(),
            oracle_box: self.oracle_box,
            constraints: self.constraints.clone(),
            slice_genus: self.slice_genus,
            max_len: self.max_len,
            ..Config::default()
        }
    }
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    config: ConfigArgs,
    /// Write the certificate JSON here.
    #[arg(long, value_name = "FILE")]
    emit: Option<PathBuf>,
    /// Print the proof narrative.
    #[arg(long)]
    explain: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Torus,
    Twisted,
}

#[derive(Args)]
struct BatchArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long, default_value_t = 5)]
    pmax: usize,
    #[arg(long, default_value_t = 7)]
    qmax: usize,
    /// Strand counts for the twisted family.
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    p: Vec<usize>,
    /// Full-twist exponents q of the twisted family.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    q: Vec<usize>,
    /// Exponents r of the inner twist on p - 1 strands.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    r: Vec<usize>,
    /// Directory of cached certificates keyed by input and parameters.
    #[arg(long, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Write one certificate per member into this directory.
    #[arg(long, value_name = "DIR")]
    emit_dir: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
}

fn rational(s: &str) -> Result<Q, String> {
    parse_q(s).ok_or_else(|| format!("not a rational number: {s}"))
}

fn read(path: &Path) -> Result<String, PipelineError> {
    fs::read_to_string(path).map_err(|e| PipelineError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, data: impl AsRef<[u8]>) -> Result<(), PipelineError> {
    fs::write(path, data).map_err(|e| PipelineError::Io(format!("{}: {e}", path.display())))
}

fn load_input(a: &InputArgs) -> Result<Input, PipelineError> {
    match (&a.braid, &a.diagram) {
        (Some(b), _) => Input::parse_braid(b),
        (None, Some(p)) => Input::parse_diagram(&read(p)?),
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn load_certificate(path: &Path) -> Result<Certificate, PipelineError> {
    Certificate::from_json(&read(path)?).map_err(|e| PipelineError::Json(e.to_string()))
}

fn verdict_code(c: &Certificate) -> u8 {
    if c.is_certified() { CERTIFIED } else { INCONCLUSIVE }
}

fn run(cli: Cli) -> Result<u8, PipelineError> {
    match cli.command {
        Command::Certify(a) => {
            let c = certify(&load_input(&a.input)?, &a.config.config())?;
            if let Some(p) = &a.emit {
                write(p, c.to_json())?;
            }
            if a.explain {
                print!("{}", explain(&c));
            } else {
                println!("{}", c.conclusion.statement);
            }
            Ok(verdict_code(&c))
        }
        Command::Render { input, svg, scale } => {
            let d = load_input(&input)?.diagram;
            write(&svg, render_svg(&d, &RenderOptions { scale })?)?;
            Ok(CERTIFIED)
        }
        Command::Batch(a) => {
            let family = match a.family {
                FamilyKind::Torus => Family::Torus {
                    pmax: a.pmax,
                    qmax: a.qmax,
                },
                FamilyKind::Twisted => Family::Twisted {
                    ps: a.p,
                    qs: a.q,
                    rs: a.r,
                },
            };
            let items = batch(&family, &a.config.config(), a.cache.as_deref());
            if let Some(dir) = &a.emit_dir {
                fs::create_dir_all(dir).map_err(|e| PipelineError::Io(format!("{}: {e}", dir.display())))?;
                for it in &items {
                    if let BatchOutcome::Certificate(c) = &it.outcome {
                        write(&dir.join(format!("{}.json", it.name)), c.to_json())?;
                    }
                }
            }
            print!("{}", summary_table(&items));
            let all = items
                .iter()
                .all(|i| matches!(&i.outcome, BatchOutcome::Certificate(c) if c.is_certified()));
            Ok(if all { CERTIFIED } else { INCONCLUSIVE })
        }
        Command::Verify { cert, explain: narrate } => {
            let c = load_certificate(&cert)?;
            let report = verify(&c);
            if !report.is_ok() {
                for f in &report.failures {
                    eprintln!("verify: {f}");
                }
                return Ok(INPUT_ERROR);
            }
            println!("certificate verified: {}", c.conclusion.statement);
            if narrate {
                print!("{}", explain(&c));
            }
            Ok(verdict_code(&c))
        }
        Command::Explain { cert } => {
            print!("{}", explain(&load_certificate(&cert)?));
            Ok(CERTIFIED)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { CERTIFIED });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
