//! Command-line front end used by the `chaoscrypt` binary.
//!
//! Exit codes: 0 success, 2 usage, 3 image parse or file I/O, 4 key,
//! 5 Chen trajectory divergence.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{differential_test, AnalysisReport};
use crate::bench;
use crate::cipher::{decrypt, encrypt};
use crate::error::Error;
use crate::imageio::{read_pgm, write_pgm};
use crate::key::{key_space_report, SecretKey};

#[derive(Debug, Parser)]
#[command(name = "chaoscrypt", version, about = "Chaotic permutation-diffusion cipher for 8-bit gray PGM images")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt a P5 PGM image.
    Encrypt(CryptArgs),
    /// Decrypt a P5 PGM image.
    Decrypt(CryptArgs),
    /// Entropy, correlation and histogram of an image, optionally NPCR/UACI against another.
    Analyze(AnalyzeArgs),
    /// Mean NPCR/UACI over repeated one-pixel modifications.
    Difftest(DifftestArgs),
    /// Time encryption and decryption on synthetic images.
    Bench(BenchArgs),
    /// Print the nominal key-space size.
    Keyspace,
}

#[derive(Debug, Args)]
pub struct KeyArgs {
    /// Inline key `x y z mu`.
    #[arg(long, allow_hyphen_values = true)]
    pub key: Option<String>,
    /// File holding the key on a single line.
    #[arg(long)]
    pub key_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CryptArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    #[command(flatten)]
    pub key: KeyArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Second image for NPCR/UACI.
    #[arg(long)]
    pub compare: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Also write the 256-row histogram CSV here.
    #[arg(long)]
    pub histogram_out: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DifftestArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub key: KeyArgs,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Seed for choosing the modified pixel positions.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated WIDTHxHEIGHT list.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, default_values = ["256x256", "512x512", "1024x1024"])]
    pub sizes: Vec<(usize, usize)>,
    #[arg(long, default_value_t = bench::DEFAULT_REPETITIONS)]
    pub reps: usize,
    /// Seed for the synthetic plaintexts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub key: KeyArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("`{s}` is not WIDTHxHEIGHT"))?;
    let w: usize = w.trim().parse().map_err(|_| format!("bad width in `{s}`"))?;
    let h: usize = h.trim().parse().map_err(|_| format!("bad height in `{s}`"))?;
    if w == 0 || h == 0 {
        return Err(format!("`{s}` has a zero dimension"));
    }
    Ok((w, h))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Failed {
        context: String,
        #[source]
        source: Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed { source, .. } => match source {
                Error::InvalidKey(_) => 4,
                Error::Divergence { .. } => 5,
                _ => 3,
            },
        }
    }
}

trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for Result<T, Error> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|source| CliError::Failed {
            context: what(),
            source,
        })
    }
}

impl KeyArgs {
    fn resolve(&self) -> Result<SecretKey, CliError> {
        match (&self.key, &self.key_file) {
            (Some(inline), file) => {
                if file.is_some() {
                    eprintln!("warning: both --key and --key-file given, using --key");
                }
                inline.parse().context(|| "inline key".into())
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read key file {}: {e}", path.display()))
                })?;
                text.parse().context(|| format!("key file {}", path.display()))
            }
            (None, None) => Err(CliError::Usage("a key is required: pass --key or --key-file".into())),
        }
    }

    fn resolve_or_default(&self) -> Result<SecretKey, CliError> {
        if self.key.is_none() && self.key_file.is_none() {
            Ok(SecretKey::new(3.0, 4.0, 5.0, 3.999).expect("valid default key"))
        } else {
            self.resolve()
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(Error::from)
            .context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<crate::buffer::PixelBuffer, CliError> {
    read_pgm(path).context(|| format!("reading {}", path.display()))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Encrypt(args) => run_crypt(args, true),
        Command::Decrypt(args) => run_crypt(args, false),
        Command::Analyze(args) => run_analyze(args),
        Command::Difftest(args) => run_difftest(args),
        Command::Bench(args) => run_bench(args),
        Command::Keyspace => {
            let ks = key_space_report();
            println!(
                "key space: {ks} ({} parameters x {} significant digits)",
                ks.parameters, ks.digits_per_parameter
            );
            Ok(())
        }
    }
}

pub fn run_crypt(args: CryptArgs, encrypting: bool) -> Result<(), CliError> {
    let key = args.key.resolve()?;
    let input = load(&args.input)?;
    let start = Instant::now();
    let (verb, output) = if encrypting {
        ("encrypted", encrypt(&input, &key))
    } else {
        ("decrypted", decrypt(&input, &key))
    };
    let output = output.context(|| format!("processing {}", args.input.display()))?;
    let elapsed = start.elapsed();
    write_pgm(&output, &args.output).context(|| format!("writing {}", args.output.display()))?;
    eprintln!(
        "{verb} {}x{} in {:.2} ms",
        output.width(),
        output.height(),
        elapsed.as_secs_f64() * 1e3
    );
    Ok(())
}

pub fn run_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let img = load(&args.input)?;
    let other = args.compare.as_deref().map(load).transpose()?;
    let report = AnalysisReport::of(&img, other.as_ref()).context(|| "analysis".into())?;
    if let Some(path) = &args.histogram_out {
        std::fs::write(path, report.histogram_csv())
            .map_err(Error::from)
            .context(|| format!("writing {}", path.display()))?;
    }
    let text = match args.format {
        ReportFormat::Text => format!("{report}\n"),
        ReportFormat::Csv => report.metrics_csv(),
    };
    emit(args.out.as_deref(), &text)
}

pub fn run_difftest(args: DifftestArgs) -> Result<(), CliError> {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let key = args.key.resolve()?;
    let img = load(&args.input)?;
    let summary = differential_test(&img, &key, args.trials, args.seed).context(|| "differential test".into())?;
    let text = match args.format {
        ReportFormat::Text => format!(
            "trials {}\nmean NPCR {:.4}% (se {:.4})\nmean UACI {:.4}% (se {:.4})\n",
            summary.trials, summary.mean_npcr, summary.npcr_std_error, summary.mean_uaci, summary.uaci_std_error
        ),
        ReportFormat::Csv => format!(
            "name,value\ntrials,{}\nmean_npcr,{}\nmean_uaci,{}\nnpcr_std_error,{}\nuaci_std_error,{}\n",
            summary.trials, summary.mean_npcr, summary.mean_uaci, summary.npcr_std_error, summary.uaci_std_error
        ),
    };
    emit(args.out.as_deref(), &text)
}

pub fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let key = args.key.resolve_or_default()?;
    let results = bench::run(&args.sizes, args.reps, &key, args.seed).context(|| "benchmark".into())?;
    emit(args.out.as_deref(), &bench::to_csv(&results))
}
