//! `twoplanar`: encode CoNLL-U treebanks as bracket labels, decode labels
//! back into trees, and compute corpus reports.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::ThreadPool;
use twoplanar::Encoding;

mod commands;
mod files;

#[derive(Parser)]
#[command(name = "twoplanar", version, about)]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "TWOPLANAR_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the label file of a CoNLL-U corpus.
    Encode(EncodeArgs),
    /// Turn a label file back into CoNLL-U.
    Decode(DecodeArgs),
    /// Fraction of gold arcs that survive an encode/decode round trip.
    Coverage(CoverageArgs),
    /// Non-projectivity and 2-planarity of a treebank.
    Stats(StatsArgs),
    /// Attachment scores of a prediction against a gold corpus.
    Eval(EvalArgs),
    /// Label vocabulary sizes, and optionally unseen test labels.
    Vocab(VocabArgs),
}

#[derive(Args)]
struct EncodingArgs {
    /// 1p, 2p-greedy, 2p-prop or relpos.
    #[arg(short, long)]
    encoding: Encoding,

    /// Stay on the plane of the previous arc when both planes are allowed.
    #[arg(long)]
    switch_averse: bool,
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    encoding: EncodingArgs,

    /// CoNLL-U input, `-` for stdin.
    #[arg(short, long, default_value = "-")]
    input: PathBuf,

    /// Label file output; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    encoding: EncodingArgs,

    /// Label file, `-` for stdin.
    #[arg(short, long, default_value = "-")]
    input: PathBuf,

    /// CoNLL-U file supplying every column but HEAD and DEPREL.
    #[arg(short, long)]
    reference: Option<PathBuf>,

    /// CoNLL-U file whose UPOS column is used for rel-PoS decoding;
    /// defaults to the reference.
    #[arg(long)]
    tags: Option<PathBuf>,

    /// CoNLL-U output; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// Write the first decoded head of every token (0 when there is none)
    /// instead of a repaired tree.
    #[arg(long)]
    no_postprocess: bool,

    /// JSON-lines diagnostics file. Written by default next to the output
    /// with `--no-postprocess`.
    #[arg(long)]
    diagnostics: Option<PathBuf>,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct ReportArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CoverageArgs {
    /// Encoding to measure; all of them when absent.
    #[arg(short, long)]
    encoding: Option<Encoding>,

    #[arg(long)]
    switch_averse: bool,

    /// Gold CoNLL-U corpus.
    #[arg(short, long, default_value = "-")]
    input: PathBuf,

    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct StatsArgs {
    /// CoNLL-U corpus.
    #[arg(short, long, default_value = "-")]
    input: PathBuf,

    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    gold: PathBuf,

    #[arg(long)]
    pred: PathBuf,

    /// Add precision and recall of non-projective sentences and arcs.
    #[arg(long)]
    nonproj: bool,

    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct VocabArgs {
    /// Label files whose vocabularies are merged, e.g. train and dev.
    #[arg(short, long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,

    /// Label file checked for labels missing from the inputs.
    #[arg(long)]
    test: Option<PathBuf>,

    #[command(flatten)]
    report: ReportArgs,
}

fn pool(workers: Option<usize>) -> anyhow::Result<ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .context("cannot start worker threads")
}

/// Whether every sentence went through.
type Outcome = anyhow::Result<bool>;

fn run(cli: Cli) -> Outcome {
    let pool = pool(cli.workers)?;
    match cli.command {
        Command::Encode(args) => commands::encode(&pool, args),
        Command::Decode(args) => commands::decode(&pool, args),
        Command::Coverage(args) => commands::coverage(&pool, args),
        Command::Stats(args) => commands::stats(&pool, args),
        Command::Eval(args) => commands::eval(args),
        Command::Vocab(args) => commands::vocab(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
