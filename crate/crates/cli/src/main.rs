use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use itn::eval::{evaluate, load_corpus};
use itn::{DataDir, ItnError, Normalizer, WeightPolicy};
use log::warn;
use wfst::FstError;

/// Inverse text normalization: spoken-form English to written form.
#[derive(Debug, Parser)]
#[command(name = "itn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalize TEXT, or each line of --input-file or standard input.
    Normalize {
        text: Option<String>,
        #[arg(long, value_name = "F", conflicts_with = "text")]
        input_file: Option<PathBuf>,
        /// Also print the tagged classifier output to standard error.
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        grammars: GrammarSource,
    },
    /// Compile the grammars and write them to an archive.
    Export {
        #[arg(long, value_name = "F")]
        out: PathBuf,
        #[arg(long, value_name = "D")]
        data_dir: Option<PathBuf>,
    },
    /// Score the pipeline on a corpus in the Google TN layout.
    Evaluate {
        #[arg(long, value_name = "F")]
        corpus: PathBuf,
        /// Print `class<TAB>count<TAB>accuracy<TAB>wer` lines instead of a table.
        #[arg(long)]
        tsv: bool,
        #[command(flatten)]
        grammars: GrammarSource,
    },
}

/// Where the compiled grammars come from: built from TSV tables (the
/// bundled ones by default) or loaded from an archive.
#[derive(Debug, Args)]
struct GrammarSource {
    #[arg(long, value_name = "D", conflicts_with = "archive")]
    data_dir: Option<PathBuf>,
    #[arg(long, value_name = "A")]
    archive: Option<PathBuf>,
}

impl GrammarSource {
    fn load(&self) -> Result<Normalizer, ItnError> {
        match (&self.archive, &self.data_dir) {
            (Some(archive), _) => Normalizer::load_archive(archive),
            (None, data_dir) => build(data_dir.as_deref()),
        }
    }
}

fn build(data_dir: Option<&Path>) -> Result<Normalizer, ItnError> {
    let data = data_dir.map_or_else(DataDir::bundled, DataDir::new);
    Normalizer::from_data_dir(&data, &WeightPolicy::default())
}

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_FORMAT: u8 = 3;

enum Failure {
    Itn(ItnError),
    Io(io::Error, Option<PathBuf>),
}

impl From<ItnError> for Failure {
    fn from(e: ItnError) -> Self {
        Failure::Itn(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e, None)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(..) => EXIT_IO,
            Failure::Itn(ItnError::Io { .. } | ItnError::Fst(FstError::Io { .. })) => EXIT_IO,
            Failure::Itn(_) => EXIT_FORMAT,
        }
    }

    fn report(&self) {
        match self {
            Failure::Itn(e) => eprintln!("itn: {e}"),
            Failure::Io(e, Some(path)) => eprintln!("itn: {}: {e}", path.display()),
            Failure::Io(e, None) => eprintln!("itn: {e}"),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        // A closed pipe downstream (`itn normalize | head`) is not an error.
        Err(Failure::Io(e, None)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(f) => {
            f.report();
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Normalize {
            text,
            input_file,
            verbose,
            grammars,
        } => {
            let normalizer = grammars.load()?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if let Some(text) = text {
                // A TEXT argument may itself span several lines.
                for line in text.split('\n') {
                    normalize_line(&normalizer, line, verbose, &mut out)?;
                }
            } else if let Some(path) = input_file {
                let file = File::open(&path).map_err(|e| Failure::Io(e, Some(path.clone())))?;
                normalize_lines(&normalizer, BufReader::new(file), verbose, &mut out).map_err(
                    |e| match e {
                        Failure::Io(e, None) if e.kind() != io::ErrorKind::BrokenPipe => {
                            Failure::Io(e, Some(path.clone()))
                        }
                        other => other,
                    },
                )?;
            } else {
                normalize_lines(&normalizer, io::stdin().lock(), verbose, &mut out)?;
            }
            out.flush()?;
        }
        Command::Export { out, data_dir } => {
            build(data_dir.as_deref())?.save_archive(&out)?;
        }
        Command::Evaluate {
            corpus,
            tsv,
            grammars,
        } => {
            let corpus = load_corpus(&corpus)?;
            let normalizer = grammars.load()?;
            let report = evaluate(&corpus, &normalizer);
            let mut out = BufWriter::new(io::stdout().lock());
            if tsv {
                out.write_all(report.to_tsv().as_bytes())?;
            } else {
                out.write_all(report.to_table().as_bytes())?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn normalize_lines(
    normalizer: &Normalizer,
    input: impl BufRead,
    verbose: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    for line in input.lines() {
        normalize_line(normalizer, &line?, verbose, out)?;
    }
    Ok(())
}

/// Writes the written form of `line`. Input the grammars cannot handle is
/// passed through unchanged with a warning.
fn normalize_line(
    normalizer: &Normalizer,
    line: &str,
    verbose: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    match normalizer.inverse_normalize_verbose(line) {
        Ok(n) => {
            if verbose {
                eprintln!("{}", n.tagged);
            }
            writeln!(out, "{}", n.written)?;
        }
        Err(e) => {
            warn!("{line:?}: {e}");
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}
