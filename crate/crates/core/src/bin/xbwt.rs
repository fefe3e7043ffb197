use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use xbwt_core::container::{decode_stream, encode_stream, EncodeOptions, Transform, DEFAULT_BLOCK_SIZE};
use xbwt_core::{run_selftest, stats, AlphabetOrder};

/// Burrows-Wheeler style block transforms: BWT, BWTS, ST_k and LST_k.
#[derive(Parser)]
#[command(name = "xbwt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform IN into a container written to OUT.
    Encode {
        #[command(flatten)]
        params: Params,
        /// Raw 256-byte file listing the byte values in ascending order.
        #[arg(long, value_name = "FILE")]
        alphabet_order: Option<PathBuf>,
        input: PathBuf,
        output: PathBuf,
    },
    /// Restore the original bytes of container IN into OUT.
    Decode { input: PathBuf, output: PathBuf },
    /// Print run, move-to-front and index-overhead statistics for IN.
    Stats {
        #[command(flatten)]
        params: Params,
        /// Transform the reversal of each block instead.
        #[arg(long)]
        reverse: bool,
        input: PathBuf,
    },
    /// Check the built-in golden fixtures.
    Selftest,
}

#[derive(Args)]
struct Params {
    #[arg(long, short)]
    transform: Transform,
    /// Context order for st and lst.
    #[arg(long, short = 'k', default_value_t = 0)]
    order: usize,
    #[arg(long, default_value_t = DEFAULT_BLOCK_SIZE)]
    block_size: usize,
}

impl Params {
    fn options(&self) -> EncodeOptions {
        EncodeOptions::new(self.transform).with_order(self.order).with_block_size(self.block_size)
    }
}

fn open(path: &Path) -> Result<BufReader<File>, String> {
    File::open(path).map(BufReader::new).map_err(|e| format!("cannot open {}: {e}", path.display()))
}

fn create(path: &Path) -> Result<BufWriter<File>, String> {
    File::create(path).map(BufWriter::new).map_err(|e| format!("cannot create {}: {e}", path.display()))
}

fn read_alphabet(path: &Path) -> Result<AlphabetOrder, String> {
    let seq = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    AlphabetOrder::from_sequence(&seq).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Encode { params, alphabet_order, input, output } => {
            let mut opts = params.options();
            if let Some(path) = alphabet_order {
                opts = opts.with_alphabet(read_alphabet(&path)?);
            }
            opts.validate().map_err(|e| e.to_string())?;
            encode_stream(open(&input)?, create(&output)?, &opts).map_err(|e| e.to_string())?;
        }
        Command::Decode { input, output } => {
            decode_stream(open(&input)?, create(&output)?).map_err(|e| e.to_string())?;
        }
        Command::Stats { params, reverse, input } => {
            let report = stats(open(&input)?, &params.options(), reverse).map_err(|e| e.to_string())?;
            let mut out = io::stdout().lock();
            writeln!(out, "{report}").map_err(|e| e.to_string())?;
        }
        Command::Selftest => {
            let report = run_selftest();
            println!("{report}");
            if !report.all_passed() {
                return Err("selftest failed".into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("xbwt: {msg}");
            ExitCode::FAILURE
        }
    }
}
