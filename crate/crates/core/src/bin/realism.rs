use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use realism::codes::CodeName;
use realism::commands::{self, Outcome, DEFAULT_KS_BUDGET, DEFAULT_SEARCH_BUDGET};
use realism::selftest::SelftestConfig;
use realism::{Codeword, Error, Exec, PauliLetter};

const REPORT_DIR_VAR: &str = "REALISM_REPORT_DIR";

#[derive(Parser)]
#[command(name = "realism", version, about = "Exact checks of local-realism contradictions built from quantum codewords")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run every batch loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeArg {
    Five,
    Mermin,
    Steane,
}

impl From<CodeArg> for CodeName {
    fn from(c: CodeArg) -> Self {
        match c {
            CodeArg::Five => CodeName::Five,
            CodeArg::Mermin => CodeName::Mermin,
            CodeArg::Steane => CodeName::Steane,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LetterArg {
    X,
    Y,
    Z,
}

#[derive(Subcommand)]
enum Command {
    /// Close the stabilizer group and check signs, sign-stable subgroup and error correction.
    VerifyCode {
        #[arg(long, value_enum)]
        code: CodeArg,
    },
    /// List the ways of predicting one single-qubit observable from the other qubits.
    Reality {
        #[arg(long, value_enum)]
        code: CodeArg,
        /// 1-based qubit index.
        #[arg(long)]
        site: usize,
        #[arg(long, value_enum)]
        letter: LetterArg,
        #[arg(long, default_value = "0")]
        codeword: Codeword,
    },
    /// Six-operator parity contradiction on both five-qubit codewords.
    Pentagon,
    /// The 6×13 operator array.
    Array,
    /// Build the 104 projectors, enumerate contexts and search for a colouring.
    Ks {
        /// Node budget for context enumeration.
        #[arg(long, default_value_t = DEFAULT_KS_BUDGET)]
        budget: u64,
        /// Include vertex table, edge list and contexts in the report.
        #[arg(long)]
        export: bool,
    },
    /// Search the Steane group for parity contradictions.
    SteaneSearch {
        #[arg(long, default_value_t = 10)]
        max: usize,
        #[arg(long, default_value = "0")]
        codeword: Codeword,
        /// Keep at most this many contradictions per size (0 keeps all).
        #[arg(long, default_value_t = 1)]
        per_size: usize,
        /// Node budget per search subtree.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Compare the Pauli algebra with dense matrices on seeded random samples.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 200)]
        triples: usize,
    },
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match &cli.command {
        Command::VerifyCode { code } => commands::verify_code((*code).into(), exec),
        Command::Reality { code, site, letter, codeword } => {
            let letter = match letter {
                LetterArg::X => PauliLetter::X,
                LetterArg::Y => PauliLetter::Y,
                LetterArg::Z => PauliLetter::Z,
            };
            commands::reality((*code).into(), *codeword, *site, letter)
        }
        Command::Pentagon => commands::pentagon_command(),
        Command::Array => commands::array_command(),
        Command::Ks { budget, export } => commands::ks_command(*budget, *export, exec),
        Command::SteaneSearch { max, codeword, per_size, budget } => {
            let limit = (*per_size > 0).then_some(*per_size);
            commands::steane_search(*max, *codeword, limit, *budget, exec)
        }
        Command::Selftest { seed, pairs, triples } => {
            commands::selftest_command(SelftestConfig { seed: *seed, pairs: *pairs, triples: *triples }, exec)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::BudgetExhausted { .. } => 3,
                Error::SiteOutOfRange { .. } => 2,
                _ => 1,
            });
        }
    };
    match cli.format {
        Format::Text => print!("{}", outcome.text),
        Format::Json => print!("{}", outcome.json),
    }
    if let Some(dir) = std::env::var_os(REPORT_DIR_VAR) {
        let path = PathBuf::from(dir).join(outcome.file_name());
        if let Err(e) = std::fs::create_dir_all(path.parent().expect("joined path")).and_then(|_| std::fs::write(&path, &outcome.json)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(outcome.verdict.exit_code() as u8)
}
