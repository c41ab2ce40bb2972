use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rider_count::formulas::{anassa_pk_closed, count};
use rider_count::output::{render_coeffs, CountTable, Format};
use rider_count::quasipoly::QuasiPolynomial;
use rider_count::verify::{self, Bounds, Suite};
use rider_count::Piece;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact counts of nonattacking bishops and anassas on square boards.
#[derive(Parser, Debug)]
#[command(name = "rider-count", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the number of nonattacking placements of k pieces on an m×m board.
    Count {
        piece: String,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// Anassa only: require exactly this many pieces strictly below the diagonal.
        #[arg(long, allow_negative_numbers = true)]
        below: Option<i64>,
    },
    /// Print the triangle of counts for m = 0..=M_MAX.
    Table {
        piece: String,
        m_max: usize,
        /// Anassa only: require exactly this many pieces strictly below the diagonal.
        #[arg(long)]
        below: Option<usize>,
        /// Pad every row with zeros to the width of the longest row.
        #[arg(long)]
        rectangular: bool,
        /// First index of a b-file.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
        /// Label written into the b-file header and JSON output.
        #[arg(long)]
        sequence_id: Option<String>,
    },
    /// Print the quasi-polynomial coefficients c_0..c_2k, one line per residue of m.
    Coeffs {
        piece: String,
        k: usize,
        /// Reduce the residue classes to the effective period.
        #[arg(long)]
        collapse: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn parse_piece(s: &str) -> Result<Piece, Failure> {
    s.parse()
        .map_err(|e: rider_count::Error| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Count { piece, m, k, below } => {
            let piece = parse_piece(&piece)?;
            let k = usize::try_from(k)
                .map_err(|_| Failure::Usage(format!("k must be nonnegative, got {k}")))?;
            let value = match below {
                None => count(piece, m, k),
                Some(p) if piece == Piece::Anassa => {
                    let p = usize::try_from(p).map_err(|_| {
                        Failure::Usage(format!("--below must be nonnegative, got {p}"))
                    })?;
                    anassa_pk_closed(m, k, p)
                }
                Some(_) => return Err(Failure::Usage("--below applies to anassas only".into())),
            };
            Ok((format!("{value}\n"), true))
        }
        Command::Table {
            piece,
            m_max,
            below,
            rectangular,
            offset,
            sequence_id,
        } => {
            let piece = parse_piece(&piece)?;
            if below.is_some() && piece != Piece::Anassa {
                return Err(Failure::Usage("--below applies to anassas only".into()));
            }
            let table = CountTable::compute(piece, m_max, below, rectangular);
            Ok((
                table.render(cli.format, offset, sequence_id.as_deref()),
                true,
            ))
        }
        Command::Coeffs { piece, k, collapse } => {
            let piece = parse_piece(&piece)?;
            let mut qp = QuasiPolynomial::for_piece(piece, k);
            if collapse {
                qp = qp.collapsed();
            }
            let text = render_coeffs(&qp, cli.format).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((text, true))
        }
        Command::Verify {
            suite,
            m_max,
            k_max,
        } => {
            let report = verify::run(suite, Bounds { m_max, k_max });
            Ok((report.to_string(), report.passed()))
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Runtime(format!("cannot write to standard output: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|(text, passed)| emit(&text, out.as_ref()).map(|_| passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}
