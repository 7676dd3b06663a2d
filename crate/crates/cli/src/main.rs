use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kreps_cli::{
    cmd_family, cmd_knot, cmd_surface, enum_cap_from, verify, CliError, FamilyParams, Options,
    Report, SecondBraid, SweepConfig, ENUM_CAP_VAR,
};

/// Knot determinants, colorings and metabelian representations of braid
/// closures and torus-covering T²-knots.
#[derive(Parser)]
#[command(name = "kreps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table (default)
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a braid closure
    Knot {
        /// Braid word such as "1^3" or "1 -2 1 -2"
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(short)]
        n: usize,
        /// Largest modulus in the coloring table
        #[arg(long, default_value_t = 7)]
        rmax: u64,
    },
    /// Invariants of the torus-covering T²-knot of commuting braids a, b
    Surface {
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Second basis braid; omit with --fulltwist
        #[arg(allow_hyphen_values = true, required_unless_present = "fulltwist")]
        b: Option<String>,
        #[arg(short)]
        n: usize,
        /// Use the k-th power of the full twist as b
        #[arg(long, value_name = "K", allow_negative_numbers = true, conflicts_with = "b")]
        fulltwist: Option<i64>,
        #[arg(long, default_value_t = 7)]
        rmax: u64,
    },
    /// Checks the closed-form counts on a member of the prime-power family
    Family {
        #[arg(short)]
        n: usize,
        /// Odd prime exponent
        #[arg(short)]
        p: u64,
        /// Power of the twist in the second braid
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        /// Signs ε_k, comma separated (default all +1)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Option<Vec<i8>>,
        /// 1-based permutation of 1..n-1, comma separated (default identity)
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
        #[arg(long, default_value_t = 7)]
        rmax: u64,
    },
    /// Randomized sweep comparing independent routes
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Largest strand count of random braids
        #[arg(long, default_value_t = 4)]
        max_strands: usize,
        /// Largest length of random braids
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let enum_cap = enum_cap_from(std::env::var(ENUM_CAP_VAR).ok().as_deref())?;
    let opts = |rmax| Options { rmax, enum_cap };
    match cli.command {
        Command::Knot { braid, n, rmax } => cmd_knot(&braid, n, opts(rmax)),
        Command::Surface { a, b, n, fulltwist, rmax } => {
            let b = match (b, fulltwist) {
                (_, Some(k)) => SecondBraid::FullTwist(k),
                (Some(b), None) => SecondBraid::Word(b),
                (None, None) => unreachable!("clap requires one of them"),
            };
            cmd_surface(&a, &b, n, opts(rmax))
        }
        Command::Family { n, p, m, signs, perm, rmax } => {
            let mut params = FamilyParams::standard(n, p, m);
            params.signs = signs.unwrap_or(params.signs);
            params.perm = perm.unwrap_or(params.perm);
            let report = cmd_family(&params, opts(rmax))?;
            if report.all_passed() {
                Ok(report)
            } else {
                Err(CliError::FamilyCheck(Box::new(report)))
            }
        }
        Command::Verify { seed, trials, max_strands, max_len } => {
            if max_strands == 0 {
                return Err(CliError::Usage("--max-strands must be at least 1".into()));
            }
            let cfg = SweepConfig { seed, trials, max_strands, max_len, ..SweepConfig::default() };
            let report = verify(&cfg);
            if report.all_passed() {
                Ok(report)
            } else {
                Err(CliError::VerifyMismatch(Box::new(report)))
            }
        }
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = cli.output.json;
    match run(cli) {
        Ok(report) => {
            emit(&report, json);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::FamilyCheck(report) | CliError::VerifyMismatch(report) = &e {
                emit(report, json);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
