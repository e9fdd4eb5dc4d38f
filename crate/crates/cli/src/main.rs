use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use tricomi_cli::commands::{
    IMethod, JMethod, SigmaChoice, DEFAULT_ORDER, DEFAULT_TABLE1_M, DEFAULT_TABLE2_K, DEFAULT_TABLE2_M,
};
use tricomi_cli::{eval, table1, table2, CliError, EvalRequest, Format, OutputSpec, Report, EXIT_CONVERGENCE};

#[derive(Parser)]
#[command(name = "tricomi", version, about = "Tricomi's probability integrals and airfoil integrals")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Md)]
    format: FormatArg,
    /// Significant digits in markdown output (3..=15).
    #[arg(long, global = true, default_value_t = OutputSpec::DEFAULT_PRECISION)]
    precision: usize,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Tolerance handed to quadratures and series.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Oracle and expansion values of I_(1,m) and I_(2,m).
    Table1 {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_TABLE1_M)]
        m: Vec<u64>,
    },
    /// Relative error of the I_(1,m) expansion against truncation index.
    Table2 {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_TABLE2_M)]
        m: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_TABLE2_K)]
        k: Vec<usize>,
    },
    /// Evaluate a single quantity.
    Eval {
        #[command(subcommand)]
        subject: Subject,
    },
}

#[derive(Subcommand)]
enum Subject {
    /// I_(n,m) by quadrature and by the expansion.
    #[command(name = "I", alias = "i")]
    I(IArgs),
    /// J_n(a; mu) by series, accelerated series and principal value.
    #[command(name = "J", alias = "j")]
    J(JArgs),
    /// Solve erfc x = y.
    Invert {
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
    /// The auxiliary sums sigma_m(mu), m = 0, 1, 2.
    Sigma {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, value_enum, default_value_t = SigmaArg::All)]
        method: SigmaArg,
    },
    /// The circulation profile P_n(x).
    Profile {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
}

#[derive(Args)]
struct IArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u64,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    k: usize,
    #[arg(long, value_enum, default_value_t = IArg::All)]
    method: IArg,
}

#[derive(Args)]
struct JArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, allow_negative_numbers = true)]
    mu: f64,
    #[arg(long, value_enum, default_value_t = JArg::All)]
    method: JArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum IArg {
    Oracle,
    Transformed,
    Asym,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum JArg {
    Series,
    Accelerated,
    Pv,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaArg {
    Closed,
    Direct,
    All,
}

fn request(subject: Subject) -> EvalRequest {
    match subject {
        Subject::I(a) => EvalRequest::I {
            n: a.n,
            m: a.m,
            k: a.k,
            method: match a.method {
                IArg::Oracle => IMethod::Oracle,
                IArg::Transformed => IMethod::Transformed,
                IArg::Asym => IMethod::Asymptotic,
                IArg::All => IMethod::All,
            },
        },
        Subject::J(a) => EvalRequest::J {
            n: a.n,
            a: a.a,
            mu: a.mu,
            method: match a.method {
                JArg::Series => JMethod::Series,
                JArg::Accelerated => JMethod::Accelerated,
                JArg::Pv => JMethod::Pv,
                JArg::All => JMethod::All,
            },
        },
        Subject::Invert { y } => EvalRequest::Invert { y },
        Subject::Sigma { m, mu, method } => EvalRequest::Sigma {
            m,
            mu,
            method: match method {
                SigmaArg::Closed => SigmaChoice::Closed,
                SigmaArg::Direct => SigmaChoice::Direct,
                SigmaArg::All => SigmaChoice::All,
            },
        },
        Subject::Profile { n, x } => EvalRequest::Profile { n, x },
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let format = match cli.format {
        FormatArg::Md => Format::Markdown,
        FormatArg::Csv => Format::Csv,
    };
    let spec = OutputSpec::new(format, cli.precision)?;
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(CliError::Usage(format!("tolerance must be positive, got {}", cli.tol)));
    }
    let report: Report = match cli.command {
        Command::Table1 { m } => table1(&m, cli.tol)?,
        Command::Table2 { m, k } => table2(&m, &k, cli.tol)?,
        Command::Eval { subject } => eval(request(subject), cli.tol)?,
    };
    let text = report.table.render(&spec)?;
    match cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.converged)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("tricomi: some computations did not converge");
            ExitCode::from(EXIT_CONVERGENCE as u8)
        }
        Err(e) => {
            eprintln!("tricomi: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
