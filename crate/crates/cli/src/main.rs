mod expr;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qps_core::density::{correlator_diagonals, digit_grid, pure_density, DensityMatrix};
use qps_core::dynamics::{evolve, ObservableMatrix};
use qps_core::fourier::{classify_equivalence, global_fourier, local_fourier, numeric_equivalence, Verdict};
use qps_core::io::{
    amplitudes_to_csv, grid_to_csv, table_to_csv, table_to_json, vector_to_csv, vector_to_json, QuantumData,
    QuantumFile,
};
use qps_core::linalg::StateVector;
use qps_core::phase_space::{r_matrices, weyl, wigner, Formalism, PhaseSpaceTable};
use qps_core::ring::DEFAULT_DIM_CAP;
use qps_core::{presets, QpsError, SystemShape};
use thiserror::Error;

/// Largest `d^n` for which `classify` also runs the eigenvalue check.
const NUMERIC_CHECK_MAX_DIM: u128 = 729;

#[derive(Debug, Parser)]
#[command(
    name = "qps",
    version,
    about = "Local and global Fourier transforms and phase space for n qudits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether F_L and F_G are unitarily equivalent.
    Classify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Write the Wigner, Weyl and R tables, correlators and cross-formalism tables.
    Tables {
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// State or density file; defaults to the built-in reference state.
        #[arg(long)]
        state: Option<PathBuf>,
        /// Global label of the momentum states used for tables 1 and 2.
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        cross_label: i64,
    },
    /// Apply exp(i t H) to a state.
    Evolve {
        #[arg(long, value_enum, conflicts_with = "ham", required_unless_present = "ham")]
        preset: Option<HamPreset>,
        /// Hamiltonian expression over X, P, XG, PG, I, kron, + - * ^ and constants.
        #[arg(long)]
        ham: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// State file; defaults to the built-in product state.
        #[arg(long)]
        state: Option<PathBuf>,
        /// Write the evolved state as a state file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wigner function of a state or density.
    Wigner(TableArgs),
    /// Weyl function of a state or density.
    Weyl(TableArgs),
    /// Correlation tables R or R~ of a state or density.
    Rmat {
        #[command(flatten)]
        args: TableArgs,
        #[arg(long, value_enum, default_value_t = RKind::R)]
        kind: RKind,
    },
    /// Built-in states.
    Preset {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    /// State or density file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormalismArg::Local)]
    formalism: FormalismArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum PresetAction {
    /// Write a built-in state to a file.
    Export {
        #[arg(value_enum)]
        name: StatePreset,
        #[arg(long)]
        out: PathBuf,
        /// Write the density matrix instead of the state vector.
        #[arg(long)]
        density: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormalismArg {
    Local,
    Global,
}

impl From<FormalismArg> for Formalism {
    fn from(f: FormalismArg) -> Self {
        match f {
            FormalismArg::Local => Formalism::Local,
            FormalismArg::Global => Formalism::Global,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HamPreset {
    H1,
    H2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RKind {
    R,
    Rtilde,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StatePreset {
    /// Two-qutrit state with weights 1/3, 1/4, 5/12 on labels 3, -2, -1.
    Reference,
    /// Two-qutrit product state used for time evolution.
    Evolution,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl From<QpsError> for CliError {
    fn from(e: QpsError) -> Self {
        match e {
            QpsError::Format(msg) => CliError::Parse(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<expr::ExprError> for CliError {
    fn from(e: expr::ExprError) -> Self {
        match e {
            expr::ExprError::Parse { .. } => CliError::Parse(e.to_string()),
            expr::ExprError::Eval(msg) => CliError::Validation(msg),
            expr::ExprError::Core(inner) => inner.into(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn dim_cap() -> CliResult<usize> {
    match std::env::var("QPS_DIM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Validation(format!("QPS_DIM_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_DIM_CAP),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: Option<&Path>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => write(path, contents),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn load(path: &Path) -> CliResult<(SystemShape, QuantumData)> {
    Ok(QuantumFile::parse(&read(path)?)?.decode(dim_cap()?)?)
}

fn load_density(path: &Path) -> CliResult<DensityMatrix> {
    match load(path)? {
        (shape, QuantumData::State(s)) => Ok(pure_density(&shape, &s)?),
        (_, QuantumData::Density(rho)) => Ok(rho),
    }
}

fn render(table: &PhaseSpaceTable, format: Format) -> String {
    match format {
        Format::Csv => table_to_csv(table),
        Format::Json => table_to_json(table),
    }
}

fn classify(d: usize, n: usize) -> CliResult<()> {
    let v = classify_equivalence(d, n)?;
    println!("{v}");
    let dim = (d as u128).checked_pow(n as u32);
    match dim {
        Some(dim) if dim <= NUMERIC_CHECK_MAX_DIM => {
            let shape = SystemShape::with_cap(d, n, dim as usize)?;
            let report = numeric_equivalence(&local_fourier(&shape)?, &global_fourier(&shape)?)?;
            let numeric = if report.equivalent {
                Verdict::Equivalent
            } else {
                Verdict::Inequivalent
            };
            let agrees = numeric == v.verdict && report.trace_powers_agree;
            println!(
                "numeric check (d^n = {dim}): eigenvalue multiplicities of 1, i, -1, -i: F_L {:?}, F_G {:?}; {} ({})",
                report.multiplicities_a,
                report.multiplicities_b,
                numeric,
                if agrees { "agrees" } else { "DISAGREES" }
            );
            if !agrees {
                return Err(CliError::Validation(
                    "numeric check disagrees with the closed form".into(),
                ));
            }
        }
        _ => println!("numeric check skipped (d^n > {NUMERIC_CHECK_MAX_DIM})"),
    }
    Ok(())
}

fn digit_labels(d: usize) -> Vec<String> {
    let h = (d as i64 - 1) / 2;
    (-h..=h).map(|x| x.to_string()).collect()
}

fn tables(out: &Path, format: Format, state: Option<&Path>, cross_label: i64) -> CliResult<()> {
    let rho = match state {
        Some(p) => load_density(p)?,
        None => presets::reference_density(),
    };
    let shape = *rho.shape();
    fs::create_dir_all(out).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    let ext = format.extension();
    let put = |name: &str, contents: String| write(&out.join(format!("{name}.{ext}")), &contents);

    let rho_g = presets::global_momentum_density(&shape, cross_label)?;
    let rho_l = presets::local_momentum_density(&shape, cross_label)?;
    put("table1", render(&wigner(&rho_g, Formalism::Local)?, format))?;
    put("table2", render(&wigner(&rho_l, Formalism::Global)?, format))?;
    for (first, f) in [(3, Formalism::Local), (7, Formalism::Global)] {
        let (r, rt) = r_matrices(&rho, f)?;
        put(&format!("table{first}"), render(&wigner(&rho, f)?, format))?;
        put(&format!("table{}", first + 1), render(&weyl(&rho, f)?, format))?;
        put(&format!("table{}", first + 2), render(&r, format))?;
        put(&format!("table{}", first + 3), render(&rt, format))?;
    }

    let c = correlator_diagonals(&rho)?;
    for (name, axis, values) in [
        ("correlator_x", "delta", &c.position),
        ("correlator_pl", "gamma", &c.local_momentum),
        ("correlator_pg", "gamma", &c.global_momentum),
    ] {
        let text = match format {
            Format::Json => vector_to_json(&shape, axis, values),
            Format::Csv if shape.n() == 2 && name != "correlator_pg" => {
                let labels = digit_labels(shape.d());
                let corner = format!("{axis}0\\{axis}1");
                grid_to_csv(&corner, &labels, &labels, &digit_grid(&shape, values)?)
            }
            Format::Csv => vector_to_csv(&shape, axis, values),
        };
        put(name, text)?;
    }
    Ok(())
}

fn evolve_cmd(
    preset: Option<HamPreset>,
    ham: Option<&str>,
    t: f64,
    state: Option<&Path>,
    out: Option<&Path>,
) -> CliResult<()> {
    let (shape, s): (SystemShape, StateVector) = match state {
        Some(p) => match load(p)? {
            (shape, QuantumData::State(s)) => (shape, s),
            (_, QuantumData::Density(_)) => {
                return Err(CliError::Validation("evolve needs a state file, not a density".into()))
            }
        },
        None => (presets::two_qutrits(), presets::evolution_state()),
    };
    let h = match (preset, ham) {
        (Some(HamPreset::H1), _) => presets::hamiltonian_h1(),
        (Some(HamPreset::H2), _) => presets::hamiltonian_h2(),
        (None, Some(src)) => {
            let m = expr::parse(src)?.evaluate(&shape)?;
            ObservableMatrix::new(shape, m, src)?
        }
        (None, None) => return Err(CliError::Validation("give --preset or --ham".into())),
    };
    let evolved = evolve(&h, t, &s)?;
    print!("{}", amplitudes_to_csv(&shape, &evolved));
    if let Some(path) = out {
        write(path, &QuantumFile::from_state(&shape, &evolved).to_json())?;
    }
    Ok(())
}

fn table_cmd(
    args: &TableArgs,
    build: impl Fn(&DensityMatrix, Formalism) -> qps_core::Result<PhaseSpaceTable>,
) -> CliResult<()> {
    let rho = load_density(&args.input)?;
    let table = build(&rho, args.formalism.into())?;
    emit(args.out.as_deref(), &render(&table, args.format))
}

fn export(name: StatePreset, out: &Path, density: bool) -> CliResult<()> {
    let shape = presets::two_qutrits();
    let s = match name {
        StatePreset::Reference => presets::reference_state(),
        StatePreset::Evolution => presets::evolution_state(),
    };
    let file = if density {
        QuantumFile::from_density(&pure_density(&shape, &s)?)
    } else {
        QuantumFile::from_state(&shape, &s)
    };
    write(out, &file.to_json())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Classify { d, n } => classify(d, n),
        Command::Tables {
            out,
            format,
            state,
            cross_label,
        } => tables(&out, format, state.as_deref(), cross_label),
        Command::Evolve {
            preset,
            ham,
            t,
            state,
            out,
        } => evolve_cmd(preset, ham.as_deref(), t, state.as_deref(), out.as_deref()),
        Command::Wigner(args) => table_cmd(&args, wigner),
        Command::Weyl(args) => table_cmd(&args, weyl),
        Command::Rmat { args, kind } => table_cmd(&args, |rho, f| {
            let (r, rt) = r_matrices(rho, f)?;
            Ok(match kind {
                RKind::R => r,
                RKind::Rtilde => rt,
            })
        }),
        Command::Preset {
            action: PresetAction::Export { name, out, density },
        } => export(name, &out, density),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
