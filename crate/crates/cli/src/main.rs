//! `vira`: runs the exact verification sweeps of `vira-core` and the cocycle
//! reduction on tabulated input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vira_core::cohomology::{self, CocycleOracle, TwoCocycleTable};
use vira_core::report::Check;
use vira_core::{extension, fock, verma, witt, Scalar, Status, VerificationReport};

#[derive(Parser, Debug)]
#[command(
    name = "vira",
    version,
    about = "Exact checks for the Witt, Virasoro and Heisenberg algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "VIRA_FORMAT",
        default_value = "text"
    )]
    format: Format,

    /// Worker threads for the sweeps (0 = one per core).
    #[arg(long, global = true, env = "VIRA_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification sweep.
    Verify {
        kind: Kind,
        #[command(flatten)]
        params: Params,
    },
    /// Reduce a tabulated 2-cocycle to a multiple of the Virasoro cocycle.
    Reduce {
        /// Cocycle table (`window<TAB>W` header, then `m<TAB>n<TAB>value`).
        #[arg(long, env = "VIRA_INPUT")]
        input: PathBuf,
        /// Defaults to the window declared in the table.
        #[arg(long, env = "VIRA_WINDOW")]
        window: Option<u64>,
    },
    /// Search for a witness that a 2-cocycle is not a coboundary.
    Nontrivial {
        #[command(flatten)]
        source: Source,
        #[arg(long, env = "VIRA_WINDOW", default_value_t = 8)]
        window: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Cocycle table file.
    #[arg(long, env = "VIRA_INPUT")]
    input: Option<PathBuf>,
    /// Use the Virasoro cocycle.
    #[arg(long, env = "VIRA_VIRASORO")]
    virasoro: bool,
}

#[derive(Args, Debug)]
struct Params {
    /// Index window for cocycle sweeps; defaults to 8, or to the table's window with --input.
    #[arg(long, env = "VIRA_WINDOW")]
    window: Option<u64>,
    #[arg(long, env = "VIRA_MAX_INDEX", default_value_t = 4)]
    max_index: u64,
    #[arg(long, env = "VIRA_MAX_LEVEL", default_value_t = 5)]
    max_level: u64,
    /// Fock space charge, as `p` or `p/q`.
    #[arg(
        long,
        env = "VIRA_ALPHA",
        default_value = "1/2",
        allow_hyphen_values = true
    )]
    alpha: String,
    /// Verma module central charge.
    #[arg(long, env = "VIRA_C", default_value = "1", allow_hyphen_values = true)]
    c: String,
    /// Verma module conformal weight.
    #[arg(
        long,
        env = "VIRA_H",
        default_value = "1/8",
        allow_hyphen_values = true
    )]
    h: String,
    /// Cocycle table file (cocycle and extension checks).
    #[arg(long, env = "VIRA_INPUT", conflicts_with = "virasoro")]
    input: Option<PathBuf>,
    /// Use the Virasoro cocycle (cocycle check).
    #[arg(long, env = "VIRA_VIRASORO")]
    virasoro: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    WittJacobi,
    Cocycle,
    Extension,
    VirasoroConstants,
    Heisenberg,
    PrimaryField,
    NormalPair,
    Sugawara,
    Verma,
    VermaHw,
    Intertwine,
    SumIdentity,
}

impl Kind {
    fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

const DEFAULT_WINDOW: u64 = 8;
const TRUNCATION_MARGIN: u64 = 10;
const VANISHING_MARGIN: u64 = 5;

/// An input problem, reported as an `input_error` record under `check`.
struct InputError {
    check: String,
    message: String,
}

impl InputError {
    fn new(check: impl Into<String>, message: impl ToString) -> Self {
        InputError {
            check: check.into(),
            message: message.to_string(),
        }
    }
}

enum Record {
    Report(VerificationReport),
    Reduction {
        window: u64,
        beta: Vec<(i64, Scalar)>,
        r: Scalar,
    },
    Witness {
        cocycle: String,
        window: u64,
        witness: Option<cohomology::Witness>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Fails only if a pool was already installed, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    let records = match run(&cli.command) {
        Ok(records) => records,
        Err(e) => {
            eprintln!("error: {}", e.message);
            vec![Record::Report(VerificationReport::input_error(
                Check::new(&e.check),
                e.message,
            ))]
        }
    };
    emit(&records, cli.format);
    ExitCode::from(exit_code(&records))
}

fn exit_code(records: &[Record]) -> u8 {
    let statuses = records.iter().filter_map(|r| match r {
        Record::Report(rep) => Some(rep.status),
        _ => None,
    });
    statuses.fold(0, |code, s| match s {
        Status::Pass => code,
        Status::Fail => code.max(1),
        Status::InputError => 2,
    })
}

fn run(command: &Command) -> Result<Vec<Record>, InputError> {
    match command {
        Command::Verify { kind, params } => verify(*kind, params),
        Command::Reduce { input, window } => reduce(input, *window),
        Command::Nontrivial { source, window } => nontrivial(source, *window),
    }
}

fn scalar(check: &str, text: &str) -> Result<Scalar, InputError> {
    text.parse().map_err(|e| InputError::new(check, e))
}

fn read_table(check: &str, path: &Path) -> Result<TwoCocycleTable, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError::new(check, format!("{}: {e}", path.display())))?;
    TwoCocycleTable::from_text(&text)
        .map_err(|e| InputError::new(check, format!("{}: {e}", path.display())))
}

fn verify(kind: Kind, p: &Params) -> Result<Vec<Record>, InputError> {
    let name = kind.name();
    let alpha = scalar(&name, &p.alpha)?;
    let c = scalar(&name, &p.c)?;
    let h = scalar(&name, &p.h)?;
    let (n, l) = (p.max_index, p.max_level);
    let table = p
        .input
        .as_deref()
        .map(|path| read_table(&name, path))
        .transpose()?;
    let window = p
        .window
        .or(table.as_ref().map(TwoCocycleTable::window))
        .unwrap_or(DEFAULT_WINDOW);

    let reports = match kind {
        Kind::WittJacobi => vec![witt::check_witt_axioms(n)],
        Kind::Cocycle => {
            let omega = match table {
                Some(t) => CocycleOracle::from_table(t),
                None if p.virasoro => CocycleOracle::virasoro(),
                None => {
                    return Err(InputError::new(
                        name,
                        "a cocycle is required: pass --input PATH or --virasoro",
                    ))
                }
            };
            vec![cohomology::check_cocycle_identity(&omega, window)]
        }
        Kind::Extension => match table {
            Some(t) => {
                let omega = CocycleOracle::from_table(t);
                vec![extension::check_extension_predicate(
                    &extension::BaseAlgebra::witt(),
                    &omega,
                    n,
                )]
            }
            None => vec![
                extension::check_extension_predicate(
                    &extension::BaseAlgebra::witt(),
                    &CocycleOracle::virasoro(),
                    n,
                ),
                extension::check_extension_predicate(
                    &extension::BaseAlgebra::abelian(),
                    &extension::heisenberg_cocycle(),
                    n,
                ),
            ],
        },
        Kind::VirasoroConstants => vec![extension::check_virasoro_constants(n)],
        Kind::Heisenberg => vec![
            extension::check_heisenberg_constants(n),
            fock::check_heisenberg_relations(n, l, &alpha),
            fock::check_truncation(l, TRUNCATION_MARGIN, &alpha),
        ],
        Kind::PrimaryField => vec![fock::check_primary_field(n, l, &alpha)],
        Kind::NormalPair => vec![
            fock::check_normal_pair_symmetry(n, l, &alpha),
            fock::check_normal_pair_vanishing(n, l, VANISHING_MARGIN, &alpha),
            fock::check_normal_pair_commutators(n, n, l, &alpha),
        ],
        Kind::Sugawara => vec![fock::check_sugawara_commutator(n, l, &alpha)],
        Kind::Verma => vec![
            verma::check_verma_relations(n, l, &c, &h),
            verma::check_verma_grading(l, &c, &h),
        ],
        Kind::VermaHw => vec![verma::verma_hw_check(&c, &h)],
        Kind::Intertwine => vec![verma::check_intertwining(&alpha, n, l)],
        Kind::SumIdentity => vec![fock::check_weighted_sums(n)],
    };
    Ok(reports.into_iter().map(Record::Report).collect())
}

fn reduce(input: &Path, window: Option<u64>) -> Result<Vec<Record>, InputError> {
    let table = read_table("reduce", input)?;
    let window = window.unwrap_or(table.window());
    let omega = CocycleOracle::from_table(table);
    let reduction =
        cohomology::reduce_cocycle(&omega, window).map_err(|e| InputError::new("reduce", e))?;
    let beta = reduction.beta.iter().map(|(n, v)| (n, v.clone())).collect();
    Ok(vec![
        Record::Reduction {
            window: reduction.beta.window(),
            beta,
            r: reduction.r,
        },
        Record::Report(reduction.residual),
    ])
}

fn nontrivial(source: &Source, window: u64) -> Result<Vec<Record>, InputError> {
    let omega = match &source.input {
        Some(path) => CocycleOracle::from_table(read_table("nontrivial", path)?),
        None => CocycleOracle::virasoro(),
    };
    let witness = cohomology::nontriviality_witness(&omega, window);
    Ok(vec![Record::Witness {
        cocycle: omega.label().to_string(),
        window,
        witness,
    }])
}

fn record_json(record: &Record) -> Value {
    match record {
        Record::Report(rep) => serde_json::to_value(rep).expect("reports serialize"),
        Record::Reduction { window, beta, r } => json!({
            "beta": beta
                .iter()
                .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
                .collect::<Vec<_>>(),
            "beta_window": window,
            "r": r.to_string(),
        }),
        Record::Witness {
            cocycle,
            window,
            witness,
        } => json!({
            "cocycle": cocycle,
            "window": window,
            "witness": witness.as_ref().map(|w| json!({
                "n1": w.n1,
                "n2": w.n2,
                "ratio1": w.ratio1.to_string(),
                "ratio2": w.ratio2.to_string(),
            })),
        }),
    }
}

fn record_text(record: &Record) -> String {
    match record {
        Record::Report(rep) => rep.to_text(),
        Record::Reduction { window, beta, r } => {
            let mut out = format!("beta:\nwindow\t{window}\n");
            for (n, v) in beta {
                out.push_str(&format!("{n}\t{v}\n"));
            }
            out.push_str(&format!("r: {r}\n"));
            out
        }
        Record::Witness { cocycle, window, witness } => match witness {
            Some(w) => format!(
                "cocycle: {cocycle}\nwindow: {window}\nwitness: n1 = {}, n2 = {}, ratio1 = {}, ratio2 = {}\n",
                w.n1, w.n2, w.ratio1, w.ratio2
            ),
            None => format!("cocycle: {cocycle}\nwindow: {window}\nno witness in window\n"),
        },
    }
}

fn emit(records: &[Record], format: Format) {
    match format {
        Format::Json => {
            for r in records {
                println!("{}", record_json(r));
            }
        }
        Format::Text => {
            let blocks: Vec<String> = records.iter().map(record_text).collect();
            print!("{}", blocks.join("\n"));
        }
    }
}
