use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use algebroid::linalg::Field;
use algebroid_cli::{builtins, explain, run, Scenario, ScenarioError};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "algebroid", version, about = "Construct and verify bialgebroids of ring extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a bundled scenario.
    Builtin {
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List bundled scenarios.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Show what a task computes.
    Explain { task: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct RunArgs {
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Directory for `<scenario>.json` reports when --report is absent.
    #[arg(long, env = "ALGEBROID_REPORT_DIR")]
    report_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// `rational` or `gf:<p>`; overrides the scenario's field.
    #[arg(long)]
    field: Option<Field>,
    #[arg(long)]
    sweep_bound: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated tasks replacing the scenario's list.
    #[arg(long, value_delimiter = ',')]
    tasks: Option<Vec<String>>,
    /// Include per-task wall time (makes reports run-dependent).
    #[arg(long)]
    timing: bool,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn execute(mut sc: Scenario, args: &RunArgs) -> Result<bool, String> {
    if let Some(b) = args.sweep_bound {
        sc.options.sweep_bound = Some(b);
    }
    if let Some(s) = args.seed {
        sc.options.seed = Some(s);
    }
    let built = sc.build(args.field, args.tasks.as_deref()).map_err(|e| e.to_string())?;
    let report = run(&built, args.timing);
    let json = report.to_json();
    let target = args.report.clone().or_else(|| args.report_dir.as_ref().map(|d| d.join(format!("{}.json", report.scenario))));
    if let Some(path) = target {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        }
        std::fs::write(&path, &json).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    match args.format {
        Format::Json => emit(&json),
        Format::Text => emit(&report.to_text()),
    }
    Ok(report.failed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { file, run } => std::fs::read_to_string(&file)
            .map_err(|e| format!("{}: {e}", file.display()))
            .and_then(|text| Scenario::parse(&text).map_err(|e: ScenarioError| format!("{}: {e}", file.display())))
            .and_then(|sc| execute(sc, &run)),
        Command::Builtin { name, run } => match builtins::scenario(&name) {
            None => Err(format!("unknown builtin `{name}`; try `algebroid list`")),
            Some(sc) => sc.map_err(|e| e.to_string()).and_then(|sc| execute(sc, &run)),
        },
        Command::List { format } => {
            let cat = builtins::catalog();
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&cat).expect("catalog serializes"))),
                Format::Text => {
                    let mut out = format!("{:<8} {:<10} {:>5} {:>5} {:>5} {:>8}  description\n", "name", "field", "dim A", "dim B", "dim R", "casimir");
                    for e in cat {
                        out += &format!(
                            "{:<8} {:<10} {:>5} {:>5} {:>5} {:>8}  {}\n",
                            e.name, e.field, e.dim_a, e.dim_b, e.dim_r, e.casimir_dim, e.description
                        );
                    }
                    emit(&out);
                }
            }
            Ok(false)
        }
        Command::Explain { task } => match explain::explain(&task) {
            Some(text) => {
                emit(&format!("{text}\n"));
                Ok(false)
            }
            None => Err(format!("unknown task `{task}`; tasks are {}", algebroid_cli::TASKS.join(", "))),
        },
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
