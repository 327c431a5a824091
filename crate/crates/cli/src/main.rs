//! `specht`: root systems, Weyl groups, subsystems and generalized Specht
//! modules from the command line.
//!
//! Exit codes: 0 success, 1 property violation or failed check, 2 bad input.

mod commands;
mod config;
mod verify;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use specht_core::rootsys::CartanType;
use specht_core::weyl::ReflectionGroup;
use specht_core::Error;

use commands::Output;
use config::{build_group, resolve_cap, RunConfig, Verb};

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Generalized Specht modules for Weyl groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Maximum group order to enumerate (overrides SPECHT_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Φ with notation and ambient coordinates.
    Roots(TypeArgs),
    /// Conjugacy classes of subsystems.
    Subsystems(TypeArgs),
    /// Conjugacy classes of W.
    Classes(TypeArgs),
    /// Analyze the frame {J; J'}.
    Specht(SpechtArgs),
    /// Run the reference checks and print a pass/fail table.
    VerifyPaper(VerifyArgs),
    /// Run a JSON array of configurations.
    Batch(BatchArgs),
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// Cartan type, e.g. G2, or a letter together with --rank.
    #[arg(long = "type")]
    system: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct SpechtArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Simple system J, comma-separated (e.g. 01 or 1000,0100,0010).
    #[arg(long, allow_hyphen_values = true)]
    rows: String,
    /// Simple system J'; use "" for the empty system.
    #[arg(long, allow_hyphen_values = true)]
    cols: String,
    /// q for the rationals or p<N> for GF(N).
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long)]
    list_tabloids: bool,
    #[arg(long)]
    list_polytabloid: bool,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    /// Restrict to check groups: g2, d4, b3, props.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Replacement reference fixture.
    #[arg(long)]
    fixture: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct BatchArgs {
    /// JSON file holding an array of configurations.
    file: PathBuf,
}

fn exit_code(e: &Error) -> u8 {
    if e.is_violation() {
        1
    } else {
        2
    }
}

fn config_for(verb: Verb, ty: &TypeArgs) -> RunConfig {
    RunConfig {
        command: verb,
        system: ty.system.clone(),
        rank: ty.rank,
        rows: None,
        cols: None,
        field: "q".into(),
        list_tabloids: false,
        list_polytabloid: false,
    }
}

/// Writes to stdout, exiting quietly if the reader has gone away.
fn say(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}

fn emit(out: &Output, format: Format) {
    match format {
        Format::Text => say(&out.text),
        Format::Json => say(&format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json values serialize"))),
    }
}

fn run_single(cfg: RunConfig, cap: usize, format: Format) -> u8 {
    let result = cfg.validate().and_then(|plan| commands::run(&plan, cap));
    match result {
        Ok(out) => {
            emit(&out, format);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn run_verify(args: &VerifyArgs, cap: usize, format: Format) -> u8 {
    let text = match &args.fixture {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", p.display());
                return 2;
            }
        },
        None => verify::BUILTIN_FIXTURE.to_string(),
    };
    let rows = verify::parse_fixture(&text).and_then(|fx| verify::run(&fx, &args.only, cap));
    match rows {
        Ok(rows) => {
            match format {
                Format::Text => say(&verify::format_rows(&rows)),
                Format::Json => say(&format!("{}\n", serde_json::to_string_pretty(&rows).expect("rows serialize"))),
            }
            u8::from(rows.iter().any(|r| r.status == verify::Status::Fail))
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn run_batch(args: &BatchArgs, cap: usize, format: Format) -> u8 {
    let configs: Vec<RunConfig> = match std::fs::read_to_string(&args.file)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: bad batch file {}: {e}", args.file.display());
            return 2;
        }
    };
    // validate everything before computing anything
    let plans = match configs.iter().map(RunConfig::validate).collect::<Result<Vec<_>, _>>() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let mut types: Vec<CartanType> = plans.iter().filter(|p| p.verb != Verb::Roots).map(|p| p.cartan).collect();
    types.sort_by_key(|t| t.to_string());
    types.dedup();
    let mut groups: HashMap<String, ReflectionGroup> = HashMap::new();
    for t in types {
        match build_group(t, cap) {
            Ok(g) => {
                groups.insert(t.to_string(), g);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code(&e);
            }
        }
    }
    let run_one = |plan: &config::Plan| -> Result<Output, Error> {
        match groups.get(&plan.cartan.to_string()) {
            Some(g) => commands::run_with_group(plan, plan.verb, g),
            None => commands::run(plan, cap),
        }
    };
    #[cfg(feature = "parallel")]
    let results: Vec<Result<Output, Error>> = {
        use rayon::prelude::*;
        plans.par_iter().map(run_one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Output, Error>> = plans.iter().map(run_one).collect();

    let mut code = 0;
    let mut entries: Vec<Value> = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(out) => {
                if format == Format::Text {
                    if i > 0 {
                        say("\n");
                    }
                    say(&out.text);
                }
                entries.push(out.json);
            }
            Err(e) => {
                code = code.max(exit_code(&e));
                eprintln!("error in entry {}: {e}", i + 1);
                entries.push(serde_json::json!({ "error": e.to_string() }));
            }
        }
    }
    if format == Format::Json {
        say(&format!("{}\n", serde_json::to_string_pretty(&entries).expect("json values serialize")));
    }
    code
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match resolve_cap(cli.cap) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let code = match &cli.command {
        Command::Roots(t) => run_single(config_for(Verb::Roots, t), cap, cli.format),
        Command::Subsystems(t) => run_single(config_for(Verb::Subsystems, t), cap, cli.format),
        Command::Classes(t) => run_single(config_for(Verb::Classes, t), cap, cli.format),
        Command::Specht(a) => {
            let cfg = RunConfig {
                rows: Some(a.rows.clone()),
                cols: Some(a.cols.clone()),
                field: a.field.clone(),
                list_tabloids: a.list_tabloids,
                list_polytabloid: a.list_polytabloid,
                ..config_for(Verb::Specht, &a.ty)
            };
            run_single(cfg, cap, cli.format)
        }
        Command::VerifyPaper(a) => run_verify(a, cap, cli.format),
        Command::Batch(a) => run_batch(a, cap, cli.format),
    };
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violations_map_to_one() {
        assert_eq!(exit_code(&Error::Violation("norm 2".into())), 1);
        assert_eq!(exit_code(&Error::Precondition("overlap".into())), 2);
        assert_eq!(exit_code(&Error::MalformedRoot("0x".into())), 2);
    }
}
