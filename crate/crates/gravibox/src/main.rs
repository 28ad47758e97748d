use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gravibox::{config, execute, HarnessError, Mode};

#[derive(Parser, Debug)]
#[command(name = "gravibox", version, about = "Gravitational billiard experiments with CSV output")]
#[command(after_help = config::help_text())]
struct Cli {
    #[arg(value_enum)]
    mode: Mode,
    /// key=value file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Parameters as --key value.
    #[arg(allow_hyphen_values = true, trailing_var_arg = true, num_args = 0.., value_name = "--param value")]
    params: Vec<String>,
}

/// Pulls `--config`/`--out` out of the trailing parameters, where clap leaves
/// them once the first parameter has been seen.
fn split_globals(cli: &mut Cli) -> Result<(), HarnessError> {
    let mut rest = Vec::new();
    let mut it = std::mem::take(&mut cli.params).into_iter();
    while let Some(arg) = it.next() {
        let (name, inline) = match arg.split_once('=') {
            Some((n, v)) => (n.to_string(), Some(v.to_string())),
            None => (arg.clone(), None),
        };
        let slot = match name.as_str() {
            "--config" => &mut cli.config,
            "--out" => &mut cli.out,
            _ => {
                rest.push(arg);
                continue;
            }
        };
        let value = inline
            .or_else(|| it.next())
            .ok_or_else(|| HarnessError::Usage(format!("missing value for {name}")))?;
        *slot = Some(PathBuf::from(value));
    }
    cli.params = rest;
    Ok(())
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let result = split_globals(&mut cli).and_then(|_| {
        let text = execute(cli.mode, cli.config.as_ref(), &cli.params, cli.out.clone())?;
        match &cli.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| HarnessError::Io(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json_line());
            ExitCode::from(2)
        }
    }
}
