mod args;
mod commands;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gammadet::Error;

use args::{Cli, Command, Format};

fn load_replay(path: &std::path::Path) -> Result<Command, Error> {
    let text = std::fs::read_to_string(path)?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::UnsupportedParameter(format!("{}: {e}", path.display())))?;
    let config = doc
        .get("config")
        .cloned()
        .ok_or_else(|| Error::UnsupportedParameter(format!("{}: no \"config\" section", path.display())))?;
    serde_json::from_value(config).map_err(|e| Error::UnsupportedParameter(format!("{}: {e}", path.display())))
}

/// The rendered output and whether every verify check passed.
fn execute(cli: &Cli) -> Result<(String, bool), Error> {
    let cmd = match (&cli.command, &cli.replay) {
        (Some(_), Some(_)) => return Err(Error::UnsupportedParameter("--replay takes no subcommand".into())),
        (Some(c), None) => c.clone(),
        (None, Some(p)) => load_replay(p)?,
        (None, None) => return Err(Error::UnsupportedParameter("a subcommand or --replay is required".into())),
    };
    if let (Command::Sample(a), Some(Format::Csv) | None) = (&cmd, cli.format) {
        let batch = commands::sample(a)?;
        let mut buf = Vec::new();
        batch.write_csv(&mut buf)?;
        return Ok((String::from_utf8(buf).expect("csv is ascii"), true));
    }
    let doc = commands::run(&cmd)?;
    let ok = !matches!(cmd, Command::Verify(_)) || verify::all_passed(&doc);
    let text = match (cli.format, &cmd) {
        (None, Command::Verify(_)) => verify::table(&doc),
        (Some(Format::Csv), _) => output::csv(&doc),
        _ => output::json(&doc),
    };
    Ok((text, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: some checks failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}
