use clap::Parser;
use focc::cli::{run, Cli};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli).and_then(|o| o.render(cli.format).map(|s| (s, o))) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (text, outcome) = out;
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
    ExitCode::from(outcome.exit_code(cli.require_complete) as u8)
}
