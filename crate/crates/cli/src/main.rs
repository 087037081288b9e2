use std::process::ExitCode;

use clap::Parser;

use quatseq_cli::{run, threads_from_env, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if let Some(n) = threads_from_env() {
        // ignore failure: a global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let result = run(&cli);
    match (&result.json, cli.json) {
        (Some(payload), true) => {
            println!(
                "{}",
                serde_json::to_string_pretty(payload).expect("JSON values serialize")
            )
        }
        _ if result.exit_code == EXIT_USAGE => eprint!("{}", result.report),
        _ => print!("{}", result.report),
    }
    ExitCode::from(result.exit_code as u8)
}
