use std::io;

use ascseq_cli::{run, Cli};
use clap::Parser;

fn main() {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let code = run(
        cli,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
