use clap::Parser;

use qmobius::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let output = execute(cli.command);
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    std::process::exit(output.code);
}
