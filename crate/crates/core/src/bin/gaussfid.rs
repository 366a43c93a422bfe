use clap::Parser;
use gaussfid::commands::{run, Cli};

fn main() {
    let report = run(&Cli::parse());
    print!("{}", report.stdout);
    eprint!("{}", report.stderr);
    std::process::exit(report.code);
}
