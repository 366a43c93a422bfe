//! Loading state files and driving the command layer in-process.

use gaussfid::commands::{run, Cli};
use gaussfid::state_file::StateSpec;
use gaussfid::Tolerances;

use clap::Parser;

fn main() -> gaussfid::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/states");
    let spec = StateSpec::load(format!("{dir}/two_mode.toml"))?;
    println!("{spec:?}");
    let a = spec.resolve(&Tolerances::default())?;
    println!("A ={}", a.matrix());

    for args in [
        vec!["gaussfid", "validate", "unphysical.toml"],
        vec!["gaussfid", "fidelity", "thermal1.toml", "thermal2.toml", "--verify", "60"],
        vec!["gaussfid", "decompose", "squeezed.toml"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".toml") { format!("{dir}/{a}") } else { a.to_string() })
            .collect();
        let report = run(&Cli::parse_from(&args));
        println!("$ {} (exit {})", args[1..].join(" ").replace(dir, "states"), report.code);
        print!("{}{}", report.stdout, report.stderr);
    }
    Ok(())
}
