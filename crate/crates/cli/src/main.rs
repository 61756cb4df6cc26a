use clap::Parser;
use hilbcurve_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(cli);
    if out.code == 2 {
        eprintln!("{}", out.stdout);
    } else {
        println!("{}", out.stdout);
    }
    std::process::exit(out.code);
}
