use clap::Parser;

use matroid_decomp::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let out = execute(&cli, &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
