use clap::Parser;
use jjalg_cli::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}
