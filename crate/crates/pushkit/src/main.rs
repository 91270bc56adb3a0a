use clap::Parser;
use pushkit::cli::{run, Cli};

fn main() {
    match run(Cli::parse()) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("pushkit: {err}");
            std::process::exit(err.code());
        }
    }
}
