use clap::Parser;

fn main() {
    let cli = rly_cli::Cli::parse();
    std::process::exit(rly_cli::run(&cli));
}
