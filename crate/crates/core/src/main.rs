use clap::Parser;

fn main() {
    let cli = bouquet::cli::Cli::parse();
    std::process::exit(bouquet::cli::main_with(cli));
}
