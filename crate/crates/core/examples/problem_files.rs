// Problem files and the command-line reports built from them.
//
// ```text
// cargo run --example problem_files
// ```

use bouquet::cli::{run_text, Command, Flags, Format};
use bouquet::problem::parse_spec;

const SPEC: &str = include_str!("specs/rank3.txt");

pub fn run_example() -> bouquet::Result<()> {
    let spec = parse_spec(SPEC)?;
    print!("normalized:\n{spec}");

    let flags = Flags::default();
    let trace = Command::Trace { spec: "-".into() };
    print!("{}", run_text(&trace, SPEC, &flags).render(Format::Text));

    let nielsen = Command::Nielsen { spec: "-".into() };
    let report = run_text(&nielsen, SPEC, &flags);
    println!("{}", report.json["result"]);

    // errors carry a position and exit code 2
    let broken = run_text(&trace, "generators: a\nphi: a -> a d\n", &flags);
    print!("exit {}: {}", broken.exit_code, broken.render(Format::Text));
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
