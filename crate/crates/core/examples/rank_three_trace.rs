// The coincidence Reidemeister trace of a pair of maps of the bouquet of
// three circles, with the certificate behind every merge and separation.
//
// ```text
// cargo run --example rank_three_trace
// ```

use bouquet::conjugacy::{DecisionConfig, DecisionOutcome};
use bouquet::freegroup::{Alphabet, Endomorphism};
use bouquet::trace::{nielsen_bound, raw_trace, raw_trace_delta, reduce_trace_logged};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b", "c"])?;
    let phi = Endomorphism::parse(&al, &["a c b^-1", "a b", "b"])?;
    let psi = Endomorphism::parse(&al, &["a^-1 c b^-1", "c", "b^-1 a"])?;

    let raw = raw_trace(&phi, &psi)?;
    println!("∂-form: {}", al.element(&raw));
    println!("Δ-form: {}", al.element(&raw_trace_delta(&phi, &psi)?));

    let (trace, log) = reduce_trace_logged(&raw, &phi, &psi, &DecisionConfig::default())?;
    for d in &log {
        let how = match &d.outcome {
            DecisionOutcome::Equivalent { witness } => format!("merged by γ = {}", al.word(witness)),
            DecisionOutcome::Distinct { level } => format!("separated at level {}", level.label()),
            DecisionOutcome::Unknown => "undecided".to_string(),
        };
        println!("  [{}] vs [{}]: {how}", al.word(&d.left), al.word(&d.right));
    }
    println!("trace:  {}  ({})", trace.display(&al), trace.merge_status());
    let (lo, hi) = nielsen_bound(&trace);
    println!("Nielsen number: {lo}");
    assert_eq!((lo, hi), (3, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
