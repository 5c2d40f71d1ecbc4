// The piecewise-linear model of a pair of maps, its coincidence points and
// the trace they add up to.
//
// ```text
// cargo run --example geometric_oracle
// ```

use bouquet::freegroup::{Alphabet, Endomorphism};
use bouquet::oracle::{
    build_regular_pair, default_epsilon, enumerate_coincidences, epsilon_bound, geometric_trace, lemma_checks,
};
use bouquet::trace::raw_trace;

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b"])?;
    let phi = Endomorphism::parse(&al, &["a b^-1 a^-1 b^2", "b a"])?;
    let psi = Endomorphism::parse(&al, &["b", "a^-1 b"])?;

    let eps = default_epsilon(&phi, &psi)?;
    println!("ε = {eps} (must stay below {})", epsilon_bound(&phi, &psi)?);
    let pair = build_regular_pair(&phi, &psi, &eps)?;
    print!("{}", pair.interval_table(&al));

    println!("coincidences:");
    for c in enumerate_coincidences(&pair) {
        println!(
            "  {} at {}: index {:+}, class [{}]",
            al.name(c.circle),
            c.coordinate,
            c.index,
            al.word(&c.class_word)
        );
    }
    let geometric = geometric_trace(&pair);
    println!("geometric trace: {}", al.element(&geometric));
    assert_eq!(geometric, raw_trace(&phi, &psi)?);

    let checks = lemma_checks(&pair);
    assert!(checks.iter().all(|c| c.holds()));
    println!("{} per-interval predictions hold", checks.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
