// Deciding doubly twisted conjugacy `α = φ(γ) β ψ(γ)^-1`, level by level.
//
// ```text
// cargo run --example twisted_conjugacy
// ```

use bouquet::conjugacy::{verify_witness, DecisionConfig, Nil2Verdict, TwistedConjugacy};
use bouquet::freegroup::{Alphabet, Endomorphism};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b", "c"])?;
    let phi = Endomorphism::parse(&al, &["a c b^-1", "a b", "b"])?;
    let psi = Endomorphism::parse(&al, &["a^-1 c b^-1", "c", "b^-1 a"])?;
    let tc = TwistedConjugacy::new(&phi, &psi, DecisionConfig::default())?;
    let w = |s: &str| al.parse_word(s);

    for (x, y) in [
        ("a", "a^2"),
        ("a^2", "b a^-1 b"),
        ("a^2", "a^-1 c b^-1"),
        ("a c b^-1", "a^-1 c b^-1"),
    ] {
        let (x, y) = (w(x)?, w(y)?);
        let abelian = tc.decide_abelian(&x, &y)?;
        let class2 = match tc.nilpotent2_verdict(&x, &y)? {
            Nil2Verdict::AbelianUnsolvable | Nil2Verdict::Unsolvable => "unsolvable".to_string(),
            Nil2Verdict::Solvable { gamma } => format!("solvable, γ ≡ {gamma:?}"),
            Nil2Verdict::Inconclusive => "inconclusive".to_string(),
        };
        println!("{} ~ {}?", al.word(&x), al.word(&y));
        println!("  abelianization: {abelian}");
        println!("  class 2:        {class2}");
        println!("  decision:       {}", tc.decide(&x, &y)?);
    }

    // a conjugating element can always be re-checked directly
    let ok = verify_witness(&w("a^2")?, &w("a b c^-1")?, &phi, &psi, &w("a b^-1")?);
    println!("γ = a b^-1 carries a b c^-1 to a^2: {ok}");
    assert!(ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
