// Fixed point traces: the coincidence trace against the identity.
//
// ```text
// cargo run --example fixed_points
// ```

use bouquet::conjugacy::DecisionConfig;
use bouquet::freegroup::{Alphabet, Endomorphism};
use bouquet::trace::{fixed_point_raw, fixed_point_trace, nielsen_bound};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b"])?;
    let cfg = DecisionConfig::default();
    for images in [["a^2", "b"], ["a b^-1 a^-1 b^2", "b"], ["b", "a"], ["a b", "b a^-1"]] {
        let phi = Endomorphism::parse(&al, &images)?;
        let t = fixed_point_trace(&phi, &cfg)?;
        let (lo, hi) = nielsen_bound(&t);
        println!("φ = ({}, {})", images[0], images[1]);
        println!("  1 - Σ ∂φ: {}", al.element(&fixed_point_raw(&phi)));
        println!("  trace:    {}  ({})", t.display(&al), t.merge_status());
        if lo == hi {
            println!("  N(f) = {lo}");
        } else {
            println!("  {lo} <= N(f) <= {hi}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
