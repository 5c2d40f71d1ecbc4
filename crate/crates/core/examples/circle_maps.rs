// Nielsen coincidence numbers of the circle maps `z ↦ z^n` and `z ↦ z^m`.
//
// ```text
// cargo run --example circle_maps
// ```

use bouquet::conjugacy::DecisionConfig;
use bouquet::freegroup::{Alphabet, Endomorphism, Word};
use bouquet::trace::{nielsen_bound, raw_trace, reduce_trace};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a"])?;
    let cfg = DecisionConfig::default();
    println!("{:>2} {:>2}  {:<28} N", "n", "m", "reduced trace");
    for n in 0..=5 {
        for m in 0..=n {
            let phi = Endomorphism::new(al.clone(), vec![Word::generator_power(0, n)])?;
            let psi = Endomorphism::new(al.clone(), vec![Word::generator_power(0, m)])?;
            let t = reduce_trace(&raw_trace(&phi, &psi)?, &phi, &psi, &cfg)?;
            let (lo, hi) = nielsen_bound(&t);
            assert_eq!((lo, hi), ((n - m) as usize, (n - m) as usize));
            println!("{n:>2} {m:>2}  {:<28} {lo}", t.display(&al).to_string());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
