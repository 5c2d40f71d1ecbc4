// Fox derivatives, reversed derivatives and the identities relating them.
//
// ```text
// cargo run --example fox_calculus
// ```

use bouquet::fox::{delta_derivative, fox_derivative, fox_jacobian};
use bouquet::freegroup::{Alphabet, GroupRingElement};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b"])?;
    let w = al.parse_word("a b^-1 a^-1 b^2")?;
    println!("w = {}", al.word(&w));

    let mut sum = GroupRingElement::zero();
    for x in 0..al.rank() {
        let d = fox_derivative(x, &w);
        let delta = delta_derivative(x, &w);
        println!(
            "∂_{0} w = {1}\nΔ_{0} w = {2}",
            al.name(x),
            al.element(&d),
            al.element(&delta)
        );

        // Δ_x w = x^-1 i(∂_x w) w
        let x_inv = al.parse_word(&format!("{}^-1", al.name(x)))?;
        assert_eq!(delta, d.involution().left_mul(&x_inv).right_mul(&w));

        let gen = al.parse_word(al.name(x))?;
        sum += &d.right_mul(&gen);
        sum -= &d;
    }
    // Σ_x ∂_x w (x - 1) = w - 1
    assert_eq!(sum, GroupRingElement::from_word(&w) - GroupRingElement::one());
    println!("Σ ∂_x w (x - 1) = {}", al.element(&sum));

    let words = [al.parse_word("a b a^-1")?, al.parse_word("b^3")?];
    println!("Jacobian of (a b a^-1, b^3):");
    for row in fox_jacobian(&words, al.rank()) {
        let cells: Vec<String> = row.iter().map(|x| al.element(x).to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
