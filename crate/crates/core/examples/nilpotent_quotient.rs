// Arithmetic in the free nilpotent group of class 2.
//
// ```text
// cargo run --example nilpotent_quotient
// ```

use bouquet::conjugacy::{commutator_index, Nil2Element, Nil2Endo};
use bouquet::freegroup::{Alphabet, Endomorphism};

pub fn run_example() -> bouquet::Result<()> {
    let al = Alphabet::new(["a", "b", "c"])?;
    let rank = al.rank();
    let embed = |s: &str| -> bouquet::Result<Nil2Element> { Nil2Element::embed(&al.parse_word(s)?, rank) };

    let ab = embed("a b")?;
    let ba = embed("b a")?;
    println!("a b -> {ab:?}");
    println!("b a -> {ba:?}");
    let comm = embed("a^-1 b^-1 a b")?;
    println!("[a, b] -> {comm:?} (coordinate {})", commutator_index(rank, 0, 1));
    assert!(comm.is_central());
    assert_eq!(ba.mul(&comm)?, ab);

    // the induced map agrees with applying φ first
    let phi = Endomorphism::parse(&al, &["a c b^-1", "a b", "b"])?;
    let induced = Nil2Endo::new(&phi)?;
    let w = al.parse_word("a b^-1 c a")?;
    let via_quotient = induced.apply(&Nil2Element::embed(&w, rank)?)?;
    let via_free_group = Nil2Element::embed(&phi.apply(&w)?, rank)?;
    println!("φ(a b^-1 c a) -> {via_quotient:?}");
    assert_eq!(via_quotient, via_free_group);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
