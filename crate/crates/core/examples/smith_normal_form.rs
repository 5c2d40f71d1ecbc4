// Smith normal form and integer linear systems.
//
// ```text
// cargo run --example smith_normal_form
// ```

use bouquet::conjugacy::{smith_normal_form, solve_integer_system, IntMatrix};

pub fn run_example() -> bouquet::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m)?;
    println!("M = {:?}", m.to_rows());
    println!("diagonal {:?}, rank {}", s.diagonal(), s.rank());
    assert_eq!(s.u.checked_mul(&m)?.checked_mul(&s.v)?, s.d);

    let b = [2, 0, 2];
    match solve_integer_system(&m, &b)? {
        Some(lattice) => {
            println!("M x = {b:?}: x = {:?} + span {:?}", lattice.particular, lattice.kernel);
            assert_eq!(m.checked_mul_vec(&lattice.particular)?, b);
        }
        None => println!("M x = {b:?} has no integer solution"),
    }
    let b = [1, 0, 0];
    println!("M x = {b:?} solvable: {}", solve_integer_system(&m, &b)?.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> bouquet::Result<()> {
    run_example()
}
