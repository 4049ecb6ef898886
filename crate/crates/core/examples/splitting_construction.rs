//! Build the splitting operator of a decomposition F^3 = A1 + A2 into
//! subalgebras and look at its tree.

use rblab::{make_splitting, matrix_to_tree, Rational};

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_integer(x)).collect()
}

fn main() -> rblab::Result<()> {
    let a1 = [v(&[1, 1, 1])];
    let a2 = [v(&[0, 1, 0]), v(&[0, 0, 1])];
    let op = make_splitting(3, Rational::one(), &a1, &a2)?;
    println!("R = {:?}", op.matrix().to_rows());
    println!("{:?}", op.classify());

    let form = matrix_to_tree(&op)?;
    println!(
        "parents {:?}, colours {:?}",
        form.tree.tree().parents(),
        form.tree.colors()
    );
    println!(
        "properly coloured {}, alternating {}",
        form.tree.is_properly_colored(),
        form.tree.is_alternating()
    );

    // not a subalgebra
    let bad = make_splitting(
        3,
        Rational::one(),
        &[v(&[1, 2, 0])],
        &[v(&[0, 1, 0]), v(&[0, 0, 1])],
    );
    println!("{}", bad.unwrap_err());
    Ok(())
}
