//! The induced product of an operator of weight 2, and an idempotent basis
//! showing it is again a sum of fields.

use rblab::fixtures::five_field_sample;
use rblab::induced::certify;
use rblab::{idempotent_basis, induced_product, verify_split_isomorphism, Rational};

fn main() -> rblab::Result<()> {
    let op = five_field_sample().rescale(&Rational::from_integer(2));
    let alg = induced_product(&op)?;
    println!("e1 o e2 = {:?}", alg.basis_product(0, 1));
    println!("e2 o e2 = {:?}", alg.basis_product(1, 1));

    let basis = idempotent_basis(&op)?;
    for (i, u) in basis.vectors.iter().enumerate() {
        println!("u{} = {:?}", i + 1, u);
    }
    println!(
        "orthogonal idempotent basis: {}",
        verify_split_isomorphism(&alg, &basis)
    );

    let report = certify(&op.phi())?;
    println!("phi(R) certified: {}", report.certified);
    Ok(())
}
