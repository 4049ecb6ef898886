//! Check the Rota-Baxter identity on a few matrices and see which
//! structure condition a bad one breaks.

use rblab::{RBOperator, Rational};

fn main() -> rblab::Result<()> {
    // R(e1) = e2, R(e2) = 0, weight 1.
    let good = RBOperator::from_i64_rows(1, &[&[0, 1], &[0, 0]])?;
    println!(
        "{:?}: identity {}",
        good.matrix().to_rows(),
        good.verify_rb_identity()
    );

    // phi(R) = -R - id is again an operator of weight 1
    let phi = good.phi();
    println!(
        "phi: {:?} identity {}",
        phi.matrix().to_rows(),
        phi.verify_rb_identity()
    );

    let bad = RBOperator::from_i64_rows(1, &[&[0, 1], &[1, 0]])?;
    println!(
        "{:?}: identity {}",
        bad.matrix().to_rows(),
        bad.verify_rb_identity()
    );
    if let Err(v) = bad.verify_structure_conditions() {
        println!(
            "  breaks {} at rows {} and {}",
            v.condition,
            v.i + 1,
            v.k + 1
        );
    }

    // any nonzero weight, by rescaling
    let w = Rational::new(-2, 3)?;
    let scaled = good.rescale(&w);
    println!(
        "weight {w}: {:?} identity {}",
        scaled.matrix().to_rows(),
        scaled.verify_rb_identity()
    );
    Ok(())
}
