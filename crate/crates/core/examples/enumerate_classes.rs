//! Enumerate all operators on F^3 and sort them into classes.

use std::collections::BTreeMap;

use rblab::cli::{enumerate_operators, OperatorClass};
use rblab::Rational;

fn main() {
    let n = 3;
    let ops = enumerate_operators(n, &Rational::one(), OperatorClass::All);
    let mut tally = BTreeMap::new();
    for op in &ops {
        *tally.entry(op.classify().label).or_insert(0) += 1;
    }
    println!("{} operators on F^{n}", ops.len());
    for (label, count) in tally {
        println!("  {label:>16}: {count}");
    }

    let first = &ops[1];
    println!(
        "e.g. {:?} -> {:?}",
        first.matrix().to_rows(),
        first.classify()
    );
}
