//! Closed forms and recurrences for the counts. The labelled splitting
//! column walks every tree, so it stops at n = 7.

use num_bigint::BigUint;
use rblab::trees::{
    cayley_count, count_splitting_labeled_fast, count_unlabeled_all, count_unlabeled_alternating,
    count_unlabeled_proper,
};

fn main() {
    println!(
        "{:>3} {:>22} {:>22} {:>14} {:>14}",
        "n", "labeled", "labeled splitting", "unlabeled", "unl. splitting"
    );
    for n in 1..=12 {
        let labeled = BigUint::from(2u32).pow(n as u32) * cayley_count(n);
        let splitting = if n <= 7 {
            count_splitting_labeled_fast(n).to_string()
        } else {
            "-".into()
        };
        println!(
            "{n:>3} {labeled:>22} {splitting:>22} {:>14} {:>14}",
            count_unlabeled_all(n),
            count_unlabeled_proper(n)
        );
    }
    println!(
        "inner-splitting, unlabeled: {:?}",
        (1..=10)
            .map(|n| count_unlabeled_alternating(n).to_string())
            .collect::<Vec<_>>()
    );
}
