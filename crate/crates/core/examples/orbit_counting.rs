//! Count operators up to relabelling the basis, and up to phi as well.

use std::collections::BTreeSet;

use rblab::trees::{colorings, labeled_rooted_trees};

fn main() {
    for n in 1..=5 {
        let mut codes = BTreeSet::new();
        let mut orbits = BTreeSet::new();
        let (mut non_split, mut non_split_phi) = (BTreeSet::new(), BTreeSet::new());
        for t in labeled_rooted_trees(n) {
            for c in colorings(&t) {
                let code = c.canonical_code();
                let flipped = c.flip_colors().canonical_code();
                let key = code.clone().min(flipped);
                if !c.is_properly_colored() {
                    non_split.insert(code.clone());
                    non_split_phi.insert(key.clone());
                }
                codes.insert(code);
                orbits.insert(key);
            }
        }
        println!(
            "n={n}: {} classes, {} up to phi; non-splitting {} ({} up to phi)",
            codes.len(),
            orbits.len(),
            non_split.len(),
            non_split_phi.len()
        );
    }
}
