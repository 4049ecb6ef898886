//! Published counts of weight-1 operators on `F^n`, for `n = 1..5`.

use super::OperatorClass;

#[derive(Clone, Copy, Debug)]
pub struct ReferenceTable {
    pub class: OperatorClass,
    /// Operators, `n = 1..=5`.
    pub labeled: [u64; 5],
    /// Operators up to relabelling of the basis, `n = 1..=5`.
    pub unlabeled: [u64; 5],
    pub labeled_formula: &'static str,
    pub labeled_oeis: &'static str,
    pub unlabeled_oeis: &'static str,
    /// The formula / sequence identification is only conjectured.
    pub conjectural: bool,
}

pub const TABLES: [ReferenceTable; 4] = [
    ReferenceTable {
        class: OperatorClass::All,
        labeled: [2, 12, 128, 2000, 41472],
        unlabeled: [2, 7, 26, 107, 458],
        labeled_formula: "2^n(n+1)^(n-1)",
        labeled_oeis: "A097629",
        unlabeled_oeis: "A000151",
        conjectural: false,
    },
    ReferenceTable {
        class: OperatorClass::Splitting,
        labeled: [2, 8, 50, 432, 4802],
        unlabeled: [2, 5, 12, 30, 74],
        labeled_formula: "2(n+2)^(n-1)",
        labeled_oeis: "A007830",
        unlabeled_oeis: "A000106",
        conjectural: true,
    },
    ReferenceTable {
        class: OperatorClass::InnerSplitting,
        labeled: [2, 6, 32, 250, 2592],
        unlabeled: [2, 4, 8, 18, 40],
        labeled_formula: "2(n+1)^(n-1)",
        labeled_oeis: "2*A000272",
        unlabeled_oeis: "2*A000081",
        conjectural: false,
    },
    ReferenceTable {
        class: OperatorClass::NonSplitting,
        labeled: [0, 4, 78, 1568, 36670],
        unlabeled: [0, 2, 14, 77, 384],
        labeled_formula: "",
        labeled_oeis: "",
        unlabeled_oeis: "",
        conjectural: false,
    },
];

/// Unlabelled counts of all operators for `n = 1..=8`.
pub const UNLABELED_ALL_EXTENDED: [u64; 8] = [2, 7, 26, 107, 458, 2058, 9498, 44947];

pub fn table(class: OperatorClass) -> &'static ReferenceTable {
    TABLES
        .iter()
        .find(|t| t.class == class)
        .expect("every class has a table")
}

/// Reference labelled count for `n`, if tabulated.
pub fn labeled(class: OperatorClass, n: usize) -> Option<u64> {
    (1..=5).contains(&n).then(|| table(class).labeled[n - 1])
}

/// Reference unlabelled count for `n`, if tabulated.
pub fn unlabeled(class: OperatorClass, n: usize) -> Option<u64> {
    if class == OperatorClass::All {
        return UNLABELED_ALL_EXTENDED.get(n.wrapping_sub(1)).copied();
    }
    (1..=5).contains(&n).then(|| table(class).unlabeled[n - 1])
}
