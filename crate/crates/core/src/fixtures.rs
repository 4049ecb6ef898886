//! Operators with known verdicts, used by tests and examples.

use crate::exactlin::{Matrix, Rational};
use crate::rbcore::RBOperator;

fn weight_one(rows: &[&[i64]]) -> RBOperator {
    RBOperator::from_i64_rows(1, rows).expect("fixture rows are square")
}

/// The twelve weight-1 operators on `F^2`.
pub fn two_field_operators() -> Vec<RBOperator> {
    [
        [[0, 0], [0, 0]],
        [[-1, 0], [0, -1]],
        [[0, 0], [1, 0]],
        [[-1, 0], [-1, -1]],
        [[-1, 0], [0, 0]],
        [[0, 0], [0, -1]],
        [[0, 0], [-1, -1]],
        [[-1, 0], [1, 0]],
        [[-1, -1], [0, 0]],
        [[0, 1], [0, -1]],
        [[0, 1], [0, 0]],
        [[-1, -1], [0, -1]],
    ]
    .iter()
    .map(|m| weight_one(&[&m[0], &m[1]]))
    .collect()
}

/// The sixteen off-diagonal patterns of the weight-1 operators on `F^3`.
/// Entry `p[i][k] = 1` stands for `2 r_ii + 1` in row `i`, so each pattern
/// yields eight operators as the diagonal runs over `{0, -1}^3`.
pub const THREE_FIELD_PATTERNS: [[[u8; 3]; 3]; 16] = [
    [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 0, 0], [1, 1, 0]],
    [[0, 0, 0], [0, 0, 0], [1, 0, 0]],
    [[0, 0, 0], [0, 0, 0], [0, 1, 0]],
    [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
    [[0, 0, 0], [1, 0, 0], [1, 1, 0]],
    [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
    [[0, 1, 0], [0, 0, 0], [1, 1, 0]],
    [[0, 1, 1], [0, 0, 0], [0, 0, 0]],
    [[0, 1, 1], [0, 0, 0], [0, 1, 0]],
    [[0, 0, 0], [1, 0, 1], [0, 0, 0]],
    [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
    [[0, 0, 0], [1, 0, 1], [1, 0, 0]],
    [[0, 1, 1], [0, 0, 1], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    [[0, 0, 1], [1, 0, 1], [0, 0, 0]],
];

/// All 128 operators generated by [`THREE_FIELD_PATTERNS`].
pub fn three_field_operators() -> Vec<RBOperator> {
    let mut out = Vec::with_capacity(128);
    for pattern in &THREE_FIELD_PATTERNS {
        for diag in 0..8u8 {
            let d: [i64; 3] = std::array::from_fn(|i| -i64::from(diag >> i & 1));
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|i| {
                    (0..3)
                        .map(|k| {
                            if i == k {
                                d[i]
                            } else {
                                i64::from(pattern[i][k]) * (2 * d[i] + 1)
                            }
                        })
                        .collect()
                })
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            out.push(weight_one(&refs));
        }
    }
    out
}

/// The classical weight-1 operator on `F^n` with a split point `s`
/// (1-based, `1 ≤ s ≤ n`):
/// `R(e_i) = Σ_{l=i+1..s} e_l` for `i < s`, `R(e_s) = 0`, and
/// `R(e_i) = -Σ_{l=i..n} e_l` for `i > s`.
pub fn atkinson_miller(n: usize, s: usize) -> RBOperator {
    assert!((1..=n).contains(&s), "split point out of range");
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        if i < s {
            for l in i + 1..=s {
                m.set(i - 1, l - 1, Rational::one());
            }
        } else if i > s {
            for l in i..=n {
                m.set(i - 1, l - 1, Rational::from_integer(-1));
            }
        }
    }
    RBOperator::new(Rational::one(), m).expect("square")
}

/// A weight-1 operator on `F^5` whose tree has two levels below a source
/// and a second isolated source:
/// `R(e1) = e2 + e3 + e4`, `R(e2) = -e2 - e3 - e4`, `R(e3) = -e3`,
/// `R(e4) = 0`, `R(e5) = -e5`.
pub fn five_field_sample() -> RBOperator {
    weight_one(&[
        &[0, 1, 1, 1, 0],
        &[0, -1, -1, -1, 0],
        &[0, 0, -1, 0, 0],
        &[0, 0, 0, 0, 0],
        &[0, 0, 0, 0, -1],
    ])
}

/// Representatives of the non-splitting classes up to relabelling and `φ`
/// for `n = 2` and `n = 3`.
pub fn non_splitting_representatives(n: usize) -> Vec<RBOperator> {
    match n {
        2 => vec![weight_one(&[&[0, 1], &[0, 0]])],
        3 => vec![
            weight_one(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]),
            weight_one(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, -1]]),
            weight_one(&[&[0, 1, 1], &[0, -1, -1], &[0, 0, -1]]),
            weight_one(&[&[0, 1, 1], &[0, 0, 0], &[0, 0, 0]]),
            weight_one(&[&[0, 1, 1], &[0, -1, 0], &[0, 0, 0]]),
            weight_one(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
            weight_one(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, -1]]),
        ],
        _ => Vec::new(),
    }
}

/// Representatives of the splitting but not inner-splitting classes up to
/// relabelling and `φ` for `n = 2` and `n = 3`.
pub fn splitting_not_inner_representatives(n: usize) -> Vec<RBOperator> {
    match n {
        2 => vec![weight_one(&[&[-1, 0], &[0, 0]])],
        3 => vec![
            weight_one(&[&[0, 1, 0], &[0, -1, 0], &[0, 0, -1]]),
            weight_one(&[&[-1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
        ],
        _ => Vec::new(),
    }
}
