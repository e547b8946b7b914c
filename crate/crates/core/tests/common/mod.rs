#![allow(dead_code)]

use leibniz_core::catalogue::{builtin, BUILTIN_NAMES};
use leibniz_core::{AlgebraSpec, Cochain, MatrixQ, Scalar, Theory};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Matrix `M` of the general `n3` Leibniz 2-cocycle: entry `(row, col)` holds
/// `sign * x_slot`, columns ordered `e1⊗e1, e1⊗e2, …, e3⊗e3`.
const CYCLE_PATTERN: [[(i64, usize); 9]; 3] = [
    [(0, 0), (1, 9), (1, 4), (-1, 9), (1, 6), (1, 7), (-1, 4), (1, 10), (1, 11)],
    [(0, 0), (1, 2), (1, 5), (-1, 2), (0, 0), (1, 8), (-1, 5), (-1, 8), (0, 0)],
    [(0, 0), (1, 3), (-1, 2), (-1, 3), (0, 0), (1, 1), (1, 2), (-1, 1), (0, 0)],
];

/// `phi_slot` for slot `1..=11` of the pattern above, as a Leibniz cochain.
pub fn cycle_from_pattern(slot: usize) -> Cochain {
    let mut values = Vec::new();
    for (row, cols) in CYCLE_PATTERN.iter().enumerate() {
        for (col, &(sign, x)) in cols.iter().enumerate() {
            if x == slot && sign != 0 {
                values.push(([col / 3 + 1, col % 3 + 1], row + 1, sign));
            }
        }
    }
    let refs: Vec<(&[usize], usize, i64)> = values.iter().map(|(t, o, s)| (&t[..], *o, *s)).collect();
    Cochain::from_int_values(Theory::Leibniz, 3, 2, &refs).unwrap()
}

/// The coboundary pattern with free entries `x1, x4, x7`.
pub fn coboundary_pattern(x1: i64, x4: i64, x7: i64) -> Cochain {
    Cochain::from_int_values(
        Theory::Leibniz,
        3,
        2,
        &[
            (&[1, 2], 1, x1),
            (&[1, 3], 1, x4),
            (&[2, 1], 1, -x1),
            (&[2, 3], 1, x7),
            (&[3, 1], 1, -x4),
            (&[3, 2], 1, -x7),
            (&[2, 3], 2, -x4),
            (&[3, 2], 2, x4),
            (&[2, 3], 3, x1),
            (&[3, 2], 3, -x1),
        ],
    )
    .unwrap()
}

pub fn all_builtins() -> Vec<AlgebraSpec> {
    let mut out = Vec::new();
    for &(name, params) in BUILTIN_NAMES {
        let p: Vec<Scalar> = match (name, params) {
            (_, 0) => vec![],
            ("d", _) => vec![Scalar::from_int(2), Scalar::from_int(3)],
            _ => vec![Scalar::new(1, 2)],
        };
        out.push(builtin(name, &p).unwrap());
    }
    out
}

pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_cochain(rng: &mut ChaCha8Rng, theory: Theory, degree: usize, dim: usize) -> Cochain {
    let len = Cochain::zero(theory, degree, dim).coefficients().len();
    let v = (0..len).map(|_| random_scalar(rng)).collect();
    Cochain::devectorize(theory, degree, dim, v).unwrap()
}

/// An invertible matrix with small rational entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> MatrixQ {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| random_scalar(rng)).collect()).collect();
        let m = MatrixQ::from_rows(rows).unwrap();
        if m.rank() == n {
            return m;
        }
    }
}
