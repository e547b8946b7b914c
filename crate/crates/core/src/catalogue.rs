//! Built-in algebras.
//!
//! Three-dimensional Lie algebras are entered as *bracket matrices*: column 1,
//! 2, 3 hold the coordinates of `[e1,e2]`, `[e1,e3]`, `[e2,e3]` respectively, and
//! row `k` is the coefficient of `e_k`. The opposite brackets are implied by
//! antisymmetry. The nilpotent Leibniz list `lambda1`…`lambda6` is given by its
//! nonzero brackets directly.

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Every name accepted by [`builtin`], with its parameter count.
pub const BUILTIN_NAMES: &[(&str, usize)] = &[
    ("n3", 0),
    ("r31", 0),
    ("sl2", 0),
    ("d", 2),
    ("lambda1", 0),
    ("lambda2", 0),
    ("lambda3", 0),
    ("lambda4", 1),
    ("lambda5", 0),
    ("lambda6", 0),
];

/// Decodes a 3×3 bracket matrix (rows = `e1,e2,e3` coefficients, columns =
/// `[e1,e2], [e1,e3], [e2,e3]`) into an antisymmetric algebra.
pub fn from_bracket_matrix(m: &[[Scalar; 3]; 3]) -> AlgebraSpec {
    let pairs = [(1, 2), (1, 3), (2, 3)];
    let mut entries = Vec::new();
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for (row, coeffs) in m.iter().enumerate() {
            let c = &coeffs[col];
            if !c.is_zero() {
                entries.push((i, j, row + 1, c.clone()));
            }
        }
    }
    AlgebraSpec::antisymmetric_from_entries(3, &entries).expect("3x3 table")
}

pub fn bracket_matrix_i64(m: [[i64; 3]; 3]) -> AlgebraSpec {
    from_bracket_matrix(&m.map(|row| row.map(Scalar::from_int)))
}

/// Inverse of [`from_bracket_matrix`] for three-dimensional algebras.
pub fn to_bracket_matrix(a: &AlgebraSpec) -> Result<[[Scalar; 3]; 3]> {
    if a.dim() != 3 {
        return Err(Error::Unsupported(format!("bracket matrix of a {}-dimensional algebra", a.dim())));
    }
    let pairs = [(0, 1), (0, 2), (1, 2)];
    Ok(std::array::from_fn(|row| std::array::from_fn(|col| {
        let (i, j) = pairs[col];
        a.c(i, j, row).clone()
    })))
}

/// `d(r:s)`: bracket matrix with columns `(0,0,0)`, `(r,0,0)`, `(1,s,0)`.
pub fn d_family(r: Scalar, s: Scalar) -> AlgebraSpec {
    let z = Scalar::zero;
    let label = format!("d({r}:{s})");
    from_bracket_matrix(&[
        [z(), r, Scalar::one()],
        [z(), z(), s],
        [z(), z(), z()],
    ])
    .with_name(label)
}

pub fn n3() -> AlgebraSpec {
    bracket_matrix_i64([[0, 0, 1], [0, 0, 0], [0, 0, 0]]).with_name("n3")
}

/// Looks up a built-in algebra by name.
pub fn builtin(name: &str, params: &[Scalar]) -> Result<AlgebraSpec> {
    let expected = BUILTIN_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, k)| k)
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
    if params.len() != expected {
        return Err(Error::Parameters {
            name: name.to_string(),
            expected,
            got: params.len(),
        });
    }
    let a = match name {
        "n3" => n3(),
        "lambda3" => n3().with_name("lambda3"),
        "r31" => bracket_matrix_i64([[0, 1, 0], [0, 0, 1], [0, 0, 0]]).with_name("r31"),
        "sl2" => bracket_matrix_i64([[0, 0, 1], [0, 1, 0], [1, 0, 0]]).with_name("sl2"),
        "d" => d_family(params[0].clone(), params[1].clone()),
        "lambda1" => AlgebraSpec::abelian(3).with_name("lambda1"),
        "lambda2" => AlgebraSpec::from_int_entries(3, &[(1, 1, 2, 1)]).with_name("lambda2"),
        "lambda4" => {
            let alpha = params[0].clone();
            AlgebraSpec::from_entries(
                3,
                &[
                    (2, 2, 1, Scalar::one()),
                    (3, 3, 1, alpha.clone()),
                    (2, 3, 1, Scalar::one()),
                ],
            )?
            .with_name(format!("lambda4({alpha})"))
        }
        "lambda5" => AlgebraSpec::from_int_entries(3, &[(2, 2, 1, 1), (3, 2, 1, 1), (2, 3, 1, 1)]).with_name("lambda5"),
        "lambda6" => AlgebraSpec::from_int_entries(3, &[(3, 3, 1, 1), (1, 3, 2, 1)]).with_name("lambda6"),
        _ => unreachable!("name checked against BUILTIN_NAMES"),
    };
    Ok(a)
}

/// The seven algebras of the three-dimensional Lie cohomology table, in table
/// order; `d(r:s)` is sampled at `(2, 3)`.
pub fn lie_table_catalogue() -> Vec<AlgebraSpec> {
    let q = Scalar::from_int;
    vec![
        n3(),
        builtin("r31", &[]).expect("builtin"),
        d_family(q(1), q(1)),
        d_family(q(2), q(3)),
        d_family(q(1), q(0)),
        d_family(q(1), q(-1)),
        builtin("sl2", &[]).expect("builtin"),
    ]
}
