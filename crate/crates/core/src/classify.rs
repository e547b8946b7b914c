//! Isomorphism invariants of three-dimensional Lie algebras and of
//! three-dimensional nilpotent Leibniz algebras.

use std::fmt;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::linalg::{MatrixQ, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieLabel {
    Abelian,
    N3,
    /// `r2 ⊕ C`, also `d(1:0)`.
    R2PlusC,
    /// Generic `d(r:s)`, identified by `(r+s)^2/(rs)`.
    DFamily(Scalar),
    /// `d(1:1)`: repeated eigenvalue with a Jordan block.
    R3,
    /// Scalar action on the derived algebra.
    R31,
    /// `d(1:-1)`.
    R3Minus1,
    Sl2,
}

impl fmt::Display for LieLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieLabel::Abelian => write!(f, "abelian"),
            LieLabel::N3 => write!(f, "n3 (Heisenberg)"),
            LieLabel::R2PlusC => write!(f, "r2+C (= d(1:0))"),
            LieLabel::DFamily(inv) => write!(f, "d(r:s) family, (r+s)^2/(rs) = {inv}"),
            LieLabel::R3 => write!(f, "r3 (= d(1:1))"),
            LieLabel::R31 => write!(f, "r3,1"),
            LieLabel::R3Minus1 => write!(f, "r3,-1 (= d(1:-1))"),
            LieLabel::Sl2 => write!(f, "sl2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieClass {
    pub label: LieLabel,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// `tr^2/det` of `ad_x` on `[g,g]` when `dim [g,g] = 2`.
    pub invariant: Option<Scalar>,
}

fn require_dim3(a: &AlgebraSpec) -> Result<()> {
    if a.dim() != 3 {
        return Err(Error::Unsupported(format!("classification of a {}-dimensional algebra", a.dim())));
    }
    Ok(())
}

/// Coordinates of `v` in the subspace basis, assuming `v` lies in it.
fn coords_in(basis: &crate::linalg::SubspaceBasis, v: &[Scalar]) -> Vector {
    basis.pivots().iter().map(|&p| v[p].clone()).collect()
}

/// A standard basis vector outside `s`.
fn outside(a: &AlgebraSpec, s: &crate::linalg::SubspaceBasis) -> Vector {
    let k = (0..a.dim()).find(|k| !s.pivots().contains(k)).expect("proper subspace");
    a.basis_vector(k)
}

pub fn classify_lie3(a: &AlgebraSpec) -> Result<LieClass> {
    require_dim3(a)?;
    a.require_lie()?;
    let derived = a.derived_algebra();
    let center = a.annihilator();
    let mut invariant = None;
    let label = match derived.dim() {
        0 => LieLabel::Abelian,
        1 => {
            if center.contains(&derived.vectors()[0])? {
                LieLabel::N3
            } else {
                LieLabel::R2PlusC
            }
        }
        2 => {
            let x = outside(a, &derived);
            let cols: Vec<Vector> = derived.vectors().iter().map(|d| coords_in(&derived, &a.bracket(&x, d))).collect();
            let m = MatrixQ::from_columns(&cols, 2)?;
            let tr = &m[(0, 0)] + &m[(1, 1)];
            let det = m.determinant()?;
            let inv = &(&tr * &tr) / &det;
            invariant = Some(inv.clone());
            if inv.is_zero() {
                LieLabel::R3Minus1
            } else if inv == Scalar::from_int(4) {
                let scalar = m[(0, 1)].is_zero() && m[(1, 0)].is_zero() && m[(0, 0)] == m[(1, 1)];
                if scalar {
                    LieLabel::R31
                } else {
                    LieLabel::R3
                }
            } else {
                LieLabel::DFamily(inv)
            }
        }
        _ => LieLabel::Sl2,
    };
    Ok(LieClass {
        label,
        derived_dim: derived.dim(),
        center_dim: center.dim(),
        invariant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeibnizLabel {
    Lambda1,
    Lambda2,
    Lambda3,
    /// `lambda4(α)` with `j = 4α - 1`.
    Lambda4 { j: Scalar },
    Lambda5,
    Lambda6,
    Unmatched,
}

impl fmt::Display for LeibnizLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeibnizLabel::Lambda1 => write!(f, "lambda1"),
            LeibnizLabel::Lambda2 => write!(f, "lambda2"),
            LeibnizLabel::Lambda3 => write!(f, "lambda3"),
            LeibnizLabel::Lambda4 { j } => write!(f, "lambda4 family, j = {j}"),
            LeibnizLabel::Lambda5 => write!(f, "lambda5"),
            LeibnizLabel::Lambda6 => write!(f, "lambda6"),
            LeibnizLabel::Unmatched => write!(f, "no match in the nilpotent list"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizFingerprint {
    pub lcs_dims: Vec<usize>,
    pub is_lie: bool,
    pub annihilator_dim: usize,
    /// Rank of `B(x,y) = [x,y]` on `L/Ann(L)` when `dim L^2 = 1`.
    pub bilinear_rank: Option<usize>,
    pub sym_rank: Option<usize>,
    pub antisym_rank: Option<usize>,
    /// `det(S)/Pf(A)^2` for `B = S + A` on a two-dimensional quotient with `A ≠ 0`.
    pub j_invariant: Option<Scalar>,
    pub label: LeibnizLabel,
}

pub fn fingerprint_leibniz3(a: &AlgebraSpec) -> Result<LeibnizFingerprint> {
    require_dim3(a)?;
    a.require_leibniz()?;
    let lcs = a.lower_central_series();
    if lcs.last() != Some(&0) {
        return Err(Error::NotNilpotent(lcs));
    }
    let is_lie = a.is_lie();
    let ann = a.annihilator();
    let mut fp = LeibnizFingerprint {
        lcs_dims: lcs.clone(),
        is_lie,
        annihilator_dim: ann.dim(),
        bilinear_rank: None,
        sym_rank: None,
        antisym_rank: None,
        j_invariant: None,
        label: LeibnizLabel::Unmatched,
    };
    let derived = a.derived_algebra();
    if derived.dim() == 1 {
        let pivot = derived.pivots()[0];
        let complement: Vec<Vector> =
            (0..3).filter(|k| !ann.pivots().contains(k)).map(|k| a.basis_vector(k)).collect();
        let m = complement.len();
        let form = |x: &Vector, y: &Vector| a.bracket(x, y)[pivot].clone();
        let b: Vec<Vector> = complement.iter().map(|x| complement.iter().map(|y| form(x, y)).collect()).collect();
        let half = Scalar::new(1, 2);
        let sym: Vec<Vector> =
            (0..m).map(|i| (0..m).map(|j| &(&b[i][j] + &b[j][i]) * &half).collect()).collect();
        let anti: Vec<Vector> =
            (0..m).map(|i| (0..m).map(|j| &(&b[i][j] - &b[j][i]) * &half).collect()).collect();
        let rank = |rows: Vec<Vector>| MatrixQ::from_rows_with_cols(rows, m).map(|x| x.rank());
        fp.bilinear_rank = Some(rank(b.clone())?);
        let sym_rank = rank(sym.clone())?;
        let antisym_rank = rank(anti.clone())?;
        fp.sym_rank = Some(sym_rank);
        fp.antisym_rank = Some(antisym_rank);
        if m == 2 && antisym_rank == 2 {
            let det_s = &(&sym[0][0] * &sym[1][1]) - &(&sym[0][1] * &sym[1][0]);
            let pf = &anti[0][1];
            fp.j_invariant = Some(&det_s / &(pf * pf));
        }
    }
    fp.label = match (lcs.as_slice(), is_lie) {
        ([3, 0], _) => LeibnizLabel::Lambda1,
        ([3, 2, 1, 0], _) => LeibnizLabel::Lambda6,
        ([3, 1, 0], true) => LeibnizLabel::Lambda3,
        ([3, 1, 0], false) => match (3 - ann.dim(), fp.antisym_rank, &fp.j_invariant) {
            (1, _, _) => LeibnizLabel::Lambda2,
            (2, Some(0), _) => LeibnizLabel::Lambda5,
            (2, Some(2), Some(j)) => LeibnizLabel::Lambda4 { j: j.clone() },
            _ => LeibnizLabel::Unmatched,
        },
        _ => LeibnizLabel::Unmatched,
    };
    Ok(fp)
}
