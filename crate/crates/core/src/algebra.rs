//! Finite-dimensional algebras given by structure constants.
//!
//! Indices are 0-based internally; every user-facing label is 1-based so that
//! `e1, e2, e3` read the same way as hand-written bracket tables.

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, zero_vector, MatrixQ, SubspaceBasis, Vector};
use crate::scalar::Scalar;

/// Structure constants `c[i][j][k]`: the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    dim: usize,
    constants: Vec<Scalar>,
    name: Option<String>,
}

/// A failing basis triple: 1-based indices plus the defect vector.
pub type TripleDefect = ((usize, usize, usize), Vector);

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IdentityReport {
    pub is_antisymmetric: bool,
    /// 1-based pairs `(i, j)` with `[e_i, e_j] != -[e_j, e_i]`, `i <= j`.
    pub antisymmetry_defect: Vec<(usize, usize)>,
    pub jacobi_defect: Vec<TripleDefect>,
    pub leibniz_defect: Vec<TripleDefect>,
}

impl IdentityReport {
    pub fn is_lie(&self) -> bool {
        self.is_antisymmetric && self.jacobi_defect.is_empty()
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_defect.is_empty()
    }
}

impl AlgebraSpec {
    pub fn zero(dim: usize) -> Self {
        AlgebraSpec {
            dim,
            constants: vec![Scalar::zero(); dim * dim * dim],
            name: None,
        }
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        Self::zero(dim).with_name(format!("abelian({dim})"))
    }

    /// Builds an algebra from 1-based `(i, j, k, c)` entries meaning `[e_i, e_j] += c e_k`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut a = Self::zero(dim);
        for (i, j, k, c) in entries {
            for &x in [i, j, k] {
                if x == 0 || x > dim {
                    return Err(Error::IndexOutOfRange { index: x, max: dim });
                }
            }
            let slot = a.offset(i - 1, j - 1, k - 1);
            a.constants[slot] += c;
        }
        Ok(a)
    }

    /// Convenience for the integer tables of the catalogue.
    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let e: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, Scalar::from_int(c))).collect();
        Self::from_entries(dim, &e).expect("catalogue indices are in range")
    }

    /// Lie-style tables list only `i < j`; the opposite brackets are filled in
    /// with the opposite sign.
    pub fn antisymmetric_from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut all = Vec::with_capacity(entries.len() * 2);
        for (i, j, k, c) in entries {
            if i == j {
                return Err(Error::Format(format!("antisymmetric table has a diagonal entry ({i},{j})")));
            }
            all.push((*i, *j, *k, c.clone()));
            all.push((*j, *i, *k, -c));
        }
        Self::from_entries(dim, &all)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("algebra of dimension {}", self.dim))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`, 0-based.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let o = self.offset(i, j, k);
        self.constants[o] = value;
    }

    /// `[e_i, e_j]` as a coordinate vector, 0-based.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.constants[o..o + self.dim]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = zero_vector(self.dim);
        v[i] = Scalar::one();
        v
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vector(&self.constants)
    }

    /// Nonzero entries as 1-based `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out.push((i + 1, j + 1, k + 1, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Same structure constants, ignoring the label.
    pub fn same_constants(&self, other: &AlgebraSpec) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }

    /// Structure constants in the basis `f_a = Σ_i p[i][a] e_i` (columns of `p`).
    pub fn change_basis(&self, p: &MatrixQ) -> Result<AlgebraSpec> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::Shape(format!("{}x{} basis change for dimension {n}", p.rows(), p.cols())));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Shape("basis change matrix is singular".into()))?;
        let cols: Vec<Vector> = (0..n).map(|a| p.column(a)).collect();
        let mut out = AlgebraSpec::zero(n);
        out.name = self.name.clone();
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket(&cols[a], &cols[b]);
                let w = inv.mul_vec(&v)?;
                for (k, x) in w.into_iter().enumerate() {
                    out.set(a, b, k, x);
                }
            }
        }
        Ok(out)
    }

    /// Checks `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on every basis triple.
    pub fn check_leibniz(&self) -> IdentityReport {
        let mut report = self.antisymmetry_part();
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = self.basis_vector(i);
                    let mut d = self.bracket(&ei, self.bracket_basis(j, k));
                    let ij = self.bracket_basis(i, j).to_vec();
                    let ik = self.bracket_basis(i, k).to_vec();
                    axpy(&mut d, &-Scalar::one(), &self.bracket(&ij, &self.basis_vector(k)));
                    axpy(&mut d, &Scalar::one(), &self.bracket(&ik, &self.basis_vector(j)));
                    if !is_zero_vector(&d) {
                        report.leibniz_defect.push(((i + 1, j + 1, k + 1), d));
                    }
                }
            }
        }
        report
    }

    /// Antisymmetry and the Jacobi identity `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0`.
    pub fn check_lie(&self) -> IdentityReport {
        let mut report = self.check_leibniz();
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut d = zero_vector(n);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_basis(b, c).to_vec();
                        axpy(&mut d, &Scalar::one(), &self.bracket(&self.basis_vector(a), &inner));
                    }
                    if !is_zero_vector(&d) {
                        report.jacobi_defect.push(((i + 1, j + 1, k + 1), d));
                    }
                }
            }
        }
        report
    }

    fn antisymmetry_part(&self) -> IdentityReport {
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ok = (0..n).all(|k| (self.c(i, j, k) + self.c(j, i, k)).is_zero());
                if !ok {
                    bad.push((i + 1, j + 1));
                }
            }
        }
        IdentityReport {
            is_antisymmetric: bad.is_empty(),
            antisymmetry_defect: bad,
            ..Default::default()
        }
    }

    pub fn is_lie(&self) -> bool {
        self.check_lie().is_lie()
    }

    pub fn is_leibniz(&self) -> bool {
        self.check_leibniz().is_leibniz()
    }

    pub fn require_lie(&self) -> Result<()> {
        if self.is_lie() {
            Ok(())
        } else {
            Err(Error::NotLie(self.label()))
        }
    }

    pub fn require_leibniz(&self) -> Result<()> {
        if self.is_leibniz() {
            Ok(())
        } else {
            Err(Error::NotLeibniz(self.label()))
        }
    }

    /// `[A, B]` for subspaces given by spanning sets.
    pub fn bracket_span(&self, left: &[Vector], right: &[Vector]) -> SubspaceBasis {
        let mut gens = Vec::new();
        for x in left {
            for y in right {
                gens.push(self.bracket(x, y));
            }
        }
        SubspaceBasis::span(self.dim, &gens).expect("bracket values have the algebra dimension")
    }

    pub fn derived_algebra(&self) -> SubspaceBasis {
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        self.bracket_span(&basis, &basis)
    }

    /// Two-sided annihilator `{x : [x, L] = 0 = [L, x]}`.
    pub fn annihilator(&self) -> SubspaceBasis {
        let n = self.dim;
        // x ↦ ([x, e_j], [e_j, x]) for all j, stacked.
        let mut m = MatrixQ::zeros(2 * n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[((j * n + k), i)] = self.c(i, j, k).clone();
                    m[(n * n + j * n + k, i)] = self.c(j, i, k).clone();
                }
            }
        }
        crate::linalg::kernel_basis(&m)
    }

    /// Dimensions of `L^1 ⊇ L^2 ⊇ …` with `L^{k+1} = [L^k, L]`, stopping once the
    /// series stabilises (the last entry is 0 exactly when `L` is nilpotent).
    pub fn lower_central_series(&self) -> Vec<usize> {
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        let mut current = SubspaceBasis::span(self.dim, &basis).expect("standard basis");
        let mut dims = vec![current.dim()];
        loop {
            let next = self.bracket_span(current.vectors(), &basis);
            if next.dim() == current.dim() {
                return dims;
            }
            dims.push(next.dim());
            if next.is_empty() {
                return dims;
            }
            current = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Smallest `k` with `L^k = 0`, when nilpotent.
    pub fn nilindex(&self) -> Option<usize> {
        let s = self.lower_central_series();
        (s.last() == Some(&0)).then_some(s.len())
    }
}
