//! Dense exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Scalar>`; matrices are row-major. Everything here is
//! small (ambient dimensions stay below a few hundred), so no attempt is made to
//! exploit sparsity.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += factor * v`
pub fn axpy(acc: &mut [Scalar], factor: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if factor.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += factor * x;
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`MatrixQ::from_rows`] but keeps the column count when `rows` is empty.
    pub fn from_rows_with_cols(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend(r);
        }
        Ok(MatrixQ { rows: n, cols, entries })
    }

    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!("column {j} has {} entries, expected {rows}", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        MatrixQ {
            rows,
            cols,
            entries: data.iter().map(|&x| Scalar::from_int(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Determinant of a square matrix by fraction-producing elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] / &pivot;
                for j in c..n {
                    let v = &f * &m[(c, j)];
                    m[(r, j)] -= &v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<MatrixQ> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for MatrixQ {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatrixQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form and pivot columns. Pivots are chosen left to right,
/// taking the first nonzero entry in each column.
pub fn rref(m: &MatrixQ) -> (MatrixQ, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] *= &inv;
            }
        }
        let pivot_row = a.row(r)[c..].to_vec();
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for (off, x) in pivot_row.iter().enumerate() {
                if !x.is_zero() {
                    let v = &f * x;
                    a[(i, c + off)] -= &v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A linearly independent family of vectors kept in reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Echelonises the span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = MatrixQ::from_rows_with_cols(vectors.to_vec(), ambient_dim)?;
        let (r, pivots) = rref(&m);
        let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&reduce_mod_subspace(v, self)?.0))
    }

    /// Exact equality of the spanned subspaces. RREF is canonical, so this is
    /// plain equality, but the ambient dimensions must agree too.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self == other
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn join(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Shape(format!(
                "subspaces of dimension {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        SubspaceBasis::span(self.ambient_dim, &all)
    }
}

/// Right null space of `m`.
pub fn kernel_basis(m: &MatrixQ) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = zero_vector(n);
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            let x = &r[(i, f)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        vectors.push(v);
    }
    SubspaceBasis::span(n, &vectors).expect("kernel vectors have the column length")
}

/// Column space of `m`, in reduced echelon form.
pub fn image_basis(m: &MatrixQ) -> SubspaceBasis {
    SubspaceBasis::span(m.rows(), &m.transpose().row_vectors()).expect("columns have the row length")
}

/// Splits `v` as `residue + Σ coefficients[i] · s.vectors[i]` where `residue`
/// vanishes on every pivot column of `s`.
pub fn reduce_mod_subspace(v: &[Scalar], s: &SubspaceBasis) -> Result<(Vector, Vector)> {
    if v.len() != s.ambient_dim {
        return Err(Error::Shape(format!(
            "vector of length {} in ambient dimension {}",
            v.len(),
            s.ambient_dim
        )));
    }
    let mut residue = v.to_vec();
    let mut coefficients = Vec::with_capacity(s.dim());
    // Rows are in RREF, so each pivot coordinate is touched only by its own row.
    for (row, &p) in s.vectors.iter().zip(&s.pivots) {
        let c = residue[p].clone();
        if !c.is_zero() {
            axpy(&mut residue, &-&c, row);
        }
        coefficients.push(c);
    }
    Ok((residue, coefficients))
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve(m: &MatrixQ, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), m.rows())));
    }
    let mut aug = MatrixQ::zeros(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols())] = b[i].clone();
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = zero_vector(m.cols());
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, m.cols())].clone();
    }
    Ok(Some(x))
}
