//! Cocycles, coboundaries and cohomology classes.

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::catalogue::lie_table_catalogue;
use crate::cochain::{Cochain, Theory, TupleSpace};
use crate::differential::differential;
use crate::error::{Error, Result};
use crate::linalg::{axpy, image_basis, is_zero_vector, kernel_basis, reduce_mod_subspace, zero_vector, MatrixQ, SubspaceBasis, Vector};

/// `Z^q`, `B^q` and a canonical complement of `B^q` in `Z^q`.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    /// Canonical cocycles whose classes form a basis of `H^q`.
    pub representatives: Vec<Cochain>,
    pub coboundary_basis: SubspaceBasis,
    pub cocycle_basis: SubspaceBasis,
    /// The representatives as an echelon basis (same vectors, same order).
    representative_basis: SubspaceBasis,
    differential: MatrixQ,
    algebra_dim: usize,
}

/// Result of reducing a cocycle modulo coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReduction {
    /// The canonical representative of the class (zero on coboundary pivots).
    pub canonical: Cochain,
    pub is_coboundary: bool,
    /// Coordinates of `canonical` in the report's representative basis.
    pub coordinates: Vector,
    /// `input - canonical`, an element of `B^q`.
    pub coboundary_part: Cochain,
}

/// Computes `H^q` of `a` with adjoint coefficients.
///
/// Representatives: every kernel vector is reduced modulo the echelon basis of
/// `B^q`, and the residues are row reduced. The resulting cocycles vanish on
/// the pivot coordinates of `B^q` and are in echelon form among themselves, so
/// the choice depends only on the frozen coordinate order.
pub fn cohomology(a: &AlgebraSpec, theory: Theory, q: usize) -> Result<CohomologyReport> {
    let d = differential(a, theory, q)?;
    let z = kernel_basis(&d);
    let ambient = TupleSpace::new(theory, q, a.dim()).coordinate_count();
    let b = if q == 0 {
        SubspaceBasis::empty(ambient)
    } else {
        image_basis(&differential(a, theory, q - 1)?)
    };
    let residues: Vec<Vector> = z
        .vectors()
        .iter()
        .map(|v| reduce_mod_subspace(v, &b).map(|(r, _)| r))
        .collect::<Result<_>>()?;
    let reps = SubspaceBasis::span(ambient, &residues)?;
    let representatives = reps
        .vectors()
        .iter()
        .map(|v| Cochain::devectorize(theory, q, a.dim(), v.clone()))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(reps.dim() + b.dim(), z.dim());
    Ok(CohomologyReport {
        theory,
        degree: q,
        dim_z: z.dim(),
        dim_b: b.dim(),
        dim_h: reps.dim(),
        representatives,
        coboundary_basis: b,
        cocycle_basis: z,
        representative_basis: reps,
        differential: d,
        algebra_dim: a.dim(),
    })
}

impl CohomologyReport {
    pub fn is_cocycle(&self, c: &Cochain) -> Result<bool> {
        self.check_shape(c)?;
        Ok(is_zero_vector(&self.differential.mul_vec(c.coefficients())?))
    }

    pub fn is_coboundary(&self, c: &Cochain) -> Result<bool> {
        self.check_shape(c)?;
        self.coboundary_basis.contains(c.coefficients())
    }

    fn check_shape(&self, c: &Cochain) -> Result<()> {
        if c.theory() != self.theory || c.degree() != self.degree || c.dim() != self.algebra_dim {
            return Err(Error::Shape(format!(
                "{} cochain of degree {} against {} cohomology in degree {}",
                c.theory(),
                c.degree(),
                self.theory,
                self.degree
            )));
        }
        Ok(())
    }

    /// Reduces a cocycle to the canonical representative of its class.
    pub fn class_reduce(&self, c: &Cochain) -> Result<ClassReduction> {
        if !self.is_cocycle(c)? {
            return Err(Error::NotCocycle);
        }
        let (residue, _) = reduce_mod_subspace(c.coefficients(), &self.coboundary_basis)?;
        let coordinates: Vector = self.representative_basis.pivots().iter().map(|&p| residue[p].clone()).collect();
        let mut rebuilt = zero_vector(residue.len());
        for (x, r) in coordinates.iter().zip(self.representative_basis.vectors()) {
            axpy(&mut rebuilt, x, r);
        }
        debug_assert_eq!(rebuilt, residue, "residue lies in the representative span");
        let canonical = Cochain::devectorize(self.theory, self.degree, self.algebra_dim, residue)?;
        let coboundary_part = c.try_sub(&canonical)?;
        Ok(ClassReduction {
            is_coboundary: canonical.is_zero(),
            canonical,
            coordinates,
            coboundary_part,
        })
    }

    /// Whether the given cocycles are linearly independent modulo `B^q`.
    pub fn independent_mod_coboundaries(&self, cocycles: &[Cochain]) -> Result<bool> {
        let mut vs = Vec::with_capacity(cocycles.len());
        for c in cocycles {
            vs.push(self.class_reduce(c)?.coordinates);
        }
        Ok(SubspaceBasis::span(self.dim_h, &vs)?.dim() == cocycles.len())
    }

    pub fn differential_matrix(&self) -> &MatrixQ {
        &self.differential
    }
}

/// `class_reduce` without a precomputed report.
pub fn class_reduce(a: &AlgebraSpec, theory: Theory, q: usize, c: &Cochain) -> Result<ClassReduction> {
    cohomology(a, theory, q)?.class_reduce(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieTableRow {
    pub algebra: String,
    pub h1: usize,
    pub h2: usize,
    pub h3: usize,
}

/// Lie cohomology dimensions in degrees 1–3 for each algebra.
pub fn lie_table(catalogue: &[AlgebraSpec]) -> Result<Vec<LieTableRow>> {
    catalogue
        .iter()
        .map(|a| {
            let dims: Vec<usize> = (1..=3)
                .map(|q| cohomology(a, Theory::Lie, q).map(|r| r.dim_h))
                .collect::<Result<_>>()?;
            Ok(LieTableRow {
                algebra: a.label(),
                h1: dims[0],
                h2: dims[1],
                h3: dims[2],
            })
        })
        .collect()
}

/// The seven-row table for `n3, r31, d(1:1), d(2:3), d(1:0), d(1:-1), sl2`.
pub fn default_lie_table() -> Result<Vec<LieTableRow>> {
    lie_table(&lie_table_catalogue())
}

/// `H^q` dimension only.
pub fn cohomology_dim(a: &AlgebraSpec, theory: Theory, q: usize) -> Result<usize> {
    cohomology(a, theory, q).map(|r| r.dim_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::builtin;

    #[test]
    fn n3_leibniz_h2() {
        let n3 = builtin("n3", &[]).unwrap();
        let r = cohomology(&n3, Theory::Leibniz, 2).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), (11, 3, 8));
        for rep in &r.representatives {
            assert!(r.is_cocycle(rep).unwrap());
            let red = r.class_reduce(rep).unwrap();
            assert_eq!(&red.canonical, rep);
        }
    }

    #[test]
    fn n3_and_sl2_lie_dimensions() {
        let n3 = builtin("n3", &[]).unwrap();
        let sl2 = builtin("sl2", &[]).unwrap();
        let dims = |a: &AlgebraSpec| (1..=3).map(|q| cohomology_dim(a, Theory::Lie, q).unwrap()).collect::<Vec<_>>();
        assert_eq!(dims(&n3), vec![4, 5, 2]);
        assert_eq!(dims(&sl2), vec![0, 0, 0]);
    }

    #[test]
    fn abelian_leibniz_h2_is_everything() {
        let r = cohomology(&AlgebraSpec::abelian(3), Theory::Leibniz, 2).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), (27, 0, 27));
    }

    #[test]
    fn coboundaries_reduce_to_zero() {
        let n3 = builtin("n3", &[]).unwrap();
        let r = cohomology(&n3, Theory::Leibniz, 2).unwrap();
        for b in r.coboundary_basis.vectors() {
            let c = Cochain::devectorize(Theory::Leibniz, 2, 3, b.clone()).unwrap();
            let red = r.class_reduce(&c).unwrap();
            assert!(red.is_coboundary);
            assert!(is_zero_vector(&red.coordinates));
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let n3 = builtin("n3", &[]).unwrap();
        let r = cohomology(&n3, Theory::Leibniz, 2).unwrap();
        let c = Cochain::from_int_values(Theory::Leibniz, 3, 2, &[(&[1, 1], 1, 1)]).unwrap();
        assert_eq!(r.class_reduce(&c), Err(Error::NotCocycle));
    }

    #[test]
    fn degree_zero_has_no_coboundaries() {
        let n3 = builtin("n3", &[]).unwrap();
        let r = cohomology(&n3, Theory::Leibniz, 0).unwrap();
        assert_eq!(r.dim_b, 0);
        // H^0 = {a : [x, a] = 0 for all x} = span(e1) for n3.
        assert_eq!(r.dim_h, 1);
    }
}
