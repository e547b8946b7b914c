//! Infinitesimal and second-order deformations.
//!
//! For a basis `φ_1…φ_m` of `H^2` the universal infinitesimal bracket is
//! `μ_0 + Σ t_i φ_i`. Writing `μ∘μ = 0` for the Leibniz identity, the
//! coefficient of `t_i t_j` (`i <= j`) in `(μ_0 + Σ t_i φ_i + Σ t_i t_j ψ_ij)∘(…)`
//! is `½ Ω_ij + [μ_0, ψ_ij] = ½ Ω_ij - δψ_ij`, where
//! `Ω_ii = [φ_i, φ_i]` and `Ω_ij = [φ_i, φ_j] + [φ_j, φ_i]`. The class of `Ω_ij`
//! in `H^3` is the obstruction; its coboundary part is absorbed by `ψ_ij`, and
//! the harmonic part contributes `t_i t_j` to the quadratic base relations.

use std::collections::BTreeMap;

use crate::algebra::AlgebraSpec;
use crate::cochain::{graded_bracket, structure_cochain, Cochain, Theory};
use crate::cohomology::{cohomology, CohomologyReport};
use crate::error::{Error, Result};
use crate::fixtures::{is_n3, n3_cocycles};
use crate::linalg::{reduce_mod_subspace, solve, Vector};
use crate::poly::{normalized_relations, pair_index, pairs, Poly, QuadraticRelation};
use crate::scalar::Scalar;

/// Where the `H^2` basis came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisSource {
    /// The hand-picked `n3` cocycles from [`crate::fixtures`].
    Pinned,
    /// The engine's canonical representatives.
    Canonical,
}

#[derive(Clone, Debug)]
pub struct InfinitesimalDeformation {
    pub base_algebra: AlgebraSpec,
    pub theory: Theory,
    pub parameters: Vec<String>,
    pub cocycles: Vec<Cochain>,
    pub basis_source: BasisSource,
}

impl InfinitesimalDeformation {
    /// `μ_0 + Σ t_i μ_i`.
    pub fn bracket(&self) -> PolyBracket {
        PolyBracket::assemble(&self.base_algebra, &self.cocycles, &BTreeMap::new())
    }
}

/// Structure constants valued in polynomials of the deformation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBracket {
    dim: usize,
    params: usize,
    table: Vec<Poly>,
}

impl PolyBracket {
    /// `μ_0 + Σ t_i φ_i + Σ_{i<=j} t_i t_j ψ_ij` with 0-based correction keys.
    pub fn assemble(base: &AlgebraSpec, linear: &[Cochain], quadratic: &BTreeMap<(usize, usize), Cochain>) -> Self {
        let n = base.dim();
        let mut table = vec![Poly::zero(); n * n * n];
        let lin: Vec<Cochain> = linear.iter().map(Cochain::to_leibniz).collect();
        let quad: Vec<((usize, usize), Cochain)> = quadratic.iter().map(|(&k, c)| (k, c.to_leibniz())).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let slot = &mut table[(i * n + j) * n + k];
                    slot.add_term(Vec::new(), base.c(i, j, k));
                    for (p, phi) in lin.iter().enumerate() {
                        slot.add_term(vec![p], &phi.value_at(&[i, j])[k]);
                    }
                    for ((a, b), psi) in &quad {
                        slot.add_term(vec![*a, *b], &psi.value_at(&[i, j])[k]);
                    }
                }
            }
        }
        PolyBracket {
            dim: n,
            params: linear.len(),
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> usize {
        self.params
    }

    /// Coordinates of `[e_i, e_j]`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &[Poly] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Keeps monomials of degree at most `degree`.
    pub fn truncated(&self, degree: usize) -> PolyBracket {
        let table = self
            .table
            .iter()
            .map(|p| (0..=degree).fold(Poly::zero(), |acc, d| acc.add(&p.homogeneous(d))))
            .collect();
        PolyBracket { table, ..self.clone() }
    }

    fn bracket(&self, x: &[Poly], y: &[Poly], max_degree: usize) -> Vec<Poly> {
        let n = self.dim;
        let mut out = vec![Poly::zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let w = xa.mul_truncated(yb, max_degree);
                if w.is_zero() {
                    continue;
                }
                for (k, c) in self.entry(a, b).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&w.mul_truncated(c, max_degree));
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Poly> {
        (0..self.dim).map(|k| if k == i { Poly::constant(Scalar::one()) } else { Poly::zero() }).collect()
    }

    /// `[x,[y,z]] - [[x,y],z] + [[x,z],y]` on basis triples, with monomials of
    /// degree above `max_degree` dropped. Only nonzero defects are returned.
    pub fn leibniz_defect(&self, max_degree: usize) -> Vec<((usize, usize, usize), Vec<Poly>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    let a = self.bracket(&x, self.entry(j, k), max_degree);
                    let b = self.bracket(self.entry(i, j), &z, max_degree);
                    let c = self.bracket(self.entry(i, k), &y, max_degree);
                    let d: Vec<Poly> = (0..n).map(|m| a[m].add(&b[m].scale(&-Scalar::one())).add(&c[m])).collect();
                    if d.iter().any(|p| !p.is_zero()) {
                        out.push(((i + 1, j + 1, k + 1), d));
                    }
                }
            }
        }
        out
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis triples, truncated.
    pub fn jacobi_defect(&self, max_degree: usize) -> Vec<((usize, usize, usize), Vec<Poly>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut d = vec![Poly::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let v = self.bracket(&self.basis(a), self.entry(b, c), max_degree);
                        for m in 0..n {
                            d[m] = d[m].add(&v[m]);
                        }
                    }
                    if d.iter().any(|p| !p.is_zero()) {
                        out.push(((i + 1, j + 1, k + 1), d));
                    }
                }
            }
        }
        out
    }

    /// Antisymmetry defects `[e_i,e_j] + [e_j,e_i]` as polynomials.
    pub fn antisymmetry_defect(&self) -> Vec<((usize, usize), Vec<Poly>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let d: Vec<Poly> = (0..n).map(|k| self.entry(i, j)[k].add(&self.entry(j, i)[k])).collect();
                if d.iter().any(|p| !p.is_zero()) {
                    out.push(((i + 1, j + 1), d));
                }
            }
        }
        out
    }

    /// The algebra obtained by substituting values for the parameters.
    pub fn specialize(&self, point: &[Scalar]) -> Result<AlgebraSpec> {
        if point.len() != self.params {
            return Err(Error::Shape(format!("{} values for {} parameters", point.len(), self.params)));
        }
        let n = self.dim;
        let mut a = AlgebraSpec::zero(n);
        for i in 0..n {
            for j in 0..n {
                for (k, p) in self.entry(i, j).iter().enumerate() {
                    a.set(i, j, k, p.evaluate(point));
                }
            }
        }
        Ok(a)
    }
}

/// Obstruction data for one unordered pair of `H^2` basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasseySquare {
    /// 1-based, `i <= j`.
    pub i: usize,
    pub j: usize,
    /// `Ω_ij` in the theory's coordinates (degree 3).
    pub cochain: Cochain,
    /// Coordinates of the class of `Ω_ij` in the engine's `H^3` basis.
    pub h3_class: Vector,
    pub is_obstructed: bool,
}

/// Order-2 truncation of the versal deformation.
#[derive(Clone, Debug)]
pub struct FormalDeformation {
    pub infinitesimal: InfinitesimalDeformation,
    /// `ψ_ij` for 1-based `i <= j`, nonzero entries only.
    pub corrections: BTreeMap<(usize, usize), Cochain>,
    pub relations: Vec<QuadraticRelation>,
    /// 1-based pairs whose obstruction class is nonzero.
    pub obstructed_pairs: Vec<(usize, usize)>,
}

impl FormalDeformation {
    /// `μ_0 + Σ t_i φ_i + Σ t_i t_j ψ_ij`.
    pub fn bracket(&self) -> PolyBracket {
        let zero_based = self.corrections.iter().map(|(&(i, j), c)| ((i - 1, j - 1), c.clone())).collect();
        PolyBracket::assemble(&self.infinitesimal.base_algebra, &self.infinitesimal.cocycles, &zero_based)
    }

    /// The order-1 part, `μ_0 + Σ t_i φ_i`.
    pub fn first_order_bracket(&self) -> PolyBracket {
        self.infinitesimal.bracket()
    }

    pub fn param_count(&self) -> usize {
        self.infinitesimal.cocycles.len()
    }

    /// Whether a homogeneous quadratic polynomial lies in the span of the relations.
    pub fn in_relation_span(&self, p: &Poly) -> Result<bool> {
        let m = self.param_count();
        let span = crate::poly::relation_span(m, &self.relations)?;
        span.contains(&crate::poly::quadratic_vector(p, m))
    }
}

/// Precomputed `H^2` and `H^3` data for one algebra and theory.
#[derive(Clone, Debug)]
pub struct DeformationEngine {
    algebra: AlgebraSpec,
    theory: Theory,
    infinitesimal: InfinitesimalDeformation,
    h2: CohomologyReport,
    h3: CohomologyReport,
}

impl DeformationEngine {
    pub fn new(a: &AlgebraSpec, theory: Theory) -> Result<Self> {
        let h2 = cohomology(a, theory, 2)?;
        let h3 = cohomology(a, theory, 3)?;
        let (cocycles, basis_source) = if is_n3(a) {
            (n3_cocycles(theory), BasisSource::Pinned)
        } else {
            (h2.representatives.clone(), BasisSource::Canonical)
        };
        let infinitesimal = InfinitesimalDeformation {
            base_algebra: a.clone(),
            theory,
            parameters: (1..=cocycles.len()).map(|i| format!("t{i}")).collect(),
            cocycles,
            basis_source,
        };
        Ok(DeformationEngine {
            algebra: a.clone(),
            theory,
            infinitesimal,
            h2,
            h3,
        })
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn infinitesimal(&self) -> &InfinitesimalDeformation {
        &self.infinitesimal
    }

    pub fn h2(&self) -> &CohomologyReport {
        &self.h2
    }

    pub fn h3(&self) -> &CohomologyReport {
        &self.h3
    }

    pub fn param_count(&self) -> usize {
        self.infinitesimal.cocycles.len()
    }

    fn cocycle(&self, i: usize) -> Result<&Cochain> {
        let m = self.param_count();
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
        Ok(&self.infinitesimal.cocycles[i - 1])
    }

    /// `Ω_ij` in the theory's coordinates, for 1-based indices in either order.
    pub fn obstruction_cochain(&self, i: usize, j: usize) -> Result<Cochain> {
        let (a, b) = (self.cocycle(i)?, self.cocycle(j)?);
        let omega = if i == j {
            graded_bracket(a, a)?
        } else {
            graded_bracket(a, b)?.try_add(&graded_bracket(b, a)?)?
        };
        omega.in_theory(self.theory)
    }

    pub fn massey_square(&self, i: usize, j: usize) -> Result<MasseySquare> {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let cochain = self.obstruction_cochain(i, j)?;
        let red = self.h3.class_reduce(&cochain)?;
        Ok(MasseySquare {
            i,
            j,
            cochain,
            is_obstructed: !red.is_coboundary,
            h3_class: red.coordinates,
        })
    }

    /// Massey squares for all pairs `i <= j`, in lexicographic order.
    pub fn all_massey_squares(&self) -> Result<Vec<MasseySquare>> {
        pairs(self.param_count()).into_iter().map(|(i, j)| self.massey_square(i + 1, j + 1)).collect()
    }

    fn relations_from(&self, squares: &[MasseySquare]) -> Result<Vec<QuadraticRelation>> {
        let m = self.param_count();
        let mut forms: Vec<Vector> = vec![vec![Scalar::zero(); m * (m + 1) / 2]; self.h3.dim_h];
        for sq in squares {
            let idx = pair_index(sq.i - 1, sq.j - 1, m);
            for (d, c) in sq.h3_class.iter().enumerate() {
                forms[d][idx] = c.clone();
            }
        }
        normalized_relations(m, &forms)
    }

    /// Row-reduced generators of the span of `Σ_{i<=j} h_d(Ω_ij) t_i t_j` over
    /// the `H^3` directions `d`.
    pub fn base_relations(&self) -> Result<Vec<QuadraticRelation>> {
        self.relations_from(&self.all_massey_squares()?)
    }

    /// Solves `δψ = ½ target` in the theory's coordinates, canonical modulo cocycles.
    fn solve_half(&self, target: &Cochain) -> Result<Option<Cochain>> {
        let half = Scalar::new(1, 2);
        let rhs: Vector = target.coefficients().iter().map(|x| x * &half).collect();
        let Some(x) = solve(self.h2.differential_matrix(), &rhs)? else {
            return Ok(None);
        };
        let (canonical, _) = reduce_mod_subspace(&x, &self.h2.cocycle_basis)?;
        Cochain::devectorize(self.theory, 2, self.algebra.dim(), canonical).map(Some)
    }

    /// `ψ` with `δψ = ½ Ω_ij` when `Ω_ij` is a coboundary, so that the `t_i t_j`
    /// coefficient of the identity vanishes; `None` when the pair is obstructed.
    pub fn second_order_correction(&self, i: usize, j: usize) -> Result<Option<Cochain>> {
        let omega = self.obstruction_cochain(i, j)?;
        if !self.h3.is_coboundary(&omega)? {
            return Ok(None);
        }
        self.solve_half(&omega)
    }

    /// Assembles the order-2 truncation: infinitesimal part, corrections that
    /// absorb the coboundary part of every `Ω_ij`, and the base relations.
    pub fn versal_output(&self) -> Result<FormalDeformation> {
        let squares = self.all_massey_squares()?;
        let mut corrections = BTreeMap::new();
        let mut obstructed = Vec::new();
        for sq in &squares {
            let red = self.h3.class_reduce(&sq.cochain)?;
            if sq.is_obstructed {
                obstructed.push((sq.i, sq.j));
            }
            let psi = self
                .solve_half(&red.coboundary_part)?
                .expect("the coboundary part of a cocycle is a coboundary");
            if !psi.is_zero() {
                corrections.insert((sq.i, sq.j), psi);
            }
        }
        Ok(FormalDeformation {
            infinitesimal: self.infinitesimal.clone(),
            corrections,
            relations: self.relations_from(&squares)?,
            obstructed_pairs: obstructed,
        })
    }

    /// Whether two 2-cocycles define equivalent infinitesimal deformations.
    pub fn equivalent_infinitesimals(&self, phi: &Cochain, psi: &Cochain) -> Result<bool> {
        let (phi, psi) = (phi.in_theory(self.theory)?, psi.in_theory(self.theory)?);
        for c in [&phi, &psi] {
            if !self.h2.is_cocycle(c)? {
                return Err(Error::NotCocycle);
            }
        }
        self.h2.is_coboundary(&phi.try_sub(&psi)?)
    }
}

pub fn universal_infinitesimal(a: &AlgebraSpec, theory: Theory) -> Result<InfinitesimalDeformation> {
    DeformationEngine::new(a, theory).map(|e| e.infinitesimal)
}

pub fn massey_square(a: &AlgebraSpec, theory: Theory, i: usize, j: usize) -> Result<MasseySquare> {
    DeformationEngine::new(a, theory)?.massey_square(i, j)
}

pub fn base_relations(a: &AlgebraSpec, theory: Theory) -> Result<Vec<QuadraticRelation>> {
    DeformationEngine::new(a, theory)?.base_relations()
}

pub fn second_order_correction(a: &AlgebraSpec, theory: Theory, i: usize, j: usize) -> Result<Option<Cochain>> {
    DeformationEngine::new(a, theory)?.second_order_correction(i, j)
}

pub fn versal_output(a: &AlgebraSpec, theory: Theory) -> Result<FormalDeformation> {
    DeformationEngine::new(a, theory)?.versal_output()
}

pub fn equivalent_infinitesimals(a: &AlgebraSpec, theory: Theory, phi: &Cochain, psi: &Cochain) -> Result<bool> {
    DeformationEngine::new(a, theory)?.equivalent_infinitesimals(phi, psi)
}

/// The algebra's own bracket as a degree-2 Leibniz cochain (`μ_0`).
pub fn base_cochain(a: &AlgebraSpec) -> Cochain {
    structure_cochain(a)
}
