//! Matrices of the Chevalley–Eilenberg and Loday differentials in the frozen
//! cochain coordinates.

use crate::algebra::AlgebraSpec;
use crate::cochain::{Cochain, Theory, TupleSpace};
use crate::error::Result;
use crate::linalg::MatrixQ;
use crate::scalar::Scalar;

/// Leibniz coboundary `δ^q : CL^q → CL^{q+1}`:
///
/// ```text
/// δf(x_1..x_{q+1}) = [x_1, f(x_2..x_{q+1})] + Σ_{i=2}^{q+1} (-1)^i [f(x_1..x̂_i..x_{q+1}), x_i]
///                  + Σ_{i<j} (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..x̂_j..x_{q+1})
/// ```
pub fn leibniz_differential(a: &AlgebraSpec, q: usize) -> Result<MatrixQ> {
    a.require_leibniz()?;
    Ok(leibniz_matrix(a, q))
}

/// Chevalley–Eilenberg differential `d_q : C^q → C^{q+1}` on alternating cochains:
///
/// ```text
/// dc(g_1..g_{q+1}) = Σ_{s<t} (-1)^{s+t} c([g_s,g_t], g_1..ĝ_s..ĝ_t..g_{q+1})
///                  + Σ_s (-1)^{s+1} [g_s, c(g_1..ĝ_s..g_{q+1})]
/// ```
pub fn lie_differential(a: &AlgebraSpec, q: usize) -> Result<MatrixQ> {
    a.require_lie()?;
    Ok(lie_matrix(a, q))
}

pub fn differential(a: &AlgebraSpec, theory: Theory, q: usize) -> Result<MatrixQ> {
    match theory {
        Theory::Lie => lie_differential(a, q),
        Theory::Leibniz => leibniz_differential(a, q),
    }
}

/// Applies the differential of `c`'s theory to `c`.
pub fn apply_differential(a: &AlgebraSpec, c: &Cochain) -> Result<Cochain> {
    let m = differential(a, c.theory(), c.degree())?;
    Cochain::devectorize(c.theory(), c.degree() + 1, a.dim(), m.mul_vec(c.coefficients())?)
}

fn sign(exp: usize) -> i32 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

struct Builder<'a> {
    a: &'a AlgebraSpec,
    n: usize,
    source: TupleSpace,
    m: MatrixQ,
}

impl Builder<'_> {
    /// Adds `weight` times the output-`k'` coordinate of `f` at `tuple` into row `row`.
    fn add(&mut self, row: usize, tuple: &[usize], k_src: usize, weight: Scalar) {
        if weight.is_zero() {
            return;
        }
        if let Some((idx, s)) = self.source.locate(tuple) {
            let col = idx * self.n + k_src;
            let w = if s > 0 { weight } else { -weight };
            self.m[(row, col)] += w;
        }
    }
}

fn leibniz_matrix(a: &AlgebraSpec, q: usize) -> MatrixQ {
    let n = a.dim();
    let source = TupleSpace::new(Theory::Leibniz, q, n);
    let target = TupleSpace::new(Theory::Leibniz, q + 1, n);
    let mut b = Builder {
        a,
        n,
        m: MatrixQ::zeros(target.coordinate_count(), source.coordinate_count()),
        source,
    };
    for (t_idx, x) in target.tuples().iter().enumerate() {
        for k in 0..n {
            let row = t_idx * n + k;
            // [x_1, f(x_2..)]
            for kp in 0..n {
                let c = b.a.c(x[0], kp, k).clone();
                b.add(row, &x[1..], kp, c);
            }
            // (-1)^i [f(.. x̂_i ..), x_i], i = 2..q+1 (1-based)
            for i in 2..=q + 1 {
                let rest: Vec<usize> = x.iter().enumerate().filter(|&(p, _)| p != i - 1).map(|(_, &v)| v).collect();
                for kp in 0..n {
                    let c = b.a.c(kp, x[i - 1], k) * &Scalar::sign(sign(i));
                    b.add(row, &rest, kp, c);
                }
            }
            // (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..x̂_j..)
            for i in 1..=q + 1 {
                for j in i + 1..=q + 1 {
                    for m in 0..n {
                        let c = b.a.c(x[i - 1], x[j - 1], m);
                        if c.is_zero() {
                            continue;
                        }
                        let mut args: Vec<usize> = Vec::with_capacity(q);
                        for (p, &v) in x.iter().enumerate() {
                            if p == j - 1 {
                                continue;
                            }
                            args.push(if p == i - 1 { m } else { v });
                        }
                        let w = c * &Scalar::sign(sign(j + 1));
                        b.add(row, &args, k, w);
                    }
                }
            }
        }
    }
    b.m
}

fn lie_matrix(a: &AlgebraSpec, q: usize) -> MatrixQ {
    let n = a.dim();
    let source = TupleSpace::new(Theory::Lie, q, n);
    let target = TupleSpace::new(Theory::Lie, q + 1, n);
    let mut b = Builder {
        a,
        n,
        m: MatrixQ::zeros(target.coordinate_count(), source.coordinate_count()),
        source,
    };
    for (t_idx, g) in target.tuples().iter().enumerate() {
        for k in 0..n {
            let row = t_idx * n + k;
            for s in 1..=q + 1 {
                for t in s + 1..=q + 1 {
                    for m in 0..n {
                        let c = b.a.c(g[s - 1], g[t - 1], m);
                        if c.is_zero() {
                            continue;
                        }
                        let mut args = vec![m];
                        args.extend(g.iter().enumerate().filter(|&(p, _)| p != s - 1 && p != t - 1).map(|(_, &v)| v));
                        let w = c * &Scalar::sign(sign(s + t));
                        b.add(row, &args, k, w);
                    }
                }
            }
            for s in 1..=q + 1 {
                let rest: Vec<usize> = g.iter().enumerate().filter(|&(p, _)| p != s - 1).map(|(_, &v)| v).collect();
                for kp in 0..n {
                    let c = b.a.c(g[s - 1], kp, k) * &Scalar::sign(sign(s + 1));
                    b.add(row, &rest, kp, c);
                }
            }
        }
    }
    b.m
}
