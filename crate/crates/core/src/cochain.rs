//! Cochains, shuffles, the circle product and the graded bracket.
//!
//! Coordinates are frozen as follows. Input tuples are listed in lexicographic
//! order (all `n^q` tuples for the Leibniz theory, strictly increasing tuples for
//! the Lie theory) and the output components `e1..en` are innermost. For Leibniz
//! degree 2 in dimension 3 this is `e1⊗e1, e1⊗e2, …, e3⊗e3`, each followed by
//! its three output coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, zero_vector, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Lie,
    Leibniz,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Lie => "lie",
            Theory::Leibniz => "leibniz",
        })
    }
}

impl std::str::FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lie" => Ok(Theory::Lie),
            "leibniz" => Ok(Theory::Leibniz),
            other => Err(Error::Unsupported(format!("theory {other:?}"))),
        }
    }
}

/// Input tuples of one cochain space in coordinate order.
#[derive(Clone, Debug)]
pub struct TupleSpace {
    theory: Theory,
    degree: usize,
    dim: usize,
    tuples: Vec<Vec<usize>>,
}

impl TupleSpace {
    pub fn new(theory: Theory, degree: usize, dim: usize) -> Self {
        let tuples = match theory {
            Theory::Leibniz => all_tuples(dim, degree),
            Theory::Lie => increasing_tuples(dim, degree),
        };
        TupleSpace {
            theory,
            degree,
            dim,
            tuples,
        }
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Number of scalar coordinates of a cochain in this space.
    pub fn coordinate_count(&self) -> usize {
        self.tuples.len() * self.dim
    }

    /// Row of `tuple` and the sign relating the stored value to the value at
    /// `tuple`. `None` when an alternating cochain vanishes there.
    pub fn locate(&self, tuple: &[usize]) -> Option<(usize, i32)> {
        debug_assert_eq!(tuple.len(), self.degree);
        match self.theory {
            Theory::Leibniz => Some((tuple.iter().fold(0, |acc, &t| acc * self.dim + t), 1)),
            Theory::Lie => {
                let (sorted, sign) = sort_with_sign(tuple)?;
                let idx = self.tuples.binary_search(&sorted).expect("sorted tuple is listed");
                Some((idx, sign))
            }
        }
    }
}

fn all_tuples(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..q {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Strictly increasing `q`-tuples from `0..n` in lexicographic order.
pub fn increasing_tuples(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, q, &mut Vec::new(), &mut out);
    out
}

/// Sorts a tuple, returning the permutation sign; `None` if an entry repeats.
fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = tuple.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Signature of a permutation of `0..len` (or any distinct values).
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// A multilinear map `L^{⊗q} → L` stored by coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    theory: Theory,
    degree: usize,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(theory: Theory, degree: usize, dim: usize) -> Self {
        let count = TupleSpace::new(theory, degree, dim).coordinate_count();
        Cochain {
            theory,
            degree,
            dim,
            coeffs: vec![Scalar::zero(); count],
        }
    }

    /// Basis cochain with a single 1 at coordinate `index`.
    pub fn basis(theory: Theory, degree: usize, dim: usize, index: usize) -> Self {
        let mut c = Self::zero(theory, degree, dim);
        c.coeffs[index] = Scalar::one();
        c
    }

    /// Builds a cochain from 1-based `(inputs, output, coefficient)` values.
    ///
    /// For the Lie theory each value fixes the alternating map on all
    /// permutations of its inputs; listing both `(2,3)` and `(3,2)` is allowed
    /// only when the two agree.
    pub fn from_values(theory: Theory, dim: usize, degree: usize, values: &[(&[usize], usize, Scalar)]) -> Result<Self> {
        let space = TupleSpace::new(theory, degree, dim);
        let mut c = Self::zero(theory, degree, dim);
        let mut set = vec![false; c.coeffs.len()];
        for (inputs, out, value) in values {
            if inputs.len() != degree {
                return Err(Error::Shape(format!("{} inputs for a degree-{degree} cochain", inputs.len())));
            }
            for &x in inputs.iter().chain(std::iter::once(out)) {
                if x == 0 || x > dim {
                    return Err(Error::IndexOutOfRange { index: x, max: dim });
                }
            }
            let tuple: Vec<usize> = inputs.iter().map(|x| x - 1).collect();
            let Some((row, sign)) = space.locate(&tuple) else {
                if value.is_zero() {
                    continue;
                }
                return Err(Error::Shape(format!("alternating cochain cannot be nonzero on {inputs:?}")));
            };
            let slot = row * dim + out - 1;
            let v = if sign < 0 { -value } else { value.clone() };
            if set[slot] && c.coeffs[slot] != v {
                return Err(Error::Shape(format!("inconsistent values on {inputs:?}")));
            }
            set[slot] = true;
            c.coeffs[slot] = v;
        }
        Ok(c)
    }

    pub fn from_int_values(theory: Theory, dim: usize, degree: usize, values: &[(&[usize], usize, i64)]) -> Result<Self> {
        let v: Vec<_> = values.iter().map(|(i, o, c)| (*i, *o, Scalar::from_int(*c))).collect();
        Self::from_values(theory, dim, degree, &v)
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> TupleSpace {
        TupleSpace::new(self.theory, self.degree, self.dim)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    pub fn vectorize(&self) -> Vector {
        self.coeffs.clone()
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn devectorize(theory: Theory, degree: usize, dim: usize, v: Vector) -> Result<Self> {
        let expected = TupleSpace::new(theory, degree, dim).coordinate_count();
        if v.len() != expected {
            return Err(Error::Shape(format!(
                "{} coordinates for a {theory} cochain of degree {degree} in dimension {dim} (expected {expected})",
                v.len()
            )));
        }
        Ok(Cochain {
            theory,
            degree,
            dim,
            coeffs: v,
        })
    }

    /// Value on basis elements `e_{t_1}, …, e_{t_q}` (0-based).
    pub fn value_at(&self, tuple: &[usize]) -> Vector {
        match self.space().locate(tuple) {
            None => zero_vector(self.dim),
            Some((row, sign)) => {
                let s = &self.coeffs[row * self.dim..(row + 1) * self.dim];
                if sign > 0 {
                    s.to_vec()
                } else {
                    s.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let space = self.space();
        let mut out = zero_vector(self.dim);
        let mut tuple = vec![0; self.degree];
        self.eval_rec(&space, args, 0, &Scalar::one(), &mut tuple, &mut out);
        out
    }

    fn eval_rec(&self, space: &TupleSpace, args: &[&[Scalar]], pos: usize, weight: &Scalar, tuple: &mut Vec<usize>, out: &mut Vector) {
        if pos == args.len() {
            if let Some((row, sign)) = space.locate(tuple) {
                let w = if sign > 0 { weight.clone() } else { -weight };
                axpy(out, &w, &self.coeffs[row * self.dim..(row + 1) * self.dim]);
            }
            return;
        }
        for (i, x) in args[pos].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            tuple[pos] = i;
            self.eval_rec(space, args, pos + 1, &(weight * x), tuple, out);
        }
    }

    /// The alternating cochain as a Leibniz cochain on all tuples.
    pub fn to_leibniz(&self) -> Cochain {
        match self.theory {
            Theory::Leibniz => self.clone(),
            Theory::Lie => {
                let target = TupleSpace::new(Theory::Leibniz, self.degree, self.dim);
                let coeffs = target.tuples().iter().flat_map(|t| self.value_at(t)).collect();
                Cochain {
                    theory: Theory::Leibniz,
                    degree: self.degree,
                    dim: self.dim,
                    coeffs,
                }
            }
        }
    }

    /// Restricts an alternating Leibniz cochain to Lie coordinates; fails if the
    /// cochain is not alternating.
    pub fn to_lie(&self) -> Result<Cochain> {
        if self.theory == Theory::Lie {
            return Ok(self.clone());
        }
        let space = TupleSpace::new(Theory::Lie, self.degree, self.dim);
        let coeffs: Vector = space.tuples().iter().flat_map(|t| self.value_at(t)).collect();
        let lie = Cochain {
            theory: Theory::Lie,
            degree: self.degree,
            dim: self.dim,
            coeffs,
        };
        if lie.to_leibniz() != *self {
            return Err(Error::Shape("cochain is not alternating".into()));
        }
        Ok(lie)
    }

    /// Converts to the requested theory's coordinates.
    pub fn in_theory(&self, theory: Theory) -> Result<Cochain> {
        match theory {
            Theory::Leibniz => Ok(self.to_leibniz()),
            Theory::Lie => self.to_lie(),
        }
    }

    pub fn scaled(&self, s: &Scalar) -> Cochain {
        Cochain {
            coeffs: self.coeffs.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    pub fn try_add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_shape(other)?;
        Ok(Cochain {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn try_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.try_add(&other.scaled(&-Scalar::one()))
    }

    fn check_same_shape(&self, other: &Cochain) -> Result<()> {
        if (self.theory, self.degree, self.dim) != (other.theory, other.degree, other.dim) {
            return Err(Error::Shape(format!(
                "{} degree {} dim {} vs {} degree {} dim {}",
                self.theory, self.degree, self.dim, other.theory, other.degree, other.dim
            )));
        }
        Ok(())
    }

    /// Nonzero values on stored tuples, 1-based, as `(inputs, output vector)`.
    /// For Lie cochains only increasing tuples are listed.
    pub fn nonzero_values(&self) -> Vec<(Vec<usize>, Vector)> {
        self.space()
            .tuples()
            .iter()
            .enumerate()
            .filter_map(|(row, t)| {
                let v = &self.coeffs[row * self.dim..(row + 1) * self.dim];
                (!is_zero_vector(v)).then(|| (t.iter().map(|x| x + 1).collect(), v.to_vec()))
            })
            .collect()
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain({}, deg {}, dim {}) {{", self.theory, self.degree, self.dim)?;
        for (t, v) in self.nonzero_values() {
            let args: Vec<String> = t.iter().map(|x| format!("e{x}")).collect();
            write!(f, " ({}) -> {:?};", args.join(","), v)?;
        }
        write!(f, " }}")
    }
}

/// A `(p,q)`-shuffle: `sigma` lists the 1-based images `σ(1), …, σ(p+q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Shuffle {
    pub p: usize,
    pub q: usize,
    pub sigma: Vec<usize>,
    pub sign: i32,
}

/// All `(p,q)`-shuffles, ordered lexicographically by `σ(1), …, σ(p)`.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    increasing_tuples(p + q, p)
        .into_iter()
        .map(|head| {
            let mut sigma: Vec<usize> = head.iter().map(|x| x + 1).collect();
            let tail: Vec<usize> = (1..=p + q).filter(|x| !sigma.contains(x)).collect();
            sigma.extend(tail);
            let sign = permutation_sign(&sigma);
            Shuffle { p, q, sigma, sign }
        })
        .collect()
}

fn check_pair(alpha: &Cochain, beta: &Cochain) -> Result<()> {
    if alpha.dim != beta.dim {
        return Err(Error::Shape(format!("cochains on dimensions {} and {}", alpha.dim, beta.dim)));
    }
    if alpha.degree == 0 || beta.degree == 0 {
        return Err(Error::Shape("circle product needs cochains of degree at least 1".into()));
    }
    Ok(())
}

/// `α ∘ β` for `α` of degree `p+1` and `β` of degree `q+1`:
///
/// ```text
/// (α∘β)(x_1..x_{p+q+1}) = Σ_{k=1}^{p+1} (-1)^{q(k-1)} Σ_{σ ∈ Sh(q, p-k+1)} sgn σ ·
///     α(x_1..x_{k-1}, β(x_k, x_σ(k+1)..x_σ(k+q)), x_σ(k+q+1)..x_σ(p+q+1))
/// ```
///
/// where σ permutes the positions `k+1..p+q+1`. Lie cochains are extended
/// antisymmetrically first; the result is a Leibniz cochain.
pub fn circle_product(alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    check_pair(alpha, beta)?;
    let (alpha, beta) = (alpha.to_leibniz(), beta.to_leibniz());
    let n = alpha.dim;
    let p = alpha.degree - 1;
    let q = beta.degree - 1;
    let total = p + q + 1;
    let space = TupleSpace::new(Theory::Leibniz, total, n);
    let alpha_space = alpha.space();
    let shuffle_table: Vec<Vec<Shuffle>> = (1..=p + 1).map(|k| shuffles(q, p + 1 - k)).collect();
    let mut coeffs = Vec::with_capacity(space.coordinate_count());
    let mut alpha_args = vec![0usize; alpha.degree];
    for x in space.tuples() {
        let mut value = zero_vector(n);
        for k in 1..=p + 1 {
            let outer_sign = if (q * (k - 1)) % 2 == 0 { 1 } else { -1 };
            for sh in &shuffle_table[k - 1] {
                // positions k+1..total, permuted; sigma is 1-based relative.
                let moved: Vec<usize> = sh.sigma.iter().map(|&s| x[k + s - 1]).collect();
                let mut beta_args = Vec::with_capacity(q + 1);
                beta_args.push(x[k - 1]);
                beta_args.extend_from_slice(&moved[..q]);
                let inner = beta.value_at(&beta_args);
                if is_zero_vector(&inner) {
                    continue;
                }
                alpha_args[..k - 1].copy_from_slice(&x[..k - 1]);
                alpha_args[k..].copy_from_slice(&moved[q..]);
                let sign = Scalar::sign(outer_sign * sh.sign);
                for (m, im) in inner.iter().enumerate() {
                    if im.is_zero() {
                        continue;
                    }
                    alpha_args[k - 1] = m;
                    let (row, s) = alpha_space.locate(&alpha_args).expect("Leibniz tuples are all stored");
                    debug_assert_eq!(s, 1);
                    axpy(&mut value, &(&sign * im), &alpha.coeffs[row * n..(row + 1) * n]);
                }
            }
        }
        coeffs.extend(value);
    }
    Cochain::devectorize(Theory::Leibniz, total, n, coeffs)
}

/// `[α, β] = α∘β + (-1)^{pq+1} β∘α` for `α` of degree `p+1`, `β` of degree `q+1`.
pub fn graded_bracket(alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    check_pair(alpha, beta)?;
    let p = alpha.degree - 1;
    let q = beta.degree - 1;
    let ab = circle_product(alpha, beta)?;
    let ba = circle_product(beta, alpha)?;
    let s = if (p * q + 1).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    ab.try_add(&ba.scaled(&s))
}

/// The bracket of an algebra as a degree-2 cochain.
pub fn structure_cochain(a: &crate::algebra::AlgebraSpec) -> Cochain {
    let n = a.dim();
    let coeffs = all_tuples(n, 2)
        .iter()
        .flat_map(|t| a.bracket_basis(t[0], t[1]).to_vec())
        .collect();
    Cochain::devectorize(Theory::Leibniz, 2, n, coeffs).expect("n·n² coordinates")
}

/// The algebra whose bracket is the given degree-2 cochain.
pub fn algebra_from_cochain(c: &Cochain) -> Result<crate::algebra::AlgebraSpec> {
    if c.degree != 2 {
        return Err(Error::Shape(format!("bracket from a degree-{} cochain", c.degree)));
    }
    let c = c.to_leibniz();
    let n = c.dim;
    let mut a = crate::algebra::AlgebraSpec::zero(n);
    for (row, t) in all_tuples(n, 2).iter().enumerate() {
        for k in 0..n {
            a.set(t[0], t[1], k, c.coeffs[row * n + k].clone());
        }
    }
    Ok(a)
}
