//! Polynomials in deformation parameters `t1, t2, …` and quadratic relations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{SubspaceBasis, Vector};
use crate::scalar::Scalar;

/// Sorted multiset of 0-based parameter indices; the empty monomial is 1.
pub type Monomial = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Vec::new(), c)
    }

    /// `c · t_{i+1}`
    pub fn linear(i: usize, c: Scalar) -> Self {
        Self::term(vec![i], c)
    }

    pub fn term(mut m: Monomial, c: Scalar) -> Self {
        m.sort_unstable();
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[usize]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn add_term(&mut self, mut m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        m.sort_unstable();
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Product, discarding monomials of degree above `max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: usize) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.len() + m2.len() > max_degree {
                    continue;
                }
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                out.add_term(m, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, usize::MAX)
    }

    /// Homogeneous part of the given degree.
    pub fn homogeneous(&self, degree: usize) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| m.len() == degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Value at a point (one scalar per parameter).
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, &i| acc * &point[i]))
            .sum()
    }

    fn ordered_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        // Non-constant terms by (degree, indices); the constant goes last.
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| (a.is_empty(), a.len(), *a).cmp(&(b.is_empty(), b.len(), *b)));
        v
    }

    /// `t7 - 1`, `2*t1*t3 + 1/2`, `-t2`; zero renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (pos, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (pos, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let vars: Vec<String> = m.iter().map(|i| format!("t{}", i + 1)).collect();
            if m.is_empty() {
                let _ = write!(s, "{abs}");
            } else if abs.is_one() {
                s.push_str(&vars.join("*"));
            } else {
                let _ = write!(s, "{abs}*{}", vars.join("*"));
            }
        }
        s
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Index of the pair `(i, j)`, `i <= j < m`, in lexicographic order.
pub fn pair_index(i: usize, j: usize, m: usize) -> usize {
    debug_assert!(i <= j && j < m);
    // rows 0..i hold m, m-1, …, m-i+1 pairs
    i * m - i * (i + 1) / 2 + j
}

/// All pairs `(i, j)` with `i <= j < m`, lexicographic.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect()
}

/// A homogeneous quadratic form `Σ_{i<=j} c_ij t_i t_j`, normalised so the first
/// nonzero coefficient (in pair order) is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticRelation {
    params: usize,
    coefficients: BTreeMap<(usize, usize), Scalar>,
}

impl QuadraticRelation {
    /// Builds and normalises a relation from 0-based pair coefficients.
    pub fn new(params: usize, coefficients: impl IntoIterator<Item = ((usize, usize), Scalar)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), c) in coefficients {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            if j >= params {
                return Err(Error::IndexOutOfRange { index: j + 1, max: params });
            }
            let e = map.entry((i, j)).or_insert_with(Scalar::zero);
            *e += c;
        }
        map.retain(|_, c: &mut Scalar| !c.is_zero());
        let Some(lead) = map.values().next().cloned() else {
            return Err(Error::Shape("a relation needs a nonzero coefficient".into()));
        };
        let inv = lead.recip();
        for c in map.values_mut() {
            *c *= &inv;
        }
        Ok(QuadraticRelation {
            params,
            coefficients: map,
        })
    }

    /// From 1-based `(i, j, c)` triples.
    pub fn from_terms(params: usize, terms: &[(usize, usize, i64)]) -> Result<Self> {
        for &(i, j, _) in terms {
            for x in [i, j] {
                if x == 0 || x > params {
                    return Err(Error::IndexOutOfRange { index: x, max: params });
                }
            }
        }
        Self::new(params, terms.iter().map(|&(i, j, c)| ((i - 1, j - 1), Scalar::from_int(c))))
    }

    pub fn params(&self) -> usize {
        self.params
    }

    /// 0-based pairs.
    pub fn coefficients(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.coefficients
    }

    /// Coordinates in the `m(m+1)/2`-dimensional space of quadratic forms.
    pub fn to_vector(&self) -> Vector {
        let m = self.params;
        let mut v = vec![Scalar::zero(); m * (m + 1) / 2];
        for (&(i, j), c) in &self.coefficients {
            v[pair_index(i, j, m)] = c.clone();
        }
        v
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        for (&(i, j), c) in &self.coefficients {
            p.add_term(vec![i, j], c);
        }
        p
    }

    pub fn render(&self) -> String {
        self.to_poly().render()
    }
}

/// Span of quadratic forms inside the space of forms in `params` variables.
pub fn relation_span(params: usize, relations: &[QuadraticRelation]) -> Result<SubspaceBasis> {
    let vs: Vec<Vector> = relations.iter().map(QuadraticRelation::to_vector).collect();
    SubspaceBasis::span(params * (params + 1) / 2, &vs)
}

/// Row-reduced generators of the span of arbitrary quadratic form vectors.
pub fn normalized_relations(params: usize, forms: &[Vector]) -> Result<Vec<QuadraticRelation>> {
    let span = SubspaceBasis::span(params * (params + 1) / 2, forms)?;
    let ps = pairs(params);
    span.vectors()
        .iter()
        .map(|v| QuadraticRelation::new(params, v.iter().enumerate().map(|(k, c)| (ps[k], c.clone()))))
        .collect()
}

/// Quadratic form of a homogeneous degree-2 polynomial, as a coordinate vector.
pub fn quadratic_vector(p: &Poly, params: usize) -> Vector {
    let mut v = vec![Scalar::zero(); params * (params + 1) / 2];
    for (m, c) in p.terms() {
        if m.len() == 2 {
            v[pair_index(m[0], m[1], params)] += c;
        }
    }
    v
}
