//! Text rendering of vectors, polynomial brackets and cochains.
//!
//! Basis elements print as `e1, e2, …`, parameters as `t1, t2, …`, and
//! rationals as `p/q`. Terms are ordered by basis index.

use crate::cochain::Cochain;
use crate::poly::Poly;
use crate::scalar::Scalar;

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (negative, body)) in terms.into_iter().enumerate() {
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn scaled_basis(coeff: &Scalar, k: usize) -> (bool, String) {
    let mag = coeff.abs();
    let body = if mag.is_one() { format!("e{}", k + 1) } else { format!("{mag} e{}", k + 1) };
    (coeff.is_negative(), body)
}

/// `Σ c_k e_k`, e.g. `e1 - 1/2 e3`.
pub fn render_vector(v: &[Scalar]) -> String {
    join_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| scaled_basis(c, k))
            .collect(),
    )
}

/// Polynomial-coefficient vector, e.g. `(t7 - 1) e1 - t1 e3`.
pub fn render_poly_vector(v: &[Poly]) -> String {
    let mut terms = Vec::new();
    for (k, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if p.term_count() > 1 {
            terms.push((false, format!("({}) e{}", p.render(), k + 1)));
            continue;
        }
        let (m, c) = p.terms().next().expect("one term");
        if m.is_empty() {
            terms.push(scaled_basis(c, k));
            continue;
        }
        let text = Poly::term(m.clone(), c.abs()).render();
        terms.push((c.is_negative(), format!("{text} e{}", k + 1)));
    }
    join_terms(terms)
}

/// One line per nonzero value, `phi(e2,e3) = e3`. Lie cochains list
/// increasing input tuples only.
pub fn render_cochain(name: &str, c: &Cochain) -> Vec<String> {
    c.nonzero_values()
        .into_iter()
        .map(|(tuple, value)| {
            let args: Vec<String> = tuple.iter().map(|i| format!("e{i}")).collect();
            format!("{name}({}) = {}", args.join(","), render_vector(&value))
        })
        .collect()
}
