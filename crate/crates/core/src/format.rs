//! JSON algebra files.
//!
//! ```json
//! { "dim": 3, "brackets": [ { "i": 2, "j": 3, "terms": [ { "k": 1, "c": "1" } ] } ] }
//! ```
//!
//! Indices are 1-based, coefficients are the strings `"p"` or `"p/q"`. Omitted
//! pairs are zero; a pair listed twice is an error.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct Term {
    k: usize,
    c: String,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.dim == 0 {
        return Err(Error::Format("dim must be positive".into()));
    }
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (b, br) in file.brackets.iter().enumerate() {
        let at = format!("brackets[{b}]");
        for (field, v) in [("i", br.i), ("j", br.j)] {
            if v == 0 || v > file.dim {
                return Err(Error::Format(format!("{at}.{field} = {v} outside 1..={}", file.dim)));
            }
        }
        if !seen.insert((br.i, br.j)) {
            return Err(Error::Format(format!("{at}: duplicate entry for ({},{})", br.i, br.j)));
        }
        let mut ks = BTreeSet::new();
        for (t, term) in br.terms.iter().enumerate() {
            let at = format!("{at}.terms[{t}]");
            if term.k == 0 || term.k > file.dim {
                return Err(Error::Format(format!("{at}.k = {} outside 1..={}", term.k, file.dim)));
            }
            if !ks.insert(term.k) {
                return Err(Error::Format(format!("{at}: duplicate term for e{}", term.k)));
            }
            let c: Scalar = term
                .c
                .parse()
                .map_err(|_| Error::Format(format!("{at}.c = {:?} is not a rational \"p\" or \"p/q\"", term.c)))?;
            entries.push((br.i, br.j, term.k, c));
        }
    }
    let a = AlgebraSpec::from_entries(file.dim, &entries)?;
    Ok(match file.name {
        Some(n) => a.with_name(n),
        None => a,
    })
}

/// Canonical serialisation: pairs in lexicographic order, zero terms dropped,
/// pairs with no nonzero term omitted. The name is included when present.
pub fn write_algebra(a: &AlgebraSpec) -> String {
    let mut brackets: Vec<BracketEntry> = Vec::new();
    for (i, j, k, c) in a.entries() {
        match brackets.last_mut() {
            Some(b) if b.i == i && b.j == j => b.terms.push(Term { k, c: c.to_string() }),
            _ => brackets.push(BracketEntry {
                i,
                j,
                terms: vec![Term { k, c: c.to_string() }],
            }),
        }
    }
    let file = AlgebraFile {
        dim: a.dim(),
        name: a.name().map(str::to_string),
        brackets,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serialises");
    s.push('\n');
    s
}

/// Serialisation without the name; identical structure constants give
/// identical bytes.
pub fn canonical_constants(a: &AlgebraSpec) -> String {
    let mut anon = AlgebraSpec::zero(a.dim());
    for (i, j, k, c) in a.entries() {
        anon.set(i - 1, j - 1, k - 1, c);
    }
    write_algebra(&anon)
}
