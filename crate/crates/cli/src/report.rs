//! Typed reports and their text rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub input: Input,
    pub result: Body,
    pub basis: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Input {
    pub source: String,
    pub dim: usize,
    /// SHA-256 of the canonical structure-constant serialisation.
    pub sha256: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// First failing pair or triple, 1-based.
    pub first_failure: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct NamedCochain {
    pub name: String,
    /// Lines such as `phi1(e2,e3) = e3`.
    pub values: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BracketRow {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    /// `zero`, `coboundary` or `obstructed`.
    pub status: String,
    /// Coordinates of the obstruction class in the H^3 basis.
    pub class: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Check {
        antisymmetry: Verdict,
        jacobi: Verdict,
        leibniz: Verdict,
    },
    Cohomology {
        theory: String,
        degree: usize,
        dim_z: usize,
        dim_b: usize,
        dim_h: usize,
        representatives: Option<Vec<NamedCochain>>,
    },
    Versal {
        theory: String,
        parameters: Vec<String>,
        cocycles: Vec<NamedCochain>,
        first_order: Vec<BracketRow>,
        second_order: Vec<BracketRow>,
        relations: Vec<String>,
        note: String,
    },
    Classify {
        label: String,
        details: Vec<(String, String)>,
    },
    Massey {
        theory: String,
        h3_dim: usize,
        pairs: Vec<PairVerdict>,
        obstructed: Vec<(usize, usize)>,
        relations: Vec<String>,
    },
}

fn verdict_text(v: &Verdict) -> String {
    match &v.first_failure {
        None => "yes".into(),
        Some(idx) => {
            let t: Vec<String> = idx.iter().map(usize::to_string).collect();
            format!("({})", t.join(","))
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "input: {} (dim {}, sha256 {})", self.input.source, self.input.dim, self.input.sha256);
        match &self.result {
            Body::Check { antisymmetry, jacobi, leibniz } => {
                let lie = if antisymmetry.holds && jacobi.holds {
                    "yes".to_string()
                } else if !antisymmetry.holds {
                    format!("no (antisymmetry fails at {})", verdict_text(antisymmetry))
                } else {
                    format!("no (Jacobi fails at {})", verdict_text(jacobi))
                };
                let leib = if leibniz.holds {
                    "yes".to_string()
                } else {
                    format!("no (fails at {})", verdict_text(leibniz))
                };
                let _ = writeln!(s, "Lie: {lie}, Leibniz: {leib}");
            }
            Body::Cohomology { theory, degree, dim_z, dim_b, dim_h, representatives } => {
                let _ = writeln!(s, "theory: {theory}, degree {degree}");
                let _ = writeln!(s, "Z={dim_z} B={dim_b} H={dim_h}");
                if let Some(reps) = representatives {
                    write_cochains(&mut s, "representatives", reps);
                }
            }
            Body::Versal { theory, parameters, cocycles, first_order, second_order, relations, note } => {
                let _ = writeln!(s, "theory: {theory}");
                let _ = writeln!(s, "parameters: {}", if parameters.is_empty() { "none".into() } else { parameters.join(" ") });
                write_cochains(&mut s, "cocycles", cocycles);
                let _ = writeln!(s, "order 1:");
                for r in first_order {
                    let _ = writeln!(s, "  [e{},e{}] = {}", r.i, r.j, r.value);
                }
                let _ = writeln!(s, "order 2:");
                if second_order.is_empty() {
                    let _ = writeln!(s, "  none");
                }
                for r in second_order {
                    let _ = writeln!(s, "  [e{},e{}] += {}", r.i, r.j, r.value);
                }
                write_relations(&mut s, relations);
                let _ = writeln!(s, "note: {note}");
            }
            Body::Classify { label, details } => {
                let _ = writeln!(s, "{label}");
                for (k, v) in details {
                    let _ = writeln!(s, "  {k}: {v}");
                }
            }
            Body::Massey { theory, h3_dim, pairs, obstructed, relations } => {
                let _ = writeln!(s, "theory: {theory}, dim H3 = {h3_dim}");
                let _ = writeln!(s, "pairs:");
                for p in pairs {
                    let _ = write!(s, "  ({},{}) {}", p.i, p.j, p.status);
                    if p.status == "obstructed" {
                        let _ = write!(s, " [{}]", p.class.join(", "));
                    }
                    s.push('\n');
                }
                let listed: Vec<String> = obstructed.iter().map(|(i, j)| format!("({i},{j})")).collect();
                let _ = writeln!(s, "obstructed: {}", if listed.is_empty() { "none".into() } else { listed.join(" ") });
                write_relations(&mut s, relations);
            }
        }
        let _ = writeln!(s, "basis: {}", self.basis);
        s
    }
}

fn write_cochains(s: &mut String, title: &str, cochains: &[NamedCochain]) {
    let _ = writeln!(s, "{title}:");
    for c in cochains {
        if c.values.is_empty() {
            let _ = writeln!(s, "  {} = 0", c.name);
        }
        for v in &c.values {
            let _ = writeln!(s, "  {v}");
        }
    }
}

fn write_relations(s: &mut String, relations: &[String]) {
    let _ = writeln!(s, "relations:");
    if relations.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for r in relations {
        let _ = writeln!(s, "  {r} = 0");
    }
}
