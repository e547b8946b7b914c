//! The `leibniz` command line: argument parsing, command execution and
//! report rendering. [`run`] is the whole program minus process I/O.

pub mod args;
pub mod report;

use std::ffi::OsString;

use clap::Parser;
use leibniz_core::catalogue::builtin;
use leibniz_core::classify::{classify_lie3, fingerprint_leibniz3};
use leibniz_core::cohomology::cohomology;
use leibniz_core::deformation::{BasisSource, DeformationEngine, PolyBracket};
use leibniz_core::format::{canonical_constants, parse_algebra};
use leibniz_core::render::{render_cochain, render_poly_vector};
use leibniz_core::{AlgebraSpec, Cochain, Error, Theory};
use sha2::{Digest, Sha256};

use args::{Cli, Command, Common};
use report::{Body, BracketRow, Input, NamedCochain, PairVerdict, Report, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

const COORDINATES: &str = "c[i][j][k] is the coefficient of e_k in [e_i,e_j]; all indices 1-based";

/// Exit code plus the bytes destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Rational(_)
            | Error::Format(_)
            | Error::UnknownAlgebra(_)
            | Error::Parameters { .. }
            | Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
            Error::NotLie(_)
            | Error::NotLeibniz(_)
            | Error::Shape(_)
            | Error::NotCocycle
            | Error::Unsupported(_)
            | Error::NotNilpotent(_) => Failure::Precondition(e.to_string()),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo = std::iter::once("leibniz".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    let json = match &cli.command {
        Command::Check(c) | Command::Classify(c) => c.json,
        Command::Cohomology(c) => c.inner.common.json,
        Command::Versal(c) => c.common.json,
        Command::Massey(c) => c.inner.common.json,
    };
    match execute(&cli.command, echo) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: if json { report.to_json() } else { report.to_text() },
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Precondition(m)) => {
            Outcome { code: EXIT_PRECONDITION, stdout: String::new(), stderr: format!("error: {m}\n") }
        }
    }
}

fn load(c: &Common) -> Result<(AlgebraSpec, Input), Failure> {
    let (a, source) = match (&c.algebra, &c.algebra_file) {
        (Some(name), _) => {
            let a = builtin(name, &c.param)?;
            let source = format!("builtin {}", a.label());
            (a, source)
        }
        (None, Some(path)) => {
            if !c.param.is_empty() {
                return Err(Failure::Usage("--param applies to built-in algebras only".into()));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let a = parse_algebra(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (a, format!("file {}", path.display()))
        }
        (None, None) => return Err(Failure::Usage("one of --algebra or --algebra-file is required".into())),
    };
    let digest = Sha256::digest(canonical_constants(&a).as_bytes());
    let input = Input { source, dim: a.dim(), sha256: hex::encode(digest) };
    Ok((a, input))
}

fn execute(cmd: &Command, command: String) -> Result<Report, Failure> {
    match cmd {
        Command::Check(c) => {
            let (a, input) = load(c)?;
            Ok(Report { command, input, result: check(&a), basis: COORDINATES.into() })
        }
        Command::Cohomology(c) => {
            let (a, input) = load(&c.inner.common)?;
            let theory = c.inner.theory;
            let h = cohomology(&a, theory, c.degree as usize)?;
            let representatives = c.reps.then(|| named(&h.representatives, "phi"));
            Ok(Report {
                command,
                input,
                result: Body::Cohomology {
                    theory: theory.to_string(),
                    degree: h.degree,
                    dim_z: h.dim_z,
                    dim_b: h.dim_b,
                    dim_h: h.dim_h,
                    representatives,
                },
                basis: format!(
                    "{COORDINATES}; cochain coordinates list {} input tuples lexicographically with outputs innermost; \
                     representatives span the canonical complement of B in Z",
                    if theory == Theory::Lie { "increasing" } else { "all" }
                ),
            })
        }
        Command::Versal(c) => {
            let (a, input) = load(&c.common)?;
            let engine = DeformationEngine::new(&a, c.theory)?;
            let v = engine.versal_output()?;
            let pairs = table_pairs(a.dim(), c.theory);
            let first = v.first_order_bracket();
            let quadratic = v.bracket();
            let first_order = pairs.iter().map(|&(i, j)| row(&first, i, j, None)).collect();
            let second_order = pairs
                .iter()
                .map(|&(i, j)| row(&quadratic, i, j, Some(2)))
                .filter(|r| r.value != "0")
                .collect();
            let note = if v.relations.is_empty() {
                "truncated at order 2".to_string()
            } else {
                "truncated at order 2; third-order obstructions are not computed".to_string()
            };
            Ok(Report {
                command,
                input,
                result: Body::Versal {
                    theory: c.theory.to_string(),
                    parameters: v.infinitesimal.parameters.clone(),
                    cocycles: named(&v.infinitesimal.cocycles, cocycle_prefix(c.theory)),
                    first_order,
                    second_order,
                    relations: v.relations.iter().map(|r| r.render()).collect(),
                    note,
                },
                basis: basis_note(&engine),
            })
        }
        Command::Classify(c) => {
            let (a, input) = load(c)?;
            Ok(Report { command, input, result: classify(&a)?, basis: COORDINATES.into() })
        }
        Command::Massey(c) => {
            let (a, input) = load(&c.inner.common)?;
            let engine = DeformationEngine::new(&a, c.inner.theory)?;
            let squares = engine.all_massey_squares()?;
            let mut wanted = Vec::new();
            for &(i, j) in &c.pairs {
                wanted.push(engine.massey_square(i, j)?);
            }
            let listed = if c.pairs.is_empty() { &squares } else { &wanted };
            let pairs = listed
                .iter()
                .map(|sq| PairVerdict {
                    i: sq.i,
                    j: sq.j,
                    status: if sq.cochain.is_zero() {
                        "zero"
                    } else if sq.is_obstructed {
                        "obstructed"
                    } else {
                        "coboundary"
                    }
                    .into(),
                    class: sq.h3_class.iter().map(ToString::to_string).collect(),
                })
                .collect();
            Ok(Report {
                command,
                input,
                result: Body::Massey {
                    theory: c.inner.theory.to_string(),
                    h3_dim: engine.h3().dim_h,
                    pairs,
                    obstructed: squares.iter().filter(|s| s.is_obstructed).map(|s| (s.i, s.j)).collect(),
                    relations: engine.base_relations()?.iter().map(|r| r.render()).collect(),
                },
                basis: basis_note(&engine),
            })
        }
    }
}

fn cocycle_prefix(theory: Theory) -> &'static str {
    match theory {
        Theory::Lie => "f",
        Theory::Leibniz => "phi",
    }
}

fn named(cochains: &[Cochain], prefix: &str) -> Vec<NamedCochain> {
    cochains
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let name = format!("{prefix}{}", i + 1);
            NamedCochain { values: render_cochain(&name, c), name }
        })
        .collect()
}

fn basis_note(engine: &DeformationEngine) -> String {
    let m = engine.param_count();
    let which = match (engine.infinitesimal().basis_source, engine.theory()) {
        (BasisSource::Pinned, Theory::Lie) => "the pinned n3 cocycles f1..f5".to_string(),
        (BasisSource::Pinned, Theory::Leibniz) => {
            "the pinned n3 cocycles phi1..phi8 (phi1..phi5 extend f1..f5 antisymmetrically)".to_string()
        }
        (BasisSource::Canonical, _) => "the canonical representatives of H2".to_string(),
    };
    format!("{COORDINATES}; parameter t_i multiplies cocycle i of {which} (m = {m}); H3 classes use the canonical H3 basis")
}

fn table_pairs(n: usize, theory: Theory) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if theory == Theory::Leibniz || i < j {
                out.push((i, j));
            }
        }
    }
    out
}

fn row(b: &PolyBracket, i: usize, j: usize, degree: Option<usize>) -> BracketRow {
    let entry: Vec<_> = match degree {
        None => b.entry(i, j).to_vec(),
        Some(d) => b.entry(i, j).iter().map(|p| p.homogeneous(d)).collect(),
    };
    BracketRow { i: i + 1, j: j + 1, value: render_poly_vector(&entry) }
}

fn check(a: &AlgebraSpec) -> Body {
    let r = a.check_lie();
    let first = |t: Option<&((usize, usize, usize), _)>| t.map(|((i, j, k), _)| vec![*i, *j, *k]);
    Body::Check {
        antisymmetry: Verdict {
            holds: r.is_antisymmetric,
            first_failure: r.antisymmetry_defect.first().map(|&(i, j)| vec![i, j]),
        },
        jacobi: Verdict { holds: r.jacobi_defect.is_empty(), first_failure: first(r.jacobi_defect.first()) },
        leibniz: Verdict { holds: r.leibniz_defect.is_empty(), first_failure: first(r.leibniz_defect.first()) },
    }
}

fn classify(a: &AlgebraSpec) -> Result<Body, Failure> {
    if a.dim() != 3 {
        return Err(Failure::Precondition(format!("classification needs dimension 3, got {}", a.dim())));
    }
    let mut details = Vec::new();
    if a.is_lie() {
        let c = classify_lie3(a)?;
        details.push(("derived dim".into(), c.derived_dim.to_string()));
        details.push(("center dim".into(), c.center_dim.to_string()));
        if let Some(inv) = &c.invariant {
            details.push(("tr^2/det".into(), inv.to_string()));
        }
        if a.is_nilpotent() {
            details.push(("nilpotent list".into(), fingerprint_leibniz3(a)?.label.to_string()));
        }
        return Ok(Body::Classify { label: c.label.to_string(), details });
    }
    let fp = fingerprint_leibniz3(a)?;
    let dims: Vec<String> = fp.lcs_dims.iter().map(usize::to_string).collect();
    details.push(("lower central series".into(), dims.join(" ")));
    details.push(("lie".into(), "no".into()));
    details.push(("annihilator dim".into(), fp.annihilator_dim.to_string()));
    for (k, v) in [("form rank", fp.bilinear_rank), ("symmetric rank", fp.sym_rank), ("antisymmetric rank", fp.antisym_rank)] {
        if let Some(v) = v {
            details.push((k.into(), v.to_string()));
        }
    }
    if let Some(j) = &fp.j_invariant {
        details.push(("j".into(), j.to_string()));
    }
    Ok(Body::Classify { label: fp.label.to_string(), details })
}
