use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use leibniz_core::{Scalar, Theory};

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Lie and Leibniz cohomology and deformations of small algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Antisymmetry, Jacobi and Leibniz identity verdicts.
    Check(Common),
    /// Dimensions of Z, B and H in one degree.
    Cohomology(CohomologyArgs),
    /// Order-2 versal deformation: bracket table and base relations.
    Versal(TheoryArgs),
    /// Isomorphism class of a three-dimensional algebra.
    Classify(Common),
    /// Second-order obstructions of the H^2 basis.
    Massey(MasseyArgs),
}

#[derive(Args, Debug)]
pub struct Common {
    /// Built-in algebra: n3, r31, sl2, d, lambda1..lambda6.
    #[arg(long, required_unless_present = "algebra_file", conflicts_with = "algebra_file")]
    pub algebra: Option<String>,
    /// JSON algebra file.
    #[arg(long, value_name = "PATH")]
    pub algebra_file: Option<PathBuf>,
    /// Parameter of a built-in family, "p" or "p/q"; repeat for d(r:s).
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    pub param: Vec<Scalar>,
    /// Machine-readable report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct TheoryArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_parser = parse_theory)]
    pub theory: Theory,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    #[command(flatten)]
    pub inner: TheoryArgs,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub degree: u8,
    /// Print representative cocycles.
    #[arg(long)]
    pub reps: bool,
}

#[derive(Args, Debug)]
pub struct MasseyArgs {
    #[command(flatten)]
    pub inner: TheoryArgs,
    /// Restrict the listing to pairs "i,j" (1-based); repeatable.
    #[arg(long, value_name = "I,J", value_parser = parse_pair)]
    pub pairs: Vec<(usize, usize)>,
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse().map_err(|_| format!("expected lie or leibniz, got {s:?}"))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected I,J, got {s:?}"))?;
    let n = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((n(a)?, n(b)?))
}
