//! Command-line front end: argument parsing, command dispatch and the text
//! and JSON emitters.

mod document;
mod spec;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use plucker_core::crs::crs_class;
use plucker_core::error::Error;
use plucker_core::exactpoly::{fmt_rational, int, MultiPoly, Var};
use plucker_core::flagcalc::{flex_point_locus_class, incidence_class, ProjClass};
use plucker_core::golden::golden_corpus;
use plucker_core::plucker::{
    asymptotic_plucker, hyperflex_count, lines_on_hypersurface, mflex_polynomial, plucker_table,
};
use plucker_core::symfunc::{schur_to_chern, Partition};
use plucker_core::universal::{
    hilbert_degree, pencil_locus_class, universal_class, universal_class_chern,
};

pub use document::{
    coeffs_strings, emit_json, emit_text, factored, parse_json, Entry, OutputDocument,
};
pub use spec::{PartitionSpec, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "plucker",
    version,
    about = "Classes of coincident root loci and Plücker numbers of tangent lines"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Schur,
    Chern,
    Roots,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FlagBasis {
    /// Monomials in zeta, eta.
    Flag,
    /// Monomials in zeta, sigma1 = zeta + eta.
    Sigma,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class of the stratum in the Schur, Chern or root basis.
    Class {
        partition: PartitionSpec,
        /// Evaluate at an integer degree, written d=K.
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "schur")]
        basis: Basis,
    },
    /// All Plücker polynomials of a partition.
    Plucker {
        partition: PartitionSpec,
        #[arg(long)]
        at: Option<String>,
    },
    /// Leading coefficients of the Plücker polynomials.
    Asymptotic { partition: PartitionSpec },
    /// Schur coefficients of the single-part class from the closed formula.
    Flex {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        at: Option<String>,
    },
    /// Lines meeting a degree 2n-3 hypersurface in P(C^n) in one point.
    Hyperflex {
        #[arg(long)]
        n: u32,
    },
    /// Lines on a degree 2n-3 hypersurface in P(C^(n+1)).
    Lines {
        #[arg(long)]
        n: u32,
    },
    /// Class of the incidence variety on the flag manifold.
    Incidence {
        partition: PartitionSpec,
        /// Contact order of the marked point; defaults to the largest part.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "flag")]
        basis: FlagBasis,
        #[arg(long)]
        at: Option<String>,
    },
    /// Class in P(C^n) of the m-fold contact points.
    Flexlocus {
        partition: PartitionSpec,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        at: Option<String>,
    },
    /// Class over a linear system, by powers of xi.
    Universal {
        partition: PartitionSpec,
        #[arg(long, value_enum, default_value = "schur")]
        basis: Basis,
        #[arg(long)]
        at: Option<String>,
    },
    /// Contact points of lambda-lines of the members of a generic pencil.
    Pencil {
        partition: PartitionSpec,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        at: Option<String>,
    },
    /// Recompute every reference value.
    Selftest,
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPartition(_)
            | Error::DegreeTooSmall { .. }
            | Error::OutOfRange(_)
            | Error::MissingAmbient
            | Error::PoleAtD(_) => EXIT_DOMAIN,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

fn parse_at(at: Option<&str>) -> Result<Option<i64>, Failure> {
    let Some(s) = at else { return Ok(None) };
    let v = s.trim().strip_prefix("d=").unwrap_or(s.trim());
    v.trim()
        .parse()
        .map(Some)
        .map_err(|_| usage(format!("--at expects d=K with an integer K, got {s:?}")))
}

/// Checks the partition and the evaluation degree.
fn prepare(spec: &PartitionSpec, at: Option<&str>) -> Result<(Partition, Option<i64>), Failure> {
    let lambda = spec.partition.clone();
    lambda.ensure_crs()?;
    let at = parse_at(at)?;
    if let Some(k) = at {
        if k < lambda.weight() as i64 {
            return Err(Error::DegreeTooSmall {
                d: k,
                weight: lambda.weight(),
            }
            .into());
        }
    }
    Ok((lambda, at))
}

fn header(command: &str, lambda: &Partition, at: Option<i64>) -> OutputDocument {
    let mut doc = OutputDocument::new(command);
    doc.partition = Some(lambda.parts().to_vec());
    doc.codim = Some(lambda.codim());
    doc.d = Some(at.map_or("symbolic".to_string(), |k| k.to_string()));
    doc
}

fn at_d(p: &MultiPoly, at: Option<i64>) -> MultiPoly {
    match at {
        Some(k) => p.eval_var(Var::D, &int(k)),
        None => p.clone(),
    }
}

fn poly_entry(p: &MultiPoly, at: Option<i64>) -> Entry {
    Entry {
        poly: Some(at_d(p, at).to_string()),
        ..Entry::default()
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Schur => "schur",
        Basis::Chern => "chern",
        Basis::Roots => "roots",
    }
}

fn default_part(lambda: &Partition, m: Option<u32>) -> Result<u32, Failure> {
    match m.or(lambda.largest()) {
        Some(m) => Ok(m),
        None => {
            Err(Error::InvalidPartition("the empty partition has no contact points".into()).into())
        }
    }
}

fn proj_entries(p: &ProjClass, at: Option<i64>) -> Result<Vec<Entry>, Failure> {
    let mut out = Vec::new();
    for k in 0..p.ambient_n() {
        let c = p.coefficient(k);
        if c.is_zero() {
            continue;
        }
        let base = Entry {
            zeta: Some(k),
            ..Entry::default()
        };
        out.push(match c.to_unipoly(Var::D) {
            Some(u) => base.with_d_poly(&u, at),
            None => Entry {
                poly: Some(at_d(&c, at).to_string()),
                ..base
            },
        });
    }
    Ok(out)
}

fn execute(command: Command) -> Result<(OutputDocument, i32), Failure> {
    let doc = match command {
        Command::Class {
            partition,
            at,
            basis,
        } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            let class = crs_class(&lambda)?;
            let mut doc = header("class", &lambda, at);
            doc.basis = Some(basis_name(basis).into());
            match basis {
                Basis::Schur => {
                    for (i, c) in class.coefficients().iter() {
                        let e = Entry {
                            k: Some(i.k),
                            l: Some(i.l),
                            ..Entry::default()
                        };
                        doc.entries.push(e.with_d_poly(c, at));
                    }
                }
                Basis::Chern => {
                    let e = class
                        .coefficients()
                        .map(|c| MultiPoly::from_unipoly(c, Var::D));
                    doc.entries.push(poly_entry(&schur_to_chern(&e), at));
                }
                Basis::Roots => doc.entries.push(poly_entry(&class.to_roots(), at)),
            }
            doc
        }
        Command::Plucker { partition, at } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            if lambda.is_empty() {
                return Err(
                    Error::InvalidPartition("the empty partition has no lines".into()).into(),
                );
            }
            let table = plucker_table(&lambda)?;
            let mut doc = header("plucker", &lambda, at);
            for e in table.entries() {
                let entry = Entry {
                    i: Some(e.i),
                    j: Some(e.j),
                    ..Entry::default()
                };
                doc.entries.push(entry.with_d_poly(&e.poly, at));
            }
            doc
        }
        Command::Asymptotic { partition } => {
            let (lambda, _) = prepare(&partition, None)?;
            if lambda.is_empty() {
                return Err(
                    Error::InvalidPartition("the empty partition has no lines".into()).into(),
                );
            }
            let mut doc = header("asymptotic", &lambda, None);
            doc.d = None;
            let codim = lambda.codim();
            for j in 0..=codim / 2 {
                doc.entries.push(Entry {
                    i: Some(codim - 2 * j),
                    j: Some(j),
                    value: Some(fmt_rational(&asymptotic_plucker(&lambda, j)?)),
                    ..Entry::default()
                });
            }
            doc
        }
        Command::Flex { m, i, at } => {
            if m < 2 {
                return Err(Error::OutOfRange(format!("m = {m} must be at least 2")).into());
            }
            let (lambda, at) = prepare(
                &PartitionSpec {
                    source: m.to_string(),
                    partition: Partition::crs(vec![m])?,
                },
                at.as_deref(),
            )?;
            let mut doc = header("flex", &lambda, at);
            let is: Vec<u32> = match i {
                Some(i) => vec![i],
                None => (0..=(m - 1) / 2).collect(),
            };
            for i in is {
                let p = mflex_polynomial(m, i)?;
                let e = Entry {
                    k: Some(m - 1 - i),
                    l: Some(i),
                    i: Some(m - 1 - 2 * i),
                    ..Entry::default()
                };
                doc.entries.push(e.with_d_poly(&p, at));
            }
            doc
        }
        Command::Hyperflex { n } => {
            let mut doc = OutputDocument::new("hyperflex");
            doc.value = Some(hyperflex_count(n)?.to_string());
            doc
        }
        Command::Lines { n } => {
            let mut doc = OutputDocument::new("lines");
            doc.value = Some(lines_on_hypersurface(n)?.to_string());
            doc
        }
        Command::Incidence {
            partition,
            m,
            basis,
            at,
        } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            let m = default_part(&lambda, m)?;
            let f = incidence_class(&lambda, m)?;
            let mut doc = header("incidence", &lambda, at);
            let p = match basis {
                FlagBasis::Flag => {
                    doc.basis = Some("flag".into());
                    f.poly().clone()
                }
                FlagBasis::Sigma => {
                    doc.basis = Some("sigma".into());
                    f.to_sigma_basis()
                }
            };
            doc.notes.push(format!("m = {m}"));
            doc.entries.push(poly_entry(&p, at));
            doc
        }
        Command::Flexlocus {
            partition,
            m,
            n,
            at,
        } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            let m = default_part(&lambda, m)?;
            let p = flex_point_locus_class(&lambda, m, n)?;
            let mut doc = header("flexlocus", &lambda, at);
            doc.notes.push(format!("m = {m}, n = {n}"));
            doc.entries = proj_entries(&p, at)?;
            doc
        }
        Command::Universal {
            partition,
            basis,
            at,
        } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            let u = universal_class(&lambda)?;
            let mut doc = header("universal", &lambda, at);
            doc.basis = Some(basis_name(basis).into());
            match basis {
                Basis::Schur => {
                    for t in 0..=u.xi_degree() {
                        for (i, c) in u.xi_slice(t).iter() {
                            let e = Entry {
                                xi: Some(t),
                                k: Some(i.k),
                                l: Some(i.l),
                                ..Entry::default()
                            };
                            doc.entries.push(e.with_d_poly(c, at));
                        }
                    }
                }
                Basis::Chern => doc
                    .entries
                    .push(poly_entry(&universal_class_chern(&lambda)?, at)),
                Basis::Roots => doc.entries.push(poly_entry(u.poly(), at)),
            }
            if !lambda.is_empty() {
                let h = hilbert_degree(&lambda)?;
                let shown = match at {
                    Some(k) => fmt_rational(&h.eval_int(k)),
                    None => factored(&h),
                };
                doc.notes
                    .push(format!("degree of the projectivized stratum: {shown}"));
            }
            doc
        }
        Command::Pencil {
            partition,
            m,
            n,
            at,
        } => {
            let (lambda, at) = prepare(&partition, at.as_deref())?;
            let m = default_part(&lambda, m)?;
            let p = pencil_locus_class(&lambda, m, n)?;
            let mut doc = header("pencil", &lambda, at);
            doc.notes.push(format!("m = {m}, n = {n}"));
            doc.entries = proj_entries(&p, at)?;
            doc
        }
        Command::Selftest => {
            let cases = golden_corpus();
            let failed = cases.iter().filter(|c| !c.passed).count();
            let mut doc = OutputDocument::new("selftest");
            for c in &cases {
                doc.entries.push(Entry {
                    name: Some(c.name.clone()),
                    value: Some(if c.passed { "pass" } else { "FAIL" }.into()),
                    poly: Some(c.actual.clone()),
                    expected: (!c.passed).then(|| c.expected.clone()),
                    ..Entry::default()
                });
            }
            doc.value = Some(format!("{} passed, {failed} failed", cases.len() - failed));
            let code = if failed == 0 { EXIT_OK } else { EXIT_SELFTEST };
            return Ok((doc, code));
        }
    };
    Ok((doc, EXIT_OK))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok((doc, code)) => {
            let text = if json {
                emit_json(&doc) + "\n"
            } else {
                emit_text(&doc)
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
