//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::json;

use crate::bridge::{canonicalize_fraction, family_fraction, FamilyKind, FamilySpec};
use crate::contfrac::{pm_word, signed_regular_expansion, Fraction};
use crate::diagram::{minimal_diagram, render_svg, DEFAULT_SAMPLES_PER_LOBE};
use crate::harmonic::{atlas, classify, AtlasRecord, HarmonicSpec};
use crate::heights::parametrization;
use crate::oracle::{verify_parametrization, DEFAULT_SEPARATION_FLOOR};
use crate::Error;

pub const FLOOR_ENV: &str = "CHEBKNOT_SEPARATION_FLOOR";

#[derive(Parser, Debug)]
#[command(
    name = "chebknot",
    version,
    about = "Chebyshev diagrams and polynomial parametrizations of two-bridge knots"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// 1-regular continued fraction of a fraction.
    Expand {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Minimal Chebyshev diagram C(3,b) of S(alpha/beta).
    Diagram {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Polyline samples per lobe in the SVG.
        #[arg(long, default_value_t = DEFAULT_SAMPLES_PER_LOBE)]
        samples: usize,
    },
    /// Polynomial parametrization (T_3, T_b, C) of S(alpha/beta).
    Param {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Classify the harmonic knot H(a,b,c); a must be 3.
    Harmonic { a: i64, b: i64, c: i64 },
    /// Classify every H(3,b,c) up to the given degrees as newline-delimited JSON.
    Atlas {
        #[arg(long)]
        b_max: i64,
        #[arg(long)]
        c_max: i64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the parametrization of S(alpha/beta) and check it crossing by crossing.
    Verify {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        /// Minimum |z(t) - z(s)| at a crossing.
        #[arg(long)]
        floor: Option<f64>,
    },
    /// Schubert fraction of a named family member.
    Family { kind: FamilyKind, index: u64 },
}

impl clap::ValueEnum for FamilyKind {
    fn value_variants<'a>() -> &'a [Self] {
        &[
            FamilyKind::Torus,
            FamilyKind::Twist,
            FamilyKind::Stevedore,
            FamilyKind::Fibonacci,
            FamilyKind::Kn,
        ]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|e| Failure::from(Error::from(e)))
    };
}

/// Runs the program on `argv` (including the program name). Returns the
/// exit status: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "usage: chebknot <expand|diagram|param|harmonic|atlas|verify|family> ...");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// `"α/β"`, `"α"` or `"-α/β"`; the sign always ends up on `β`.
fn parse_fraction(s: &str) -> Result<Fraction, Failure> {
    let r: Fraction = s.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
    if r.is_zero() {
        return Err(Failure::Usage(format!("{s:?} must have a positive numerator")));
    }
    Ok(r)
}

/// `α/β'` with `0 < β' < α` naming the same knot, for verbs that need `r > 1`.
fn knot_fraction(r: &Fraction) -> Result<Fraction, Failure> {
    r.schubert_representative()
        .ok_or_else(|| Failure::Domain(format!("S({r}) is the unknot and has no crossings")))
}

fn floor_from_env() -> Result<f64, Failure> {
    match std::env::var(FLOOR_ENV) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite() && *x >= 0.0)
            .ok_or_else(|| Failure::Usage(format!("{FLOOR_ENV}={v:?} is not a nonnegative number"))),
        Err(_) => Ok(DEFAULT_SEPARATION_FLOOR),
    }
}

fn emit(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<(), Failure> {
    writeln!(out, "{s}").map_err(|e| Failure::Domain(format!("write failed: {e}")))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Format::Json;
    match cli.verb {
        Verb::Expand { fraction } => {
            let r = parse_fraction(&fraction)?;
            let (cf, negated) = domain!(signed_regular_expansion(&r))?;
            let knot = domain!(canonicalize_fraction(&r))?;
            let cn = knot.crossing_number();
            let word = if negated { None } else { Some(domain!(pm_word(&cf))?.to_string()) };
            if json {
                emit(
                    out,
                    json!({
                        "fraction": r.to_string(),
                        "terms": cf.terms(),
                        "length": cf.len(),
                        "cn": u64::try_from(&cn).ok(),
                        "word": word,
                    }),
                )?;
            } else {
                emit(out, format!("{cf}  length={}  cn={cn}", cf.len()))?;
            }
        }
        Verb::Diagram { fraction, svg, samples } => {
            let r = knot_fraction(&parse_fraction(&fraction)?)?;
            let d = domain!(minimal_diagram(&r))?;
            if let Some(path) = svg {
                let doc = domain!(render_svg(&d.form, samples))?;
                std::fs::write(&path, doc)
                    .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            }
            if json {
                let knot = domain!(canonicalize_fraction(&r))?;
                emit(
                    out,
                    json!({
                        "fraction": r.to_string(),
                        "form": d.form,
                        "b": d.b,
                        "mirrored": d.mirrored,
                        "knot": knot.record(),
                    }),
                )?;
            } else {
                emit(out, format!("{}  b={}  mirrored={}", d.form, d.b, d.mirrored))?;
            }
        }
        Verb::Param { fraction } => {
            let r = knot_fraction(&parse_fraction(&fraction)?)?;
            let p = domain!(parametrization(&r))?;
            if json {
                emit(out, serde_json::to_string(&p.record()).expect("serializable"))?;
            } else {
                emit(out, format!("x = T_3(t)  y = T_{}(t)  N={}  deg z={}", p.b, p.crossing_number, p.z.degree()))?;
                emit(out, format!("z = {}", p.z))?;
            }
        }
        Verb::Harmonic { a, b, c } => {
            let spec = domain!(HarmonicSpec::new(a, b, c))?;
            let h = domain!(classify(spec))?;
            if json {
                let rec = AtlasRecord::from_canonical(spec, &h);
                emit(out, serde_json::to_string(&rec).expect("serializable"))?;
            } else {
                emit(
                    out,
                    format!(
                        "{spec} -> H(3,{},{})  mirror={}  N={}  fraction={}  knot={}",
                        h.b_prime,
                        h.c_prime,
                        h.mirror,
                        h.crossing_number,
                        h.fraction,
                        h.knot()
                    ),
                )?;
            }
        }
        Verb::Atlas { b_max, c_max, out: path } => {
            if b_max < 1 || c_max < 1 {
                return Err(Failure::Usage("--b-max and --c-max must be positive".into()));
            }
            let records = atlas(b_max, c_max);
            let mut text = String::new();
            for r in &records {
                text.push_str(&serde_json::to_string(r).expect("serializable"));
                text.push('\n');
            }
            match path {
                Some(p) => {
                    std::fs::write(&p, text)
                        .map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
                    if !json {
                        emit(out, format!("{} records written to {}", records.len(), p.display()))?;
                    }
                }
                None => {
                    out.write_all(text.as_bytes())
                        .map_err(|e| Failure::Domain(format!("write failed: {e}")))?;
                }
            }
        }
        Verb::Verify { fraction, floor } => {
            let r = knot_fraction(&parse_fraction(&fraction)?)?;
            let floor = match floor {
                Some(f) if f.is_finite() && f >= 0.0 => f,
                Some(f) => return Err(Failure::Usage(format!("--floor {f} is not a nonnegative number"))),
                None => floor_from_env()?,
            };
            let p = domain!(parametrization(&r))?;
            let rep = domain!(verify_parametrization(&r, &p.record(), floor))?;
            if json {
                emit(out, serde_json::to_string(&rep).expect("serializable"))?;
            } else {
                emit(out, format!("measured {}  b={}  min separation {:.3e}", rep.measured_form, p.b, rep.min_separation))?;
                emit(out, format!("verdict: {}", if rep.verdict { "pass" } else { "FAIL" }))?;
            }
            return Ok(if rep.verdict { 0 } else { 1 });
        }
        Verb::Family { kind, index } => {
            let r = domain!(family_fraction(FamilySpec::new(kind, index)))?;
            let knot = domain!(canonicalize_fraction(&r))?;
            let b = if r.numer().is_odd() { minimal_diagram(&r).ok().map(|d| d.b) } else { None };
            if json {
                emit(
                    out,
                    json!({
                        "family": kind,
                        "index": index,
                        "fraction": r.to_string(),
                        "knot": knot.record(),
                        "b": b,
                    }),
                )?;
            } else {
                let b = b.map_or("-".to_string(), |b| b.to_string());
                emit(out, format!("{kind} {index}: {r}  cn={}  b={b}", knot.crossing_number()))?;
            }
        }
    }
    Ok(0)
}
