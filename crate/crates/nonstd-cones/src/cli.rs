//! Command-line front end: one verb per library operation, text or JSON
//! reports, exit status 0 on success, 1 on domain errors, 2 on internal
//! invariant failures.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeff::NumberFieldSpec;
use crate::index::{
    lgroup_specializes, orthogonal_decomposition, reduce, riesz_specializes, separating_form, Index,
};
use crate::selftest;
use crate::spectrum::{
    appendix_suite, linearity_fan, maximal_from_real_point, prime_leq, strong_unit_check,
    vanishes_on_cone, vcone_in_variety, PrimeIdealHandle,
};
use crate::term::{Dialect, Term};
use crate::text;
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "nonstd-cones",
    about = "Exact arithmetic over hyperreal cones: decompositions, prime \
             ideals, and separating witnesses for free lattice-ordered \
             groups and Riesz spaces",
    version
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Coefficient field: a preset name (q, sqrt2, sqrt2sqrt3), a path to a
    /// JSON field spec, or an inline spec like "field(x^2-2, [7/5, 3/2])"
    #[arg(long, global = true, default_value = "q")]
    pub field: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DialectArg {
    Riesz,
    Lgroup,
}

impl From<DialectArg> for Dialect {
    fn from(d: DialectArg) -> Dialect {
        match d {
            DialectArg::Riesz => Dialect::Riesz,
            DialectArg::Lgroup => Dialect::LGroup,
        }
    }
}

#[derive(Debug, Args)]
pub struct TermArgs {
    /// Number of variables x0..x(n-1)
    #[arg(short = 'n', long)]
    pub arity: usize,

    /// Term in the concrete grammar, e.g. "0 /\ x0 /\ x1 /\ (x0 - 3*x1)"
    #[arg(long)]
    pub term: String,

    /// Dialect the term must live in
    #[arg(long, value_enum, default_value = "riesz")]
    pub dialect: DialectArg,

    /// Clear rational scalars in the lattice-group dialect by this positive
    /// integer (the result is the term scaled by it)
    #[arg(long)]
    pub clear_denominator: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a term at a series point or a real point
    Eval {
        #[command(flatten)]
        term: TermArgs,
        /// Series point such as "(1, e)" or "(3 + 5*e, e^-1)"
        #[arg(long, conflicts_with = "real_point")]
        point: Option<String>,
        /// Real point such as "(1, th)"
        #[arg(long)]
        real_point: Option<String>,
    },
    /// Orthogonally decompose a nonzero series point
    Decompose {
        #[arg(short = 'n', long)]
        arity: usize,
        /// Series point such as "(1, e)"
        #[arg(long)]
        point: String,
    },
    /// Z-reduce an index
    Reduce {
        #[arg(short = 'n', long)]
        arity: usize,
        /// Index such as "[(1,th,0)],[(th,-1,1)],[(-th,1,3)]"
        #[arg(long)]
        index: String,
    },
    /// Decide membership of a term in the prime ideal named by an index
    Member {
        #[command(flatten)]
        term: TermArgs,
        /// Index such as "[(1,0)],[(0,1)]"
        #[arg(long)]
        index: String,
    },
    /// Compare primes (two indexes) or decide specialization (two points)
    Leq {
        #[arg(short = 'n', long)]
        arity: usize,
        #[arg(long, value_enum, default_value = "riesz")]
        dialect: DialectArg,
        /// Left index
        #[arg(long, requires = "right", conflicts_with_all = ["x", "y"])]
        left: Option<String>,
        /// Right index
        #[arg(long)]
        right: Option<String>,
        /// Specializing series point
        #[arg(long, requires = "y")]
        x: Option<String>,
        /// Target series point
        #[arg(long)]
        y: Option<String>,
    },
    /// Construct a separating linear form for a failed specialization
    Witness {
        #[arg(short = 'n', long)]
        arity: usize,
        #[arg(long, value_enum, default_value = "riesz")]
        dialect: DialectArg,
        /// The point to separate
        #[arg(long)]
        x: String,
        /// The point whose closure excludes x
        #[arg(long)]
        y: String,
    },
    /// Check whether a candidate is a strong order-unit modulo a relator
    UnitCheck {
        #[arg(short = 'n', long)]
        arity: usize,
        /// Relator term (use "0" for the free algebra)
        #[arg(long)]
        relator: String,
        /// Candidate unit term
        #[arg(long)]
        candidate: String,
    },
    /// Print the linearity fan of a term (arity <= 3)
    Fan {
        #[command(flatten)]
        term: TermArgs,
    },
    /// Search for v-cone radii certifying that a term vanishes on a cone
    Vcone {
        #[command(flatten)]
        term: TermArgs,
        /// Index naming the cone
        #[arg(long)]
        index: String,
        /// Radius search budget: radii are powers of 2^-m, m <= m-max
        #[arg(long, default_value = "12")]
        m_max: u32,
    },
    /// Run the omega-generated counterexample family at finite truncation
    Appendix {
        /// Truncation: variables x0..xn (2 <= n <= 5)
        #[arg(short = 'n', long)]
        n: usize,
        /// Coefficient-family bound and real-trace upper index
        #[arg(long, default_value = "16")]
        m_max: u32,
    },
    /// Run the full acceptance suite
    Selftest,
    /// Print a maximal ideal handle for a real point
    Maximal {
        #[arg(short = 'n', long)]
        arity: usize,
        #[arg(long, value_enum, default_value = "riesz")]
        dialect: DialectArg,
        /// Real point such as "(3, 4)" or "(1, th)"
        #[arg(long)]
        point: String,
    },
}

/// A rendered report: human text plus the JSON mirror.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: i32,
}

impl Report {
    fn ok(query: Value, text: String, result: Value) -> Self {
        Self {
            text,
            json: json!({"query": query, "result": result}),
            status: 0,
        }
    }

    fn with_witness(query: Value, text: String, result: Value, witness: Value) -> Self {
        Self {
            text,
            json: json!({"query": query, "result": result, "witness": witness}),
            status: 0,
        }
    }
}

/// Resolves a field argument: inline spec, file path, preset directory
/// entry, or builtin preset.
pub fn resolve_field(arg: &str) -> Result<Arc<NumberFieldSpec>> {
    let trimmed = arg.trim();
    if trimmed.starts_with("field(") {
        return text::parse_field_spec(trimmed);
    }
    let mut candidates: Vec<PathBuf> = vec![PathBuf::from(trimmed)];
    candidates.push(PathBuf::from(format!("{trimmed}.json")));
    if let Ok(dir) = std::env::var("NONSTD_CONES_PRESETS") {
        candidates.push(Path::new(&dir).join(format!("{trimmed}.json")));
        candidates.push(Path::new(&dir).join(trimmed));
    }
    candidates.push(Path::new("presets").join(format!("{trimmed}.json")));
    for path in candidates {
        if path.is_file() {
            let raw = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&raw)
                .map_err(|e| Error::Invalid(format!("bad JSON in {}: {e}", path.display())))?;
            return NumberFieldSpec::from_json(&value);
        }
    }
    match trimmed {
        "q" => Ok(NumberFieldSpec::rational()),
        "sqrt2" => Ok(NumberFieldSpec::sqrt2()),
        "sqrt2sqrt3" => Ok(NumberFieldSpec::sqrt2_sqrt3()),
        other => Err(Error::Invalid(format!(
            "unknown field '{other}': not a preset, file, or inline spec"
        ))),
    }
}

fn parse_term_arg(args: &TermArgs, spec: &Arc<NumberFieldSpec>) -> Result<Term> {
    let dialect: Dialect = args.dialect.into();
    match (&args.clear_denominator, dialect) {
        (Some(d), Dialect::LGroup) => {
            Term::parse_cleared(&args.term, args.arity, &BigInt::from(*d))
        }
        (Some(_), Dialect::Riesz) => Err(Error::Invalid(
            "--clear-denominator only applies to the lattice-group dialect".into(),
        )),
        (None, _) => Term::parse(&args.term, args.arity, dialect, spec),
    }
}

/// Executes one command and produces its report.
pub fn run(cli: &Cli) -> Result<Report> {
    let spec = resolve_field(&cli.field)?;
    match &cli.command {
        Command::Eval {
            term,
            point,
            real_point,
        } => {
            let t = parse_term_arg(term, &spec)?;
            let query = json!({
                "verb": "eval", "term": term.term, "arity": term.arity,
                "dialect": Dialect::from(term.dialect).to_string(),
                "ast": t.to_json(),
            });
            match (point, real_point) {
                (Some(p), None) => {
                    let coords = text::parse_series_point(p, term.arity, &spec)?;
                    let value = t.eval_series(&coords)?;
                    Ok(Report::ok(
                        query,
                        value.to_string(),
                        json!({"value": value.to_string(), "series": value.to_json()}),
                    ))
                }
                (None, Some(p)) => {
                    let coords = text::parse_real_point(p, term.arity, &spec)?;
                    let value = t.eval_real(&coords)?;
                    Ok(Report::ok(
                        query,
                        value.to_string(),
                        json!({"value": value.to_string(), "element": value.to_json()}),
                    ))
                }
                _ => Err(Error::Invalid(
                    "eval needs exactly one of --point or --real-point".into(),
                )),
            }
        }
        Command::Decompose { arity, point } => {
            let coords = text::parse_series_point(point, *arity, &spec)?;
            let d = orthogonal_decomposition(&coords)?;
            let query = json!({"verb": "decompose", "point": point, "arity": arity});
            let parts: Vec<Value> = d
                .parts()
                .iter()
                .map(|(a, dir)| json!({"scale": a.to_string(), "direction": dir.to_json()}))
                .collect();
            Ok(Report::ok(
                query,
                format!("{d}\nindex: {}", d.index()),
                json!({"parts": parts, "index": d.index().to_json()}),
            ))
        }
        Command::Reduce { arity, index } => {
            let v = Index::parse(index, *arity, &spec)?;
            let reduced = reduce(&v);
            let query = json!({"verb": "reduce", "index": index, "arity": arity});
            Ok(Report::ok(
                query,
                reduced.to_string(),
                json!({"reduced": reduced.to_json(), "z_reduced_input": reduced == v}),
            ))
        }
        Command::Member { term, index } => {
            let dialect: Dialect = term.dialect.into();
            let t = parse_term_arg(term, &spec)?;
            let v = Index::parse(index, term.arity, &spec)?;
            let member = vanishes_on_cone(&t, &v, dialect)?;
            let query = json!({
                "verb": "member", "term": term.term, "index": index,
                "dialect": dialect.to_string(), "arity": term.arity,
            });
            Ok(Report::ok(query, member.to_string(), json!(member)))
        }
        Command::Leq {
            arity,
            dialect,
            left,
            right,
            x,
            y,
        } => {
            let dialect: Dialect = (*dialect).into();
            match (left, right, x, y) {
                (Some(l), Some(r), None, None) => {
                    let li = Index::parse(l, *arity, &spec)?;
                    let ri = Index::parse(r, *arity, &spec)?;
                    let hl = PrimeIdealHandle::new(dialect, li)?;
                    let hr = PrimeIdealHandle::new(dialect, ri)?;
                    let ans = prime_leq(&hl, &hr)?;
                    let query = json!({
                        "verb": "leq", "left": l, "right": r,
                        "dialect": dialect.to_string(), "arity": arity,
                    });
                    Ok(Report::ok(query, ans.to_string(), json!(ans)))
                }
                (None, None, Some(xs), Some(ys)) => {
                    let xp = text::parse_series_point(xs, *arity, &spec)?;
                    let yp = text::parse_series_point(ys, *arity, &spec)?;
                    let ans = match dialect {
                        Dialect::Riesz => riesz_specializes(&xp, &yp)?,
                        Dialect::LGroup => lgroup_specializes(&xp, &yp)?,
                    };
                    let query = json!({
                        "verb": "leq", "x": xs, "y": ys,
                        "dialect": dialect.to_string(), "arity": arity,
                    });
                    Ok(Report::ok(query, ans.to_string(), json!(ans)))
                }
                _ => Err(Error::Invalid(
                    "leq needs either --left/--right indexes or --x/--y points".into(),
                )),
            }
        }
        Command::Witness {
            arity,
            dialect,
            x,
            y,
        } => {
            let dialect: Dialect = (*dialect).into();
            let xp = text::parse_series_point(x, *arity, &spec)?;
            let yp = text::parse_series_point(y, *arity, &spec)?;
            let f = separating_form(&xp, &yp, dialect)?;
            let at_y = f.apply_series(&yp)?;
            let at_x = f.apply_series(&xp)?;
            let query = json!({
                "verb": "witness", "x": x, "y": y,
                "dialect": dialect.to_string(), "arity": arity,
            });
            Ok(Report::with_witness(
                query,
                format!("{f}\nvalue at y: {at_y}\nvalue at x: {at_x}"),
                json!({"at_y": at_y.to_string(), "at_x": at_x.to_string()}),
                f.to_json(),
            ))
        }
        Command::UnitCheck {
            arity,
            relator,
            candidate,
        } => {
            let r = Term::parse(relator, *arity, Dialect::Riesz, &spec)?;
            let c = Term::parse(candidate, *arity, Dialect::Riesz, &spec)?;
            let ans = strong_unit_check(&r, &c, &spec)?;
            let query = json!({
                "verb": "unit-check", "relator": relator, "candidate": candidate,
                "arity": arity,
            });
            Ok(Report::ok(query, ans.to_string(), json!(ans)))
        }
        Command::Fan { term } => {
            let t = parse_term_arg(term, &spec)?;
            let fan = linearity_fan(&t, &spec)?;
            let query = json!({
                "verb": "fan", "term": term.term, "arity": term.arity,
            });
            let text_out = fan
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json_out: Vec<Value> = fan.iter().map(|p| p.to_json()).collect();
            Ok(Report::ok(query, text_out, json!(json_out)))
        }
        Command::Vcone { term, index, m_max } => {
            let dialect: Dialect = term.dialect.into();
            let t = parse_term_arg(term, &spec)?;
            let v = Index::parse(index, term.arity, &spec)?;
            let found = vcone_in_variety(&t, &v, dialect, *m_max)?;
            let query = json!({
                "verb": "vcone", "term": term.term, "index": index,
                "dialect": dialect.to_string(), "m_max": m_max,
            });
            match found {
                Some(radii) => {
                    let shown = radii
                        .iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    Ok(Report::ok(
                        query,
                        format!("radii: ({shown})"),
                        json!({"radii": radii.iter().map(|r| r.to_string()).collect::<Vec<_>>()}),
                    ))
                }
                None => Ok(Report::ok(
                    query,
                    "none (budget exhausted)".into(),
                    json!({"radii": Value::Null}),
                )),
            }
        }
        Command::Appendix { n, m_max } => {
            let rep = appendix_suite(*n, *m_max)?;
            let query = json!({"verb": "appendix", "n": n, "m_max": m_max});
            let mut report = Report::ok(query, rep.to_string(), rep.to_json());
            if !rep.passed() {
                report.status = 2;
            }
            Ok(report)
        }
        Command::Selftest => {
            let started = std::time::Instant::now();
            let reports = selftest::run_all();
            let elapsed = started.elapsed();
            let all_passed = reports.iter().all(|r| r.passed);
            let mut text_out = reports
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            text_out.push_str(&format!("\nruntime: {:.2}s", elapsed.as_secs_f64()));
            let json_out: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id, "name": r.name,
                        "passed": r.passed, "details": r.details,
                    })
                })
                .collect();
            let mut report = Report::ok(
                json!({"verb": "selftest"}),
                text_out,
                json!({
                    "criteria": json_out,
                    "runtime_seconds": elapsed.as_secs_f64(),
                }),
            );
            if !all_passed {
                report.status = 2;
            }
            Ok(report)
        }
        Command::Maximal {
            arity,
            dialect,
            point,
        } => {
            let dialect: Dialect = (*dialect).into();
            let p = text::parse_real_point(point, *arity, &spec)?;
            let h = maximal_from_real_point(&p, dialect)?;
            let query = json!({
                "verb": "maximal", "point": point,
                "dialect": dialect.to_string(), "arity": arity,
            });
            Ok(Report::ok(query, h.to_string(), h.to_json()))
        }
    }
}
