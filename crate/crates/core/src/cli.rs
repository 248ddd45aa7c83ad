//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or a non-empty set
//! difference, or printed-formula inconsistencies under `--strict`), 2 usage
//! error.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bisect120::{self, AuditBounds, BisectorTriple, Variant};
use crate::exactnum::Rational;
use crate::geomkernel;
use crate::tri120::{self, Triple120};
use crate::unitfrac;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    #[value(name = "json-lines")]
    JsonLines,
    #[default]
    Human,
}

#[derive(Debug, Parser)]
#[command(name = "bisect120", version, about = "Integral 120-degree triangles with integral angle bisector")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The equation 1/z = 1/x + 1/y
    #[command(subcommand)]
    Unitfrac(UnitfracCmd),
    /// Integral triangles with a 120-degree angle
    #[command(subcommand)]
    Tri120(Tri120Cmd),
    /// 120-degree triangles whose bisector is integral
    #[command(subcommand)]
    Bisector(BisectorCmd),
    /// Exact geometric identities
    #[command(subcommand)]
    Geom(GeomCmd),
}

#[derive(Debug, Subcommand)]
enum UnitfracCmd {
    Enumerate {
        #[arg(long)]
        z_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    Decompose { x: u64, y: u64, z: u64 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TriMethod {
    Families,
    Brute,
    Both,
}

#[derive(Debug, Subcommand)]
enum Tri120Cmd {
    Enumerate {
        #[arg(long)]
        c_max: u64,
        #[arg(long, value_enum)]
        method: TriMethod,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    Check { a: u64, b: u64, c: u64 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BisectorMethod {
    Parametric,
    Brute,
    Both,
}

#[derive(Debug, Subcommand)]
enum BisectorCmd {
    Enumerate {
        #[arg(long)]
        c_max: u64,
        #[arg(long, value_enum)]
        method: BisectorMethod,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    #[command(name = "audit-section8")]
    Audit {
        #[arg(long)]
        r_max: u64,
        #[arg(long)]
        t_max: u64,
        #[arg(long)]
        k_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Also fail when the as-printed formulas are inconsistent
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GeomCmd {
    #[command(name = "verify-prop1")]
    VerifyProp1 {
        #[arg(value_parser = parse_rational)]
        a: Rational,
        #[arg(value_parser = parse_rational)]
        b: Rational,
    },
    #[command(name = "verify-ptolemy")]
    VerifyPtolemy {
        #[arg(value_parser = parse_rational)]
        a: Rational,
        #[arg(value_parser = parse_rational)]
        b: Rational,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
struct TriRow {
    a: u64,
    b: u64,
    c: u64,
    primitive: String,
    scale: u64,
    families: String,
}

#[derive(Debug, Serialize)]
struct BisectorRow {
    a: u64,
    b: u64,
    c: u64,
    z: u64,
    m: u64,
    n: u64,
    k: u64,
}

impl From<&BisectorTriple> for BisectorRow {
    fn from(t: &BisectorTriple) -> Self {
        let (k, m, n) = t.unit_fraction_params();
        BisectorRow { a: t.a, b: t.b, c: t.c, z: t.z, m, n, k }
    }
}

#[derive(Debug, Serialize)]
struct DiffRow<R> {
    side: &'static str,
    #[serde(flatten)]
    row: R,
}

pub const UNITFRAC_HEADER: &[&str] = &["x", "y", "z", "k", "m", "n"];
pub const TRI120_HEADER: &[&str] = &["a", "b", "c", "primitive", "scale", "families"];
pub const BISECTOR_HEADER: &[&str] = &["a", "b", "c", "z", "m", "n", "k"];
pub const AUDIT_HEADER: &[&str] = &["case", "variant", "k", "r", "t", "d_num", "d_den", "z", "consistent"];

struct Failure(i32, String);

type CmdResult = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn io(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_FAIL, format!("write error: {e}"))
}

/// Writes rows in the requested format. `human` renders one row per line.
fn emit<R: Serialize>(
    out: &mut dyn Write,
    format: OutputFormat,
    header: &[&str],
    rows: &[R],
    human: impl Fn(&R) -> String,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(header).map_err(io)?;
            for row in rows {
                w.serialize(row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(io)?;
            out.write_all(&bytes).map_err(io)
        }
        OutputFormat::JsonLines => {
            for row in rows {
                let line = serde_json::to_string(row).map_err(io)?;
                writeln!(out, "{line}").map_err(io)?;
            }
            Ok(())
        }
        OutputFormat::Human => {
            for row in rows {
                writeln!(out, "{}", human(row)).map_err(io)?;
            }
            Ok(())
        }
    }
}

fn with_side<R>(side: &'static str, rows: impl IntoIterator<Item = R>) -> impl Iterator<Item = DiffRow<R>> {
    rows.into_iter().map(move |row| DiffRow { side, row })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            if code == EXIT_USAGE {
                let _ = writeln!(err, "run with --help for usage");
            }
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Unitfrac(cmd) => run_unitfrac(cmd, out),
        Command::Tri120(cmd) => run_tri120(cmd, out),
        Command::Bisector(cmd) => run_bisector(cmd, out),
        Command::Geom(cmd) => run_geom(cmd, out),
    }
}

fn run_unitfrac(cmd: UnitfracCmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        UnitfracCmd::Enumerate { z_max, format } => {
            let rows = unitfrac::enumerate(z_max).map_err(|e| usage(e.to_string()))?;
            emit(out, format, UNITFRAC_HEADER, &rows, |s| {
                format!("1/{} = 1/{} + 1/{}  k={} m={} n={}", s.z, s.x, s.y, s.k, s.m, s.n)
            })?;
            Ok(EXIT_OK)
        }
        UnitfracCmd::Decompose { x, y, z } => match unitfrac::decompose(x, y, z) {
            Some((k, m, n)) => {
                writeln!(out, "k={k} m={m} n={n}").map_err(io)?;
                Ok(EXIT_OK)
            }
            None => {
                writeln!(out, "({x}, {y}, {z}) is not a solution of 1/z = 1/x + 1/y").map_err(io)?;
                Ok(EXIT_FAIL)
            }
        },
    }
}

fn tri_rows(set: &BTreeSet<Triple120>, c_max: u64) -> Vec<TriRow> {
    let families = tri120::enumerate_families(c_max);
    set.iter()
        .map(|t| {
            let (p, scale) = tri120::primitive_reduce(*t);
            let tags = families
                .get(t)
                .map(|fs| fs.iter().map(|f| f.tag()).collect::<Vec<_>>().join(";"))
                .unwrap_or_default();
            TriRow { a: t.a, b: t.b, c: t.c, primitive: format!("{}:{}:{}", p.a, p.b, p.c), scale, families: tags }
        })
        .collect()
}

fn run_tri120(cmd: Tri120Cmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Tri120Cmd::Check { a, b, c } => {
            if a == 0 || b == 0 || c == 0 {
                return Err(usage("sides must be positive"));
            }
            if tri120::is_120_triple(a, b, c) {
                writeln!(out, "({a}, {b}, {c}) is a 120-degree triple").map_err(io)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "({a}, {b}, {c}) is NOT a 120-degree triple").map_err(io)?;
                Ok(EXIT_FAIL)
            }
        }
        Tri120Cmd::Enumerate { c_max, method, format } => {
            if c_max == 0 {
                return Err(usage("--c-max must be at least 1"));
            }
            let human = |r: &TriRow| {
                format!("({}, {}, {})  primitive={} scale={} families={}", r.a, r.b, r.c, r.primitive, r.scale, r.families)
            };
            let set = match method {
                TriMethod::Families => tri120::enumerate_families(c_max).into_keys().collect(),
                TriMethod::Brute => tri120::brute_force(c_max),
                TriMethod::Both => {
                    let fam: BTreeSet<_> = tri120::enumerate_families(c_max).into_keys().collect();
                    let brute = tri120::brute_force(c_max);
                    let only_fam: BTreeSet<_> = fam.difference(&brute).copied().collect();
                    let only_brute: BTreeSet<_> = brute.difference(&fam).copied().collect();
                    let rows: Vec<_> = with_side("families", tri_rows(&only_fam, c_max))
                        .chain(with_side("brute", tri_rows(&only_brute, c_max)))
                        .collect();
                    let mut header = vec!["side"];
                    header.extend_from_slice(TRI120_HEADER);
                    if format == OutputFormat::Human {
                        writeln!(out, "families={} brute={} differences={}", fam.len(), brute.len(), rows.len())
                            .map_err(io)?;
                    }
                    emit(out, format, &header, &rows, |r| format!("only {}: {}", r.side, human(&r.row)))?;
                    return Ok(if rows.is_empty() { EXIT_OK } else { EXIT_FAIL });
                }
            };
            emit(out, format, TRI120_HEADER, &tri_rows(&set, c_max), human)?;
            Ok(EXIT_OK)
        }
    }
}

fn run_bisector(cmd: BisectorCmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        BisectorCmd::Enumerate { c_max, method, format } => {
            if c_max == 0 {
                return Err(usage("--c-max must be at least 1"));
            }
            let human = |r: &BisectorRow| {
                format!("({}, {}, {}) z={}  k={} m={} n={}", r.a, r.b, r.c, r.z, r.k, r.m, r.n)
            };
            let rows_of = |set: &BTreeSet<BisectorTriple>| set.iter().map(BisectorRow::from).collect::<Vec<_>>();
            let set = match method {
                BisectorMethod::Parametric => bisect120::generate_complete(c_max),
                BisectorMethod::Brute => bisect120::brute_force(c_max),
                BisectorMethod::Both => {
                    let para = bisect120::generate_complete(c_max);
                    let brute = bisect120::brute_force(c_max);
                    let only_para: BTreeSet<_> = para.difference(&brute).copied().collect();
                    let only_brute: BTreeSet<_> = brute.difference(&para).copied().collect();
                    let rows: Vec<_> = with_side("parametric", rows_of(&only_para))
                        .chain(with_side("brute", rows_of(&only_brute)))
                        .collect();
                    let mut header = vec!["side"];
                    header.extend_from_slice(BISECTOR_HEADER);
                    if format == OutputFormat::Human {
                        writeln!(out, "parametric={} brute={} differences={}", para.len(), brute.len(), rows.len())
                            .map_err(io)?;
                    }
                    emit(out, format, &header, &rows, |r| format!("only {}: {}", r.side, human(&r.row)))?;
                    return Ok(if rows.is_empty() { EXIT_OK } else { EXIT_FAIL });
                }
            };
            emit(out, format, BISECTOR_HEADER, &rows_of(&set), human)?;
            Ok(EXIT_OK)
        }
        BisectorCmd::Audit { r_max, t_max, k_max, format, strict } => {
            if r_max == 0 || t_max == 0 || k_max == 0 {
                return Err(usage("audit bounds must be at least 1"));
            }
            let report = bisect120::audit_section8(AuditBounds { r_max, t_max, k_max });
            match format {
                OutputFormat::Human => out.write_all(report.render_text().as_bytes()).map_err(io)?,
                _ => emit(out, format, AUDIT_HEADER, &report.rows(), |_| String::new())?,
            }
            let printed_inconsistent = report.inconsistent(Variant::AsPrinted).next().is_some();
            let failed = !report.corrected_fully_consistent()
                || !report.only_if_holds()
                || (strict && printed_inconsistent);
            Ok(if failed { EXIT_FAIL } else { EXIT_OK })
        }
    }
}

fn run_geom(cmd: GeomCmd, out: &mut dyn Write) -> CmdResult {
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    match cmd {
        GeomCmd::VerifyProp1 { a, b } => {
            let ok = geomkernel::verify_prop1(a.clone(), b.clone()).map_err(|e| usage(e.to_string()))?;
            let z = (&a * &b).checked_div(&(&a + &b)).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{} verify-prop1 a={a} b={b} CD={z}", verdict(ok)).map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
        GeomCmd::VerifyPtolemy { a, b } => {
            let cfg = geomkernel::build_triangle(a.clone(), b.clone()).map_err(|e| usage(e.to_string()))?;
            let circle = geomkernel::circumcircle(&cfg);
            let [p1, p2, p3, p4] = geomkernel::cyclic_quadrilateral(&cfg);
            let ptolemy = geomkernel::verify_ptolemy(&circle, [&p1, &p2, &p3, &p4]);
            let sides = geomkernel::verify_eq2_eq4(&cfg);
            let ok = matches!(ptolemy, Ok(true)) && sides;
            match ptolemy {
                Ok(p) => writeln!(
                    out,
                    "{} verify-ptolemy a={a} b={b} ptolemy={} equilateral+sum={}",
                    verdict(ok),
                    verdict(p),
                    verdict(sides)
                ),
                Err(e) => writeln!(out, "FAIL verify-ptolemy a={a} b={b}: {e}"),
            }
            .map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
    }
}
