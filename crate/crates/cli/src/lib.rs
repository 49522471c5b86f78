//! `roofscope` command-line front end. All computation lives in the core
//! library; this crate parses arguments, renders results and maps outcomes
//! to exit codes.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use roofscope::chow::{
    blowup_discrepancy, canonical_class_pe, kequiv_forces_equal_codim, mukai_pair_check,
    BundleChowRing, CyclicBase, Poly,
};
use roofscope::homog::gp_invariants;
use roofscope::roofs::{
    classify_simple_kequiv, enumerate_roofs, records_csv_rows, records_latex, table_csv_rows,
    table_latex, verify_table_with_fault, Classification, ClassificationQuery, FamilyClass,
    RConstraint, RoofRecord, TableFault, TableReport, CSV_COLUMNS, TABLE_CSV_COLUMNS,
};
use roofscope::{Error, MarkedDiagram};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_RESULT: i32 = 3;

/// JSON schema of one element of `roofs --format json`.
pub const ROOF_RECORD_SCHEMA: &str = include_str!("../schema/roof_record.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "roofscope",
    version,
    about = "Roofs of projective bundles from marked Dynkin diagrams"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "ROOFSCOPE_THREADS",
          value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, Picard number and anticanonical coefficients of G/P.
    Gp {
        /// Marked diagram, e.g. F4:2,3 or A2*A2:1,4.
        diagram: String,
    },
    /// Enumerate roofs up to a total rank.
    Roofs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
        /// Keep only roofs with fibers P^(r-1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        fiber: Option<u32>,
    },
    /// Compare the family closed forms with computed invariants.
    VerifyTable {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        r_max: u32,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Candidate types of a simple K-equivalent map.
    Classify {
        #[arg(long)]
        dim_x: Option<u64>,
        /// Codimension r of the blown-up centres.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        codim: Option<u32>,
        /// dim Y - dim M.
        #[arg(long)]
        fiber_gap: Option<u64>,
        #[arg(long)]
        symplectic: bool,
    },
    /// Chow ring of a projectivised bundle.
    #[command(subcommand)]
    Chow(ChowCommand),
}

#[derive(Debug, Args)]
struct BundleArgs {
    /// P<n> or Q<n>.
    #[arg(long)]
    base: String,
    /// Chern classes c_1,...,c_r; the rank is their count.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    cherns: Vec<i64>,
    /// Read c_k in generator units of A^k(base) instead of as multiples of H^k.
    #[arg(long)]
    generator_units: bool,
}

impl BundleArgs {
    fn ring(&self) -> Result<BundleChowRing, Error> {
        let base = CyclicBase::parse(&self.base)?;
        let cherns = if self.generator_units {
            base.generators_to_h(&self.cherns)?
        } else {
            self.cherns.iter().map(|&c| num_rational(c)).collect()
        };
        BundleChowRing::new(base, self.cherns.len() as u32, cherns)
    }
}

fn num_rational(c: i64) -> roofscope::chow::Rational {
    roofscope::chow::Rational::from_integer(c.into())
}

#[derive(Debug, Subcommand)]
enum ChowCommand {
    /// Normal form of an expression in H and xi.
    Reduce {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        expr: String,
    },
    /// Degree of a top-codimension class.
    Degree {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        expr: String,
    },
    /// Anticanonical class of P(E).
    Canonical {
        #[command(flatten)]
        bundle: BundleArgs,
        /// k with -K_base = kH; defaults to the index of P^n or Q^n.
        #[arg(long)]
        base_index: Option<i64>,
    },
    /// Whether c_1(V) = c_1(E).
    MukaiCheck {
        #[arg(long)]
        index: i64,
        #[arg(long)]
        c1: i64,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        dim: u32,
    },
    /// Discrepancy of a smooth blow-up, and the equal-codimension test.
    Discrepancy {
        #[arg(long, allow_negative_numbers = true)]
        r1: i64,
        #[arg(long, allow_negative_numbers = true)]
        r2: Option<i64>,
    },
}

/// Output of one command before rendering.
enum Outcome {
    Done(String),
    Failed(String),
    NoResult(String),
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` / `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(format!("cannot start {n} worker threads: {e}")),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok(Outcome::Done(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::Failed(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_VERIFY
        }
        Ok(Outcome::NoResult(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_NO_RESULT
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let f = cli.format;
    match &cli.command {
        Command::Gp { diagram } => cmd_gp(diagram, f),
        Command::Roofs { max_rank, fiber } => Ok(cmd_roofs(*max_rank, *fiber, f)),
        Command::VerifyTable {
            r_max,
            inject_fault,
        } => Ok(cmd_verify_table(*r_max, inject_fault.as_deref(), f)),
        Command::Classify {
            dim_x,
            codim,
            fiber_gap,
            symplectic,
        } => {
            let q = ClassificationQuery {
                dim_x: *dim_x,
                r: *codim,
                fiber_gap: *fiber_gap,
                symplectic: *symplectic,
            };
            if q == ClassificationQuery::default() {
                return Err(
                    "classify needs at least one of --dim-x, --codim, --fiber-gap, --symplectic"
                        .into(),
                );
            }
            Ok(cmd_classify(&q, f))
        }
        Command::Chow(c) => cmd_chow(c, f).map_err(|e| e.to_string()),
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
fn plain_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  ", w = w));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn key_values(pairs: &[(&str, String)], f: OutputFormat) -> String {
    match f {
        OutputFormat::Table => {
            let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            pairs
                .iter()
                .map(|(k, v)| format!("{k:<w$}  {v}\n"))
                .collect()
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = pairs.iter().map(|(_, v)| vec![v.clone()]).collect();
            let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
            let values: Vec<String> = rows.into_iter().flatten().collect();
            csv_text(&header, &[values])
        }
        OutputFormat::Latex => {
            let mut s = String::from("\\begin{tabular}{ll}\n");
            for (k, v) in pairs {
                s += &format!(
                    "{} & {} \\\\\n",
                    k.replace('_', "\\_"),
                    v.replace('_', "\\_")
                );
            }
            s + "\\end{tabular}\n"
        }
        OutputFormat::Json => unreachable!("json is rendered from values"),
    }
}

fn cmd_gp(text: &str, f: OutputFormat) -> Result<Outcome, String> {
    let md = MarkedDiagram::parse(text).map_err(|e| format!("{text}: {e}"))?;
    let inv = gp_invariants(&md);
    let index: Vec<String> = inv.index_entries().iter().map(|c| c.to_string()).collect();
    let index = format!("({})", index.join(","));
    if f == OutputFormat::Json {
        return Ok(Outcome::Done(json_text(&json!({
            "diagram": md.to_string(),
            "dim": inv.dim,
            "picard": inv.picard,
            "index_vector": inv.index_vector,
        }))));
    }
    Ok(Outcome::Done(key_values(
        &[
            ("diagram", md.to_string()),
            ("dim", inv.dim.to_string()),
            ("picard", inv.picard.to_string()),
            ("index", index),
        ],
        f,
    )))
}

fn render_records(records: &[RoofRecord], f: OutputFormat) -> String {
    match f {
        OutputFormat::Json => json_text(&records),
        OutputFormat::Csv => csv_text(&CSV_COLUMNS, &records_csv_rows(records)),
        OutputFormat::Latex => records_latex(records),
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.label(),
                        r.r.to_string(),
                        r.diagram_text(),
                        r.dim_w.to_string(),
                        format!("({},{},{})", r.dim_v1, r.index_v1, r.index_v2),
                    ]
                })
                .collect();
            plain_table(
                &["type", "r", "diagram", "dim_W", "(dim_V, r_V1, r_V2)"],
                &rows,
            )
        }
    }
}

fn cmd_roofs(max_rank: u32, fiber: Option<u32>, f: OutputFormat) -> Outcome {
    Outcome::Done(render_records(
        &enumerate_roofs(max_rank as usize, fiber),
        f,
    ))
}

fn render_report(report: &TableReport, f: OutputFormat) -> String {
    match f {
        OutputFormat::Json => json_text(&json!({
            "r_max": report.r_max,
            "all_pass": report.all_pass(),
            "rows": report.rows,
        })),
        OutputFormat::Csv => csv_text(&TABLE_CSV_COLUMNS, &table_csv_rows(report)),
        OutputFormat::Latex => table_latex(report),
        OutputFormat::Table => {
            let rows = table_csv_rows(report);
            let mut s = plain_table(&TABLE_CSV_COLUMNS, &rows);
            let failed: Vec<String> = report
                .failures()
                .map(|r| match &r.detail {
                    Some(d) => format!("{} ({d})", r.label),
                    None => r.label.clone(),
                })
                .collect();
            if failed.is_empty() {
                s += &format!("{} rows pass\n", report.rows.len());
            } else {
                s += &format!(
                    "{} of {} rows FAIL: {}\n",
                    failed.len(),
                    report.rows.len(),
                    failed.join(", ")
                );
            }
            s
        }
    }
}

fn cmd_verify_table(r_max: u32, fault: Option<&str>, f: OutputFormat) -> Outcome {
    let fault = fault.map(|label| TableFault {
        label: label.to_string(),
    });
    let report = verify_table_with_fault(r_max, fault.as_ref());
    let text = render_report(&report, f);
    if report.all_pass() {
        Outcome::Done(text)
    } else {
        Outcome::Failed(text)
    }
}

fn constraint_text(c: RConstraint) -> String {
    match c {
        RConstraint::Any => "any".into(),
        RConstraint::Exactly(r) => format!("={r}"),
        RConstraint::AtMost(m) => format!("<={m}"),
    }
}

fn cmd_classify(q: &ClassificationQuery, f: OutputFormat) -> Outcome {
    let families = match classify_simple_kequiv(q) {
        Classification::NoClassification => {
            return Outcome::NoResult("no classification available".into())
        }
        Classification::Families(fs) => fs,
    };
    let rules = |fc: &FamilyClass| -> Vec<String> {
        fc.rules.iter().map(|r| r.describe().to_string()).collect()
    };
    let text = match f {
        OutputFormat::Json => {
            let items: Vec<Value> = families
                .iter()
                .map(|fc| {
                    json!({
                        "label": fc.label(),
                        "family": fc.family,
                        "r": constraint_text(fc.r),
                        "rules": rules(fc),
                    })
                })
                .collect();
            json_text(&items)
        }
        _ => {
            let rows: Vec<Vec<String>> = families
                .iter()
                .map(|fc| {
                    vec![
                        fc.label(),
                        fc.family.to_string(),
                        constraint_text(fc.r),
                        rules(fc).join("; "),
                    ]
                })
                .collect();
            let header = ["label", "family", "r", "rules"];
            match f {
                OutputFormat::Csv => csv_text(&header, &rows),
                OutputFormat::Latex => {
                    let mut s =
                        String::from("\\begin{tabular}{ll}\n\\hline\nType & Rules \\\\\n\\hline\n");
                    for fc in &families {
                        s += &format!(
                            "\\texttt{{{}}} & {} \\\\\n",
                            fc.label().replace('_', "\\_").replace('^', "\\^{}"),
                            rules(fc).join("; ")
                        );
                    }
                    s + "\\hline\n\\end{tabular}\n"
                }
                _ => plain_table(&header, &rows),
            }
        }
    };
    Outcome::Done(text)
}

fn poly_latex(p: &Poly) -> String {
    format!(
        "${}$\n",
        p.to_string().replace("xi", "\\xi").replace('*', " ")
    )
}

fn render_poly(name: &str, p: &Poly, f: OutputFormat) -> String {
    match f {
        OutputFormat::Json => json_text(&json!({ name: p.to_string() })),
        OutputFormat::Latex => poly_latex(p),
        _ => key_values(&[(name, p.to_string())], f),
    }
}

fn cmd_chow(c: &ChowCommand, f: OutputFormat) -> Result<Outcome, Error> {
    Ok(match c {
        ChowCommand::Reduce { bundle, expr } => {
            let ring = bundle.ring()?;
            let p = Poly::parse(expr)?;
            Outcome::Done(render_poly("normal_form", &ring.reduce(&p), f))
        }
        ChowCommand::Degree { bundle, expr } => {
            let ring = bundle.ring()?;
            let d = ring.degree(&Poly::parse(expr)?)?;
            Outcome::Done(match f {
                OutputFormat::Json => json_text(&json!({ "degree": d.to_string() })),
                _ => key_values(&[("degree", d.to_string())], f),
            })
        }
        ChowCommand::Canonical { bundle, base_index } => {
            let ring = bundle.ring()?;
            let k = base_index
                .or(ring.base().anticanonical_index())
                .ok_or_else(|| Error::InvalidBundle("--base-index is required".into()))?;
            Outcome::Done(render_poly(
                "anticanonical",
                &canonical_class_pe(&ring, k),
                f,
            ))
        }
        ChowCommand::MukaiCheck {
            index,
            c1,
            rank,
            dim,
        } => {
            let v = mukai_pair_check(*index, *c1, *rank, *dim)?;
            let text = match f {
                OutputFormat::Json => json_text(&json!({
                    "pass": v.pass,
                    "normalizing_twist": v.normalizing_twist,
                    "message": v.message,
                })),
                _ => key_values(
                    &[
                        ("pass", v.pass.to_string()),
                        (
                            "normalizing_twist",
                            v.normalizing_twist
                                .map(|t| t.to_string())
                                .unwrap_or_default(),
                        ),
                        ("message", v.message.clone()),
                    ],
                    f,
                ),
            };
            if v.pass {
                Outcome::Done(text)
            } else {
                Outcome::Failed(text)
            }
        }
        ChowCommand::Discrepancy { r1, r2 } => {
            let a1 = blowup_discrepancy(*r1)?;
            let mut pairs = vec![("r1", r1.to_string()), ("discrepancy_1", a1.to_string())];
            if let Some(r2) = r2 {
                let report = kequiv_forces_equal_codim(*r1, *r2)?;
                pairs.push(("r2", r2.to_string()));
                pairs.push(("discrepancy_2", blowup_discrepancy(*r2)?.to_string()));
                pairs.push(("consistent", report.consistent.to_string()));
                pairs.push(("message", report.message));
            }
            Outcome::Done(match f {
                OutputFormat::Json => {
                    let map: serde_json::Map<String, Value> = pairs
                        .into_iter()
                        .map(|(k, v)| {
                            let val = v
                                .parse::<i64>()
                                .map(Value::from)
                                .or_else(|_| v.parse::<bool>().map(Value::from))
                                .unwrap_or(Value::String(v));
                            (k.to_string(), val)
                        })
                        .collect();
                    json_text(&map)
                }
                _ => key_values(&pairs, f),
            })
        }
    })
}
