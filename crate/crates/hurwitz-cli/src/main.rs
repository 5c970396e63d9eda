//! `hurwitz` — command-line front end for the exact Hurwitz-space toolkit.
//!
//! Every report is deterministic for a fixed invocation: JSON mode emits a
//! versioned object with stable key order and no timestamps; markdown mode
//! emits the same content for human readers, with a version footer.
//!
//! Exit codes: 0 success/verified, 1 verification failed, 2 invalid input
//! or out-of-domain parameters, 3 resource guard exceeded.

use std::io::Read;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use hurwitz_core::curves::{
    curve_a, curve_b, curve_f, curve_g12, curve_g3, pushforward_to_base, BaseDivisor,
    BoundaryDivisor, DivisorVector,
};
use hurwitz_core::exact::{BigInt, BigRational, Partition};
use hurwitz_core::formulas::{
    adjunction_genus_quadric, branch_count, de_jonquieres_closed, de_jonquieres_expand,
    fibre_dimension, forgetful_multiplier, plucker, ram_order, riemann_hurwitz_genus,
};
use hurwitz_core::matrix::{build_m, scan_independence, verify_m, ROW_LABELS};
use hurwitz_core::monodromy::{
    enumerate_classes, EnumerationOptions, MonodromyProblem, DEFAULT_NODE_GUARD,
};
use hurwitz_core::poly::{parse_expr_with_guard, DEFAULT_TERM_GUARD};
use hurwitz_core::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact monodromy enumeration, enumerative formulas, test-curve \
             intersection vectors, and boundary-matrix verification"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Worker threads for enumerations and scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Node budget for the monodromy search (overrides HURWITZ_GUARD_NODES).
    #[arg(long, global = true)]
    guard_nodes: Option<u64>,

    /// Term budget for polynomial expansion.
    #[arg(long, global = true)]
    guard_terms: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate monodromy tuples up to simultaneous conjugation.
    Monodromy(MonodromyArgs),
    /// Evaluate an enumerative formula exactly.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Build, verify, or scan the 10×10 boundary matrix M(g, d).
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Intersection vector and pushforward of a test curve.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Expand a polynomial expression and query coefficients.
    Poly(PolyArgs),
}

#[derive(Args)]
struct MonodromyArgs {
    /// Sheet count d of the cover.
    #[arg(long, required_unless_present = "json", conflicts_with = "json")]
    degree: Option<usize>,

    /// Ramification profiles: semicolon-separated partitions with an
    /// optional xN repeat, e.g. "2,1;2,1;2,1;2,1" or "2,1x4".
    #[arg(long, required_unless_present = "json", conflicts_with = "json")]
    profiles: Option<String>,

    /// Read the problem from a JSON file instead ("-" for stdin):
    /// {"degree": 3, "profiles": [[2,1],[2,1],[2,1],[2,1]]}.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Ramification-point count (r+1)d + (r+1)r(g−1) of a general series.
    Plucker {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Secant-divisor count, closed form against coefficient extraction.
    Dejonquieres {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        /// Series dimension in the generating-function route.
        #[arg(long, default_value_t = 2)]
        r: i64,
    },
    /// Source genus from degree and ramification profiles, or "impossible".
    Rh {
        #[arg(long)]
        degree: u64,
        /// Same syntax as `monodromy --profiles`.
        #[arg(long)]
        profiles: String,
    },
    /// Genus (a−1)(b−1) of a smooth curve of bidegree (a, b) on a quadric.
    Adjunction {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Branches ∏mᵢ / lcm(m̲) and ramification order lcm(m̲) of a profile.
    Branchcount {
        /// One partition, e.g. "2,2,1,1".
        #[arg(long)]
        profile: String,
    },
    /// Fibre dimension d − g − 1 + h⁰ of the branch-data map.
    Fibredim {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        /// h⁰ correction term of the twist.
        #[arg(long, default_value_t = 0)]
        h0_twist: u64,
    },
    /// Degree 2g + 2d − 2 of the branch-point-forgetting map.
    Multiplier {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
    },
}

#[derive(Subcommand)]
enum MatrixCmd {
    /// Print M(g, d) with row labels.
    Show {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
    },
    /// Exact determinant, nonsingularity, and row cross-checks.
    Verify {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
    },
    /// Determinants over a grid: g in an inclusive range, d = g + offset.
    Scan {
        /// Genus range, e.g. "3..25" (inclusive) or a single value.
        #[arg(long)]
        g: String,
        /// Offset range for d − g, e.g. "1..10" (inclusive).
        #[arg(long)]
        d_offset: String,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Plücker/de Jonquières curve in a fixed fibre of the fibre map.
    #[command(name = "F")]
    F {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
    },
    /// Degree-3 admissible-cover pencil with a [3]-marked point.
    #[command(name = "G3")]
    G3 {
        #[arg(long, default_value_t = 3)]
        g: i64,
        #[arg(long, default_value_t = 4)]
        d: i64,
    },
    /// Same pencil with the 1+[2] marking.
    #[command(name = "G12")]
    G12 {
        #[arg(long, default_value_t = 3)]
        g: i64,
        #[arg(long, default_value_t = 4)]
        d: i64,
    },
    /// Pencil of genus-h plus genus-(g−h) curves glued along a moving point.
    #[command(name = "A")]
    A {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        h: i64,
    },
    /// Variant pencil with the distinguished point on the moving component.
    #[command(name = "B")]
    B {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        h: i64,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Expression over single-letter variables, e.g. "(1+4x+y)^3".
    #[arg(long)]
    expr: String,

    /// Optional coefficient query, e.g. "x=2,y=1" (unlisted variables
    /// default to exponent 0).
    #[arg(long)]
    coeff: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(match error {
                Error::InvalidInput(_) | Error::Domain(_) => 2u8,
                Error::ResourceGuard(_) => 3u8,
            })
        }
    }
}

/// Runs the selected command and prints its report; `Ok` carries the exit
/// code distinguishing verified (0) from verification-failed (1).
fn run(cli: &Cli) -> Result<u8, Error> {
    let (name, body, md_lines, code) = match &cli.command {
        Command::Monodromy(args) => cmd_monodromy(cli, args)?,
        Command::Formula(args) => cmd_formula(args)?,
        Command::Matrix(args) => cmd_matrix(cli, args)?,
        Command::Curve(args) => cmd_curve(args)?,
        Command::Poly(args) => cmd_poly(cli, args)?,
    };
    let rendered = match cli.format {
        Format::Json => {
            let mut report = serde_json::Map::new();
            report.insert("schema".into(), serde_json::json!(1));
            report.insert("command".into(), serde_json::json!(name));
            if let serde_json::Value::Object(fields) = body {
                report.extend(fields);
            }
            let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(report))
                .expect("reports serialize");
            text.push('\n');
            text
        }
        Format::Md => {
            let mut text = md_lines.join("\n");
            text.push_str(&format!("\n\n---\nhurwitz v{VERSION}\n"));
            text
        }
    };
    write_stdout(&rendered)?;
    Ok(code)
}

/// Writes the report, treating a closed pipe (e.g. `| head`) as a normal
/// end of output rather than an error.
fn write_stdout(text: &str) -> Result<(), Error> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Ok(()) => Ok(()),
        Err(error) if error.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(error) => Err(Error::invalid(format!("writing report: {error}"))),
    }
}

type Report = (&'static str, serde_json::Value, Vec<String>, u8);

/// Node budget: flag, then HURWITZ_GUARD_NODES, then the library default.
fn resolve_node_guard(flag: Option<u64>) -> Result<u64, Error> {
    let guard = match flag {
        Some(value) => value,
        None => match std::env::var("HURWITZ_GUARD_NODES") {
            Ok(text) => text.trim().parse::<u64>().map_err(|_| {
                Error::invalid(format!(
                    "HURWITZ_GUARD_NODES must be a positive integer, got {text:?}"
                ))
            })?,
            Err(_) => DEFAULT_NODE_GUARD,
        },
    };
    if guard == 0 {
        return Err(Error::invalid("node guard must be positive"));
    }
    Ok(guard)
}

fn resolve_term_guard(flag: Option<usize>) -> Result<usize, Error> {
    let guard = flag.unwrap_or(DEFAULT_TERM_GUARD);
    if guard == 0 {
        return Err(Error::invalid("term guard must be positive"));
    }
    Ok(guard)
}

/// Parses "2,1;2,1" style profile lists with the xN repeat shorthand
/// ("2,1x4" = four copies of the partition 2,1).
fn parse_profiles(text: &str) -> Result<Vec<Partition>, Error> {
    let mut profiles = Vec::new();
    for segment in text.split(';') {
        let segment = segment.trim();
        let (partition_text, repeats) = match segment.rsplit_once('x') {
            Some((left, right))
                if !right.is_empty() && right.chars().all(|c| c.is_ascii_digit()) =>
            {
                let repeats: usize = right.parse().map_err(|_| {
                    Error::invalid(format!("repeat count {right:?} is out of range"))
                })?;
                (left.trim(), repeats)
            }
            _ => (segment, 1),
        };
        if repeats == 0 {
            return Err(Error::invalid(format!(
                "repeat count must be positive in {segment:?}"
            )));
        }
        let partition: Partition = partition_text.parse()?;
        profiles.extend(std::iter::repeat_n(partition, repeats));
    }
    Ok(profiles)
}

/// Parses "3..25" (inclusive) or a single "3".
fn parse_range(text: &str, what: &str) -> Result<RangeInclusive<i64>, Error> {
    let parse_end = |part: &str| -> Result<i64, Error> {
        part.trim().parse::<i64>().map_err(|_| {
            Error::invalid(format!("{what} range endpoint {part:?} is not an integer"))
        })
    };
    match text.split_once("..") {
        Some((low, high)) => Ok(parse_end(low)?..=parse_end(high)?),
        None => {
            let value = parse_end(text)?;
            Ok(value..=value)
        }
    }
}

fn big_json(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        n.to_string()
            .parse()
            .expect("an integer literal is a valid JSON number"),
    )
}

/// Renders an exact rational for humans: plain integer when integral.
fn show_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        value.to_string()
    }
}

fn profiles_display(profiles: &[Partition]) -> String {
    profiles
        .iter()
        .map(Partition::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

fn cmd_monodromy(cli: &Cli, args: &MonodromyArgs) -> Result<Report, Error> {
    let problem = match &args.json {
        Some(source) => {
            let text = if source == "-" {
                let mut buffer = String::new();
                std::io::stdin()
                    .read_to_string(&mut buffer)
                    .map_err(|e| Error::invalid(format!("reading stdin: {e}")))?;
                buffer
            } else {
                std::fs::read_to_string(source)
                    .map_err(|e| Error::invalid(format!("reading {source}: {e}")))?
            };
            MonodromyProblem::from_json(&text)?
        }
        None => {
            let degree = args.degree.expect("clap enforces degree without --json");
            let profiles =
                parse_profiles(args.profiles.as_deref().expect("clap enforces profiles"))?;
            MonodromyProblem::new(degree, profiles)?
        }
    };
    let options = EnumerationOptions {
        node_guard: resolve_node_guard(cli.guard_nodes)?,
        jobs: cli.jobs.max(1),
    };
    let enumeration = enumerate_classes(&problem, &options)?;

    let impossible = enumeration.expected_genus().is_none();
    let mut body = serde_json::Map::new();
    if let serde_json::Value::Object(fields) = enumeration.to_json() {
        body.extend(fields);
    }
    if impossible {
        body.insert(
            "note".into(),
            serde_json::json!("riemann-hurwitz impossible"),
        );
    }

    let mut md = vec![
        "# monodromy".to_string(),
        String::new(),
        format!("- degree: {}", problem.degree()),
        format!("- profiles: {}", profiles_display(problem.profiles())),
        format!(
            "- expected genus: {}",
            enumeration
                .expected_genus()
                .map_or_else(|| "impossible".to_string(), |g| g.to_string())
        ),
        format!("- classes: {}", enumeration.count()),
        format!("- raw transitive tuples: {}", enumeration.raw_tuple_count()),
        format!(
            "- weighted count: {}",
            show_rational(&enumeration.weighted_count())
        ),
    ];
    if impossible {
        md.push("- note: riemann-hurwitz impossible".to_string());
    }
    if !enumeration.classes().is_empty() {
        md.push(String::new());
        md.push("| class | representative | size | stabilizer |".to_string());
        md.push("|---|---|---|---|".to_string());
        for (index, class) in enumeration.classes().iter().enumerate() {
            let tuple = class
                .representative()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            md.push(format!(
                "| {} | {} | {} | {} |",
                index + 1,
                tuple,
                class.class_size(),
                class.stabilizer_order()
            ));
        }
    }
    Ok(("monodromy", serde_json::Value::Object(body), md, 0))
}

fn cmd_formula(args: &FormulaCmd) -> Result<Report, Error> {
    match args {
        FormulaCmd::Plucker { r, d, g } => {
            let value = plucker(*r, *d, *g);
            Ok((
                "formula.plucker",
                serde_json::json!({ "r": r, "d": d, "g": g, "value": big_json(&value) }),
                vec![
                    "# formula plucker".to_string(),
                    String::new(),
                    format!("plucker(r={r}, d={d}, g={g}) = {value}"),
                ],
                0,
            ))
        }
        FormulaCmd::Dejonquieres { g, d, r } => {
            let closed = de_jonquieres_closed(*g, *d);
            let expanded = de_jonquieres_expand(*g, *d, *r)?;
            let agree = closed == expanded;
            let code = u8::from(!agree);
            Ok((
                "formula.dejonquieres",
                serde_json::json!({
                    "g": g, "d": d, "r": r,
                    "closed": big_json(&closed),
                    "expanded": big_json(&expanded),
                    "agree": agree,
                }),
                vec![
                    "# formula dejonquieres".to_string(),
                    String::new(),
                    format!("- closed form: {closed}"),
                    format!("- coefficient extraction: {expanded}"),
                    format!("- {}", if agree { "agree" } else { "disagree" }),
                ],
                code,
            ))
        }
        FormulaCmd::Rh { degree, profiles } => {
            let profiles = parse_profiles(profiles)?;
            let genus = riemann_hurwitz_genus(*degree, &profiles);
            let rendered = genus.map_or_else(|| "impossible".to_string(), |g| g.to_string());
            Ok((
                "formula.rh",
                serde_json::json!({
                    "degree": degree,
                    "profiles": profiles.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "genus": genus
                        .map_or_else(|| serde_json::json!("impossible"), |g| serde_json::json!(g)),
                }),
                vec![
                    "# formula rh".to_string(),
                    String::new(),
                    format!("- degree: {degree}"),
                    format!("- profiles: {}", profiles_display(&profiles)),
                    format!("- genus: {rendered}"),
                ],
                0,
            ))
        }
        FormulaCmd::Adjunction { a, b } => {
            let genus = adjunction_genus_quadric(*a, *b);
            Ok((
                "formula.adjunction",
                serde_json::json!({ "a": a, "b": b, "genus": genus }),
                vec![
                    "# formula adjunction".to_string(),
                    String::new(),
                    format!("genus of a ({a}, {b}) curve on a quadric = {genus}"),
                ],
                0,
            ))
        }
        FormulaCmd::Branchcount { profile } => {
            let partition: Partition = profile.parse()?;
            let branches = branch_count(&partition)?;
            let order = ram_order(&partition)?;
            Ok((
                "formula.branchcount",
                serde_json::json!({
                    "profile": partition.parts().to_vec(),
                    "branches": big_json(branches.numer()),
                    "ram_order": big_json(&order),
                }),
                vec![
                    "# formula branchcount".to_string(),
                    String::new(),
                    format!("- profile: {partition}"),
                    format!("- branches: {}", show_rational(&branches)),
                    format!("- ramification order: {order}"),
                ],
                0,
            ))
        }
        FormulaCmd::Fibredim { g, d, h0_twist } => {
            let dimension = fibre_dimension(*g, *d, *h0_twist);
            Ok((
                "formula.fibredim",
                serde_json::json!({ "g": g, "d": d, "h0_twist": h0_twist, "dimension": dimension }),
                vec![
                    "# formula fibredim".to_string(),
                    String::new(),
                    format!("fibre dimension at (g={g}, d={d}, h0_twist={h0_twist}) = {dimension}"),
                ],
                0,
            ))
        }
        FormulaCmd::Multiplier { g, d } => {
            let value = forgetful_multiplier(*g, *d);
            Ok((
                "formula.multiplier",
                serde_json::json!({ "g": g, "d": d, "value": value }),
                vec![
                    "# formula multiplier".to_string(),
                    String::new(),
                    format!("forgetful pushforward–pullback multiplier = {value}"),
                ],
                0,
            ))
        }
    }
}

fn cmd_matrix(cli: &Cli, args: &MatrixCmd) -> Result<Report, Error> {
    match args {
        MatrixCmd::Show { g, d } => {
            let matrix = build_m(*g, *d)?;
            let mut md = vec![
                format!("# matrix M(g={g}, d={d})"),
                String::new(),
                format!("- b = 2g + 2d − 2 = {}", matrix.b()),
                format!(
                    "- columns: {}",
                    BoundaryDivisor::ALL
                        .iter()
                        .map(|c| c.label())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                String::new(),
            ];
            for (label, row) in ROW_LABELS.iter().zip(0..10) {
                let entries = matrix
                    .entries()
                    .row(row)
                    .iter()
                    .map(show_rational)
                    .collect::<Vec<_>>()
                    .join(", ");
                md.push(format!("{label}: {entries}"));
            }
            Ok(("matrix.show", matrix.to_json(), md, 0))
        }
        MatrixCmd::Verify { g, d } => {
            let verdict = verify_m(*g, *d)?;
            let mut md = vec![
                format!("# matrix verify (g={g}, d={d})"),
                String::new(),
                format!("- b: {}", verdict.b),
                format!("- det: {}", show_rational(&verdict.det)),
                format!("- nonsingular: {}", verdict.nonsingular),
                String::new(),
                "| row | check |".to_string(),
                "|---|---|".to_string(),
            ];
            for check in &verdict.row_checks {
                md.push(format!(
                    "| {} | {} |",
                    check.label,
                    if check.pass { "pass" } else { "fail" }
                ));
            }
            md.push(String::new());
            md.push(format!(
                "verdict: {}",
                if verdict.pass { "pass" } else { "fail" }
            ));
            let code = u8::from(!verdict.pass);
            Ok(("matrix.verify", verdict.to_json(), md, code))
        }
        MatrixCmd::Scan { g, d_offset } => {
            let g_range = parse_range(g, "g")?;
            let offset_range = parse_range(d_offset, "d-offset")?;
            let report = scan_independence(g_range, offset_range, cli.jobs.max(1))?;
            let mut md = vec![
                format!("# matrix scan (g = {g}, d − g = {d_offset})"),
                String::new(),
                format!("- grid points: {}", report.rows.len()),
                format!("- all nonsingular: {}", report.all_nonsingular),
            ];
            if report.vacuous {
                md.push("- note: empty grid, vacuously true".to_string());
            }
            if !report.rows.is_empty() {
                md.push(String::new());
                md.push("| g | d | det M | nonsingular |".to_string());
                md.push("|---|---|---|---|".to_string());
                for row in &report.rows {
                    md.push(format!(
                        "| {} | {} | {} | {} |",
                        row.g,
                        row.d,
                        show_rational(&row.det),
                        row.nonsingular
                    ));
                }
            }
            let code = u8::from(!report.all_nonsingular);
            Ok(("matrix.scan", report.to_json(), md, code))
        }
    }
}

fn cmd_curve(args: &CurveCmd) -> Result<Report, Error> {
    let (name, vector): (&'static str, DivisorVector) = match args {
        CurveCmd::F { g, d } => ("curve.F", curve_f(*g, *d)?),
        CurveCmd::G3 { g, d } => ("curve.G3", curve_g3(*g, *d)?),
        CurveCmd::G12 { g, d } => ("curve.G12", curve_g12(*g, *d)?),
        CurveCmd::A { g, d, h } => ("curve.A", curve_a(*g, *d, *h)?),
        CurveCmd::B { g, d, h } => ("curve.B", curve_b(*g, *d, *h)?),
    };
    let pushforward = pushforward_to_base(&vector);

    let mut md = vec![
        format!("# curve {}", vector.curve()),
        String::new(),
        format!("- g: {}", vector.g()),
        format!("- d: {}", vector.d()),
    ];
    if let Some(h) = vector.h() {
        md.push(format!("- h: {h}"));
    }
    md.push(String::new());
    md.push("| divisor | intersection |".to_string());
    md.push("|---|---|".to_string());
    for divisor in BoundaryDivisor::ALL {
        md.push(format!(
            "| {} | {} |",
            divisor.label(),
            vector.entry(divisor)
        ));
    }
    md.push(String::new());
    md.push("pushforward to the base:".to_string());
    md.push(String::new());
    md.push("| divisor | intersection |".to_string());
    md.push("|---|---|".to_string());
    for divisor in BaseDivisor::ALL {
        md.push(format!(
            "| {} | {} |",
            divisor.label(),
            pushforward.entry(divisor)
        ));
    }

    Ok((
        name,
        serde_json::json!({
            "curve": vector.to_json(),
            "pushforward": pushforward.to_json(),
        }),
        md,
        0,
    ))
}

fn cmd_poly(cli: &Cli, args: &PolyArgs) -> Result<Report, Error> {
    let term_guard = resolve_term_guard(cli.guard_terms)?;
    let poly = parse_expr_with_guard(&args.expr, term_guard)?;

    let mut body = serde_json::Map::new();
    body.insert("expr".into(), serde_json::json!(args.expr));
    body.insert("vars".into(), serde_json::json!(poly.vars()));
    body.insert("terms".into(), serde_json::json!(poly.term_count()));
    body.insert("expanded".into(), serde_json::json!(poly.to_string()));

    let mut md = vec![
        "# poly".to_string(),
        String::new(),
        format!("- expression: {}", args.expr),
        format!("- variables: {}", poly.vars().join(", ")),
        format!("- terms: {}", poly.term_count()),
        format!("- expanded: {poly}"),
    ];

    if let Some(query) = &args.coeff {
        let exps = parse_coeff_query(query, poly.vars())?;
        let value = poly.coefficient(&exps);
        body.insert(
            "coefficient".into(),
            serde_json::json!({
                "exponents": exps,
                "value": big_json(&value),
            }),
        );
        let monomial = poly
            .vars()
            .iter()
            .zip(&exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, e)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("");
        let monomial = if monomial.is_empty() {
            "1".to_string()
        } else {
            monomial
        };
        md.push(format!("- coefficient of {monomial}: {value}"));
    }

    Ok(("poly", serde_json::Value::Object(body), md, 0))
}

/// Parses "x=2,y=1" into an exponent vector over the polynomial's
/// variables; variables not mentioned get exponent 0.
fn parse_coeff_query(query: &str, vars: &[String]) -> Result<Vec<u32>, Error> {
    let mut exps = vec![0u32; vars.len()];
    for assignment in query.split(',') {
        let assignment = assignment.trim();
        let (name, value) = assignment.split_once('=').ok_or_else(|| {
            Error::invalid(format!(
                "coefficient query {assignment:?} is not name=exponent"
            ))
        })?;
        let index = vars.iter().position(|v| v == name.trim()).ok_or_else(|| {
            Error::invalid(format!(
                "variable {:?} does not occur in the expression",
                name.trim()
            ))
        })?;
        exps[index] = value.trim().parse().map_err(|_| {
            Error::invalid(format!(
                "exponent {:?} is not a nonnegative integer",
                value.trim()
            ))
        })?;
    }
    Ok(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_shorthand_expands() {
        let profiles = parse_profiles("2,1x4").unwrap();
        assert_eq!(profiles.len(), 4);
        assert!(profiles.iter().all(|p| p.parts() == [2, 1]));

        let mixed = parse_profiles("2,1;3x2; 2,1 x2").unwrap();
        assert_eq!(
            mixed.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            vec![vec![2, 1], vec![3], vec![3], vec![2, 1], vec![2, 1]],
        );
    }

    #[test]
    fn profile_shorthand_rejects_nonsense() {
        assert!(parse_profiles("x4").is_err());
        assert!(parse_profiles("2,1x0").is_err());
        assert!(parse_profiles("").is_err());
        assert!(parse_profiles("2,1;;3").is_err());
    }

    #[test]
    fn ranges_parse_inclusively() {
        assert_eq!(parse_range("3..25", "g").unwrap(), 3..=25);
        assert_eq!(parse_range("4", "g").unwrap(), 4..=4);
        assert!(parse_range("3..", "g").is_err());
        assert!(parse_range("a..b", "g").is_err());
    }

    #[test]
    fn coeff_queries_fill_missing_variables() {
        let vars = vec!["x".to_string(), "y".to_string()];
        assert_eq!(parse_coeff_query("x=2,y=1", &vars).unwrap(), vec![2, 1]);
        assert_eq!(parse_coeff_query("y=3", &vars).unwrap(), vec![0, 3]);
        assert!(parse_coeff_query("z=1", &vars).is_err());
        assert!(parse_coeff_query("x2", &vars).is_err());
    }
}
