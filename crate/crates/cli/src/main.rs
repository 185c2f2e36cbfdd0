//! `stl` — exact Stirling / tanh / Lah triangle calculus on the command line.
//!
//! Subcommands mirror the library layers: `table` dumps a triangle,
//! `convert` evaluates one of the eight conversion rules against its target,
//! `poly` prints a polynomial family member, `series` prints EGF
//! coefficients, `cumulants` matches a negative binomial with a shifted
//! gamma, and `verify` runs the exact identity suites.
//!
//! Exit codes: 0 all good, 1 an identity mismatch was found (the report is
//! still printed), 2 usage error.

mod output;

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stl_core::conversions::{convert_entry, ConversionRule};
use stl_core::cumulants::{match_nb_to_sg, nb_cumulants, reciprocity_check, sg_cumulants, NegBinParams};
use stl_core::polynomials::{lah_poly, stirling_poly, tanh_poly, Polynomial};
use stl_core::rational::{Int, Rational};
use stl_core::report::IdentityReport;
use stl_core::series::family_egf;
use stl_core::suites::Suite;
use stl_core::triangles::TriangleSet;
use stl_core::FamilyId;

#[derive(Parser)]
#[command(
    name = "stl",
    version,
    about = "Exact scaled Stirling, tanh and Lah number triangles and their inversion calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFamily {
    /// Scaled Stirling polynomials sigma_k
    Sigma,
    /// Tanh polynomials delta_k
    Delta,
    /// Lah polynomials lambda_k
    Lambda,
}

#[derive(Subcommand)]
enum Command {
    /// Print triangle rows 0..n (exact integers)
    Table(TableArgs),
    /// Evaluate a conversion rule and compare it with the target triangle
    Convert(ConvertArgs),
    /// Print a polynomial family member: coefficients, degree, leading coefficient
    Poly(PolyArgs),
    /// Print the exact coefficients of a column EGF
    Series(SeriesArgs),
    /// Match a negative binomial to a shifted gamma and print exact cumulants
    Cumulants(CumulantArgs),
    /// Run exact verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Triangle family: s1 | s2 | arctanh | tanh | lah | lah-upper
    #[arg(long)]
    family: String,
    /// Largest row index
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct ConvertArgs {
    /// Rule id, e.g. tanh-from-s2 (see --help for the full list):
    /// tanh-from-s2, s2-from-tanh, arctanh-from-s1, s1-from-arctanh,
    /// lah-upper-from-tanh, tanh-from-lah-upper, lah-lower-from-arctanh,
    /// arctanh-from-lah-lower
    #[arg(long)]
    rule: String,
    /// Largest row index to evaluate
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: PolyFamily,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Series family: s1 | s2 | arctanh | tanh | lah | lah-upper
    #[arg(long)]
    family: String,
    /// Column index m of the EGF (1/m!) f(u)^m
    #[arg(long)]
    m: u32,
    /// Truncation order
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct CumulantArgs {
    /// Negative binomial r (exact rational, e.g. 1 or 16/15)
    #[arg(long)]
    r: String,
    /// Negative binomial lambda (exact rational, > 0 for matching)
    #[arg(long)]
    lambda: String,
    /// Number of cumulants to print
    #[arg(long, default_value = "3")]
    n: usize,
    /// Additionally verify the reciprocal linear relations up to n
    #[arg(long)]
    check_reciprocity: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    /// orthogonality | egf | table2 | corollary | m1 | polynomials | gf |
    /// cumulants | poisson | all
    #[arg(long)]
    suite: String,
    /// Override the suite's primary range (defaults to the acceptance range)
    #[arg(long)]
    n_max: Option<usize>,
}

fn parse_family(name: &str) -> Result<FamilyId, String> {
    FamilyId::ALL
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| {
            format!(
                "unknown family '{name}' (expected one of: {})",
                FamilyId::ALL.map(|f| f.name()).join(", ")
            )
        })
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    text.parse::<Rational>()
        .map_err(|e| format!("'{text}' is not an exact rational (p or p/q): {e}"))
}

/// Colored PASS/FAIL marker; plain text when NO_COLOR is set or stdout is
/// not a terminal.
fn verdict(passed: bool) -> String {
    let word = if passed { "PASS" } else { "FAIL" };
    let want_color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    if want_color {
        let code = if passed { "32" } else { "31" };
        format!("\x1b[{code}m{word}\x1b[0m")
    } else {
        word.to_string()
    }
}

fn print_report(report: &IdentityReport) {
    println!("{} {}: {} checks", verdict(report.passed()), report.id, report.checks);
    for m in &report.mismatches {
        println!("  mismatch at {}: lhs = {}, rhs = {}", m.at, m.lhs, m.rhs);
    }
}

fn cmd_table(tri: &TriangleSet, args: &TableArgs) -> Result<u8, String> {
    let family = parse_family(&args.family)?;
    let rows: Vec<Vec<Int>> = (0..=args.n).map(|n| tri.row(family, n)).collect();
    match args.format {
        Format::Csv => print!("{}", output::render_table_csv(family, &rows)),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&output::table_json(family, &rows)).expect("valid json")
        ),
    }
    Ok(0)
}

fn cmd_convert(tri: &TriangleSet, args: &ConvertArgs) -> Result<u8, String> {
    let rule = ConversionRule::from_id(&args.rule).ok_or_else(|| {
        format!(
            "unknown rule '{}' (expected one of: {})",
            args.rule,
            ConversionRule::ALL.map(|r| r.id()).join(", ")
        )
    })?;
    let mut report = IdentityReport::new(format!("convert/{rule}"));
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(args.n + 1);
    for n in 0..=args.n {
        let mut row = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let computed = convert_entry(tri, rule, n, m).expect("m <= n");
            report.check(
                format!("n={n},m={m}"),
                computed.clone(),
                tri.entry(rule.target(), n, m),
            );
            row.push(computed);
        }
        rows.push(row);
    }
    match args.format {
        Format::Csv => {
            print!("{}", output::render_table_csv(rule.target(), &rows));
            print_report(&report);
        }
        Format::Json => {
            let mut value = output::table_json(rule.target(), &rows);
            value["rule"] = json!(rule.id());
            value["matches_target"] = json!(report.passed());
            println!("{}", serde_json::to_string(&value).expect("valid json"));
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn poly_for(tri: &TriangleSet, family: PolyFamily, k: usize) -> Result<Polynomial, String> {
    let built = match family {
        PolyFamily::Sigma => stirling_poly(tri, k),
        PolyFamily::Delta => tanh_poly(tri, k),
        PolyFamily::Lambda => lah_poly(k),
    };
    built.map_err(|e| e.to_string())
}

fn cmd_poly(tri: &TriangleSet, args: &PolyArgs) -> Result<u8, String> {
    let name = match args.family {
        PolyFamily::Sigma => "sigma",
        PolyFamily::Delta => "delta",
        PolyFamily::Lambda => "lambda",
    };
    let p = poly_for(tri, args.family, args.k)?;
    let coeffs: Vec<String> = p.coeffs().iter().map(Rational::to_string).collect();
    match args.format {
        Some(Format::Json) => {
            let value = json!({
                "family": name,
                "k": args.k,
                "coeffs": coeffs,
                "degree": p.degree(),
                "leading": p.leading().map(Rational::to_string),
            });
            println!("{}", serde_json::to_string(&value).expect("valid json"));
        }
        _ => {
            let degree = p
                .degree()
                .map_or("-inf".to_string(), |d| d.to_string());
            let leading = p.leading().map_or("-".to_string(), Rational::to_string);
            println!("{name}_{k}(x) = {p}", k = args.k);
            println!("coeffs: {}", coeffs.join(","));
            println!("degree: {degree}");
            println!("leading: {leading}");
        }
    }
    Ok(0)
}

fn cmd_series(args: &SeriesArgs) -> Result<u8, String> {
    let family = parse_family(&args.family)?;
    let s = family_egf(family, args.m, args.order);
    let coeffs: Vec<String> = s.coeffs().iter().map(Rational::to_string).collect();
    match args.format {
        Format::Csv => {
            println!(
                "# family={} m={} order={} coefficients of u^0..u^{}",
                family.name(),
                args.m,
                args.order,
                args.order
            );
            println!("{}", coeffs.join(","));
        }
        Format::Json => {
            let value = json!({
                "family": family.name(),
                "m": args.m,
                "order": args.order,
                "coeffs": coeffs,
            });
            println!("{}", serde_json::to_string(&value).expect("valid json"));
        }
    }
    Ok(0)
}

fn cmd_cumulants(tri: &TriangleSet, args: &CumulantArgs) -> Result<u8, String> {
    let r = parse_rational(&args.r)?;
    let lambda = parse_rational(&args.lambda)?;
    let nb = NegBinParams::new(r, lambda).map_err(|e| e.to_string())?;
    let n = args.n.max(1);
    let sg = match_nb_to_sg(&nb).map_err(|e| e.to_string())?;
    let nb_cums = nb_cumulants(tri, &nb, n);
    let sg_cums = sg_cumulants(&sg, n);
    let reciprocity = if args.check_reciprocity {
        Some(reciprocity_check(tri, &nb, n).map_err(|e| e.to_string())?)
    } else {
        None
    };

    let strings = |v: &[Rational]| v.iter().map(Rational::to_string).collect::<Vec<_>>();
    match args.format {
        Some(Format::Json) => {
            let mut value = json!({
                "r": nb.r.to_string(),
                "lambda": nb.lambda.to_string(),
                "matched": {
                    "a": sg.a.to_string(),
                    "b": sg.b.to_string(),
                    "c": sg.c.to_string(),
                },
                "nb_cumulants": strings(nb_cums.values()),
                "sg_cumulants": strings(sg_cums.values()),
            });
            if let Some(rep) = &reciprocity {
                value["reciprocity"] = json!({
                    "checks": rep.checks,
                    "passed": rep.passed(),
                });
            }
            println!("{}", serde_json::to_string(&value).expect("valid json"));
        }
        _ => {
            println!("matched shifted-gamma: a={} b={} c={}", sg.a, sg.b, sg.c);
            println!("nb cumulants: {}", strings(nb_cums.values()).join(", "));
            println!("sg cumulants: {}", strings(sg_cums.values()).join(", "));
            if let Some(rep) = &reciprocity {
                print_report(rep);
            }
        }
    }
    Ok(match &reciprocity {
        Some(rep) if !rep.passed() => 1,
        _ => 0,
    })
}

fn cmd_verify(tri: &TriangleSet, args: &VerifyArgs) -> Result<u8, String> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(&args.suite).ok_or_else(|| {
            format!(
                "unknown suite '{}' (expected one of: {}, all)",
                args.suite,
                Suite::ALL.map(|s| s.name()).join(", ")
            )
        })?]
    };
    let mut all_passed = true;
    let mut total = 0usize;
    for suite in suites {
        let report = suite.run(tri, args.n_max);
        print_report(&report);
        total += report.checks;
        all_passed &= report.passed();
    }
    println!(
        "{} verify: {} checks total",
        verdict(all_passed),
        total
    );
    Ok(if all_passed { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tri = TriangleSet::new();
    let outcome = match &cli.command {
        Command::Table(args) => cmd_table(&tri, args),
        Command::Convert(args) => cmd_convert(&tri, args),
        Command::Poly(args) => cmd_poly(&tri, args),
        Command::Series(args) => cmd_series(args),
        Command::Cumulants(args) => cmd_cumulants(&tri, args),
        Command::Verify(args) => cmd_verify(&tri, args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
