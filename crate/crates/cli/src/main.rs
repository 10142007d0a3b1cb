//! `resolvent`: command-line access to the resolvent pipelines and the
//! verification suite.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error (bad flags, malformed values, singular curve, point off the curve).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use resolvent_core::elliptic::divpoly::{torsion_field_poly, DivisionPolySequence, TorsionConvention};
use resolvent_core::elliptic::{adelmann_pipeline, holq8_pipeline, Curve, CurvePoint, EllipticError, HolQ8Options};
use resolvent_core::oracle::DEFAULT_PRECISION;
use resolvent_core::permgroup::{group_facts, SettingFacts, Which};
use resolvent_core::polyring::json::to_json;
use resolvent_core::polyring::rational::parse_rat;
use resolvent_core::polyring::{format_poly, parse_poly, BigRat, MultiPoly};
use resolvent_core::resolvent::report::{format_collected, ResolventReport, Status};
use resolvent_core::resolvent::warmup::resolvent_cubic;
use resolvent_core::suite::{self, SuiteReport};

#[derive(Parser, Debug)]
#[command(name = "resolvent", version, about = "Exact Galois resolvents with a numeric cross-check")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory holding the versioned golden files.
    #[arg(long, global = true, default_value = "./golden")]
    golden_dir: PathBuf,
    /// Working precision of the numeric oracle, in bits.
    #[arg(
        long,
        global = true,
        env = "RESOLVENT_PRECISION_BITS",
        default_value_t = DEFAULT_PRECISION,
        value_parser = parse_precision
    )]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resolvent cubic of x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
    ResolventCubic {
        /// `a3,a2,a1,a0`; numbers or polynomial expressions.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_coeffs)]
        coeffs: Coeffs,
    },
    /// The quartic resolvent of the 4-torsion sextic and its shifted form B(Y).
    Adelmann {
        #[arg(long, requires = "b", allow_hyphen_values = true, value_parser = parse_rational)]
        a: Option<BigRat>,
        #[arg(long, requires = "a", allow_hyphen_values = true, value_parser = parse_rational)]
        b: Option<BigRat>,
    },
    /// The three quartic resolvents h1, h2, h3 of the Hol(Q8) octic.
    Holq8 {
        #[arg(long, requires_all = ["b", "z", "w"], allow_hyphen_values = true, value_parser = parse_rational)]
        a: Option<BigRat>,
        #[arg(long, requires_all = ["a", "z", "w"], allow_hyphen_values = true, value_parser = parse_rational)]
        b: Option<BigRat>,
        #[arg(long, requires_all = ["a", "b", "w"], allow_hyphen_values = true, value_parser = parse_rational)]
        z: Option<BigRat>,
        #[arg(long, requires_all = ["a", "b", "z"], allow_hyphen_values = true, value_parser = parse_rational)]
        w: Option<BigRat>,
    },
    /// The division polynomial A_N.
    Divpoly {
        #[arg(long)]
        n: u32,
    },
    /// The 4-torsion field polynomial T4.
    T4 {
        #[arg(long, requires = "b", allow_hyphen_values = true, value_parser = parse_rational)]
        a: Option<BigRat>,
        #[arg(long, requires = "a", allow_hyphen_values = true, value_parser = parse_rational)]
        b: Option<BigRat>,
    },
    /// Orders, normality, quotient, stabilizer and transversal facts.
    GroupInfo {
        #[arg(long)]
        which: Which,
    },
    /// Golden-file comparisons and the numeric oracle at sample curves.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=64))]
        curves: u64,
    },
}

#[derive(Clone, Debug)]
struct Coeffs([MultiPoly; 4]);

fn parse_coeffs(s: &str) -> Result<Coeffs, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated coefficients, got {}", parts.len()));
    }
    let polys = parts
        .iter()
        .map(|p| parse_poly(p).map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coeffs(polys.try_into().expect("length checked")))
}

fn parse_rational(s: &str) -> Result<BigRat, String> {
    parse_rat(s.trim()).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn parse_precision(s: &str) -> Result<usize, String> {
    let bits: usize = s.parse().map_err(|_| format!("`{s}` is not a bit count"))?;
    if (64..=4096).contains(&bits) {
        Ok(bits)
    } else {
        Err(format!("precision {bits} is outside 64..=4096"))
    }
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<EllipticError> for Failure {
    fn from(e: EllipticError) -> Self {
        match e {
            EllipticError::SingularCurve | EllipticError::PointNotOnCurve => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

/// Text of a polynomial and its JSON form.
fn poly_value(p: &MultiPoly) -> Value {
    json!({ "text": format_poly(p), "poly": to_json(p) })
}

fn status_name(s: Status) -> String {
    serde_json::to_value(s)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn report_value(r: &ResolventReport) -> Value {
    let mut v = r.to_json();
    v["resolvent_poly"] = to_json(&r.resolvent);
    v
}

fn curve_of(a: &Option<BigRat>, b: &Option<BigRat>) -> Result<Option<Curve>, Failure> {
    match (a, b) {
        (Some(a), Some(b)) => Ok(Some(Curve::new(a.clone(), b.clone())?)),
        _ => Ok(None),
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn run_resolvent_cubic(c: &Coeffs) -> Result<Output, Failure> {
    let r = resolvent_cubic(&c.0).map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(Output {
        text: r.display(),
        json: report_value(&r),
        ok: true,
    })
}

fn run_adelmann(a: &Option<BigRat>, b: &Option<BigRat>) -> Result<Output, Failure> {
    let curve = curve_of(a, b)?;
    let r = adelmann_pipeline(curve.as_ref())?;
    let text = format!(
        "R_GP(Y) = {}\nB(Y) = {}\nstatus: {}",
        r.rgp.display(),
        format_collected(&r.b, "Y"),
        status_name(r.rgp.status)
    );
    let json = json!({
        "curve": curve.as_ref().map(Curve::to_json),
        "rgp": report_value(&r.rgp),
        "b": poly_value(&r.b),
        "b_expanded": poly_value(&r.b_expanded),
        "gate": r.gate.iter().map(poly_value).collect::<Vec<_>>(),
    });
    Ok(Output {
        text,
        json,
        ok: r.rgp.status != Status::Failed,
    })
}

fn run_holq8(args: [&Option<BigRat>; 4], precision: usize) -> Result<Output, Failure> {
    let point = match args {
        [Some(a), Some(b), Some(z), Some(w)] => {
            let curve = Curve::new(a.clone(), b.clone())?;
            Some(CurvePoint::new(curve, z.clone(), w.clone())?)
        }
        _ => None,
    };
    let opts = HolQ8Options {
        precision,
        ..HolQ8Options::default()
    };
    let r = holq8_pipeline(point.as_ref(), &opts)?;
    let reports = [&r.h1, &r.h2, &r.h3];
    let mut text = String::new();
    for h in reports {
        text.push_str(&format!("{} = {}\n  status: {}\n", h.name, h.display(), status_name(h.status)));
        for n in &h.notes {
            text.push_str(&format!("  note: {n}\n"));
        }
    }
    for n in &r.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    text.push_str(&format!("omega(v35) = {}", format_poly(&r.omega_v35)));
    let json = json!({
        "point": point.as_ref().map(CurvePoint::to_json),
        "h1": report_value(&r.h1),
        "h2": report_value(&r.h2),
        "h3": report_value(&r.h3),
        "omega_v35": poly_value(&r.omega_v35),
        "omega_square_consistent": r.omega_square_consistent,
        "degree3_vanish": r.degree3_vanish,
        "degree4_vanish": r.degree4_vanish,
        "h3_arbitration": r.arbitration.as_ref().map(|a| json!({
            "point": a.point.to_json(),
            "computed_matches": a.computed_matches,
            "listed_matches": a.listed_matches,
        })),
        "notes": r.notes,
    });
    Ok(Output {
        text,
        json,
        ok: reports.iter().all(|h| h.status != Status::Failed),
    })
}

fn run_divpoly(n: u32) -> Result<Output, Failure> {
    let p = DivisionPolySequence::new().get(n)?;
    Ok(Output {
        text: format_poly(&p),
        json: json!({ "n": n, "division_polynomial": poly_value(&p) }),
        ok: true,
    })
}

fn run_t4(a: &Option<BigRat>, b: &Option<BigRat>) -> Result<Output, Failure> {
    let curve = curve_of(a, b)?;
    let mut t4 = torsion_field_poly(&DivisionPolySequence::new(), 4, TorsionConvention::CurveEquation)?;
    if let Some(c) = &curve {
        t4 = t4.partial_eval(&c.bindings());
    }
    Ok(Output {
        text: format_collected(&t4, "X"),
        json: json!({
            "curve": curve.as_ref().map(Curve::to_json),
            "convention": TorsionConvention::CurveEquation,
            "t4": poly_value(&t4),
        }),
        ok: true,
    })
}

fn facts_text(f: &SettingFacts) -> String {
    format!(
        "{}\n  |G| = {}, |H| = {}, |F| = {}, [G:F] = {}\n  H normal: {}, abelian: {}, involutions: {}, elementary abelian: {}\n  G/H isomorphic to: {}\n  Stab_G(P) = F: {} (P = {})\n  transversal valid: {}",
        f.label,
        f.g_order,
        f.h_order,
        f.f_order,
        f.index,
        f.h_normal,
        f.h_abelian,
        f.h_involutions,
        f.h_elementary_abelian,
        f.quotient.as_deref().unwrap_or("none"),
        f.stabilizer_is_f,
        f.invariant,
        f.transversal_valid
    )
}

fn run_group_info(which: Which) -> Result<Output, Failure> {
    let facts = group_facts(which).map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(Output {
        text: facts.iter().map(facts_text).collect::<Vec<_>>().join("\n"),
        json: serde_json::to_value(&facts).expect("facts serialize"),
        ok: true,
    })
}

fn suite_text(r: &SuiteReport) -> String {
    let mark = |p: bool| if p { "PASS" } else { "FAIL" };
    let mut lines: Vec<String> = r
        .checks
        .iter()
        .map(|c| format!("{} {}: {}", mark(c.pass), c.name, c.detail))
        .collect();
    for q in &r.quartics {
        lines.push(format!(
            "{} oracle {}: deviation {:e}",
            mark(q.report.pass),
            q.resolvent,
            q.report.max_coeff_deviation
        ));
    }
    for c in &r.curves {
        let s = c.curve;
        for n in &c.resolvents {
            lines.push(format!(
                "{} oracle {} at (a,b,z,w) = ({},{},{},{}): deviation {:e}",
                mark(n.report.pass),
                n.resolvent,
                s.a,
                s.b,
                s.z,
                s.w,
                n.report.max_coeff_deviation
            ));
        }
        lines.push(format!(
            "{} oracle omega(v35) at (a,b,z,w) = ({},{},{},{}): expected {}, deviation {:e}",
            mark(c.omega_v35.pass),
            s.a,
            s.b,
            s.z,
            s.w,
            c.omega_v35.expected,
            c.omega_v35.deviation
        ));
    }
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let summary = json!({
        "pass": r.pass,
        "precision_bits": r.precision_bits,
        "checks": r.checks.len(),
        "curves": r.curves.len(),
        "failed_checks": failed,
    });
    lines.push(summary.to_string());
    lines.join("\n")
}

fn run_verify(precision: usize, curves: u64, golden_dir: &Path) -> Result<Output, Failure> {
    let r = suite::verify(precision, curves as usize, golden_dir)?;
    Ok(Output {
        text: suite_text(&r),
        json: serde_json::to_value(&r).expect("suite report serializes"),
        ok: r.pass,
    })
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::ResolventCubic { coeffs } => run_resolvent_cubic(coeffs),
        Command::Adelmann { a, b } => run_adelmann(a, b),
        Command::Holq8 { a, b, z, w } => run_holq8([a, b, z, w], cli.precision),
        Command::Divpoly { n } => run_divpoly(*n),
        Command::T4 { a, b } => run_t4(a, b),
        Command::GroupInfo { which } => run_group_info(*which),
        Command::Verify { curves } => run_verify(cli.precision, *curves, &cli.golden_dir),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON output")
            } else {
                out.text
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_parsing() {
        assert!(parse_coeffs("0,0,0,1").is_ok());
        assert!(parse_coeffs("0,0,1").is_err());
        assert!(parse_coeffs("a3,-1/2,x+1,0").is_ok());
        assert_eq!(parse_rational("-3/4").unwrap().to_string(), "-3/4");
        assert!(parse_rational("x").is_err());
        assert!(parse_precision("32").is_err());
    }

    #[test]
    fn command_line_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
