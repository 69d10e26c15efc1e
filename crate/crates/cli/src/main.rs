//! `fnc-forge`: exact checks on Frobenius nonclassical curves over small finite fields.
//!
//! Exit status: 0 when every check held, 1 when a check failed, 2 on usage or input errors.

mod report;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fnc_forge::census::{
    arc_completeness, census_superelliptic, count_points_affine, count_points_at_infinity, count_points_projective,
    projective_points, verify_paper_suite, CensusLimits, CensusMode, SuiteConfig,
};
use fnc_forge::mvsp::{is_mvsp, mills_criterion, mills_structure, theta_of_type, type_a_enumerate, w_enumerate};
use fnc_forge::field::parse_elem;
use fnc_forge::poly::{parse_bipoly, parse_unipoly, pretty};
use fnc_forge::sepcurves::{fnc_all_components, fnc_cross_check, fnc_via_divisibility, fnc_via_mills};
use fnc_forge::superelliptic::{corollary_checks, garcia_test, kummer_genus, reduce_degree};
use fnc_forge::{BiPoly, BiRing, FieldSpec, FieldTower, GaloisField, PolyRing, SepCurve, SuperCurve, UniPoly};
use report::{Format, Report};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fnc-forge", version, about = "Frobenius nonclassical curves f(x) = g(y) over finite fields")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized trials.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct FieldArg {
    /// `p^s:k` builds F_q ⊂ F_Q with q = p^s and Q = q^k; `p^s` alone means k = 1.
    #[arg(long)]
    field: FieldSpec,
}

impl FieldArg {
    fn tower(&self) -> Result<FieldTower> {
        Ok(FieldTower::from_spec(self.field)?)
    }
}

#[derive(Args)]
struct PolyArg {
    #[command(flatten)]
    field: FieldArg,
    #[arg(long)]
    f: String,
}

#[derive(Args)]
struct SuperArg {
    #[command(flatten)]
    field: FieldArg,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    f: String,
}

/// A plane curve given either as `n:f` for `y^n = f(x)` or as an equation in `x, y`.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct CurveInput {
    #[arg(long = "super", value_name = "N:F")]
    superelliptic: Option<String>,
    /// `F(x, y)` or `lhs = rhs`.
    #[arg(long)]
    curve: Option<String>,
}

impl CurveInput {
    fn bipoly(&self, field: &GaloisField) -> Result<BiPoly> {
        let ring = BiRing::new(field);
        if let Some(s) = &self.superelliptic {
            let (n, f) = s.split_once(':').ok_or_else(|| anyhow!("--super expects N:F, got {s:?}"))?;
            let n: usize = n.trim().parse().with_context(|| format!("bad exponent in {s:?}"))?;
            let f = parse_unipoly(field, f)?;
            return Ok(ring.sub(&BiPoly::monomial(fnc_forge::Elem::ONE, 0, n), &BiPoly::from_x(&f)));
        }
        let text = self.curve.as_deref().expect("clap enforces one input");
        Ok(match text.split_once('=') {
            Some((l, r)) => ring.sub(&parse_bipoly(field, l)?, &parse_bipoly(field, r)?),
            None => parse_bipoly(field, text)?,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Divisibility,
    Mills,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Constructive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Field construction details.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Minimal value set polynomials.
    Mvsp {
        #[command(subcommand)]
        cmd: MvspCmd,
    },
    /// Separated curves f(x) = g(y).
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// Superelliptic curves y^n = f(x).
    Super {
        #[command(subcommand)]
        cmd: SuperCmd,
    },
    Points {
        #[command(subcommand)]
        cmd: PointsCmd,
    },
    Arc {
        #[command(subcommand)]
        cmd: ArcCmd,
    },
    Census {
        #[command(subcommand)]
        cmd: CensusCmd,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    Info(FieldArg),
}

#[derive(Subcommand)]
enum PolyCmd {
    ValueSet(PolyArg),
}

#[derive(Subcommand)]
enum MvspCmd {
    Check(PolyArg),
    Mills(PolyArg),
    Structure(PolyArg),
    /// Every member of W over the top field.
    WList(FieldArg),
    /// Type A members and their reflections, with θ.
    TypeAb(FieldArg),
}

#[derive(Subcommand)]
enum CurveCmd {
    Fnc {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
}

#[derive(Subcommand)]
enum SuperCmd {
    /// `garcia_test` next to the divisibility verdict.
    Fnc(SuperArg),
    Genus(SuperArg),
    Reduce {
        #[command(flatten)]
        curve: SuperArg,
        #[arg(long)]
        x0: String,
    },
    /// The six consequences of the nonclassicality test.
    Checks(SuperArg),
}

#[derive(Subcommand)]
enum PointsCmd {
    Count {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: CurveInput,
    },
}

#[derive(Subcommand)]
enum ArcCmd {
    /// Arc property and completeness of the curve's rational points.
    Check {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        input: CurveInput,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Subcommand)]
enum CensusCmd {
    Run {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Mode::Constructive)]
        mode: Mode,
        /// Comma-separated exponents; every divisor of Q − 1 by default.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = fnc_forge::census::CENSUS_CAP)]
        cap: u64,
    },
    VerifyPaper {
        /// Right-hand side of the Hermitian item.
        #[arg(long, default_value = "x^2+x")]
        hermitian_f: String,
    },
}

fn poly(field: &GaloisField, text: &str) -> Result<UniPoly> {
    parse_unipoly(field, text).with_context(|| format!("cannot parse {text:?}"))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.cmd {
        Cmd::Field { cmd: FieldCmd::Info(a) } => {
            let t = a.tower()?;
            Report::one(&json!({
                "spec": t.spec().to_string(),
                "p": t.p(),
                "q": t.q(),
                "Q": t.big_q(),
                "base_modulus": pretty(&t.base_modulus(), "z"),
                "top_modulus": pretty(&t.top_modulus(), "z"),
                "generator": t.top().generator()?,
            }))
        }
        Cmd::Poly { cmd: PolyCmd::ValueSet(a) } => {
            let t = a.field.tower()?;
            Report::one(&PolyRing::new(t.top()).value_set(&poly(t.top(), &a.f)?))
        }
        Cmd::Mvsp { cmd } => mvsp(cmd),
        Cmd::Curve { cmd: CurveCmd::Fnc { field, f, g, method } } => {
            let t = field.tower()?;
            let k = t.top();
            let c = SepCurve::new(k, poly(k, f)?, poly(k, g)?)?;
            let r = match method {
                Method::Divisibility => fnc_via_divisibility(k, &c)?,
                Method::Mills => fnc_via_mills(k, &c)?,
                Method::Both => fnc_cross_check(k, &c)?,
            };
            let ok = r.method_agreement;
            Ok(Report::one(&r)?.ok(ok))
        }
        Cmd::Super { cmd } => superelliptic(cmd),
        Cmd::Points { cmd: PointsCmd::Count { field, input } } => {
            let t = field.tower()?;
            let k = t.top();
            let f = input.bipoly(k)?;
            let n = count_points_projective(k, &f)?;
            let (affine, infinity) = (count_points_affine(k, &f), count_points_at_infinity(k, &f));
            Ok(Report::one(&json!({ "N": n, "affine": affine, "infinity": infinity }))?.ok(n == affine + infinity))
        }
        Cmd::Arc { cmd: ArcCmd::Check { field, input, d } } => {
            let t = field.tower()?;
            let k = t.top();
            let pts = projective_points(k, &input.bipoly(k)?)?;
            Report::one(&arc_completeness(k, &pts, *d)?)
        }
        Cmd::Census { cmd } => census(cli, cmd),
    }
}

fn mvsp(cmd: &MvspCmd) -> Result<Report> {
    match cmd {
        MvspCmd::Check(a) => {
            let t = a.field.tower()?;
            let f = poly(t.top(), &a.f)?;
            let vs = PolyRing::new(t.top()).value_set(&f);
            Report::one(&json!({ "f": pretty(&f, "x"), "is_mvsp": is_mvsp(t.top(), &f)?, "value_set": vs }))
        }
        MvspCmd::Mills(a) => {
            let t = a.field.tower()?;
            let c = mills_criterion(t.top(), &poly(t.top(), &a.f)?)?;
            let holds = c.holds;
            Ok(Report::one(&c)?.ok(holds))
        }
        MvspCmd::Structure(a) => {
            let t = a.field.tower()?;
            let s = mills_structure(t.top(), &poly(t.top(), &a.f)?)?;
            let ok = s.fully_verified();
            Ok(Report::one(&s)?.ok(ok))
        }
        MvspCmd::WList(a) => {
            let t = a.tower()?;
            let w = w_enumerate(&t)?;
            let rows: Vec<_> = w.iter().map(|f| json!({ "f": pretty(f, "x"), "coeffs": f.as_u64s() })).collect();
            Report::many(&rows)
        }
        MvspCmd::TypeAb(a) => {
            let t = a.tower()?;
            let k = t.top();
            let ring = PolyRing::new(k);
            let mut rows = Vec::new();
            for m in type_a_enumerate(k)? {
                let b = ring.sub(&UniPoly::one(), &m.f);
                for (ty, f) in [("A", &m.f), ("B", &b)] {
                    rows.push(json!({
                        "type": ty,
                        "f": pretty(f, "x"),
                        "g": pretty(&m.g, "x"),
                        "subset": m.subset,
                        "theta": theta_of_type(k, f)?,
                    }));
                }
            }
            Report::many(&rows)
        }
    }
}

fn super_curve(a: &SuperArg) -> Result<(FieldTower, SuperCurve)> {
    let t = a.field.tower()?;
    let c = SuperCurve::new(t.top(), a.n, poly(t.top(), &a.f)?)?;
    Ok((t, c))
}

fn superelliptic(cmd: &SuperCmd) -> Result<Report> {
    match cmd {
        SuperCmd::Fnc(a) => {
            let (t, c) = super_curve(a)?;
            let k = t.top();
            let garcia = garcia_test(k, &c);
            let divisibility = fnc_all_components(k, &c.as_sep(k)?)?;
            Ok(Report::one(&json!({ "garcia_test": garcia, "divisibility": divisibility }))?.ok(garcia == divisibility))
        }
        SuperCmd::Genus(a) => {
            let (t, c) = super_curve(a)?;
            Report::one(&kummer_genus(t.top(), &c)?)
        }
        SuperCmd::Reduce { curve, x0 } => {
            let (t, c) = super_curve(curve)?;
            let k = t.top();
            let r = reduce_degree(k, &c, parse_elem(k, x0)?)?;
            Report::one(&json!({
                "n": r.n(),
                "f": pretty(r.f(), "x"),
                "coeffs": r.f().as_u64s(),
                "garcia_test": garcia_test(k, &r),
            }))
        }
        SuperCmd::Checks(a) => {
            let (t, c) = super_curve(a)?;
            let r = corollary_checks(t.top(), &c)?;
            let ok = r.all_pass();
            Ok(Report::one(&r)?.ok(ok))
        }
    }
}

fn census(cli: &Cli, cmd: &CensusCmd) -> Result<Report> {
    match cmd {
        CensusCmd::Run { field, mode, n, max_degree, cap } => {
            let t = field.tower()?;
            let mode = match mode {
                Mode::Exhaustive => CensusMode::Exhaustive,
                Mode::Constructive => CensusMode::Constructive,
            };
            let limits = CensusLimits { n_values: n.clone(), max_degree: *max_degree, cap: *cap };
            let recs = census_superelliptic(&t, mode, &limits)?;
            let ok = recs.iter().all(|r| r.checks.all_pass() && r.hvh.as_ref().map_or(true, |h| h.holds));
            let rows: Vec<_> = recs
                .iter()
                .map(|r| {
                    json!({
                        "q": r.q,
                        "n": r.n,
                        "f": r.f_text,
                        "N": r.stats.n_points,
                        "d": r.stats.d,
                        "genus": r.stats.genus,
                        "smooth_plane": r.stats.smooth_plane,
                        "irreducibility": r.irreducibility,
                        "checks_pass": r.checks.all_pass(),
                        "hvh_holds": r.hvh.as_ref().map(|h| h.holds),
                    })
                })
                .collect();
            Ok(Report::many(&rows)?.ok(ok))
        }
        CensusCmd::VerifyPaper { hermitian_f } => {
            let mut cfg = SuiteConfig { hermitian_f: hermitian_f.clone(), ..SuiteConfig::default() };
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            let r = verify_paper_suite(&cfg);
            let mut text = String::new();
            for i in &r.items {
                let tag = if i.passed { "PASS" } else { "FAIL" };
                text += &format!("{tag} {:>2} {}: expected {}; got {}\n", i.id, i.name, i.expected, i.actual);
            }
            let passed = r.items.iter().filter(|i| i.passed).count();
            text += &format!("{passed}/{} passed\n", r.items.len());
            let ok = r.all_passed;
            Ok(Report::many(&r.items)?.ok(ok).with_text(text))
        }
    }
}

/// A reader such as `head` closing early is not an error.
fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let io = c.downcast_ref::<std::io::Error>().or_else(|| match c.downcast_ref::<csv::Error>()?.kind() {
            csv::ErrorKind::Io(io) => Some(io),
            _ => None,
        });
        io.is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().expect("pool is built once");
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut out = std::io::stdout().lock();
    if let Err(e) = report.emit(cli.format, &mut out).and_then(|_| Ok(out.flush()?)) {
        if !broken_pipe(&e) {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
