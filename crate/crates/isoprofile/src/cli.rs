//! The `isoprofile` command line.
//!
//! ```text
//! isoprofile constants [--json] [--precision N]
//! isoprofile profile --a A --n N --out FILE [--svg FILE]
//! isoprofile verify SUITE [--seed S] [--grid RxC]
//! isoprofile oracle --a A --t T [--resolution R]
//! ```
//!
//! Exit codes: 0 pass, 1 check failure, 2 solver failure, 64 usage error.
//! Output is deterministic: identical flags and seed produce byte-identical
//! CSV, SVG, and report text.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::format_sig;
use crate::geometry::{CandidateRegion, NotchParam, RegionKind};
use crate::oracle::{enumerate_candidates, Candidate};
use crate::profile::{self, ProfilePoint};
use crate::solvers::{Breakpoints, SolverConfig};
use crate::verify::{self, Check};
use crate::Error;

const USAGE: &str = "usage:
  isoprofile constants [--json] [--precision N]      breakpoint constants (N in 4..=15)
  isoprofile profile --a A --n N --out FILE [--svg FILE]
                                                     CSV sweep of f_a, optional SVG plot
  isoprofile verify SUITE [--seed S] [--grid RxC]    SUITE: lemmas | section3 | oracle | all
  isoprofile oracle --a A --t T [--resolution R]     candidate enumeration at one point
";

enum CliError {
    Usage(String),
    Solver(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Solver(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Entry point used by the binary.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)
}

/// Runs the CLI against an argument list, returning the process exit code.
pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            64
        }
        Err(CliError::Solver(e)) => {
            eprintln!("solver failure: {e}");
            2
        }
        Err(CliError::Io(e)) => {
            eprintln!("i/o error: {e}");
            1
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage("missing subcommand".into()));
    };
    match command.as_str() {
        "constants" => cmd_constants(&args[1..]),
        "profile" => cmd_profile(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        "oracle" => cmd_oracle(&args[1..]),
        "--help" | "-h" | "help" => {
            print!("{USAGE}");
            Ok(0)
        }
        other => Err(CliError::Usage(format!("unknown subcommand `{other}`"))),
    }
}

fn parse_value<T: std::str::FromStr>(name: &str, value: Option<&String>) -> Result<T, CliError> {
    let raw = value.ok_or_else(|| CliError::Usage(format!("flag {name} needs a value")))?;
    raw.parse()
        .map_err(|_| CliError::Usage(format!("invalid value `{raw}` for {name}")))
}

fn breakpoints() -> Result<Breakpoints, CliError> {
    Ok(Breakpoints::compute(SolverConfig::default())?)
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

fn cmd_constants(args: &[String]) -> Result<i32, CliError> {
    let mut json = false;
    let mut precision: usize = 6;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => json = true,
            "--precision" => precision = parse_value("--precision", it.next())?,
            other => return Err(CliError::Usage(format!("unexpected argument `{other}`"))),
        }
    }
    if !(4..=15).contains(&precision) {
        return Err(CliError::Usage(format!(
            "--precision must be in 4..=15, got {precision}"
        )));
    }
    let bp = breakpoints()?;
    let rows = [
        ("theta_max", bp.theta_max(), "half-area arc angle"),
        ("t0", bp.t0(), "largest area of a unit-perimeter arc"),
        (
            "alpha",
            bp.alpha(),
            "notch size whose unit-perimeter arc has area 1/pi",
        ),
        ("beta", bp.beta(), "1 - sin(theta_max)/theta_max"),
        ("gamma", bp.gamma(), "exactly 1/(1+pi)"),
    ];
    if json {
        let mut out = String::from("{");
        for (i, (name, value, _)) in rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{name}\":{}", format_sig(*value, precision));
        }
        out.push('}');
        println!("{out}");
    } else {
        for (name, value, note) in rows {
            println!("{name:<9} = {:<18} {note}", format_sig(value, precision));
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// profile sweep: CSV and SVG
// ---------------------------------------------------------------------------

fn csv_field(point: &ProfilePoint) -> String {
    let kinds: Vec<&str> = point.minimizers.iter().map(|k| k.label()).collect();
    let theta = match point.theta {
        Some(th) => format_sig(th, 12),
        None => String::new(),
    };
    format!(
        "{},{},{},{}",
        format_sig(point.t, 12),
        format_sig(point.perimeter, 12),
        kinds.join("+"),
        theta
    )
}

fn cmd_profile(args: &[String]) -> Result<i32, CliError> {
    let mut a: Option<f64> = None;
    let mut n: Option<usize> = None;
    let mut out: Option<String> = None;
    let mut svg: Option<String> = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--a" => a = Some(parse_value("--a", it.next())?),
            "--n" => n = Some(parse_value("--n", it.next())?),
            "--out" => out = Some(parse_value("--out", it.next())?),
            "--svg" => svg = Some(parse_value("--svg", it.next())?),
            other => return Err(CliError::Usage(format!("unexpected argument `{other}`"))),
        }
    }
    let a = a.ok_or_else(|| CliError::Usage("profile requires --a".into()))?;
    let n = n.ok_or_else(|| CliError::Usage("profile requires --n".into()))?;
    let out = out.ok_or_else(|| CliError::Usage("profile requires --out".into()))?;
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let notch = NotchParam::new(a)
        .map_err(|_| CliError::Usage(format!("--a must be in [0, 1), got {a}")))?;

    let bp = breakpoints()?;
    let half = notch.half_area();
    let mut points = Vec::with_capacity(n);
    for i in 1..=n {
        let t = half * i as f64 / n as f64;
        points.push(profile::evaluate(notch, t, &bp)?);
    }

    let mut csv = String::from("t,perimeter,minimizers,theta\n");
    for p in &points {
        csv.push_str(&csv_field(p));
        csv.push('\n');
    }
    fs::write(Path::new(&out), csv)?;
    println!("wrote {n} rows to {out}");

    if let Some(svg_path) = svg {
        let doc = render_svg(notch, &bp, &points)?;
        fs::write(Path::new(&svg_path), doc)?;
        println!("wrote plot to {svg_path}");
    }
    Ok(0)
}

struct Guide {
    t: f64,
    label: &'static str,
}

fn guides(a: NotchParam, bp: &Breakpoints) -> Result<Vec<Guide>, Error> {
    let av = a.value();
    let mut out = vec![Guide {
        t: bp.transition(a)?,
        label: "T",
    }];
    if av > bp.alpha() && av <= bp.beta() {
        out.push(Guide {
            t: bp.tau(av)?,
            label: "tau",
        });
    }
    if av >= bp.gamma() {
        out.push(Guide {
            t: av * (1.0 - av),
            label: "a(1-a)",
        });
    }
    out.push(Guide {
        t: a.half_area(),
        label: "half",
    });
    Ok(out)
}

/// Hand-emitted SVG 1.1: the profile polyline with dashed guides at the
/// branch boundaries. No plotting dependency.
fn render_svg(a: NotchParam, bp: &Breakpoints, points: &[ProfilePoint]) -> Result<String, Error> {
    const W: f64 = 640.0;
    const H: f64 = 440.0;
    const ML: f64 = 56.0;
    const MR: f64 = 20.0;
    const MT: f64 = 26.0;
    const MB: f64 = 44.0;
    let half = a.half_area();
    let ymax = points
        .iter()
        .map(|p| p.perimeter)
        .fold(0.0f64, f64::max)
        .max(1e-9)
        * 1.08;
    let x = |t: f64| ML + (t / half) * (W - ML - MR);
    let y = |p: f64| H - MB - (p / ymax) * (H - MT - MB);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // Axes.
    let _ = writeln!(
        s,
        "<line x1=\"{ML}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        H - MB,
        W - MR,
        H - MB
    );
    let _ = writeln!(
        s,
        "<line x1=\"{ML}\" y1=\"{}\" x2=\"{ML}\" y2=\"{MT}\" stroke=\"black\"/>",
        H - MB
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\">t</text>",
        (ML + W - MR) / 2.0,
        H - 8.0
    );
    let _ = writeln!(
        s,
        "<text x=\"14\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">perimeter</text>",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"16\" font-size=\"13\" text-anchor=\"middle\">isoperimetric profile, a = {}</text>",
        (ML + W - MR) / 2.0,
        format_sig(a.value(), 6)
    );

    // Dashed guides with labels.
    for guide in guides(a, bp)? {
        let gx = x(guide.t);
        let _ = writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{}\" x2=\"{:.2}\" y2=\"{MT}\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>",
            gx,
            H - MB,
            gx
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\" fill=\"gray\">{}</text>",
            gx,
            H - MB + 14.0,
            guide.label
        );
    }

    // The profile polyline.
    let mut coords = String::new();
    for p in points {
        let _ = write!(coords, "{:.2},{:.2} ", x(p.t), y(p.perimeter));
    }
    let _ = writeln!(
        s,
        "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        coords.trim_end()
    );

    // y-axis reference line at perimeter 1 when visible.
    if ymax > 1.0 {
        let _ = writeln!(
            s,
            "<line x1=\"{ML}\" y1=\"{:.2}\" x2=\"{}\" y2=\"{:.2}\" stroke=\"lightgray\" stroke-dasharray=\"2,3\"/>",
            y(1.0),
            W - MR,
            y(1.0)
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\" fill=\"gray\">1</text>",
            ML - 4.0,
            y(1.0) + 4.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn print_checks(checks: &[Check]) -> usize {
    let mut failures = 0;
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if !c.passed {
            failures += 1;
        }
        println!(
            "{status}  {:<55} margin={:<14} {}",
            c.name,
            format_sig(c.margin, 6),
            c.detail
        );
    }
    failures
}

fn cmd_verify(args: &[String]) -> Result<i32, CliError> {
    let Some(raw_suite) = args.first() else {
        return Err(CliError::Usage(
            "verify requires a suite: lemmas | section3 | oracle | all".into(),
        ));
    };
    // Accept both `verify section3` and `verify --section3`.
    let suite = raw_suite.trim_start_matches("--");
    let mut seed: u64 = 42;
    let mut grid = (20usize, 200usize);
    let mut it = args[1..].iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--seed" => seed = parse_value("--seed", it.next())?,
            "--grid" => {
                let raw: String = parse_value("--grid", it.next())?;
                let parts: Vec<&str> = raw.split('x').collect();
                if parts.len() != 2 {
                    return Err(CliError::Usage(format!("--grid expects RxC, got `{raw}`")));
                }
                let rows = parts[0]
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad grid rows `{}`", parts[0])))?;
                let cols = parts[1]
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad grid cols `{}`", parts[1])))?;
                grid = (rows, cols);
            }
            other => return Err(CliError::Usage(format!("unexpected argument `{other}`"))),
        }
    }

    let bp = breakpoints()?;
    let mut checks: Vec<Check> = Vec::new();
    match suite {
        "lemmas" => checks.extend(verify::lemma_suite(&bp)?),
        "section3" => checks.extend(verify::section3_suite(seed, bp.config())?),
        "oracle" => checks.extend(verify::oracle_suite(&bp, grid.0, grid.1, 200)?),
        "all" => {
            checks.extend(verify::lemma_suite(&bp)?);
            checks.extend(verify::section3_suite(seed, bp.config())?);
            checks.extend(verify::profile_suite(&bp, seed)?);
            checks.extend(verify::oracle_suite(&bp, grid.0, grid.1, 200)?);
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite `{other}` (expected lemmas | section3 | oracle | all)"
            )))
        }
    }
    let failures = print_checks(&checks);
    println!(
        "suite {suite}: {}/{} checks passed (seed {seed})",
        checks.len() - failures,
        checks.len()
    );
    Ok(if failures == 0 { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn region_summary(region: &CandidateRegion) -> String {
    match region {
        CandidateRegion::QuarterDisk { radius, corner } => {
            format!("radius={} corner={corner}", format_sig(*radius, 6))
        }
        CandidateRegion::UnitChord { area } | CandidateRegion::NotchChord { area } => {
            format!("area={}", format_sig(*area, 6))
        }
        CandidateRegion::CornerArc { theta, reflected } => {
            format!("theta={} reflected={reflected}", format_sig(*theta, 6))
        }
        CandidateRegion::FullCircle { radius }
        | CandidateRegion::Semicircle { radius }
        | CandidateRegion::ThreeQuarterCircle { radius }
        | CandidateRegion::NotchQuarterCircle { radius } => {
            format!("radius={}", format_sig(*radius, 6))
        }
        CandidateRegion::Union(parts) => {
            let kinds: Vec<&str> = parts.iter().map(|p| p.kind().label()).collect();
            format!("parts={}", kinds.join("+"))
        }
    }
}

fn cmd_oracle(args: &[String]) -> Result<i32, CliError> {
    let mut a: Option<f64> = None;
    let mut t: Option<f64> = None;
    let mut resolution: usize = 50;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--a" => a = Some(parse_value("--a", it.next())?),
            "--t" => t = Some(parse_value("--t", it.next())?),
            "--resolution" => resolution = parse_value("--resolution", it.next())?,
            other => return Err(CliError::Usage(format!("unexpected argument `{other}`"))),
        }
    }
    let a = a.ok_or_else(|| CliError::Usage("oracle requires --a".into()))?;
    let t = t.ok_or_else(|| CliError::Usage("oracle requires --t".into()))?;
    if resolution < 10 {
        return Err(CliError::Usage(format!(
            "--resolution must be at least 10, got {resolution}"
        )));
    }
    let notch = NotchParam::new(a)
        .map_err(|_| CliError::Usage(format!("--a must be in [0, 1), got {a}")))?;
    if !(t > 0.0 && t <= notch.half_area() + 1e-12) {
        return Err(CliError::Usage(format!(
            "--t must be in (0, {}], got {t}",
            format_sig(notch.half_area(), 12)
        )));
    }

    let bp = breakpoints()?;
    let point = profile::evaluate(notch, t, &bp)?;
    let candidates = enumerate_candidates(notch, t, resolution, &bp)?;

    println!(
        "a = {}  t = {}  resolution = {resolution}",
        format_sig(a, 12),
        format_sig(t, 12)
    );
    let mut connected: Vec<&Candidate> = candidates
        .iter()
        .filter(|c| c.kind() != RegionKind::Union)
        .collect();
    connected.sort_by(|x, y| x.perimeter.total_cmp(&y.perimeter));
    for c in &connected {
        println!(
            "  {:<22} perimeter={:<18} {}",
            c.kind().label(),
            format_sig(c.perimeter, 12),
            region_summary(&c.region)
        );
    }
    let best_union = candidates
        .iter()
        .filter(|c| c.kind() == RegionKind::Union)
        .min_by(|x, y| x.perimeter.total_cmp(&y.perimeter));
    if let Some(u) = best_union {
        println!(
            "  {:<22} perimeter={:<18} {} (best of {} splits)",
            "union",
            format_sig(u.perimeter, 12),
            region_summary(&u.region),
            resolution - 1
        );
    }

    let best = candidates
        .iter()
        .min_by(|x, y| x.perimeter.total_cmp(&y.perimeter))
        .expect("enumeration is never empty");
    let gap = (best.perimeter - point.perimeter).abs();
    let kinds: Vec<&str> = point.minimizers.iter().map(|k| k.label()).collect();
    println!(
        "minimum: {} perimeter={}",
        best.kind().label(),
        format_sig(best.perimeter, 12)
    );
    println!(
        "profile: f={} minimizers={}",
        format_sig(point.perimeter, 12),
        kinds.join("+")
    );
    println!("agreement: |min - f| = {}", format_sig(gap, 6));

    let matches = point.has_minimizer(best.kind())
        || candidates
            .iter()
            .any(|c| point.has_minimizer(c.kind()) && c.perimeter - best.perimeter <= 1e-9);
    Ok(if gap <= 1e-9 && matches { 0 } else { 1 })
}
