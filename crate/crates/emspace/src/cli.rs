//! The `emspace` command line.
//!
//! Exit codes: `0` when a filler was found, a sweep passed or the
//! counterexample was confirmed; `1` when a horn has no filler or a sweep
//! found a failing horn; `2` for usage and validation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use emspace_core::horn::{
    brute_force_filler, build_constraints, moore_filler, nat_two_counterexample, solve_em, sweep, validate_horn, Compatibility, HornKind,
    SweepConfig, SweepOutcome,
};
use emspace_core::sset::sphere;
use emspace_core::{EmSimplex, EmSpace, FillerResult, HornProblem, Monoid};
use serde_json::json;

use crate::literal::{format_named, parse_face, parse_horn, parse_simplex};
use crate::spec::parse_monoid;
use crate::{json, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "emspace", version, about = "Eilenberg–MacLane simplicial monoids K(M,n) and horn filling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the sphere Sⁿ up to a level and the generators of K(M,n) there.
    Enumerate(EnumerateArgs),
    /// Faces and degeneracies of one simplex.
    Faces(FacesArgs),
    /// Decide whether a horn has a filler.
    CheckHorn(CheckHornArgs),
    /// Decide every compatible horn up to a dimension.
    Sweep(SweepArgs),
    /// The inner horn Λ¹[3] → K(ℕ,2) with faces (f0, 1, 3), which has no filler.
    #[command(name = "paper-counterexample")]
    Counterexample(CounterexampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct SpaceArgs {
    /// nat, int, cyclic:m, trivial, bool or table:<path>.
    #[arg(long, default_value = "nat")]
    monoid: String,
    /// Degree n of K(M, n).
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, default_value_t = 3)]
    level: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct FacesArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// `level:k [v1,v2,...]`, values in generator order (see `enumerate`).
    #[arg(long)]
    simplex: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Constraint solving.
    Solve,
    /// The group construction; needs a group.
    Moore,
    /// Exhaustive scan; infinite monoids need --bound.
    Brute,
}

#[derive(Debug, Args)]
struct CheckHornArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// `n,k` for the horn Λᵏ[n].
    #[arg(long)]
    horn: String,
    /// Faces `i:[v1,v2,...]` for every i ≠ k.
    #[arg(long, num_args = 1.., required = true)]
    faces: Vec<String>,
    #[arg(long, value_enum, default_value_t = Method::Solve)]
    method: Method,
    /// Coordinate bound for --method brute over an infinite monoid.
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Inner horns, 0 < k < n.
    Quasi,
    /// All horns.
    Kan,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, value_enum, default_value_t = Kind::Quasi)]
    kind: Kind,
    /// Largest horn dimension.
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Coordinate bound for faces over an infinite monoid.
    #[arg(long, default_value_t = 3)]
    bound: u64,
    /// Also require fillers to be unique.
    #[arg(long)]
    unique: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct CounterexampleArgs {
    /// The 0-face, any natural number.
    #[arg(long, default_value = "0")]
    f0: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                0
            } else {
                let _ = err.write_all(text.as_bytes());
                2
            };
        }
    };
    match execute(cli.command) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<(u8, String)> {
    match command {
        Command::Enumerate(a) => enumerate(a),
        Command::Faces(a) => faces(a),
        Command::CheckHorn(a) => check_horn(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Counterexample(a) => counterexample(a),
    }
}

fn space_name(space: &EmSpace) -> String {
    format!("K({},{})", space.monoid().name(), space.degree())
}

fn enumerate(a: EnumerateArgs) -> Result<(u8, String)> {
    let monoid = parse_monoid(&a.space.monoid)?;
    let n = a.space.n;
    let space = EmSpace::new(monoid, n, a.level);
    let dump = sphere(n, a.level).to_string();
    let gens: Vec<String> = space.generators(a.level).iter().map(|g| g.to_string()).collect();
    let m = space.monoid().name();
    let mut s = String::new();
    match a.format {
        Format::Json => {
            let levels: Vec<Vec<&str>> =
                dump.lines().map(|l| l.split_once(": ").map_or(vec![], |(_, rest)| rest.split(' ').collect())).collect();
            let doc = json!({
                "monoid": m,
                "degree": n,
                "level": a.level,
                "sphere": levels,
                "generators": gens,
                "rank": gens.len(),
            });
            s = json::to_string(&doc);
        }
        Format::Text => {
            let _ = writeln!(s, "S^{n} up to level {}:", a.level);
            s.push_str(&dump);
            let _ = writeln!(s, "generators of {}[{}]: {}", space_name(&space), a.level, if gens.is_empty() { "none".into() } else { gens.join(" ") });
            let iso = if gens.is_empty() { "the trivial monoid".to_string() } else { format!("{m}^{}", gens.len()) };
            let _ = writeln!(s, "{}[{}] = {} ≅ {iso}", space_name(&space), a.level, space.level_description(a.level));
        }
    }
    Ok((0, s))
}

fn faces(a: FacesArgs) -> Result<(u8, String)> {
    let monoid = parse_monoid(&a.space.monoid)?;
    let level = a
        .simplex
        .trim()
        .strip_prefix("level:")
        .and_then(|r| r.split('[').next())
        .and_then(|l| l.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::literal(&a.simplex, "expected `level:k [v1,...]`"))?;
    let space = EmSpace::new(monoid, a.space.n, level + 1);
    let x = parse_simplex(&a.simplex, &space)?;
    let faces: Vec<EmSimplex> = if level == 0 { Vec::new() } else { (0..=level).map(|i| space.face(level, i, &x)).collect::<emspace_core::Result<_>>()? };
    let degs: Vec<EmSimplex> = (0..=level).map(|j| space.degeneracy(level, j, &x)).collect::<emspace_core::Result<_>>()?;
    let m = space.monoid();
    let vals = |y: &EmSimplex| y.coords.iter().map(|c| json::element(m, c)).collect::<Vec<_>>();
    let s = match a.format {
        Format::Json => json::to_string(&json!({
            "space": space_name(&space),
            "level": level,
            "simplex": vals(&x),
            "faces": faces.iter().map(vals).collect::<Vec<_>>(),
            "degeneracies": degs.iter().map(vals).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "x = {}   in {}[{level}]", format_named(&space, &x), space_name(&space));
            for (i, y) in faces.iter().enumerate() {
                let _ = writeln!(s, "d{i} x = {}", format_named(&space, y));
            }
            for (j, y) in degs.iter().enumerate() {
                let _ = writeln!(s, "s{j} x = {}", format_named(&space, y));
            }
            s
        }
    };
    Ok((0, s))
}

/// Splits `0:[1] 2:[1,2]` and friends into face literals, tolerating spaces
/// inside the brackets and several literals per argument.
fn split_faces(args: &[String]) -> Vec<String> {
    let joined = args.join(" ");
    let mut out = Vec::new();
    let mut rest = joined.trim();
    while !rest.is_empty() {
        let end = rest.find(']').map_or(rest.len(), |e| e + 1);
        out.push(rest[..end].trim().to_string());
        rest = rest[end..].trim_start();
    }
    out
}

fn parse_problem(space: &EmSpace, n: usize, k: usize, args: &[String]) -> Result<HornProblem<EmSimplex>> {
    if n == 0 || k > n {
        return Err(Error::Usage(format!("no horn Λ^{k}[{n}]: need 0 ≤ k ≤ n and n ≥ 1")));
    }
    let mut p = HornProblem::new(n, k, []);
    for lit in split_faces(args) {
        let (i, x) = parse_face(&lit, space, n - 1)?;
        if p.faces.insert(i, x).is_some() {
            return Err(Error::literal(&lit, format!("face {i} given twice")));
        }
    }
    if let Compatibility::Incompatible { i, j } = validate_horn(space, &p)? {
        let lhs = space.face(n - 1, i, &p.faces[&j])?;
        let rhs = space.face(n - 1, j - 1, &p.faces[&i])?;
        return Err(Error::Usage(format!(
            "incompatible faces x{i} and x{j}: d{i}(x{j}) = {} but d{}(x{i}) = {}",
            format_named(space, &lhs),
            j - 1,
            format_named(space, &rhs)
        )));
    }
    Ok(p)
}

fn describe_horn(space: &EmSpace, p: &HornProblem<EmSimplex>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "horn Λ^{}[{}] → {}", p.k, p.n, space_name(space));
    for (i, x) in &p.faces {
        let _ = writeln!(s, "  x{i} = {}", format_named(space, x));
    }
    s
}

fn check_horn(a: CheckHornArgs) -> Result<(u8, String)> {
    let monoid = parse_monoid(&a.space.monoid)?;
    let (n, k) = parse_horn(&a.horn)?;
    let space = EmSpace::new(monoid, a.space.n, n.max(1));
    let p = parse_problem(&space, n, k, &a.faces)?;
    let result = match a.method {
        Method::Solve => solve_em(&space, &p)?,
        Method::Moore => moore_filler(&space, &p)?,
        Method::Brute => brute_force_filler(&space, &p, a.bound)?,
    };
    let code = if result.is_filler() { 0 } else { 1 };
    if a.format == Format::Json {
        return Ok((code, json::to_string(&json::certificate(&space, &p, &result))));
    }
    let mut s = describe_horn(&space, &p);
    if a.method == Method::Solve {
        let sys = build_constraints(&space, &p)?;
        s.push_str("equations:\n");
        if sys.equations.is_empty() {
            s.push_str("  (none)\n");
        }
        for eq in &sys.equations {
            let _ = writeln!(s, "  {}", sys.render(space.monoid(), eq));
        }
    }
    match &result {
        FillerResult::Filler(y) => {
            let _ = writeln!(s, "filler: {}", format_named(&space, y));
            s.push_str("verification:\n");
            for (i, x) in &p.faces {
                let d = space.face(n, i.to_owned(), y)?;
                let ok = if d == *x { "=" } else { "≠" };
                let _ = writeln!(s, "  d{i} y = {} {ok} x{i}", format_named(&space, &d));
            }
        }
        FillerResult::NoFiller(c) => {
            s.push_str(&c.render(space.monoid()));
            s.push_str("no filler\n");
        }
    }
    Ok((code, s))
}

fn run_sweep(a: SweepArgs) -> Result<(u8, String)> {
    let monoid = parse_monoid(&a.space.monoid)?;
    let bound = (!monoid.is_finite()).then_some(a.bound);
    let space = EmSpace::new(monoid, a.space.n, a.dim);
    let kind = match a.kind {
        Kind::Quasi => HornKind::Inner,
        Kind::Kan => HornKind::All,
    };
    let report = sweep(&space, SweepConfig { kind, max_dim: a.dim, bound, check_uniqueness: a.unique })?;
    let code = if report.passed() { 0 } else { 1 };
    if a.format == Format::Json {
        return Ok((code, json::to_string(&json::sweep(&space, &report))));
    }
    let mut s = String::new();
    let what = match a.kind {
        Kind::Quasi => "inner",
        Kind::Kan => "all",
    };
    let scope = match bound {
        Some(b) => format!(", face coordinates ≤ {b}"),
        None => String::new(),
    };
    let _ = writeln!(s, "{what} horns of {} up to dimension {}{scope}", space_name(&space), a.dim);
    let _ = writeln!(s, "horns checked: {}", report.horns_checked);
    match &report.outcome {
        SweepOutcome::Passed { bounded_evidence: true } => s.push_str("passed (bounded evidence only)\n"),
        SweepOutcome::Passed { bounded_evidence: false } => s.push_str("passed (exhaustive)\n"),
        SweepOutcome::MissingFiller { problem, certificate } => {
            s.push_str("failed: no filler for\n");
            s.push_str(&describe_horn(&space, problem));
            s.push_str(&certificate.render(space.monoid()));
        }
        SweepOutcome::NonUniqueFiller { problem, count } => {
            let _ = writeln!(s, "failed: {} fillers for", json::count_text(*count));
            s.push_str(&describe_horn(&space, problem));
        }
    }
    Ok((code, s))
}

fn counterexample(a: CounterexampleArgs) -> Result<(u8, String)> {
    let f0 = Monoid::nat().parse_element(&a.f0).map_err(|e| Error::Usage(format!("--f0: {e}")))?;
    let report = nat_two_counterexample(f0)?;
    let s = match a.format {
        Format::Json => json::to_string(&json::certificate(&report.space, &report.horn, &FillerResult::NoFiller(report.certificate.clone()))),
        Format::Text => report.render_text(),
    };
    Ok((0, s))
}
