use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use singq::axioms::{check_oriented_singquandle, check_quandle, AxiomReport};
use singq::coloring::{coloring_diagnostics, count_colorings_with, enumerate_colorings_with, ColoringLimits};
use singq::constructions as build;
use singq::diagram::{parse_diagram, SingularDiagram};
use singq::enumerate::{count_singquandles, enumerate_singquandles_bounded, DEFAULT_ENUM_LIMIT};
use singq::fixtures::{fixture, fixture_info, FIXTURES};
use singq::group::{named_group, FiniteGroup};
use singq::io::{parse_table_file, read_group, read_quandle, read_singquandle, write_quandle, write_singquandle, FileKind};
use singq::iso::{find_isomorphism_bounded, DEFAULT_ISO_LIMIT};
use singq::{Error, OrientedSingquandle, Quandle};

/// Oriented singquandles and colorings of singular link diagrams.
#[derive(Parser)]
#[command(name = "singq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle and singquandle axioms of a structure file.
    Check {
        #[arg(long)]
        structure: PathBuf,
    },
    /// Build a structure from a named family.
    ///
    /// Families and parameters:
    ///   trivial N | dihedral N | affine N A |
    ///   affine-sq N A B | alexander-sq N T V A B C |
    ///   conj-sol GROUP K [M] | prop-family GROUP FAMILY M |
    ///   abelian-fg GROUP F H
    ///
    /// GROUP is a name (s3, d4, q8, z6, z2xz2) and is omitted when --group is
    /// given. F and H are either an exponent k (x -> x^k) or a comma-separated
    /// list of images.
    Build {
        family: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Write the structure here instead of stdout.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Load the group from a group file.
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Count (and list) colorings of a diagram.
    Color {
        #[arg(long)]
        structure: PathBuf,
        /// Diagram file, or `fixture:NAME`.
        #[arg(long)]
        diagram: String,
        /// Print each coloring, in semiarc order.
        #[arg(long)]
        list: bool,
        /// List at most this many colorings.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Enumerate all singquandle structures on a quandle.
    Enum {
        #[arg(long)]
        quandle: PathBuf,
        /// Print the first K structures.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decide whether two structures are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// List built-in diagrams, or print one.
    Fixtures { name: Option<String> },
}

/// Failure of a command: a message and the exit status.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, positive)) => {
            print!("{out}");
            ExitCode::from(if positive { 0 } else { 1 })
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Size guard from `SINGQ_MAX_CARRIER`, else `default`.
fn guard(default: usize) -> Result<usize, Failure> {
    match std::env::var("SINGQ_MAX_CARRIER") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure(format!("SINGQ_MAX_CARRIER must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(default),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check { structure } => check(&read(&structure)?),
        Command::Build {
            family,
            params,
            output,
            group,
        } => build_cmd(&family, &params, output.as_deref(), group.as_deref()),
        Command::Color {
            structure,
            diagram,
            list,
            limit,
        } => color(&read(&structure)?, &diagram, list, limit),
        Command::Enum { quandle, limit } => enumerate(&read(&quandle)?, limit),
        Command::Iso { a, b } => iso(&read(&a)?, &read(&b)?),
        Command::Fixtures { name } => fixtures(name.as_deref()),
    }
}

fn report_text(report: &AxiomReport) -> String {
    let verdict = if report.all_pass() { "PASS" } else { "FAIL" };
    format!("{report}verdict: {verdict}\n")
}

fn check(text: &str) -> Outcome {
    let file = parse_table_file(text)?;
    let report = match file.kind {
        FileKind::Singquandle => check_oriented_singquandle(&file.tables[0], &file.tables[1], &file.tables[2])?,
        FileKind::Quandle => check_quandle(&file.tables[0]),
        FileKind::Group => return Err(Failure("`check` expects a singquandle or quandle file".into())),
    };
    Ok((report_text(&report), report.all_pass()))
}

enum Built {
    Quandle(Quandle),
    Singquandle(OrientedSingquandle),
}

fn int(params: &[String], i: usize, name: &str) -> Result<i64, Failure> {
    let v = params.get(i).ok_or_else(|| Failure(format!("missing parameter {name}")))?;
    v.parse().map_err(|_| Failure(format!("parameter {name} must be an integer, got `{v}`")))
}

fn small<T: TryFrom<i64>>(v: i64, name: &str) -> Result<T, Failure> {
    T::try_from(v).map_err(|_| Failure(format!("parameter {name} out of range: {v}")))
}

fn arity(params: &[String], allowed: &[usize], usage: &str) -> Result<(), Failure> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        Err(Failure(format!("expected parameters: {usage}")))
    }
}

/// Splits off the group: from `--group` if given, else the first parameter.
fn take_group<'a>(params: &'a [String], file: Option<&Path>) -> Result<(FiniteGroup, &'a [String]), Failure> {
    match file {
        Some(path) => Ok((read_group(&read(path)?)?, params)),
        None => {
            let name = params.first().ok_or_else(|| Failure("missing GROUP parameter".into()))?;
            Ok((named_group(name)?, &params[1..]))
        }
    }
}

fn group_map(g: &FiniteGroup, spec: &str, name: &str) -> Result<Vec<usize>, Failure> {
    if spec.contains(',') {
        return spec
            .split(',')
            .map(|w| w.trim().parse().map_err(|_| Failure(format!("{name}: bad image `{w}`"))))
            .collect();
    }
    let k: i64 = spec
        .parse()
        .map_err(|_| Failure(format!("{name} must be an exponent or an image list, got `{spec}`")))?;
    Ok(build::power_map(g, k))
}

fn construct(family: &str, params: &[String], group_file: Option<&Path>) -> Result<Built, Failure> {
    let sq = Built::Singquandle;
    Ok(match family {
        "trivial" => {
            arity(params, &[1], "N")?;
            Built::Quandle(build::trivial_quandle(small(int(params, 0, "N")?, "N")?)?)
        }
        "dihedral" => {
            arity(params, &[1], "N")?;
            Built::Quandle(build::dihedral_quandle(small(int(params, 0, "N")?, "N")?)?)
        }
        "affine" => {
            arity(params, &[2], "N A")?;
            Built::Quandle(build::affine_quandle(int(params, 0, "N")?, int(params, 1, "A")?)?)
        }
        "affine-sq" => {
            arity(params, &[3], "N A B")?;
            sq(build::affine_singquandle(
                int(params, 0, "N")?,
                int(params, 1, "A")?,
                int(params, 2, "B")?,
            )?)
        }
        "alexander-sq" => {
            arity(params, &[6], "N T V A B C")?;
            let p: Vec<i64> = (0..6).map(|i| int(params, i, "N T V A B C")).collect::<Result<_, _>>()?;
            sq(build::alexander_singquandle(p[0], p[1], p[2], p[3], p[4], p[5])?)
        }
        "conj-sol" => {
            let (g, rest) = take_group(params, group_file)?;
            arity(rest, &[1, 2], "GROUP K [M]")?;
            let k = small(int(rest, 0, "K")?, "K")?;
            let m = if rest.len() == 2 { small(int(rest, 1, "M")?, "M")? } else { 1 };
            sq(build::conj_solution_singquandle(&g, k, m)?)
        }
        "prop-family" => {
            let (g, rest) = take_group(params, group_file)?;
            arity(rest, &[2], "GROUP FAMILY M")?;
            let family = small(int(rest, 0, "FAMILY")?, "FAMILY")?;
            let m = small(int(rest, 1, "M")?, "M")?;
            sq(build::prop_family_singquandle(&g, family, m)?)
        }
        "abelian-fg" => {
            let (g, rest) = take_group(params, group_file)?;
            arity(rest, &[2], "GROUP F H")?;
            let f = group_map(&g, &rest[0], "F")?;
            let h = group_map(&g, &rest[1], "H")?;
            sq(build::abelian_fg_singquandle(&g, &f, &h)?)
        }
        other => {
            return Err(Failure(format!(
                "unknown family `{other}`; expected trivial, dihedral, affine, affine-sq, alexander-sq, \
                 conj-sol, prop-family or abelian-fg"
            )))
        }
    })
}

fn build_cmd(family: &str, params: &[String], output: Option<&Path>, group_file: Option<&Path>) -> Outcome {
    let built = construct(family, params, group_file)?;
    let (text, size, report, notes) = match &built {
        Built::Quandle(q) => (write_quandle(q), q.size(), check_quandle(q.op()), Vec::new()),
        Built::Singquandle(s) => (write_singquandle(s), s.size(), s.check(), s.notes().to_vec()),
    };
    let verdict = if report.all_pass() { "PASS" } else { "FAIL" };
    let mut summary = format!("carrier size: {size}\ncheck: {verdict}\n");
    for n in &notes {
        let _ = writeln!(summary, "note: {n}");
    }
    let out = match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            summary
        }
        None => {
            let commented: String = summary.lines().map(|l| format!("# {l}\n")).collect();
            format!("{text}{commented}")
        }
    };
    Ok((out, report.all_pass()))
}

/// Reads a structure for coloring. Structures failing the singquandle axioms
/// are accepted with warnings on stderr.
fn coloring_structure(text: &str) -> Result<OrientedSingquandle, Failure> {
    let file = parse_table_file(text)?;
    if file.kind != FileKind::Singquandle {
        return Err(Failure("`color` expects a singquandle file".into()));
    }
    let mut tables = file.tables.into_iter();
    let (op, r1, r2) = (tables.next().unwrap(), tables.next().unwrap(), tables.next().unwrap());
    let s = OrientedSingquandle::new_unchecked(Quandle::new(op)?, r1, r2)?;
    for warning in coloring_diagnostics(&s) {
        eprintln!("{warning}");
    }
    Ok(s)
}

fn load_diagram(spec: &str) -> Result<SingularDiagram, Failure> {
    match spec.strip_prefix("fixture:") {
        Some(name) => Ok(fixture(name)?),
        None => Ok(parse_diagram(&read(Path::new(spec))?)?),
    }
}

fn color(structure: &str, diagram: &str, list: bool, limit: Option<usize>) -> Outcome {
    let s = coloring_structure(structure)?;
    let d = load_diagram(diagram)?;
    let limits = ColoringLimits {
        max_carrier: guard(ColoringLimits::default().max_carrier)?,
        ..ColoringLimits::default()
    };
    let total = count_colorings_with(&d, &s, limits)?;
    let mut out = format!("colorings: {total}\n");
    if list {
        for c in enumerate_colorings_with(&d, &s, limit, limits)?.colorings {
            let row: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    Ok((out, true))
}

fn enumerate(text: &str, limit: Option<usize>) -> Outcome {
    let q = read_quandle(text)?;
    let bound = guard(DEFAULT_ENUM_LIMIT)?;
    let total = count_singquandles(&q, bound)?;
    let mut out = format!("total: {total}\n");
    if let Some(k) = limit {
        for (i, s) in enumerate_singquandles_bounded(&q, Some(k), bound)?.iter().enumerate() {
            let _ = write!(out, "# structure {}\n{}", i + 1, write_singquandle(s));
        }
    }
    Ok((out, true))
}

fn iso(a: &str, b: &str) -> Outcome {
    let s = read_singquandle(a)?;
    let t = read_singquandle(b)?;
    match find_isomorphism_bounded(&s, &t, guard(DEFAULT_ISO_LIMIT)?)? {
        Some(f) => {
            let map: Vec<String> = f.images().iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
            Ok((format!("isomorphic: yes\nmap: {}\n", map.join(" ")), true))
        }
        None => Ok(("isomorphic: no\n".into(), false)),
    }
}

fn fixtures(name: Option<&str>) -> Outcome {
    match name {
        Some(name) => Ok((fixture_info(name)?.text.to_string(), true)),
        None => {
            let width = FIXTURES.iter().map(|f| f.name.len()).max().unwrap_or(0);
            let out = FIXTURES
                .iter()
                .map(|f| format!("{:<width$}  {}\n", f.name, f.description))
                .collect();
            Ok((out, true))
        }
    }
}
