//! `rootc`: verify, render, export and query.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for usage
//! errors (bad arguments, unknown check ids, invalid highlights, I/O).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use root_compress::export::{self, Export, ExportKind};
use root_compress::render::{self, Format, RenderSpec, Target};
use root_compress::verify::{self, CheckResult, Context};
use root_compress::{E6Model, E7Model, Error, IdealLattice, Root, RootSystem, Stratum};

const LAYOUTS: &str = "\
Layouts:
  cube_corner  Γ₇⁺ on an unfolded cube corner (6×6 grid). The c=0 face is top
               left at column a, row b; the b=0 face is below it at (a, c); the
               a=0 face is bottom right at (b, c). Digits 1..3 index rows and
               columns from the top left of each face.
  openmap7     the same cells labelled by h₇, with the vector underneath.
  square       Γ₆⁺ in a 4×4 grid: row from (x₁,x₂), column from (x₃,x₄),
               each pair read as binary with 1→0 and 2→1.
  hasse        Hₛ for --system and --stratum, one row per height, lowest at
               the bottom. Images under f are shown for E6 and E7.
  dynkin       the Dynkin diagram, v₂ drawn above v₄ for type E.
  tgraph       the T-graph on the whole target space, vertices on a circle.

--highlight shades 𝓛(v) inside the drawn set (cube_corner, square, tgraph),
the roots orthogonal to v (hasse) or the neighbours of vᵢ (dynkin).";

#[derive(Parser)]
#[command(name = "rootc", version, about = "Compressed root systems: exhaustive checks, figures and exports")]
struct Cli {
    /// Root system, e.g. e7, e6, e8, d4, a2
    #[arg(long, global = true)]
    system: Option<String>,
    /// Prime modulus for compression maps
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Output format (verify: text|json, render: svg|ascii|dot|json, export: json)
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write into this directory under a default file name
    #[arg(long, global = true, env = "ROOTC_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run exhaustive checks: `all` (default), a check id, or `list`
    Verify {
        scope: Option<String>,
        /// Per-check wall time on stderr
        #[arg(long)]
        timings: bool,
    },
    /// Draw a figure
    #[command(after_help = LAYOUTS)]
    Render(RenderArgs),
    /// Write JSON: roots | map | strata | ideals | group
    Export {
        what: Option<String>,
        /// Stratum for `ideals` (3..7)
        #[arg(long)]
        stratum: Option<usize>,
        /// Re-read an export, check it, and write it back out
        #[arg(long, conflicts_with = "what")]
        from: Option<PathBuf>,
    },
    /// Ask about single roots and vectors
    Query {
        #[command(subcommand)]
        query: Query,
    },
}

#[derive(Args)]
struct RenderArgs {
    /// cube_corner | square | hasse | openmap7 | dynkin | tgraph
    target: String,
    #[arg(long)]
    highlight: Option<String>,
    /// Stratum for hasse
    #[arg(long)]
    stratum: Option<usize>,
}

#[derive(Subcommand)]
enum Query {
    /// Stratum label of a root of E8 (shorter roots are padded)
    Stratum { root: String },
    /// Image f(β) under the standard E7 or E6 map
    Image { root: String },
    /// The positive root (or 0) mapping to a vector
    Preimage { vector: String },
    /// 𝓛(v) inside Γₛ⁺ (default: the whole target)
    Link {
        vector: String,
        #[arg(long)]
        stratum: Option<usize>,
    },
    /// ⟨β, β′⟩
    Inner { a: String, b: String },
    /// β ≤ β′ in the root poset
    Leq { a: String, b: String },
    /// ψₛ of the ideal generated by the given roots of Δₛ⁺
    Psi {
        #[arg(long)]
        stratum: usize,
        roots: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Checks(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(n)) => {
            eprintln!("rootc: {n} check(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("rootc: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { scope, timings } => cmd_verify(cli, scope.as_deref(), *timings),
        Command::Render(args) => cmd_render(cli, args),
        Command::Export { what, stratum, from } => cmd_export(cli, what.as_deref(), *stratum, from.as_deref()),
        Command::Query { query } => cmd_query(cli, query),
    }
}

/// Writes to --out, then --out-dir/default_name, then stdout.
fn emit(cli: &Cli, default_name: &str, text: &str) -> Result<(), Failure> {
    let path = match (&cli.out, &cli.out_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            fs::create_dir_all(dir)?;
            Some(dir.join(default_name))
        }
        _ => None,
    };
    match path {
        Some(p) => {
            fs::write(&p, text)?;
            eprintln!("wrote {}", p.display());
        }
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn system(cli: &Cli, default: &str) -> Result<RootSystem, Failure> {
    Ok(export::parse_system(cli.system.as_deref().unwrap_or(default))?)
}

fn stratum(s: usize) -> Result<Stratum, Failure> {
    Ok(Stratum::new(s)?)
}

fn cmd_verify(cli: &Cli, scope: Option<&str>, timings: bool) -> Result<(), Failure> {
    if scope == Some("list") {
        let text: String = verify::CHECKS.iter().map(|c| format!("{:<28}{}\n", c.id, c.about)).collect();
        return emit(cli, "checks.txt", &text);
    }
    let checks: Vec<&verify::Check> = match scope {
        None | Some("all") => verify::CHECKS.iter().collect(),
        Some(id) => vec![verify::find(id)?],
    };
    let json = match cli.format.as_deref() {
        None | Some("text") => false,
        Some("json") => true,
        Some(f) => return Err(Failure::Usage(format!("verify does not support format {f:?}"))),
    };
    let cx = Context::new();
    let start = Instant::now();
    let mut results: Vec<CheckResult> = Vec::new();
    for c in checks {
        let t = Instant::now();
        results.push(c.run(&cx));
        if timings {
            eprintln!("{:>9.3} ms  {}", t.elapsed().as_secs_f64() * 1e3, c.id);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let text = if json {
        let mut s = serde_json::to_string_pretty(&results).expect("plain data");
        s.push('\n');
        s
    } else {
        let mut s: String = results
            .iter()
            .map(|r| format!("{} {:<28}{}\n", if r.passed { "PASS" } else { "FAIL" }, r.id, r.detail))
            .collect();
        s.push_str(&format!("{} checks, {} passed, {} failed\n", results.len(), results.len() - failed, failed));
        s
    };
    emit(cli, if json { "verify.json" } else { "verify.txt" }, &text)?;
    if timings {
        eprintln!("total {:.3} s", start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        Err(Failure::Checks(failed))
    } else {
        Ok(())
    }
}

fn cmd_render(cli: &Cli, args: &RenderArgs) -> Result<(), Failure> {
    let target: Target =
        args.target.parse().map_err(|_| Failure::Usage(format!("unknown render target {:?}", args.target)))?;
    let format: Format = match cli.format.as_deref() {
        None => Format::Svg,
        Some(f) => f.parse().map_err(|_| Failure::Usage(format!("render does not support format {f:?}")))?,
    };
    let spec = RenderSpec {
        target,
        format,
        system: cli.system.clone(),
        stratum: args.stratum,
        highlight: args.highlight.clone(),
    };
    let fig = render::figure(&spec)?;
    let text = render::render(&spec)?;
    emit(cli, &format!("{}.{}", fig.name, format.extension()), &text)
}

fn cmd_export(cli: &Cli, what: Option<&str>, s: Option<usize>, from: Option<&Path>) -> Result<(), Failure> {
    if let Some(f) = cli.format.as_deref() {
        if f != "json" {
            return Err(Failure::Usage(format!("export only writes json, not {f:?}")));
        }
    }
    let (name, e) = match (what, from) {
        (_, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let e = Export::from_json(&text)?;
            if let Export::Map(m) = &e {
                m.import()?;
            }
            if e.to_json() != text {
                return Err(Failure::Usage(format!("{} is not in canonical form", path.display())));
            }
            let name =
                path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "export.json".into());
            (name, e)
        }
        (Some(w), None) => {
            let kind: ExportKind = w.parse().map_err(|_| Failure::Usage(format!("unknown export {w:?}")))?;
            let sys = system(cli, "E7")?;
            let st = s.map(stratum).transpose()?;
            let e = export::export(kind, &sys, cli.p, st)?;
            let name = match kind {
                ExportKind::Ideals => format!("ideals_{}.json", s.unwrap_or(7)),
                ExportKind::Group => "group.json".into(),
                _ => format!("{w}_{}.json", sys.name().to_lowercase()),
            };
            (name, e)
        }
        (None, None) => return Err(Failure::Usage("export needs a kind or --from".into())),
    };
    emit(cli, &name, &e.to_json())
}

enum Model {
    E7(E7Model),
    E6(E6Model),
}

impl Model {
    fn new(cli: &Cli) -> Result<Self, Failure> {
        let sys = system(cli, "E7")?;
        match sys.name().as_str() {
            "E7" => Ok(Model::E7(E7Model::standard())),
            "E6" => Ok(Model::E6(E6Model::standard())),
            other => Err(Failure::Usage(format!("no standard map for {other}; use E7 or E6"))),
        }
    }

    fn rank(&self) -> usize {
        match self {
            Model::E7(_) => 7,
            Model::E6(_) => 6,
        }
    }
}

fn parse_root(text: &str) -> Result<Root, Failure> {
    Ok(text.parse::<Root>()?)
}

fn cmd_query(cli: &Cli, q: &Query) -> Result<(), Failure> {
    let line = match q {
        Query::Stratum { root } => {
            let e8 = RootSystem::e(8)?;
            let r = parse_root(root)?;
            if r.rank() > 8 {
                return Err(Error::RankMismatch(r.rank(), 8).into());
            }
            let r = r.padded(8);
            if !e8.is_root(&r) {
                return Err(Error::NotARoot(r.to_string()).into());
            }
            e8.stratum(&r)?.value().to_string()
        }
        Query::Image { root } => {
            let m = Model::new(cli)?;
            let r = parse_root(root)?;
            let r = r.truncated(m.rank()).filter(|r| r.is_positive()).ok_or(Error::NotPositiveRoot(root.clone()))?;
            match &m {
                Model::E7(m) if m.system().is_positive_root(&r) => m.f(&r).to_string(),
                Model::E6(m) if m.system().is_root(&r) => m.f(&r).to_string(),
                _ => return Err(Error::NotPositiveRoot(r.to_string()).into()),
            }
        }
        Query::Preimage { vector } => match Model::new(cli)? {
            Model::E7(m) => m.f_inv(&m.vector(vector)?)?.to_string(),
            Model::E6(m) => m.f_inv(&m.vector(vector)?)?.to_string(),
        },
        Query::Link { vector, stratum: s } => {
            let m = Model::new(cli)?;
            let s = s.map(stratum).transpose()?;
            let link: Vec<String> = match &m {
                Model::E7(m) => {
                    let v = m.vector(vector)?;
                    let within = s.map(|s| m.gamma_plus(s));
                    m.link(&v)
                        .into_iter()
                        .filter(|x| within.as_ref().is_none_or(|w| w.contains(x)))
                        .map(|x| x.to_string())
                        .collect()
                }
                Model::E6(m) => {
                    let v = m.vector(vector)?;
                    let within = s.map(|s| m.gamma_plus(s));
                    m.link(&v)
                        .into_iter()
                        .filter(|x| within.as_ref().is_none_or(|w| w.contains(x)))
                        .map(|x| x.to_string())
                        .collect()
                }
            };
            format!("{} {}", link.len(), link.join(" "))
        }
        Query::Inner { a, b } => {
            let sys = system(cli, "E8")?;
            let (a, b) = (parse_root(a)?, parse_root(b)?);
            sys.checked_inner(&a.padded(sys.rank()), &b.padded(sys.rank()))?.to_string()
        }
        Query::Leq { a, b } => {
            let sys = system(cli, "E8")?;
            let (a, b) = (parse_root(a)?.padded(sys.rank()), parse_root(b)?.padded(sys.rank()));
            for r in [&a, &b] {
                if !sys.is_root(r) {
                    return Err(Error::NotARoot(r.to_string()).into());
                }
            }
            sys.leq(&a, &b).to_string()
        }
        Query::Psi { stratum: s, roots } => {
            let lattice = IdealLattice::new(stratum(*s)?)?;
            let gens = roots.iter().map(|r| parse_root(r).map(|r| r.padded(8))).collect::<Result<Vec<_>, _>>()?;
            let poset = lattice.poset();
            let mut bits = 0u64;
            for g in &gens {
                let i = poset.position(g).ok_or(Error::NotInSet { vector: g.to_string(), set: "Δₛ⁺" })?;
                bits |= poset.down_set(i).bits();
            }
            let ideal = poset.ideal_from_bits(bits)?;
            lattice.psi(&ideal)?.to_string()
        }
    };
    emit(cli, "query.txt", &format!("{line}\n"))
}
