//! Command-line front end. Exit status is 0 exactly when every verification
//! the command performs passes; usage and input errors exit with 2.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treeadvice::bounded_advice::colored_map::colored_map_advice;
use treeadvice::bounded_advice::election_index::election_index;
use treeadvice::bounded_advice::scheme::scheme_params;
use treeadvice::families::{
    build_general_family, build_line_family, parse_descriptor, parse_family, witness_coloring, FamilySpec,
    LineFamilyParams, TreeFamily,
};
use treeadvice::harness::generate::{random_tree, random_tree_with_diameter};
use treeadvice::harness::run::{format_outputs, parse_outputs, run_election, verify_outputs, Scheme};
use treeadvice::harness::sweep::{advise, beta_sweep, sweep, write_csv, SchemeKind, SweepSpec};
use treeadvice::tree_core::{diameter_and_center, format_advice, format_tree, parse_advice, parse_tree, PortLabeledTree};

/// Worker threads for the parallel parts; unset means one per core.
const THREADS_VAR: &str = "TREEADVICE_THREADS";

#[derive(Parser)]
#[command(name = "treeadvice", version, about = "Leader election with advice in anonymous port-labeled trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a tree file.
    #[command(subcommand)]
    Gen(Gen),
    /// Compute advice for a tree.
    Advise(AdviseArgs),
    /// Run the τ-round election and report the outcome.
    Elect(ElectArgs),
    /// Check an outputs file against a tree.
    Verify(VerifyArgs),
    /// Smallest election time under λ-valent one-symbol advice, by exhaustive search.
    Xi(XiArgs),
    /// Both β thresholds over a grid of c, as CSV.
    Betas(BetasArgs),
    /// Run a TOML sweep descriptor and write CSV rows.
    Sweep(SweepArgs),
}

#[derive(Subcommand)]
enum Gen {
    /// Random tree with shuffled ports.
    Random {
        #[arg(long)]
        n: usize,
        /// Force this diameter.
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// A member of the line family.
    LineFamily {
        #[arg(long)]
        n_prime: usize,
        #[arg(long)]
        diameter: usize,
        #[arg(long)]
        tau: usize,
        #[command(flatten)]
        member: MemberArgs,
    },
    /// A member of the layered family described by a descriptor file.
    GeneralFamily {
        #[arg(long)]
        descriptor: PathBuf,
        #[command(flatten)]
        member: MemberArgs,
        /// Also write the witness coloring, one color per line.
        #[arg(long)]
        colors_out: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        lambda: usize,
    },
}

#[derive(Args)]
struct MemberArgs {
    /// Which half of the family (0 or 1).
    #[arg(long, default_value_t = 0)]
    half: usize,
    /// Comma-separated swap choices; the base tree when omitted.
    #[arg(long)]
    member: Option<String>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SchemeArgs {
    #[arg(long, value_parser = parse_scheme)]
    scheme: SchemeKind,
    #[arg(long)]
    tau: usize,
    #[arg(long, default_value_t = 2)]
    lambda: usize,
    /// Diameter-to-size ratio the bounded scheme is tuned for.
    #[arg(long, default_value_t = 0.5)]
    c: f64,
}

#[derive(Args)]
struct AdviseArgs {
    #[arg(long)]
    tree: PathBuf,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Colored-map advice from this coloring instead of a searched one.
    #[arg(long)]
    colors: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ElectArgs {
    #[arg(long)]
    tree: PathBuf,
    #[arg(long)]
    advice: PathBuf,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Where to write every node's output.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    tree: PathBuf,
    #[arg(long)]
    outputs: PathBuf,
}

#[derive(Args)]
struct XiArgs {
    #[arg(long)]
    tree: PathBuf,
    #[arg(long, default_value_t = 2)]
    lambda: usize,
    /// Refuse trees with more nodes than this.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long)]
    max_tau: Option<usize>,
}

#[derive(Args)]
struct BetasArgs {
    #[arg(long, default_values_t = [2])]
    lambda: Vec<usize>,
    /// Grid points `c = i/(points+1)`.
    #[arg(long, default_value_t = 99)]
    c_grid: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    descriptor: PathBuf,
    /// Overrides the descriptor's seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn parse_scheme(s: &str) -> Result<SchemeKind, String> {
    s.parse()
}

type CliResult = Result<bool, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn load_tree(path: &Path) -> Result<PortLabeledTree, String> {
    parse_tree(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_member(family: &TreeFamily, member: &MemberArgs) -> Result<(), String> {
    if member.half > 1 {
        return Err("--half must be 0 or 1".into());
    }
    let tree = match &member.member {
        None => family.base.clone(),
        Some(text) => {
            let descriptor = parse_descriptor(text).map_err(|e| e.to_string())?;
            family.member(member.half, &descriptor).map_err(|e| e.to_string())?
        }
    };
    write_out(member.out.as_deref(), &format_tree(&tree))
}

fn gen(cmd: Gen) -> CliResult {
    match cmd {
        Gen::Random { n, diameter, seed, out } => {
            if n == 0 {
                return Err("--n must be positive".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let tree = match diameter {
                None => random_tree(n, &mut rng),
                Some(d) if d < n && (d >= 2 || n == d + 1) => random_tree_with_diameter(n, d, &mut rng),
                Some(d) => return Err(format!("no tree on {n} nodes has diameter {d}")),
            };
            write_out(out.as_deref(), &format_tree(&tree))?;
        }
        Gen::LineFamily { n_prime, diameter, tau, member } => {
            let family = build_line_family(LineFamilyParams { n_prime, diameter, tau }).map_err(|e| e.to_string())?;
            write_member(&family, &member)?;
        }
        Gen::GeneralFamily { descriptor, member, colors_out, lambda } => {
            let family = match parse_family(&read(&descriptor)?).map_err(|e| e.to_string())? {
                FamilySpec::Line(p) => {
                    if colors_out.is_some() {
                        return Err("the line family has no witness coloring".into());
                    }
                    build_line_family(p)
                }
                FamilySpec::General(p) => {
                    let family = build_general_family(p).map_err(|e| e.to_string())?;
                    if let Some(path) = &colors_out {
                        let colors = witness_coloring(&family, &p, lambda).map_err(|e| e.to_string())?;
                        let text: String = colors.iter().map(|c| format!("{c}\n")).collect();
                        write_out(Some(path), &text)?;
                    }
                    Ok(family)
                }
            }
            .map_err(|e| e.to_string())?;
            write_member(&family, &member)?;
        }
    }
    Ok(true)
}

fn advise_cmd(args: AdviseArgs) -> CliResult {
    let tree = load_tree(&args.tree)?;
    let s = &args.scheme;
    let advice = match (&args.colors, s.scheme) {
        (Some(path), SchemeKind::ColoredMap) => {
            let colors: Vec<u8> = read(path)?
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| format!("bad color {t:?}")))
                .collect::<Result<_, _>>()?;
            colored_map_advice(&tree, &colors, s.tau, s.lambda).map_err(|e| e.to_string())?
        }
        (Some(_), _) => return Err("--colors only applies to --scheme colored-map".into()),
        (None, kind) => advise(&tree, kind, s.tau, s.lambda, s.c).map_err(|e| e.to_string())?.0,
    };
    write_out(args.out.as_deref(), &format_advice(&advice))?;
    Ok(true)
}

fn elect_cmd(args: ElectArgs) -> CliResult {
    let tree = load_tree(&args.tree)?;
    let advice = parse_advice(&read(&args.advice)?, tree.node_count()).map_err(|e| e.to_string())?;
    let s = &args.scheme;
    let scheme = match s.scheme {
        SchemeKind::Unbounded => Scheme::Unbounded,
        SchemeKind::ColoredMap => Scheme::ColoredMap,
        SchemeKind::Bounded => Scheme::Bounded(scheme_params(&tree, s.tau, s.lambda, s.c).map_err(|e| e.to_string())?),
    };
    let outcome = run_election(&tree, &advice, &scheme, s.tau);
    if let Some(path) = &args.out {
        write_out(Some(path), &format_outputs(&outcome.outputs))?;
    }
    let info = diameter_and_center(&tree);
    println!("scheme {}", scheme.name());
    println!("n {} diameter {} tau {}", tree.node_count(), info.diameter, s.tau);
    println!("advice size {} valency {}", outcome.size, outcome.valency);
    println!(
        "all_simple {} common_endpoint {} equals_root {}",
        outcome.flags.all_simple, outcome.flags.common_endpoint, outcome.flags.equals_root
    );
    match outcome.elected {
        Some(v) => println!("elected {v} (root {})", info.root),
        None => println!("elected none (root {})", info.root),
    }
    println!("node failures {}", outcome.failures());
    println!("wall {:.3}s", outcome.wall.as_secs_f64());
    println!("{}", if outcome.passed() { "PASS" } else { "FAIL" });
    Ok(outcome.passed())
}

fn verify_cmd(args: VerifyArgs) -> CliResult {
    let tree = load_tree(&args.tree)?;
    let outputs = parse_outputs(&read(&args.outputs)?)?;
    if outputs.len() != tree.node_count() {
        return Err(format!("{} outputs for {} nodes", outputs.len(), tree.node_count()));
    }
    let failed = outputs.iter().filter(|o| o.is_none()).count();
    let paths: Vec<_> = outputs.into_iter().map(Option::unwrap_or_default).collect();
    let mut flags = verify_outputs(&tree, &paths);
    if failed > 0 {
        flags.all_simple = false;
        flags.common_endpoint = false;
        flags.equals_root = false;
    }
    println!("all_simple {} common_endpoint {} equals_root {}", flags.all_simple, flags.common_endpoint, flags.equals_root);
    println!("{}", if flags.passed() { "PASS" } else { "FAIL" });
    Ok(flags.passed())
}

fn xi_cmd(args: XiArgs) -> CliResult {
    let tree = load_tree(&args.tree)?;
    if tree.node_count() > args.max_n {
        return Err(format!("{} nodes exceed --max-n {}", tree.node_count(), args.max_n));
    }
    let cert = election_index(&tree, args.lambda, args.max_tau).map_err(|e| e.to_string())?;
    println!("xi {}", cert.tau);
    println!("leader {}", cert.leader);
    println!("colors {}", cert.colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
    Ok(true)
}

fn betas_cmd(args: BetasArgs) -> CliResult {
    let rows = beta_sweep(&args.lambda, args.c_grid).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows).map_err(|e| e.to_string())?;
    write_out(args.out.as_deref(), &String::from_utf8(buf).unwrap())?;
    Ok(true)
}

fn sweep_cmd(args: SweepArgs) -> CliResult {
    let mut spec = SweepSpec::from_toml(&read(&args.descriptor)?).map_err(|e| e.to_string())?;
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    let rows = sweep(&spec);
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows).map_err(|e| e.to_string())?;
    write_out(args.out.as_deref(), &String::from_utf8(buf).unwrap())?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    eprintln!("{} rows, {failed} failed", rows.len());
    Ok(failed == 0)
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = value.parse().map_err(|_| format!("{THREADS_VAR}={value:?} is not a count"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Gen(g) => gen(g),
        Command::Advise(a) => advise_cmd(a),
        Command::Elect(a) => elect_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Xi(a) => xi_cmd(a),
        Command::Betas(a) => betas_cmd(a),
        Command::Sweep(a) => sweep_cmd(a),
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
