use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use pvacl::algebra::parse_diffpoly;
use pvacl::graph::{reduce, Cocomposition, Digraph, EdgeImage, GraphVector, LineGraph};
use pvacl::perm::{enumerate_monotone, enumerate_shuffles};
use pvacl::pva::Pva;
use pvacl::sample::SampleSpec;
use pvacl::verify::{run_suite, SuiteConfig, SUITES};
use pvacl::Error;

#[derive(Parser)]
#[command(name = "pvacl", version, about = "Exact computations with the classical PVA operad and the Harrison complex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the monotone permutations of S_n starting at k.
    Monotone { n: usize, k: usize },
    /// List the (m,n)-shuffles.
    Shuffles { m: i64, n: i64 },
    /// Reduce a graph vector such as "[n=2; edges: 2>1] + 2 [n=2]" to line-basis coordinates.
    Reduce { vector: String },
    /// Cocompose a graph along consecutive blocks, e.g. cocompose "n=3; edges: 1>2, 2>3" 2,1.
    Cocompose {
        graph: String,
        #[arg(value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// The λ-bracket [a_λ b] of two differential polynomials.
    Bracket {
        a: String,
        b: String,
        #[arg(long, default_value = "gfz")]
        structure: String,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: monotone-lemmas, line-identities, operad-axioms, pva-axioms,
    /// master-square, hochschild, harrison-closure, chain-map, diagram.
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    max_degree: u32,
    #[arg(long, default_value_t = 2)]
    max_order: u32,
    #[arg(long, default_value_t = 3)]
    max_arity: usize,
    /// Sampled tuples per identity.
    #[arg(long, default_value_t = 16)]
    samples: usize,
    /// Bound for monotone-lemmas and line-identities.
    #[arg(long)]
    n: Option<usize>,
    /// A shipped structure name or the path of a descriptor file.
    #[arg(long, default_value = "gfz")]
    structure: String,
    /// Also write the text report here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write a JSON mirror of the report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn load_structure(s: &str) -> Result<Pva, Error> {
    if Pva::builtin_names().contains(&s) {
        return Pva::builtin(s);
    }
    let path = Path::new(s);
    if path.exists() {
        let src = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        return Pva::parse(&src);
    }
    Err(Error::Parse(format!(
        "'{s}' is neither a shipped structure ({}) nor a descriptor file",
        Pva::builtin_names().join(", ")
    )))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn monotone(n: usize, k: usize) -> Result<ExitCode, Error> {
    for m in enumerate_monotone(n, k)? {
        let drops: Vec<String> = m.drops().iter().map(|d| d.to_string()).collect();
        let sign = if m.drop_sign() > 0 { "+" } else { "-" };
        println!("{}  drops {{{}}}  dr {}  {sign}", m.perm(), drops.join(", "), m.drop_sum());
    }
    Ok(ExitCode::SUCCESS)
}

fn shuffles(m: i64, n: i64) -> Result<ExitCode, Error> {
    for s in enumerate_shuffles(m, n) {
        println!("{s}");
    }
    Ok(ExitCode::SUCCESS)
}

fn reduce_cmd(vector: &str) -> Result<ExitCode, Error> {
    let v: GraphVector = vector.parse()?;
    let r = reduce(&v);
    if r.is_zero() {
        println!("0");
    }
    for (g, c) in r.terms() {
        let line = LineGraph::from_digraph(g).map(|l| l.to_string()).unwrap_or_else(|| g.to_string());
        println!("{}  {line}", pvacl::algebra::rat::fmt_rat(c));
    }
    Ok(ExitCode::SUCCESS)
}

fn cocompose(graph: &str, sizes: &[usize]) -> Result<ExitCode, Error> {
    let g: Digraph = graph.parse()?;
    let c = Cocomposition::new(&g, sizes)?;
    let outer: Vec<String> = c.outer.edges().iter().map(|(a, b)| format!("{}>{}", a + 1, b + 1)).collect();
    println!("Δ0: n={}; edges: {}", c.outer.n(), outer.join(", "));
    if c.outer.to_simple().is_none() {
        println!("    (parallel edges: the composite vanishes on this graph)");
    }
    for (i, inner) in c.inner.iter().enumerate() {
        println!("Δ{}: {inner}", i + 1);
    }
    for ((a, b), image) in &c.edge_map {
        let to = match image {
            EdgeImage::Outer(e) => format!("Δ0 edge {}", e + 1),
            EdgeImage::Inner(i, (x, y)) => format!("Δ{} edge {}>{}", i + 1, x + 1, y + 1),
        };
        println!("{}>{} ↦ {to}", a + 1, b + 1);
    }
    for k in 0..g.n() {
        let blocks: Vec<String> = c.externally_connected(k)?.iter().map(|j| (j + 1).to_string()).collect();
        println!("X({}) = {{{}}}", k + 1, blocks.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn bracket(a: &str, b: &str, structure: &str) -> Result<ExitCode, Error> {
    let p = load_structure(structure)?;
    let (a, b) = (parse_diffpoly(a, p.names())?, parse_diffpoly(b, p.names())?);
    let br = p.bracket(&a, &b)?;
    println!("{}", br.fmt_with(p.names(), &["λ".to_string()]));
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    if !SUITES.contains(&args.suite.as_str()) {
        return Err(Error::Parse(format!(
            "unknown suite '{}' (expected one of: {})",
            args.suite,
            SUITES.join(", ")
        )));
    }
    let cfg = SuiteConfig {
        spec: SampleSpec {
            max_degree: args.max_degree,
            max_order: args.max_order,
            limit: args.samples,
            seed: args.seed,
        },
        max_arity: args.max_arity,
        n: args.n,
        structure: load_structure(&args.structure)?,
    };
    let start = Instant::now();
    let report = run_suite(&args.suite, &cfg)?;
    let text = report.to_string();
    print!("{text}");
    if let Some(path) = &args.output {
        write_file(path, &text)?;
    }
    if let Some(path) = &args.json {
        let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Invalid(e.to_string()))?;
        write_file(path, &(json + "\n"))?;
    }
    eprintln!("{} finished in {:.2?}", args.suite, start.elapsed());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Monotone { n, k } => monotone(*n, *k),
        Command::Shuffles { m, n } => shuffles(*m, *n),
        Command::Reduce { vector } => reduce_cmd(vector),
        Command::Cocompose { graph, sizes } => cocompose(graph, sizes),
        Command::Bracket { a, b, structure } => bracket(a, b, structure),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => code,
        Err(Error::CheckFailed(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
