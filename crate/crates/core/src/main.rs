//! `degcomp`: command-line front end.
//!
//! Exit codes: 0 when the question was decided (yes or no), 1 for usage,
//! parse and other input errors, 2 when a resource limit stopped the
//! search, 3 when `--verify` or `verify` rejects a solution.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use degcomp::bench::{run_bench, BenchOp};
use degcomp::dce::{
    brute_force_solve, kernelize_kr, solve_e_plus, DceInstance, EditSolution, KrKernel, OpKind,
    SearchLimits,
};
use degcomp::dsc::{anonymize, anonymity_fulfills, dsc_solve, DscInstance};
use degcomp::generate::{gen_cubic, gen_from_reduction, gen_gnp, gen_planted_dce, gen_random_dce, rng};
use degcomp::io::{
    parse_graph, parse_instance, parse_solution, serialize_dce, serialize_graph, serialize_solution,
    Instance,
};
use degcomp::matching::f_factor;
use degcomp::nce::NceTable;
use degcomp::reductions::{reduce, ReductionKind};
use degcomp::winwin::{kernelize_r, KernelResult};
use degcomp::{Edge, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "degcomp", version, about = "Degree constraint editing and degree sequence completion")]
struct Cli {
    /// Seed for the generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Check every produced solution against its input before printing it.
    #[arg(long, global = true)]
    verify: bool,
    /// Largest number of candidate edit sets an exhaustive search may visit.
    #[arg(long, global = true)]
    limit: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a `dce` or `dsc` instance exactly.
    Solve { file: PathBuf },
    /// Kernelize an edge-addition instance.
    Kernelize {
        file: PathBuf,
        /// `kr` for the O(kr^2) kernel, `r` for the win-win kernel.
        #[arg(long, default_value = "kr", value_parser = ["kr", "r"])]
        param: String,
    },
    /// Feasible total increases of the number problem behind a `dce` file.
    Nce {
        file: PathBuf,
        /// Print a witness for this total instead of listing all totals.
        #[arg(long)]
        target: Option<usize>,
    },
    /// Find a spanning subgraph with prescribed degrees.
    Ffactor {
        file: PathBuf,
        /// Comma-separated degrees, one per vertex.
        #[arg(long, value_delimiter = ',', conflicts_with = "uniform")]
        f: Option<Vec<usize>>,
        /// The same degree for every vertex.
        #[arg(long)]
        uniform: Option<usize>,
    },
    /// Build a DCE instance from a graph via a hardness reduction.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        from: ReductionKind,
        /// Cover, independent set or clique size.
        #[arg(long)]
        h: usize,
        /// Comma-separated 1-based vertex cover for the clique reductions.
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<usize>>,
    },
    /// Add at most `s` edges so every degree occurs at least `k` times.
    Anonymize {
        file: PathBuf,
        #[arg(short = 'k')]
        k_anon: usize,
        #[arg(short = 's')]
        budget: usize,
    },
    /// Generate an instance or graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run an operation over every file of a directory and append JSONL records.
    Bench {
        corpus: PathBuf,
        #[arg(long, default_value = "solve")]
        op: BenchOp,
        #[arg(long, short = 'o')]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
    /// Check a solution file against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random DCE instance.
    Dce {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value = "e+", value_parser = parse_op)]
        op: OpKind,
    },
    /// Edge-addition yes-instance with a planted solution.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0.2)]
        density: f64,
    },
    /// Random 3-regular graph.
    Cubic {
        #[arg(long)]
        n: usize,
    },
    /// `G(n, p)` graph.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Reduction output on a generated source graph.
    Reduction {
        #[arg(long)]
        from: ReductionKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: usize,
    },
}

fn parse_op(s: &str) -> Result<OpKind, String> {
    OpKind::from_token(s).ok_or_else(|| format!("unknown operation `{s}` (e+, e-, v-)"))
}

enum Failure {
    Lib(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = Result<String, Failure>;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn limits(cli: &Cli) -> SearchLimits {
    let mut l = SearchLimits::default();
    if let Some(max) = cli.limit {
        l.max_space = max;
    }
    l
}

fn check_dce(inst: &DceInstance, sol: &EditSolution) -> Result<(), Failure> {
    sol.validate(inst)
        .map_err(|e| Failure::Verify(format!("solution rejected: {e}")))
}

fn check_dsc(inst: &DscInstance, edges: &[Edge]) -> Result<(), Failure> {
    if inst.accepts(edges) {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "{} added edges do not yield a {} degree sequence within budget {}",
            edges.len(),
            inst.property,
            inst.k
        )))
    }
}

fn solve(cli: &Cli, file: &Path) -> CliResult {
    let limits = limits(cli);
    match parse_instance(&read(file)?)? {
        Instance::Dce(inst) => {
            let sol = if inst.op == OpKind::EdgeAddition {
                solve_e_plus(&inst, &limits)?
            } else {
                brute_force_solve(&inst, &limits)?
            };
            if let (true, Some(s)) = (cli.verify, &sol) {
                check_dce(&inst, s)?;
            }
            Ok(serialize_solution(sol.as_ref()))
        }
        Instance::Dsc(inst) => {
            let edges = dsc_solve(&inst, &limits)?;
            if let (true, Some(e)) = (cli.verify, &edges) {
                check_dsc(&inst, e)?;
            }
            Ok(serialize_solution(edges.map(|e| EditSolution::additions(&e)).as_ref()))
        }
        Instance::Graph(_) => Err(invalid("a plain graph file poses no problem to solve").into()),
    }
}

fn dce_only(text: &str) -> Result<DceInstance, Error> {
    match parse_instance(text)? {
        Instance::Dce(inst) => Ok(inst),
        _ => Err(invalid("expected a `p dce` file")),
    }
}

fn origin_comment(origin: &[usize]) -> String {
    let mut out = String::from("c origin");
    for v in origin {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
    out
}

fn kernelize(cli: &Cli, file: &Path, param: &str) -> CliResult {
    let inst = dce_only(&read(file)?)?;
    let (instance, origin) = if param == "kr" {
        match kernelize_kr(&inst)? {
            KrKernel::TrivialNo(why) => return Ok(format!("c {why:?}\nNO\n")),
            KrKernel::Kernel { instance, origin } => (instance, origin),
        }
    } else {
        match kernelize_r(&inst)? {
            KernelResult::TrivialNo(why) => return Ok(format!("c {why:?}\nNO\n")),
            KernelResult::TrivialYes(sol) => {
                if cli.verify {
                    check_dce(&inst, &sol)?;
                }
                return Ok(serialize_solution(Some(&sol)));
            }
            KernelResult::Kernel { instance, origin } => (instance, origin),
        }
    };
    Ok(origin_comment(&origin) + &serialize_dce(&instance))
}

fn nce(file: &Path, target: Option<usize>) -> CliResult {
    let inst = dce_only(&read(file)?)?;
    let degrees = inst.graph.degrees();
    let k_max = target.unwrap_or(2 * inst.k);
    let table = NceTable::build(&degrees, inst.tau.lists(), k_max);
    Ok(match target {
        None => {
            let totals: Vec<String> = table
                .all_targets()
                .iter()
                .enumerate()
                .filter(|(_, &ok)| ok)
                .map(|(j, _)| j.to_string())
                .collect();
            format!("FEASIBLE {}\n", totals.join(" "))
        }
        Some(t) => match table.witness(t) {
            None => "NO\n".to_string(),
            Some(values) => {
                let values: Vec<String> = values.iter().map(usize::to_string).collect();
                format!("YES {}\n", values.join(" "))
            }
        },
    })
}

fn ffactor(cli: &Cli, file: &Path, f: Option<Vec<usize>>, uniform: Option<usize>) -> CliResult {
    let text = read(file)?;
    let g = parse_instance(&text)?.graph().clone();
    let f = match (f, uniform) {
        (Some(f), _) => f,
        (None, Some(c)) => vec![c; g.n()],
        (None, None) => return Err(invalid("give --f or --uniform").into()),
    };
    if f.len() != g.n() {
        return Err(invalid(format!("{} degrees for {} vertices", f.len(), g.n())).into());
    }
    let Some(edges) = f_factor(&g, &f) else {
        return Ok("NO\n".to_string());
    };
    if cli.verify {
        let h = Graph::from_edges(g.n(), &edges)?;
        if h.degrees() != f || !edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return Err(Failure::Verify("factor has wrong degrees or foreign edges".into()));
        }
    }
    let mut out = format!("YES {}\n", edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    Ok(out)
}

fn reduce_cmd(file: &Path, from: ReductionKind, h: usize, cover: Option<Vec<usize>>) -> CliResult {
    let g = parse_graph(&read(file)?)?;
    let cover: Option<Vec<usize>> = cover
        .map(|c| {
            c.into_iter()
                .map(|v| {
                    v.checked_sub(1)
                        .ok_or_else(|| invalid("cover vertices are numbered from 1"))
                })
                .collect::<Result<_, _>>()
        })
        .transpose()?;
    let out = reduce(from, &g, h, cover.as_deref())?;
    Ok(serialize_dce(&out.instance))
}

fn anonymize_cmd(cli: &Cli, file: &Path, k_anon: usize, budget: usize) -> CliResult {
    let g = parse_instance(&read(file)?)?.graph().clone();
    let edges = anonymize(&g, k_anon, budget, &limits(cli))?;
    if let (true, Some(e)) = (cli.verify, &edges) {
        let done = g.add_edges(e)?;
        if e.len() > budget || !anonymity_fulfills(&done.degree_sequence(), k_anon) {
            return Err(Failure::Verify("result is not anonymous within budget".into()));
        }
    }
    Ok(serialize_solution(edges.map(|e| EditSolution::additions(&e)).as_ref()))
}

fn gen(cli: &Cli, kind: &GenKind) -> CliResult {
    let seed = cli.seed;
    Ok(match *kind {
        GenKind::Dce { n, p, k, r, density, op } => {
            serialize_dce(&gen_random_dce(n, p, k, r, density, op, seed)?)
        }
        GenKind::Planted { n, p, k, r, density } => {
            serialize_dce(&gen_planted_dce(n, p, k, r, density, seed)?)
        }
        GenKind::Cubic { n } => serialize_graph(&gen_cubic(n, seed)?),
        GenKind::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid(format!("edge probability must lie in [0, 1], got {p}")).into());
            }
            serialize_graph(&gen_gnp(n, p, &mut rng(seed)))
        }
        GenKind::Reduction { from, n, h } => serialize_dce(&gen_from_reduction(from, n, h, seed)?.instance),
    })
}

fn verify(instance: &Path, solution: &Path) -> CliResult {
    let inst = parse_instance(&read(instance)?)?;
    let Some(sol) = parse_solution(&read(solution)?)? else {
        return Ok("c a NO answer carries no certificate\nOK\n".to_string());
    };
    match inst {
        Instance::Dce(d) => check_dce(&d, &sol)?,
        Instance::Dsc(d) => {
            if sol.added_edges().len() != sol.len() {
                return Err(Failure::Verify("degree sequence completion only adds edges".into()));
            }
            check_dsc(&d, &sol.added_edges())?;
        }
        Instance::Graph(_) => return Err(invalid("a plain graph file poses no problem").into()),
    }
    Ok("OK\n".to_string())
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Solve { file } => solve(cli, file),
        Command::Kernelize { file, param } => kernelize(cli, file, param),
        Command::Nce { file, target } => nce(file, *target),
        Command::Ffactor { file, f, uniform } => ffactor(cli, file, f.clone(), *uniform),
        Command::Reduce { file, from, h, cover } => reduce_cmd(file, *from, *h, cover.clone()),
        Command::Anonymize { file, k_anon, budget } => anonymize_cmd(cli, file, *k_anon, *budget),
        Command::Gen { kind } => gen(cli, kind),
        Command::Bench { corpus, op, out, workers } => {
            let recs = run_bench(corpus, *op, out, *workers, &limits(cli))?;
            Ok(format!("c {} records appended to {}\n", recs.len(), out.display()))
        }
        Command::Verify { instance, solution } => verify(instance, solution),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => 2,
                _ => 1,
            })
        }
    }
}
