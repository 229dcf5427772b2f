//! Batch runner over a directory of instance files.
//!
//! Records are JSON objects, one per line, appended to the output file in
//! completion order by a single writer thread.

use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::dce::{brute_force_solve, kernelize_kr, solve_e_plus, KrKernel, OpKind, SearchLimits};
use crate::dsc::dsc_solve;
use crate::error::{Error, Result};
use crate::io::{parse_instance, Instance};
use crate::winwin::{kernelize_r, KernelResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchOp {
    Solve,
    KernelKr,
    KernelR,
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchOp::Solve => "solve",
            BenchOp::KernelKr => "kernel-kr",
            BenchOp::KernelR => "kernel-r",
        })
    }
}

impl FromStr for BenchOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "solve" => Ok(BenchOp::Solve),
            "kernel-kr" | "kr" => Ok(BenchOp::KernelKr),
            "kernel-r" | "r" => Ok(BenchOp::KernelR),
            _ => Err(format!("unknown bench operation `{s}` (solve, kernel-kr, kernel-r)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Yes,
    No,
    /// A kernel was produced; the instance is not decided.
    Reduced,
    Error,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunParams {
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub op: Option<String>,
    pub property: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub instance: String,
    pub operation: BenchOp,
    pub params: RunParams,
    pub result: Outcome,
    pub solution_size: Option<usize>,
    pub vertices_before: Option<usize>,
    pub vertices_after: Option<usize>,
    pub wall_ms: f64,
    pub error: Option<String>,
}

struct Summary {
    result: Outcome,
    solution_size: Option<usize>,
    vertices_after: Option<usize>,
}

fn decided(size: Option<usize>) -> Summary {
    Summary {
        result: if size.is_some() { Outcome::Yes } else { Outcome::No },
        solution_size: size,
        vertices_after: None,
    }
}

fn execute(inst: Instance, op: BenchOp, limits: &SearchLimits) -> Result<Summary> {
    match (op, inst) {
        (BenchOp::Solve, Instance::Dce(d)) => {
            let sol = if d.op == OpKind::EdgeAddition {
                solve_e_plus(&d, limits)?
            } else {
                brute_force_solve(&d, limits)?
            };
            Ok(decided(sol.map(|s| s.len())))
        }
        (BenchOp::Solve, Instance::Dsc(d)) => Ok(decided(dsc_solve(&d, limits)?.map(|e| e.len()))),
        (BenchOp::KernelKr, Instance::Dce(d)) => Ok(match kernelize_kr(&d)? {
            KrKernel::TrivialNo(_) => decided(None),
            KrKernel::Kernel { instance, .. } => Summary {
                result: Outcome::Reduced,
                solution_size: None,
                vertices_after: Some(instance.n()),
            },
        }),
        (BenchOp::KernelR, Instance::Dce(d)) => Ok(match kernelize_r(&d)? {
            KernelResult::TrivialNo(_) => decided(None),
            KernelResult::TrivialYes(sol) => decided(Some(sol.len())),
            KernelResult::Kernel { instance, .. } => Summary {
                result: Outcome::Reduced,
                solution_size: None,
                vertices_after: Some(instance.n()),
            },
        }),
        (op, inst) => Err(Error::invalid(format!(
            "operation {op} does not apply to a {} file",
            match inst {
                Instance::Dce(_) => "dce",
                Instance::Dsc(_) => "dsc",
                Instance::Graph(_) => "graph",
            }
        ))),
    }
}

fn params_of(inst: &Instance) -> RunParams {
    match inst {
        Instance::Dce(d) => RunParams {
            k: Some(d.k),
            r: Some(d.r()),
            op: Some(d.op.to_string()),
            property: None,
        },
        Instance::Dsc(d) => RunParams {
            k: Some(d.k),
            property: Some(d.property.to_string()),
            ..RunParams::default()
        },
        Instance::Graph(_) => RunParams::default(),
    }
}

/// Runs `op` on a single file and never fails: problems end up in the record.
pub fn run_one(path: &Path, op: BenchOp, limits: &SearchLimits) -> RunRecord {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let start = Instant::now();
    let mut record = RunRecord {
        instance: name,
        operation: op,
        params: RunParams::default(),
        result: Outcome::Error,
        solution_size: None,
        vertices_before: None,
        vertices_after: None,
        wall_ms: 0.0,
        error: None,
    };
    let parsed = fs::read_to_string(path)
        .map_err(Error::from)
        .and_then(|text| parse_instance(&text));
    match parsed {
        Err(e) => record.error = Some(e.to_string()),
        Ok(inst) => {
            record.params = params_of(&inst);
            record.vertices_before = Some(inst.graph().n());
            match execute(inst, op, limits) {
                Ok(s) => {
                    record.result = s.result;
                    record.solution_size = s.solution_size;
                    record.vertices_after = s.vertices_after;
                }
                Err(e) => record.error = Some(e.to_string()),
            }
        }
    }
    record.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    record
}

/// Regular files directly inside `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

/// Runs `op` on every file of `corpus` with `workers` threads and appends one
/// record per file to `output`, creating it if needed. Returns the records in
/// the order they were written.
pub fn run_bench(
    corpus: &Path,
    op: BenchOp,
    output: &Path,
    workers: usize,
    limits: &SearchLimits,
) -> Result<Vec<RunRecord>> {
    let files = corpus_files(corpus)?;
    let file = OpenOptions::new().create(true).append(true).open(output)?;
    let mut out = BufWriter::new(file);
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<RunRecord>();
    let workers = workers.clamp(1, files.len().max(1));

    std::thread::scope(|scope| -> Result<Vec<RunRecord>> {
        for _ in 0..workers {
            let tx = tx.clone();
            let (files, next) = (&files, &next);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(path) = files.get(i) else { break };
                if tx.send(run_one(path, op, limits)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut written = Vec::with_capacity(files.len());
        for record in rx {
            let line = serde_json::to_string(&record)
                .map_err(|e| Error::InvariantViolation(format!("record encoding: {e}")))?;
            writeln!(out, "{line}")?;
            out.flush()?;
            written.push(record);
        }
        Ok(written)
    })
}

/// Parses a JSON-lines record file.
pub fn read_records(path: &Path) -> Result<Vec<RunRecord>> {
    fs::read_to_string(path)?
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::parse(i + 1, e.to_string())))
        .collect()
}
