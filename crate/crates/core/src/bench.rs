//! Benchmark harness: generated graphs, median wall time per solution, CSV rows.

use std::io::Write;
use std::time::Instant;

use crate::dynamic::DynamicGraph;
use crate::enumerate::{enumerate_brute, enumerate_c4free, enumerate_general, Algorithm, Discard, EnumConfig};
use crate::error::BenchError;
use crate::generate::{generate, GenSpec};
use crate::stats::EnumStats;

pub const CSV_HEADER: &str =
    "family,n,m,algorithm,solutions,iterations,wall_time_ns,ns_per_solution,deletions,cutoff_applied";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub solutions: u64,
    pub iterations: u64,
    pub wall_time_ns: u64,
    pub ns_per_solution: f64,
    pub deletions: u64,
    pub cutoff_applied: bool,
}

impl BenchRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.3},{},{}",
            self.family,
            self.n,
            self.m,
            self.algorithm.name(),
            self.solutions,
            self.iterations,
            self.wall_time_ns,
            self.ns_per_solution,
            self.deletions,
            self.cutoff_applied
        )
    }
}

/// For each spec and algorithm in order: generate the graph, run once to warm
/// up, then time `repeats` runs (at least one) and keep the median.
pub fn bench(
    specs: &[GenSpec],
    algorithms: &[Algorithm],
    cutoff: Option<u64>,
    repeats: usize,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::with_capacity(specs.len() * algorithms.len());
    for spec in specs {
        let graph = generate(spec)?;
        for &requested in algorithms {
            let config = EnumConfig::new(requested).with_cutoff(cutoff);
            let algorithm = config.resolve(&graph);
            let mut dynamic = DynamicGraph::new(&graph);
            let mut run = || -> Result<EnumStats, BenchError> {
                Ok(match algorithm {
                    Algorithm::Brute => enumerate_brute(&graph, &mut Discard, &config)?,
                    Algorithm::General => enumerate_general(&mut dynamic, &mut Discard, &config)?,
                    _ => enumerate_c4free(&mut dynamic, &mut Discard, &config)?,
                })
            };
            let mut stats = run()?;
            let mut times = Vec::with_capacity(repeats.max(1));
            for _ in 0..repeats.max(1) {
                let start = Instant::now();
                stats = run()?;
                times.push(start.elapsed().as_nanos() as u64);
            }
            times.sort_unstable();
            let wall_time_ns = times[times.len() / 2];
            rows.push(BenchRow {
                family: spec.family.name().to_owned(),
                n: spec.n,
                m: graph.edge_count(),
                algorithm,
                solutions: stats.solutions,
                iterations: stats.iterations,
                wall_time_ns,
                ns_per_solution: wall_time_ns as f64 / stats.solutions.max(1) as f64,
                deletions: stats.edge_deletions,
                cutoff_applied: cutoff.is_some_and(|c| stats.solutions >= c),
            });
        }
    }
    Ok(rows)
}

/// Writes the header and one LF-terminated line per row.
pub fn write_csv<W: Write>(rows: &[BenchRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv_line())?;
    }
    Ok(())
}
