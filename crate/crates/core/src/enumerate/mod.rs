//! Induced-matching enumerators sharing one sink contract.
//!
//! * [`enumerate_brute`]: every edge subset, filtered. Oracle for small graphs.
//! * [`enumerate_general`]: binary partition on a pivot edge, any graph.
//! * [`enumerate_c4free`]: multi-way partition on a max-degree pivot vertex,
//!   constant amortized time per solution when the graph has no 4-cycle.
//!
//! Each solution is delivered as a slice of edge ids in selection order; the
//! empty matching is always a solution.

mod brute;
mod c4free;
mod general;

pub use brute::{enumerate_brute, BRUTE_FORCE_EDGE_LIMIT};
pub use c4free::enumerate_c4free;
pub use general::enumerate_general;

use crate::analysis::is_c4_free;
use crate::dynamic::DynamicGraph;
use crate::error::EnumError;
use crate::graph::{EdgeId, Graph};
use crate::stats::EnumStats;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

pub trait SolutionSink {
    fn emit(&mut self, matching: &[EdgeId]) -> Control;
}

impl<F> SolutionSink for F
where
    F: FnMut(&[EdgeId]) -> Control,
{
    fn emit(&mut self, matching: &[EdgeId]) -> Control {
        self(matching)
    }
}

/// Discards solutions; the count lives in the returned stats.
#[derive(Debug, Default)]
pub struct Discard;

impl SolutionSink for Discard {
    fn emit(&mut self, _: &[EdgeId]) -> Control {
        Control::Continue
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    General,
    C4Free,
    Auto,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::General => "general",
            Algorithm::C4Free => "c4free",
            Algorithm::Auto => "auto",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Algorithm::Brute),
            "general" => Ok(Algorithm::General),
            "c4free" => Ok(Algorithm::C4Free),
            "auto" => Ok(Algorithm::Auto),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub algorithm: Algorithm,
    /// Run the per-iteration structural checks (superlinear; off for timing).
    pub assertion_mode: bool,
    /// Stop after this many solutions.
    pub solution_cutoff: Option<u64>,
    /// Maximum recursion depth of the partition enumerators.
    pub max_depth: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { algorithm: Algorithm::Auto, assertion_mode: false, solution_cutoff: None, max_depth: 1_000_000 }
    }
}

impl EnumConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        EnumConfig { algorithm, ..Default::default() }
    }

    pub fn with_assertions(mut self, on: bool) -> Self {
        self.assertion_mode = on;
        self
    }

    pub fn with_cutoff(mut self, cutoff: Option<u64>) -> Self {
        self.solution_cutoff = cutoff;
        self
    }

    /// `Auto` becomes `C4Free` iff the graph has no 4-cycle.
    pub fn resolve(&self, g: &Graph) -> Algorithm {
        match self.algorithm {
            Algorithm::Auto if is_c4_free(g) => Algorithm::C4Free,
            Algorithm::Auto => Algorithm::General,
            other => other,
        }
    }
}

/// Emission bookkeeping shared by all enumerators: checked counting and the cutoff.
pub(crate) struct Emitter<'a, S: SolutionSink + ?Sized> {
    sink: &'a mut S,
    cutoff: Option<u64>,
    pub(crate) solutions: u64,
}

impl<'a, S: SolutionSink + ?Sized> Emitter<'a, S> {
    pub(crate) fn new(sink: &'a mut S, cutoff: Option<u64>) -> Self {
        Emitter { sink, cutoff, solutions: 0 }
    }

    /// Emits one solution; `Ok(false)` means stop.
    #[inline]
    pub(crate) fn emit(&mut self, m: &[EdgeId]) -> Result<bool, EnumError> {
        if self.cutoff.is_some_and(|c| self.solutions >= c) {
            return Ok(false);
        }
        self.solutions = self.solutions.checked_add(1).ok_or(EnumError::CountOverflow)?;
        let go = self.sink.emit(m) == Control::Continue;
        Ok(go && !self.cutoff.is_some_and(|c| self.solutions >= c))
    }
}

/// Runs the configured enumerator over `graph`, streaming solutions to `sink`.
pub fn enumerate<S: SolutionSink + ?Sized>(
    graph: &Graph,
    config: &EnumConfig,
    sink: &mut S,
) -> Result<EnumStats, EnumError> {
    match config.resolve(graph) {
        Algorithm::Brute => enumerate_brute(graph, sink, config),
        Algorithm::General => enumerate_general(&mut DynamicGraph::new(graph), sink, config),
        Algorithm::C4Free => enumerate_c4free(&mut DynamicGraph::new(graph), sink, config),
        Algorithm::Auto => unreachable!(),
    }
}

/// Number of induced matchings (cutoff-bounded when configured).
pub fn count_induced_matchings(graph: &Graph, config: &EnumConfig) -> Result<u64, EnumError> {
    Ok(enumerate(graph, config, &mut Discard)?.solutions)
}
