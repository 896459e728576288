use super::{Emitter, EnumConfig, SolutionSink};
use crate::error::EnumError;
use crate::graph::{EdgeId, Graph};
use crate::stats::EnumStats;

/// Largest edge count the subset oracle accepts.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 25;

/// Tests every edge subset with [`Graph::is_induced_matching`], emitting the
/// induced matchings in increasing bitmask order.
pub fn enumerate_brute<S: SolutionSink + ?Sized>(
    g: &Graph,
    sink: &mut S,
    config: &EnumConfig,
) -> Result<EnumStats, EnumError> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(EnumError::TooLargeForOracle { edges: m, limit: BRUTE_FORCE_EDGE_LIMIT });
    }
    let mut emitter = Emitter::new(sink, config.solution_cutoff);
    let mut stats = EnumStats::default();
    let mut subset = Vec::with_capacity(m);
    for mask in 0u32..(1u32 << m) {
        stats.iterations += 1;
        subset.clear();
        subset.extend((0..m as u32).filter(|i| mask >> i & 1 == 1).map(EdgeId));
        if g.is_induced_matching(&subset)? && !emitter.emit(&subset)? {
            break;
        }
    }
    stats.solutions = emitter.solutions;
    Ok(stats)
}
