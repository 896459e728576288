//! Counters describing one enumeration run.

use crate::enumerate::{enumerate, EnumConfig, SolutionSink};
use crate::error::EnumError;
use crate::graph::Graph;
use crate::neighborhood::Violation;

/// Tallies of failed structural checks. All zero on C4-free inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaViolations {
    /// Distance-2 vertices not touching exactly one 1-2 edge.
    pub one_two_edges: u64,
    /// Pivot edges adjacent to more than one 1-1 edge.
    pub one_one_edges: u64,
    /// Iterations whose sector sum exceeded twice the 2-* edge count.
    pub sector_sum: u64,
    /// Children whose live edge set did not shrink.
    pub monotonicity: u64,
}

impl LemmaViolations {
    pub fn total(&self) -> u64 {
        self.one_two_edges + self.one_one_edges + self.sector_sum + self.monotonicity
    }

    pub(crate) fn record(&mut self, found: &[Violation]) {
        for v in found {
            match v {
                Violation::OneTwoEdgeCount { .. } => self.one_two_edges += 1,
                Violation::OneOneEdgeCount { .. } => self.one_one_edges += 1,
                Violation::SectorSum { .. } => self.sector_sum += 1,
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Nodes of the enumeration tree visited (for brute force: subsets tested).
    pub iterations: u64,
    pub solutions: u64,
    pub internal_iterations: u64,
    pub max_depth: u64,
    pub edge_deletions: u64,
    pub edge_restorations: u64,
    /// Sum over iterations of all live edges within distance 2 of the pivot.
    pub touched_total: u64,
    /// Sum over iterations of the pivot's sector sizes.
    pub sect_sum_total: u64,
    /// Sum over iterations of the pivot's 2-* edge count.
    pub d2_total: u64,
    pub violations: LemmaViolations,
}

impl EnumStats {
    /// `iterations <= 2 * solutions - 1`, the bound for a tree whose internal
    /// nodes all have at least two children.
    pub fn within_tree_bound(&self) -> bool {
        self.solutions >= 1 && self.iterations < 2 * self.solutions
    }
}

/// Runs the configured enumerator, returning the solution count and counters.
pub fn enumerate_with_stats<S: SolutionSink + ?Sized>(
    graph: &Graph,
    config: &EnumConfig,
    sink: &mut S,
) -> Result<(u64, EnumStats), EnumError> {
    let stats = enumerate(graph, config, sink)?;
    Ok((stats.solutions, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{Algorithm, Discard};

    #[test]
    fn empty_graph() {
        let g = Graph::from_indexed(0, &[]).unwrap();
        for algo in [Algorithm::General, Algorithm::C4Free] {
            let (n, s) = enumerate_with_stats(&g, &EnumConfig::new(algo), &mut Discard).unwrap();
            assert_eq!((n, s.iterations, s.edge_deletions), (1, 1, 0));
        }
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_indexed(2, &[(0, 1)]).unwrap();
        for algo in [Algorithm::General, Algorithm::C4Free] {
            let (n, s) = enumerate_with_stats(&g, &EnumConfig::new(algo), &mut Discard).unwrap();
            assert_eq!((n, s.iterations), (2, 3));
            assert!(s.within_tree_bound());
        }
    }

    #[test]
    fn cycle6_c4free_stats() {
        let pairs: Vec<(u32, u32)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Graph::from_indexed(6, &pairs).unwrap();
        let cfg = EnumConfig::new(Algorithm::C4Free).with_assertions(true);
        let (n, s) = enumerate_with_stats(&g, &cfg, &mut Discard).unwrap();
        assert_eq!(n, 10);
        assert!(s.iterations <= 19);
        assert_eq!(s.violations.total(), 0);
        assert!(s.sect_sum_total <= 2 * s.d2_total);
        assert_eq!(s.edge_deletions, s.edge_restorations);
    }
}
