use super::{Emitter, EnumConfig, SolutionSink};
use crate::dynamic::{DynamicGraph, UndoMark};
use crate::error::EnumError;
use crate::graph::EdgeId;
use crate::stats::EnumStats;

struct Frame {
    pivot: EdgeId,
    mark: UndoMark,
    include_done: bool,
    live_at_entry: usize,
}

/// Binary partition on a pivot edge: the lowest-id live edge at a maximum
/// degree vertex. The exclude branch drops the pivot edge; the include branch
/// adds it to the matching and drops every live edge within distance 1.
///
/// Distance for the include branch is measured in the original graph: an
/// excluded edge no longer carries candidates but still joins its endpoints.
///
/// The graph is restored to its entry state on every return path.
pub fn enumerate_general<S: SolutionSink + ?Sized>(
    g: &mut DynamicGraph,
    sink: &mut S,
    config: &EnumConfig,
) -> Result<EnumStats, EnumError> {
    let entry = g.mark();
    let (del0, res0) = (g.deletions(), g.restorations());
    let mut run = General {
        emitter: Emitter::new(sink, config.solution_cutoff),
        stats: EnumStats::default(),
        stamp: vec![0; g.edge_count()],
        epoch: 0,
        conflicts: Vec::new(),
    };
    let result = run.search(g, config);
    g.rollback(entry)?;
    run.stats.solutions = run.emitter.solutions;
    run.stats.edge_deletions = g.deletions() - del0;
    run.stats.edge_restorations = g.restorations() - res0;
    result.map(|()| run.stats)
}

struct General<'a, S: SolutionSink + ?Sized> {
    emitter: Emitter<'a, S>,
    stats: EnumStats,
    stamp: Vec<u32>,
    epoch: u32,
    conflicts: Vec<EdgeId>,
}

impl<S: SolutionSink + ?Sized> General<'_, S> {
    fn search(&mut self, g: &mut DynamicGraph, config: &EnumConfig) -> Result<(), EnumError> {
        let mut frames: Vec<Frame> = Vec::new();
        let mut matching: Vec<EdgeId> = Vec::new();
        'enter: loop {
            self.stats.iterations += 1;
            self.stats.max_depth = self.stats.max_depth.max(frames.len() as u64 + 1);
            if config.assertion_mode {
                if let Some(parent) = frames.last() {
                    if g.live_edge_count() >= parent.live_at_entry {
                        self.stats.violations.monotonicity += 1;
                    }
                }
            }
            if g.live_edge_count() == 0 {
                if !self.emitter.emit(&matching)? {
                    return Ok(());
                }
            } else {
                if frames.len() >= config.max_depth {
                    return Err(EnumError::DepthLimitExceeded(config.max_depth));
                }
                self.stats.internal_iterations += 1;
                let v = g.max_degree_vertex().expect("live edges imply a pivot");
                // Adjacency lists are ordered by edge id.
                let (_, pivot) = g.neighbors(v).next().expect("pivot has an edge");
                let live_at_entry = g.live_edge_count();
                let mark = g.mark();
                g.hide_edge(pivot);
                frames.push(Frame { pivot, mark, include_done: false, live_at_entry });
                continue 'enter;
            }

            while let Some(frame) = frames.last_mut() {
                g.rollback(frame.mark)?;
                if frame.include_done {
                    matching.pop();
                    frames.pop();
                    continue;
                }
                frame.include_done = true;
                frame.mark = g.mark();
                let pivot = frame.pivot;
                self.gather_conflicts(g, pivot);
                for &f in &self.conflicts {
                    g.hide_edge(f);
                }
                matching.push(pivot);
                continue 'enter;
            }
            return Ok(());
        }
    }

    /// Collects every live edge within original distance 1 of `e`, `e` included.
    fn gather_conflicts(&mut self, g: &DynamicGraph, e: EdgeId) {
        if self.epoch == u32::MAX {
            self.stamp.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.conflicts.clear();
        let base = g.original();
        for x in base.endpoints(e) {
            for &(y, f) in base.neighbors(x) {
                if self.stamp[f.index()] != self.epoch {
                    self.stamp[f.index()] = self.epoch;
                    if g.is_edge_alive(f) {
                        self.conflicts.push(f);
                    }
                }
                for &(_, h) in base.neighbors(y) {
                    if self.stamp[h.index()] != self.epoch {
                        self.stamp[h.index()] = self.epoch;
                        if g.is_edge_alive(h) {
                            self.conflicts.push(h);
                        }
                    }
                }
            }
        }
    }
}
