use super::{Emitter, EnumConfig, SolutionSink};
use crate::dynamic::{DynamicGraph, UndoMark};
use crate::error::EnumError;
use crate::graph::EdgeId;
use crate::neighborhood::{check_c4free_local, Classifier, PivotClassification};
use crate::stats::EnumStats;

struct Frame {
    cls: PivotClassification,
    /// Taken before the pivot edges go; restores the whole iteration.
    outer: Option<UndoMark>,
    /// Taken before a sector goes; restores one type-1 child.
    inner: Option<UndoMark>,
    /// Children started so far: 1 after the 0-child, 1 + i after pivot edge i.
    started: usize,
    live_at_entry: usize,
}

/// Multi-way partition around a maximum-degree pivot `v`.
///
/// The 0-child sees the graph without the edges at `v`. After it returns, the
/// 1-1 and 1-2 edges go too, leaving `G \ N[v]`; the child for pivot edge
/// `e_i` then additionally loses the sector of `e_i` and takes `e_i` into the
/// matching. Children run in order 0, then pivot edges by ascending id.
///
/// Correct on any graph. Each iteration touches only edges within distance 2
/// of the pivot, and on C4-free graphs the total work is linear in the number
/// of iterations, which is at most twice the number of solutions.
///
/// With `assertion_mode`, every iteration runs [`check_c4free_local`] and a
/// violation aborts with [`EnumError::NotC4Free`].
pub fn enumerate_c4free<S: SolutionSink + ?Sized>(
    g: &mut DynamicGraph,
    sink: &mut S,
    config: &EnumConfig,
) -> Result<EnumStats, EnumError> {
    let entry = g.mark();
    let (del0, res0) = (g.deletions(), g.restorations());
    let mut emitter = Emitter::new(sink, config.solution_cutoff);
    let mut stats = EnumStats::default();
    let result = search(g, config, &mut emitter, &mut stats);
    g.rollback(entry)?;
    stats.solutions = emitter.solutions;
    stats.edge_deletions = g.deletions() - del0;
    stats.edge_restorations = g.restorations() - res0;
    result.map(|()| stats)
}

fn search<S: SolutionSink + ?Sized>(
    g: &mut DynamicGraph,
    config: &EnumConfig,
    emitter: &mut Emitter<'_, S>,
    stats: &mut EnumStats,
) -> Result<(), EnumError> {
    let mut classifier = Classifier::new(g);
    // Frames are kept after use so their buffers are reused at the same depth.
    let mut frames: Vec<Frame> = Vec::new();
    let mut depth = 0usize;
    let mut matching: Vec<EdgeId> = Vec::new();

    'enter: loop {
        stats.iterations += 1;
        stats.max_depth = stats.max_depth.max(depth as u64 + 1);
        if config.assertion_mode && depth > 0 && g.live_edge_count() >= frames[depth - 1].live_at_entry {
            stats.violations.monotonicity += 1;
        }

        if g.live_edge_count() == 0 {
            if !emitter.emit(&matching)? {
                return Ok(());
            }
        } else {
            if depth >= config.max_depth {
                return Err(EnumError::DepthLimitExceeded(config.max_depth));
            }
            stats.internal_iterations += 1;
            if frames.len() == depth {
                frames.push(Frame {
                    cls: PivotClassification::default(),
                    outer: None,
                    inner: None,
                    started: 0,
                    live_at_entry: 0,
                });
            }
            let frame = &mut frames[depth];
            let v = g.max_degree_vertex().expect("live edges imply a pivot");
            classifier.classify_into(g, v, &mut frame.cls).expect("max-degree pivot is alive with positive degree");
            let cls = &frame.cls;
            stats.touched_total += cls.touched() as u64;
            stats.d2_total += cls.d2.len() as u64;
            stats.sect_sum_total += cls.sect_sum() as u64;
            if config.assertion_mode {
                let violations = check_c4free_local(cls);
                if !violations.is_empty() {
                    stats.violations.record(&violations);
                    let detail: Vec<String> = violations.iter().map(|x| x.to_string()).collect();
                    return Err(EnumError::NotC4Free(detail.join("; ")));
                }
            }
            frame.live_at_entry = g.live_edge_count();
            frame.outer = Some(g.mark());
            frame.inner = None;
            frame.started = 1;
            for &e in &frame.cls.d01 {
                g.hide_edge(e);
            }
            depth += 1;
            continue 'enter;
        }

        while depth > 0 {
            let frame = &mut frames[depth - 1];
            if frame.started == 1 {
                for &e in frame.cls.d11.iter().chain(&frame.cls.d12) {
                    g.hide_edge(e);
                }
            } else {
                matching.pop();
                g.rollback(frame.inner.take().expect("type-1 child has a mark"))?;
            }
            let i = frame.started - 1;
            if i < frame.cls.d01.len() {
                frame.inner = Some(g.mark());
                for &f in frame.cls.sect2_at(i) {
                    g.hide_edge(f);
                }
                matching.push(frame.cls.d01[i]);
                frame.started += 1;
                continue 'enter;
            }
            g.rollback(frame.outer.take().expect("iteration has a mark"))?;
            depth -= 1;
        }
        return Ok(());
    }
}
