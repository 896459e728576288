mod common;

use common::*;
use imenum::analysis::is_c4_free;
use imenum::dynamic::DynamicGraph;
use imenum::generate::{generate, GenSpec, SplitMix64};
use imenum::neighborhood::{check_c4free_local, Classifier};
use imenum::{EdgeId, Graph, VertexId};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all: Vec<(u32, u32)> = (0..n as u32).flat_map(|a| (a + 1..n as u32).map(move |b| (a, b))).collect();
        let len = all.len();
        proptest::sample::subsequence(all, 0..=len).prop_map(move |pairs| Graph::from_indexed(n, &pairs).unwrap())
    })
}

#[derive(Clone, Debug)]
enum Op {
    RemoveEdge(usize),
    RemoveVertex(usize),
    Mark,
    Rollback,
}

fn arb_ops() -> impl Strategy<Value = Vec<Op>> {
    prop::collection::vec(
        prop_oneof![
            4 => any::<usize>().prop_map(Op::RemoveEdge),
            1 => any::<usize>().prop_map(Op::RemoveVertex),
            2 => Just(Op::Mark),
            2 => Just(Op::Rollback),
        ],
        0..200,
    )
}

/// Applies `ops`, resolving indices against what is currently alive.
fn apply(g: &mut DynamicGraph, ops: &[Op], marks: &mut Vec<imenum::UndoMark>) {
    for op in ops {
        match *op {
            Op::RemoveEdge(i) => {
                let live = g.live_edges();
                if !live.is_empty() {
                    g.remove_edge(live[i % live.len()]).unwrap();
                }
            }
            Op::RemoveVertex(i) => {
                let alive: Vec<VertexId> =
                    (0..g.vertex_count() as u32).map(VertexId).filter(|&v| g.is_vertex_alive(v)).collect();
                if !alive.is_empty() {
                    g.remove_vertex(alive[i % alive.len()]).unwrap();
                }
            }
            Op::Mark => marks.push(g.mark()),
            Op::Rollback => {
                if let Some(m) = marks.pop() {
                    g.rollback(m).unwrap();
                }
            }
        }
        g.check_consistency().unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rollback_restores_initial_graph(g in arb_graph(10), ops in arb_ops()) {
        let mut dg = DynamicGraph::new(&g);
        let initial = dg.snapshot();
        let root = dg.mark();
        let mut marks = Vec::new();
        apply(&mut dg, &ops, &mut marks);
        while let Some(m) = marks.pop() {
            dg.rollback(m).unwrap();
        }
        dg.rollback(root).unwrap();
        prop_assert_eq!(dg.snapshot(), initial);
        prop_assert_eq!(dg.undo_len(), 0);
        dg.check_consistency().unwrap();
    }

    #[test]
    fn induced_matching_agrees_with_pairwise_check(g in arb_graph(9), bits in any::<u64>()) {
        let m: Vec<EdgeId> = (0..g.edge_count() as u32).filter(|i| bits >> (i % 64) & 1 == 1).map(EdgeId).collect();
        prop_assert_eq!(g.is_induced_matching(&m).unwrap(), pairwise_induced(&g, &m));
    }

    #[test]
    fn edge_distance_probe_matches_bfs(g in arb_graph(10), a in any::<usize>(), b in any::<usize>()) {
        prop_assume!(g.edge_count() > 0);
        let dg = DynamicGraph::new(&g);
        let e = EdgeId((a % g.edge_count()) as u32);
        let f = EdgeId((b % g.edge_count()) as u32);
        let d = live_edge_distance(&dg, e, f);
        for k in 0..=2 {
            prop_assert_eq!(dg.edge_distance_at_most(e, f, k).unwrap(), d.is_some_and(|d| d <= k));
        }
    }

    #[test]
    fn classification_partitions_radius_two(g in arb_graph(12), ops in arb_ops(), pick in any::<usize>()) {
        let mut dg = DynamicGraph::new(&g);
        let mut marks = Vec::new();
        let ops: Vec<Op> = ops.into_iter().filter(|op| !matches!(op, Op::RemoveVertex(_))).take(8).collect();
        apply(&mut dg, &ops, &mut marks);
        let candidates: Vec<VertexId> =
            (0..dg.vertex_count() as u32).map(VertexId).filter(|&v| dg.degree(v) > 0).collect();
        prop_assume!(!candidates.is_empty());
        let v = candidates[pick % candidates.len()];
        let c = Classifier::new(&dg).classify(&dg, v).unwrap();
        check_partition(&dg, v, &c)?;
    }
}

fn check_partition(
    dg: &DynamicGraph,
    v: VertexId,
    c: &imenum::neighborhood::PivotClassification,
) -> Result<(), TestCaseError> {
    let dist = live_distances(dg, v);
    let mut want = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for e in dg.live_edges() {
        let [a, b] = dg.endpoints(e);
        let (da, db) = (dist[a.index()].unwrap_or(u32::MAX), dist[b.index()].unwrap_or(u32::MAX));
        let (lo, hi) = (da.min(db), da.max(db));
        let slot = match (lo, hi) {
            (0, 1) => 0,
            (1, 1) => 1,
            (1, 2) => 2,
            (2, _) => 3,
            _ => continue,
        };
        want[slot].push(e);
    }
    let sorted = |v: &[EdgeId]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    prop_assert_eq!(sorted(&c.d01), sorted(&want[0]));
    prop_assert_eq!(sorted(&c.d11), sorted(&want[1]));
    prop_assert_eq!(sorted(&c.d12), sorted(&want[2]));
    prop_assert_eq!(sorted(&c.d2), sorted(&want[3]));
    prop_assert!(c.d01.windows(2).all(|w| w[0] < w[1]));
    // Sector of each pivot edge, straight from its definition.
    for (i, &e) in c.d01.iter().enumerate() {
        let expected: Vec<EdgeId> =
            want[3].iter().copied().filter(|&f| live_edge_distance(dg, e, f) == Some(1)).collect();
        prop_assert_eq!(sorted(c.sect2_at(i)), sorted(&expected));
    }
    Ok(())
}

#[test]
fn classification_partition_on_random_graphs_up_to_64() {
    let mut rng = SplitMix64::new(64);
    for _ in 0..40 {
        let n = 2 + rng.below(63) as usize;
        let m = rng.below(3 * n as u64) as usize;
        let g = random_graph(n, m, &mut rng);
        let dg = DynamicGraph::new(&g);
        let mut classifier = Classifier::new(&dg);
        for v in 0..n as u32 {
            let v = VertexId(v);
            if dg.degree(v) == 0 {
                continue;
            }
            let c = classifier.classify(&dg, v).unwrap();
            check_partition(&dg, v, &c).unwrap();
        }
    }
}

#[test]
fn sectors_cover_d2_and_checks_pass_on_girth5() {
    for seed in 0..10 {
        let g = generate(&GenSpec::girth5(40, 48, seed)).unwrap();
        assert!(is_c4_free(&g));
        let dg = DynamicGraph::new(&g);
        let mut classifier = Classifier::new(&dg);
        for v in 0..40 {
            let v = VertexId(v);
            if dg.degree(v) == 0 {
                continue;
            }
            let c = classifier.classify(&dg, v).unwrap();
            assert!(check_c4free_local(&c).is_empty());
            let mut covered: Vec<EdgeId> = (0..c.d01.len()).flat_map(|i| c.sect2_at(i).to_vec()).collect();
            covered.sort();
            covered.dedup();
            let mut d2 = c.d2.clone();
            d2.sort();
            assert_eq!(covered, d2);
        }
    }
}

#[test]
fn degree_index_fuzz_ten_thousand_ops() {
    let mut rng = SplitMix64::new(10_000);
    let g = random_graph(30, 90, &mut rng);
    let mut dg = DynamicGraph::new(&g);
    let initial = dg.snapshot();
    let root = dg.mark();
    let mut marks = Vec::new();
    for step in 0..10_000u32 {
        match rng.below(10) {
            0..=4 => {
                let live = dg.live_edges();
                if !live.is_empty() {
                    dg.remove_edge(live[rng.below(live.len() as u64) as usize]).unwrap();
                }
            }
            5 => {
                let v = VertexId(rng.below(30) as u32);
                if dg.is_vertex_alive(v) {
                    dg.remove_vertex(v).unwrap();
                }
            }
            6 | 7 => marks.push(dg.mark()),
            _ => {
                if let Some(m) = marks.pop() {
                    dg.rollback(m).unwrap();
                }
            }
        }
        if step % 7 == 0 {
            dg.check_consistency().unwrap();
        }
        if let Some(v) = dg.max_degree_vertex() {
            let max = (0..30).map(|u| dg.degree(VertexId(u))).max().unwrap();
            assert_eq!(dg.degree(v), max);
        } else {
            assert_eq!(dg.live_edge_count(), 0);
        }
    }
    while let Some(m) = marks.pop() {
        dg.rollback(m).unwrap();
    }
    dg.rollback(root).unwrap();
    dg.check_consistency().unwrap();
    assert_eq!(dg.snapshot(), initial);
    assert_eq!(dg.deletions(), dg.restorations());
}

#[test]
fn generator_is_reproducible() {
    for text in ["path 12 3", "cycle 9 1", "star 7 2", "tree 30 5", "girth5 50 60 11"] {
        let spec: GenSpec = text.parse().unwrap();
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        let pairs = |g: &Graph| g.edges().map(|(_, e)| e).collect::<Vec<_>>();
        assert_eq!(pairs(&a), pairs(&b), "{text}");
    }
    let a = generate(&GenSpec::girth5(50, 60, 1)).unwrap();
    let b = generate(&GenSpec::girth5(50, 60, 2)).unwrap();
    assert_ne!(a.edges().map(|(_, e)| e).collect::<Vec<_>>(), b.edges().map(|(_, e)| e).collect::<Vec<_>>());
}

#[test]
fn c4_detection_matches_exhaustive_search() {
    for g in random_suite(300, 10, 20, 0xc4) {
        assert_eq!(is_c4_free(&g), !has_c4_exhaustive(&g));
    }
}
