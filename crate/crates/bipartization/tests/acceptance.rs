//! Release gate: one test per shipped guarantee, each reported on its own
//! pass/fail line by the test harness. These run the heavy exhaustive
//! sweeps at full scale, so the suite takes tens of minutes on one core.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::process::{Command, Stdio};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bipartization::{
    bipartize, block_decomposition, covering_number, gamma, invert_bipartization,
    max_matching_bipartite, parse_graph6, run_suite, unit_edge_weighting, write_graph6,
    BipartiteGraph, CliqueWeighting, Graph, Side, Suite, SuiteOutcome, VerifyConfig,
};

mod fixtures {
    use bipartization::{CliqueWeighting, Graph, VertexSet};

    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    pub fn paw_weighting() -> CliqueWeighting {
        CliqueWeighting::from_pairs(
            &paw(),
            &[
                (vec![0], 1),
                (vec![1], 1),
                (vec![2], 2),
                (vec![0, 1], 3),
                (vec![1, 2], 2),
                (vec![2, 3], 3),
                (vec![0, 1, 2], 1),
            ],
        )
        .unwrap()
    }

    pub fn paw_tree_weighting() -> CliqueWeighting {
        CliqueWeighting::from_pairs(
            &paw(),
            &[
                (vec![0], 1),
                (vec![1], 2),
                (vec![3], 2),
                (vec![2, 3], 1),
                (vec![0, 1, 2], 1),
            ],
        )
        .unwrap()
    }

    pub fn bilabeled_tree() -> Graph {
        Graph::from_edges(
            11,
            &[
                (4, 0),
                (0, 5),
                (5, 1),
                (1, 6),
                (1, 7),
                (5, 2),
                (2, 9),
                (9, 3),
                (3, 8),
                (3, 10),
            ],
        )
        .unwrap()
    }

    pub fn bilabeled_tree_sides() -> (VertexSet, VertexSet) {
        (
            VertexSet::from_iter([0, 1, 2, 3]),
            VertexSet::from_iter([4, 5, 6, 7, 8, 9, 10]),
        )
    }
}

fn config(max_n: usize) -> VerifyConfig {
    VerifyConfig {
        max_n,
        seed: 1729,
        workers: None,
        corpus: None,
    }
}

fn assert_clean(outcome: &SuiteOutcome) {
    assert!(
        outcome.failures.is_empty(),
        "suite {} produced {} failures; first: {} / {} / {}",
        outcome.suite,
        outcome.failures.len(),
        outcome.failures[0].graph6,
        outcome.failures[0].weighting,
        outcome.failures[0].message,
    );
}

/// Sorted multiset of (clique size, weight) pairs: a labeling-independent
/// signature of a weighting.
fn weighting_signature(f: &CliqueWeighting) -> Vec<(usize, u64)> {
    let mut sig: Vec<(usize, u64)> = f.iter().map(|(k, w)| (k.len(), w)).collect();
    sig.sort_unstable();
    sig
}

/// Sorted block-size profile of a graph.
fn block_profile(g: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = block_decomposition(g).blocks.iter().map(|b| b.len()).collect();
    sizes.sort_unstable();
    sizes
}

#[test]
fn expansion_matches_reference_counts() {
    // The 13-copy weighting of the paw graph expands to 17 vertices and
    // 23 edges; vertex and edge counts follow the closed formulas
    // |V| = n + Σ f(K) and |E| = Σ f(K)·|K|.
    let f = fixtures::paw_weighting();
    let b = bipartize(&f);
    assert_eq!(b.graph().n(), 17);
    assert_eq!(b.graph().edge_count(), 23);
    assert_eq!(b.side_a().len(), 4);
    assert_eq!(b.side_b().len(), 13);

    // Weight 1 on every edge gives the subdivision graph: 8 vertices,
    // 8 edges, every copy vertex of degree exactly 2, one per host edge.
    let h = fixtures::paw();
    let g = unit_edge_weighting(&h);
    let s = bipartize(&g);
    assert_eq!(s.graph().n(), 8);
    assert_eq!(s.graph().edge_count(), 8);
    let mut subdivided_edges: Vec<Vec<usize>> = Vec::new();
    for v in s.side_b().iter() {
        assert_eq!(s.graph().degree(v), 2, "copy vertex {v}");
        let ends: Vec<usize> = s.graph().adj(v).iter().collect();
        assert!(h.has_edge(ends[0], ends[1]));
        subdivided_edges.push(ends);
    }
    subdivided_edges.sort();
    subdivided_edges.dedup();
    assert_eq!(subdivided_edges.len(), h.edge_count(), "one copy per edge");
}

#[test]
fn reference_tree_inverts_on_both_sides() {
    let (side_a, side_b) = fixtures::bilabeled_tree_sides();
    let g = BipartiteGraph::new(fixtures::bilabeled_tree(), side_a, side_b).unwrap();

    // Host side A: the paw graph (one triangle block, one edge block)
    // carrying the tree weighting of the fixtures.
    let inv = invert_bipartization(&g, Side::A).unwrap();
    assert_eq!(inv.h.n(), 4);
    assert_eq!(block_profile(&inv.h), vec![2, 3]);
    assert_eq!(
        weighting_signature(&inv.f),
        weighting_signature(&fixtures::paw_tree_weighting())
    );
    assert!(inv.roundtrip_matches(&g), "A-side inversion must rebuild G");

    // Host side B: two triangles joined through a path of cut vertices,
    // weighted with exactly one copy per block and nothing else.
    let inv = invert_bipartization(&g, Side::B).unwrap();
    assert_eq!(inv.h.n(), 7);
    assert_eq!(block_profile(&inv.h), vec![2, 2, 3, 3]);
    assert_eq!(
        weighting_signature(&inv.f),
        vec![(2, 1), (2, 1), (3, 1), (3, 1)]
    );
    assert!(inv.roundtrip_matches(&g), "B-side inversion must rebuild G");
}

#[test]
fn inversion_roundtrip_exhaustive_to_n8() {
    let outcome = run_suite(Suite::Thm2, &config(8));
    assert_clean(&outcome);
    assert!(
        outcome.checked > 2_000_000,
        "expected every connected bipartite graph up to order 8, saw {}",
        outcome.checked
    );
}

#[test]
fn tree_characterization_equals_direct_test_to_n5() {
    let outcome = run_suite(Suite::Thm4, &config(5));
    assert_clean(&outcome);
    assert!(
        outcome.checked > 4_000_000,
        "sweep shrank unexpectedly: {}",
        outcome.checked
    );
}

#[test]
fn block_count_identity_holds() {
    let outcome = run_suite(Suite::Lemma4, &config(7));
    assert_clean(&outcome);
}

#[test]
fn family_three_way_equivalence_to_n8() {
    let outcome = run_suite(Suite::Lemma5, &config(8));
    assert_clean(&outcome);
    assert!(
        outcome.checked > 2_000_000,
        "expected every connected bipartite graph up to order 8, saw {}",
        outcome.checked
    );
}

#[test]
fn weighting_properties_match_membership_both_directions() {
    // Forward: property-passing weightings give γ = |A|; canonical: members
    // of the family invert to property-passing weightings; plus the fixture
    // showing the converse genuinely fails.
    let outcome = run_suite(Suite::Thm5, &config(8));
    assert_clean(&outcome);
}

#[test]
fn tree_family_characterization_to_n10() {
    let outcome = run_suite(Suite::Cor6, &config(10));
    assert_clean(&outcome);
    // Cayley: sum of n^(n-2) labeled trees for n = 2..=10.
    assert_eq!(outcome.checked, 105_063_361);
}

#[test]
fn known_invariant_values_and_koenig() {
    let k33 = Graph::from_edges(
        6,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
    .unwrap();
    assert_eq!(gamma(&k33).unwrap(), 2);

    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(gamma(&p4).unwrap(), 2);
    assert_eq!(covering_number(&p4).unwrap().0, 2);

    // Cover equals matching on bipartite graphs: exhaustive over every
    // labeled bipartite graph (connected or not) up to order 7 against a
    // brute-force cover oracle, then 10^5 seeded random bipartite graphs
    // of orders 8..=10.
    fn brute_cover(g: &Graph) -> usize {
        let edges = g.edges();
        (0u64..1 << g.n())
            .filter(|&m| edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }
    fn check_koenig(g: &Graph) {
        let bg = BipartiteGraph::from_graph(g).unwrap();
        let matching = max_matching_bipartite(&bg).len();
        let (cover, witness) = covering_number(g).unwrap();
        assert_eq!(cover, matching, "on {}", write_graph6(g).unwrap());
        assert_eq!(cover, brute_cover(g), "on {}", write_graph6(g).unwrap());
        for (u, v) in g.edges() {
            assert!(witness.contains(u) || witness.contains(v));
        }
    }
    for n in 1usize..=7 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = bipartization::graph_from_mask(n, mask);
            if g.bipartition().is_some() {
                check_koenig(&g);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    for _ in 0..100_000 {
        let n = rng.gen_range(8..=10usize);
        let mut g = Graph::empty(n);
        let colors: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        for u in 0..n {
            for v in u + 1..n {
                if colors[u] != colors[v] && rng.gen() {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        check_koenig(&g);
    }
}

#[test]
fn cli_contract_holds_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_bipartization");

    // The full harness at order 6 succeeds with exit code 0.
    let out = Command::new(bin)
        .args(["verify", "--suite", "all", "--max-n", "6"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "verify failed: {}{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    for suite in Suite::ALL {
        assert!(text.contains(&format!("suite {suite}: checked")), "{text}");
    }
    assert!(text.contains("total failures: 0"), "{text}");

    // graph6 round-trip fuzz: 10^5 seeded random graphs re-encode exactly.
    let mut rng = ChaCha8Rng::seed_from_u64(271828);
    for _ in 0..100_000 {
        let n = rng.gen_range(0..=20usize);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen() {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let encoded = write_graph6(&g).unwrap();
        let decoded = parse_graph6(&encoded).unwrap();
        assert_eq!(decoded, g, "roundtrip through {encoded}");
    }

    // Every documented exit code, observed end to end.
    let mut observed: BTreeMap<i32, &str> = BTreeMap::new();

    let mut child = Command::new(bin)
        .args(["gamma", "-g", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"EFz_").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("gamma: 2"));
    observed.insert(out.status.code().unwrap(), "success");

    let mut child = Command::new(bin)
        .args(["classify", "-g", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"EFz_").unwrap();
    let out = child.wait_with_output().unwrap();
    observed.insert(out.status.code().unwrap(), "negative verdict");

    let mut child = Command::new(bin)
        .args(["gamma", "-g", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"not graph6").unwrap();
    let out = child.wait_with_output().unwrap();
    observed.insert(out.status.code().unwrap(), "input error");

    let out = Command::new(bin)
        .args(["verify", "--suite", "thm2", "--max-n", "64"])
        .output()
        .unwrap();
    observed.insert(out.status.code().unwrap(), "size limit");

    assert_eq!(
        observed.into_iter().collect::<Vec<_>>(),
        vec![
            (0, "success"),
            (1, "negative verdict"),
            (2, "input error"),
            (3, "size limit"),
        ]
    );
}
