//! Exhaustive and randomized generation of small labeled graphs: mask-indexed
//! simple graphs, labeled trees via Prüfer sequences, and seeded random
//! connected graphs. These drive the property suites.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest n for exhaustive labeled-graph enumeration (2^28 instances).
pub const MAX_ENUMERATION_N: usize = 8;

/// Largest n for exhaustive labeled-tree enumeration (10^8 instances).
pub const MAX_TREE_ENUMERATION_N: usize = 10;

/// Number of labeled simple graphs on n vertices, i.e. 2^(n(n-1)/2).
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph encoded by `mask`: bit k of the mask is the pair (u, v)
/// with u < v in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).expect("pairs are in range and distinct");
            }
            k += 1;
        }
    }
    g
}

/// Stream of every labeled simple graph on n vertices, optionally filtered.
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
    connected_only: bool,
    bipartite_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = graph_from_mask(self.n, self.next);
            self.next += 1;
            if self.connected_only && !g.is_connected() {
                continue;
            }
            if self.bipartite_only && g.bipartition().is_none() {
                continue;
            }
            return Some(g);
        }
        None
    }
}

/// Every labeled simple graph on n vertices exactly once, in mask order.
pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
    bipartite_only: bool,
) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeLimit {
            what: "labeled graph enumeration".into(),
            limit: MAX_ENUMERATION_N as u64,
        });
    }
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: mask_count(n),
        connected_only,
        bipartite_only,
    })
}

/// The labeled tree on n = seq.len() + 2 vertices with Prüfer sequence `seq`.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        assert!(v < n, "sequence entry out of range");
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    // `ptr` scans for leaves in increasing order; `leaf` chases chains that
    // become leaves behind the scan position.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        g.add_edge(leaf, v).expect("prufer edges are simple");
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1).expect("last prufer edge is simple");
    g
}

/// Stream of every labeled tree on n vertices via its Prüfer sequence.
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        if self.n == 1 {
            self.done = true;
            return Some(Graph::empty(1));
        }
        let tree = tree_from_prufer(&self.seq);
        // advance the sequence as a base-n counter
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(tree)
    }
}

/// Every labeled tree on n >= 1 vertices exactly once (n^(n-2) trees).
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if n == 0 || n > MAX_TREE_ENUMERATION_N {
        return Err(Error::SizeLimit {
            what: "labeled tree enumeration".into(),
            limit: MAX_TREE_ENUMERATION_N as u64,
        });
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

/// A uniformly random labeled tree skeleton plus independent extra edges with
/// probability 1/2, giving a random connected graph. Deterministic in `rng`.
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    if n == 1 {
        return Graph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut g = tree_from_prufer(&seq);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(0.5) {
                g.add_edge(u, v).expect("pair is in range and distinct");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(enumerate_labeled_graphs(3, false, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(3, true, false).unwrap().count(), 4);
        assert_eq!(enumerate_labeled_graphs(1, false, false).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(4, true, false).unwrap().count(), 38);
        // labeled connected graphs: 1, 1, 4, 38, 728
        assert_eq!(enumerate_labeled_graphs(5, true, false).unwrap().count(), 728);
        assert!(matches!(
            enumerate_labeled_graphs(9, false, false),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn bipartite_filter_agrees_with_bipartition() {
        let with_filter = enumerate_labeled_graphs(4, false, true).unwrap().count();
        let by_hand = enumerate_labeled_graphs(4, false, false)
            .unwrap()
            .filter(|g| g.bipartition().is_some())
            .count();
        assert_eq!(with_filter, by_hand);
    }

    #[test]
    fn prufer_decodes_known_sequence() {
        // the classic example: (3, 3, 3, 4) on 6 vertices
        let t = tree_from_prufer(&[3, 3, 3, 4]);
        assert!(t.is_tree());
        assert_eq!(t.edges(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn tree_enumeration_is_exhaustive_and_duplicate_free() {
        for n in 1..=6usize {
            let expected = if n <= 2 { 1 } else { (n as u64).pow(n as u32 - 2) };
            let mut seen = std::collections::HashSet::new();
            let mut count = 0u64;
            for t in enumerate_labeled_trees(n).unwrap() {
                assert!(t.is_tree(), "non-tree from prufer at n={n}");
                assert!(seen.insert(t.edges()), "duplicate tree at n={n}");
                count += 1;
            }
            assert_eq!(count, expected, "cayley count at n={n}");
        }
        assert!(matches!(
            enumerate_labeled_trees(11),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_connected_graph(7, &mut rng);
            assert!(g.is_connected());
        }
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        assert_eq!(
            random_connected_graph(6, &mut a).edges(),
            random_connected_graph(6, &mut b).edges()
        );
    }
}
