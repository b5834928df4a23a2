//! Exact solvers: domination number, covering number, and bipartite maximum
//! matching. These double as the brute-force oracles of the verification
//! harness, so exactness is non-negotiable and speed secondary.

use crate::bipartize::{BipartiteGraph, Side};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact search is limited to one machine word of vertices; larger inputs
/// fail loudly instead of running forever.
pub const MAX_EXACT_N: usize = 64;

/// A dominating set together with a minimality certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingSet {
    pub members: VertexSet,
    pub certified_minimum: bool,
}

/// A set of vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn saturated(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }
}

/// True when N[d] covers every vertex.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    let mut covered = d.clone();
    for v in d.iter() {
        covered.union_with(g.adj(v));
    }
    covered.len() == g.n()
}

fn closed_masks(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > MAX_EXACT_N {
        return Err(Error::SizeLimit {
            what: "exact solver input".into(),
            limit: MAX_EXACT_N as u64,
        });
    }
    Ok(g.vertices()
        .map(|v| {
            let mut m = 1u64 << v;
            for w in g.adj(v).iter() {
                m |= 1 << w;
            }
            m
        })
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The domination number alone (no witness), exact for n <= 64.
/// Trees of any order take a linear-time path instead.
pub fn gamma(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if g.is_tree() {
        return Ok(gamma_tree(g));
    }
    let closed = closed_masks(g)?;
    let full = full_mask(g.n());
    // greedy upper bound
    let mut dominated = 0u64;
    let mut upper = 0usize;
    while dominated != full {
        let best = (0..g.n())
            .max_by_key(|&v| (closed[v] & !dominated).count_ones())
            .unwrap();
        dominated |= closed[best];
        upper += 1;
    }
    let max_cover = closed.iter().map(|m| m.count_ones()).max().unwrap() as usize;
    let mut best = upper;
    branch_gamma(&closed, full, max_cover, 0, 0, &mut best);
    Ok(best)
}

thread_local! {
    /// Scratch for [`gamma_tree`]; the sweeps call it hundreds of millions
    /// of times, so the BFS and DP tables are reused across calls.
    static TREE_SCRATCH: std::cell::RefCell<(Vec<usize>, Vec<usize>, Vec<[usize; 3]>)> =
        std::cell::RefCell::new((Vec::new(), Vec::new(), Vec::new()));
}

/// Linear-time domination number of a tree: classic three-state DP over a
/// BFS order (vertex in the set / dominated from below / left to the parent).
pub(crate) fn gamma_tree(g: &Graph) -> usize {
    TREE_SCRATCH.with(|scratch| {
        let (parent, order, dp) = &mut *scratch.borrow_mut();
        gamma_tree_with(g, parent, order, dp)
    })
}

fn gamma_tree_with(
    g: &Graph,
    parent: &mut Vec<usize>,
    order: &mut Vec<usize>,
    dp: &mut Vec<[usize; 3]>,
) -> usize {
    let n = g.n();
    if n == 1 {
        return 1;
    }
    const INF: usize = usize::MAX / 2;
    parent.clear();
    parent.resize(n, usize::MAX);
    order.clear();
    order.push(0);
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in g.adj(v).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    // dp[v] = [v in the set, v dominated by a child, v undominated]
    dp.clear();
    dp.resize(n, [0usize; 3]);
    for &v in order.iter().rev() {
        let mut in_set = 1;
        let mut settled = 0; // children handle themselves either way
        let mut has_child = false;
        let mut has_child_in_set = false;
        let mut cheapest_promotion = INF;
        for c in g.adj(v).iter() {
            if parent[c] != v {
                continue;
            }
            has_child = true;
            in_set += dp[c][0].min(dp[c][1]).min(dp[c][2]);
            let m = dp[c][0].min(dp[c][1]);
            settled += m;
            if dp[c][0] <= dp[c][1] {
                has_child_in_set = true;
            } else {
                cheapest_promotion = cheapest_promotion.min(dp[c][0] - dp[c][1]);
            }
        }
        dp[v] = if has_child {
            let promotion = if has_child_in_set { 0 } else { cheapest_promotion };
            [in_set, settled + promotion, settled]
        } else {
            [1, INF, 0]
        };
    }
    dp[order[0]][0].min(dp[order[0]][1])
}

/// The undominated vertex with the fewest allowed dominators; branching on
/// it keeps the search tree narrow.
fn pick_branch_vertex(closed: &[u64], full: u64, dominated: u64, allowed: u64) -> (usize, u32) {
    let mut best_v = usize::MAX;
    let mut best_c = u32::MAX;
    let mut rem = full & !dominated;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        rem &= rem - 1;
        let c = (closed[v] & allowed).count_ones();
        if c < best_c {
            best_c = c;
            best_v = v;
            if c <= 1 {
                break;
            }
        }
    }
    (best_v, best_c)
}

fn branch_gamma(
    closed: &[u64],
    full: u64,
    max_cover: usize,
    dominated: u64,
    chosen: usize,
    best: &mut usize,
) {
    if dominated == full {
        *best = (*best).min(chosen);
        return;
    }
    let undominated = (full & !dominated).count_ones() as usize;
    if chosen + undominated.div_ceil(max_cover) >= *best {
        return;
    }
    // some vertex of N[v] must be chosen
    let (v, _) = pick_branch_vertex(closed, full, dominated, full);
    let mut cands = closed[v];
    while cands != 0 {
        let u = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        branch_gamma(closed, full, max_cover, dominated | closed[u], chosen + 1, best);
    }
}

/// Is there a dominating completion of size `budget` drawn from `allowed`?
fn exists_completion(closed: &[u64], full: u64, dominated: u64, budget: usize, allowed: u64) -> bool {
    if dominated == full {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let (v, c) = pick_branch_vertex(closed, full, dominated, allowed);
    if c == 0 {
        return false;
    }
    let mut cands = closed[v] & allowed;
    while cands != 0 {
        let u = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if exists_completion(closed, full, dominated | closed[u], budget - 1, allowed) {
            return true;
        }
    }
    false
}

/// True when g has a dominating set of at most `k` vertices; exact for
/// n <= 64.
pub fn has_dominating_set_of_size(g: &Graph, k: usize) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    let closed = closed_masks(g)?;
    let full = full_mask(g.n());
    Ok(exists_completion(&closed, full, 0, k, full))
}

/// The domination number with a certified-minimum witness; among all minimum
/// dominating sets the lexicographically smallest is returned.
pub fn domination_number(g: &Graph) -> Result<(usize, DominatingSet)> {
    let k = gamma(g)?;
    if g.n() == 0 {
        return Ok((
            0,
            DominatingSet {
                members: VertexSet::new(),
                certified_minimum: true,
            },
        ));
    }
    let closed = closed_masks(g)?;
    let full = full_mask(g.n());
    // build the lexicographically smallest witness one member at a time
    let mut members = VertexSet::new();
    let mut dominated = 0u64;
    let mut floor = 0usize; // next member must be >= floor
    for remaining in (0..k).rev() {
        let v = (floor..g.n())
            .find(|&v| {
                let above = if v + 1 >= 64 { 0 } else { full & !((1u64 << (v + 1)) - 1) };
                exists_completion(&closed, full, dominated | closed[v], remaining, above)
            })
            .expect("a completion must exist at the known optimum");
        members.insert(v);
        dominated |= closed[v];
        floor = v + 1;
    }
    debug_assert!(is_dominating(g, &members));
    Ok((
        k,
        DominatingSet {
            members,
            certified_minimum: true,
        },
    ))
}

/// Maximum-cardinality matching of a bipartite graph via augmenting paths,
/// deterministic in the vertex order.
pub fn max_matching_bipartite(g: &BipartiteGraph) -> Matching {
    let graph = g.graph();
    let a: Vec<usize> = g.side_a().iter().collect();
    let mut partner = vec![usize::MAX; graph.n()];
    for &start in &a {
        let mut visited = VertexSet::new();
        try_augment(graph, start, &mut partner, &mut visited);
    }
    let mut edges: Vec<(usize, usize)> = a
        .iter()
        .filter(|&&u| partner[u] != usize::MAX)
        .map(|&u| (u.min(partner[u]), u.max(partner[u])))
        .collect();
    edges.sort_unstable();
    Matching { edges }
}

fn try_augment(g: &Graph, u: usize, partner: &mut [usize], visited: &mut VertexSet) -> bool {
    for w in g.adj(u).iter() {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        if partner[w] == usize::MAX || try_augment(g, partner[w], partner, visited) {
            partner[w] = u;
            partner[u] = w;
            return true;
        }
    }
    false
}

/// True when the maximum matching covers every vertex of the chosen side.
pub fn has_side_saturating_matching(g: &BipartiteGraph, side: Side) -> bool {
    max_matching_bipartite(g).len() == g.side(side).len()
}

/// Minimum vertex cover. Bipartite inputs use the matching-based equality
/// between cover and matching size; general inputs use branch and bound and
/// share the exact-solver size limit.
pub fn covering_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.edge_count() == 0 {
        return Ok((0, VertexSet::new()));
    }
    if let Some((side_a, side_b)) = g.bipartition() {
        let bg = BipartiteGraph::new(g.clone(), side_a, side_b)?;
        return Ok(koenig_cover(&bg));
    }
    if g.n() > MAX_EXACT_N {
        return Err(Error::SizeLimit {
            what: "exact cover solver input".into(),
            limit: MAX_EXACT_N as u64,
        });
    }
    let edges = g.edges();
    let mut best: Option<VertexSet> = None;
    let mut chosen = VertexSet::new();
    branch_cover(g, &edges, &mut chosen, 0, &mut best);
    let cover = best.expect("a graph with edges has a cover");
    Ok((cover.len(), cover))
}

fn branch_cover(
    g: &Graph,
    edges: &[(usize, usize)],
    chosen: &mut VertexSet,
    size: usize,
    best: &mut Option<VertexSet>,
) {
    if let Some(b) = best {
        if size >= b.len() {
            return;
        }
    }
    match edges
        .iter()
        .find(|&&(u, v)| !chosen.contains(u) && !chosen.contains(v))
    {
        None => *best = Some(chosen.clone()),
        Some(&(u, v)) => {
            for pick in [u, v] {
                chosen.insert(pick);
                branch_cover(g, edges, chosen, size + 1, best);
                chosen.remove(pick);
            }
        }
    }
}

/// Minimum vertex cover of a bipartite graph from a maximum matching:
/// unmatched A-vertices start an alternating search; the cover is the
/// unreached part of A plus the reached part of B.
fn koenig_cover(g: &BipartiteGraph) -> (usize, VertexSet) {
    let m = max_matching_bipartite(g);
    let graph = g.graph();
    let mut partner = vec![usize::MAX; graph.n()];
    for &(u, v) in &m.edges {
        partner[u] = v;
        partner[v] = u;
    }
    let mut reached = VertexSet::new();
    let mut queue: Vec<usize> = g
        .side_a()
        .iter()
        .filter(|&u| partner[u] == usize::MAX)
        .collect();
    for &u in &queue {
        reached.insert(u);
    }
    while let Some(u) = queue.pop() {
        if g.side_a().contains(u) {
            // travel unmatched edges A -> B
            for w in graph.adj(u).iter() {
                if partner[u] != w && !reached.contains(w) {
                    reached.insert(w);
                    queue.push(w);
                }
            }
        } else if partner[u] != usize::MAX && !reached.contains(partner[u]) {
            // travel the matched edge B -> A
            reached.insert(partner[u]);
            queue.push(partner[u]);
        }
    }
    let cover = g
        .side_a()
        .difference(&reached)
        .union(&g.side_b().intersection(&reached));
    debug_assert_eq!(cover.len(), m.len());
    (cover.len(), cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartize::bipartize;
    use crate::fixtures;
    use crate::graph::{
        complete_bipartite_graph, cycle_graph, path_graph, star_graph, Graph,
    };

    /// Brute-force domination number over all subsets.
    fn gamma_brute(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| {
                let d: VertexSet = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                is_dominating(g, &d)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Brute-force covering number over all subsets.
    fn beta_brute(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Brute-force maximum matching size over all edge subsets.
    fn matching_brute(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for m in 0u64..1 << edges.len() {
            let picked: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut used = VertexSet::new();
            if picked.iter().all(|&(u, v)| {
                let free = !used.contains(u) && !used.contains(v);
                used.insert(u);
                used.insert(v);
                free
            }) {
                best = best.max(picked.len());
            }
        }
        best
    }

    #[test]
    fn domination_examples() {
        assert!(is_dominating(&cycle_graph(4), &VertexSet::from_iter([0, 2])));
        let mut g = Graph::empty(3);
        g.add_edge(0, 1).unwrap();
        assert!(!is_dominating(&g, &VertexSet::from_iter([0])));
        assert!(is_dominating(
            &complete_bipartite_graph(3, 3),
            &VertexSet::from_iter([0, 3])
        ));

        assert_eq!(gamma(&complete_bipartite_graph(3, 3)).unwrap(), 2);
        assert_eq!(gamma(&path_graph(4)).unwrap(), 2);
        assert_eq!(gamma(&star_graph(5)).unwrap(), 1);
        assert_eq!(gamma(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn paw_expansion_gamma_equals_side_a() {
        let b = bipartize(&fixtures::paw_weighting());
        assert_eq!(gamma(b.graph()).unwrap(), 4);
        assert_eq!(b.side_a().len(), 4);
    }

    #[test]
    fn gamma_matches_brute_force_exhaustive() {
        for n in 1..=5 {
            let max = 1u64 << (n * (n - 1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                assert_eq!(gamma(&g).unwrap(), gamma_brute(&g), "on {g:?}");
            }
        }
    }

    #[test]
    fn tree_gamma_agrees_with_branch_and_bound() {
        // The linear tree DP must match the bitset search on every labeled
        // tree up to order 8.
        for n in 2usize..=8 {
            let total = if n == 2 { 1 } else { (n as u64).pow(n as u32 - 2) };
            for i in 0..total {
                let mut seq = vec![0usize; n - 2];
                let mut rest = i;
                for d in seq.iter_mut() {
                    *d = (rest % n as u64) as usize;
                    rest /= n as u64;
                }
                let tree = crate::enumerate::tree_from_prufer(&seq);
                let k = gamma(&tree).unwrap();
                assert!(has_dominating_set_of_size(&tree, k).unwrap(), "{seq:?}");
                assert!(!has_dominating_set_of_size(&tree, k - 1).unwrap(), "{seq:?}");
            }
        }
    }

    #[test]
    fn tree_gamma_beyond_the_word_limit() {
        // γ(P_n) = ⌈n/3⌉; the tree path has no 64-vertex restriction.
        assert_eq!(gamma(&path_graph(100)).unwrap(), 34);
        assert_eq!(gamma(&star_graph(80)).unwrap(), 1);
    }

    #[test]
    fn witness_is_minimum_and_lexicographically_smallest() {
        for n in 1..=5 {
            let max = 1u64 << (n * (n - 1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                let (k, w) = domination_number(&g).unwrap();
                assert!(w.certified_minimum);
                assert!(is_dominating(&g, &w.members));
                assert_eq!(w.members.len(), k);
                // lexicographically smallest among all optimal subsets
                let best = (0u64..1 << n)
                    .filter(|&m| m.count_ones() as usize == k)
                    .filter(|&m| {
                        let d: VertexSet = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                        is_dominating(&g, &d)
                    })
                    .map(|m| -> Vec<usize> {
                        (0..n).filter(|&v| m >> v & 1 == 1).collect()
                    })
                    .min()
                    .unwrap();
                let got: Vec<usize> = w.members.iter().collect();
                assert_eq!(got, best, "on {g:?}");
            }
        }
    }

    #[test]
    fn size_limit_is_reported() {
        let g = Graph::empty(65);
        assert!(matches!(gamma(&g), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering_number(&complete_bipartite_graph(3, 3)).unwrap().0, 3);
        assert_eq!(covering_number(&path_graph(4)).unwrap().0, 2);
        assert_eq!(covering_number(&Graph::empty(4)).unwrap().0, 0);
        // odd cycle exercises the non-bipartite branch
        assert_eq!(covering_number(&cycle_graph(5)).unwrap().0, 3);
    }

    #[test]
    fn covering_matches_brute_force_exhaustive() {
        for n in 1..=5 {
            let max = 1u64 << (n * (n - 1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                let (k, cover) = covering_number(&g).unwrap();
                assert_eq!(k, beta_brute(&g), "on {g:?}");
                assert_eq!(cover.len(), k);
                for (u, v) in g.edges() {
                    assert!(cover.contains(u) || cover.contains(v));
                }
            }
        }
    }

    #[test]
    fn matching_examples() {
        let g = BipartiteGraph::from_graph(&complete_bipartite_graph(2, 3)).unwrap();
        assert_eq!(max_matching_bipartite(&g).len(), 2);
        assert!(has_side_saturating_matching(&g, Side::A));
        assert!(!has_side_saturating_matching(&g, Side::B));

        let g = BipartiteGraph::from_graph(&path_graph(4)).unwrap();
        assert_eq!(max_matching_bipartite(&g).len(), 2);

        let g = BipartiteGraph::from_graph(&cycle_graph(6)).unwrap();
        assert_eq!(max_matching_bipartite(&g).len(), 3);

        let g = BipartiteGraph::from_graph(&path_graph(2)).unwrap();
        assert!(has_side_saturating_matching(&g, Side::A));
        assert!(has_side_saturating_matching(&g, Side::B));

        let b = bipartize(&fixtures::paw_weighting());
        assert!(has_side_saturating_matching(&b, Side::A));
    }

    #[test]
    fn matching_matches_brute_force_exhaustive() {
        for n in 1..=5 {
            let max = 1u64 << (n * (n - 1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                let Some((a, b)) = g.bipartition() else {
                    continue;
                };
                let bg = BipartiteGraph::new(g.clone(), a, b).unwrap();
                let m = max_matching_bipartite(&bg);
                assert_eq!(m.len(), matching_brute(&g), "on {g:?}");
                // matched edges are vertex-disjoint
                assert_eq!(m.saturated().len(), 2 * m.len());
            }
        }
    }
}
