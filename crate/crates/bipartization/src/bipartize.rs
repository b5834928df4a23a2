//! The forward clique-expansion construction, its inverse, and the induced
//! subgraph comparison of two weightings over the same host.

use std::collections::BTreeMap;

use crate::cliques::{Clique, CliqueWeighting};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which partite set plays the role of the host-vertex side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A graph together with a certified bipartition and, when it was produced
/// by [`bipartize`], the (clique, copy-index) provenance of each B-vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    side_a: VertexSet,
    side_b: VertexSet,
    b_labels: Option<BTreeMap<usize, (Clique, u64)>>,
}

impl BipartiteGraph {
    /// Certifies that (side_a, side_b) partition the vertices and that every
    /// edge crosses the sides.
    pub fn new(graph: Graph, side_a: VertexSet, side_b: VertexSet) -> Result<Self> {
        if !side_a.is_disjoint(&side_b) || side_a.union(&side_b) != VertexSet::full(graph.n()) {
            return Err(Error::InvalidInput(
                "sides must partition the vertex set".into(),
            ));
        }
        for (u, v) in graph.edges() {
            if side_a.contains(u) == side_a.contains(v) {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) does not cross the bipartition"
                )));
            }
        }
        Ok(Self {
            graph,
            side_a,
            side_b,
            b_labels: None,
        })
    }

    /// 2-colors the graph; fails with [`Error::NotBipartite`] on odd cycles.
    pub fn from_graph(graph: &Graph) -> Result<Self> {
        let (side_a, side_b) = graph.bipartition().ok_or(Error::NotBipartite)?;
        Ok(Self {
            graph: graph.clone(),
            side_a,
            side_b,
            b_labels: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn side(&self, side: Side) -> &VertexSet {
        match side {
            Side::A => &self.side_a,
            Side::B => &self.side_b,
        }
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.side_a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.side_b
    }

    /// Provenance labels of the B-side vertices, present on constructed
    /// bipartizations.
    pub fn b_labels(&self) -> Option<&BTreeMap<usize, (Clique, u64)>> {
        self.b_labels.as_ref()
    }

    /// The same graph with the two sides exchanged. Labels are dropped since
    /// they only describe the B side.
    pub fn swapped(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            b_labels: None,
        }
    }

    /// Normalized view from a graph and a 2-coloring already known to be
    /// valid; skips the edge re-validation of [`BipartiteGraph::new`].
    pub(crate) fn normalized_from_parts(graph: Graph, a: VertexSet, b: VertexSet) -> Self {
        debug_assert!((0..graph.n())
            .all(|u| graph.adj(u).iter().all(|v| a.contains(u) != a.contains(v))));
        let keep = match a.len().cmp(&b.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => a.contains(0) || graph.n() == 0,
        };
        let (side_a, side_b) = if keep { (a, b) } else { (b, a) };
        Self {
            graph,
            side_a,
            side_b,
            b_labels: None,
        }
    }

    /// Reorients so that A is the smaller side; on ties A is the side
    /// containing vertex 0.
    pub fn normalized(&self) -> Self {
        let keep = match self.side_a.len().cmp(&self.side_b.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => self.side_a.contains(0) || self.graph.n() == 0,
        };
        if keep {
            self.clone()
        } else {
            self.swapped()
        }
    }
}

/// Builds the bipartite expansion of the host of `f`: side A keeps the host
/// vertices 0..n-1, and each positively weighted clique K contributes f(K)
/// B-vertices adjacent exactly to the members of K.
///
/// B-vertex ids are assigned deterministically: cliques in canonical
/// (size, lexicographic) order, copies consecutively.
pub fn bipartize(f: &CliqueWeighting) -> BipartiteGraph {
    let h = f.host();
    let n = h.n();
    let extra: u64 = f.total_weight();
    let mut g = Graph::empty(n + extra as usize);
    let mut b_labels = BTreeMap::new();
    let mut next = n;
    for (clique, w) in f.iter() {
        for i in 1..=w {
            for &x in clique.vertices() {
                g.add_edge(x, next).unwrap();
            }
            b_labels.insert(next, (clique.clone(), i));
            next += 1;
        }
    }
    // vertex/edge count identities of the construction
    assert_eq!(g.n(), n + f.total_weight() as usize);
    assert_eq!(
        g.edge_count() as u64,
        f.iter().map(|(k, w)| w * k.len() as u64).sum::<u64>()
    );
    BipartiteGraph {
        graph: g,
        side_a: VertexSet::full(n),
        side_b: (n..n + extra as usize).collect(),
        b_labels: Some(b_labels),
    }
}

/// A maximal group of vertices sharing one open neighborhood, for each
/// neighborhood realized on the chosen side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityPartition {
    classes: Vec<VertexSet>,
}

impl SimilarityPartition {
    /// Classes ordered by smallest member.
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Smallest member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.min().unwrap()).collect()
    }
}

/// Groups the vertices of the chosen side by equality of open neighborhoods.
pub fn similarity_partition(g: &BipartiteGraph, side: Side) -> SimilarityPartition {
    let mut groups: Vec<(VertexSet, VertexSet)> = Vec::new(); // (neighborhood, class)
    for v in g.side(side).iter() {
        let nv = g.graph().adj(v);
        match groups.iter_mut().find(|(nb, _)| nb == nv) {
            Some((_, class)) => class.insert(v),
            None => groups.push((nv.clone(), VertexSet::singleton(v))),
        }
    }
    let mut classes: Vec<VertexSet> = groups.into_iter().map(|(_, c)| c).collect();
    classes.sort_by_key(|c| c.min());
    SimilarityPartition { classes }
}

/// The recovered host, weighting, and the explicit isomorphism that maps the
/// input graph onto the bipartization of the recovered pair.
#[derive(Clone, Debug)]
pub struct InversionResult {
    pub h: Graph,
    pub f: CliqueWeighting,
    /// host vertex id -> original vertex id of the chosen side (ascending)
    pub vertex_map: Vec<usize>,
    /// original other-side vertex id -> (clique of h, copy index)
    pub b_map: BTreeMap<usize, (Clique, u64)>,
}

impl InversionResult {
    /// Rebuilds the bipartization of (h, f) and checks that mapping it
    /// through `vertex_map`/`b_map` reproduces `g` edge-for-edge.
    pub fn roundtrip_matches(&self, g: &BipartiteGraph) -> bool {
        let rebuilt = bipartize(&self.f);
        if rebuilt.graph().n() != g.graph().n()
            || rebuilt.graph().edge_count() != g.graph().edge_count()
        {
            return false;
        }
        // invert b_map: (clique, copy) -> original id
        let by_label: BTreeMap<(Clique, u64), usize> = self
            .b_map
            .iter()
            .map(|(&orig, label)| (label.clone(), orig))
            .collect();
        if by_label.len() != self.b_map.len() {
            return false;
        }
        let labels = rebuilt.b_labels().unwrap();
        // φ: rebuilt vertex id -> original vertex id
        let mut phi = vec![usize::MAX; rebuilt.graph().n()];
        for v in rebuilt.graph().vertices() {
            phi[v] = if v < self.h.n() {
                self.vertex_map[v]
            } else {
                match by_label.get(&labels[&v]) {
                    Some(&orig) => orig,
                    None => return false,
                }
            };
        }
        rebuilt
            .graph()
            .edges()
            .into_iter()
            .all(|(u, v)| g.graph().has_edge(phi[u], phi[v]))
    }
}

/// Recovers a host graph and weighting whose bipartization is `g`, with the
/// chosen side in the role of the host vertices.
///
/// Host vertices are the chosen side's vertices in ascending order; two of
/// them are adjacent when they lie at distance two in `g` (equivalently,
/// share a neighbor). Each other-side vertex b contributes one copy to the
/// clique formed by its neighborhood.
///
/// Other-side vertices with empty neighborhoods are rejected: they cannot be
/// a copy of any (non-empty) clique.
pub fn invert_bipartization(g: &BipartiteGraph, side: Side) -> Result<InversionResult> {
    invert_core(g, side, true)
}

/// Same recovery with an empty `b_map`: the bulk sweeps only need (h, f)
/// and skip the per-copy bookkeeping.
pub(crate) fn invert_host_weighting(g: &BipartiteGraph, side: Side) -> Result<InversionResult> {
    invert_core(g, side, false)
}

fn invert_core(g: &BipartiteGraph, side: Side, want_b_map: bool) -> Result<InversionResult> {
    let host_side = g.side(side);
    let copy_side = g.side(side.other());
    if let Some(b) = copy_side.iter().find(|&b| g.graph().adj(b).is_empty()) {
        return Err(Error::InvalidInput(format!(
            "vertex {b} on the copy side is isolated and cannot arise from a clique copy"
        )));
    }
    let vertex_map: Vec<usize> = host_side.iter().collect();
    let mut host_index = vec![usize::MAX; g.graph().n()];
    for (i, &v) in vertex_map.iter().enumerate() {
        host_index[v] = i;
    }
    let mut h = Graph::empty(vertex_map.len());
    for (i, &x) in vertex_map.iter().enumerate() {
        for (j, &y) in vertex_map.iter().enumerate().skip(i + 1) {
            if !g.graph().adj(x).is_disjoint(g.graph().adj(y)) {
                h.add_edge(i, j)?;
            }
        }
    }
    let mut entries: BTreeMap<Clique, u64> = BTreeMap::new();
    let mut b_map = BTreeMap::new();
    for b in copy_side.iter() {
        // neighbors of b are pairwise at distance two through b, so their
        // images form a clique of h by construction
        let vs: Vec<usize> = g.graph().adj(b).iter().map(|x| host_index[x]).collect();
        let clique = Clique::from_sorted_unchecked(vs);
        if want_b_map {
            let count = entries.entry(clique.clone()).or_insert(0);
            *count += 1;
            b_map.insert(b, (clique, *count));
        } else {
            *entries.entry(clique).or_insert(0) += 1;
        }
    }
    let f = CliqueWeighting::from_map_unchecked(&h, entries);
    Ok(InversionResult {
        h,
        f,
        vertex_map,
        b_map,
    })
}

/// True when g <= f pointwise; in that case the canonical embedding of the
/// expansion of g into the expansion of f (identity on the host side, copy
/// (K,i) to copy (K,i)) is additionally verified to be induced.
pub fn is_induced_subgraph_by_weights(f: &CliqueWeighting, g: &CliqueWeighting) -> Result<bool> {
    if f.host() != g.host() {
        return Err(Error::InvalidInput(
            "weightings must share the same host graph".into(),
        ));
    }
    if !f.dominates(g) {
        return Ok(false);
    }
    let big = bipartize(f);
    let small = bipartize(g);
    let by_label: BTreeMap<(Clique, u64), usize> = big
        .b_labels()
        .unwrap()
        .iter()
        .map(|(&v, label)| (label.clone(), v))
        .collect();
    let n = g.host().n();
    let mut embed = vec![usize::MAX; small.graph().n()];
    for v in small.graph().vertices() {
        embed[v] = if v < n {
            v
        } else {
            by_label[&small.b_labels().unwrap()[&v]]
        };
    }
    // induced: adjacency agrees on every image pair
    for u in small.graph().vertices() {
        for v in u + 1..small.graph().n() {
            assert_eq!(
                small.graph().has_edge(u, v),
                big.graph().has_edge(embed[u], embed[v]),
                "embedding of the smaller expansion is not induced"
            );
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{unit_edge_weighting, CliqueWeighting};
    use crate::fixtures;
    use crate::graph::{complete_bipartite_graph, complete_graph, path_graph, Graph};

    #[test]
    fn paw_expansion_counts() {
        let b = bipartize(&fixtures::paw_weighting());
        assert_eq!(b.graph().n(), 17);
        assert_eq!(b.graph().edge_count(), 23);
        assert_eq!(b.side_a().len(), 4);
        assert_eq!(b.side_b().len(), 13);
    }

    #[test]
    fn unit_edge_expansion_is_subdivision() {
        let h = fixtures::paw();
        let b = bipartize(&unit_edge_weighting(&h));
        assert_eq!(b.graph().n(), 8);
        assert_eq!(b.graph().edge_count(), 8);
        // every copy vertex subdivides one edge
        for v in b.side_b().iter() {
            assert_eq!(b.graph().degree(v), 2);
        }
    }

    #[test]
    fn degenerate_and_complete_expansions() {
        let k1 = Graph::empty(1);
        let f = CliqueWeighting::from_pairs(&k1, &[(vec![0], 1)]).unwrap();
        let b = bipartize(&f);
        assert_eq!((b.graph().n(), b.graph().edge_count()), (2, 1));

        // K_m with n copies of the full clique expands to K_{m,n}
        for (m, n) in [(1, 3), (2, 2), (3, 3), (3, 1)] {
            let km = complete_graph(m);
            let all: Vec<usize> = (0..m).collect();
            let f = CliqueWeighting::from_pairs(&km, &[(all, n as u64)]).unwrap();
            let b = bipartize(&f);
            let expect = complete_bipartite_graph(m, n);
            assert_eq!(b.graph(), &expect);
        }
    }

    #[test]
    fn neighborhood_structure_of_expansions() {
        // copy vertices see exactly their clique; host vertices see exactly
        // the copies of cliques containing them
        let f = fixtures::paw_weighting();
        let b = bipartize(&f);
        let labels = b.b_labels().unwrap();
        for (&v, (clique, _)) in labels {
            assert_eq!(b.graph().neighborhood(v).unwrap(), clique.as_set());
        }
        for x in f.host().vertices() {
            let expected: usize = f
                .iter()
                .filter(|(k, _)| k.contains(x))
                .map(|(_, w)| w as usize)
                .sum();
            assert_eq!(b.graph().degree(x), expected);
        }
    }

    #[test]
    fn similarity_classes() {
        let g = BipartiteGraph::from_graph(&complete_bipartite_graph(2, 3)).unwrap();
        let p = similarity_partition(&g, Side::B);
        assert_eq!(p.classes().len(), 1);
        assert_eq!(p.classes()[0].len(), 3);
        assert_eq!(p.representatives(), vec![2]);

        // path 0-1-2-3 with B = {1, 3}
        let g = BipartiteGraph::from_graph(&path_graph(4)).unwrap();
        let p = similarity_partition(&g, Side::B);
        assert_eq!(p.classes().len(), 2);

        // isolated vertices on a side share the empty neighborhood
        let mut g = Graph::empty(4);
        g.add_edge(0, 1).unwrap();
        let bg = BipartiteGraph::new(
            g,
            crate::graph::VertexSet::from_iter([0, 2]),
            crate::graph::VertexSet::from_iter([1, 3]),
        )
        .unwrap();
        let p = similarity_partition(&bg, Side::A);
        assert_eq!(p.classes().len(), 2);
    }

    #[test]
    fn invert_path4() {
        let g = BipartiteGraph::from_graph(&path_graph(4)).unwrap();
        // bipartition of P4 puts {0,2} on side A
        let inv = invert_bipartization(&g, Side::A).unwrap();
        assert_eq!(inv.h.n(), 2);
        assert_eq!(inv.h.edge_count(), 1);
        assert_eq!(inv.f.value_of(&[0, 1]), 1); // from vertex 1 of G
        assert_eq!(inv.f.value_of(&[1]), 1); // from vertex 3 of G
        assert!(inv.roundtrip_matches(&g));
    }

    #[test]
    fn invert_single_edge() {
        let g = BipartiteGraph::from_graph(&path_graph(2)).unwrap();
        let inv = invert_bipartization(&g, Side::A).unwrap();
        assert_eq!(inv.h.n(), 1);
        assert_eq!(inv.f.value_of(&[0]), 1);
        assert!(inv.roundtrip_matches(&g));
    }

    #[test]
    fn invert_bilabeled_tree_both_sides() {
        let t = fixtures::bilabeled_tree();
        let g = BipartiteGraph::from_graph(&t).unwrap();

        // host side = {0,1,2,3}: recovers the paw graph with the tree weighting
        let inv = invert_bipartization(&g, Side::A).unwrap();
        assert_eq!(inv.h, fixtures::paw());
        assert_eq!(inv.f, fixtures::paw_tree_weighting());
        assert!(inv.roundtrip_matches(&g));

        // host side = the seven hollow vertices: recovers the double triangle
        let inv = invert_bipartization(&g, Side::B).unwrap();
        assert_eq!(inv.h, fixtures::double_triangle());
        assert_eq!(inv.f, fixtures::double_triangle_weighting());
        assert!(inv.roundtrip_matches(&g));
    }

    #[test]
    fn double_inversion_can_yield_non_isomorphic_hosts() {
        let g = BipartiteGraph::from_graph(&fixtures::bilabeled_tree()).unwrap();
        let h = invert_bipartization(&g, Side::A).unwrap().h;
        let f = invert_bipartization(&g, Side::B).unwrap().h;
        let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
        let mut df: Vec<usize> = f.vertices().map(|v| f.degree(v)).collect();
        dh.sort_unstable();
        df.sort_unstable();
        assert_ne!(dh, df);
        // one triangle vs two
        let count_triangles = |g: &Graph| {
            crate::cliques::enumerate_cliques(g, Some(3))
                .unwrap()
                .iter()
                .filter(|c| c.len() == 3)
                .count()
        };
        assert_eq!(count_triangles(&h), 1);
        assert_eq!(count_triangles(&f), 2);
    }

    #[test]
    fn isolated_copy_side_vertex_is_rejected() {
        let mut g = Graph::empty(3);
        g.add_edge(0, 1).unwrap();
        let bg = BipartiteGraph::new(
            g,
            crate::graph::VertexSet::singleton(0),
            crate::graph::VertexSet::from_iter([1, 2]),
        )
        .unwrap();
        assert!(invert_bipartization(&bg, Side::A).is_err());
    }

    #[test]
    fn isolated_host_side_vertex_roundtrips() {
        // an isolated vertex on the host side becomes an isolated host
        // vertex with no copies pointing at it
        let mut g = Graph::empty(3);
        g.add_edge(0, 1).unwrap();
        let bg = BipartiteGraph::new(
            g,
            crate::graph::VertexSet::from_iter([0, 2]),
            crate::graph::VertexSet::singleton(1),
        )
        .unwrap();
        let inv = invert_bipartization(&bg, Side::A).unwrap();
        assert_eq!(inv.h.n(), 2);
        assert_eq!(inv.h.edge_count(), 0);
        assert!(inv.roundtrip_matches(&bg));
    }

    #[test]
    fn pointwise_order_gives_induced_subgraphs() {
        let h = fixtures::paw();
        let f = fixtures::paw_weighting();
        let g = unit_edge_weighting(&h);
        // g puts weight 1 on edge {0,2} where f is zero
        assert!(!is_induced_subgraph_by_weights(&f, &g).unwrap());
        assert!(is_induced_subgraph_by_weights(&f, &f).unwrap());
        let zero = CliqueWeighting::zero(&h);
        assert!(is_induced_subgraph_by_weights(&f, &zero).unwrap());
        assert_eq!(bipartize(&zero).graph().edge_count(), 0);
        assert_eq!(bipartize(&zero).graph().n(), 4);
    }

    #[test]
    fn normalization_prefers_smaller_side_then_vertex_zero() {
        let g = BipartiteGraph::from_graph(&complete_bipartite_graph(3, 2)).unwrap();
        let n = g.normalized();
        assert_eq!(n.side_a().len(), 2);
        let p = BipartiteGraph::from_graph(&path_graph(4)).unwrap();
        let n = p.normalized();
        assert!(n.side_a().contains(0));
    }
}
