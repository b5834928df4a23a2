//! Enumeration of complete subgraphs and the sparse clique-weighting type.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on the number of cliques an enumeration may produce.
pub const DEFAULT_CLIQUE_CAP: u64 = 1_000_000;

/// A non-empty set of pairwise adjacent vertices of some host graph.
///
/// Stored as a strictly increasing vertex list. The `Ord` instance orders
/// cliques by size first and lexicographically second, which fixes the
/// canonical enumeration order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// Builds a clique key from arbitrary vertex order; rejects duplicates
    /// and non-adjacent pairs.
    pub fn new(host: &Graph, vertices: &[usize]) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        if vs.is_empty() {
            return Err(Error::InvalidInput("a clique must be non-empty".into()));
        }
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "vertex {} repeated in clique key",
                w[0]
            )));
        }
        for &v in &vs {
            if v >= host.n() {
                return Err(Error::VertexOutOfRange { v, n: host.n() });
            }
        }
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !host.has_edge(vs[i], vs[j]) {
                    return Err(Error::NotAClique { u: vs[i], v: vs[j] });
                }
            }
        }
        Ok(Self(vs))
    }

    /// Internal constructor for vertex lists already known to be cliques.
    pub(crate) fn from_sorted_unchecked(vs: Vec<usize>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]) && !vs.is_empty());
        Self(vs)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// A clique on a single vertex is trivial.
    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.contains(u) && self.contains(v)
    }

    pub fn as_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }
}

impl PartialOrd for Clique {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Clique {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All non-empty complete subgraphs of `h` with at most `max_size` vertices,
/// ordered by size and then lexicographically.
pub fn enumerate_cliques(h: &Graph, max_size: Option<usize>) -> Result<Vec<Clique>> {
    enumerate_cliques_capped(h, max_size, DEFAULT_CLIQUE_CAP)
}

/// Like [`enumerate_cliques`] with an explicit output cap; exceeding the cap
/// yields a size-limit error instead of exhausting memory.
pub fn enumerate_cliques_capped(
    h: &Graph,
    max_size: Option<usize>,
    cap: u64,
) -> Result<Vec<Clique>> {
    let max_size = max_size.unwrap_or(usize::MAX);
    let mut out: Vec<Clique> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for v in h.vertices() {
        stack.push(v);
        extend_cliques(h, &mut stack, h.adj(v), max_size, cap, &mut out)?;
        stack.pop();
    }
    out.sort_unstable();
    Ok(out)
}

fn extend_cliques(
    h: &Graph,
    stack: &mut Vec<usize>,
    candidates: &VertexSet,
    max_size: usize,
    cap: u64,
    out: &mut Vec<Clique>,
) -> Result<()> {
    if out.len() as u64 >= cap {
        return Err(Error::SizeLimit {
            what: "clique enumeration".into(),
            limit: cap,
        });
    }
    out.push(Clique::from_sorted_unchecked(stack.clone()));
    if stack.len() >= max_size {
        return Ok(());
    }
    let last = *stack.last().unwrap();
    for w in candidates.iter() {
        if w <= last {
            continue;
        }
        stack.push(w);
        let next = candidates.intersection(h.adj(w));
        extend_cliques(h, stack, &next, max_size, cap, out)?;
        stack.pop();
    }
    Ok(())
}

/// Cliques containing the vertex v.
pub fn cliques_at(h: &Graph, v: usize) -> Result<Vec<Clique>> {
    if v >= h.n() {
        return Err(Error::VertexOutOfRange { v, n: h.n() });
    }
    Ok(enumerate_cliques(h, None)?
        .into_iter()
        .filter(|k| k.contains(v))
        .collect())
}

/// Cliques whose vertex set meets X.
pub fn cliques_meeting(h: &Graph, x: &VertexSet) -> Result<Vec<Clique>> {
    if let Some(v) = x.iter().find(|&v| v >= h.n()) {
        return Err(Error::VertexOutOfRange { v, n: h.n() });
    }
    Ok(enumerate_cliques(h, None)?
        .into_iter()
        .filter(|k| k.vertices().iter().any(|&v| x.contains(v)))
        .collect())
}

/// A sparse weighting f of the cliques of a host graph: only positive values
/// are stored, absent keys are implicitly zero.
#[derive(Clone, PartialEq, Eq)]
pub struct CliqueWeighting {
    host: Graph,
    entries: BTreeMap<Clique, u64>,
}

impl CliqueWeighting {
    /// The all-zero weighting.
    pub fn zero(host: &Graph) -> Self {
        Self {
            host: host.clone(),
            entries: BTreeMap::new(),
        }
    }

    /// Validates keys (must be cliques of `host`, no duplicates) and values
    /// (strictly positive).
    pub fn from_pairs<K: AsRef<[usize]>>(host: &Graph, pairs: &[(K, u64)]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (key, w) in pairs {
            let clique = Clique::new(host, key.as_ref())?;
            if *w == 0 {
                return Err(Error::NonPositiveWeight {
                    key: clique.to_string(),
                });
            }
            let display = clique.to_string();
            if entries.insert(clique, *w).is_some() {
                return Err(Error::DuplicateKey { key: display });
            }
        }
        Ok(Self {
            host: host.clone(),
            entries,
        })
    }

    pub(crate) fn from_map_unchecked(host: &Graph, entries: BTreeMap<Clique, u64>) -> Self {
        debug_assert!(entries.values().all(|&w| w > 0));
        Self {
            host: host.clone(),
            entries,
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// f(K); zero for keys not stored.
    pub fn get(&self, k: &Clique) -> u64 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn value_of(&self, vertices: &[usize]) -> u64 {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        self.entries
            .get(&Clique::from_sorted_unchecked(vs))
            .copied()
            .unwrap_or(0)
    }

    pub fn singleton_value(&self, v: usize) -> u64 {
        self.value_of(&[v])
    }

    pub fn edge_value(&self, u: usize, v: usize) -> u64 {
        self.value_of(&[u, v])
    }

    /// Positive entries in canonical (size, lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Clique, u64)> {
        self.entries.iter().map(|(k, &w)| (k, w))
    }

    pub fn support(&self) -> impl Iterator<Item = &Clique> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ f(K).
    pub fn total_weight(&self) -> u64 {
        self.entries.values().sum()
    }

    /// True when g(K) <= f(K) for every clique K (self in the role of f).
    pub fn dominates(&self, g: &CliqueWeighting) -> bool {
        g.entries.iter().all(|(k, &w)| self.get(k) >= w)
    }

    /// First edge of the host not contained in any positively weighted
    /// clique, or `None` when every edge is covered.
    pub fn uncovered_edge(&self) -> Option<(usize, usize)> {
        self.host
            .edges()
            .into_iter()
            .find(|&(u, v)| !self.entries.keys().any(|k| k.contains_edge(u, v)))
    }

    pub fn is_edge_covering(&self) -> bool {
        self.uncovered_edge().is_none()
    }
}

impl fmt::Debug for CliqueWeighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// The weighting that is 1 on every edge of `h` and 0 elsewhere; its
/// bipartization is the subdivision graph S(h).
pub fn unit_edge_weighting(h: &Graph) -> CliqueWeighting {
    let entries = h
        .edges()
        .into_iter()
        .map(|(u, v)| (Clique::from_sorted_unchecked(vec![u, v]), 1))
        .collect();
    CliqueWeighting::from_map_unchecked(h, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{complete_graph, Graph, VertexSet};

    #[test]
    fn clique_counts() {
        let k1 = Graph::empty(1);
        let cs = enumerate_cliques(&k1, None).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0]);

        let tri = complete_graph(3);
        assert_eq!(enumerate_cliques(&tri, None).unwrap().len(), 7);

        // 2^t - 1 complete subgraphs of K_t
        for t in 1..=6 {
            let kt = complete_graph(t);
            assert_eq!(
                enumerate_cliques(&kt, None).unwrap().len(),
                (1usize << t) - 1
            );
        }
    }

    #[test]
    fn paw_graph_has_nine_cliques() {
        let h = fixtures::paw();
        let cs = enumerate_cliques(&h, None).unwrap();
        assert_eq!(cs.len(), 9);
        // canonical order: 4 singletons, 4 edges, 1 triangle
        assert_eq!(cs[0].vertices(), &[0]);
        assert_eq!(cs[4].vertices(), &[0, 1]);
        assert_eq!(cs[8].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn clique_lower_bound_singletons_plus_edges() {
        for n in 0usize..=5 {
            let max = 1u64 << (n * n.saturating_sub(1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                let count = enumerate_cliques(&g, None).unwrap().len();
                assert!(count >= g.n() + g.edge_count());
            }
        }
    }

    #[test]
    fn cliques_at_examples() {
        let tri = complete_graph(3);
        let at0 = cliques_at(&tri, 0).unwrap();
        assert_eq!(at0.len(), 4);

        let h = fixtures::paw();
        let at_d = cliques_at(&h, 3).unwrap();
        let sets: Vec<&[usize]> = at_d.iter().map(|c| c.vertices()).collect();
        assert_eq!(sets, vec![&[3][..], &[2, 3][..]]);

        assert!(cliques_meeting(&h, &VertexSet::new()).unwrap().is_empty());
    }

    #[test]
    fn cliques_meeting_is_union_of_cliques_at() {
        for n in 1..=5 {
            let max = 1u64 << (n * (n - 1) / 2);
            for mask in 0..max {
                let g = crate::enumerate::graph_from_mask(n, mask);
                let x = VertexSet::from_iter((0..n).filter(|v| v % 2 == 0));
                let mut union: Vec<Clique> = Vec::new();
                for v in x.iter() {
                    for c in cliques_at(&g, v).unwrap() {
                        if !union.contains(&c) {
                            union.push(c);
                        }
                    }
                }
                union.sort_unstable();
                assert_eq!(cliques_meeting(&g, &x).unwrap(), union);
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let k6 = complete_graph(6);
        assert!(matches!(
            enumerate_cliques_capped(&k6, None, 10),
            Err(crate::error::Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn weighting_validation() {
        let h = fixtures::paw();
        let f = fixtures::paw_weighting();
        assert_eq!(f.len(), 7);
        assert_eq!(f.value_of(&[0, 1]), 3);
        assert_eq!(f.value_of(&[0, 2]), 0);

        // {a,d} is not an edge of the paw graph
        let err = CliqueWeighting::from_pairs(&h, &[(vec![0, 3], 1)]).unwrap_err();
        assert_eq!(err, crate::error::Error::NotAClique { u: 0, v: 3 });

        let empty: Vec<(Vec<usize>, u64)> = vec![];
        assert!(CliqueWeighting::from_pairs(&h, &empty).unwrap().is_zero());

        assert!(matches!(
            CliqueWeighting::from_pairs(&h, &[(vec![0], 0)]),
            Err(crate::error::Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            CliqueWeighting::from_pairs(&h, &[(vec![0, 1], 1), (vec![1, 0], 2)]),
            Err(crate::error::Error::DuplicateKey { .. })
        ));
    }

    #[test]
    fn edge_coverage() {
        let f = fixtures::paw_weighting();
        assert!(f.is_edge_covering());

        let g = unit_edge_weighting(&fixtures::paw());
        assert!(g.is_edge_covering());

        let k2 = complete_graph(2);
        let f = CliqueWeighting::from_pairs(&k2, &[(vec![0], 1)]).unwrap();
        assert_eq!(f.uncovered_edge(), Some((0, 1)));
    }
}
