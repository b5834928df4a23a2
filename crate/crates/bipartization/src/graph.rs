//! Simple undirected graphs over dense integer vertex ids, plus the bitset
//! vertex-set type every other module builds on.

use std::collections::VecDeque;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A set of vertex ids with bitset semantics.
///
/// Graphs at desk scale fit in one 64-bit word; the inline storage keeps the
/// exhaustive sweeps allocation-free for n <= 64.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The full set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    /// First backing word: the whole set when the universe is at most 64.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Set backed by a single word (empty words stay trimmed).
    pub(crate) fn from_word(w: u64) -> Self {
        let mut s = Self::new();
        if w != 0 {
            s.words.push(w);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % WORD_BITS));
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let w = v / WORD_BITS;
        w < self.words.len() && self.words[w] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self::new();
        out.words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        out.trim();
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Keeps Eq/Hash canonical after removals.
    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Leaves (degree-1 vertices), their supports, and the supports adjacent to
/// exactly one leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProfile {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub weak_supports: VertexSet,
}

/// A finite simple undirected graph on vertices 0..n-1.
///
/// Values are immutable once built and safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on n vertices (n = 0 is allowed).
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// N(v), the open neighborhood.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.neighborhood(v)?;
        s.insert(v);
        Ok(s)
    }

    /// N(X), the union of the open neighborhoods of the members of X.
    pub fn set_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        let mut s = VertexSet::new();
        for v in x.iter() {
            s.union_with(&self.adj[v]);
        }
        Ok(s)
    }

    /// Breadth-first distances from v; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(v)?;
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path distance, `None` if u and v are in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph has zero components and reports not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// A proper 2-coloring (A, B), or `None` if the graph has an odd cycle.
    ///
    /// Deterministic: in every component the side containing its smallest
    /// vertex id goes to A. The empty graph is bipartite with (∅, ∅).
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        if self.n <= 64 {
            return self.bipartition_small();
        }
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for v in 0..self.n {
            if color[v].is_some() {
                continue;
            }
            color[v] = Some(true);
            let mut queue = vec![v];
            while let Some(u) = queue.pop() {
                let cu = color[u].unwrap();
                for w in self.adj[u].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        let b = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        Some((a, b))
    }

    /// Word-parallel two-coloring for graphs that fit in a single bitset word.
    /// Level-synchronous BFS: an edge inside a level certifies an odd cycle,
    /// otherwise vertices split by level parity (roots land on the even side,
    /// matching the general routine's coloring exactly).
    fn bipartition_small(&self) -> Option<(VertexSet, VertexSet)> {
        debug_assert!(self.n <= 64);
        let all: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen = 0u64;
        let mut even = 0u64;
        let mut odd = 0u64;
        while seen != all {
            let root = (!seen & all).trailing_zeros() as usize;
            let mut level = 1u64 << root;
            let mut parity_even = true;
            while level != 0 {
                seen |= level;
                if parity_even {
                    even |= level;
                } else {
                    odd |= level;
                }
                let mut next = 0u64;
                let mut rest = level;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let av = self.adj[v].low_word();
                    if av & level != 0 {
                        return None;
                    }
                    next |= av;
                }
                level = next & !seen;
                parity_even = !parity_even;
            }
        }
        Some((VertexSet::from_word(even), VertexSet::from_word(odd)))
    }

    pub fn support_profile(&self) -> SupportProfile {
        let leaves: VertexSet = (0..self.n).filter(|&v| self.degree(v) == 1).collect();
        let mut supports = VertexSet::new();
        let mut weak_supports = VertexSet::new();
        for v in 0..self.n {
            let leaf_neighbors = self.adj[v].intersection(&leaves).len();
            if leaf_neighbors >= 1 {
                supports.insert(v);
                if leaf_neighbors == 1 {
                    weak_supports.insert(v);
                }
            }
        }
        SupportProfile {
            leaves,
            supports,
            weak_supports,
        }
    }

    /// The subgraph induced by X, relabeled to 0..|X|-1.
    ///
    /// The returned vector maps each new id to its original vertex id,
    /// in ascending original order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(x)?;
        let old_ids: Vec<usize> = x.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (new, &old) in old_ids.iter().enumerate() {
            new_of[old] = new;
        }
        let mut g = Graph::empty(old_ids.len());
        for (new, &old) in old_ids.iter().enumerate() {
            for w in self.adj[old].intersection(x).iter() {
                if old < w {
                    g.add_edge(new, new_of[w])?;
                }
            }
        }
        Ok((g, old_ids))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Complete graph K_n.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Path P_n on vertices 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

/// Cycle C_n (n >= 3).
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0).unwrap();
    g
}

/// Complete bipartite graph K_{m,n}: side {0..m}, side {m..m+n}.
pub fn complete_bipartite_graph(m: usize, n: usize) -> Graph {
    let mut g = Graph::empty(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Star K_{1,k} with the center at vertex 0.
pub fn star_graph(k: usize) -> Graph {
    complete_bipartite_graph(1, k)
}
