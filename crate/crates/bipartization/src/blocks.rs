//! Block decomposition, block-graph recognition, and the characterization of
//! weightings whose bipartization is a tree.

use std::fmt;

use crate::cliques::{Clique, CliqueWeighting};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Blocks (maximal connected subgraphs without a cut vertex) and the cut
/// vertices of a graph. Bridges are 2-vertex blocks; isolated vertices are
/// 1-vertex blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// Computes the block/cut-vertex decomposition. Blocks are ordered by their
/// smallest contained vertex id (ties by next members).
pub fn block_decomposition(h: &Graph) -> BlockDecomposition {
    let n = h.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut cut_vertices = VertexSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if h.degree(root) == 0 {
            blocks.push(VertexSet::singleton(root));
            disc[root] = time;
            time += 1;
            continue;
        }
        // iterative lowpoint DFS with an edge stack; neighbor lists live in
        // one shared arena indexed by (start, cursor) per frame
        let mut frames: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut neigh: Vec<usize> = Vec::new();
        disc[root] = time;
        low[root] = time;
        time += 1;
        neigh.extend(h.adj(root).iter());
        frames.push((root, usize::MAX, 0, 0));
        let mut root_children = 0usize;
        while let Some(top) = frames.last_mut() {
            let v = top.0;
            let parent = top.1;
            // the topmost frame's neighbor range runs to the arena's end
            if top.2 + top.3 < neigh.len() {
                let w = neigh[top.2 + top.3];
                top.3 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    let start = neigh.len();
                    neigh.extend(h.adj(w).iter());
                    frames.push((w, v, start, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let start = top.2;
                frames.pop();
                neigh.truncate(start);
                if let Some(up) = frames.last_mut() {
                    let p = up.0;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // edges discovered at or below v form a block rooted at p
                        let mut block = VertexSet::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            block.insert(a);
                            block.insert(b);
                            edge_stack.pop();
                            if a == p && b == v {
                                break;
                            }
                        }
                        blocks.push(block);
                        if p != root {
                            cut_vertices.insert(p);
                        }
                    }
                }
            }
        }
        if root_children > 1 {
            cut_vertices.insert(root);
        }
    }
    blocks.sort_by(|a, b| a.iter().cmp(b.iter()));
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// True when every block induces a complete subgraph.
pub fn is_block_graph(h: &Graph) -> bool {
    block_decomposition(h).blocks.iter().all(|b| {
        let vs: Vec<usize> = b.iter().collect();
        vs.iter()
            .all(|&u| vs.iter().all(|&v| u == v || h.has_edge(u, v)))
    })
}

/// An alternating vertex/clique sequence v0, F1, v1, ..., Fk, vk where each
/// consecutive vertex pair is an edge inside the positively weighted clique
/// between them.
#[derive(Clone, PartialEq, Eq)]
pub struct FCompletePath {
    pub vertices: Vec<usize>,
    pub cliques: Vec<Clique>,
}

impl FCompletePath {
    /// Vertices strictly between the endpoints.
    pub fn internal_vertices(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

impl fmt::Debug for FCompletePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.vertices[0])?;
        for (i, c) in self.cliques.iter().enumerate() {
            write!(f, ", {c}, {}", self.vertices[i + 1])?;
        }
        write!(f, ")")
    }
}

/// Searches exhaustively for two distinct, internally vertex-disjoint
/// positively weighted complete paths from u to v. When such a pair exists
/// the bipartization of (host, f) necessarily contains a cycle.
pub fn find_two_disjoint_f_paths(
    f: &CliqueWeighting,
    u: usize,
    v: usize,
) -> Result<Option<(FCompletePath, FCompletePath)>> {
    let h = f.host();
    let n = h.n();
    if u >= n {
        return Err(Error::VertexOutOfRange { v: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if u == v {
        return Err(Error::InvalidInput(
            "path endpoints must be distinct".into(),
        ));
    }
    // cliques covering each edge, in canonical order
    let positive: Vec<&Clique> = f.support().filter(|k| !k.is_trivial()).collect();
    let covering = |x: usize, y: usize| -> Vec<&Clique> {
        positive
            .iter()
            .copied()
            .filter(|k| k.contains_edge(x, y))
            .collect()
    };
    // auxiliary adjacency: x-y usable when some positive clique contains both
    let mut aux = Graph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            if h.has_edge(x, y) && positive.iter().any(|k| k.contains_edge(x, y)) {
                aux.add_edge(x, y)?;
            }
        }
    }
    // all simple u-v vertex paths of the auxiliary graph, DFS order
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![u];
    let mut visited = VertexSet::singleton(u);
    collect_paths(&aux, v, &mut stack, &mut visited, &mut paths);

    for (i, p) in paths.iter().enumerate() {
        // a single vertex path yields two distinct annotated paths when some
        // step admits two different cliques
        if let Some(step) = (0..p.len() - 1)
            .find(|&s| covering(p[s], p[s + 1]).len() >= 2)
        {
            let options = covering(p[step], p[step + 1]);
            let mut first = annotate(p, &covering);
            let second = {
                let mut q = first.clone();
                q.cliques[step] = options[1].clone();
                q
            };
            first.cliques[step] = options[0].clone();
            return Ok(Some((first, second)));
        }
        for q in paths.iter().skip(i + 1) {
            let pi: VertexSet = p[1..p.len() - 1].iter().copied().collect();
            let qi: VertexSet = q[1..q.len() - 1].iter().copied().collect();
            if pi.is_disjoint(&qi) {
                return Ok(Some((annotate(p, &covering), annotate(q, &covering))));
            }
        }
    }
    Ok(None)
}

fn collect_paths(
    aux: &Graph,
    target: usize,
    stack: &mut Vec<usize>,
    visited: &mut VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *stack.last().unwrap();
    if last == target {
        out.push(stack.clone());
        return;
    }
    for w in aux.adj(last).iter() {
        if !visited.contains(w) {
            visited.insert(w);
            stack.push(w);
            collect_paths(aux, target, stack, visited, out);
            stack.pop();
            visited.remove(w);
        }
    }
}

fn annotate<'a, F>(path: &[usize], covering: &F) -> FCompletePath
where
    F: Fn(usize, usize) -> Vec<&'a Clique>,
{
    let cliques = path
        .windows(2)
        .map(|w| covering(w[0], w[1])[0].clone())
        .collect();
    FCompletePath {
        vertices: path.to_vec(),
        cliques,
    }
}

/// Why a weighting's bipartization fails to be a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeViolation {
    /// A non-trivial clique carries two or more copies.
    MultipleCopies(Clique),
    /// The host has a block that is not complete.
    NotBlockGraph(VertexSet),
    /// A non-trivial, non-block clique carries a copy.
    WeightedNonBlock(Clique),
    /// A non-trivial block carries no copy.
    UnweightedBlock(VertexSet),
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeViolation::MultipleCopies(k) => {
                write!(f, "non-trivial clique {k} has weight greater than one")
            }
            TreeViolation::NotBlockGraph(b) => write!(f, "block {b} is not complete"),
            TreeViolation::WeightedNonBlock(k) => {
                write!(f, "weighted clique {k} is not a block")
            }
            TreeViolation::UnweightedBlock(b) => write!(f, "block {b} has weight zero"),
        }
    }
}

/// Decides whether the bipartization of (host, f) is a tree, without
/// constructing it: the host must be connected and every edge covered by a
/// positively weighted clique (precondition errors otherwise).
///
/// Returns `None` for a tree, or the first violated condition. Singleton
/// cliques are ignored: their copies are leaves and never create cycles.
pub fn is_tree_bipartization(f: &CliqueWeighting) -> Result<Option<TreeViolation>> {
    let h = f.host();
    if !h.is_connected() {
        return Err(Error::Precondition("host graph must be connected".into()));
    }
    if let Some((u, v)) = f.uncovered_edge() {
        return Err(Error::Precondition(format!(
            "edge ({u},{v}) is not covered by any positively weighted clique"
        )));
    }
    if let Some((k, _)) = f.iter().find(|(k, w)| !k.is_trivial() && *w >= 2) {
        return Ok(Some(TreeViolation::MultipleCopies(k.clone())));
    }
    let decomp = block_decomposition(h);
    for b in &decomp.blocks {
        let vs: Vec<usize> = b.iter().collect();
        let complete = vs
            .iter()
            .all(|&u| vs.iter().all(|&v| u == v || h.has_edge(u, v)));
        if !complete {
            return Ok(Some(TreeViolation::NotBlockGraph(b.clone())));
        }
    }
    let block_cliques: Vec<Clique> = decomp
        .blocks
        .iter()
        .filter(|b| b.len() >= 2)
        .map(|b| Clique::from_sorted_unchecked(b.iter().collect()))
        .collect();
    for (k, _) in f.iter() {
        if !k.is_trivial() && !block_cliques.contains(k) {
            return Ok(Some(TreeViolation::WeightedNonBlock(k.clone())));
        }
    }
    for (b, k) in decomp
        .blocks
        .iter()
        .filter(|b| b.len() >= 2)
        .zip(block_cliques.iter())
    {
        if f.get(k) != 1 {
            return Ok(Some(TreeViolation::UnweightedBlock(b.clone())));
        }
    }
    Ok(None)
}

/// A weighting supported on the edges of a spanning tree of `h` (each with
/// weight 1); its bipartization is the subdivision of that spanning tree and
/// therefore a tree. For the single-vertex host the weighting {v}: 1 is
/// returned so the result is non-trivial.
pub fn tree_weighting_for(h: &Graph) -> Result<CliqueWeighting> {
    if !h.is_connected() {
        return Err(Error::Precondition(
            "spanning-tree weighting requires a connected, non-empty host".into(),
        ));
    }
    if h.n() == 1 {
        return CliqueWeighting::from_pairs(h, &[(vec![0], 1)]);
    }
    // BFS spanning tree from vertex 0
    let mut parent = vec![usize::MAX; h.n()];
    let mut seen = VertexSet::singleton(0);
    let mut queue = std::collections::VecDeque::from([0]);
    let mut pairs: Vec<(Vec<usize>, u64)> = Vec::new();
    while let Some(u) = queue.pop_front() {
        for w in h.adj(u).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                parent[w] = u;
                pairs.push((vec![u.min(w), u.max(w)], 1));
                queue.push_back(w);
            }
        }
    }
    CliqueWeighting::from_pairs(h, &pairs)
}

/// The same weighting over the spanning subgraph of its host that keeps only
/// the edges covered by a positive non-trivial clique. Evaluating the tree
/// characterization on this subgraph matches how a spanning-block-graph
/// weighting is meant to be read: the conditions apply to the covered part.
pub fn restrict_to_support(f: &CliqueWeighting) -> CliqueWeighting {
    let h = f.host();
    let mut edges = Vec::new();
    for (k, w) in f.iter() {
        if w == 0 || k.is_trivial() {
            continue;
        }
        let vs = k.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                edges.push((vs[i], vs[j]));
            }
        }
    }
    let host = Graph::from_edges(h.n(), &edges).expect("edges come from a valid host");
    let pairs: Vec<(Vec<usize>, u64)> = f
        .iter()
        .map(|(k, w)| (k.vertices().to_vec(), w))
        .filter(|&(_, w)| w > 0)
        .collect();
    CliqueWeighting::from_pairs(&host, &pairs).expect("positive cliques stay complete")
}
