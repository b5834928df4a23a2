//! Membership tests for the family 𝓑 of connected bipartite graphs with
//! γ = min(|A|, |B|), via three independent routes: the γ oracle, the
//! structural leaf/support conditions on G itself, and the two weighting
//! properties of the canonical inversion.

use std::fmt;

use crate::bipartize::{invert_bipartization, BipartiteGraph, Side};
use crate::blocks::block_decomposition;
use crate::cliques::{Clique, CliqueWeighting};
use crate::domination::{covering_number, gamma};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// First violated structural condition, with witness vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma5Violation {
    /// (3a) first part: a support vertex in B adjacent to two or more leaves.
    NotWeakSupport { support: usize },
    /// (3a) second part: a support vertex in B with a non-leaf neighbor that
    /// is not itself a support.
    NonSupportNeighbor { support: usize, neighbor: usize },
    /// (3b): a distance-2 pair in A, outside leaves and supports, with fewer
    /// than two B-vertices whose neighborhood is exactly the pair.
    MissingPairCopies { x: usize, y: usize, found: usize },
}

impl fmt::Display for Lemma5Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma5Violation::NotWeakSupport { support } => {
                write!(f, "(3a): support vertex {support} in B is not a weak support")
            }
            Lemma5Violation::NonSupportNeighbor { support, neighbor } => write!(
                f,
                "(3a): non-leaf neighbor {neighbor} of support vertex {support} is not a support"
            ),
            Lemma5Violation::MissingPairCopies { x, y, found } => write!(
                f,
                "(3b): pair {{{x}, {y}}} at distance 2 has {found} private common neighbors, needs 2"
            ),
        }
    }
}

/// First violated weighting property, with witness edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem5Violation {
    /// (1): an edge contained in no positively weighted complete subgraph.
    Uncovered { u: usize, v: usize },
    /// (2): an edge whose endpoints both have singleton weight 0 but whose
    /// own weight is below 2.
    SingleCopy { u: usize, v: usize, value: u64 },
}

impl fmt::Display for Theorem5Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem5Violation::Uncovered { u, v } => {
                write!(f, "(1): edge ({u}, {v}) lies in no positively weighted clique")
            }
            Theorem5Violation::SingleCopy { u, v, value } => write!(
                f,
                "(2): edge ({u}, {v}) has weight {value} < 2 while both endpoints have singleton weight 0"
            ),
        }
    }
}

/// First violated tree-membership condition, with witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corollary6Violation {
    /// (1): a non-trivial block whose weight is not exactly 1.
    BlockWeight { block: VertexSet, value: u64 },
    /// (1): a positively weighted non-trivial clique that is not a block.
    NonBlockPositive(Clique),
    /// (2): an edge with singleton weight 0 on both endpoints.
    UncoveredEdge { u: usize, v: usize },
}

impl fmt::Display for Corollary6Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corollary6Violation::BlockWeight { block, value } => {
                write!(f, "(1): block {block} has weight {value}, needs 1")
            }
            Corollary6Violation::NonBlockPositive(k) => {
                write!(f, "(1): non-block clique {k} has positive weight")
            }
            Corollary6Violation::UncoveredEdge { u, v } => write!(
                f,
                "(2): edge ({u}, {v}) has no endpoint with positive singleton weight"
            ),
        }
    }
}

fn require_normalized(g: &BipartiteGraph) -> Result<()> {
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let (a, b) = (g.side_a(), g.side_b());
    if a.is_empty() {
        return Err(Error::Precondition("side A must be non-empty".into()));
    }
    if a.len() > b.len() || (a.len() == b.len() && !a.contains(0)) {
        return Err(Error::Precondition(
            "sides must be normalized: A is the smaller side, ties to the side with vertex 0"
                .into(),
        ));
    }
    Ok(())
}

/// Structural conditions (3a) and (3b) on a normalized connected bipartite
/// graph; `None` means both hold.
pub fn check_lemma5_conditions(g: &BipartiteGraph) -> Result<Option<Lemma5Violation>> {
    require_normalized(g)?;
    let graph = g.graph();
    let profile = graph.support_profile();
    // (3a)
    for s in g.side_b().intersection(&profile.supports).iter() {
        if !profile.weak_supports.contains(s) {
            return Ok(Some(Lemma5Violation::NotWeakSupport { support: s }));
        }
        for w in graph.adj(s).iter() {
            if !profile.leaves.contains(w) && !profile.supports.contains(w) {
                return Ok(Some(Lemma5Violation::NonSupportNeighbor {
                    support: s,
                    neighbor: w,
                }));
            }
        }
    }
    // (3b)
    let eligible: Vec<usize> = g
        .side_a()
        .difference(&profile.leaves.union(&profile.supports))
        .iter()
        .collect();
    for (i, &x) in eligible.iter().enumerate() {
        for &y in &eligible[i + 1..] {
            let common = graph.adj(x).intersection(graph.adj(y));
            if common.is_empty() {
                continue; // distance is at least 4
            }
            let pair = VertexSet::from_iter([x, y]);
            let found = common.iter().filter(|&b| *graph.adj(b) == pair).count();
            if found < 2 {
                return Ok(Some(Lemma5Violation::MissingPairCopies { x, y, found }));
            }
        }
    }
    Ok(None)
}

/// Weighting properties (1) and (2) on a connected host with a non-zero
/// weighting; `None` means both hold.
pub fn check_theorem5_properties(f: &CliqueWeighting) -> Result<Option<Theorem5Violation>> {
    let h = f.host();
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if f.is_zero() {
        return Err(Error::Precondition("weighting must be non-zero".into()));
    }
    for (u, v) in h.edges() {
        let covered = f.iter().any(|(k, w)| w > 0 && k.contains_edge(u, v));
        if !covered {
            return Ok(Some(Theorem5Violation::Uncovered { u, v }));
        }
        if f.singleton_value(u) == 0 && f.singleton_value(v) == 0 {
            let value = f.edge_value(u, v);
            if value < 2 {
                return Ok(Some(Theorem5Violation::SingleCopy { u, v, value }));
            }
        }
    }
    Ok(None)
}

/// Tree-membership conditions for a weighting on a block graph; `None` means
/// both hold. Condition (1) constrains non-trivial blocks and non-trivial
/// non-block cliques; singleton weights are only constrained by (2).
pub fn check_corollary6(f: &CliqueWeighting) -> Result<Option<Corollary6Violation>> {
    let h = f.host();
    let decomp = block_decomposition(h);
    // block-graph precondition, checked on the single decomposition
    for block in &decomp.blocks {
        for u in block.iter() {
            for v in block.iter() {
                if v > u && !h.has_edge(u, v) {
                    return Err(Error::Precondition("host must be a block graph".into()));
                }
            }
        }
    }
    if f.is_zero() {
        return Err(Error::Precondition("weighting must be non-zero".into()));
    }
    // a canonically sorted clique equals a vertex set iff the ascending
    // iterations agree
    fn matches(k: &Clique, b: &VertexSet) -> bool {
        k.len() == b.len() && k.vertices().iter().copied().eq(b.iter())
    }
    let blocks: Vec<&VertexSet> = decomp.blocks.iter().filter(|b| b.len() >= 2).collect();
    for &block in &blocks {
        let value = f
            .iter()
            .find(|(k, _)| matches(k, block))
            .map_or(0, |(_, w)| w);
        if value != 1 {
            return Ok(Some(Corollary6Violation::BlockWeight {
                block: block.clone(),
                value,
            }));
        }
    }
    let mut singleton = vec![0u64; h.n()];
    for (k, w) in f.iter() {
        if k.len() == 1 {
            singleton[k.vertices()[0]] = w;
        } else if w > 0 && !blocks.iter().any(|b| matches(k, b)) {
            return Ok(Some(Corollary6Violation::NonBlockPositive(k.clone())));
        }
    }
    for u in 0..h.n() {
        if singleton[u] > 0 {
            continue;
        }
        for v in h.adj(u).iter() {
            if v > u && singleton[v] == 0 {
                return Ok(Some(Corollary6Violation::UncoveredEdge { u, v }));
            }
        }
    }
    Ok(None)
}

/// Full classification of a connected bipartite graph with respect to 𝓑.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub gamma: usize,
    pub beta: usize,
    pub side_sizes: (usize, usize),
    pub in_family_b: bool,
    pub lemma5: Option<Lemma5Violation>,
    pub theorem5: Option<Theorem5Violation>,
    pub routes_agree: bool,
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gamma: {}", self.gamma)?;
        writeln!(f, "beta: {}", self.beta)?;
        writeln!(f, "side_sizes: {} {}", self.side_sizes.0, self.side_sizes.1)?;
        writeln!(f, "in_family_b: {}", self.in_family_b)?;
        match &self.lemma5 {
            None => writeln!(f, "lemma5: true")?,
            Some(v) => writeln!(f, "lemma5: false {v}")?,
        }
        match &self.theorem5 {
            None => writeln!(f, "theorem5: true")?,
            Some(v) => writeln!(f, "theorem5: false {v}")?,
        }
        write!(f, "routes_agree: {}", self.routes_agree)
    }
}

/// Classifies g, computing γ and β, the structural conditions, and the
/// weighting properties of the canonical inversion on the smaller side.
/// A disagreement between the three routes would falsify a theorem, so it
/// aborts with a diagnostic dump rather than returning quietly.
pub fn classify(g: &BipartiteGraph) -> Result<ClassificationReport> {
    let norm = g.normalized();
    require_normalized(&norm)?;
    let graph = norm.graph();
    let gamma = gamma(graph)?;
    let (beta, _) = covering_number(graph)?;
    let a = norm.side_a().len();
    let b = norm.side_b().len();
    let in_family_b = gamma == a;
    let lemma5 = check_lemma5_conditions(&norm)?;
    let inversion = invert_bipartization(&norm, Side::A)?;
    let theorem5 = check_theorem5_properties(&inversion.f)?;
    let routes = [
        in_family_b,
        gamma == beta && beta == a,
        lemma5.is_none(),
        theorem5.is_none(),
    ];
    let routes_agree = routes.iter().all(|&r| r == routes[0]);
    assert!(
        routes_agree,
        "membership routes disagree on {:?}: gamma={gamma} beta={beta} |A|={a} \
         lemma5={lemma5:?} theorem5={theorem5:?}",
        graph.edges()
    );
    Ok(ClassificationReport {
        gamma,
        beta,
        side_sizes: (a, b),
        in_family_b,
        lemma5,
        theorem5,
        routes_agree,
    })
}
