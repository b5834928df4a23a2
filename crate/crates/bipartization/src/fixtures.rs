//! Small hand-built graphs and weightings reused across tests, docs, and the
//! verification harness.

use crate::cliques::CliqueWeighting;
use crate::graph::{Graph, VertexSet};

/// The paw graph: triangle 0-1-2 plus the pendant edge 2-3.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// A weighting of the paw graph with 13 copies in total; its bipartization
/// has 17 vertices and 23 edges and lies in the family 𝓑.
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

/// The weighting of the paw graph whose bipartization is a tree: singleton
/// copies on 0, 1, 3 plus one copy per block.
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

/// An 11-vertex tree that is simultaneously the bipartization of the paw
/// graph (via [`paw_tree_weighting`], on side A = {0,1,2,3}) and of
/// [`double_triangle`] (via [`double_triangle_weighting`], on side B).
///
/// Vertex ids: A-side 0..=3; B-side 4..=10.
pub fn bilabeled_tree() -> Graph {
    Graph::from_edges(
        11,
        &[
            (4, 0),  // x - a
            (0, 5),  // a - w
            (5, 1),  // w - b
            (1, 6),  // b - z
            (1, 7),  // b - y
            (5, 2),  // w - c
            (2, 9),  // c - u
            (9, 3),  // u - d
            (3, 8),  // d - t
            (3, 10), // d - v
        ],
    )
    .unwrap()
}

/// The smaller side of [`bilabeled_tree`].
pub fn bilabeled_tree_side_a() -> VertexSet {
    VertexSet::from_iter([0, 1, 2, 3])
}

/// The larger side of [`bilabeled_tree`].
pub fn bilabeled_tree_side_b() -> VertexSet {
    VertexSet::from_iter([4, 5, 6, 7, 8, 9, 10])
}

/// Two triangles {1,2,3} and {4,5,6} joined by the edge 1-5, plus the
/// pendant edge 0-1. A block graph on 7 vertices.
///
/// Vertex ids: x=0, w=1, z=2, y=3, t=4, u=5, v=6.
pub fn double_triangle() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1), // x - w
            (1, 2), // w - z
            (1, 3), // w - y
            (2, 3), // z - y
            (1, 5), // w - u
            (4, 5), // t - u
            (4, 6), // t - v
            (5, 6), // u - v
        ],
    )
    .unwrap()
}

/// One copy per block of [`double_triangle`]; its bipartization is again the
/// 11-vertex tree, yet this weighting fails the second membership property
/// (the edge 0-1 has weight 1 but both endpoints carry singleton weight 0).
pub fn double_triangle_weighting() -> CliqueWeighting {
    CliqueWeighting::from_pairs(
        &double_triangle(),
        &[
            (vec![0, 1], 1),
            (vec![1, 5], 1),
            (vec![1, 2, 3], 1),
            (vec![4, 5, 6], 1),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(paw().edge_count(), 4);
        let t = bilabeled_tree();
        assert!(t.is_tree());
        let (a, b) = t.bipartition().unwrap();
        assert_eq!(a, bilabeled_tree_side_a());
        assert_eq!(b, bilabeled_tree_side_b());
        let f = double_triangle();
        assert_eq!((f.n(), f.edge_count()), (7, 8));
        assert!(f.bipartition().is_none()); // contains triangles
    }
}
