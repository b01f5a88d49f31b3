//! Halin graphs stored as a characteristic tree plus the adjoint cycle
//! through its leaves.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `[0, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    #[inline]
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Hop count in `G = T ∪ C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphDistance(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("tree edges do not form a spanning tree: {0}")]
    NotATree(String),
    #[error("internal tree vertex {0} has tree-degree 2")]
    DegreeTwoInternal(VertexId),
    #[error("cycle does not list exactly the tree leaves: {0}")]
    CycleLeafMismatch(String),
    #[error("leaf order is not planar: removing tree edge ({0}, {1}) splits the cycle into more than two arcs")]
    ArcContiguityViolation(VertexId, VertexId),
    #[error("a Halin graph needs at least 3 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("cycle index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// An immutable, validated Halin graph.
///
/// Tree and cycle edges are kept apart; the adjacency of `G` is their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinGraph {
    n_total: usize,
    tree_adj: Vec<Vec<VertexId>>,
    cycle: Vec<VertexId>,
    /// Position of each vertex on the cycle, `u32::MAX` for internal vertices.
    cycle_pos: Vec<u32>,
    /// `leaf_parent[p]` is the tree neighbour of `cycle[p]`.
    leaf_parent: Vec<VertexId>,
    max_degree: usize,
}

const NOT_ON_CYCLE: u32 = u32::MAX;

impl HalinGraph {
    /// Validates and builds a Halin graph from tree edges and a planar leaf order.
    ///
    /// Checks run in this order: spanning tree, leaf count, cycle/leaf
    /// agreement, arc-contiguity of every tree edge, no internal vertex of
    /// tree-degree 2.
    pub fn new(
        n_total: usize,
        tree_edges: &[(VertexId, VertexId)],
        cycle: &[VertexId],
    ) -> Result<Self, GraphError> {
        if n_total == 0 {
            return Err(GraphError::NotATree("graph has no vertices".into()));
        }
        if tree_edges.len() != n_total - 1 {
            return Err(GraphError::NotATree(format!(
                "expected {} edges for {} vertices, got {}",
                n_total - 1,
                n_total,
                tree_edges.len()
            )));
        }
        let mut tree_adj = vec![Vec::new(); n_total];
        for &(u, v) in tree_edges {
            if u.index() >= n_total || v.index() >= n_total {
                return Err(GraphError::NotATree(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n_total}"
                )));
            }
            if u == v {
                return Err(GraphError::NotATree(format!("self-loop at {u}")));
            }
            tree_adj[u.index()].push(v);
            tree_adj[v.index()].push(u);
        }
        // n-1 edges + connected => acyclic.
        let reached = bfs_order(n_total, VertexId(0), |x| &tree_adj[x.index()]).len();
        if reached != n_total {
            return Err(GraphError::NotATree(format!(
                "only {reached} of {n_total} vertices reachable from vertex 0"
            )));
        }

        let leaf_count = tree_adj.iter().filter(|a| a.len() == 1).count();
        if leaf_count < 3 {
            return Err(GraphError::TooFewLeaves(leaf_count));
        }

        let mut cycle_pos = vec![NOT_ON_CYCLE; n_total];
        for (p, &a) in cycle.iter().enumerate() {
            if a.index() >= n_total {
                return Err(GraphError::CycleLeafMismatch(format!(
                    "cycle vertex {a} out of range"
                )));
            }
            if tree_adj[a.index()].len() != 1 {
                return Err(GraphError::CycleLeafMismatch(format!(
                    "cycle vertex {a} is not a tree leaf"
                )));
            }
            if cycle_pos[a.index()] != NOT_ON_CYCLE {
                return Err(GraphError::CycleLeafMismatch(format!(
                    "leaf {a} appears twice on the cycle"
                )));
            }
            cycle_pos[a.index()] = p as u32;
        }
        if cycle.len() != leaf_count {
            return Err(GraphError::CycleLeafMismatch(format!(
                "tree has {leaf_count} leaves but cycle lists {}",
                cycle.len()
            )));
        }

        check_arc_contiguity(&tree_adj, cycle, &cycle_pos)?;

        if let Some(v) = (0..n_total).find(|&v| tree_adj[v].len() == 2) {
            return Err(GraphError::DegreeTwoInternal(VertexId::from(v)));
        }

        let leaf_parent = cycle.iter().map(|a| tree_adj[a.index()][0]).collect();
        // Every leaf has degree 3 in G (n >= 3 makes the two cycle neighbours distinct).
        let max_degree = tree_adj
            .iter()
            .map(Vec::len)
            .filter(|&d| d > 1)
            .max()
            .unwrap_or(0)
            .max(3);

        Ok(HalinGraph {
            n_total,
            tree_adj,
            cycle: cycle.to_vec(),
            cycle_pos,
            leaf_parent,
            max_degree,
        })
    }

    /// Number of vertices `N`.
    #[inline]
    pub fn n_total(&self) -> usize {
        self.n_total
    }

    /// Number of cycle vertices `n`.
    #[inline]
    pub fn n_leaves(&self) -> usize {
        self.cycle.len()
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Leaves in planar order, 0-based positions.
    #[inline]
    pub fn cycle(&self) -> &[VertexId] {
        &self.cycle
    }

    #[inline]
    pub fn tree_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.tree_adj[v.index()]
    }

    /// Vertices of `T` in breadth-first order from `root`.
    pub fn tree_bfs(&self, root: VertexId) -> Vec<VertexId> {
        bfs_order(self.n_total, root, |x| self.tree_neighbors(x))
    }

    /// Tree neighbour of the leaf at 0-based cycle position `pos`.
    #[inline]
    pub fn leaf_parent(&self, pos: usize) -> VertexId {
        self.leaf_parent[pos]
    }

    /// 0-based cycle position of `v`, if it is a leaf.
    #[inline]
    pub fn cycle_position(&self, v: VertexId) -> Option<usize> {
        match self.cycle_pos[v.index()] {
            NOT_ON_CYCLE => None,
            p => Some(p as usize),
        }
    }

    #[inline]
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.cycle_pos[v.index()] != NOT_ON_CYCLE
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.n_total as u32).map(VertexId)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.tree_adj[v.index()].len() + if self.is_leaf(v) { 2 } else { 0 }
    }

    /// Neighbours of `v` in `G`: tree neighbours first, then the cycle
    /// predecessor and successor for leaves.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let cyc = self.cycle_position(v).map(|p| {
            let n = self.cycle.len();
            [self.cycle[(p + n - 1) % n], self.cycle[(p + 1) % n]]
        });
        self.tree_adj[v.index()]
            .iter()
            .copied()
            .chain(cyc.into_iter().flatten())
    }

    /// Edges of `T`, each once with `u < v`, sorted.
    pub fn tree_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges: Vec<_> = self
            .vertices()
            .flat_map(|u| {
                self.tree_neighbors(u)
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Breadth-first shortest-path length in `G`.
    pub fn distance(&self, u: VertexId, v: VertexId) -> GraphDistance {
        if u == v {
            return GraphDistance(0);
        }
        let mut dist = vec![u32::MAX; self.n_total];
        let mut queue = VecDeque::new();
        dist[u.index()] = 0;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let d = dist[x.index()] + 1;
            for y in self.neighbors(x) {
                if dist[y.index()] == u32::MAX {
                    if y == v {
                        return GraphDistance(d);
                    }
                    dist[y.index()] = d;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("Halin graphs are connected")
    }

    /// 1-based cyclic successor of cycle index `i`.
    pub fn cycle_successor(&self, i: usize) -> Result<usize, GraphError> {
        let n = self.check_cycle_index(i)?;
        Ok(if i == n { 1 } else { i + 1 })
    }

    /// 1-based cyclic predecessor of cycle index `i`.
    pub fn cycle_predecessor(&self, i: usize) -> Result<usize, GraphError> {
        let n = self.check_cycle_index(i)?;
        Ok(if i == 1 { n } else { i - 1 })
    }

    fn check_cycle_index(&self, i: usize) -> Result<usize, GraphError> {
        let n = self.cycle.len();
        if i == 0 || i > n {
            return Err(GraphError::IndexOutOfRange { index: i, len: n });
        }
        Ok(n)
    }
}

/// Vertices reachable from `root`, in BFS order.
pub(crate) fn bfs_order<'a>(
    n: usize,
    root: VertexId,
    neighbors: impl Fn(VertexId) -> &'a [VertexId],
) -> Vec<VertexId> {
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root.index()] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in neighbors(x) {
            if !seen[y.index()] {
                seen[y.index()] = true;
                order.push(y);
            }
        }
    }
    order
}

/// Every tree edge must split the leaves into two circular arcs.
///
/// Rooting the tree at the leaf on cycle position 0 keeps that position out
/// of every proper subtree, so each subtree's leaf set must be a plain
/// interval of positions: `max - min + 1 == count`.
fn check_arc_contiguity(
    tree_adj: &[Vec<VertexId>],
    cycle: &[VertexId],
    cycle_pos: &[u32],
) -> Result<(), GraphError> {
    let n_total = tree_adj.len();
    let root = cycle[0];
    let order = bfs_order(n_total, root, |x| &tree_adj[x.index()]);
    let mut parent = vec![root; n_total];
    let mut depth = vec![u32::MAX; n_total];
    depth[root.index()] = 0;
    for &x in &order {
        for &y in &tree_adj[x.index()] {
            if depth[y.index()] == u32::MAX {
                depth[y.index()] = depth[x.index()] + 1;
                parent[y.index()] = x;
            }
        }
    }

    let mut lo = vec![u32::MAX; n_total];
    let mut hi = vec![0u32; n_total];
    let mut count = vec![0u32; n_total];
    for &x in order.iter().rev() {
        let xi = x.index();
        if x != root && cycle_pos[xi] != NOT_ON_CYCLE {
            let p = cycle_pos[xi];
            lo[xi] = lo[xi].min(p);
            hi[xi] = hi[xi].max(p);
            count[xi] += 1;
        }
        if x == root {
            continue;
        }
        if hi[xi] - lo[xi] + 1 != count[xi] {
            return Err(GraphError::ArcContiguityViolation(parent[xi], x));
        }
        let pi = parent[xi].index();
        lo[pi] = lo[pi].min(lo[xi]);
        hi[pi] = hi[pi].max(hi[xi]);
        count[pi] += count[xi];
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn edges(list: &[(u32, u32)]) -> Vec<(VertexId, VertexId)> {
        list.iter().map(|&(a, b)| (v(a), v(b))).collect()
    }

    fn ids(list: &[u32]) -> Vec<VertexId> {
        list.iter().copied().map(v).collect()
    }

    fn k4() -> HalinGraph {
        HalinGraph::new(4, &edges(&[(0, 1), (0, 2), (0, 3)]), &ids(&[1, 2, 3])).unwrap()
    }

    fn w5() -> HalinGraph {
        HalinGraph::new(
            6,
            &edges(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
            &ids(&[1, 2, 3, 4, 5]),
        )
        .unwrap()
    }

    #[test]
    fn k4_is_valid_with_max_degree_three() {
        let g = k4();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.n_leaves(), 3);
        for a in g.vertices() {
            for b in g.vertices() {
                let expected = if a == b { 0 } else { 1 };
                assert_eq!(g.distance(a, b), GraphDistance(expected));
            }
        }
    }

    #[test]
    fn degree_two_internal_vertex_is_rejected() {
        // u(0) - v(1); u has leaves 2,3; v has the single leaf 4.
        let err = HalinGraph::new(
            5,
            &edges(&[(0, 1), (0, 2), (0, 3), (1, 4)]),
            &ids(&[2, 3, 4]),
        )
        .unwrap_err();
        assert_eq!(err, GraphError::DegreeTwoInternal(v(1)));
    }

    #[test]
    fn interleaved_leaf_order_violates_arc_contiguity() {
        // r=0 with internal children u=1, v=2; u has l1=3,l2=4; v has l3=5,l4=6.
        let tree = edges(&[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        let err = HalinGraph::new(7, &tree, &ids(&[3, 5, 4, 6])).unwrap_err();
        assert!(
            matches!(err, GraphError::ArcContiguityViolation(..)),
            "{err:?}"
        );
        // The same tree with a contiguous order only trips the degree-2 root.
        let err = HalinGraph::new(7, &tree, &ids(&[3, 4, 5, 6])).unwrap_err();
        assert_eq!(err, GraphError::DegreeTwoInternal(v(0)));
    }

    #[test]
    fn arc_violation_with_valid_degrees() {
        // Same as above but r gets a third leaf 7.
        let tree = edges(&[(0, 1), (0, 2), (0, 7), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert!(HalinGraph::new(8, &tree, &ids(&[3, 4, 5, 6, 7])).is_ok());
        assert!(HalinGraph::new(8, &tree, &ids(&[7, 3, 4, 5, 6])).is_ok());
        assert!(HalinGraph::new(8, &tree, &ids(&[4, 5, 6, 7, 3])).is_ok());
        assert!(matches!(
            HalinGraph::new(8, &tree, &ids(&[3, 5, 4, 6, 7])),
            Err(GraphError::ArcContiguityViolation(..))
        ));
        assert!(HalinGraph::new(8, &tree, &ids(&[3, 4, 7, 5, 6])).is_ok());
        assert!(matches!(
            HalinGraph::new(8, &tree, &ids(&[3, 7, 4, 5, 6])),
            Err(GraphError::ArcContiguityViolation(..))
        ));
    }

    #[test]
    fn tree_shape_errors() {
        assert!(matches!(
            HalinGraph::new(4, &edges(&[(0, 1), (1, 2), (2, 0)]), &ids(&[1, 2, 3])),
            Err(GraphError::NotATree(_))
        ));
        assert!(matches!(
            HalinGraph::new(4, &edges(&[(0, 1), (0, 2)]), &ids(&[1, 2])),
            Err(GraphError::NotATree(_))
        ));
        assert!(matches!(
            HalinGraph::new(4, &edges(&[(0, 1), (0, 9), (0, 3)]), &ids(&[1, 3])),
            Err(GraphError::NotATree(_))
        ));
        // A path has two leaves.
        assert_eq!(
            HalinGraph::new(3, &edges(&[(0, 1), (1, 2)]), &ids(&[0, 2])).unwrap_err(),
            GraphError::TooFewLeaves(2)
        );
    }

    #[test]
    fn cycle_must_match_leaves() {
        let tree = edges(&[(0, 1), (0, 2), (0, 3)]);
        for bad in [&[1, 2][..], &[1, 2, 2], &[1, 2, 0], &[1, 2, 3, 1]] {
            assert!(
                matches!(
                    HalinGraph::new(4, &tree, &ids(bad)),
                    Err(GraphError::CycleLeafMismatch(_))
                ),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn wheel_distances() {
        let g = w5();
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.distance(v(1), v(3)), GraphDistance(2));
        assert_eq!(g.distance(v(1), v(2)), GraphDistance(1));
        assert_eq!(g.distance(v(5), v(1)), GraphDistance(1));
        assert_eq!(g.distance(v(0), v(4)), GraphDistance(1));
        assert_eq!(g.distance(v(4), v(4)), GraphDistance(0));
        for leaf in 1..=5 {
            assert_eq!(g.degree(v(leaf)), 3);
        }
    }

    #[test]
    fn cycle_index_arithmetic() {
        let g = w5();
        assert_eq!(g.cycle_successor(5), Ok(1));
        assert_eq!(g.cycle_successor(2), Ok(3));
        assert_eq!(g.cycle_predecessor(2), Ok(1));
        assert_eq!(g.cycle_predecessor(g.cycle_predecessor(2).unwrap()), Ok(5));
        assert_eq!(
            g.cycle_successor(0),
            Err(GraphError::IndexOutOfRange { index: 0, len: 5 })
        );
        assert!(g.cycle_predecessor(6).is_err());
    }
}
