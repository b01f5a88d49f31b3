//! Exhaustive S-packing colorability for small graphs.

use thiserror::Error;

use crate::colorer::{packing_coloring, Color, ColorError};
use crate::graph::HalinGraph;
use crate::verifier::{verify_packing, ClassAssignment, PackingSequence};

/// Default cap on `n_total` for exhaustive search.
pub const DEFAULT_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exhaustive-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Color(#[from] ColorError),
}

/// Hop distances between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Builds a matrix from explicit rows; `rows` must be square.
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "distance matrix must be square"
        );
        DistanceMatrix {
            n,
            d: rows.concat(),
        }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn max_entry(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.get(v, w) == 1).count()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &HalinGraph) -> DistanceMatrix {
    let n = g.n_total();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in g.vertices() {
        let row = &mut d[s.index() * n..(s.index() + 1) * n];
        row[s.index()] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if row[y.index()] == u32::MAX {
                    row[y.index()] = row[x.index()] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub feasible: bool,
    /// Per vertex, its class index in `1..=k`.
    pub witness: Option<Vec<usize>>,
}

/// Decides whether `g` has an S-packing coloring, with the default size guard.
pub fn s_packing_colorable(
    g: &HalinGraph,
    seq: &PackingSequence,
) -> Result<OracleResult, OracleError> {
    s_packing_colorable_with_limit(g, seq, DEFAULT_MAX_VERTICES)
}

pub fn s_packing_colorable_with_limit(
    g: &HalinGraph,
    seq: &PackingSequence,
    max_vertices: usize,
) -> Result<OracleResult, OracleError> {
    if g.n_total() > max_vertices {
        return Err(OracleError::TooLarge {
            n: g.n_total(),
            limit: max_vertices,
        });
    }
    Ok(search(&all_pairs_distances(g), seq))
}

/// Exact backtracking over a precomputed distance matrix.
///
/// Vertices are assigned in descending degree order (ties by id). Classes
/// with equal radius are interchangeable, so a class is only opened after
/// its lower-indexed twin has been used.
pub fn search(dm: &DistanceMatrix, seq: &PackingSequence) -> OracleResult {
    let n = dm.len();
    let radii = seq.radii();
    let k = radii.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(dm.degree(v)), v));

    let mut state = Search {
        dm,
        radii,
        order: &order,
        members: vec![Vec::new(); k],
        class_of: vec![usize::MAX; n],
    };
    if state.extend(0) {
        let witness = state.class_of.iter().map(|&c| c + 1).collect();
        OracleResult {
            feasible: true,
            witness: Some(witness),
        }
    } else {
        OracleResult {
            feasible: false,
            witness: None,
        }
    }
}

struct Search<'a> {
    dm: &'a DistanceMatrix,
    radii: &'a [u32],
    order: &'a [usize],
    members: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for c in 0..self.radii.len() {
            let twin_unused =
                c > 0 && self.radii[c - 1] == self.radii[c] && self.members[c - 1].is_empty();
            if twin_unused {
                continue;
            }
            let s = self.radii[c];
            if self.members[c].iter().any(|&w| self.dm.get(v, w) <= s) {
                continue;
            }
            self.members[c].push(v);
            self.class_of[v] = c;
            if self.extend(depth + 1) {
                return true;
            }
            self.members[c].pop();
            self.class_of[v] = usize::MAX;
        }
        false
    }
}

/// Labels for a witness: the color names when `seq` is `(1,1,2,2,2)`,
/// otherwise `c1..ck`.
pub fn witness_labels(witness: &[usize], seq: &PackingSequence) -> Vec<String> {
    if *seq == PackingSequence::standard() {
        witness
            .iter()
            .map(|&c| Color::ALL[c - 1].label().to_owned())
            .collect()
    } else {
        witness.iter().map(|&c| format!("c{c}")).collect()
    }
}

/// Class spec matching [`witness_labels`].
pub fn witness_classes(seq: &PackingSequence) -> ClassAssignment<String> {
    if *seq == PackingSequence::standard() {
        Color::ALL
            .iter()
            .map(|c| (c.label().to_owned(), c.radius()))
            .collect()
    } else {
        seq.radii()
            .iter()
            .enumerate()
            .map(|(i, &s)| (format!("c{}", i + 1), s))
            .collect()
    }
}

/// The colorer's output is a valid packing and exhaustive search agrees the
/// graph is (1,1,2,2,2)-packing colorable.
pub fn cross_check(g: &HalinGraph) -> Result<bool, OracleError> {
    cross_check_with_limit(g, DEFAULT_MAX_VERTICES)
}

pub fn cross_check_with_limit(g: &HalinGraph, max_vertices: usize) -> Result<bool, OracleError> {
    let oracle = s_packing_colorable_with_limit(g, &PackingSequence::standard(), max_vertices)?;
    let phi = packing_coloring(g)?;
    let report = verify_packing(g, phi.as_slice(), &ClassAssignment::standard())
        .expect("colorer output is total over the standard colors");
    Ok(report.ok() && oracle.feasible)
}
