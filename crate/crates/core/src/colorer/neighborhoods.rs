use std::fmt;

use super::{Color, Coloring, CycleView};
use crate::graph::{HalinGraph, VertexId};

/// `N[b]`: for each internal vertex `b`, the working indices of cycle
/// vertices whose tree parent is `b` and whose color is not `1`/`1'`.
///
/// Stored as a compressed adjacency over vertex ids; every list is in
/// ascending working-index order. Membership is fixed at build time, colors
/// are read live from the coloring.
#[derive(Debug, Clone)]
pub struct TwoNeighborhoods {
    start: Vec<u32>,
    members: Vec<u32>,
}

impl TwoNeighborhoods {
    pub fn build(g: &HalinGraph, view: &CycleView, phi: &Coloring) -> Self {
        let n = view.len();
        let mut start = vec![0u32; g.n_total() + 1];
        let two_colored = |k: usize| !phi.of(view.vertex(k)).is_one();
        for k in (1..=n).filter(|&k| two_colored(k)) {
            start[view.parent(k).index() + 1] += 1;
        }
        for i in 1..start.len() {
            start[i] += start[i - 1];
        }
        let mut fill = start.clone();
        let mut members = vec![0u32; start[g.n_total()] as usize];
        for k in (1..=n).filter(|&k| two_colored(k)) {
            let slot = &mut fill[view.parent(k).index()];
            members[*slot as usize] = k as u32;
            *slot += 1;
        }
        TwoNeighborhoods { start, members }
    }

    /// Working indices in `N[b]`, ascending. Empty for vertices that are not keys.
    #[inline]
    pub fn get(&self, b: VertexId) -> &[u32] {
        let i = b.index();
        &self.members[self.start[i] as usize..self.start[i + 1] as usize]
    }

    /// Non-empty entries, keyed by parent.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &[u32])> + '_ {
        (0..self.start.len() - 1)
            .map(|i| (VertexId::from(i), self.get(VertexId::from(i))))
            .filter(|(_, m)| !m.is_empty())
    }

    /// Checks that hold after the cycle recoloring and before conflicts are
    /// resolved: every `N[b]` has at most three members, and a three-member
    /// `N[b]` contains two cycle-consecutive leaves of different colors.
    pub fn check_before_resolving(
        &self,
        view: &CycleView,
        phi: &Coloring,
    ) -> Vec<NeighborhoodViolation> {
        let n = view.len();
        let color = |k: u32| phi.of(view.vertex(k as usize));
        let consecutive = |x: u32, y: u32| y == x + 1 || (x == 1 && y as usize == n);
        let mut out = Vec::new();
        for (b, m) in self.iter() {
            if m.len() > 3 {
                out.push(NeighborhoodViolation::Oversized {
                    parent: b,
                    size: m.len(),
                });
            } else if m.len() == 3 {
                let pairs = [(m[0], m[1]), (m[1], m[2]), (m[0], m[2])];
                let adjacent: Vec<_> = pairs.iter().filter(|&&(x, y)| consecutive(x, y)).collect();
                if adjacent.is_empty() {
                    out.push(NeighborhoodViolation::NoConsecutivePair { parent: b });
                } else if adjacent.iter().all(|&&(x, y)| color(x) == color(y)) {
                    out.push(NeighborhoodViolation::ConsecutiveSameColor { parent: b });
                }
            }
        }
        out
    }

    /// Checks that hold once conflicts are resolved: a three-member `N[b]`
    /// uses three distinct colors, and no `N[b]` holds two `2c` leaves.
    pub fn check_after_resolving(
        &self,
        view: &CycleView,
        phi: &Coloring,
    ) -> Vec<NeighborhoodViolation> {
        let color = |k: u32| phi.of(view.vertex(k as usize));
        let mut out = Vec::new();
        for (b, m) in self.iter() {
            if m.iter().filter(|&&k| color(k) == Color::TwoC).count() > 1 {
                out.push(NeighborhoodViolation::Duplicate2c { parent: b });
            }
            if m.len() == 3 {
                let (x, y, z) = (color(m[0]), color(m[1]), color(m[2]));
                if x == y || y == z || x == z {
                    out.push(NeighborhoodViolation::TripleNotDistinct { parent: b });
                }
            }
        }
        out
    }
}

/// A structural invariant of the pipeline that failed on some `N[b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborhoodViolation {
    /// More than three 2-colored leaves share a parent.
    Oversized { parent: VertexId, size: usize },
    /// Three 2-colored leaves share a parent, none consecutive on the cycle.
    NoConsecutivePair { parent: VertexId },
    /// Every consecutive pair inside a three-member `N[b]` shares a color.
    ConsecutiveSameColor { parent: VertexId },
    /// After resolving, a three-member `N[b]` repeats a color.
    TripleNotDistinct { parent: VertexId },
    /// After resolving, `N[b]` holds two `2c` leaves.
    Duplicate2c { parent: VertexId },
}

impl fmt::Display for NeighborhoodViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborhoodViolation::Oversized { parent, size } => {
                write!(f, "N[{parent}] has {size} members (at most 3 allowed)")
            }
            NeighborhoodViolation::NoConsecutivePair { parent } => {
                write!(
                    f,
                    "N[{parent}] has three members but no two are consecutive on the cycle"
                )
            }
            NeighborhoodViolation::ConsecutiveSameColor { parent } => {
                write!(
                    f,
                    "N[{parent}] has a consecutive pair with a repeated color"
                )
            }
            NeighborhoodViolation::TripleNotDistinct { parent } => {
                write!(f, "N[{parent}] repeats a color after conflict resolution")
            }
            NeighborhoodViolation::Duplicate2c { parent } => {
                write!(f, "N[{parent}] holds two 2c vertices")
            }
        }
    }
}
