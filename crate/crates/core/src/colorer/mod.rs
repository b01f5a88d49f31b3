//! Linear-time (1,1,2,2,2)-packing coloring of Halin graphs with `Δ <= 5`.
//!
//! The pipeline has four stages:
//!
//! 1. [`two_color_tree`] properly 2-colors the characteristic tree with
//!    `1`/`1'` by breadth-first parity.
//! 2. [`recoloring_dispatch`] rotates the cycle indexing when needed so the
//!    first and last leaves carry different tree colors, then overwrites the
//!    cycle with [`case1`] (mixed tree colors) or [`case2`] (all leaves share
//!    a tree color).
//! 3. [`conflicts_resolving`] repaints one vertex of every pair of
//!    same-colored `2a`/`2b` leaves sharing a tree parent with `2c`.
//!
//! Cycle positions inside the pipeline are 1-based working indices
//! `a_1..a_n`; index 0 aliases `a_n`. Vertex ids are untouched, so the final
//! coloring is already expressed against the original graph.

mod color;
mod neighborhoods;
mod template;

use std::fmt;

use thiserror::Error;

use crate::graph::{HalinGraph, VertexId};

pub use color::{Color, Coloring, UnknownColor};
pub use neighborhoods::{NeighborhoodViolation, TwoNeighborhoods};
pub use template::{check_template, TemplateMatch};

/// Largest maximum degree the algorithm accepts.
pub const MAX_DEGREE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("maximum degree Δ = {0} exceeds the supported bound of 5")]
    MaxDegreeExceeded(usize),
    #[error("color {0} is not one of 1, 1'")]
    NotAOneColor(Color),
    #[error("coloring invariant violated: {0}")]
    InvariantViolated(NeighborhoodViolation),
}

/// Which cycle recoloring routine ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecolorCase {
    /// Leaves carry both tree colors.
    Mixed,
    /// Every leaf has the same tree color.
    AllSame,
}

impl fmt::Display for RecolorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecolorCase::Mixed => "1",
            RecolorCase::AllSame => "2",
        })
    }
}

/// The working order of the cycle after the optional rotation.
///
/// Working index `k` (1-based) refers to the original 0-based position
/// `(k - 1 + offset) mod n`; index 0 is an alias for `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleView {
    order: Vec<VertexId>,
    parents: Vec<VertexId>,
    offset: usize,
    all_same: bool,
}

impl CycleView {
    pub fn new(g: &HalinGraph, offset: usize, all_same: bool) -> Self {
        let n = g.n_leaves();
        assert!(
            offset < n,
            "rotation offset {offset} out of range for n = {n}"
        );
        let mut order = Vec::with_capacity(n + 1);
        let mut parents = Vec::with_capacity(n + 1);
        let last = (n - 1 + offset) % n;
        order.push(g.cycle()[last]);
        parents.push(g.leaf_parent(last));
        for k in 1..=n {
            let pos = (k - 1 + offset) % n;
            order.push(g.cycle()[pos]);
            parents.push(g.leaf_parent(pos));
        }
        CycleView {
            order,
            parents,
            offset,
            all_same,
        }
    }

    /// Number of cycle vertices `n`.
    #[inline]
    pub fn len(&self) -> usize {
        self.order.len() - 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a_k`, for `0 <= k <= n`.
    #[inline]
    pub fn vertex(&self, k: usize) -> VertexId {
        self.order[k]
    }

    /// `b_k`, the tree neighbour of `a_k`.
    #[inline]
    pub fn parent(&self, k: usize) -> VertexId {
        self.parents[k]
    }

    #[inline]
    pub fn offset(&self) -> usize {
        self.offset
    }

    #[inline]
    pub fn all_same(&self) -> bool {
        self.all_same
    }

    pub fn case(&self) -> RecolorCase {
        if self.all_same {
            RecolorCase::AllSame
        } else {
            RecolorCase::Mixed
        }
    }

    /// Original 0-based cycle position of working index `k`.
    pub fn original_position(&self, k: usize) -> usize {
        let n = self.len();
        let k = if k == 0 { n } else { k };
        (k - 1 + self.offset) % n
    }

    /// Colors of `a_1..a_n` in working order.
    pub fn working_colors(&self, phi: &Coloring) -> Vec<Color> {
        (1..=self.len()).map(|k| phi.of(self.vertex(k))).collect()
    }
}

/// One line of the optional stage trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    TreeColored {
        root: VertexId,
    },
    Dispatched {
        all_same: bool,
        offset: usize,
        case: RecolorCase,
    },
    /// The `2b 2b 2c` pattern around `b_n` was repainted; `i` is the third member.
    TripleFixup {
        i: usize,
    },
    /// `a_n` was isolated from other `2a`/`2b` leaves; `i` shares `b_2`.
    ShiftFixup {
        i: usize,
    },
    Conflict {
        i: usize,
        j: usize,
        recolored: usize,
    },
    Resolved {
        new_2c: usize,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::TreeColored { root } => write!(f, "stage tree-coloring root={root}"),
            TraceEvent::Dispatched {
                all_same,
                offset,
                case,
            } => write!(
                f,
                "stage recoloring all_same={all_same} offset={offset} case={case}"
            ),
            TraceEvent::TripleFixup { i } => write!(f, "fixup 1 fired i={i}"),
            TraceEvent::ShiftFixup { i } => write!(f, "fixup 2 fired i={i}"),
            TraceEvent::Conflict { i, j, recolored } => {
                write!(f, "conflict i={i} j={j} recolored={recolored}")
            }
            TraceEvent::Resolved { new_2c } => {
                write!(f, "stage conflicts-resolving new_2c={new_2c}")
            }
        }
    }
}

type Trace<'a> = Option<&'a mut Vec<TraceEvent>>;

fn emit(trace: &mut Trace<'_>, event: TraceEvent) {
    if let Some(events) = trace.as_deref_mut() {
        events.push(event);
    }
}

/// The tree root used by [`packing_coloring`]: the lowest-id internal vertex.
pub fn default_root(g: &HalinGraph) -> VertexId {
    g.vertices()
        .find(|&v| !g.is_leaf(v))
        .expect("a Halin graph has an internal vertex")
}

/// Proper 2-coloring of the characteristic tree: `root` gets `1`, every
/// other vertex the opposite color of its BFS parent.
pub fn two_color_tree(g: &HalinGraph, root: VertexId) -> Coloring {
    let mut phi = Coloring::empty(g.n_total());
    phi.set(root, Color::One);
    for v in g.tree_bfs(root) {
        let next = match phi.of(v) {
            Color::One => Color::OnePrime,
            _ => Color::One,
        };
        for &w in g.tree_neighbors(v) {
            if phi.get(w).is_none() {
                phi.set(w, next);
            }
        }
    }
    phi
}

/// The other color of `{1, 1'}`.
pub fn complement_one(c: Color) -> Result<Color, ColorError> {
    match c {
        Color::One => Ok(Color::OnePrime),
        Color::OnePrime => Ok(Color::One),
        other => Err(ColorError::NotAOneColor(other)),
    }
}

/// `1_k`: the 1-color that differs from the tree color of `b_k`.
fn one_avoiding_parent(view: &CycleView, phi: &Coloring, k: usize) -> Color {
    complement_one(phi.of(view.parent(k))).expect("internal tree vertices keep a 1-color")
}

/// Picks the working order and recolors the cycle.
///
/// `phi` must be the tree 2-coloring on all of `V(G)`.
pub fn recoloring_dispatch(g: &HalinGraph, phi: Coloring) -> (CycleView, Coloring) {
    recoloring_dispatch_traced(g, phi, &mut None)
}

fn recoloring_dispatch_traced(
    g: &HalinGraph,
    phi: Coloring,
    trace: &mut Trace<'_>,
) -> (CycleView, Coloring) {
    let cycle = g.cycle();
    let n = cycle.len();
    let tree_color = |pos: usize| phi.of(cycle[pos]);

    let (offset, all_same) = if tree_color(0) == tree_color(n - 1) {
        // First 1-based i in 2..=n with φ(a_i) != φ(a_{i-1}); a_i becomes a_1.
        match (1..n).find(|&p| tree_color(p) != tree_color(p - 1)) {
            Some(p) => (p, false),
            None => (0, true),
        }
    } else {
        (0, false)
    };

    let view = CycleView::new(g, offset, all_same);
    emit(
        trace,
        TraceEvent::Dispatched {
            all_same,
            offset,
            case: view.case(),
        },
    );
    let phi = if all_same {
        case2_traced(&view, phi, trace)
    } else {
        case1(&view, phi)
    };
    (view, phi)
}

/// Shared head of both cases: `1_k` on odd `k`, then `2a`, `2b` alternating
/// on even `k`, for `k` in `1..=m`.
fn color_head(view: &CycleView, phi: &mut Coloring, m: usize) {
    for k in 1..=m {
        let c = if k % 2 == 1 {
            one_avoiding_parent(view, phi, k)
        } else if k % 4 == 2 {
            Color::TwoA
        } else {
            Color::TwoB
        };
        phi.set(view.vertex(k), c);
    }
}

/// Cycle recoloring when the leaves carry both tree colors.
///
/// Requires the working order to satisfy `φ(a_1) != φ(a_n)`.
pub fn case1(view: &CycleView, mut phi: Coloring) -> Coloring {
    let n = view.len();
    let m = n / 4 * 4;
    color_head(view, &mut phi, m);
    let one = |phi: &Coloring, k| one_avoiding_parent(view, phi, k);
    match n - m {
        1 => {
            let c = one(&phi, n);
            phi.set(view.vertex(n), c);
        }
        2 => {
            phi.set(view.vertex(n - 1), Color::TwoA);
            let c = one(&phi, n);
            phi.set(view.vertex(n), c);
        }
        3 => {
            let c = one(&phi, n - 2);
            phi.set(view.vertex(n - 2), c);
            phi.set(view.vertex(n - 1), Color::TwoA);
            let c = one(&phi, n);
            phi.set(view.vertex(n), c);
        }
        _ => {}
    }
    phi
}

/// Cycle recoloring when every leaf has the same tree color, including the
/// two repaint rules around `a_n`.
pub fn case2(view: &CycleView, phi: Coloring) -> Coloring {
    case2_traced(view, phi, &mut None)
}

fn case2_traced(view: &CycleView, mut phi: Coloring, trace: &mut Trace<'_>) -> Coloring {
    let n = view.len();
    let m = n / 4 * 4;
    color_head(view, &mut phi, m);
    match n - m {
        1 => phi.set(view.vertex(n), Color::TwoC),
        2 => {
            let c = one_avoiding_parent(view, &phi, n - 1);
            phi.set(view.vertex(n - 1), c);
            phi.set(view.vertex(n), Color::TwoC);
        }
        3 => {
            phi.set(view.vertex(n - 2), Color::TwoA);
            let c = one_avoiding_parent(view, &phi, n - 1);
            phi.set(view.vertex(n - 1), c);
            phi.set(view.vertex(n), Color::TwoB);
        }
        _ => {}
    }

    let color = |phi: &Coloring, k: usize| phi.of(view.vertex(k));
    let (a2, an1, an) = (view.vertex(2), view.vertex(n - 1), view.vertex(n));
    let (b2, bn1, bn) = (view.parent(2), view.parent(n - 1), view.parent(n));

    // a_{n-1}, a_n and some earlier a_i hang off the same parent as 2b, 2b, 2c.
    for i in 1..=n - 2 {
        if color(&phi, n) == Color::TwoC
            && color(&phi, n - 1) == Color::TwoB
            && color(&phi, i) == Color::TwoB
            && bn == bn1
            && bn == view.parent(i)
        {
            phi.set(a2, Color::TwoC);
            phi.set(an1, Color::TwoC);
            phi.set(an, Color::TwoA);
            emit(trace, TraceEvent::TripleFixup { i });
            break;
        }
    }

    // a_n is 2c with no 2a/2b sibling, while b_2 has another 2a leaf.
    if color(&phi, n) == Color::TwoC {
        let not_separated = !(1..n)
            .any(|i| matches!(color(&phi, i), Color::TwoA | Color::TwoB) && view.parent(i) == bn);
        if not_separated {
            if let Some(i) = (4..n).find(|&i| color(&phi, i) == Color::TwoA && view.parent(i) == b2)
            {
                phi.set(a2, Color::TwoC);
                phi.set(an, Color::TwoA);
                emit(trace, TraceEvent::ShiftFixup { i });
            }
        }
    }
    phi
}

/// Repaints one leaf of every same-colored `2a`/`2b` pair sharing a tree
/// parent with `2c`.
///
/// For even `i`, the partner `j` comes from `N[b_i]`; `a_i` is repainted
/// unless `a_{i-2}` is already `2c`, in which case `a_j` is.
pub fn conflicts_resolving(g: &HalinGraph, view: &CycleView, phi: Coloring) -> Coloring {
    let nbhd = TwoNeighborhoods::build(g, view, &phi);
    conflicts_resolving_traced(view, &nbhd, phi, &mut None)
}

fn conflicts_resolving_traced(
    view: &CycleView,
    nbhd: &TwoNeighborhoods,
    mut phi: Coloring,
    trace: &mut Trace<'_>,
) -> Coloring {
    let n = view.len();
    let mut new_2c = 0;
    for i in (2..=n).step_by(2) {
        let ai = view.vertex(i);
        for &j in nbhd.get(view.parent(i)) {
            let j = j as usize;
            if j == i {
                continue;
            }
            let ci = phi.of(ai);
            if ci == phi.of(view.vertex(j)) && ci != Color::TwoC {
                let recolored = if phi.of(view.vertex(i - 2)) != Color::TwoC {
                    i
                } else {
                    j
                };
                phi.set(view.vertex(recolored), Color::TwoC);
                new_2c += 1;
                emit(trace, TraceEvent::Conflict { i, j, recolored });
                break;
            }
        }
    }
    emit(trace, TraceEvent::Resolved { new_2c });
    phi
}

/// Everything observable about one pipeline run.
#[derive(Debug, Clone)]
pub struct ColoringRun {
    pub coloring: Coloring,
    pub view: CycleView,
    /// `a_1..a_n` in working order, before conflicts are resolved.
    pub pre_conflicts: Vec<Color>,
    /// Populated only when tracing was requested.
    pub trace: Vec<TraceEvent>,
    /// Structural invariant failures; empty on every correct run.
    pub violations: Vec<NeighborhoodViolation>,
}

/// Runs the full pipeline and keeps the intermediate state around.
///
/// Invariant checks always run; their failures are reported in
/// [`ColoringRun::violations`] rather than turned into errors.
pub fn run_pipeline(g: &HalinGraph, with_trace: bool) -> Result<ColoringRun, ColorError> {
    if g.max_degree() > MAX_DEGREE {
        return Err(ColorError::MaxDegreeExceeded(g.max_degree()));
    }
    let mut events = Vec::new();
    let mut trace: Trace<'_> = with_trace.then_some(&mut events);

    let root = default_root(g);
    let phi = two_color_tree(g, root);
    emit(&mut trace, TraceEvent::TreeColored { root });

    let (view, phi) = recoloring_dispatch_traced(g, phi, &mut trace);
    let pre_conflicts = view.working_colors(&phi);
    let nbhd = TwoNeighborhoods::build(g, &view, &phi);
    let mut violations = nbhd.check_before_resolving(&view, &phi);

    let phi = conflicts_resolving_traced(&view, &nbhd, phi, &mut trace);
    violations.extend(nbhd.check_after_resolving(&view, &phi));

    Ok(ColoringRun {
        coloring: phi,
        view,
        pre_conflicts,
        trace: events,
        violations,
    })
}

/// A (1,1,2,2,2)-packing coloring of `g`.
///
/// Deterministic in `g`. Fails if `Δ(g) > 5` or an internal invariant
/// check fires.
pub fn packing_coloring(g: &HalinGraph) -> Result<Coloring, ColorError> {
    let run = run_pipeline(g, false)?;
    match run.violations.into_iter().next() {
        Some(v) => Err(ColorError::InvariantViolated(v)),
        None => Ok(run.coloring),
    }
}
