//! Deterministic Halin graph generation.
//!
//! Random instances grow a rooted plane tree by repeatedly expanding a leaf
//! into an internal vertex with 2-4 ordered children. Every internal vertex
//! ends up with tree-degree at least 3 and the leaf order is the left-to-right
//! depth-first order, so every output is a valid Halin graph by construction.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood), seeded with the
//! configured 64-bit seed; vertex ids follow creation order.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::{GraphError, HalinGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    /// Desired number of cycle vertices `n`. The generator hits it exactly.
    pub target_leaves: usize,
    /// Cap on `Δ(G)`.
    pub max_degree: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(target_leaves: usize, seed: u64) -> Self {
        GeneratorConfig {
            target_leaves,
            max_degree: 5,
            seed,
        }
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        if self.max_degree < 3 {
            return Err(GeneratorError::InfeasibleConfig(format!(
                "max_degree {} < 3: every internal vertex of a characteristic tree has degree >= 3",
                self.max_degree
            )));
        }
        if self.target_leaves < 3 {
            return Err(GeneratorError::InfeasibleConfig(format!(
                "target_leaves {} < 3",
                self.target_leaves
            )));
        }
        Ok(())
    }
}

/// Plane tree under construction: ordered children per vertex.
struct PlaneTree {
    children: Vec<Vec<u32>>,
}

impl PlaneTree {
    fn add_children(&mut self, parent: u32, count: usize) -> std::ops::Range<u32> {
        let first = self.children.len() as u32;
        for _ in 0..count {
            self.children.push(Vec::new());
        }
        let ids = first..first + count as u32;
        self.children[parent as usize].extend(ids.clone());
        ids
    }

    fn into_graph(self) -> Result<HalinGraph, GraphError> {
        let n_total = self.children.len();
        let mut edges = Vec::with_capacity(n_total - 1);
        for (p, kids) in self.children.iter().enumerate() {
            for &c in kids {
                edges.push((VertexId::from(p), VertexId(c)));
            }
        }
        let mut cycle = Vec::new();
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            let kids = &self.children[v as usize];
            if kids.is_empty() {
                cycle.push(VertexId(v));
            } else {
                stack.extend(kids.iter().rev());
            }
        }
        HalinGraph::new(n_total, &edges, &cycle)
    }
}

/// A random Halin graph with exactly `cfg.target_leaves` leaves and
/// `Δ <= cfg.max_degree`; the same config always yields the same graph.
pub fn gen_random_halin(cfg: &GeneratorConfig) -> Result<HalinGraph, GeneratorError> {
    cfg.validate()?;
    let mut rng = SplitMix64::seed_from_u64(cfg.seed);
    let target = cfg.target_leaves;

    let mut tree = PlaneTree {
        children: vec![Vec::new()],
    };
    let root_kids = rng.random_range(3..=cfg.max_degree.min(target));
    let mut leaves: Vec<u32> = tree.add_children(0, root_kids).collect();

    // Expanding a leaf into c children adds c - 1 leaves; its degree becomes c + 1.
    let max_kids = 4.min(cfg.max_degree - 1);
    while leaves.len() < target {
        let remaining = target - leaves.len();
        let kids = rng.random_range(2..=max_kids.min(remaining + 1));
        let leaf = leaves.swap_remove(rng.random_range(0..leaves.len()));
        leaves.extend(tree.add_children(leaf, kids));
    }
    Ok(tree.into_graph()?)
}

/// The wheel `W_k`: hub 0 joined to rim vertices `1..=k` in cycle order.
pub fn gen_wheel(k: usize) -> Result<HalinGraph, GraphError> {
    if k < 3 {
        return Err(GraphError::TooFewLeaves(k));
    }
    let edges: Vec<_> = (1..=k).map(|i| (VertexId(0), VertexId::from(i))).collect();
    let cycle: Vec<_> = (1..=k).map(VertexId::from).collect();
    HalinGraph::new(k + 1, &edges, &cycle)
}

/// A cubic Halin graph whose tree is a path of `internal_path` internal
/// vertices `0..p`: the path ends carry two leaves each, inner path vertices
/// one. Leaves get ids `p..` in cycle order.
pub fn gen_cubic_caterpillar(internal_path: usize) -> Result<HalinGraph, GeneratorError> {
    let p = internal_path;
    if p == 0 {
        return Err(GeneratorError::InfeasibleConfig(
            "internal_path must be >= 1".into(),
        ));
    }
    // Leaves of vertex 0 first, then the single leaves hanging off the
    // inner path vertices, then the far end.
    let leaf_plan: Vec<u32> = if p == 1 {
        vec![0, 0, 0]
    } else {
        let mut plan = vec![0, 0];
        plan.extend(1..p as u32 - 1);
        plan.extend([p as u32 - 1, p as u32 - 1]);
        plan
    };
    let mut cycle = Vec::new();
    let mut edges: Vec<_> = (1..p)
        .map(|i| (VertexId::from(i - 1), VertexId::from(i)))
        .collect();
    for (offset, parent) in leaf_plan.into_iter().enumerate() {
        let leaf = VertexId::from(p + offset);
        edges.push((VertexId(parent), leaf));
        cycle.push(leaf);
    }
    Ok(HalinGraph::new(p + cycle.len(), &edges, &cycle)?)
}

/// Names of the canonical graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Wheel,
    CubicCaterpillar,
    RandomSmallBatch,
}

impl FromStr for FamilyName {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wheel" => Ok(FamilyName::Wheel),
            "cubic_caterpillar" | "cubic-caterpillar" | "caterpillar" => {
                Ok(FamilyName::CubicCaterpillar)
            }
            "random_small_batch" | "random-small-batch" => Ok(FamilyName::RandomSmallBatch),
            other => Err(GeneratorError::UnknownFamily(other.to_owned())),
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyName::Wheel => "wheel",
            FamilyName::CubicCaterpillar => "cubic_caterpillar",
            FamilyName::RandomSmallBatch => "random_small_batch",
        })
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// One wheel per rim size.
    Wheel { sizes: RangeInclusive<usize> },
    /// One caterpillar per internal path length.
    CubicCaterpillar {
        internal_paths: RangeInclusive<usize>,
    },
    /// `count` random graphs with 3..=8 leaves (so `n_total <= 14`), each
    /// with its own seed drawn from a SplitMix64 stream seeded by `seed`.
    RandomSmallBatch { count: usize, seed: u64 },
}

impl Family {
    pub fn name(&self) -> FamilyName {
        match self {
            Family::Wheel { .. } => FamilyName::Wheel,
            Family::CubicCaterpillar { .. } => FamilyName::CubicCaterpillar,
            Family::RandomSmallBatch { .. } => FamilyName::RandomSmallBatch,
        }
    }
}

/// Largest leaf count used by the small batch; `n_total <= 2n - 2 = 14`.
pub const SMALL_BATCH_MAX_LEAVES: usize = 8;

/// Seeds and configs of a small random batch, in order.
pub fn small_batch_configs(count: usize, seed: u64) -> Vec<GeneratorConfig> {
    let mut stream = SplitMix64::seed_from_u64(seed);
    let mut used = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = stream.next_u64();
        if used.insert(s) {
            let leaves = stream.random_range(3..=SMALL_BATCH_MAX_LEAVES);
            out.push(GeneratorConfig::new(leaves, s));
        }
    }
    out
}

pub fn gen_family(family: &Family) -> Result<Vec<HalinGraph>, GeneratorError> {
    match family {
        Family::Wheel { sizes } => sizes.clone().map(|k| Ok(gen_wheel(k)?)).collect(),
        Family::CubicCaterpillar { internal_paths } => {
            internal_paths.clone().map(gen_cubic_caterpillar).collect()
        }
        Family::RandomSmallBatch { count, seed } => small_batch_configs(*count, *seed)
            .iter()
            .map(gen_random_halin)
            .collect(),
    }
}
