use std::fmt;
use std::str::FromStr;

use crate::graph::VertexId;

/// The five colors of a (1,1,2,2,2)-packing coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    /// `1`
    One,
    /// `1'`, written `1p` in files.
    OnePrime,
    TwoA,
    TwoB,
    TwoC,
}

impl Color {
    pub const ALL: [Color; 5] = [
        Color::One,
        Color::OnePrime,
        Color::TwoA,
        Color::TwoB,
        Color::TwoC,
    ];

    /// Packing radius `s`: same-colored vertices must be at distance `>= s + 1`.
    pub fn radius(self) -> u32 {
        match self {
            Color::One | Color::OnePrime => 1,
            Color::TwoA | Color::TwoB | Color::TwoC => 2,
        }
    }

    #[inline]
    pub fn is_one(self) -> bool {
        matches!(self, Color::One | Color::OnePrime)
    }

    pub fn label(self) -> &'static str {
        match self {
            Color::One => "1",
            Color::OnePrime => "1p",
            Color::TwoA => "2a",
            Color::TwoB => "2b",
            Color::TwoC => "2c",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown color `{0}` (expected one of 1, 1p, 2a, 2b, 2c)")]
pub struct UnknownColor(pub String);

impl FromStr for Color {
    type Err = UnknownColor;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Color::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| UnknownColor(s.to_owned()))
    }
}

/// Vertex → color map; `None` marks an uncolored vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring(Vec<Option<Color>>);

impl Coloring {
    pub fn empty(n_total: usize) -> Self {
        Coloring(vec![None; n_total])
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.0[v.index()]
    }

    /// Color of `v`, which must already be assigned.
    #[inline]
    pub(crate) fn of(&self, v: VertexId) -> Color {
        self.0[v.index()].expect("vertex colored by an earlier stage")
    }

    #[inline]
    pub fn set(&mut self, v: VertexId, c: Color) {
        self.0[v.index()] = Some(c);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }

    /// Assigned entries in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (VertexId::from(i), c)))
    }
}

impl From<Vec<Option<Color>>> for Coloring {
    fn from(v: Vec<Option<Color>>) -> Self {
        Coloring(v)
    }
}
