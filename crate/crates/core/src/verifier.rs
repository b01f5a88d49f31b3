//! S-packing checker.
//!
//! Colors are opaque class labels mapped to radii; the checker knows nothing
//! about how a coloring was produced. Every vertex runs a breadth-first search
//! bounded by its class radius `s` and reports each same-class vertex found
//! within distance `s`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::colorer::Color;
use crate::graph::{HalinGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("radius `{0}` is not a positive integer")]
    BadRadius(String),
    #[error("radii must be non-decreasing")]
    NotSorted,
    #[error("malformed class entry `{0}`, expected name:radius")]
    BadEntry(String),
    #[error("class `{0}` listed twice")]
    DuplicateClass(String),
}

/// A non-decreasing sequence of positive radii `s_1 <= ... <= s_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingSequence(Vec<u32>);

impl PackingSequence {
    pub fn new(radii: Vec<u32>) -> Result<Self, SequenceError> {
        if let Some(&bad) = radii.iter().find(|&&s| s == 0) {
            return Err(SequenceError::BadRadius(bad.to_string()));
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(SequenceError::NotSorted);
        }
        Ok(PackingSequence(radii))
    }

    /// `(1, 1, 2, 2, 2)`.
    pub fn standard() -> Self {
        PackingSequence(vec![1, 1, 2, 2, 2])
    }

    pub fn radii(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for PackingSequence {
    type Err = SequenceError;

    /// Comma-separated radii, e.g. `1,2,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return PackingSequence::new(Vec::new());
        }
        let radii = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| SequenceError::BadRadius(t.trim().to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        PackingSequence::new(radii)
    }
}

impl fmt::Display for PackingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Radius of every color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssignment<L: Ord>(BTreeMap<L, u32>);

impl<L: Ord> ClassAssignment<L> {
    pub fn new(map: BTreeMap<L, u32>) -> Self {
        ClassAssignment(map)
    }

    pub fn radius(&self, class: &L) -> Option<u32> {
        self.0.get(class).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, u32)> {
        self.0.iter().map(|(l, &s)| (l, s))
    }
}

impl<L: Ord> FromIterator<(L, u32)> for ClassAssignment<L> {
    fn from_iter<I: IntoIterator<Item = (L, u32)>>(iter: I) -> Self {
        ClassAssignment(iter.into_iter().collect())
    }
}

impl ClassAssignment<Color> {
    /// `1, 1'` with radius 1 and `2a, 2b, 2c` with radius 2.
    pub fn standard() -> Self {
        Color::ALL.into_iter().map(|c| (c, c.radius())).collect()
    }
}

impl ClassAssignment<String> {
    /// Default class spec for the five named colors.
    pub const STANDARD_SPEC: &'static str = "1:1,1p:1,2a:2,2b:2,2c:2";
}

impl FromStr for ClassAssignment<String> {
    type Err = SequenceError;

    /// `name:radius` pairs separated by commas.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut map = BTreeMap::new();
        for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (name, radius) = entry
                .split_once(':')
                .ok_or_else(|| SequenceError::BadEntry(entry.to_owned()))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(SequenceError::BadEntry(entry.to_owned()));
            }
            let radius: u32 = radius
                .trim()
                .parse()
                .ok()
                .filter(|&r| r > 0)
                .ok_or_else(|| SequenceError::BadRadius(radius.trim().to_owned()))?;
            if map.insert(name.to_owned(), radius).is_some() {
                return Err(SequenceError::DuplicateClass(name.to_owned()));
            }
        }
        Ok(ClassAssignment(map))
    }
}

/// True iff the multiset of class radii equals `expected`.
pub fn verify_sequence_form<L: Ord>(
    classes: &ClassAssignment<L>,
    expected: &PackingSequence,
) -> bool {
    let mut radii: Vec<u32> = classes.iter().map(|(_, s)| s).collect();
    radii.sort_unstable();
    radii == expected.radii()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} has no color")]
    PartialColoring(VertexId),
    #[error("color `{0}` has no radius")]
    UnmappedColor(String),
}

/// Two same-class vertices closer than the class allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<L> {
    pub class: L,
    pub u: VertexId,
    pub v: VertexId,
    pub distance: u32,
}

impl<L: fmt::Display> fmt::Display for Violation<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VIOLATION {} {} {} {}",
            self.class, self.u, self.v, self.distance
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<L> {
    /// Every offending pair once, `u < v`, sorted by `(u, v)`.
    pub violations: Vec<Violation<L>>,
}

impl<L> VerificationReport<L> {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every pair of distinct vertices sharing class `c` is at
/// distance at least `radius(c) + 1`.
pub fn verify_packing<L>(
    g: &HalinGraph,
    coloring: &[Option<L>],
    classes: &ClassAssignment<L>,
) -> Result<VerificationReport<L>, VerifyError>
where
    L: Ord + Clone + fmt::Display,
{
    let n = g.n_total();
    let mut radius = Vec::with_capacity(n);
    for v in g.vertices() {
        let label = coloring
            .get(v.index())
            .and_then(Option::as_ref)
            .ok_or(VerifyError::PartialColoring(v))?;
        let s = classes
            .radius(label)
            .ok_or_else(|| VerifyError::UnmappedColor(label.to_string()))?;
        radius.push(s);
    }
    let label = |v: VertexId| coloring[v.index()].as_ref().expect("checked above");

    // Generation stamps let every search reuse the same buffers.
    let mut stamp = vec![0u32; n];
    let mut dist = vec![0u32; n];
    let mut frontier = Vec::new();
    let mut next = Vec::new();
    let mut violations = Vec::new();
    for u in g.vertices() {
        let s = radius[u.index()];
        let gen = u.0 + 1;
        let mine = label(u);
        stamp[u.index()] = gen;
        dist[u.index()] = 0;
        frontier.clear();
        frontier.push(u);
        for d in 1..=s {
            next.clear();
            for &x in &frontier {
                for y in g.neighbors(x) {
                    if stamp[y.index()] != gen {
                        stamp[y.index()] = gen;
                        dist[y.index()] = d;
                        next.push(y);
                    }
                }
            }
            for &y in &next {
                if y > u && label(y) == mine {
                    violations.push(Violation {
                        class: mine.clone(),
                        u,
                        v: y,
                        distance: d,
                    });
                }
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }
    violations.sort_by_key(|v| (v.u, v.v));
    Ok(VerificationReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::gen_wheel;
    use Color::*;

    fn w5_algorithm_coloring() -> Vec<Option<Color>> {
        // hub, then rim a_1..a_5
        vec![
            Some(One),
            Some(OnePrime),
            Some(TwoA),
            Some(OnePrime),
            Some(TwoB),
            Some(TwoC),
        ]
    }

    #[test]
    fn wheel_coloring_is_accepted() {
        let g = gen_wheel(5).unwrap();
        let report =
            verify_packing(&g, &w5_algorithm_coloring(), &ClassAssignment::standard()).unwrap();
        assert!(report.ok(), "{:?}", report.violations);
    }

    #[test]
    fn k4_adjacent_ones_are_rejected() {
        let g = gen_wheel(3).unwrap();
        let phi = vec![Some(One), Some(One), Some(TwoA), Some(TwoB)];
        let report = verify_packing(&g, &phi, &ClassAssignment::standard()).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation {
                class: One,
                u: VertexId(0),
                v: VertexId(1),
                distance: 1
            }]
        );
    }

    #[test]
    fn repeated_2a_through_the_hub() {
        let g = gen_wheel(5).unwrap();
        let mut phi = w5_algorithm_coloring();
        phi[4] = Some(TwoA);
        let report = verify_packing(&g, &phi, &ClassAssignment::standard()).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation {
                class: TwoA,
                u: VertexId(2),
                v: VertexId(4),
                distance: 2
            }]
        );
    }

    #[test]
    fn input_errors() {
        let g = gen_wheel(3).unwrap();
        let phi = vec![Some(One), None, Some(TwoA), Some(TwoB)];
        assert_eq!(
            verify_packing(&g, &phi, &ClassAssignment::standard()),
            Err(VerifyError::PartialColoring(VertexId(1)))
        );
        let short = vec![Some(One)];
        assert!(verify_packing(&g, &short, &ClassAssignment::standard()).is_err());
        let classes: ClassAssignment<Color> = [(One, 1)].into_iter().collect();
        let phi = vec![Some(One), Some(OnePrime), Some(TwoA), Some(TwoB)];
        assert_eq!(
            verify_packing(&g, &phi, &classes),
            Err(VerifyError::UnmappedColor("1p".into()))
        );
    }

    #[test]
    fn sequence_form() {
        let standard = PackingSequence::standard();
        assert!(verify_sequence_form(
            &ClassAssignment::standard(),
            &standard
        ));
        let missing: ClassAssignment<Color> = [(One, 1), (TwoA, 2), (TwoB, 2), (TwoC, 2)]
            .into_iter()
            .collect();
        assert!(!verify_sequence_form(&missing, &standard));
        let empty: ClassAssignment<String> = ClassAssignment::new(BTreeMap::new());
        assert!(verify_sequence_form(
            &empty,
            &PackingSequence::new(vec![]).unwrap()
        ));
    }

    #[test]
    fn parsing_sequences_and_classes() {
        assert_eq!(
            "1,2,2,2".parse::<PackingSequence>().unwrap().radii(),
            &[1, 2, 2, 2]
        );
        assert_eq!(
            "2,1".parse::<PackingSequence>(),
            Err(SequenceError::NotSorted)
        );
        assert!("1,0".parse::<PackingSequence>().is_err());
        assert!("1,x".parse::<PackingSequence>().is_err());
        let classes: ClassAssignment<String> = ClassAssignment::STANDARD_SPEC.parse().unwrap();
        assert_eq!(classes.radius(&"1p".to_string()), Some(1));
        assert_eq!(classes.radius(&"2c".to_string()), Some(2));
        assert!(verify_sequence_form(&classes, &PackingSequence::standard()));
        assert!("1:1,1:2".parse::<ClassAssignment<String>>().is_err());
        assert!("1=1".parse::<ClassAssignment<String>>().is_err());
        assert!("a:0".parse::<ClassAssignment<String>>().is_err());
    }
}
