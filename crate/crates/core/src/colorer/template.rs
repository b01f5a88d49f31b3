use super::{Color, RecolorCase};

/// Which cycle color sequence a pre-resolution coloring follows.
///
/// Sequences are written over `a_1..a_n`; `i` stands for either 1-color.
/// The head `(i 2a i 2b)*` covers `a_1..a_m` with `m = 4⌊n/4⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemplateMatch {
    /// Mixed, `n ≡ 0`: `i2a i2b ⋯ i2a i2b`
    MixedR0,
    /// Mixed, `n ≡ 1`: `⋯ i2a i2b i`
    MixedR1,
    /// Mixed, `n ≡ 2`: `⋯ i2a i2b 2a i`
    MixedR2,
    /// Mixed, `n ≡ 3`: `⋯ i2a i2b i 2a i`
    MixedR3,
    /// All-same, `n ≡ 0`: `i2a i2b ⋯ i2a i2b`
    AllSameR0,
    /// All-same, `n ≡ 1`: `⋯ i2a i2b 2c`
    AllSameR1Plain,
    /// All-same, `n ≡ 1`, triple repaint: `i2c i2b i2a i2b ⋯ i2a i2c 2a`
    AllSameR1Triple,
    /// All-same, `n ≡ 1`, shifted: `i2c i2b i2a i2b ⋯ i2a i2b 2a`
    AllSameR1Shifted,
    /// All-same, `n ≡ 2`: `⋯ i2a i2b i2c`
    AllSameR2Plain,
    /// All-same, `n ≡ 2`, shifted: `i2c i2b i2a i2b ⋯ i2a i2b i2a`
    AllSameR2Shifted,
    /// All-same, `n ≡ 3`: `⋯ i2a i2b 2a i2b`
    AllSameR3,
    NoMatch,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    AnyOne,
    Exact(Color),
}

use Color::{TwoA, TwoB, TwoC};
use Slot::{AnyOne as I, Exact};

fn head(m: usize) -> Vec<Slot> {
    (1..=m)
        .map(|k| match k % 4 {
            1 | 3 => I,
            2 => Exact(TwoA),
            _ => Exact(TwoB),
        })
        .collect()
}

fn with_tail(n: usize, tail: &[Slot]) -> Vec<Slot> {
    let mut seq = head(n / 4 * 4);
    seq.extend_from_slice(tail);
    seq
}

/// Overwrites 1-based positions.
fn patch(mut seq: Vec<Slot>, edits: &[(usize, Color)]) -> Vec<Slot> {
    for &(k, c) in edits {
        seq[k - 1] = Exact(c);
    }
    seq
}

fn candidates(n: usize, case: RecolorCase) -> Vec<(TemplateMatch, Vec<Slot>)> {
    use TemplateMatch::*;
    let r = n % 4;
    match (case, r) {
        (RecolorCase::Mixed, 0) => vec![(MixedR0, with_tail(n, &[]))],
        (RecolorCase::Mixed, 1) => vec![(MixedR1, with_tail(n, &[I]))],
        (RecolorCase::Mixed, 2) => vec![(MixedR2, with_tail(n, &[Exact(TwoA), I]))],
        (RecolorCase::Mixed, _) => vec![(MixedR3, with_tail(n, &[I, Exact(TwoA), I]))],
        (RecolorCase::AllSame, 0) => vec![(AllSameR0, with_tail(n, &[]))],
        (RecolorCase::AllSame, 1) => {
            let plain = with_tail(n, &[Exact(TwoC)]);
            vec![
                (
                    AllSameR1Triple,
                    patch(plain.clone(), &[(2, TwoC), (n - 1, TwoC), (n, TwoA)]),
                ),
                (
                    AllSameR1Shifted,
                    patch(plain.clone(), &[(2, TwoC), (n, TwoA)]),
                ),
                (AllSameR1Plain, plain),
            ]
        }
        (RecolorCase::AllSame, 2) => {
            let plain = with_tail(n, &[I, Exact(TwoC)]);
            vec![
                (
                    AllSameR2Shifted,
                    patch(plain.clone(), &[(2, TwoC), (n, TwoA)]),
                ),
                (AllSameR2Plain, plain),
            ]
        }
        (RecolorCase::AllSame, _) => {
            vec![(AllSameR3, with_tail(n, &[Exact(TwoA), I, Exact(TwoB)]))]
        }
    }
}

fn matches(seq: &[Slot], colors: &[Color]) -> bool {
    seq.len() == colors.len()
        && seq.iter().zip(colors).all(|(slot, &c)| match slot {
            I => c.is_one(),
            Exact(want) => *want == c,
        })
}

/// Matches the working-order colors `a_1..a_n` (before conflict
/// resolution) against the sequences the given case can produce.
///
/// Intended for `n >= 8`; shorter cycles overlap head and tail and are
/// only meaningful as far as the sequences happen to line up.
pub fn check_template(working: &[Color], case: RecolorCase) -> TemplateMatch {
    let n = working.len();
    if n < 3 {
        return TemplateMatch::NoMatch;
    }
    candidates(n, case)
        .into_iter()
        .find(|(_, seq)| matches(seq, working))
        .map_or(TemplateMatch::NoMatch, |(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{One as O, OnePrime as P};

    #[test]
    fn mixed_sequences() {
        assert_eq!(
            check_template(&[O, TwoA, P, TwoB, O, TwoA, O, TwoB], RecolorCase::Mixed),
            TemplateMatch::MixedR0
        );
        assert_eq!(
            check_template(&[O, TwoA, O, TwoB, TwoA, P], RecolorCase::Mixed),
            TemplateMatch::MixedR2
        );
        assert_eq!(
            check_template(&[O, TwoA, O, TwoB, O, TwoA, P], RecolorCase::Mixed),
            TemplateMatch::MixedR3
        );
        assert_eq!(
            check_template(&[O, TwoA, O, TwoB, O, TwoB, O, TwoB], RecolorCase::Mixed),
            TemplateMatch::NoMatch
        );
    }

    #[test]
    fn all_same_n9_variants() {
        let plain = [P, TwoA, P, TwoB, P, TwoA, P, TwoB, TwoC];
        assert_eq!(
            check_template(&plain, RecolorCase::AllSame),
            TemplateMatch::AllSameR1Plain
        );
        let triple = [P, TwoC, P, TwoB, P, TwoA, P, TwoC, TwoA];
        assert_eq!(
            check_template(&triple, RecolorCase::AllSame),
            TemplateMatch::AllSameR1Triple
        );
        let shifted = [P, TwoC, P, TwoB, P, TwoA, P, TwoB, TwoA];
        assert_eq!(
            check_template(&shifted, RecolorCase::AllSame),
            TemplateMatch::AllSameR1Shifted
        );
        // A mixed-case sequence is not an all-same template.
        assert_eq!(
            check_template(&plain, RecolorCase::Mixed),
            TemplateMatch::NoMatch
        );
    }

    #[test]
    fn all_same_other_residues() {
        let r2 = [P, TwoA, P, TwoB, P, TwoA, P, TwoB, P, TwoC];
        assert_eq!(
            check_template(&r2, RecolorCase::AllSame),
            TemplateMatch::AllSameR2Plain
        );
        let r2s = [P, TwoC, P, TwoB, P, TwoA, P, TwoB, P, TwoA];
        assert_eq!(
            check_template(&r2s, RecolorCase::AllSame),
            TemplateMatch::AllSameR2Shifted
        );
        let r3 = [P, TwoA, P, TwoB, P, TwoA, P, TwoB, TwoA, P, TwoB];
        assert_eq!(
            check_template(&r3, RecolorCase::AllSame),
            TemplateMatch::AllSameR3
        );
    }
}
