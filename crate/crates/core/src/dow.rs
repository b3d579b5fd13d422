//! Double occurrence words (DOWs).
//!
//! A [`Dow`] is a word over positive-integer letters in which every letter
//! occurs exactly twice. Two words are equivalent when one can be obtained
//! from the other by renaming letters and/or reversing; [`Dow::canonicalize`]
//! handles renaming and [`Dow::class_representative`] picks a unique member
//! of the full equivalence class.
//!
//! Words are written either in compact form (`"121323"`, one digit per letter,
//! letters 1..=9 only) or in token form (`"1 2 10 2 1 10"`, separated by
//! whitespace or commas). [`Dow::render`] emits compact form whenever every
//! letter is a single digit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u32;

/// A set of letters, iterated in ascending order.
pub type LetterSet = BTreeSet<Letter>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dow {
    letters: Vec<Letter>,
}

impl Dow {
    /// Validates the exactly-twice property.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&zero) = letters.iter().find(|&&a| a == 0) {
            return Err(Error::BadToken(zero.to_string()));
        }
        let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
        for &a in &letters {
            *counts.entry(a).or_default() += 1;
        }
        if let Some((&letter, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::NotDoubleOccurrence { letter, count });
        }
        Ok(Dow { letters })
    }

    /// Caller guarantees every letter occurs exactly twice and none is zero.
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Dow::new(letters.clone()).is_ok(), "{letters:?}");
        Dow { letters }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Empty);
        }
        let tokenized = text.chars().any(|c| c.is_whitespace() || c == ',');
        let letters = if tokenized {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<Letter>() {
                    Ok(a) if a > 0 => Ok(a),
                    _ => Err(Error::BadToken(t.to_string())),
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::BadToken(c.to_string())),
                })
                .collect::<Result<Vec<_>>>()?
        };
        if letters.is_empty() {
            return Err(Error::Empty);
        }
        Dow::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length, `2n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters in the alphabet, `n`.
    pub fn order(&self) -> usize {
        self.letters.len() / 2
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    /// Sorted alphabet.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut alphabet = self.letters.clone();
        alphabet.sort_unstable();
        alphabet.dedup();
        alphabet
    }

    pub fn occurrences(&self) -> OccurrenceIndex {
        let mut entries: BTreeMap<Letter, (usize, usize)> = BTreeMap::new();
        for (i, &a) in self.letters.iter().enumerate() {
            entries
                .entry(a)
                .and_modify(|e| e.1 = i + 1)
                .or_insert((i + 1, 0));
        }
        OccurrenceIndex { entries }
    }

    pub fn render(&self) -> String {
        render_letters(&self.letters)
    }

    pub fn reversed(&self) -> Dow {
        let mut letters = self.letters.clone();
        letters.reverse();
        Dow { letters }
    }

    /// Renames letters so that first occurrences read 1, 2, ..., n.
    pub fn canonicalize(&self) -> Dow {
        Dow {
            letters: canonical_letters(self.letters.iter().copied()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 1;
        for &a in &self.letters {
            if a == next {
                next += 1;
            } else if a > next {
                return false;
            }
        }
        true
    }

    /// The lexicographically smaller of the canonical forms of the word and
    /// of its reverse. Equal for two words iff they are equivalent.
    pub fn class_representative(&self) -> Dow {
        let forward = self.canonicalize();
        let backward = Dow {
            letters: canonical_letters(self.letters.iter().rev().copied()),
        };
        forward.min(backward)
    }

    /// Applies a letter renaming. The map must be injective on the alphabet;
    /// letters absent from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<Letter, Letter>) -> Result<Dow> {
        Dow::new(
            self.letters
                .iter()
                .map(|a| map.get(a).copied().unwrap_or(*a))
                .collect(),
        )
    }

    /// The maximal non-empty runs left after removing every occurrence of
    /// the letters in `sigma`.
    pub fn delete(&self, sigma: &LetterSet) -> Result<SubwordSplit> {
        if sigma.is_empty() {
            return Err(Error::SigmaEmpty);
        }
        Ok(delete_letters(&self.letters, sigma))
    }

    /// All occurrences of `sigma`'s letters in their original order.
    pub fn project(&self, sigma: &LetterSet) -> Result<Projection> {
        if sigma.is_empty() {
            return Err(Error::SigmaEmpty);
        }
        Ok(Projection {
            content: project_letters(&self.letters, sigma),
        })
    }

    /// Membership test up to renaming only. Pass the class representative to
    /// test up to full equivalence.
    pub fn is_tangled_cord(&self) -> bool {
        self.canonicalize().letters == tangled_cord(self.order()).letters
    }

    /// Shortest split `w = uv` into two DOWs on disjoint alphabets.
    pub fn split_composition(&self) -> Option<(Dow, Dow)> {
        let cut = composition_cut(&self.letters)?;
        let (u, v) = self.letters.split_at(cut);
        Some((
            Dow::from_vec_unchecked(u.to_vec()),
            Dow::from_vec_unchecked(v.to_vec()),
        ))
    }

    pub fn is_composition(&self) -> bool {
        composition_cut(&self.letters).is_some()
    }
}

/// Length of the shortest proper prefix in which no letter is left open.
fn composition_cut(letters: &[Letter]) -> Option<usize> {
    let mut open: BTreeSet<Letter> = BTreeSet::new();
    for (i, &a) in letters[..letters.len().saturating_sub(1)]
        .iter()
        .enumerate()
    {
        if !open.remove(&a) {
            open.insert(a);
        }
        if open.is_empty() {
            return Some(i + 1);
        }
    }
    None
}

fn canonical_letters(word: impl Iterator<Item = Letter>) -> Vec<Letter> {
    let mut names: BTreeMap<Letter, Letter> = BTreeMap::new();
    word.map(|a| {
        let next = names.len() as Letter + 1;
        *names.entry(a).or_insert(next)
    })
    .collect()
}

/// Compact form if every letter is a single digit, else space-separated.
pub fn render_letters(letters: &[Letter]) -> String {
    if letters.iter().all(|&a| (1..=9).contains(&a)) {
        letters.iter().map(|a| a.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `w \ sigma` on an arbitrary word.
pub fn delete_letters(word: &[Letter], sigma: &LetterSet) -> SubwordSplit {
    let mut segments = Vec::new();
    let mut current: Option<Segment> = None;
    for (i, &a) in word.iter().enumerate() {
        if sigma.contains(&a) {
            segments.extend(current.take());
        } else {
            let seg = current.get_or_insert_with(|| Segment {
                start: i + 1,
                end: i + 1,
                content: Vec::new(),
            });
            seg.end = i + 1;
            seg.content.push(a);
        }
    }
    segments.extend(current);
    SubwordSplit { segments }
}

/// `w(sigma)` on an arbitrary word.
pub fn project_letters(word: &[Letter], sigma: &LetterSet) -> Vec<Letter> {
    word.iter().copied().filter(|a| sigma.contains(a)).collect()
}

/// The tangled cord word `1 2 1 3 2 4 3 ... n (n-1) n`.
///
/// # Panics
/// If `n == 0`.
pub fn tangled_cord(n: usize) -> Dow {
    assert!(n >= 1, "tangled cord order must be positive");
    let cord: Vec<Letter> = (1..=n as Letter).collect();
    Dow::from_vec_unchecked(cord_pattern(&cord))
}

/// The tangled-cord pattern `t1 t2 t1 t3 t2 ... ts t(s-1) ts` over the given
/// letters.
pub fn cord_pattern(cord: &[Letter]) -> Vec<Letter> {
    let Some((&first, &last)) = cord.first().zip(cord.last()) else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(2 * cord.len());
    out.push(first);
    for pair in cord.windows(2) {
        out.push(pair[1]);
        out.push(pair[0]);
    }
    out.push(last);
    out
}

impl fmt::Display for Dow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Dow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dow({})", self.render())
    }
}

impl FromStr for Dow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dow::parse(s)
    }
}

impl Serialize for Dow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dow {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Dow::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// First and second occurrence positions (1-based) of every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceIndex {
    entries: BTreeMap<Letter, (usize, usize)>,
}

impl OccurrenceIndex {
    pub fn get(&self, a: Letter) -> Option<(usize, usize)> {
        self.entries.get(&a).copied()
    }

    pub fn first(&self, a: Letter) -> Option<usize> {
        self.get(a).map(|(i, _)| i)
    }

    pub fn second(&self, a: Letter) -> Option<usize> {
        self.get(a).map(|(_, j)| j)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, usize, usize)> + '_ {
        self.entries.iter().map(|(&a, &(i, j))| (a, i, j))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// 1-based, inclusive.
    pub start: usize,
    pub end: usize,
    pub content: Vec<Letter>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.content.len()
    }

    pub fn is_empty(&self) -> bool {
        self.content.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordSplit {
    pub segments: Vec<Segment>,
}

impl SubwordSplit {
    pub fn is_all_even(&self) -> bool {
        self.segments.iter().all(|s| s.len() % 2 == 0)
    }

    pub fn total_len(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    pub fn contents(&self) -> Vec<&[Letter]> {
        self.segments.iter().map(|s| s.content.as_slice()).collect()
    }
}

impl fmt::Display for SubwordSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| render_letters(&s.content))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub content: Vec<Letter>,
}

impl Projection {
    /// Empty when none of the letters occur in the word.
    pub fn into_dow(self) -> Option<Dow> {
        (!self.content.is_empty()).then(|| Dow::from_vec_unchecked(self.content))
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.content))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Dow {
        Dow::parse(s).unwrap()
    }

    fn set(letters: &[Letter]) -> LetterSet {
        letters.iter().copied().collect()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(w("1212").letters(), &[1, 2, 1, 2]);
        let long = w("1 3 4 2 1 3 4 8 5 6 7 5 7 2 8 6");
        assert_eq!(long.len(), 16);
        assert_eq!(long.alphabet(), (1..=8).collect::<Vec<_>>());
        assert_eq!(w("10,2, 10 2").letters(), &[10, 2, 10, 2]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Dow::parse("121"),
            Err(Error::NotDoubleOccurrence {
                letter: 2,
                count: 1
            })
        );
        assert_eq!(Dow::parse("   "), Err(Error::Empty));
        assert_eq!(Dow::parse(" , "), Err(Error::Empty));
        assert!(matches!(Dow::parse("1a1a"), Err(Error::BadToken(_))));
        assert!(matches!(Dow::parse("1010"), Err(Error::BadToken(_))));
        assert!(matches!(Dow::parse("0 0"), Err(Error::BadToken(_))));
        assert!(matches!(Dow::parse("1 -1"), Err(Error::BadToken(_))));
        assert_eq!(
            Dow::parse("111"),
            Err(Error::NotDoubleOccurrence {
                letter: 1,
                count: 3
            })
        );
    }

    #[test]
    fn render_switches_to_tokens_for_big_letters() {
        assert_eq!(w("1 2 1 2").render(), "1212");
        assert_eq!(w("10 2 10 2").render(), "10 2 10 2");
    }

    #[test]
    fn occurrence_functions() {
        let o = w("1212").occurrences();
        assert_eq!(o.get(1), Some((1, 3)));
        assert_eq!(o.get(2), Some((2, 4)));
        assert_eq!(w("11").occurrences().get(1), Some((1, 2)));
        assert_eq!(w("121323").occurrences().get(3), Some((4, 6)));
        assert_eq!(o.get(7), None);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w("2121").canonicalize(), w("1212"));
        assert_eq!(w("1212").canonicalize(), w("1212"));
        assert_eq!(w("323121").canonicalize(), w("121323"));
        assert_eq!(w("121323").reversed(), w("323121"));
    }

    #[test]
    fn representatives() {
        assert_eq!(w("1122").class_representative(), w("1122"));
        assert_eq!(w("2121").class_representative(), w("1212"));
        assert_eq!(w("2211").class_representative(), w("1122"));
        assert_eq!(w("121233").class_representative(), w("112323"));
    }

    #[test]
    fn deletion_and_projection_example() {
        let word = w("1342134856757286");
        let split = word.delete(&set(&[2, 5, 8])).unwrap();
        assert_eq!(split.to_string(), "(134, 134, 67, 7, 6)");
        assert_eq!(
            word.project(&set(&[2, 5, 8])).unwrap().to_string(),
            "285528"
        );
        assert_eq!(
            w("123415264536")
                .project(&set(&[1, 3, 6]))
                .unwrap()
                .to_string(),
            "131636"
        );
    }

    #[test]
    fn small_deletions() {
        let split = w("1212").delete(&set(&[1])).unwrap();
        assert_eq!(split.contents(), vec![&[2][..], &[2][..]]);
        assert_eq!(split.segments[0].start, 2);
        assert_eq!(split.segments[1].start, 4);
        let split = w("1122").delete(&set(&[1])).unwrap();
        assert_eq!(split.contents(), vec![&[2, 2][..]]);
        assert!(split.is_all_even());
        assert_eq!(w("1122").delete(&LetterSet::new()), Err(Error::SigmaEmpty));
        assert_eq!(w("1122").project(&LetterSet::new()), Err(Error::SigmaEmpty));
        assert!(w("1122").delete(&set(&[1, 2])).unwrap().segments.is_empty());
    }

    #[test]
    fn tangled_cords() {
        assert_eq!(tangled_cord(1), w("11"));
        assert_eq!(tangled_cord(2), w("1212"));
        assert_eq!(tangled_cord(3), w("121323"));
        assert_eq!(tangled_cord(4), w("12132434"));
        assert!(w("12132434").is_tangled_cord());
        assert!(!w("1122").is_tangled_cord());
        assert!(w("2121").is_tangled_cord());
    }

    #[test]
    fn tangled_cord_is_symmetric_and_grows_by_substitution() {
        for n in 1..=12 {
            let tc = tangled_cord(n);
            assert_eq!(tc.reversed().canonicalize(), tc);
            if n >= 2 {
                // replace the last occurrence of n-1 in TC_{n-1} by n (n-1) n
                let mut prev = tangled_cord(n - 1).letters().to_vec();
                let last = prev.len() - 1;
                assert_eq!(prev[last], (n - 1) as Letter);
                prev.splice(last.., [n as Letter, (n - 1) as Letter, n as Letter]);
                assert_eq!(prev, tc.letters());
            }
        }
    }

    #[test]
    fn tangled_cord_interleaving() {
        for n in 1..=12 {
            let tc = tangled_cord(n);
            assert_eq!(tc.len(), 2 * n);
            assert_eq!(tc.alphabet(), (1..=n as Letter).collect::<Vec<_>>());
            let o = tc.occurrences();
            let second = |k: usize| {
                if k == 0 {
                    1
                } else {
                    o.second(k as Letter).unwrap()
                }
            };
            for k in 1..n {
                assert!(second(k) < second(k + 1));
                let first_next = o.first(k as Letter + 1).unwrap();
                assert!(second(k - 1) < first_next && first_next < second(k));
            }
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(w("1122").split_composition(), Some((w("11"), w("22"))));
        assert_eq!(w("1212").split_composition(), None);
        assert_eq!(w("112323").split_composition(), Some((w("11"), w("2323"))));
        assert_eq!(w("11").split_composition(), None);
        assert_eq!(w("122133").split_composition(), Some((w("1221"), w("33"))));
    }

    #[test]
    fn cord_patterns() {
        assert_eq!(cord_pattern(&[1, 3, 6]), vec![1, 3, 1, 6, 3, 6]);
        assert_eq!(cord_pattern(&[7]), vec![7, 7]);
        assert!(cord_pattern(&[]).is_empty());
    }

    fn arb_dow() -> impl Strategy<Value = Dow> {
        (1usize..=7)
            .prop_flat_map(|n| {
                let letters: Vec<Letter> = (1..=n as Letter).flat_map(|a| [a, a]).collect();
                Just(letters).prop_shuffle()
            })
            .prop_map(Dow::from_vec_unchecked)
    }

    fn arb_renaming(n: usize) -> impl Strategy<Value = BTreeMap<Letter, Letter>> {
        Just((1..=40 as Letter).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |targets| (1..=n as Letter).zip(targets).collect::<BTreeMap<_, _>>())
    }

    proptest! {
        #[test]
        fn parse_render_roundtrip(word in arb_dow()) {
            prop_assert_eq!(Dow::parse(&word.render()).unwrap(), word.clone());
            let canonical = word.canonicalize();
            prop_assert_eq!(canonical.canonicalize(), canonical.clone());
            prop_assert!(canonical.is_canonical());
        }

        #[test]
        fn representative_is_orbit_invariant(
            (word, map) in arb_dow().prop_flat_map(|w| { let n = w.order(); (Just(w), arb_renaming(n)) })
        ) {
            let rep = word.class_representative();
            prop_assert_eq!(word.reversed().class_representative(), rep.clone());
            let renamed = word.rename(&map).unwrap();
            prop_assert_eq!(renamed.class_representative(), rep.clone());
            prop_assert_eq!(Dow::parse(&renamed.render()).unwrap(), renamed);
        }

        #[test]
        fn delete_and_project_account_for_every_letter(word in arb_dow(), bits in any::<u8>()) {
            let alphabet = word.alphabet();
            let sigma: LetterSet = alphabet.iter().copied()
                .enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, a)| a).collect();
            prop_assume!(!sigma.is_empty());
            let split = word.delete(&sigma).unwrap();
            prop_assert_eq!(split.total_len() + 2 * sigma.len(), word.len());
            prop_assert!(split.segments.iter().all(|s| !s.is_empty()));
            // reinserting deleted letters reproduces the word
            let mut rebuilt = word.letters().to_vec();
            for s in &split.segments {
                prop_assert_eq!(&rebuilt[s.start - 1..s.end], &s.content[..]);
            }
            for window in split.segments.windows(2) {
                prop_assert!(window[0].end + 1 < window[1].start);
            }
            rebuilt.retain(|a| sigma.contains(a));
            let projection = word.project(&sigma).unwrap();
            prop_assert_eq!(&projection.content, &rebuilt);
            for &a in &sigma {
                prop_assert_eq!(projection.content.iter().filter(|&&b| b == a).count(), 2);
            }
            let full: LetterSet = alphabet.iter().copied().collect();
            prop_assert_eq!(word.project(&full).unwrap().into_dow().unwrap(), word.clone());
        }

        #[test]
        fn composition_parts_are_disjoint_dows(word in arb_dow()) {
            if let Some((u, v)) = word.split_composition() {
                prop_assert_eq!(u.len() + v.len(), word.len());
                let ua: LetterSet = u.alphabet().into_iter().collect();
                prop_assert!(v.alphabet().iter().all(|a| !ua.contains(a)));
                prop_assert!(Dow::new(u.letters().to_vec()).is_ok());
                prop_assert!(Dow::new(v.letters().to_vec()).is_ok());
            }
        }
    }
}
