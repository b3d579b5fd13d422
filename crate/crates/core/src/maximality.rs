//! Maximality of words: the even-split criterion, framing tangled cords and
//! minimal even splits.
//!
//! A word on `n` letters is maximal when its graph has `F_{2n+1} - 1`
//! Hamiltonian sets. Equivalently, deleting any proper non-empty letter set
//! always leaves an odd-length segment. [`check_condition4`] searches for a
//! letter set that breaks this, [`check_condition3`] searches the edge-level
//! formulation, and [`analyze`] cross-checks the verdict against an exact
//! count.

use serde::{Deserialize, Serialize};

use crate::dow::{cord_pattern, delete_letters, Dow, Letter, LetterSet};
use crate::enumeration::{
    count_hamiltonian_sets, hamiltonian_bound, EdgeSubset, NoConsecutiveMasks, MAX_FIB_INDEX,
    MAX_MASK_VERTICES,
};
use crate::error::{Error, Result};
use crate::graph::AssemblyGraph;

pub const DEFAULT_CROSS_CHECK_LIMIT: usize = 10;

/// Largest alphabet for which the bound `F_{2n+1} - 1` fits a `u64`.
pub const MAX_ANALYSIS_LETTERS: usize = (MAX_FIB_INDEX - 1) / 2;

/// Occurrence positions of each letter as a bitmask (bit `p - 1` for
/// position `p`).
struct ParityIndex {
    alphabet: Vec<Letter>,
    positions: Vec<u128>,
}

impl ParityIndex {
    fn new(w: &Dow) -> Self {
        assert!(
            w.len() <= 128,
            "words longer than 128 letters are not supported"
        );
        let alphabet = w.alphabet();
        let mut positions = vec![0u128; alphabet.len()];
        for (p, a) in w.letters().iter().enumerate() {
            let k = alphabet.binary_search(a).expect("alphabet letter");
            positions[k] |= 1 << p;
        }
        ParityIndex {
            alphabet,
            positions,
        }
    }

    /// Deleting the letters at `indices` leaves only even segments iff the
    /// k-th deleted position (0-based) has the parity of k.
    fn is_all_even(&self, indices: &[usize]) -> bool {
        let mut deleted = indices.iter().fold(0u128, |m, &k| m | self.positions[k]);
        let mut k = 0u32;
        while deleted != 0 {
            if (deleted.trailing_zeros() ^ k) & 1 != 0 {
                return false;
            }
            deleted &= deleted - 1;
            k += 1;
        }
        true
    }

    fn letters(&self, indices: &[usize]) -> LetterSet {
        indices.iter().map(|&k| self.alphabet[k]).collect()
    }
}

/// Steps `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// A proper non-empty letter set whose deletion leaves only even-length
/// segments: the smallest such set, lexicographically first among equals.
/// `None` means the word is maximal.
///
/// # Panics
/// If the word is longer than 128 letters.
pub fn check_condition4(w: &Dow) -> Option<LetterSet> {
    let index = ParityIndex::new(w);
    let n = index.alphabet.len();
    for k in 1..n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if index.is_all_even(&combo) {
                return Some(index.letters(&combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    None
}

/// A set of `1..=n-1` pairwise non-consecutive transversal edges in whose
/// endpoint list every vertex occurs zero or two times (smallest mask
/// first). `None` means the word is maximal.
///
/// # Panics
/// If `g.n()` exceeds [`MAX_MASK_VERTICES`].
pub fn check_condition3(g: &AssemblyGraph) -> Option<EdgeSubset> {
    assert!(g.n() <= MAX_MASK_VERTICES, "graph too large for edge masks");
    let n = g.n();
    let mut occurrences = vec![0u8; n];
    NoConsecutiveMasks::new(g.edge_count())
        .filter(|s| (1..n).contains(&s.len()))
        .find(|s| {
            occurrences.iter_mut().for_each(|c| *c = 0);
            for i in s.indices() {
                let (a, b) = g.dense_endpoints(i);
                occurrences[a] += 1;
                occurrences[b] += 1;
            }
            occurrences.iter().all(|&c| c == 0 || c == 2)
        })
}

/// Whether `cord` frames `word`: the word starts with `t_1`, ends with `t_s`,
/// and its projection onto the cord letters is `t1 t2 t1 t3 t2 ... ts t(s-1) ts`.
pub fn is_framing_cord(word: &[Letter], cord: &[Letter]) -> bool {
    let (Some(&first), Some(&last)) = (cord.first(), cord.last()) else {
        return false;
    };
    let letters: LetterSet = cord.iter().copied().collect();
    letters.len() == cord.len()
        && word.first() == Some(&first)
        && word.last() == Some(&last)
        && word
            .iter()
            .filter(|a| letters.contains(a))
            .eq(cord_pattern(cord).iter())
}

/// Greedy framing tangled cord: `t_1 = w[1]`, then repeatedly the letter
/// straddling `o2(t_k)` with the latest second occurrence, until position
/// `2n` is reached. `None` iff the word is a composition.
pub fn find_framing_cord(w: &Dow) -> Option<Vec<Letter>> {
    let occurrences = w.occurrences();
    let first = w.at(1);
    let mut cord = vec![first];
    let mut reach = occurrences.second(first).expect("letter of w");
    while reach < w.len() {
        let (next, _, second) = occurrences
            .iter()
            .filter(|&(_, i, j)| i < reach && reach < j)
            .max_by_key(|&(_, _, j)| j)?;
        cord.push(next);
        reach = second;
    }
    debug_assert!(is_framing_cord(w.letters(), &cord), "{w}: {cord:?}");
    Some(cord)
}

/// A non-empty subset of the cord letters whose deletion leaves only
/// even-length segments of `word`.
///
/// `word` need not be a DOW but must have even length with every letter
/// occurring at most twice, `cord` must frame it, and `word` must be longer
/// than the cord's own pattern.
pub fn even_split_for_cord(word: &[Letter], cord: &[Letter]) -> Result<LetterSet> {
    let violated = |why: &str| Err(Error::PreconditionViolated(why.to_string()));
    if !word.len().is_multiple_of(2) {
        return violated("word length must be even");
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(3).any(|t| t[0] == t[2]) {
        return violated("a letter occurs more than twice");
    }
    if !is_framing_cord(word, cord) {
        return violated("cord does not frame the word");
    }
    if word.len() <= 2 * cord.len() {
        return violated("word consists of the cord alone");
    }
    let sigma = split_along_cord(word, cord);
    debug_assert!(delete_letters(word, &sigma).is_all_even());
    Ok(sigma)
}

fn split_along_cord(word: &[Letter], cord: &[Letter]) -> LetterSet {
    let s = cord.len();
    if s == 1 {
        return LetterSet::from([cord[0]]);
    }
    let position = |a: Letter, nth: usize| {
        word.iter()
            .enumerate()
            .filter(|&(_, &b)| b == a)
            .nth(nth)
            .map(|(p, _)| p + 1)
            .expect("cord letter occurs twice")
    };
    if let Some(i) = (0..s - 1).find(|&i| position(cord[i], 1) % 2 == 0) {
        let end = position(cord[i], 1);
        return split_along_cord(&word[..end], &cord[..=i]);
    }
    if (1..s).any(|j| position(cord[j], 0) % 2 == 1) {
        // reversal swaps first and second occurrences and flips parities
        let word: Vec<Letter> = word.iter().rev().copied().collect();
        let cord: Vec<Letter> = cord.iter().rev().copied().collect();
        return split_along_cord(&word, &cord);
    }
    cord.iter().copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalEvenSplit {
    pub sigma: LetterSet,
    pub projection: Dow,
    pub is_tangled_cord: bool,
}

/// Smallest letter set with an all-even split, with the word it projects
/// to. `None` iff the word is maximal.
pub fn minimal_even_split(w: &Dow) -> Option<MinimalEvenSplit> {
    let sigma = check_condition4(w)?;
    let projection = w
        .project(&sigma)
        .expect("non-empty sigma")
        .into_dow()
        .expect("sigma letters occur in w");
    let is_tangled_cord = projection.is_tangled_cord();
    Some(MinimalEvenSplit {
        sigma,
        projection,
        is_tangled_cord,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub word: Dow,
    pub n: usize,
    /// Exact count, computed when `n` is within the cross-check limit.
    pub count: Option<u64>,
    pub bound: u64,
    pub is_maximal: bool,
    pub failing_sigma: Option<LetterSet>,
    pub is_composition: bool,
    pub framing_cord: Option<Vec<Letter>>,
    pub minimal_even_split: Option<MinimalEvenSplit>,
}

/// [`analyze`] with [`DEFAULT_CROSS_CHECK_LIMIT`].
pub fn is_maximal(w: &Dow) -> Result<MaximalityReport> {
    analyze(w, DEFAULT_CROSS_CHECK_LIMIT)
}

/// Full report on the canonical form of `w`. The verdict comes from the
/// even-split criterion; for `n <= cross_check_limit` it is also compared
/// with the exact count and a disagreement is an error.
pub fn analyze(w: &Dow, cross_check_limit: usize) -> Result<MaximalityReport> {
    let n = w.order();
    if n > MAX_ANALYSIS_LETTERS {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ANALYSIS_LETTERS,
        });
    }
    let word = w.canonicalize();
    let bound = hamiltonian_bound(n);
    let minimal = minimal_even_split(&word);
    let is_maximal = minimal.is_none();
    let count = (n <= cross_check_limit.min(MAX_MASK_VERTICES))
        .then(|| count_hamiltonian_sets(&AssemblyGraph::build(&word)));
    if let Some(count) = count {
        if count > bound || (count == bound) != is_maximal {
            return Err(Error::CrossCheck {
                word: word.render(),
                detail: format!(
                    "count {count}, bound {bound}, even-split verdict maximal={is_maximal}"
                ),
            });
        }
    }
    Ok(MaximalityReport {
        n,
        count,
        bound,
        is_maximal,
        failing_sigma: minimal.as_ref().map(|m| m.sigma.clone()),
        is_composition: word.is_composition(),
        framing_cord: find_framing_cord(&word),
        minimal_even_split: minimal,
        word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dow::tangled_cord;

    fn w(s: &str) -> Dow {
        Dow::parse(s).unwrap()
    }

    fn set(letters: &[Letter]) -> LetterSet {
        letters.iter().copied().collect()
    }

    #[test]
    fn lexicographic_combinations() {
        let mut combo = vec![0, 1];
        let mut seen = vec![combo.clone()];
        while next_combination(&mut combo, 4) {
            seen.push(combo.clone());
        }
        assert_eq!(seen, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }

    #[test]
    fn parity_rule_matches_explicit_deletion() {
        for s in [
            "1122",
            "1212",
            "1221",
            "112323",
            "123415264536",
            "1342134856757286",
        ] {
            let word = w(s);
            let index = ParityIndex::new(&word);
            let n = word.order();
            for bits in 1u32..(1 << n) {
                let indices: Vec<usize> = (0..n).filter(|k| bits >> k & 1 == 1).collect();
                let sigma = index.letters(&indices);
                assert_eq!(
                    index.is_all_even(&indices),
                    word.delete(&sigma).unwrap().is_all_even(),
                    "{s} {sigma:?}"
                );
            }
        }
    }

    #[test]
    fn condition4_witnesses() {
        assert_eq!(check_condition4(&w("1122")), Some(set(&[1])));
        assert_eq!(check_condition4(&w("1212")), None);
        assert_eq!(check_condition4(&w("11")), None);
        assert_eq!(check_condition4(&w("1221")), Some(set(&[1])));
        for n in 1..=8 {
            assert_eq!(check_condition4(&tangled_cord(n)), None, "n = {n}");
        }
    }

    #[test]
    fn condition3_witnesses() {
        let g = AssemblyGraph::build(&w("1122"));
        assert_eq!(check_condition3(&g), Some(EdgeSubset::from_indices([1])));
        assert_eq!(check_condition3(&AssemblyGraph::build(&w("1212"))), None);
        assert_eq!(
            check_condition3(&AssemblyGraph::build(&tangled_cord(6))),
            None
        );
    }

    #[test]
    fn framing_cords() {
        assert_eq!(find_framing_cord(&w("123415264536")), Some(vec![1, 3, 6]));
        assert_eq!(find_framing_cord(&w("1122")), None);
        assert_eq!(find_framing_cord(&w("11")), Some(vec![1]));
        for n in 1..=9 {
            let expected: Vec<Letter> = (1..=n as Letter).collect();
            assert_eq!(find_framing_cord(&tangled_cord(n)), Some(expected));
        }
        let word = w("123415264536");
        for cord in [&[1, 3, 6][..], &[1, 4, 6], &[1, 2, 5, 6]] {
            assert!(is_framing_cord(word.letters(), cord), "{cord:?}");
        }
        assert!(!is_framing_cord(word.letters(), &[1, 2, 6]));
        assert!(!is_framing_cord(word.letters(), &[]));
        assert!(!is_framing_cord(word.letters(), &[1, 1]));
    }

    #[test]
    fn even_splits_along_cords() {
        assert_eq!(
            even_split_for_cord(&[1, 1, 2, 2], &[1]),
            Err(Error::PreconditionViolated(
                "cord does not frame the word".into()
            ))
        );
        assert_eq!(even_split_for_cord(&[1, 2, 2, 1], &[1]), Ok(set(&[1])));
        assert!(matches!(
            even_split_for_cord(tangled_cord(4).letters(), &[1, 2, 3, 4]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            even_split_for_cord(&[1, 2, 1], &[1]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            even_split_for_cord(&[1, 2, 2, 2, 2, 1], &[1]),
            Err(Error::PreconditionViolated(_))
        ));
        assert_eq!(even_split_for_cord(&[1, 5, 6, 1], &[1]), Ok(set(&[1])));
        let word = w("123415264536");
        for cord in [&[1, 3, 6][..], &[1, 4, 6], &[1, 2, 5, 6]] {
            let sigma = even_split_for_cord(word.letters(), cord).unwrap();
            assert!(!sigma.is_empty());
            assert!(sigma.iter().all(|a| cord.contains(a)));
            assert!(
                word.delete(&sigma).unwrap().is_all_even(),
                "{cord:?} -> {sigma:?}"
            );
        }
        // not a DOW: letters 7 and 8 occur once
        let sigma = even_split_for_cord(&[1, 7, 2, 1, 8, 2], &[1, 2]).unwrap();
        assert!(delete_letters(&[1, 7, 2, 1, 8, 2], &sigma).is_all_even());
    }

    #[test]
    fn minimal_splits() {
        let m = minimal_even_split(&w("1122")).unwrap();
        assert_eq!(m.sigma, set(&[1]));
        assert_eq!(m.projection, w("11"));
        assert!(m.is_tangled_cord);
        for n in 1..=7 {
            assert_eq!(minimal_even_split(&tangled_cord(n)), None);
        }
    }

    #[test]
    fn reports() {
        let r = is_maximal(&tangled_cord(5)).unwrap();
        assert!(r.is_maximal);
        assert_eq!(r.count, Some(88));
        assert_eq!(r.bound, 88);
        assert_eq!(r.failing_sigma, None);
        assert_eq!(r.framing_cord, Some(vec![1, 2, 3, 4, 5]));

        let r = is_maximal(&w("1122")).unwrap();
        assert!(!r.is_maximal);
        assert_eq!(r.failing_sigma, Some(set(&[1])));
        assert!(r.is_composition);
        assert_eq!(r.framing_cord, None);
        assert_eq!(r.count, Some(2));

        let r = analyze(&w("2121"), 0).unwrap();
        assert_eq!(r.word, w("1212"));
        assert_eq!(r.count, None);
        assert!(r.is_maximal);

        let composed = w("1213234545");
        assert!(!is_maximal(&composed).unwrap().is_maximal);
    }

    #[test]
    fn report_json_shape() {
        let r = is_maximal(&w("1122")).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = json
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        let mut expected = vec![
            "word",
            "n",
            "count",
            "bound",
            "is_maximal",
            "failing_sigma",
            "is_composition",
            "framing_cord",
            "minimal_even_split",
        ];
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
        assert_eq!(json["word"], "1122");
        assert_eq!(json["failing_sigma"], serde_json::json!([1]));
        assert_eq!(json["minimal_even_split"]["projection"], "11");
        let back: MaximalityReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
