//! Exhaustive census over equivalence classes of words on `n` letters.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dow::{tangled_cord, Dow, Letter};
use crate::enumeration::{count_hamiltonian_sets, hamiltonian_bound};
use crate::error::{Error, Result};
use crate::graph::AssemblyGraph;
use crate::maximality::{check_condition4, find_framing_cord};

/// Default guard on `n`; `(2n-1)!!` canonical words are generated.
pub const DEFAULT_CENSUS_LIMIT: usize = 8;

/// Visits every canonical word on `n` letters (first occurrences read
/// 1, 2, ..., n) in lexicographic order. There are `(2n-1)!!` of them, one
/// per perfect matching of the positions.
pub fn for_each_canonical_word(n: usize, mut visit: impl FnMut(&[Letter])) {
    assert!(n <= 63, "n = {n} is out of range");
    if n == 0 {
        return;
    }
    let mut word = Vec::with_capacity(2 * n);
    extend_canonical(n, &mut word, 0, 1, &mut visit);
}

fn extend_canonical(
    n: usize,
    word: &mut Vec<Letter>,
    open: u64,
    next: Letter,
    visit: &mut impl FnMut(&[Letter]),
) {
    if word.len() == 2 * n {
        visit(word);
        return;
    }
    // closing an open letter always reads smaller than opening a new one
    let mut rest = open;
    while rest != 0 {
        let a = rest.trailing_zeros() as Letter;
        rest &= rest - 1;
        word.push(a);
        extend_canonical(n, word, open & !(1 << a), next, visit);
        word.pop();
    }
    if next as usize <= n {
        word.push(next);
        extend_canonical(n, word, open | 1 << next, next + 1, visit);
        word.pop();
    }
}

/// Whether a canonical word is the representative of its class, i.e. not
/// larger than the canonical form of its reverse.
fn is_class_representative(word: &[Letter]) -> bool {
    let mut names = vec![0 as Letter; word.len() / 2 + 1];
    let mut next = 1;
    for (&a, &b) in word.iter().rev().zip(word) {
        let name = &mut names[a as usize];
        if *name == 0 {
            *name = next;
            next += 1;
        }
        match (*name).cmp(&b) {
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Greater => return true,
            std::cmp::Ordering::Equal => {}
        }
    }
    true
}

fn check_order(n: usize, allow_large: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > DEFAULT_CENSUS_LIMIT && !allow_large {
        return Err(Error::TooLarge {
            n,
            limit: DEFAULT_CENSUS_LIMIT,
        });
    }
    Ok(())
}

/// One representative per equivalence class, in lexicographic order.
pub fn enumerate_dow_classes(n: usize, allow_large: bool) -> Result<Vec<Dow>> {
    check_order(n, allow_large)?;
    let mut classes = Vec::new();
    for_each_canonical_word(n, |word| {
        if is_class_representative(word) {
            classes.push(Dow::from_vec_unchecked(word.to_vec()));
        }
    });
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub representative: Dow,
    pub count: u64,
    pub bound: u64,
    pub is_maximal: bool,
    pub is_composition: bool,
    pub has_framing_cord: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub n: usize,
    pub total_classes: usize,
    pub maximal_classes: Vec<Dow>,
    pub bound_violations: usize,
    /// Classes where the even-split verdict disagrees with the count.
    pub equivalence_failures: usize,
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    pub allow_large: bool,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub summary: CensusSummary,
    pub records: Vec<CensusRecord>,
}

fn census_record(representative: Dow) -> CensusRecord {
    let bound = hamiltonian_bound(representative.order());
    let count = count_hamiltonian_sets(&AssemblyGraph::build(&representative));
    CensusRecord {
        count,
        bound,
        is_maximal: check_condition4(&representative).is_none(),
        is_composition: representative.is_composition(),
        has_framing_cord: find_framing_cord(&representative).is_some(),
        representative,
    }
}

pub fn run_census(n: usize, options: &CensusOptions) -> Result<Census> {
    let classes = enumerate_dow_classes(n, options.allow_large)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let records: Vec<CensusRecord> =
        pool.install(|| classes.into_par_iter().map(census_record).collect());

    let summary = CensusSummary {
        n,
        total_classes: records.len(),
        maximal_classes: records
            .iter()
            .filter(|r| r.is_maximal)
            .map(|r| r.representative.clone())
            .collect(),
        bound_violations: records.iter().filter(|r| r.count > r.bound).count(),
        equivalence_failures: records
            .iter()
            .filter(|r| (r.count == r.bound) != r.is_maximal)
            .count(),
    };
    Ok(Census { summary, records })
}

impl Census {
    /// Failed census checks, empty on a correct run: no bound violations,
    /// verdicts agree, the tangled cord is the only maximal class, no
    /// composition is maximal, and a framing cord exists exactly for
    /// non-compositions.
    pub fn assertion_failures(&self) -> Vec<String> {
        let s = &self.summary;
        let mut failures = Vec::new();
        if s.bound_violations > 0 {
            failures.push(format!("{} classes exceed the bound", s.bound_violations));
        }
        if s.equivalence_failures > 0 {
            failures.push(format!(
                "{} classes where the even-split verdict disagrees with the count",
                s.equivalence_failures
            ));
        }
        if s.maximal_classes != [tangled_cord(s.n)] {
            failures.push(format!(
                "maximal classes are {:?}, expected only {}",
                s.maximal_classes,
                tangled_cord(s.n)
            ));
        }
        for r in &self.records {
            if r.is_composition && r.is_maximal {
                failures.push(format!("composition {} is maximal", r.representative));
            }
            if r.has_framing_cord == r.is_composition {
                failures.push(format!(
                    "{}: framing cord present = {}, composition = {}",
                    r.representative, r.has_framing_cord, r.is_composition
                ));
            }
        }
        failures
    }

    pub fn write_csv(&self, out: impl Write) -> std::result::Result<(), csv::Error> {
        let mut writer = csv::Writer::from_writer(out);
        for record in &self.records {
            writer.serialize(record)?;
        }
        writer.flush()?;
        Ok(())
    }
}
