//! Double occurrence words, simple assembly graphs and Hamiltonian sets of
//! polygonal paths.
//!
//! A simple assembly graph is determined by the word listing its rigid
//! vertices along the Eulerian transversal. This crate counts and enumerates
//! the Hamiltonian sets of polygonal paths of such graphs, decides whether a
//! word attains the `F_{2n+1} - 1` maximum, and runs exhaustive censuses
//! showing the tangled cord is the only word that does.
//!
//! ```
//! use hamsets::{count_hamiltonian_sets, is_maximal, tangled_cord, AssemblyGraph, Dow};
//!
//! let word = Dow::parse("112323").unwrap();
//! assert_eq!(count_hamiltonian_sets(&AssemblyGraph::build(&word)), 7);
//! assert!(is_maximal(&tangled_cord(5)).unwrap().is_maximal);
//! ```

pub mod census;
pub mod cli;
pub mod dow;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod maximality;

pub use census::{
    enumerate_dow_classes, run_census, Census, CensusOptions, CensusRecord, CensusSummary,
};
pub use dow::{tangled_cord, Dow, Letter, LetterSet, OccurrenceIndex, Projection, SubwordSplit};
pub use enumeration::{
    count_hamiltonian_sets, enumerate_hamiltonian_sets, fibonacci, hamiltonian_bound,
    oracle_enumerate, phi, subset_to_hamset, EdgeSubset, FibTable, HamiltonianSet,
};
pub use error::{Error, Result};
pub use graph::{AssemblyGraph, Edge, PolygonalPath};
pub use maximality::{
    analyze, check_condition3, check_condition4, even_split_for_cord, find_framing_cord,
    is_framing_cord, is_maximal, minimal_even_split, MaximalityReport, MinimalEvenSplit,
};
