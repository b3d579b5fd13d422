//! Hamiltonian sets of polygonal paths and their edge-subset encoding.
//!
//! A Hamiltonian set is encoded by the set of transversal edges its paths
//! use. Encodings never contain two consecutive edges, so enumeration walks
//! only the no-consecutive-ones masks and keeps those whose edges induce an
//! acyclic subgraph.

mod fib;
mod oracle;

use std::fmt;

use serde::Serialize;

pub use fib::{fibonacci, hamiltonian_bound, FibTable, MAX_FIB_INDEX};
pub use oracle::{oracle_enumerate, ORACLE_LIMIT};

use crate::dow::Letter;
use crate::error::{Error, Result};
use crate::graph::{AssemblyGraph, PolygonalPath};

/// Largest `n` whose `2n - 1` transversal edges fit an [`EdgeSubset`].
pub const MAX_MASK_VERTICES: usize = 32;

/// A set of transversal edges; bit `i - 1` stands for `e_i`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    /// # Panics
    /// If an index is outside `1..=64`.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        EdgeSubset(indices.into_iter().fold(0, |m, i| {
            assert!((1..=64).contains(&i), "edge index {i} out of range");
            m | 1 << (i - 1)
        }))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=64).contains(&index) && self.0 >> (index - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Selected edge indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                i + 1
            })
        })
    }

    /// Smallest `i` with both `e_i` and `e_{i+1}` selected.
    pub fn first_consecutive(self) -> Option<usize> {
        let pairs = self.0 & (self.0 >> 1);
        (pairs != 0).then(|| pairs.trailing_zeros() as usize + 1)
    }

    /// 0/1 string of length `width`, `e_1` leftmost.
    pub fn render(self, width: usize) -> String {
        (1..=width)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    /// The alternating string `1010...1` over `2n - 1` edges.
    pub fn alternating(n: usize) -> Self {
        EdgeSubset::from_indices((0..n).map(|k| 2 * k + 1))
    }
}

/// Ascending iterator over all masks of `width` bits with no two adjacent
/// ones. Yields `F_{width + 2}` masks.
#[derive(Debug, Clone)]
pub struct NoConsecutiveMasks {
    limit: u64,
    next: Option<u64>,
}

impl NoConsecutiveMasks {
    /// # Panics
    /// If `width > 63`.
    pub fn new(width: usize) -> Self {
        assert!(width <= 63, "mask width {width} exceeds 63 bits");
        NoConsecutiveMasks {
            limit: 1 << width,
            next: Some(0),
        }
    }
}

/// Smallest value `>= x` with no two adjacent set bits.
fn skip_to_no_consecutive(mut x: u64) -> u64 {
    loop {
        let pairs = x & (x >> 1);
        if pairs == 0 {
            return x;
        }
        // the highest adjacent pair sits at bits h, h+1: carry into bit h+2
        let h = 63 - pairs.leading_zeros();
        x = (x | ((1u64 << (h + 2)) - 1)) + 1;
    }
}

impl Iterator for NoConsecutiveMasks {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        let current = self.next?;
        let following = skip_to_no_consecutive(current + 1);
        self.next = (following < self.limit).then_some(following);
        Some(EdgeSubset(current))
    }
}

/// Vertex-disjoint polygonal paths (singletons included) covering every
/// vertex. Paths are kept sorted, so equal sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonianSet {
    paths: Vec<PolygonalPath>,
}

impl HamiltonianSet {
    pub fn new(mut paths: Vec<PolygonalPath>) -> Self {
        paths.sort();
        HamiltonianSet { paths }
    }

    pub fn paths(&self) -> &[PolygonalPath] {
        &self.paths
    }

    /// Total number of path edges.
    pub fn edge_total(&self) -> usize {
        self.paths.iter().map(|p| p.edges().len()).sum()
    }

    pub fn validate(&self, g: &AssemblyGraph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for path in &self.paths {
            if !g.validate_polygonal(path) {
                return Err(Error::InvalidHamiltonianSet(format!(
                    "{path} is not polygonal"
                )));
            }
            for &v in path.vertices() {
                let k = g.vertex_index(v).expect("validated vertex");
                if std::mem::replace(&mut seen[k], true) {
                    return Err(Error::InvalidHamiltonianSet(format!(
                        "vertex {v} is covered twice"
                    )));
                }
            }
        }
        if let Some(k) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidHamiltonianSet(format!(
                "vertex {} is not covered",
                g.vertices()[k]
            )));
        }
        Ok(())
    }
}

impl fmt::Display for HamiltonianSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for path in &self.paths {
            write!(f, "{path}")?;
        }
        Ok(())
    }
}

/// One enumerated set with its encoding, as written by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct RenderedSet {
    pub mask: String,
    pub paths: Vec<Vec<Letter>>,
    pub rendered: String,
}

impl RenderedSet {
    pub fn new(g: &AssemblyGraph, gamma: &HamiltonianSet) -> Result<Self> {
        Ok(RenderedSet {
            mask: phi(g, gamma)?.render(g.edge_count()),
            paths: gamma
                .paths()
                .iter()
                .map(|p| p.vertices().to_vec())
                .collect(),
            rendered: gamma.to_string(),
        })
    }
}

/// Indicator of the transversal edges used by `gamma`.
pub fn phi(g: &AssemblyGraph, gamma: &HamiltonianSet) -> Result<EdgeSubset> {
    gamma.validate(g)?;
    Ok(EdgeSubset::from_indices(
        gamma.paths().iter().flat_map(|p| p.edges().iter().copied()),
    ))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `x` and `y` were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// The Hamiltonian set whose path edges are exactly `s`, if the selected
/// edges induce a cycle-free subgraph. Loops and parallel edges are cycles.
pub fn subset_to_hamset(g: &AssemblyGraph, s: EdgeSubset) -> Result<Option<HamiltonianSet>> {
    let m = g.edge_count();
    if let Some(index) = s.indices().find(|&i| i > m) {
        return Err(Error::EdgeOutOfRange {
            index,
            edge_count: m,
        });
    }
    if let Some(i) = s.first_consecutive() {
        return Err(Error::ConsecutiveEdges(i));
    }
    let n = g.n();
    let mut uf = UnionFind::new(n);
    let mut adjacent: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in s.indices() {
        let (a, b) = g.dense_endpoints(i);
        if a == b || !uf.union(a, b) {
            return Ok(None);
        }
        adjacent[a].push((i, b));
        adjacent[b].push((i, a));
    }
    debug_assert!(adjacent.iter().all(|adj| adj.len() <= 2));

    let names = g.vertices();
    let mut visited = vec![false; n];
    let mut paths = Vec::new();
    for start in 0..n {
        if visited[start] || adjacent[start].len() > 1 {
            continue;
        }
        let mut vertices = vec![names[start]];
        let mut edges = Vec::new();
        visited[start] = true;
        let (mut current, mut came_by) = (start, None);
        while let Some(&(e, next)) = adjacent[current].iter().find(|&&(e, _)| Some(e) != came_by) {
            visited[next] = true;
            vertices.push(names[next]);
            edges.push(e);
            came_by = Some(e);
            current = next;
        }
        paths.push(PolygonalPath::new(vertices, edges).expect("path shape"));
    }
    debug_assert!(visited.iter().all(|&v| v));
    Ok(Some(HamiltonianSet::new(paths)))
}

/// `|C(G)|`, by depth-first search over transversal edges: an edge may be
/// taken when the previous one was not and it does not close a cycle.
///
/// Every selected vertex has degree at most two, so each partial selection
/// is a set of vertex-disjoint paths; `ends[v]` holds the far end of the
/// path that ends at `v`.
pub fn count_hamiltonian_sets(g: &AssemblyGraph) -> u64 {
    let mut ends: Vec<usize> = (0..g.n()).collect();
    count_from(g, 1, false, &mut ends)
}

fn count_from(g: &AssemblyGraph, index: usize, prev_taken: bool, ends: &mut [usize]) -> u64 {
    if index > g.edge_count() {
        return 1;
    }
    let mut total = count_from(g, index + 1, false, ends);
    if !prev_taken {
        let (a, b) = g.dense_endpoints(index);
        if a != b && ends[a] != b {
            let (ea, eb) = (ends[a], ends[b]);
            debug_assert!(ends[ea] == a && ends[eb] == b);
            ends[ea] = eb;
            ends[eb] = ea;
            total += count_from(g, index + 1, true, ends);
            ends[ea] = a;
            ends[eb] = b;
        }
    }
    total
}

/// Every Hamiltonian set of polygonal paths, in ascending mask order.
pub fn enumerate_hamiltonian_sets(g: &AssemblyGraph) -> Result<Vec<HamiltonianSet>> {
    if g.n() > MAX_MASK_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: MAX_MASK_VERTICES,
        });
    }
    let mut out = Vec::new();
    for s in NoConsecutiveMasks::new(g.edge_count()) {
        if let Some(gamma) = subset_to_hamset(g, s)? {
            out.push(gamma);
        }
    }
    Ok(out)
}
