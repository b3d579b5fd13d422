//! Simple assembly graphs.
//!
//! The graph of a word `w` of length `2n` has one rigid vertex per letter and
//! transversal edges `e_i = (w[i], w[i+1])` for `i = 1..2n-1`. Two virtual
//! edges `e_0` and `e_{2n}` join the first and last vertex to the endpoints.
//!
//! The cyclic order at a vertex is not stored. A vertex visited at positions
//! `i < j` has the straight-through pairs `{e_{i-1}, e_i}` and
//! `{e_{j-1}, e_j}`; every other pair of its half-edges are neighbours, and
//! both admissible cyclic orders agree on that relation.

use std::fmt::{self, Write as _};

use crate::dow::{render_letters, Dow, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub index: usize,
    pub v1: Letter,
    pub v2: Letter,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.v1 == self.v2
    }

    pub fn joins(&self, a: Letter, b: Letter) -> bool {
        (self.v1 == a && self.v2 == b) || (self.v1 == b && self.v2 == a)
    }
}

#[derive(Debug, Clone)]
pub struct AssemblyGraph {
    word: Dow,
    vertices: Vec<Letter>,
    positions: Vec<(usize, usize)>,
    edges: Vec<Edge>,
    dense: Vec<(usize, usize)>,
}

impl AssemblyGraph {
    pub fn build(word: &Dow) -> Self {
        let vertices = word.alphabet();
        let occurrences = word.occurrences();
        let positions = vertices
            .iter()
            .map(|&v| occurrences.get(v).expect("alphabet letter"))
            .collect();
        let letters = word.letters();
        let edges: Vec<Edge> = letters
            .windows(2)
            .enumerate()
            .map(|(i, pair)| Edge {
                index: i + 1,
                v1: pair[0],
                v2: pair[1],
            })
            .collect();
        let index_of = |v: Letter| vertices.binary_search(&v).expect("alphabet letter");
        let dense = edges
            .iter()
            .map(|e| (index_of(e.v1), index_of(e.v2)))
            .collect();
        AssemblyGraph {
            word: word.clone(),
            vertices,
            positions,
            edges,
            dense,
        }
    }

    pub fn word(&self) -> &Dow {
        &self.word
    }

    /// Number of rigid vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.vertices
    }

    /// Number of enumerated transversal edges, `2n - 1`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge `e_index`, 1-based.
    pub fn edge(&self, index: usize) -> Option<&Edge> {
        index.checked_sub(1).and_then(|i| self.edges.get(i))
    }

    pub fn vertex_index(&self, v: Letter) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Dense vertex indices of the endpoints of `e_index`.
    pub(crate) fn dense_endpoints(&self, index: usize) -> (usize, usize) {
        self.dense[index - 1]
    }

    /// Word positions `(i, j)` at which the transversal visits `v`.
    pub fn visits(&self, v: Letter) -> Option<(usize, usize)> {
        self.vertex_index(v).map(|k| self.positions[k])
    }

    /// The two straight-through pairs `(i-1, i)` and `(j-1, j)` at `v`,
    /// as edge indices. Index `0` and `2n` are the virtual endpoint edges.
    pub fn straight_through(&self, v: Letter) -> Option<[(usize, usize); 2]> {
        self.visits(v).map(|(i, j)| [(i - 1, i), (j - 1, j)])
    }

    /// The four half-edges at `v` by edge index; a loop appears twice.
    pub fn half_edges(&self, v: Letter) -> Option<[usize; 4]> {
        self.visits(v).map(|(i, j)| [i - 1, i, j - 1, j])
    }

    /// Whether `a` and `b` are neighbours at `v`, i.e. not a straight-through
    /// pair. For `a == b` this asks about the two half-edges of a loop.
    pub fn are_neighbors(&self, v: Letter, a: usize, b: usize) -> Result<bool> {
        let halves = self
            .half_edges(v)
            .ok_or(Error::NotIncident { vertex: v, edge: a })?;
        for e in [a, b] {
            if !halves.contains(&e) {
                return Err(Error::NotIncident { vertex: v, edge: e });
            }
        }
        if a == b {
            return Ok(halves.iter().filter(|&&h| h == a).count() == 2);
        }
        let [(p, q), (r, s)] = [(halves[0], halves[1]), (halves[2], halves[3])];
        let straight = |x: usize, y: usize| (a == x && b == y) || (a == y && b == x);
        Ok(!straight(p, q) && !straight(r, s))
    }

    /// Distinct vertices, edges joining consecutive vertices, and a turn at
    /// every interior vertex.
    pub fn validate_polygonal(&self, path: &PolygonalPath) -> bool {
        let vertices = path.vertices();
        let edges = path.edges();
        if vertices.is_empty() || edges.len() + 1 != vertices.len() {
            return false;
        }
        if vertices.iter().any(|&v| self.vertex_index(v).is_none()) {
            return false;
        }
        for (k, v) in vertices.iter().enumerate() {
            if vertices[..k].contains(v) {
                return false;
            }
        }
        for (k, &e) in edges.iter().enumerate() {
            match self.edge(e) {
                Some(edge) if edge.joins(vertices[k], vertices[k + 1]) => {}
                _ => return false,
            }
        }
        edges
            .windows(2)
            .zip(&vertices[1..])
            .all(|(pair, &v)| matches!(self.are_neighbors(v, pair[0], pair[1]), Ok(true)))
    }

    /// Graphviz text. Nodes are ordered by letter, edges by transversal index
    /// `e_0..e_{2n}`; each vertex lists its straight-through pairs.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let total = self.word.len();
        let _ = writeln!(out, "graph assembly {{");
        let _ = writeln!(
            out,
            "  comment=\"word {}\";",
            render_letters(self.word.letters())
        );
        let _ = writeln!(out, "  start [shape=point, label=\"start\"];");
        let _ = writeln!(out, "  end [shape=point, label=\"end\"];");
        for &v in &self.vertices {
            let [(a, b), (c, d)] = self.straight_through(v).expect("vertex");
            let _ = writeln!(
                out,
                "  v{v} [label=\"{v}\", straight_through=\"e{a}-e{b};e{c}-e{d}\"];"
            );
        }
        let node = |i: usize| -> String {
            if i == 0 {
                "start".to_string()
            } else if i > total {
                "end".to_string()
            } else {
                format!("v{}", self.word.at(i))
            }
        };
        for i in 0..=total {
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"e{i}\", index={i}];",
                node(i),
                node(i + 1)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// A path with distinct vertices that turns at every interior vertex, or a
/// singleton. Stored in a fixed orientation so a path equals its reverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonalPath {
    vertices: Vec<Letter>,
    edges: Vec<usize>,
}

impl PolygonalPath {
    /// `edges[k]` joins `vertices[k]` and `vertices[k + 1]`. Only the shape is
    /// checked here; use [`AssemblyGraph::validate_polygonal`] against a graph.
    pub fn new(vertices: Vec<Letter>, edges: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() || edges.len() + 1 != vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "a path with {} vertices needs {} edges, got {}",
                vertices.len(),
                vertices.len().saturating_sub(1),
                edges.len()
            )));
        }
        let forward = PolygonalPath { vertices, edges };
        let mut backward = forward.clone();
        backward.vertices.reverse();
        backward.edges.reverse();
        Ok(forward.min(backward))
    }

    pub fn singleton(v: Letter) -> Self {
        PolygonalPath {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn is_singleton(&self) -> bool {
        self.edges.is_empty()
    }
}

impl fmt::Display for PolygonalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", names.join("-"))
    }
}
