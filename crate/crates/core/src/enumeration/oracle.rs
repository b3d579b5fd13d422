//! Brute-force enumeration of Hamiltonian sets for differential testing.
//!
//! Builds every polygonal path vertex by vertex from the neighbour relation,
//! then searches exact covers of the vertex set by pairwise disjoint paths.
//! It never looks at edge masks, so it is independent of the encoding used
//! by [`super::enumerate_hamiltonian_sets`].

use std::collections::BTreeSet;

use crate::dow::Letter;
use crate::error::{Error, Result};
use crate::graph::{AssemblyGraph, PolygonalPath};

use super::HamiltonianSet;

pub const ORACLE_LIMIT: usize = 8;

pub fn oracle_enumerate(g: &AssemblyGraph) -> Result<Vec<HamiltonianSet>> {
    if g.n() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: ORACLE_LIMIT,
        });
    }
    let mut paths = BTreeSet::new();
    for &v in g.vertices() {
        extend(g, &mut vec![v], &mut Vec::new(), &mut paths);
    }
    let paths: Vec<PolygonalPath> = paths.into_iter().collect();
    for p in &paths {
        assert!(
            g.validate_polygonal(p),
            "oracle built a non-polygonal path {p}"
        );
    }

    let mut out = Vec::new();
    let mut covered = vec![false; g.n()];
    cover(g, &paths, &mut covered, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

fn extend(
    g: &AssemblyGraph,
    vertices: &mut Vec<Letter>,
    edges: &mut Vec<usize>,
    found: &mut BTreeSet<PolygonalPath>,
) {
    found.insert(PolygonalPath::new(vertices.clone(), edges.clone()).expect("path shape"));
    let here = *vertices.last().expect("non-empty path");
    for e in g.edges() {
        let next = if e.v1 == here {
            e.v2
        } else if e.v2 == here {
            e.v1
        } else {
            continue;
        };
        if vertices.contains(&next) {
            continue;
        }
        if let Some(&last) = edges.last() {
            if !g
                .are_neighbors(here, last, e.index)
                .expect("incident edges")
            {
                continue;
            }
        }
        vertices.push(next);
        edges.push(e.index);
        extend(g, vertices, edges, found);
        vertices.pop();
        edges.pop();
    }
}

fn cover(
    g: &AssemblyGraph,
    paths: &[PolygonalPath],
    covered: &mut [bool],
    chosen: &mut Vec<PolygonalPath>,
    out: &mut Vec<HamiltonianSet>,
) {
    let Some(free) = covered.iter().position(|&c| !c) else {
        out.push(HamiltonianSet::new(chosen.clone()));
        return;
    };
    let target = g.vertices()[free];
    let index = |v: &Letter| g.vertex_index(*v).expect("graph vertex");
    for p in paths {
        if !p.vertices().contains(&target) || p.vertices().iter().any(|v| covered[index(v)]) {
            continue;
        }
        for v in p.vertices() {
            covered[index(v)] = true;
        }
        chosen.push(p.clone());
        cover(g, paths, covered, chosen, out);
        chosen.pop();
        for v in p.vertices() {
            covered[index(v)] = false;
        }
    }
}
