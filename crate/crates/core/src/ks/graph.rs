use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;

use super::vertices::KsVertex;
use super::MAX_VERTICES;

/// Vertices plus the exact orthogonality relation, kept both as an edge
/// list and as one adjacency bitmask per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityGraph {
    vertices: Vec<KsVertex>,
    adjacency: Vec<u128>,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRecord {
    pub a: usize,
    pub b: usize,
}

impl OrthogonalityGraph {
    pub fn build(vertices: Vec<KsVertex>, exec: Exec) -> Result<Self> {
        let count = vertices.len();
        if count > MAX_VERTICES {
            return Err(Error::TooManyVertices(count));
        }
        if let Some(v) = vertices.iter().find(|v| v.projector.n() != vertices[0].projector.n()) {
            return Err(Error::DimensionMismatch { left: vertices[0].projector.n(), right: v.projector.n() });
        }
        let rows = exec.map_range(count, |i| {
            (0..i)
                .filter(|&j| vertices[i].projector.orthogonal_unchecked(&vertices[j].projector))
                .fold(0u128, |acc, j| acc | 1 << j)
        });
        let mut adjacency = vec![0u128; count];
        let mut edges = Vec::new();
        for (i, &row) in rows.iter().enumerate() {
            for j in bits(row) {
                adjacency[i] |= 1 << j;
                adjacency[j] |= 1 << i;
                edges.push((j, i));
            }
        }
        edges.sort_unstable();
        Ok(Self { vertices, adjacency, edges })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[KsVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbours(&self, v: usize) -> u128 {
        self.adjacency[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn rank(&self, v: usize) -> usize {
        self.vertices[v].rank()
    }

    /// Induced subgraph on `keep` (in the given order), with ids renumbered.
    pub fn subgraph(&self, keep: &[usize]) -> Self {
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        self.relabel(vertices, keep)
    }

    /// The same graph with vertex `perm[k]` moved to position `k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        for &p in perm {
            if p >= self.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Construction("not a permutation".into()));
            }
        }
        if perm.len() != self.len() {
            return Err(Error::Construction("not a permutation".into()));
        }
        Ok(self.subgraph(perm))
    }

    fn relabel(&self, mut vertices: Vec<KsVertex>, old: &[usize]) -> Self {
        for (k, v) in vertices.iter_mut().enumerate() {
            v.id = k;
        }
        let mut adjacency = vec![0u128; old.len()];
        let mut edges = Vec::new();
        for (a, &oa) in old.iter().enumerate() {
            for (b, &ob) in old.iter().enumerate().take(a) {
                if self.adjacent(oa, ob) {
                    adjacency[a] |= 1 << b;
                    adjacency[b] |= 1 << a;
                    edges.push((b, a));
                }
            }
        }
        edges.sort_unstable();
        Self { vertices, adjacency, edges }
    }

    pub fn edge_records(&self) -> Vec<EdgeRecord> {
        self.edges.iter().map(|&(a, b)| EdgeRecord { a, b }).collect()
    }
}

/// Indices of set bits, ascending.
pub fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

pub fn mask_of(vs: &[usize]) -> u128 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ks::vertices::build_ks_set;

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1011_0000).collect::<Vec<_>>(), vec![4, 5, 7]);
        assert_eq!(bits(1u128 << 127).collect::<Vec<_>>(), vec![127]);
        assert_eq!(mask_of(&[0, 3]), 0b1001);
    }

    #[test]
    fn symmetric_irreflexive_and_mode_independent() {
        let vs = build_ks_set().unwrap();
        let g = OrthogonalityGraph::build(vs.clone(), Exec::Parallel).unwrap();
        let h = OrthogonalityGraph::build(vs, Exec::Sequential).unwrap();
        assert_eq!(g, h);
        for v in 0..g.len() {
            assert!(!g.adjacent(v, v));
            for w in bits(g.neighbours(v)) {
                assert!(g.adjacent(w, v));
            }
        }
        assert_eq!(g.edge_count(), 3084);
    }

    #[test]
    fn permutation_preserves_edge_count() {
        let g = OrthogonalityGraph::build(build_ks_set().unwrap(), Exec::default()).unwrap();
        let perm: Vec<usize> = (0..g.len()).rev().collect();
        let p = g.permuted(&perm).unwrap();
        assert_eq!(p.edge_count(), g.edge_count());
        assert_eq!(p.adjacent(103, 63), g.adjacent(0, 40));
        assert!(g.permuted(&[0, 0]).is_err());
    }
}
