use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::statevector::{resolves_identity, sums_to_identity, Projector};

use super::graph::{bits, mask_of, OrthogonalityGraph};
use super::vertices::Provenance;

/// Pairwise orthogonal vertices whose projectors sum to the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Context {
    pub vertices: Vec<usize>,
}

impl Context {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self { vertices }
    }

    pub fn mask(&self) -> u128 {
        mask_of(&self.vertices)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Check the identity resolution exactly, both from pairwise
    /// orthogonality plus ranks and by summing dense projector matrices.
    pub fn verify(&self, g: &OrthogonalityGraph) -> Result<bool> {
        let ps: Vec<Projector> = self.vertices.iter().map(|&v| g.vertices()[v].projector.clone()).collect();
        Ok(resolves_identity(&ps)? && sums_to_identity(&ps)?)
    }

    /// Counts of vertices by kind: (basis kets, codeword mutations, row subspaces).
    pub fn composition(&self, g: &OrthogonalityGraph) -> (usize, usize, usize) {
        self.vertices.iter().fold((0, 0, 0), |(a, b, c), &v| match g.vertices()[v].provenance {
            Provenance::ClassicalBasis { .. } => (a + 1, b, c),
            Provenance::CodewordMutation { .. } => (a, b + 1, c),
            Provenance::RowSubspace { .. } => (a, b, c + 1),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContextOrigin {
    /// Every context of the graph, found by a completed search.
    Exhaustive,
    /// A hand-picked list; not valid input for the colorability verdict.
    Declared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextSet {
    pub contexts: Vec<Context>,
    pub origin: ContextOrigin,
    pub nodes: u64,
}

impl ContextSet {
    pub fn declared(contexts: Vec<Context>) -> Self {
        let mut contexts = contexts;
        contexts.sort();
        Self { contexts, origin: ContextOrigin::Declared, nodes: 0 }
    }

    pub fn is_exhaustive(&self) -> bool {
        self.origin == ContextOrigin::Exhaustive
    }

    pub fn len(&self) -> usize {
        self.contexts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty()
    }

    /// Tally of contexts by (kets, mutations, rows) composition.
    pub fn composition_census(&self, g: &OrthogonalityGraph) -> BTreeMap<(usize, usize, usize), usize> {
        let mut out = BTreeMap::new();
        for c in &self.contexts {
            *out.entry(c.composition(g)).or_insert(0) += 1;
        }
        out
    }
}

struct Cliques<'a> {
    g: &'a OrthogonalityGraph,
    ranks: Vec<usize>,
    target: usize,
    budget: u64,
    nodes: u64,
    found: Vec<u128>,
}

impl Cliques<'_> {
    fn rank_of(&self, mask: u128) -> usize {
        bits(mask).map(|v| self.ranks[v]).sum()
    }

    /// Bron-Kerbosch with pivoting; a branch is dropped once the clique
    /// cannot reach full rank even by absorbing every candidate.
    fn expand(&mut self, r: u128, p: u128, x: u128) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let rr = self.rank_of(r);
        if rr == self.target {
            // full rank leaves no room for another orthogonal vertex
            if p == 0 && x == 0 {
                self.found.push(r);
            }
            return Ok(());
        }
        if rr + self.rank_of(p) < self.target {
            return Ok(());
        }
        let pivot = bits(p | x).max_by_key(|&u| (p & self.g.neighbours(u)).count_ones()).expect("p is nonempty");
        let mut p = p;
        let mut x = x;
        for v in bits(p & !self.g.neighbours(pivot)) {
            let nv = self.g.neighbours(v);
            self.expand(r | 1 << v, p & nv, x & nv)?;
            p &= !(1 << v);
            x |= 1 << v;
        }
        Ok(())
    }
}

/// All contexts of the graph. The search tree is split by first vertex and
/// the subtrees may run in parallel; the node count is summed over them
/// and compared against `budget`, so the outcome does not depend on `exec`.
pub fn enumerate_contexts(g: &OrthogonalityGraph, budget: u64, exec: Exec) -> Result<ContextSet> {
    let Some(first) = g.vertices().first() else {
        return Ok(ContextSet { contexts: Vec::new(), origin: ContextOrigin::Exhaustive, nodes: 0 });
    };
    let target = 1usize << first.projector.n();
    let ranks: Vec<usize> = (0..g.len()).map(|v| g.rank(v)).collect();
    let all: u128 = if g.len() == 128 { u128::MAX } else { (1u128 << g.len()) - 1 };

    let subtrees = exec.map_range(g.len(), |v| {
        let later = all & !((1u128 << v) | ((1u128 << v) - 1));
        let earlier = (1u128 << v) - 1;
        let nv = g.neighbours(v);
        let mut c = Cliques { g, ranks: ranks.clone(), target, budget, nodes: 0, found: Vec::new() };
        let ok = c.expand(1 << v, later & nv, earlier & nv).is_ok();
        (ok, c.nodes, c.found)
    });

    let mut nodes = 0u64;
    let mut masks = Vec::new();
    let mut complete = true;
    for (ok, n, found) in subtrees {
        complete &= ok;
        nodes = nodes.saturating_add(n);
        masks.extend(found);
    }
    if !complete || nodes > budget {
        return Err(Error::BudgetExhausted { what: "context enumeration".into(), budget });
    }

    let mut contexts: Vec<Context> = masks.into_iter().map(|m| Context::new(bits(m).collect())).collect();
    contexts.sort();
    contexts.dedup();
    let verified = exec.map_slice(&contexts, |c| c.verify(g));
    for (c, ok) in contexts.iter().zip(verified) {
        if !ok? {
            return Err(Error::Construction(format!("clique {:?} has full rank but does not resolve the identity", c.vertices)));
        }
    }
    Ok(ContextSet { contexts, origin: ContextOrigin::Exhaustive, nodes })
}

/// The seven contexts read off the construction: the basis kets, the
/// codeword mutations and, for each of the five rows, its eight subspaces.
pub fn canonical_contexts(g: &OrthogonalityGraph) -> Vec<Context> {
    let mut groups: BTreeMap<(u8, usize), Vec<usize>> = BTreeMap::new();
    for v in g.vertices() {
        let key = match v.provenance {
            Provenance::ClassicalBasis { .. } => (0, 0),
            Provenance::CodewordMutation { .. } => (1, 0),
            Provenance::RowSubspace { row, .. } => (2, row),
        };
        groups.entry(key).or_default().push(v.id);
    }
    let mut out: Vec<Context> = groups.into_values().map(Context::new).collect();
    out.sort();
    out
}
