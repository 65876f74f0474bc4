//! Two-valued assignments under KS1 (orthogonal vertices are not both
//! true) and KS2 (every context has a true vertex).

use serde::Serialize;

use crate::error::{Error, Result};

use super::contexts::ContextSet;
use super::graph::{bits, OrthogonalityGraph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub propagations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Unsat { stats: SearchStats },
    /// `true_vertices` lists the vertices coloured true; all others are false.
    Sat { stats: SearchStats, true_vertices: Vec<usize> },
}

impl Verdict {
    pub fn is_unsat(&self) -> bool {
        matches!(self, Verdict::Unsat { .. })
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            Verdict::Unsat { stats } | Verdict::Sat { stats, .. } => *stats,
        }
    }
}

/// Colorability with the complete context list; refuses anything else,
/// since a missing context could turn a contradiction into a spurious
/// colouring.
pub fn ks_colorability(g: &OrthogonalityGraph, contexts: &ContextSet) -> Result<Verdict> {
    if !contexts.is_exhaustive() {
        return Err(Error::IncompleteContexts);
    }
    solve(g, contexts)
}

/// Colorability of a declared sub-instance: the given contexts only.
pub fn declared_colorability(g: &OrthogonalityGraph, contexts: &ContextSet) -> Result<Verdict> {
    solve(g, contexts)
}

/// Independent check of a colouring against every edge and context.
pub fn is_valid_coloring(g: &OrthogonalityGraph, contexts: &ContextSet, true_vertices: &[usize]) -> bool {
    let t = super::graph::mask_of(true_vertices);
    g.edges().iter().all(|&(a, b)| t >> a & 1 == 0 || t >> b & 1 == 0)
        && contexts.contexts.iter().all(|c| (c.mask() & t).count_ones() == 1)
}

fn solve(g: &OrthogonalityGraph, contexts: &ContextSet) -> Result<Verdict> {
    let masks: Vec<u128> = contexts.contexts.iter().map(|c| c.mask()).collect();
    if let Some(&v) = contexts.contexts.iter().flat_map(|c| &c.vertices).find(|&&v| v >= g.len()) {
        return Err(Error::Construction(format!("context vertex {v} is not in the graph")));
    }
    let mut s = Solver { g, contexts: &masks, stats: SearchStats::default() };
    let verdict = match s.branch(0, 0) {
        Some(t) => {
            let true_vertices: Vec<usize> = bits(t).collect();
            if !is_valid_coloring(g, contexts, &true_vertices) {
                return Err(Error::Construction("solver produced an invalid colouring".into()));
            }
            Verdict::Sat { stats: s.stats, true_vertices }
        }
        None => Verdict::Unsat { stats: s.stats },
    };
    Ok(verdict)
}

struct Solver<'a> {
    g: &'a OrthogonalityGraph,
    contexts: &'a [u128],
    stats: SearchStats,
}

impl Solver<'_> {
    /// Set `v` true: its neighbours become false.
    fn assign_true(&self, t: &mut u128, f: &mut u128, v: usize) -> bool {
        let nv = self.g.neighbours(v);
        if *f >> v & 1 == 1 || *t & nv != 0 {
            return false;
        }
        *t |= 1 << v;
        *f |= nv;
        true
    }

    /// Unit propagation to a fixpoint. `None` on conflict.
    fn propagate(&mut self, mut t: u128, mut f: u128) -> Option<(u128, u128)> {
        loop {
            let mut changed = false;
            for &c in self.contexts {
                if c & t != 0 {
                    continue;
                }
                let open = c & !f;
                match open.count_ones() {
                    0 => return None,
                    1 => {
                        let v = open.trailing_zeros() as usize;
                        if !self.assign_true(&mut t, &mut f, v) {
                            return None;
                        }
                        self.stats.propagations += 1;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return Some((t, f));
            }
        }
    }

    /// Returns the true-set of a satisfying colouring, if one exists.
    fn branch(&mut self, t: u128, f: u128) -> Option<u128> {
        self.stats.nodes += 1;
        let (t, f) = self.propagate(t, f)?;
        // the open context with the fewest candidates
        let pick = self
            .contexts
            .iter()
            .filter(|&&c| c & t == 0)
            .min_by_key(|&&c| (c & !f).count_ones())
            .copied();
        let Some(c) = pick else {
            return Some(t);
        };
        let mut f = f;
        for v in bits(c & !f) {
            let (mut t2, mut f2) = (t, f);
            if self.assign_true(&mut t2, &mut f2, v) {
                if let Some(found) = self.branch(t2, f2) {
                    return Some(found);
                }
            }
            // later branches take v false
            f |= 1 << v;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::ks::contexts::{canonical_contexts, enumerate_contexts, Context};
    use crate::ks::vertices::build_ks_set;

    fn graph() -> OrthogonalityGraph {
        OrthogonalityGraph::build(build_ks_set().unwrap(), Exec::default()).unwrap()
    }

    #[test]
    fn full_instance_is_unsat() {
        let g = graph();
        let cs = enumerate_contexts(&g, 10_000_000, Exec::default()).unwrap();
        assert!(ks_colorability(&g, &cs).unwrap().is_unsat());
    }

    #[test]
    fn declared_sets_are_refused_by_the_main_entry() {
        let g = graph();
        let cs = ContextSet::declared(canonical_contexts(&g));
        assert!(matches!(ks_colorability(&g, &cs), Err(Error::IncompleteContexts)));
    }

    #[test]
    fn single_basis_context_is_colorable() {
        let g = graph().subgraph(&(0..32).collect::<Vec<_>>());
        let cs = ContextSet::declared(vec![Context::new((0..32).collect())]);
        match declared_colorability(&g, &cs).unwrap() {
            Verdict::Sat { true_vertices, .. } => {
                assert_eq!(true_vertices, vec![0]);
            }
            v => panic!("expected a colouring, got {v:?}"),
        }
    }

    #[test]
    fn canonical_seven_already_contradict() {
        let g = graph();
        let cs = ContextSet::declared(canonical_contexts(&g));
        assert_eq!(cs.len(), 7);
        assert!(declared_colorability(&g, &cs).unwrap().is_unsat());
    }

    #[test]
    fn verdict_survives_reordering() {
        let g = graph();
        let perm: Vec<usize> = (0..g.len()).map(|k| (k * 37 + 11) % g.len()).collect();
        let p = g.permuted(&perm).unwrap();
        let cs = enumerate_contexts(&p, 10_000_000, Exec::default()).unwrap();
        assert_eq!(cs.len(), 39);
        assert!(ks_colorability(&p, &cs).unwrap().is_unsat());
    }
}
