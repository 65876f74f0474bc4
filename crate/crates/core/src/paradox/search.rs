//! Automated search for parity contradictions inside a stabilizer group.
//!
//! Each non-identity element becomes a word over GF(2) with one coordinate
//! per (qubit, letter) symbol. A subset has all-even multiplicities exactly
//! when its words XOR to zero. Subsets are enumerated in lexicographic order
//! of the elements' Pauli text, pruned by a breadth-first distance table
//! (the least number of words XORing to a given residual), and every
//! even-parity candidate has its sign read off the exact operator product.

use std::sync::atomic::{AtomicU8, AtomicUsize, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pauli::{PauliString, Sign};
use crate::stabilizer::{Codeword, StabilizerElement, StabilizerGroup};
use crate::statevector::StateVector;

use super::parity::{check_parity_contradiction, ParityInstance, ParityReport};

/// Largest supported word length; the distance table has `2^bits` bytes.
pub const MAX_WORD_BITS: u32 = 24;

const UNREACHED: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub min_subset: usize,
    pub max_subset: usize,
    /// Keep at most this many contradictions of each size.
    pub per_size_limit: Option<usize>,
    /// Node cap for each (size, first element) subtree.
    pub node_budget: u64,
    pub exec: Exec,
}

impl SearchOptions {
    pub fn up_to(max_subset: usize) -> Self {
        Self { min_subset: 1, max_subset, per_size_limit: None, node_budget: 50_000_000, exec: Exec::default() }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.per_size_limit = Some(limit);
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub size: usize,
    pub even_candidates: u64,
    pub contradictions: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub codeword: Codeword,
    pub elements: usize,
    pub symbol_rank: usize,
    pub nullspace_dim: usize,
    /// Smallest subset that is even in every symbol, regardless of sign.
    pub min_even_size: Option<usize>,
    pub min_size: Option<usize>,
    pub sizes: Vec<SizeSummary>,
    pub nodes: u64,
    pub instances: Vec<ParityReport>,
}

impl SearchOutcome {
    pub fn truncated(&self) -> bool {
        self.sizes.iter().any(|s| s.truncated)
    }
}

/// Words, sorted elements and the distance table for one group.
pub struct SymbolTable {
    elements: Vec<StabilizerElement>,
    words: Vec<u32>,
    dist: Vec<u8>,
}

impl SymbolTable {
    pub fn new(group: &StabilizerGroup, exec: Exec) -> Result<Self> {
        let bits = 3 * group.n() as u32;
        if bits > MAX_WORD_BITS {
            return Err(Error::SearchSpaceTooLarge(bits));
        }
        let mut elements: Vec<StabilizerElement> = group.nontrivial().copied().collect();
        elements.sort_by_key(|e| e.op);
        let words: Vec<u32> = elements.iter().map(|e| symbol_word(&e.op)).collect();
        let dist = distance_table(&words, bits, exec);
        Ok(Self { elements, words, dist })
    }

    pub fn elements(&self) -> &[StabilizerElement] {
        &self.elements
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    /// Least number of element words XORing to `w`, if any.
    pub fn distance(&self, w: u32) -> Option<u8> {
        self.dist.get(w as usize).copied().filter(|&d| d != UNREACHED)
    }

    pub fn rank(&self) -> usize {
        gf2_rank(&self.words)
    }
}

/// Bit `3·site + k` is set when the letter at `site` is the k-th of X, Y, Z.
pub fn symbol_word(op: &PauliString) -> u32 {
    op.support()
        .into_iter()
        .map(|s| 1u32 << (3 * s + op.letter(s).nontrivial_index().expect("support letter")))
        .fold(0, |a, b| a | b)
}

fn distance_table(words: &[u32], bits: u32, exec: Exec) -> Vec<u8> {
    let table: Vec<AtomicU8> = (0..1usize << bits).map(|_| AtomicU8::new(UNREACHED)).collect();
    table[0].store(0, Ordering::Relaxed);
    let mut frontier = vec![0u32];
    let mut level = 0u8;
    while !frontier.is_empty() {
        level += 1;
        let next = exec.map_slice(&frontier, |&w| {
            let mut found = Vec::new();
            for &e in words {
                let t = w ^ e;
                if table[t as usize]
                    .compare_exchange(UNREACHED, level, Ordering::Relaxed, Ordering::Relaxed)
                    .is_ok()
                {
                    found.push(t);
                }
            }
            found
        });
        frontier = next.into_iter().flatten().collect();
    }
    table.into_iter().map(AtomicU8::into_inner).collect()
}

pub fn gf2_rank(words: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &w in words {
        let reduced = basis.iter().fold(w, |acc, &b| acc.min(acc ^ b));
        if reduced != 0 {
            basis.push(reduced);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

struct Walk<'a> {
    table: &'a SymbolTable,
    /// This subtree's first element and the shared cutoff: once some
    /// earlier subtree fills the limit on its own, later ones are moot.
    first: usize,
    cutoff: &'a AtomicUsize,
    limit: usize,
    budget: u64,
    nodes: u64,
    even: u64,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Walk<'_> {
    /// Returns `Ok(true)` once `limit` contradictions are collected.
    fn descend(&mut self, start: usize, need: usize, residual: u32) -> Result<bool> {
        self.nodes += 1;
        if self.first > self.cutoff.load(Ordering::Relaxed) {
            return Ok(true);
        }
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { what: "parity contradiction search".into(), budget: self.budget });
        }
        if need == 0 {
            if residual == 0 {
                self.even += 1;
                if self.bare_product_is_minus() {
                    self.found.push(self.chosen.clone());
                    return Ok(self.found.len() >= self.limit);
                }
            }
            return Ok(false);
        }
        match self.table.distance(residual) {
            Some(d) if d as usize <= need => {}
            _ => return Ok(false),
        }
        let m = self.table.words.len();
        if m < start + need {
            return Ok(false);
        }
        for j in start..=m - need {
            self.chosen.push(j);
            let stop = self.descend(j + 1, need - 1, residual ^ self.table.words[j])?;
            self.chosen.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// All symbols even, so the ordered product is `±1`; `-1` means the
    /// eigenvalues multiply to `-1`.
    fn bare_product_is_minus(&self) -> bool {
        let els = &self.table.elements;
        let first = els[self.chosen[0]].op;
        let p = self.chosen[1..].iter().fold(first, |acc, &j| acc.mul_unchecked(&els[j].op));
        p.is_scalar() && p.phase_exp() == 2
    }
}

struct Subtree {
    found: Vec<Vec<usize>>,
    nodes: u64,
    even: u64,
}

fn search_size(table: &SymbolTable, size: usize, opts: &SearchOptions) -> Result<(Vec<Vec<usize>>, u64, u64, bool)> {
    let m = table.words.len();
    let limit = opts.per_size_limit.unwrap_or(usize::MAX);
    if size == 0 || size > m || limit == 0 {
        return Ok((Vec::new(), 0, 0, false));
    }
    let firsts = m - size + 1;
    let cutoff = AtomicUsize::new(usize::MAX);
    let run = |i: usize| -> Result<Subtree> {
        let mut walk = Walk {
            table,
            first: i,
            cutoff: &cutoff,
            limit,
            budget: opts.node_budget,
            nodes: 0,
            even: 0,
            chosen: vec![i],
            found: Vec::new(),
        };
        walk.descend(i + 1, size - 1, table.words[i])?;
        if walk.found.len() >= limit {
            cutoff.fetch_min(i, Ordering::Relaxed);
        }
        Ok(Subtree { found: walk.found, nodes: walk.nodes, even: walk.even })
    };

    // Subtrees are merged in first-element order and the merge stops once
    // the limit is met, so later subtrees (and their errors or early exits)
    // never reach the result.
    let mut found = Vec::new();
    let (mut nodes, mut even) = (0, 0);
    let mut absorb = |sub: Result<Subtree>| -> Result<bool> {
        let sub = sub?;
        nodes += sub.nodes;
        even += sub.even;
        found.extend(sub.found);
        Ok(found.len() >= limit)
    };
    if opts.exec.is_parallel() {
        for sub in opts.exec.map_range(firsts, run) {
            if absorb(sub)? {
                break;
            }
        }
    } else {
        for i in 0..firsts {
            if absorb(run(i))? {
                break;
            }
        }
    }
    let truncated = found.len() >= limit && opts.per_size_limit.is_some();
    found.truncate(limit);
    Ok((found, nodes, even, truncated))
}

/// Subsets of the group's non-identity elements, of size in
/// `min_subset..=max_subset`, whose symbols all occur an even number of
/// times and whose eigenvalues on `state` multiply to `-1`. Results are
/// ordered by size, then lexicographically by Pauli text, and each one has
/// passed [`check_parity_contradiction`].
pub fn search_parity_contradictions(
    group: &StabilizerGroup,
    state: &StateVector,
    codeword: Codeword,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    let table = SymbolTable::new(group, opts.exec)?;
    search_with_table(&table, group, state, codeword, opts)
}

pub fn search_with_table(
    table: &SymbolTable,
    group: &StabilizerGroup,
    state: &StateVector,
    codeword: Codeword,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    if state.n() != group.n() {
        return Err(Error::DimensionMismatch { left: group.n(), right: state.n() });
    }
    let mut sizes = Vec::new();
    let mut instances = Vec::new();
    let mut nodes = 0;
    let mut min_even_size = None;
    for size in opts.min_subset.max(1)..=opts.max_subset {
        let (found, n, even, truncated) = search_size(table, size, opts)?;
        nodes += n;
        if even > 0 && min_even_size.is_none() {
            min_even_size = Some(size);
        }
        sizes.push(SizeSummary { size, even_candidates: even, contradictions: found.len(), truncated });
        let checked = opts.exec.map_slice(&found, |idx| {
            let els: Vec<StabilizerElement> = idx.iter().map(|&j| table.elements[j]).collect();
            check_parity_contradiction(&ParityInstance::from_elements(state.clone(), &els, codeword))
        });
        for report in checked {
            let report = report?;
            if !report.contradiction || !report.product_route_agrees {
                return Err(Error::Construction(format!(
                    "search candidate failed verification: {:?}",
                    report.operators.iter().map(|o| o.op.to_string()).collect::<Vec<_>>()
                )));
            }
            instances.push(report);
        }
    }
    let rank = table.rank();
    Ok(SearchOutcome {
        codeword,
        elements: table.words.len(),
        symbol_rank: rank,
        nullspace_dim: table.words.len() - rank,
        min_even_size,
        min_size: instances.first().map(|r| r.operators.len()),
        sizes,
        nodes,
        instances,
    })
}

/// The lexicographically first contradiction with exactly `size` elements.
pub fn find_contradiction_of_size(
    group: &StabilizerGroup,
    state: &StateVector,
    codeword: Codeword,
    size: usize,
    node_budget: u64,
    exec: Exec,
) -> Result<Option<ParityReport>> {
    let opts = SearchOptions { min_subset: size, max_subset: size, per_size_limit: Some(1), node_budget, exec };
    Ok(search_parity_contradictions(group, state, codeword, &opts)?.instances.into_iter().next())
}

/// Eigenvalue product read straight from the recorded signs, for cross
/// checks against the product route.
pub fn recorded_sign_product(elements: &[StabilizerElement], codeword: Codeword) -> Sign {
    Sign::product(elements.iter().map(|e| e.sign(codeword)))
}
