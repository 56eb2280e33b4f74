//! Simplicial submaximal circuits and the elimination-order search.
//!
//! A (d-1)-set `e` is simplicial when its closed neighborhood is a clique.
//! A d-uniform clutter is chordal when repeatedly deleting simplicial
//! submaximal circuits can empty it; the deletion order is the certificate.
//!
//! Greedy deletion is a fast path only — nothing guarantees that a locally
//! valid simplicial choice cannot dead-end. The backtracking strategy
//! explores every simplicial choice with memoization on the canonical
//! circuit family and is the authoritative decision procedure.

use std::collections::HashMap;

use crate::clutter::Clutter;
use crate::error::Result;
use crate::set::VertexSet;

/// An ordered list of submaximal circuits witnessing chordality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminationCertificate {
    pub steps: Vec<VertexSet>,
}

/// Outcome of a chordality check. `NotChordal` carries a stuck state: a
/// nonempty clutter without simplicial submaximal circuits reached by the
/// search (under backtracking, every branch ends in such a state).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChordalityVerdict {
    Chordal(EliminationCertificate),
    NotChordal(Clutter),
}

impl ChordalityVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityVerdict::Chordal(_))
    }

    pub fn certificate(&self) -> Option<&EliminationCertificate> {
        match self {
            ChordalityVerdict::Chordal(cert) => Some(cert),
            ChordalityVerdict::NotChordal(_) => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Greedy,
    Backtracking,
}

/// Tuning for the backtracking search. `memo_cap` bounds the number of
/// memoized failed states; beyond it the oldest entries are evicted (the
/// search stays complete, only slower).
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub memo_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { memo_cap: 1 << 18 }
    }
}

/// True iff the closed neighborhood of `e` is a clique. For `e` outside
/// `SC(C)` the neighborhood is `e` itself, so the answer is vacuously true.
pub fn is_simplicial(c: &Clutter, e: VertexSet) -> Result<bool> {
    let n = c.closed_neighborhood(e)?;
    Ok(c.is_clique(n))
}

/// The simplicial members of `SC(C)`, in ascending mask order. Vacuously
/// simplicial sets (those in no circuit) are excluded: only actual submaximal
/// circuits are elimination candidates.
pub fn simplicial_set(c: &Clutter) -> Vec<VertexSet> {
    c.submaximal_circuits()
        .into_iter()
        .filter(|e| is_simplicial(c, *e).unwrap_or(false))
        .collect()
}

pub fn chordality_check(c: &Clutter, strategy: Strategy) -> Result<ChordalityVerdict> {
    chordality_check_with(c, strategy, SearchConfig::default())
}

pub fn chordality_check_with(
    c: &Clutter,
    strategy: Strategy,
    config: SearchConfig,
) -> Result<ChordalityVerdict> {
    if c.is_empty() {
        return Ok(ChordalityVerdict::Chordal(EliminationCertificate {
            steps: Vec::new(),
        }));
    }
    c.require_degree()?;
    match strategy {
        Strategy::Greedy => Ok(greedy(c)),
        Strategy::Backtracking => Ok(backtracking(c, config)),
    }
}

fn greedy(c: &Clutter) -> ChordalityVerdict {
    let mut state = c.clone();
    let mut steps = Vec::new();
    while !state.is_empty() {
        let candidates = simplicial_set(&state);
        let Some(&e) = candidates.first() else {
            return ChordalityVerdict::NotChordal(state);
        };
        steps.push(e);
        state = state.delete_submaximal(e).expect("candidate has size d-1");
    }
    ChordalityVerdict::Chordal(EliminationCertificate { steps })
}

/// Memo of failed canonical states with cheap stamped eviction.
struct FailedMemo {
    map: HashMap<Vec<u64>, u64>,
    stamp: u64,
    cap: usize,
}

impl FailedMemo {
    fn new(cap: usize) -> Self {
        FailedMemo {
            map: HashMap::new(),
            stamp: 0,
            cap: cap.max(16),
        }
    }

    fn key(state: &Clutter) -> Vec<u64> {
        state.circuits().iter().map(|c| c.mask()).collect()
    }

    fn contains(&mut self, key: &[u64]) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        match self.map.get_mut(key) {
            Some(s) => {
                *s = stamp;
                true
            }
            None => false,
        }
    }

    fn insert(&mut self, key: Vec<u64>) {
        if self.map.len() >= self.cap {
            // drop the least recently touched eighth of the table
            let mut stamps: Vec<u64> = self.map.values().copied().collect();
            let idx = stamps.len() / 8;
            let (_, cutoff, _) = stamps.select_nth_unstable(idx);
            let cutoff = *cutoff;
            self.map.retain(|_, s| *s > cutoff);
        }
        self.stamp += 1;
        self.map.insert(key, self.stamp);
    }
}

fn backtracking(c: &Clutter, config: SearchConfig) -> ChordalityVerdict {
    let mut memo = FailedMemo::new(config.memo_cap);
    let mut steps = Vec::new();
    let mut stuck: Option<Clutter> = None;
    if search(c, &mut memo, &mut steps, &mut stuck) {
        ChordalityVerdict::Chordal(EliminationCertificate { steps })
    } else {
        ChordalityVerdict::NotChordal(stuck.expect("failed search saw a stuck state"))
    }
}

fn search(
    state: &Clutter,
    memo: &mut FailedMemo,
    steps: &mut Vec<VertexSet>,
    stuck: &mut Option<Clutter>,
) -> bool {
    if state.is_empty() {
        return true;
    }
    let key = FailedMemo::key(state);
    if memo.contains(&key) {
        return false;
    }
    let candidates = simplicial_set(state);
    if candidates.is_empty() {
        if stuck.is_none() {
            *stuck = Some(state.clone());
        }
        memo.insert(key);
        return false;
    }
    for e in candidates {
        steps.push(e);
        let next = state.delete_submaximal(e).expect("candidate has size d-1");
        if search(&next, memo, steps, stuck) {
            return true;
        }
        steps.pop();
    }
    memo.insert(key);
    false
}

/// Replay `order` against `c`, checking that every step is simplicial when
/// applied. Returns the final state, or `None` if a step has the wrong size
/// or is not simplicial at its turn.
pub fn replay_simplicial_prefix(c: &Clutter, order: &[VertexSet]) -> Option<Clutter> {
    let mut state = c.clone();
    for &e in order {
        match is_simplicial(&state, e) {
            Ok(true) => {}
            _ => return None,
        }
        state = state.delete_submaximal(e).ok()?;
    }
    Some(state)
}

/// True iff `order` is a complete elimination certificate for `c`: each step
/// simplicial in the running deletion, empty clutter at the end.
pub fn verify_certificate(c: &Clutter, order: &[VertexSet]) -> bool {
    matches!(replay_simplicial_prefix(c, order), Some(state) if state.is_empty())
}

/// The (d-1)-subsets of `{1..n}` containing `v`, listed in the total order
/// that makes each one simplicial in the successive deletions from the
/// complete clutter: sets are compared by their sorted non-`v` members,
/// lexicographically.
pub fn complete_clutter_order(n: u32, d: u32, v: u32) -> Result<Vec<VertexSet>> {
    if v < 1 || v > n {
        return Err(crate::error::Error::VertexOutOfRange { vertex: v, n });
    }
    let others = VertexSet::full(n).without(v);
    let mut order: Vec<(Vec<u32>, VertexSet)> = others
        .subsets_of_size(d.saturating_sub(2))
        .into_iter()
        .map(|rest| (rest.to_vec(), rest.with(v)))
        .collect();
    order.sort();
    Ok(order.into_iter().map(|(_, e)| e).collect())
}
