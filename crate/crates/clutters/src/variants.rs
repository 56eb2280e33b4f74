//! The competing chordality notions decided over the minor lattice or by
//! reverse construction: W-chordal (every minor has a W-simplicial vertex),
//! VTV-chordal (every minor has a free vertex), E-chordal (built from
//! complete clutters by glueing and private-witness circuit additions), and
//! resolution-l vanishing for simplicial complexes.
//!
//! Minors that have lost all circuits, or whose only circuit is the empty
//! set, count as trivially chordal for the minor-lattice notions; without
//! that convention even complete clutters would fail the literal definition
//! once every vertex of a circuit has been contracted.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::complex::{reduced_homology_dims, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::set::VertexSet;

/// Three-valued recognizer outcome for budgeted searches.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Recognition {
    Yes,
    No,
    /// The search exhausted its budget before deciding.
    Unknown,
}

/// True when every pair of circuits through `v` dominates a third circuit
/// avoiding `v`; vacuous for vertices in at most one circuit.
pub fn is_w_simplicial(c: &Clutter, v: u32) -> Result<bool> {
    if !c.ground().contains(v) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: c.num_vertices(),
        });
    }
    let through: Vec<VertexSet> = c
        .circuits()
        .iter()
        .copied()
        .filter(|f| f.contains(v))
        .collect();
    for (idx, &f1) in through.iter().enumerate() {
        for &f2 in &through[idx + 1..] {
            let target = f1.union(f2).without(v);
            if !c.circuits().iter().any(|f3| f3.is_subset(target)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A vertex lying in exactly one circuit.
pub fn is_free_vertex(c: &Clutter, v: u32) -> Result<bool> {
    if !c.ground().contains(v) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: c.num_vertices(),
        });
    }
    Ok(c.vertex_degree(v) == 1)
}

fn minor_trivial(c: &Clutter) -> bool {
    c.is_empty() || c.circuits() == [VertexSet::EMPTY]
}

/// DFS over the minor lattice with state memoization: `pred` must hold for
/// the clutter itself and every deletion/contraction minor, down to the
/// trivial states.
fn every_minor_satisfies(c: &Clutter, pred: &dyn Fn(&Clutter) -> bool) -> bool {
    fn go(
        state: &Clutter,
        pred: &dyn Fn(&Clutter) -> bool,
        memo: &mut HashMap<(u64, Vec<u64>), bool>,
    ) -> bool {
        if minor_trivial(state) {
            return true;
        }
        let key = (
            state.ground().mask(),
            state
                .circuits()
                .iter()
                .map(|f| f.mask())
                .collect::<Vec<_>>(),
        );
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let ok = pred(state)
            && state.ground().iter().all(|v| {
                go(&state.vertex_deletion(v).unwrap(), pred, memo)
                    && go(&state.vertex_contraction(v).unwrap(), pred, memo)
            });
        memo.insert(key, ok);
        ok
    }
    go(c, pred, &mut HashMap::new())
}

/// W-chordality: every minor has a W-simplicial vertex.
pub fn is_w_chordal(c: &Clutter) -> bool {
    every_minor_satisfies(c, &|state| {
        state
            .ground()
            .iter()
            .any(|v| is_w_simplicial(state, v).unwrap_or(false))
    })
}

/// Free-vertex chordality: every minor has a vertex of circuit-degree one.
pub fn is_vtv_chordal(c: &Clutter) -> bool {
    every_minor_satisfies(c, &|state| {
        state.ground().iter().any(|v| state.vertex_degree(v) == 1)
    })
}

/// One step of the inductive construction of a generalized chordal clutter.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildStep {
    /// Begin with the complete d-uniform clutter on n vertices.
    Start { n: u32, d: u32 },
    /// Glue a complete clutter onto the clique `base`, appending `added`
    /// fresh vertices.
    Glue { base: VertexSet, added: u32 },
    /// Add one circuit that owns a fresh submaximal witness: `witness` must
    /// be a (d-1)-subset of `circuit` lying in no existing circuit.
    AddCircuit {
        circuit: VertexSet,
        witness: VertexSet,
    },
}

/// Run a build script, validating every precondition. The result is
/// E-chordal by construction.
pub fn generate_e_chordal(steps: &[BuildStep]) -> Result<Clutter> {
    let mut state = match steps.first() {
        Some(&BuildStep::Start { n, d }) => {
            if d == 0 || n == 0 {
                return Err(Error::InvalidStep("start needs positive n and d".into()));
            }
            Clutter::complete(n, d)
        }
        _ => {
            return Err(Error::InvalidStep(
                "script must begin with a start step".into(),
            ))
        }
    };
    let d = state.degree().expect("complete clutter is tagged");
    for step in &steps[1..] {
        state = match step {
            BuildStep::Start { .. } => {
                return Err(Error::InvalidStep("start may only come first".into()))
            }
            BuildStep::Glue { base, added } => {
                if !base.is_subset(state.ground()) {
                    return Err(Error::InvalidStep(format!(
                        "glue base {base:?} is not inside the ground set"
                    )));
                }
                if !state.is_clique(*base) {
                    return Err(Error::InvalidStep(format!(
                        "glue base {base:?} is not a clique"
                    )));
                }
                if *added == 0 {
                    return Err(Error::InvalidStep(
                        "glue must add at least one fresh vertex".into(),
                    ));
                }
                let top = state.ground().max().unwrap_or(0);
                if top + added > crate::set::MAX_VERTEX {
                    return Err(Error::InvalidStep("ground set would exceed 64".into()));
                }
                let fresh = VertexSet::from_members(top + 1..=top + added);
                let span = base.union(fresh);
                let mut circuits = state.circuits().to_vec();
                circuits.extend(span.subsets_of_size(d));
                Clutter::on_ground(state.ground().union(fresh), circuits, Some(d))?
            }
            BuildStep::AddCircuit { circuit, witness } => {
                if !circuit.is_subset(state.ground()) {
                    return Err(Error::InvalidStep(format!(
                        "circuit {circuit:?} is not inside the ground set"
                    )));
                }
                if circuit.len() != d {
                    return Err(Error::InvalidStep(format!(
                        "circuit {circuit:?} must have {d} vertices"
                    )));
                }
                if witness.len() != d - 1 || !witness.is_subset(*circuit) {
                    return Err(Error::InvalidStep(format!(
                        "witness {witness:?} must be a (d-1)-subset of the circuit"
                    )));
                }
                if state.is_submaximal_circuit(*witness) {
                    return Err(Error::InvalidStep(format!(
                        "witness {witness:?} is already a submaximal circuit"
                    )));
                }
                let mut circuits = state.circuits().to_vec();
                circuits.push(*circuit);
                Clutter::on_ground(state.ground(), circuits, Some(d))?
            }
        };
    }
    Ok(state)
}

/// Recognize E-chordality by undoing the construction rules: remove a
/// circuit with a private submaximal witness, or split off a glued complete
/// clutter (a vertex subset whose incident circuits are exactly the complete
/// clutter on their span). Complete clutters and circuit-free states are the
/// bases. The search is exact within the state budget.
pub fn is_e_chordal(c: &Clutter, budget: usize) -> Result<Recognition> {
    if c.is_empty() {
        return Ok(Recognition::Yes);
    }
    c.require_degree()?;
    let mut memo_failed: std::collections::HashSet<(u64, Vec<u64>)> =
        std::collections::HashSet::new();
    let mut remaining = budget;
    match undo_search(c, &mut memo_failed, &mut remaining) {
        UndoResult::Found => Ok(Recognition::Yes),
        UndoResult::Exhausted => Ok(Recognition::No),
        UndoResult::OutOfBudget => Ok(Recognition::Unknown),
    }
}

enum UndoResult {
    Found,
    Exhausted,
    OutOfBudget,
}

fn undo_search(
    state: &Clutter,
    failed: &mut std::collections::HashSet<(u64, Vec<u64>)>,
    budget: &mut usize,
) -> UndoResult {
    if state.is_empty() || state.is_complete() {
        return UndoResult::Found;
    }
    let key = (
        state.ground().mask(),
        state
            .circuits()
            .iter()
            .map(|f| f.mask())
            .collect::<Vec<_>>(),
    );
    if failed.contains(&key) {
        return UndoResult::Exhausted;
    }
    if *budget == 0 {
        return UndoResult::OutOfBudget;
    }
    *budget -= 1;
    let d = state.degree().expect("uniform by construction");
    let mut cut_by_budget = false;

    // undo a circuit addition: some (d-1)-subset of f lies in f alone
    for (idx, &f) in state.circuits().iter().enumerate() {
        let private = f.subsets_of_size(d - 1).into_iter().any(|e| {
            state
                .circuits()
                .iter()
                .enumerate()
                .all(|(j, g)| j == idx || !e.is_subset(*g))
        });
        if private {
            let mut circuits = state.circuits().to_vec();
            circuits.remove(idx);
            let next = Clutter::on_ground(state.ground(), circuits, Some(d))
                .expect("removal keeps the antichain");
            match undo_search(&next, failed, budget) {
                UndoResult::Found => return UndoResult::Found,
                UndoResult::Exhausted => {}
                UndoResult::OutOfBudget => cut_by_budget = true,
            }
        }
        if cut_by_budget {
            break;
        }
    }

    // undo a glue: strip a vertex subset t whose incident circuits are
    // exactly the complete clutter on span = base ∪ t
    if !cut_by_budget {
        for t in state.ground().subsets() {
            if t.is_empty() || t == state.ground() {
                continue;
            }
            let incident: Vec<VertexSet> = state
                .circuits()
                .iter()
                .copied()
                .filter(|f| !f.intersection(t).is_empty())
                .collect();
            let span = incident.iter().fold(t, |acc, f| acc.union(*f));
            let complete_on_span = span
                .subsets_of_size(d)
                .into_iter()
                .all(|s| state.contains_circuit(s));
            if !complete_on_span {
                continue;
            }
            let kept: Vec<VertexSet> = state
                .circuits()
                .iter()
                .copied()
                .filter(|f| f.intersection(t).is_empty())
                .collect();
            let next = Clutter::on_ground(state.ground().difference(t), kept, Some(d))
                .expect("kept circuits avoid t");
            match undo_search(&next, failed, budget) {
                UndoResult::Found => return UndoResult::Found,
                UndoResult::Exhausted => {}
                UndoResult::OutOfBudget => {
                    cut_by_budget = true;
                    break;
                }
            }
        }
    }

    if cut_by_budget {
        UndoResult::OutOfBudget
    } else {
        failed.insert(key);
        UndoResult::Exhausted
    }
}

/// True when the l-th reduced homology of every induced subcomplex vanishes
/// over the field.
pub fn is_resolution_l_chordal(k: &SimplicialComplex, l: i32, field: FieldSpec) -> bool {
    k.vertices()
        .subsets()
        .into_iter()
        .all(|w| reduced_homology_dims(&k.induced(w), field).dim(l) == 0)
}
