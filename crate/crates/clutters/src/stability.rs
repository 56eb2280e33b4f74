//! Empirical verification that deleting circuits through a simplicial
//! element preserves every non-linear strand of the circuit ideal's Betti
//! table, with the derived regularity/index equalities and the projective
//! dimension inequality. A violation here would contradict a theorem, so the
//! harness treats it as a hard failure and serializes the whole instance.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::betti::{betti_table_auto, betti_table_hochster, BettiTable};
use crate::clutter::Clutter;
use crate::elimination::is_simplicial;
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::set::VertexSet;

/// Per-claim verdicts for one field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityClaims {
    /// `β_{i,i+j}` agree for every i and every j > d.
    pub nonlinear_strands_equal: bool,
    pub reg_equal: bool,
    pub index_equal: bool,
    /// `projdim` of the original is at most that of the reduction.
    pub projdim_le: bool,
}

impl StabilityClaims {
    pub fn all_hold(&self) -> bool {
        self.nonlinear_strands_equal && self.reg_equal && self.index_equal && self.projdim_le
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FieldStability {
    pub field: u32,
    pub original: BettiTable,
    pub reduced: BettiTable,
    pub claims: StabilityClaims,
}

/// Full report for one `(C, e, A)` instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityReport {
    pub n: u32,
    pub d: u32,
    pub circuits: Vec<VertexSet>,
    pub element: VertexSet,
    pub removed: Vec<VertexSet>,
    pub per_field: Vec<FieldStability>,
}

impl StabilityReport {
    pub fn all_hold(&self) -> bool {
        self.per_field.iter().all(|f| f.claims.all_hold())
    }
}

/// `C \ A` for `A` a set of circuits through the simplicial element `e`.
/// Unlike submaximal deletion, `A` may be any subset of the star of `e`.
pub fn delete_circuits_through(c: &Clutter, e: VertexSet, a: &[VertexSet]) -> Result<Clutter> {
    if !is_simplicial(c, e)? {
        return Err(Error::NotSimplicial {
            element: format!("{e:?}"),
        });
    }
    for f in a {
        if !c.contains_circuit(*f) || !e.is_subset(*f) || *f == e {
            return Err(Error::CircuitNotThroughE {
                circuit: format!("{f:?}"),
                element: format!("{e:?}"),
            });
        }
    }
    let remaining = c
        .circuits()
        .iter()
        .copied()
        .filter(|f| !a.contains(f))
        .collect();
    Clutter::on_ground(c.ground(), remaining, c.degree())
}

/// Compute both Betti tables per field and check all four claims.
pub fn check_stability(
    c: &Clutter,
    e: VertexSet,
    a: &[VertexSet],
    fields: &[FieldSpec],
) -> Result<StabilityReport> {
    let d = c.require_degree()?;
    if c.is_complete() {
        return Err(Error::ZeroIdeal);
    }
    let reduced = delete_circuits_through(c, e, a)?;
    let mut per_field = Vec::with_capacity(fields.len());
    for &field in fields {
        let original = betti_table_hochster(c, field)?;
        let after = betti_table_hochster(&reduced, field)?;
        let claims = StabilityClaims {
            nonlinear_strands_equal: original.nonlinear_strands_equal(&after, d),
            reg_equal: original.regularity() == after.regularity(),
            index_equal: original.index() == after.index(),
            projdim_le: original.projdim() <= after.projdim(),
        };
        per_field.push(FieldStability {
            field: field.characteristic(),
            original,
            reduced: after,
            claims,
        });
    }
    Ok(StabilityReport {
        n: c.num_vertices(),
        d,
        circuits: c.circuits().to_vec(),
        element: e,
        removed: a.to_vec(),
        per_field,
    })
}

/// Linear-strand monotonicity for nested equigenerated ideals: entrywise
/// `β_{i,i+d}(J) ≤ β_{i,i+d}(I)` when `G(J) ⊆ G(I)`.
pub fn betti_monotonicity_check(
    sub: &MonomialIdeal,
    sup: &MonomialIdeal,
    field: FieldSpec,
) -> Result<bool> {
    let d_sub = sub
        .equigenerated_degree()
        .ok_or_else(|| Error::DegreeMismatch("smaller ideal is not equigenerated".into()))?;
    let d_sup = sup
        .equigenerated_degree()
        .ok_or_else(|| Error::DegreeMismatch("larger ideal is not equigenerated".into()))?;
    if d_sub != d_sup {
        return Err(Error::DegreeMismatch(format!(
            "degrees differ: {d_sub} vs {d_sup}"
        )));
    }
    if !sub.gens().iter().all(|g| sup.gens().contains(g)) {
        return Err(Error::NotSubideal);
    }
    let t_sub = betti_table_auto(sub, field)?;
    let t_sup = betti_table_auto(sup, field)?;
    let max_i = t_sub.projdim().max(t_sup.projdim());
    Ok((0..=max_i).all(|i| t_sub.entry(i, d_sub) <= t_sup.entry(i, d_sub)))
}

/// splitmix64, the key-expansion step of the pinned corpus generator.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The pinned corpus RNG: ChaCha8 keyed by four splitmix64 outputs of the
/// seed (little-endian), zero stream position.
pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    let mut state = seed;
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Seeded random d-uniform clutter: walk the d-subsets of `{1..n}` in
/// ascending mask order, draw one u32 per subset from [`corpus_rng`], and
/// keep the subset when the draw falls below `density * 2^32`.
pub fn random_clutter(n: u32, d: u32, density: f64, seed: u64) -> Clutter {
    let mut rng = corpus_rng(seed);
    let threshold = (density.clamp(0.0, 1.0) * 4_294_967_296.0) as u64;
    let circuits = VertexSet::full(n)
        .subsets_of_size(d)
        .into_iter()
        .filter(|_| (rng.next_u32() as u64) < threshold)
        .collect();
    Clutter::on_ground(VertexSet::full(n), circuits, Some(d)).expect("subsets are valid circuits")
}

/// Derive a stability instance from a seed: a random clutter with at least
/// one simplicial element, a chosen element of `Simp(C) ∩ SC(C)`, and a
/// subset of its star (forced to the full star every fourth attempt so the
/// projdim identity is exercised). Returns `(clutter, element, removed,
/// full_star)`.
pub fn fuzz_instance(
    n: u32,
    d: u32,
    density: f64,
    seed: u64,
) -> (Clutter, VertexSet, Vec<VertexSet>, bool) {
    let mut attempt = seed;
    loop {
        let c = random_clutter(n, d, density, attempt);
        if !c.is_empty() && !c.is_complete() {
            let simp = crate::elimination::simplicial_set(&c);
            if !simp.is_empty() {
                let mut rng = corpus_rng(attempt.wrapping_add(0x5bd1_e995));
                let e = simp[(rng.next_u32() as usize) % simp.len()];
                let star: Vec<VertexSet> = c
                    .circuits()
                    .iter()
                    .copied()
                    .filter(|f| e.is_subset(*f))
                    .collect();
                let full_star = attempt.is_multiple_of(4);
                let removed: Vec<VertexSet> = if full_star {
                    star
                } else {
                    star.into_iter()
                        .filter(|_| rng.next_u32().is_multiple_of(2))
                        .collect()
                };
                return (c, e, removed, full_star);
            }
        }
        attempt = attempt.wrapping_add(0x9e37_79b9);
    }
}
