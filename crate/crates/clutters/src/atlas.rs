//! Small-scale classification of d-uniform clutters under every recognizer,
//! with the expected containments checked on each record:
//! free-vertex ⇒ W-chordal ⇒ chordal, E-chordal ⇒ chordal, and chordal ⇒
//! linear resolution over GF(2) and GF(3). A record breaking a containment
//! is a finding; in particular a clutter with both linear-resolution flags
//! but not chordal would be a genuine discovery and must be preserved.

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::betti_table_hochster;
use crate::clutter::{binomial, Clutter};
use crate::elimination::{chordality_check, Strategy};
use crate::error::Result;
use crate::linalg::FieldSpec;
use crate::set::VertexSet;
use crate::stability::random_clutter;
use crate::variants::{is_e_chordal, is_vtv_chordal, is_w_chordal, Recognition};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AtlasFlags {
    pub vtv: bool,
    pub w_chordal: bool,
    /// `None` when the reverse search ran out of budget.
    pub e_chordal: Option<bool>,
    pub chordal: bool,
    pub linres_gf2: bool,
    pub linres_gf3: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AtlasRecord {
    pub id: String,
    pub flags: AtlasFlags,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AtlasViolation {
    pub record: AtlasRecord,
    pub broken: String,
}

/// Canonical id: `n<n>d<d>:` followed by dot-joined circuits in canonical order.
pub fn clutter_id(c: &Clutter) -> String {
    let circuits = c
        .circuits()
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "n{}d{}:{}",
        c.num_vertices(),
        c.degree().map_or("?".into(), |d| d.to_string()),
        circuits
    )
}

/// Classify one clutter under all recognizers. The complete clutter has a
/// zero circuit ideal; its linear-resolution flags are true by convention so
/// the containment chain stays meaningful.
pub fn classify(c: &Clutter, e_budget: usize) -> Result<AtlasRecord> {
    let chordal = chordality_check(c, Strategy::Backtracking)?.is_chordal();
    let (linres_gf2, linres_gf3) = if c.is_complete() {
        (true, true)
    } else {
        let d = c.require_degree()?;
        (
            betti_table_hochster(c, FieldSpec::Prime(2))?.has_linear_resolution(d),
            betti_table_hochster(c, FieldSpec::Prime(3))?.has_linear_resolution(d),
        )
    };
    let e_chordal = match is_e_chordal(c, e_budget)? {
        Recognition::Yes => Some(true),
        Recognition::No => Some(false),
        Recognition::Unknown => None,
    };
    Ok(AtlasRecord {
        id: clutter_id(c),
        flags: AtlasFlags {
            vtv: is_vtv_chordal(c),
            w_chordal: is_w_chordal(c),
            e_chordal,
            chordal,
            linres_gf2,
            linres_gf3,
        },
    })
}

/// The containments the record must satisfy; names of the broken ones.
pub fn containment_violations(record: &AtlasRecord) -> Vec<String> {
    let f = &record.flags;
    let mut broken = Vec::new();
    if f.vtv && !f.w_chordal {
        broken.push("vtv => w_chordal".to_string());
    }
    if f.w_chordal && !f.chordal {
        broken.push("w_chordal => chordal".to_string());
    }
    if f.e_chordal == Some(true) && !f.chordal {
        broken.push("e_chordal => chordal".to_string());
    }
    if f.chordal && !(f.linres_gf2 && f.linres_gf3) {
        broken.push("chordal => linear resolution".to_string());
    }
    if f.linres_gf2 && f.linres_gf3 && !f.chordal {
        // not a theorem violation: this would answer the open
        // characterization question and must be surfaced
        broken.push("linear resolution over GF(2) and GF(3) without chordality".to_string());
    }
    broken
}

/// Classify the d-uniform clutters on `{1..n}`: exhaustively over all
/// 2^C(n,d) circuit subsets when that fits the budget, otherwise over
/// `budget` seeded samples.
pub fn atlas(
    n: u32,
    d: u32,
    budget: usize,
    seed: u64,
) -> Result<(Vec<AtlasRecord>, Vec<AtlasViolation>)> {
    let e_budget = 100_000;
    let slots = binomial(n, d);
    let clutters: Vec<Clutter> = if slots < 63 && (1u64 << slots) <= budget as u64 {
        let all = VertexSet::full(n).subsets_of_size(d);
        (0u64..(1u64 << slots))
            .map(|mask| {
                let circuits = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, f)| *f)
                    .collect();
                Clutter::on_ground(VertexSet::full(n), circuits, Some(d))
                    .expect("subsets of the complete clutter are valid")
            })
            .collect()
    } else {
        (0..budget as u64)
            .map(|i| random_clutter(n, d, 0.5, seed.wrapping_add(i)))
            .collect()
    };
    let records: Vec<AtlasRecord> = clutters
        .par_iter()
        .map(|c| classify(c, e_budget))
        .collect::<Result<Vec<_>>>()?;
    let violations = records
        .iter()
        .flat_map(|record| {
            containment_violations(record)
                .into_iter()
                .map(move |broken| AtlasViolation {
                    record: record.clone(),
                    broken,
                })
        })
        .collect();
    Ok((records, violations))
}
