//! Graded Betti tables of monomial ideals, computed two independent ways.
//!
//! The Hochster path sums reduced homology of induced subcomplexes of the
//! Stanley-Reisner complex over all vertex subsets; it applies to square-free
//! ideals (in particular circuit ideals, via the clique complex). The Taylor
//! path tensors the Taylor resolution with the field and reads each graded
//! strand's homology; it applies to any monomial ideal with few enough
//! generators. On square-free inputs the two must agree entry for entry,
//! which is the standing cross-check of the whole engine.
//!
//! Tables are for the ideal itself, not the quotient ring. A worked example:
//! the ideal `(x1x2, x1x3, x2x3)` in three variables (the circuit ideal of
//! the empty graph on three vertices) has `β_{0,2} = 3` and `β_{1,3} = 2`,
//! stored here as entries `(0, 2)` and `(1, 2)`: the second index is the
//! internal shift `j`, so an entry `(i, j)` reports `β_{i,i+j}`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::clutter::Clutter;
use crate::complex::homology_from_groups;
use crate::error::{Error, Result};
use crate::linalg::{rank, FieldSpec};
use crate::monomial::MonomialIdeal;
use crate::set::VertexSet;

/// Default generator bound for the Taylor engine (2^r subsets are walked).
pub const TAYLOR_DEFAULT_BOUND: usize = 12;

/// Green-Lazarsfeld index: number of leading linear steps plus one, with
/// infinity exactly for linear resolutions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LinearIndex {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for LinearIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinearIndex::Finite(r) => write!(f, "{r}"),
            LinearIndex::Infinite => write!(f, "infinity"),
        }
    }
}

/// A finitely supported table of graded Betti numbers `β_{i,i+j}`, keyed by
/// homological degree `i` and internal shift `j`. Zero entries are absent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    field: FieldSpec,
    indeg: u32,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    fn new(field: FieldSpec, indeg: u32) -> BettiTable {
        BettiTable {
            field,
            indeg,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: u32, shift: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, shift)).or_insert(0) += count;
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn indeg(&self) -> u32 {
        self.indeg
    }

    /// `β_{i,i+j}`.
    pub fn entry(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), β)`, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Castelnuovo-Mumford regularity: the largest supported shift.
    pub fn regularity(&self) -> u32 {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projdim(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `sup{r : β_{i,i+j} = 0 for all i ≤ r and j > indeg} + 1`, which is the
    /// least homological degree carrying a non-linear entry, or infinity.
    pub fn index(&self) -> LinearIndex {
        self.entries
            .keys()
            .filter(|&&(_, j)| j > self.indeg)
            .map(|&(i, _)| i)
            .min()
            .map_or(LinearIndex::Infinite, LinearIndex::Finite)
    }

    /// True when the table is supported entirely in shift `d` with `indeg = d`.
    pub fn has_linear_resolution(&self, d: u32) -> bool {
        self.indeg == d && !self.is_empty() && self.entries.keys().all(|&(_, j)| j == d)
    }

    /// Sum of the entries in shift `j`.
    pub fn strand(&self, j: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((_, s), _)| *s == j)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Entrywise equality of the strands with shift strictly above `d`.
    pub fn nonlinear_strands_equal(&self, other: &BettiTable, d: u32) -> bool {
        let keys: HashSet<(u32, u32)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .filter(|&(_, j)| j > d)
            .collect();
        keys.into_iter()
            .all(|(i, j)| self.entry(i, j) == other.entry(i, j))
    }

    /// Bit-exact text rendering: a header comment then one `i<TAB>j<TAB>beta`
    /// row per nonzero entry in `(i, j)` order.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# field={} indeg={}\n",
            self.field.characteristic(),
            self.indeg
        );
        for ((i, j), beta) in &self.entries {
            out.push_str(&format!("{i}\t{j}\t{beta}\n"));
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(u32, u32, u64)> =
            self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        let mut s = serializer.serialize_struct("BettiTable", 3)?;
        s.serialize_field("field", &self.field.characteristic())?;
        s.serialize_field("indeg", &self.indeg)?;
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

/// Betti table of the circuit ideal of `c` by Hochster's summation over the
/// clique complex. Errors with `ZeroIdeal` when `c` is complete.
pub fn betti_table_hochster(c: &Clutter, field: FieldSpec) -> Result<BettiTable> {
    let d = c.require_degree()?;
    if c.is_complete() {
        return Err(Error::ZeroIdeal);
    }
    let labels = c.ground().to_vec();
    let k = labels.len();
    let position: HashMap<u32, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    let circuit_masks: HashSet<u64> = c
        .circuits()
        .iter()
        .map(|f| compress(*f, &position).mask())
        .collect();
    // cliq[mask]: true when the corresponding vertex set is a clique of c.
    // Sets below size d are cliques; above it, a set is a clique exactly when
    // all its one-smaller subsets are, so ascending masks settle everything.
    let mut cliq = vec![false; 1usize << k];
    for mask in 0..(1u64 << k) {
        let size = mask.count_ones();
        cliq[mask as usize] = if size < d {
            true
        } else if size == d {
            circuit_masks.contains(&mask)
        } else {
            let mut rest = mask;
            let mut all = true;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !cliq[(mask ^ bit) as usize] {
                    all = false;
                    break;
                }
                rest ^= bit;
            }
            all
        };
    }
    Ok(hochster_sum(k, &cliq, field, d))
}

/// Betti table of an arbitrary square-free monomial ideal by Hochster's
/// summation over its Stanley-Reisner complex.
pub fn betti_table_hochster_ideal(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::DegreeMismatch(
            "Hochster's formula needs a square-free ideal".into(),
        ));
    }
    let ground: VertexSet = ideal
        .gens()
        .iter()
        .fold(VertexSet::EMPTY, |acc, g| acc.union(g.support()));
    let labels = ground.to_vec();
    let k = labels.len();
    let position: HashMap<u32, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    let supports: HashSet<u64> = ideal
        .gens()
        .iter()
        .map(|g| compress(g.support(), &position).mask())
        .collect();
    // divisible[mask]: some generator support is contained in the set
    let mut divisible = vec![false; 1usize << k];
    for mask in 0..(1u64 << k) {
        divisible[mask as usize] = supports.contains(&mask) || {
            let mut rest = mask;
            let mut any = false;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if divisible[(mask ^ bit) as usize] {
                    any = true;
                    break;
                }
                rest ^= bit;
            }
            any
        };
    }
    let is_face: Vec<bool> = divisible.iter().map(|&d| !d).collect();
    let indeg = ideal.indeg().expect("nonzero ideal");
    Ok(hochster_sum(k, &is_face, field, indeg))
}

fn compress(set: VertexSet, position: &HashMap<u32, u32>) -> VertexSet {
    VertexSet::from_members(set.iter().map(|v| position[&v]))
}

/// Sum `dim H̃_{|W|-i-2}` of induced subcomplexes over all `W`, in parallel.
fn hochster_sum(k: usize, is_face: &[bool], field: FieldSpec, indeg: u32) -> BettiTable {
    let merged = (0u64..(1u64 << k))
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(u32, u32), u64>, w| {
            let size = w.count_ones();
            // faces of the induced subcomplex, grouped by cardinality
            let mut groups: Vec<Vec<VertexSet>> = vec![Vec::new(); size as usize + 1];
            let mut sub = 0u64;
            loop {
                if is_face[sub as usize] {
                    groups[sub.count_ones() as usize].push(VertexSet::from_mask(sub));
                }
                sub = sub.wrapping_sub(w) & w;
                if sub == 0 {
                    break;
                }
            }
            while groups.last().is_some_and(|g| g.is_empty()) {
                groups.pop();
            }
            if !groups.is_empty() {
                let dims = homology_from_groups(&groups, field);
                for i in 0..size {
                    let l = size as i32 - i as i32 - 2;
                    let d = dims.dim(l);
                    if d > 0 {
                        *acc.entry((i, size - i)).or_insert(0) += d as u64;
                    }
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        });
    let mut table = BettiTable::new(field, indeg);
    table.entries = merged;
    table
}

/// Betti table from the Taylor resolution, with the default generator bound.
pub fn betti_table_taylor(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_taylor_bounded(ideal, field, TAYLOR_DEFAULT_BOUND)
}

/// Betti table of any monomial ideal: tensor the Taylor complex on the
/// minimal generators with the field and take ranks strand by strand. The
/// entry `β_{i,i+j}` is `dim - rank_out - rank_in` of the degree-`i+j` piece
/// in homological position `i`.
pub fn betti_table_taylor_bounded(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    bound: usize,
) -> Result<BettiTable> {
    let r = ideal.num_gens();
    if r == 0 {
        return Err(Error::ZeroIdeal);
    }
    if r > bound {
        return Err(Error::TooManyGenerators { got: r, bound });
    }
    // lcm degree of every generator subset
    let mut degs = vec![0u32; 1usize << r];
    {
        let mut lcms = vec![crate::monomial::Monomial::one(ideal.nvars()); 1usize << r];
        for mask in 1..(1usize << r) {
            let low = mask.trailing_zeros() as usize;
            lcms[mask] = lcms[mask ^ (1 << low)].lcm(&ideal.gens()[low]);
            degs[mask] = lcms[mask].degree();
        }
    }
    // subsets grouped by (cardinality, lcm degree)
    let mut groups: HashMap<(u32, u32), Vec<u64>> = HashMap::new();
    for mask in 0..(1u64 << r) {
        groups
            .entry((mask.count_ones(), degs[mask as usize]))
            .or_default()
            .push(mask);
    }
    // rank of the tensored differential leaving each group
    let mut rank_out: HashMap<(u32, u32), usize> = HashMap::new();
    for (&(k, j), columns) in &groups {
        if k == 0 {
            continue;
        }
        let Some(rows) = groups.get(&(k - 1, j)) else {
            continue;
        };
        let row_index: HashMap<u64, usize> =
            rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut matrix = vec![vec![0i64; columns.len()]; rows.len()];
        for (col, &sigma) in columns.iter().enumerate() {
            let mut sign = 1i64;
            let mut rest = sigma;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let tau = sigma ^ bit;
                if degs[tau as usize] == j {
                    matrix[row_index[&tau]][col] = sign;
                }
                sign = -sign;
                rest ^= bit;
            }
        }
        rank_out.insert((k, j), rank(&matrix, field));
    }
    let indeg = ideal.indeg().expect("nonzero ideal");
    let mut table = BettiTable::new(field, indeg);
    for (&(k, j), columns) in &groups {
        if k == 0 {
            continue;
        }
        let i = k - 1;
        let dim = columns.len();
        let out = rank_out.get(&(k, j)).copied().unwrap_or(0);
        let into = rank_out.get(&(k + 1, j)).copied().unwrap_or(0);
        let beta = dim - out - into;
        if beta > 0 {
            table.add(i, j - i, beta as u64);
        }
    }
    Ok(table)
}

/// Betti table by the engine suited to the ideal: Hochster for square-free
/// inputs, Taylor otherwise.
pub fn betti_table_auto(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_squarefree() {
        betti_table_hochster_ideal(ideal, field)
    } else {
        betti_table_taylor(ideal, field)
    }
}
