//! Monomials, monomial ideals with minimal generating sets, the linear
//! quotients search, and the degree/exponent tests for when an intersection
//! with a variable-times-u ideal stays generated in the bottom degree.

use std::fmt;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::set::VertexSet;

/// A monomial in `x_1..x_n`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    /// The square-free monomial `x_F`.
    pub fn from_support(f: VertexSet, nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for v in f.iter() {
            m.exps[(v - 1) as usize] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_v` (1-based variable label).
    pub fn nu(&self, v: u32) -> u32 {
        self.exps[(v - 1) as usize]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_members(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i as u32 + 1),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn times_var(&self, v: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[(v - 1) as usize] += 1;
        m
    }

    /// The colon quotient `self : other = self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial ideal, kept as its unique minimal generating set, sorted by
/// (degree, exponents). The empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator has wrong variable count"))
            .collect();
        gens.sort_unstable_by_key(|g| (g.degree(), g.exps.clone()));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Least generator degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    /// The common generator degree, if all generators share one.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I ∩ J`, generated by the pairwise lcm's and minimalized.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }
}

/// The circuit ideal `I(complement of C)`: square-free generators for every
/// d-subset of the ground set that is not a circuit. Zero when C is complete.
pub fn circuit_ideal(c: &Clutter) -> Result<MonomialIdeal> {
    let comp = c.complement()?;
    let nvars = c.ground().max().unwrap_or(0) as usize;
    Ok(MonomialIdeal::new(
        nvars,
        comp.circuits()
            .iter()
            .map(|f| Monomial::from_support(*f, nvars))
            .collect(),
    ))
}

/// Outcome of the linear-quotients search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuotientsOutcome {
    /// An admissible ordering of the generators (indices into `gens()`).
    Yes(Vec<usize>),
    No,
    /// The search exhausted its state budget.
    Unknown,
}

/// Search for a linear-quotients ordering of an equigenerated ideal.
///
/// A generator may come next exactly when, for every earlier generator `m_k`,
/// some earlier `m_l` has `m_l : m_i` equal to a single variable dividing
/// `m_k : m_i`. That admissibility depends only on the set of earlier
/// generators, so the search runs over subsets with failed sets memoized,
/// which makes it complete within the budget.
pub fn has_linear_quotients(ideal: &MonomialIdeal, budget: usize) -> Result<QuotientsOutcome> {
    let r = ideal.num_gens();
    if r == 0 {
        return Err(Error::ZeroIdeal);
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::DegreeMismatch(
            "linear quotients search expects generators in one degree".into(),
        ));
    }
    if r > 63 {
        return Err(Error::TooManyGenerators { got: r, bound: 63 });
    }
    if r == 1 {
        return Ok(QuotientsOutcome::Yes(vec![0]));
    }
    // colon[l][i] = m_l : m_i
    let colon: Vec<Vec<Monomial>> = ideal
        .gens
        .iter()
        .map(|l| ideal.gens.iter().map(|i| l.colon(i)).collect())
        .collect();
    let full: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    let mut failed: std::collections::HashSet<u64> = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(r);
    let mut remaining = budget;
    match dfs_quotients(0, full, &colon, &mut order, &mut failed, &mut remaining) {
        SearchResult::Found => Ok(QuotientsOutcome::Yes(order)),
        SearchResult::Exhausted => Ok(QuotientsOutcome::No),
        SearchResult::OutOfBudget => Ok(QuotientsOutcome::Unknown),
    }
}

enum SearchResult {
    Found,
    Exhausted,
    OutOfBudget,
}

fn dfs_quotients(
    chosen: u64,
    full: u64,
    colon: &[Vec<Monomial>],
    order: &mut Vec<usize>,
    failed: &mut std::collections::HashSet<u64>,
    budget: &mut usize,
) -> SearchResult {
    if chosen == full {
        return SearchResult::Found;
    }
    if failed.contains(&chosen) {
        return SearchResult::Exhausted;
    }
    if *budget == 0 {
        return SearchResult::OutOfBudget;
    }
    *budget -= 1;
    let r = colon.len();
    let mut saw_budget_cut = false;
    for i in 0..r {
        if chosen & (1 << i) != 0 {
            continue;
        }
        if !admissible(i, chosen, colon) {
            continue;
        }
        order.push(i);
        match dfs_quotients(chosen | (1 << i), full, colon, order, failed, budget) {
            SearchResult::Found => return SearchResult::Found,
            SearchResult::Exhausted => {}
            SearchResult::OutOfBudget => saw_budget_cut = true,
        }
        order.pop();
        if saw_budget_cut {
            break;
        }
    }
    if saw_budget_cut {
        SearchResult::OutOfBudget
    } else {
        failed.insert(chosen);
        SearchResult::Exhausted
    }
}

fn admissible(i: usize, chosen: u64, colon: &[Vec<Monomial>]) -> bool {
    let r = colon.len();
    (0..r).filter(|k| chosen & (1 << k) != 0).all(|k| {
        (0..r).any(|l| {
            chosen & (1 << l) != 0 && colon[l][i].degree() == 1 && colon[l][i].divides(&colon[k][i])
        })
    })
}

/// Independent validation of a linear-quotients ordering: compute each colon
/// ideal's minimal generators directly and check they are all variables.
pub fn validate_linear_quotients_order(ideal: &MonomialIdeal, order: &[usize]) -> bool {
    let r = ideal.num_gens();
    if order.len() != r {
        return false;
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..r).collect::<Vec<_>>() {
        return false;
    }
    for i in 1..r {
        let m_i = &ideal.gens[order[i]];
        let colon_gens: Vec<Monomial> = order[..i]
            .iter()
            .map(|&k| ideal.gens[k].colon(m_i))
            .collect();
        let colon_ideal = MonomialIdeal::new(ideal.nvars, colon_gens);
        if !colon_ideal.gens().iter().all(|g| g.degree() == 1) {
            return false;
        }
    }
    true
}

/// Truth values of the four equivalent descriptions of `I ∩ (u·x_i : i ∈ L)`
/// being generated in the bottom degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NiceReport {
    /// `I ∩ L` has a d-linear resolution (computed from its Betti table).
    pub linear_resolution: bool,
    /// `I ∩ L` is nonzero and generated in degree d.
    pub generated_in_degree_d: bool,
    /// `L ⊆ I`, or every generator `v` admits `x_i` with `x_i·u ∈ I` and
    /// `ν_i(u) + 1 ≤ ν_i(v)`.
    pub exponent_condition: bool,
    /// `L ⊆ I`, or `I ∩ L = (x_i·u : x_i·u ∈ I) ≠ 0`.
    pub explicit_form: bool,
    /// Whether `L ⊆ I` (reported for context).
    pub l_contained_in_i: bool,
}

impl NiceReport {
    pub fn all_agree(&self) -> bool {
        let v = self.linear_resolution;
        self.generated_in_degree_d == v && self.exponent_condition == v && self.explicit_form == v
    }
}

/// Evaluate the four conditions for `I` equigenerated in degree d, `u` of
/// degree d-1, and `L = (x_i·u : i ∈ l_vars)`.
pub fn check_nice_conditions(
    ideal: &MonomialIdeal,
    u: &Monomial,
    l_vars: VertexSet,
    field: FieldSpec,
) -> Result<NiceReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let Some(d) = ideal.equigenerated_degree() else {
        return Err(Error::DegreeMismatch(
            "ideal must be generated in a single degree".into(),
        ));
    };
    if u.degree() + 1 != d {
        return Err(Error::DegreeMismatch(format!(
            "u has degree {}, expected {}",
            u.degree(),
            d - 1
        )));
    }
    if l_vars.is_empty() || l_vars.max().unwrap() as usize > ideal.nvars() {
        return Err(Error::DegreeMismatch(
            "l_vars must be a nonempty subset of the variables".into(),
        ));
    }

    let l_gens: Vec<Monomial> = l_vars.iter().map(|v| u.times_var(v)).collect();
    let l_ideal = MonomialIdeal::new(ideal.nvars, l_gens.clone());
    let l_contained = l_gens.iter().all(|g| ideal.contains(g));
    let meet = ideal.intersection(&l_ideal);

    let generated_in_degree_d = !meet.is_zero() && meet.gens().iter().all(|g| g.degree() == d);

    let exponent_condition = l_contained
        || ideal.gens().iter().all(|v| {
            l_vars
                .iter()
                .any(|i| ideal.contains(&u.times_var(i)) && u.nu(i) < v.nu(i))
        });

    let explicit_form = l_contained || {
        let inside: Vec<Monomial> = l_gens
            .iter()
            .filter(|g| ideal.contains(g))
            .cloned()
            .collect();
        !inside.is_empty() && MonomialIdeal::new(ideal.nvars, inside) == meet
    };

    let table = crate::betti::betti_table_taylor_bounded(&meet, field, 16)?;
    let linear_resolution = table.has_linear_resolution(d);

    Ok(NiceReport {
        linear_resolution,
        generated_in_degree_d,
        exponent_condition,
        explicit_form,
        l_contained_in_i: l_contained,
    })
}

/// Sorted supports of the minimal generators; for square-free ideals these
/// form an antichain.
pub fn generator_supports(ideal: &MonomialIdeal) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = ideal.gens.iter().map(|g| g.support()).collect();
    out.sort_unstable_by_key(|s| (s.len(), s.mask()));
    out
}
