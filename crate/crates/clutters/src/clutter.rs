use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTEX};

/// An antichain of vertex subsets (circuits) over an explicit ground set.
///
/// The ground set keeps its original labels through vertex removal, so a
/// minor of a clutter on `{1..7}` may live on `{1,3,6}`. Circuits are stored
/// canonically sorted by (cardinality, mask), which makes equal families
/// compare equal and gives deterministic iteration everywhere.
///
/// `degree` tags the clutter as d-uniform. It is inferred when all circuits
/// share one cardinality and preserved by circuit-filtering operations, so an
/// emptied d-uniform clutter still knows its d.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Clutter {
    vertices: VertexSet,
    circuits: Vec<VertexSet>,
    degree: Option<u32>,
}

/// One vertex-removal step of a minor computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOp {
    Delete(u32),
    Contract(u32),
}

/// A sequence of vertex deletions/contractions. Re-using a removed vertex is
/// rejected when the path is applied.
pub type MinorPath = Vec<MinorOp>;

fn sort_canonical(circuits: &mut Vec<VertexSet>) {
    circuits.sort_unstable_by_key(|c| (c.len(), c.mask()));
    circuits.dedup();
}

fn infer_degree(circuits: &[VertexSet]) -> Option<u32> {
    let first = circuits.first()?.len();
    circuits.iter().all(|c| c.len() == first).then_some(first)
}

impl Clutter {
    /// Build a clutter on `{1..n}`, inferring the uniformity tag.
    pub fn new(n: u32, circuits: Vec<VertexSet>) -> Result<Clutter> {
        Clutter::on_ground(VertexSet::full(check_n(n)?), circuits, None)
    }

    /// Build a clutter on `{1..n}` that must be d-uniform (the tag is kept
    /// even when `circuits` is empty).
    pub fn uniform(n: u32, d: u32, circuits: Vec<VertexSet>) -> Result<Clutter> {
        Clutter::on_ground(VertexSet::full(check_n(n)?), circuits, Some(d))
    }

    /// Build a clutter on an explicit ground set.
    pub fn on_ground(
        vertices: VertexSet,
        mut circuits: Vec<VertexSet>,
        degree: Option<u32>,
    ) -> Result<Clutter> {
        for c in &circuits {
            if !c.is_subset(vertices) {
                let v = c.difference(vertices).min().unwrap();
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: vertices.len(),
                });
            }
            if let Some(d) = degree {
                if c.len() != d {
                    return Err(Error::NotUniform);
                }
            }
        }
        sort_canonical(&mut circuits);
        // antichain: after the sort a container always comes later
        for i in 0..circuits.len() {
            for j in i + 1..circuits.len() {
                if circuits[i].is_subset(circuits[j]) {
                    return Err(Error::AntichainViolation {
                        inner: format!("{:?}", circuits[i]),
                        outer: format!("{:?}", circuits[j]),
                    });
                }
            }
        }
        let degree = degree.or_else(|| infer_degree(&circuits));
        Ok(Clutter {
            vertices,
            circuits,
            degree,
        })
    }

    /// The complete d-uniform clutter on `{1..n}`; for `n < d` this is the
    /// empty family on `n` isolated points, still tagged with `d`.
    pub fn complete(n: u32, d: u32) -> Clutter {
        assert!(d >= 1, "degree must be positive");
        let vertices = VertexSet::full(n);
        Clutter {
            circuits: vertices.subsets_of_size(d),
            vertices,
            degree: Some(d),
        }
    }

    /// Same circuits filtered by `keep`, ground and tag unchanged.
    /// Filtering an antichain cannot break the antichain property.
    fn filtered(&self, keep: impl Fn(&VertexSet) -> bool) -> Clutter {
        Clutter {
            vertices: self.vertices,
            circuits: self.circuits.iter().copied().filter(|c| keep(c)).collect(),
            degree: self.degree,
        }
    }

    pub fn ground(&self) -> VertexSet {
        self.vertices
    }

    pub fn num_vertices(&self) -> u32 {
        self.vertices.len()
    }

    pub fn circuits(&self) -> &[VertexSet] {
        &self.circuits
    }

    pub fn num_circuits(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub(crate) fn require_degree(&self) -> Result<u32> {
        self.degree.ok_or(Error::NotUniform)
    }

    pub fn contains_circuit(&self, c: VertexSet) -> bool {
        self.circuits
            .binary_search_by_key(&(c.len(), c.mask()), |x| (x.len(), x.mask()))
            .is_ok()
    }

    /// True when the circuit family is all d-subsets of the ground set.
    pub fn is_complete(&self) -> bool {
        match self.degree {
            Some(d) => {
                let n = self.vertices.len();
                let expected = if n >= d { binomial(n, d) } else { 0 };
                self.circuits.len() as u64 == expected
            }
            None => false,
        }
    }

    /// The complement within the complete d-uniform clutter on the same ground.
    pub fn complement(&self) -> Result<Clutter> {
        let d = self.require_degree()?;
        let circuits = self
            .vertices
            .subsets_of_size(d)
            .into_iter()
            .filter(|c| !self.contains_circuit(*c))
            .collect();
        Ok(Clutter {
            vertices: self.vertices,
            circuits,
            degree: Some(d),
        })
    }

    /// Induced subclutter on `w`: circuits contained in `w`, ground re-tagged.
    pub fn induced(&self, w: VertexSet) -> Clutter {
        let w = w.intersection(self.vertices);
        let mut out = self.filtered(|c| c.is_subset(w));
        out.vertices = w;
        out
    }

    /// Closed neighborhood `N[a] = a ∪ {c : a ∪ {c} ⊆ F for some circuit F}`.
    pub fn closed_neighborhood(&self, a: VertexSet) -> Result<VertexSet> {
        if let Some(d) = self.degree {
            if a.len() >= d {
                return Err(Error::SizeViolation {
                    set: format!("{a:?}"),
                    got: a.len(),
                    expected: d - 1,
                });
            }
        }
        let mut out = a;
        for c in &self.circuits {
            if a.is_subset(*c) {
                out = out.union(*c);
            }
        }
        Ok(out)
    }

    /// True when every d-subset of `v` is a circuit; sets with fewer than d
    /// elements are cliques vacuously.
    pub fn is_clique(&self, v: VertexSet) -> bool {
        match self.degree {
            Some(d) => {
                v.len() < d
                    || v.subsets_of_size(d)
                        .into_iter()
                        .all(|s| self.contains_circuit(s))
            }
            None => self.circuits.is_empty(),
        }
    }

    /// Deletion of a submaximal circuit: drop every circuit containing `e`.
    pub fn delete_submaximal(&self, e: VertexSet) -> Result<Clutter> {
        let d = self.require_degree()?;
        if e.len() != d - 1 {
            return Err(Error::SizeViolation {
                set: format!("{e:?}"),
                got: e.len(),
                expected: d - 1,
            });
        }
        Ok(self.filtered(|c| !e.is_subset(*c)))
    }

    /// All (d-1)-subsets contained in at least one circuit, sorted.
    pub fn submaximal_circuits(&self) -> Vec<VertexSet> {
        let Some(d) = self.degree else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let mut out: Vec<VertexSet> = self
            .circuits
            .iter()
            .flat_map(|c| c.subsets_of_size(d - 1))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_submaximal_circuit(&self, e: VertexSet) -> bool {
        self.circuits.iter().any(|c| e.is_subset(*c))
    }

    /// Number of circuits containing vertex `v`.
    pub fn vertex_degree(&self, v: u32) -> usize {
        self.circuits.iter().filter(|c| c.contains(v)).count()
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertices.len(),
            })
        }
    }

    /// Minor deletion `C \ v`: keep circuits avoiding `v`, drop `v` from the
    /// ground. The uniformity tag is re-inferred so that deletion and
    /// contraction commute as values, not just as circuit families.
    pub fn vertex_deletion(&self, v: u32) -> Result<Clutter> {
        self.check_vertex(v)?;
        let circuits: Vec<VertexSet> = self
            .circuits
            .iter()
            .copied()
            .filter(|c| !c.contains(v))
            .collect();
        Ok(Clutter {
            vertices: self.vertices.without(v),
            degree: infer_degree(&circuits),
            circuits,
        })
    }

    /// Minor contraction `C / v`: remove `v` from each circuit, keep minimal sets.
    pub fn vertex_contraction(&self, v: u32) -> Result<Clutter> {
        self.check_vertex(v)?;
        let mut shrunk: Vec<VertexSet> = self.circuits.iter().map(|c| c.without(v)).collect();
        sort_canonical(&mut shrunk);
        let mut minimal: Vec<VertexSet> = Vec::with_capacity(shrunk.len());
        for c in shrunk {
            if !minimal.iter().any(|m| m.is_subset(c)) {
                minimal.push(c);
            }
        }
        Ok(Clutter {
            vertices: self.vertices.without(v),
            degree: infer_degree(&minimal),
            circuits: minimal,
        })
    }

    /// Apply a sequence of deletions/contractions. A vertex that is gone at
    /// its step (including one already used earlier in the path) is rejected.
    pub fn apply_minor(&self, path: &[MinorOp]) -> Result<Clutter> {
        let mut current = self.clone();
        for op in path {
            current = match *op {
                MinorOp::Delete(v) => current.vertex_deletion(v)?,
                MinorOp::Contract(v) => current.vertex_contraction(v)?,
            };
        }
        Ok(current)
    }
}

fn check_n(n: u32) -> Result<u32> {
    if n <= MAX_VERTEX {
        Ok(n)
    } else {
        Err(Error::VertexOutOfRange { vertex: n, n })
    }
}

pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n as u64 - i) / (i + 1);
    }
    out
}
