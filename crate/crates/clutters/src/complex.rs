//! Simplicial complexes and exact reduced simplicial homology.
//!
//! Conventions at the degenerate end matter for the Hochster summation and
//! are fixed here once: the void complex (no faces at all) has every reduced
//! homology zero, while the complex whose only face is the empty set has
//! `H̃_{-1} = K` and nothing else.

use std::collections::{HashMap, HashSet};

use crate::clutter::Clutter;
use crate::linalg::{rank, FieldSpec};
use crate::set::VertexSet;

/// A simplicial complex given by its facets (maximal faces).
///
/// `facets` is an antichain; the empty list encodes the void complex and the
/// single empty facet encodes the complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn new(vertices: VertexSet, faces: Vec<VertexSet>) -> SimplicialComplex {
        let mut faces: Vec<VertexSet> = faces
            .into_iter()
            .map(|f| f.intersection(vertices))
            .collect();
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|m| f.is_subset(*m)) {
                facets.push(f);
            }
        }
        facets.sort_unstable_by_key(|f| (f.len(), f.mask()));
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            vertices,
            facets: vec![vertices],
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|m| f.is_subset(*m))
    }

    /// Induced subcomplex on `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex::new(
            w.intersection(self.vertices),
            self.facets.iter().map(|f| f.intersection(w)).collect(),
        )
    }

    /// All faces grouped by cardinality: `groups[k]` holds the k-element
    /// faces in ascending mask order (`groups[0]` is the empty face).
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            for sub in f.subsets() {
                seen.insert(sub);
            }
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap() as usize;
        let mut groups: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        for f in seen {
            groups[f.len() as usize].push(f);
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        groups
    }

    /// f-vector indexed by dimension starting at -1 (the empty face).
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(|g| g.len()).collect()
    }
}

/// The clique complex of a d-uniform clutter: faces are the cliques, so every
/// set of fewer than d vertices is a face. This is the Stanley-Reisner
/// complex of the circuit ideal.
pub fn clique_complex(c: &Clutter) -> SimplicialComplex {
    let ground = c.ground();
    if c.degree().is_none() {
        // only the untagged empty clutter reaches here; every set is a clique
        return SimplicialComplex::simplex(ground);
    }
    let cliques = ground
        .subsets()
        .into_iter()
        .filter(|v| c.is_clique(*v))
        .collect();
    SimplicialComplex::new(ground, cliques)
}

/// Dimensions of the reduced homology groups `H̃_i` for `i = -1 ..= dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    /// `H̃_i`; zero outside the computed range.
    pub fn dim(&self, i: i32) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| (k as i32 - 1, d))
    }
}

/// Exact reduced homology over the chosen field.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> HomologyDims {
    homology_from_groups(&complex.faces_by_size(), field)
}

/// Shared core: `groups[k]` lists the k-element faces, sorted ascending.
pub(crate) fn homology_from_groups(groups: &[Vec<VertexSet>], field: FieldSpec) -> HomologyDims {
    if groups.is_empty() {
        return HomologyDims { dims: Vec::new() };
    }
    // ranks[k] = rank of the boundary map from k-element faces to (k-1)-element faces
    let mut ranks = vec![0usize; groups.len() + 1];
    for k in 1..groups.len() {
        ranks[k] = rank(&boundary_matrix(&groups[k], &groups[k - 1]), field);
    }
    let dims = (0..groups.len())
        .map(|k| groups[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    HomologyDims { dims }
}

/// Boundary matrix with the standard alternating signs; rows are indexed by
/// the smaller faces, columns by the larger ones.
fn boundary_matrix(larger: &[VertexSet], smaller: &[VertexSet]) -> Vec<Vec<i64>> {
    let index: HashMap<VertexSet, usize> =
        smaller.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = vec![vec![0i64; larger.len()]; smaller.len()];
    for (col, face) in larger.iter().enumerate() {
        let mut sign = 1i64;
        for v in face.iter() {
            let sub = face.without(v);
            let row = index[&sub];
            m[row][col] = sign;
            sign = -sign;
        }
    }
    m
}
