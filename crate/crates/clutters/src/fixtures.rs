//! Named example clutters used across the test suite, the CLI `fixtures`
//! subcommand, and the atlas.

use crate::clutter::Clutter;
use crate::complex::SimplicialComplex;
use crate::set::VertexSet;

fn vs(members: &[u32]) -> VertexSet {
    VertexSet::from_members(members.iter().copied())
}

fn clutter(n: u32, d: u32, circuits: &[&[u32]]) -> Clutter {
    Clutter::uniform(n, d, circuits.iter().map(|c| vs(c)).collect())
        .expect("fixture clutters are valid")
}

/// 3-uniform clutter on 7 vertices: two tetrahedra sharing machinery through
/// vertex 2, with exactly {2,3} and {2,6} non-simplicial.
pub fn figure_one() -> Clutter {
    clutter(
        7,
        3,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[2, 3, 6],
            &[2, 5, 6],
            &[2, 5, 7],
            &[2, 6, 7],
            &[5, 6, 7],
        ],
    )
}

/// Chordal 3-uniform clutter on 6 vertices (two tetrahedra glued along {1,2}).
pub fn figure_two_c() -> Clutter {
    clutter(
        6,
        3,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 5, 6],
            &[2, 5, 6],
        ],
    )
}

/// Non-chordal 3-uniform clutter on 5 vertices (bipyramid minus equator fill).
pub fn figure_two_d() -> Clutter {
    clutter(
        5,
        3,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 5],
            &[2, 4, 5],
            &[3, 4, 5],
        ],
    )
}

/// Chordal but not W-chordal: no vertex is W-simplicial.
pub fn no_w_simplicial_example() -> Clutter {
    clutter(5, 3, &[&[1, 2, 3], &[1, 3, 4], &[2, 3, 5], &[3, 4, 5]])
}

/// Chordal but not E-chordal: the complete clutter on five vertices minus {2,3,4}.
pub fn not_e_chordal_example() -> Clutter {
    clutter(
        5,
        3,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 5],
            &[2, 4, 5],
            &[3, 4, 5],
            &[1, 2, 5],
            &[1, 3, 5],
            &[1, 4, 5],
        ],
    )
}

/// The 17 triangles of the 8-vertex dunce-hat triangulation.
///
/// Transcribed from the drawing: boundary circle 1-3-2 traversed three times,
/// inner pentagon 6-5-4-8-7. Two transcription checks pin it down: the derived
/// clutter has 39 circuits, and the 33-step elimination order replays.
pub const DUNCE_HAT_TRIANGLES: [[u32; 3]; 17] = [
    [1, 5, 6],
    [1, 3, 5],
    [2, 3, 5],
    [2, 4, 5],
    [1, 2, 4],
    [1, 3, 4],
    [3, 4, 8],
    [2, 3, 8],
    [1, 2, 8],
    [1, 7, 8],
    [1, 2, 7],
    [2, 3, 7],
    [3, 6, 7],
    [1, 3, 6],
    [4, 5, 6],
    [4, 6, 8],
    [6, 7, 8],
];

/// The dunce-hat triangulation as a simplicial complex on 8 vertices.
pub fn dunce_hat_complex() -> SimplicialComplex {
    SimplicialComplex::new(
        VertexSet::full(8),
        DUNCE_HAT_TRIANGLES.iter().map(|t| vs(t)).collect(),
    )
}

/// The 5-uniform clutter on 8 vertices obtained by removing the facet
/// complements of the dunce-hat triangulation from the complete clutter.
pub fn dunce_hat_clutter() -> Clutter {
    let ground = VertexSet::full(8);
    let removed: Vec<VertexSet> = DUNCE_HAT_TRIANGLES
        .iter()
        .map(|t| ground.difference(vs(t)))
        .collect();
    let circuits = ground
        .subsets_of_size(5)
        .into_iter()
        .filter(|c| !removed.contains(c))
        .collect();
    Clutter::uniform(8, 5, circuits).expect("dunce hat clutter is valid")
}

/// A recorded 33-step deletion order for the dunce-hat clutter, kept as a
/// cross-check of the triangulation transcription.
///
/// Replaying it empties the clutter and 31 of the 33 steps are simplicial
/// at their turn, but steps 5 and 6 ({1,4,6,7} and {1,4,6,8}) are not:
/// their closed neighborhoods still contain both 2 and 3 at that point, and
/// the sets {1,2,3,4,6}, {1,2,3,4,7}, {1,2,3,6,7} are already deleted. The
/// order does satisfy the weaker variant that checks cliqueness of the
/// extension vertices alone, which is evidently how it was produced. The
/// clutter itself is chordal: the backtracking search emits a valid strict
/// certificate.
pub fn dunce_hat_elimination_order() -> Vec<VertexSet> {
    const ORDER: [[u32; 4]; 33] = [
        [1, 2, 3, 7],
        [1, 2, 3, 4],
        [1, 2, 3, 5],
        [1, 2, 3, 6],
        [1, 4, 6, 7],
        [1, 4, 6, 8],
        [1, 2, 4, 6],
        [1, 2, 4, 5],
        [1, 2, 4, 7],
        [1, 2, 5, 6],
        [1, 2, 5, 7],
        [1, 2, 6, 7],
        [1, 3, 4, 6],
        [1, 3, 4, 5],
        [1, 3, 4, 7],
        [1, 3, 6, 7],
        [1, 3, 5, 6],
        [1, 3, 5, 7],
        [1, 4, 5, 7],
        [1, 5, 6, 7],
        [3, 5, 6, 7],
        [2, 3, 5, 6],
        [2, 5, 7, 8],
        [2, 3, 5, 7],
        [2, 3, 4, 5],
        [2, 3, 4, 7],
        [2, 3, 4, 6],
        [2, 3, 6, 7],
        [2, 4, 5, 7],
        [2, 4, 5, 6],
        [3, 4, 5, 7],
        [3, 4, 6, 7],
        [4, 5, 6, 7],
    ];
    ORDER.iter().map(|e| vs(e)).collect()
}
