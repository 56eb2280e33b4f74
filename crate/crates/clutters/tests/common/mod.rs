//! Shared test support: an independent chordal-graph oracle and seeded
//! corpus generators. Nothing here goes through the elimination machinery
//! under test.
//!
//! Each integration-test binary compiles this module separately, so not
//! every helper is used in every binary.
#![allow(dead_code)]

use clutters::clutter::Clutter;
use clutters::set::VertexSet;
use clutters::stability::corpus_rng;
use rand_core::RngCore;

/// Classical chordality test: maximum cardinality search followed by the
/// zero fill-in check of the produced ordering. Vertices are 1..=n.
pub fn mcs_is_chordal(n: u32, edges: &[(u32, u32)]) -> bool {
    let n = n as usize;
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(a, b) in edges {
        adj[a as usize][b as usize] = true;
        adj[b as usize][a as usize] = true;
    }
    // visit order: max weight first, ties to the smallest label
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut pos = vec![0usize; n + 1]; // elimination position; larger = earlier visit
    for step in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        pos[v] = n - step;
        for u in 1..=n {
            if adj[v][u] && !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // zero fill-in: among the later neighbors of v, everything past the
    // nearest one must already be adjacent to it
    for v in 1..=n {
        let later: Vec<usize> = (1..=n).filter(|&u| adj[v][u] && pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != parent && !adj[parent][u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Edge list of a 2-uniform clutter.
pub fn graph_edges(c: &Clutter) -> Vec<(u32, u32)> {
    c.circuits()
        .iter()
        .map(|e| {
            let v: Vec<u32> = e.to_vec();
            (v[0], v[1])
        })
        .collect()
}

/// The graph clutter on `{1..n}` encoded by `mask` over the pairs in
/// ascending mask order.
pub fn graph_from_mask(n: u32, mask: u64) -> Clutter {
    let pairs = VertexSet::full(n).subsets_of_size(2);
    let circuits: Vec<VertexSet> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &p)| p)
        .collect();
    Clutter::uniform(n, 2, circuits).expect("pairs are valid edges")
}

/// Seeded random chordal graph by reverse perfect-elimination construction:
/// each new vertex attaches to a clique grown greedily at random inside the
/// current graph. Never complete, never empty.
pub fn random_chordal_graph(n: u32, seed: u64) -> Clutter {
    let mut attempt = seed;
    loop {
        let mut rng = corpus_rng(attempt);
        let mut adj = vec![vec![false; n as usize + 1]; n as usize + 1];
        let mut edges: Vec<VertexSet> = Vec::new();
        for v in 2..=n {
            // grow a random clique among the existing vertices
            let mut clique: Vec<u32> = vec![1 + rng.next_u32() % (v - 1)];
            loop {
                let extenders: Vec<u32> = (1..v)
                    .filter(|&w| {
                        !clique.contains(&w) && clique.iter().all(|&u| adj[u as usize][w as usize])
                    })
                    .collect();
                if extenders.is_empty() || rng.next_u32().is_multiple_of(3) {
                    break;
                }
                clique.push(extenders[(rng.next_u32() as usize) % extenders.len()]);
            }
            // attach to a random nonempty subset of that clique
            let keep: Vec<u32> = clique
                .iter()
                .copied()
                .filter(|_| !rng.next_u32().is_multiple_of(4))
                .collect();
            let keep = if keep.is_empty() {
                vec![clique[0]]
            } else {
                keep
            };
            for u in keep {
                adj[u as usize][v as usize] = true;
                adj[v as usize][u as usize] = true;
                edges.push(VertexSet::from_members([u, v]));
            }
        }
        let c = Clutter::uniform(n, 2, edges).expect("construction yields a graph");
        if !c.is_complete() && !c.is_empty() {
            return c;
        }
        attempt = attempt.wrapping_add(0x9e37_79b9);
    }
}
