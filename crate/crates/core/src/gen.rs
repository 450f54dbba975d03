//! Deterministic graph generators: G(n,p) samples, random chordal graphs via
//! a perfect elimination ordering, and planted cables realizing a prescribed
//! pair-type matrix. Every generator is seeded explicitly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::structures::{Cable, PairType, ZEntry};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("type matrix has {got} entries, expected t(t-1)/2 = {expected}")]
    BadTypeMatrix { got: usize, expected: usize },
    #[error("h must be at least 1")]
    ZeroH,
    #[error("width must satisfy 1 <= width <= n")]
    BadWidth,
}

/// Erdős–Rényi sample G(n, p), deterministic per seed.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

/// Random chordal graph: vertices are added one at a time, each attached to a
/// clique of at most `width` predecessors, so the reverse insertion order is
/// a perfect elimination ordering. width = 1 yields a forest.
pub fn gen_chordal(n: usize, width: usize, seed: u64) -> Result<Graph, GenError> {
    if width == 0 || width > n.max(1) {
        return Err(GenError::BadWidth);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // cliques available for attachment, as sorted vertex lists
    let mut cliques: Vec<Vec<usize>> = vec![vec![]];
    for v in 0..n {
        let host = cliques[rng.gen_range(0..cliques.len())].clone();
        let take = host.len().min(rng.gen_range(1..=width));
        let mut attach = host;
        attach.shuffle(&mut rng);
        attach.truncate(take);
        for &u in &attach {
            edges.push((u, v));
        }
        attach.push(v);
        attach.sort_unstable();
        cliques.push(attach);
    }
    Graph::from_edges(n, &edges).map_err(|_| GenError::BadWidth)
}

/// Index of pair (i, j), i < j, in the row-major pair order
/// (0,1), (0,2), ..., (0,t-1), (1,2), ...
pub fn pair_index(i: usize, j: usize, t: usize) -> usize {
    debug_assert!(i < j && j < t);
    i * t - i * (i + 1) / 2 + (j - i - 1)
}

/// A planted cable of length t realizing the requested (C5) type per pair
/// (`types` in `pair_index` order), over a base clique of size
/// `base_chi_target`. Construction: per index, one Y vertex complete to the
/// base and its own clique; per type-2 pair (i,j), edges from Y_i onto X_j
/// plus one Z vertex covering N_j; per type-1 pair, Y_i sees all of X_j
/// except its last member, leaving that member as the anticomplete witness.
/// Vertex ids are shuffled by the seed.
pub fn gen_planted_cable(
    h: usize,
    t: usize,
    types: &[PairType],
    base_chi_target: usize,
    seed: u64,
) -> Result<(Graph, Cable), GenError> {
    if h == 0 {
        return Err(GenError::ZeroH);
    }
    let expected = t * t.saturating_sub(1) / 2;
    if types.len() != expected {
        return Err(GenError::BadTypeMatrix {
            got: types.len(),
            expected,
        });
    }

    // canonical ids first: cliques, then Y vertices, then Z vertices, then base
    let mut next = 0usize;
    let mut fresh = |count: usize| -> Vec<usize> {
        let v: Vec<usize> = (next..next + count).collect();
        next += count;
        v
    };
    let cliques: Vec<Vec<usize>> = (0..t).map(|_| fresh(h)).collect();
    let ys: Vec<usize> = (0..t).map(|_| fresh(1)[0]).collect();
    let mut z_of: Vec<Option<usize>> = vec![None; expected];
    for i in 0..t {
        for j in i + 1..t {
            if types[pair_index(i, j, t)] == PairType::Type2 {
                z_of[pair_index(i, j, t)] = Some(fresh(1)[0]);
            }
        }
    }
    let base: Vec<usize> = fresh(base_chi_target);
    let n = next;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for x in &cliques {
        for a in 0..h {
            for b in a + 1..h {
                edges.push((x[a], x[b]));
            }
        }
    }
    for a in 0..base.len() {
        for b in a + 1..base.len() {
            edges.push((base[a], base[b]));
        }
    }
    // N_i members (the Y vertex and every Z_{i,*} vertex) complete to X_i
    let mut members_of_n: Vec<Vec<usize>> = vec![vec![]; t];
    for i in 0..t {
        members_of_n[i].push(ys[i]);
        for j in i + 1..t {
            if let Some(z) = z_of[pair_index(i, j, t)] {
                members_of_n[i].push(z);
            }
        }
        for &m in &members_of_n[i] {
            for &x in &cliques[i] {
                edges.push((m, x));
            }
        }
        // Y_i covers the base
        for &b in &base {
            edges.push((ys[i], b));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            match types[pair_index(i, j, t)] {
                PairType::Type2 => {
                    // X_j complete to Y_i, and Z_{i,j} covers N_j
                    for &x in &cliques[j] {
                        edges.push((ys[i], x));
                    }
                    let z = z_of[pair_index(i, j, t)].unwrap();
                    for &m in &members_of_n[j] {
                        edges.push((z, m));
                    }
                }
                PairType::Type1 => {
                    // all but the last member of X_j see Y_i; the last member
                    // is the anticomplete witness
                    for &x in &cliques[j][..h - 1] {
                        edges.push((ys[i], x));
                    }
                }
            }
        }
    }

    // shuffle vertex ids so downstream code never relies on the layout
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let g = Graph::from_edges(n, &edges).expect("generated edges are in range");
    let set = |vs: &[usize]| VertexSet::from_iter(n, vs.iter().map(|&v| perm[v]));

    let mut z_sets = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            if let Some(z) = z_of[pair_index(i, j, t)] {
                z_sets.push(ZEntry {
                    i,
                    j,
                    set: set(&[z]),
                });
            }
        }
    }
    let cable = Cable {
        h,
        cliques: cliques.iter().map(|x| set(x)).collect(),
        n_sets: members_of_n.iter().map(|m| set(m)).collect(),
        y_sets: ys.iter().map(|&y| set(&[y])).collect(),
        z_sets,
        base: set(&base),
    };
    Ok((g, cable))
}
