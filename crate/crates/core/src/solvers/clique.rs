//! Exact maximum clique by branch and bound with a greedy-coloring upper
//! bound, plus fixed-size clique enumeration in lexicographic order.

use crate::graph::{Graph, VertexSet};
use crate::solvers::{Budget, Exhausted, SolveOutcome, SolverLimits};

use super::coloring::ChiSolver;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub size: usize,
    pub witness: VertexSet,
}

/// Maximum clique. The witness is pairwise adjacent; on an exact outcome no
/// larger clique exists.
pub fn omega(g: &Graph, limits: &SolverLimits) -> SolveOutcome<CliqueWitness> {
    let mut budget = Budget::new(limits);
    let mut best = greedy_clique(g);
    let mut current = VertexSet::empty(g.n());
    let res = expand(g, &mut current, &g.vertices(), &mut best, &mut budget);
    let witness = CliqueWitness {
        size: best.len(),
        witness: best,
    };
    match res {
        Ok(()) => SolveOutcome::Exact(witness),
        Err(Exhausted { nodes }) => SolveOutcome::Exhausted {
            partial: witness,
            nodes,
        },
    }
}

fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::empty(g.n());
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(g.n(), start);
        let mut cand = g.neighbors(start).clone();
        while let Some(v) = cand.min() {
            clique.insert(v);
            cand = cand.intersection(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn expand(
    g: &Graph,
    current: &mut VertexSet,
    candidates: &VertexSet,
    best: &mut VertexSet,
    budget: &mut Budget,
) -> Result<(), Exhausted> {
    budget.tick()?;
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    // Greedy-color the candidates; a clique can use at most one vertex per
    // color class, so branch in decreasing bound order.
    let order = color_order(g, candidates);
    let mut cand = candidates.clone();
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound as usize <= best.len() {
            return Ok(());
        }
        current.insert(v);
        let next = cand.intersection(g.neighbors(v));
        expand(g, current, &next, best, budget)?;
        current.remove(v);
        cand.remove(v);
    }
    Ok(())
}

/// Sequential greedy coloring of `candidates` by ascending id; returns
/// (vertex, color+1) in coloring order.
fn color_order(g: &Graph, candidates: &VertexSet) -> Vec<(usize, u32)> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut out = Vec::with_capacity(candidates.len());
    for v in candidates.iter() {
        let mut c = 0;
        loop {
            if c == classes.len() {
                classes.push(VertexSet::empty(g.n()));
            }
            if classes[c].is_disjoint(g.neighbors(v)) {
                classes[c].insert(v);
                break;
            }
            c += 1;
        }
    }
    for (c, class) in classes.iter().enumerate() {
        for v in class.iter() {
            out.push((v, c as u32 + 1));
        }
    }
    out.sort_by_key(|&(_, bound)| bound);
    out
}

/// Lexicographically least clique of size exactly `k` inside `within`, if any.
pub fn find_k_clique_in_subset(g: &Graph, within: &VertexSet, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::empty(g.n()));
    }
    let mut chosen = Vec::with_capacity(k);
    if k_clique_rec(g, within, k, &mut chosen) {
        Some(VertexSet::from_iter(g.n(), chosen))
    } else {
        None
    }
}

fn k_clique_rec(g: &Graph, cand: &VertexSet, k: usize, chosen: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    for v in cand.iter() {
        chosen.push(v);
        let mut next = cand.intersection(g.neighbors(v));
        // keep lexicographic order: only vertices above v
        for u in next.clone().iter() {
            if u <= v {
                next.remove(u);
            } else {
                break;
            }
        }
        if k_clique_rec(g, &next, k - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// All cliques of size exactly `h` inside `within`, in lexicographic order.
pub fn h_cliques_in_subset(g: &Graph, within: &VertexSet, h: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(h);
    h_cliques_rec(g, within, h, &mut chosen, &mut out);
    out
}

fn h_cliques_rec(
    g: &Graph,
    cand: &VertexSet,
    h: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if h == 0 {
        out.push(VertexSet::from_iter(g.n(), chosen.iter().copied()));
        return;
    }
    for v in cand.iter() {
        chosen.push(v);
        let mut next = cand.intersection(g.neighbors(v));
        for u in next.clone().iter() {
            if u <= v {
                next.remove(u);
            } else {
                break;
            }
        }
        h_cliques_rec(g, &next, h - 1, chosen, out);
        chosen.pop();
    }
}

/// First (lexicographic) `h`-clique `X` of `G` with `chi(N^2(X)) > n`, or
/// `None` if the exhaustive scan over all `h`-cliques finds none.
pub fn find_clique_with_large_n2(
    g: &Graph,
    h: usize,
    n: u32,
    chi: &mut ChiSolver,
) -> Result<Option<VertexSet>, Exhausted> {
    assert!(h >= 1);
    for x in h_cliques_in_subset(g, &g.vertices(), h) {
        let n2 = g.n2(&x).expect("enumerated set is a clique");
        if chi.chi_of_subset(&n2)? > n {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
