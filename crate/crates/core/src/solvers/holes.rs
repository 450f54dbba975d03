//! Induced-cycle search. Cycles are enumerated as induced paths grown from a
//! canonical start (lowest cycle vertex, then lower of the two second
//! vertices), so each hole is visited exactly once.

use crate::graph::{Graph, Hole, VertexSet};
use crate::solvers::{Budget, Exhausted, SolveOutcome, SolverLimits};

enum Visit {
    Continue,
    Stop,
}

/// Calls `visit` once per induced cycle of length >= 4.
fn for_each_hole(
    g: &Graph,
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]) -> Visit,
) -> Result<bool, Exhausted> {
    let n = g.n();
    let mut path = Vec::new();
    for s in 0..n {
        // every cycle vertex must exceed s; s is the canonical minimum
        let mut low = VertexSet::empty(n);
        for v in 0..=s.min(n.saturating_sub(1)) {
            low.insert(v);
        }
        for v1 in g.neighbors(s).iter() {
            if v1 <= s {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(v1);
            // blocked: path vertices, vertices <= s, and neighbors of interior
            // path vertices (everything but the last); neighbors of s stay
            // open so cycles can close.
            let mut blocked = low.clone();
            blocked.insert(v1);
            if !extend(g, &mut path, &blocked, budget, visit)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]) -> Visit,
) -> Result<bool, Exhausted> {
    budget.tick()?;
    let s = path[0];
    let last = *path.last().unwrap();
    let candidates = g.neighbors(last).difference(blocked);
    for w in candidates.iter() {
        if g.adjacent(w, s) {
            // closing the cycle s-..-last-w; canonical iff path[1] < w
            if path.len() >= 3 && path[1] < w {
                path.push(w);
                let verdict = visit(path);
                path.pop();
                if matches!(verdict, Visit::Stop) {
                    return Ok(false);
                }
            }
            // any longer cycle through both w and s would have the chord w-s
            continue;
        }
        // the current last vertex becomes interior: block its neighbors
        let next_blocked = blocked.union(g.neighbors(last));
        let mut next_blocked = next_blocked;
        next_blocked.insert(w);
        path.push(w);
        let keep_going = extend(g, path, &next_blocked, budget, visit)?;
        path.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some hole of length >= `ell`, or `None` (exhaustive) if there is none.
pub fn find_hole_at_least(
    g: &Graph,
    ell: usize,
    limits: &SolverLimits,
) -> SolveOutcome<Option<Hole>, ()> {
    assert!(ell >= 4, "holes have length at least 4");
    let mut budget = Budget::new(limits);
    let mut found: Option<Hole> = None;
    let res = for_each_hole(g, &mut budget, &mut |cycle| {
        if cycle.len() >= ell {
            found = Some(Hole {
                cycle: cycle.to_vec(),
            });
            Visit::Stop
        } else {
            Visit::Continue
        }
    });
    match res {
        Ok(_) => SolveOutcome::Exact(found),
        Err(Exhausted { nodes }) => match found {
            Some(h) => SolveOutcome::Exact(Some(h)),
            None => SolveOutcome::Exhausted { partial: (), nodes },
        },
    }
}

/// Longest induced cycle, or `None` if the graph has no hole.
pub fn longest_hole(g: &Graph, limits: &SolverLimits) -> SolveOutcome<Option<Hole>, Option<Hole>> {
    let mut budget = Budget::new(limits);
    let mut best: Option<Hole> = None;
    let res = for_each_hole(g, &mut budget, &mut |cycle| {
        if best.as_ref().map_or(true, |b| cycle.len() > b.len()) {
            best = Some(Hole {
                cycle: cycle.to_vec(),
            });
        }
        Visit::Continue
    });
    match res {
        Ok(_) => SolveOutcome::Exact(best),
        Err(Exhausted { nodes }) => SolveOutcome::Exhausted {
            partial: best,
            nodes,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_hole;

    #[test]
    fn find_hole_examples() {
        let c6 = Graph::cycle(6);
        let h = find_hole_at_least(&c6, 5, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .unwrap();
        assert_eq!(h.len(), 6);
        check_hole(&c6, &h).unwrap();

        let k5 = Graph::complete(5);
        assert!(find_hole_at_least(&k5, 4, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .is_none());

        let pet = Graph::petersen();
        let h = find_hole_at_least(&pet, 5, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .unwrap();
        assert!(h.len() >= 5);
        check_hole(&pet, &h).unwrap();
    }

    #[test]
    fn longest_hole_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(longest_hole(&tree, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .is_none());

        let c7 = Graph::cycle(7);
        let h = longest_hole(&c7, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .unwrap();
        assert_eq!(h.len(), 7);

        // Petersen: longest induced cycle has length 6
        let pet = Graph::petersen();
        let h = longest_hole(&pet, &SolverLimits::UNLIMITED)
            .expect_exact("hole")
            .unwrap();
        check_hole(&pet, &h).unwrap();
        assert_eq!(h.len(), brute_force_longest(&pet).unwrap());
    }

    /// Independent oracle: check every vertex subset for being an induced
    /// cycle (all degrees 2, connected, size >= 4).
    fn brute_force_longest(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best = None;
        for mask in 0u32..1 << n {
            let size = mask.count_ones() as usize;
            if size < 4 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let set = VertexSet::from_iter(n, members.iter().copied());
            if members
                .iter()
                .all(|&v| g.neighbors(v).intersection(&set).len() == 2)
                && g.components_of(&set).len() == 1
                && best.map_or(true, |b| size > b)
            {
                best = Some(size);
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_on_small_random() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = 7;
            let p = [0.2, 0.4, 0.6][trial % 3];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let ours = longest_hole(&g, &SolverLimits::UNLIMITED)
                .expect_exact("hole")
                .map(|h| h.len());
            assert_eq!(ours, brute_force_longest(&g), "graph edges {edges:?}");
        }
    }
}
