//! Exact chromatic number by branch and bound over color classes (saturation
//! selection, lowest-id tie breaks), the degeneracy greedy coloring, and the
//! memoized chi-of-subset solver the lemma engines consume.

use std::collections::HashMap;

use crate::graph::{Coloring, Graph, VertexSet};
use crate::solvers::{Budget, Exhausted, SolveOutcome, SolverLimits};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiWitness {
    pub chi: u32,
    pub certificate: Coloring,
}

/// Partial outcome when the chi search runs out of budget: best-known bounds
/// and the best proper coloring found so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiBounds {
    pub lower: u32,
    pub upper: u32,
    pub best: Option<Coloring>,
}

/// Exact chromatic number with a proper-coloring certificate.
pub fn chromatic_number(g: &Graph, limits: &SolverLimits) -> SolveOutcome<ChiWitness, ChiBounds> {
    let mut budget = Budget::new(limits);
    let n = g.n();
    if n == 0 {
        return SolveOutcome::Exact(ChiWitness {
            chi: 0,
            certificate: Coloring::new(vec![]),
        });
    }
    let lower = clique_lower_bound(g);
    let greedy = greedy_coloring_upper_bound(g);
    let mut best = greedy.clone();
    if lower == best.num_colors {
        return SolveOutcome::Exact(ChiWitness {
            chi: lower,
            certificate: best,
        });
    }
    let mut state = Search {
        g,
        colors: vec![u32::MAX; n],
        best_num: best.num_colors,
        best_assignment: best.assignment.clone(),
        lower,
    };
    let res = state.recurse(0, 0, &mut budget);
    best = Coloring {
        assignment: state.best_assignment,
        num_colors: state.best_num,
    };
    match res {
        Ok(()) => SolveOutcome::Exact(ChiWitness {
            chi: best.num_colors,
            certificate: best,
        }),
        Err(Exhausted { nodes }) => SolveOutcome::Exhausted {
            partial: ChiBounds {
                lower,
                upper: best.num_colors,
                best: Some(best),
            },
            nodes,
        },
    }
}

fn clique_lower_bound(g: &Graph) -> u32 {
    // greedy clique from every start vertex; cheap and deterministic
    let mut best = 0u32;
    for start in 0..g.n() {
        let mut size = 1u32;
        let mut cand = g.neighbors(start).clone();
        while let Some(v) = cand.min() {
            size += 1;
            cand = cand.intersection(g.neighbors(v));
        }
        best = best.max(size);
    }
    best
}

/// First-fit along the degeneracy order (min-degree-last).
pub fn greedy_coloring_upper_bound(g: &Graph) -> Coloring {
    degeneracy_order_and_coloring(g).coloring
}

struct Search<'g> {
    g: &'g Graph,
    colors: Vec<u32>,
    best_num: u32,
    best_assignment: Vec<u32>,
    lower: u32,
}

impl Search<'_> {
    fn recurse(&mut self, colored: usize, used: u32, budget: &mut Budget) -> Result<(), Exhausted> {
        budget.tick()?;
        if used >= self.best_num {
            return Ok(());
        }
        if colored == self.g.n() {
            self.best_num = used;
            self.best_assignment = self.colors.clone();
            return Ok(());
        }
        let v = self.select_vertex();
        let mut neighbor_colors = vec![false; used as usize];
        for u in self.g.neighbors(v).iter() {
            let c = self.colors[u];
            if c != u32::MAX {
                neighbor_colors[c as usize] = true;
            }
        }
        for c in 0..used {
            if neighbor_colors[c as usize] {
                continue;
            }
            self.colors[v] = c;
            self.recurse(colored + 1, used, budget)?;
            self.colors[v] = u32::MAX;
            if self.best_num <= self.lower {
                return Ok(());
            }
        }
        if used + 1 < self.best_num {
            self.colors[v] = used;
            self.recurse(colored + 1, used + 1, budget)?;
            self.colors[v] = u32::MAX;
        }
        Ok(())
    }

    /// Uncolored vertex with maximum saturation degree; ties by lowest id.
    fn select_vertex(&self) -> usize {
        let mut best_v = usize::MAX;
        let mut best_sat = -1i64;
        for v in 0..self.g.n() {
            if self.colors[v] != u32::MAX {
                continue;
            }
            let mut seen = std::collections::BTreeSet::new();
            for u in self.g.neighbors(v).iter() {
                if self.colors[u] != u32::MAX {
                    seen.insert(self.colors[u]);
                }
            }
            let sat = seen.len() as i64;
            if sat > best_sat {
                best_sat = sat;
                best_v = v;
            }
        }
        best_v
    }
}

#[derive(Debug, Clone)]
pub struct DegeneracyColoring {
    pub order: Vec<usize>,
    pub coloring: Coloring,
    pub degeneracy: usize,
}

/// Min-degree peel order (ties by lowest id) and the greedy coloring along
/// its reverse. Uses at most degeneracy + 1 colors.
pub fn degeneracy_order_and_coloring(g: &Graph) -> DegeneracyColoring {
    let n = g.n();
    let mut remaining = VertexSet::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = remaining
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("nonempty");
        degeneracy = degeneracy.max(deg[v]);
        order.push(v);
        remaining.remove(v);
        for u in g.neighbors(v).intersection(&remaining).iter() {
            deg[u] -= 1;
        }
    }
    let mut assignment = vec![0u32; n];
    let mut colored = VertexSet::empty(n);
    for &v in order.iter().rev() {
        let mut used = vec![false; degeneracy + 2];
        for u in g.neighbors(v).intersection(&colored).iter() {
            if (assignment[u] as usize) < used.len() {
                used[assignment[u] as usize] = true;
            }
        }
        assignment[v] = used.iter().position(|&b| !b).unwrap() as u32;
        colored.insert(v);
    }
    DegeneracyColoring {
        order,
        coloring: Coloring::new(assignment),
        degeneracy,
    }
}

/// Memoizing chi-of-subset solver: exact chi keyed by subset bitset with an
/// LRU-style entry cap. The lemma engines recompute chi of thousands of
/// nested subsets, so this sits on the hot path.
pub struct ChiSolver<'g> {
    g: &'g Graph,
    limits: SolverLimits,
    cache: HashMap<VertexSet, (u32, u64)>,
    capacity: usize,
    stamp: u64,
}

impl<'g> ChiSolver<'g> {
    pub fn new(g: &'g Graph, limits: SolverLimits, capacity: usize) -> Self {
        ChiSolver {
            g,
            limits,
            cache: HashMap::new(),
            capacity: capacity.max(16),
            stamp: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn chi_of_subset(&mut self, x: &VertexSet) -> Result<u32, Exhausted> {
        self.stamp += 1;
        if let Some(entry) = self.cache.get_mut(x) {
            entry.1 = self.stamp;
            return Ok(entry.0);
        }
        let (sub, _) = self.g.induced_subgraph(x).expect("subset valid for graph");
        let chi = match chromatic_number(&sub, &self.limits) {
            SolveOutcome::Exact(w) => w.chi,
            SolveOutcome::Exhausted { nodes, .. } => return Err(Exhausted { nodes }),
        };
        if self.cache.len() >= self.capacity {
            self.evict();
        }
        self.cache.insert(x.clone(), (chi, self.stamp));
        Ok(chi)
    }

    /// Exact coloring of `G[x]`, reported in parent ids. Not cached.
    pub fn coloring_of_subset(&mut self, x: &VertexSet) -> Result<(u32, Vec<(usize, u32)>), Exhausted> {
        let (sub, map) = self.g.induced_subgraph(x).expect("subset valid for graph");
        match chromatic_number(&sub, &self.limits) {
            SolveOutcome::Exact(w) => Ok((
                w.chi,
                w.certificate
                    .assignment
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (map[i], c))
                    .collect(),
            )),
            SolveOutcome::Exhausted { nodes, .. } => Err(Exhausted { nodes }),
        }
    }

    fn evict(&mut self) {
        // drop the least recently used quarter
        let mut stamps: Vec<u64> = self.cache.values().map(|&(_, s)| s).collect();
        stamps.sort_unstable();
        let cutoff = stamps[stamps.len() / 4];
        self.cache.retain(|_, &mut (_, s)| s > cutoff);
    }
}
