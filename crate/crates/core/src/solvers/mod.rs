//! Exact desk-scale solvers: omega, chi, induced-cycle search, degeneracy
//! colorings, chordality, and the clique-with-large-N^2 search. Budget
//! exhaustion is a first-class outcome carrying the best bounds found.

mod chordal;
mod clique;
mod coloring;
mod holes;

pub use chordal::is_chordal;
pub use clique::{find_clique_with_large_n2, find_k_clique_in_subset, h_cliques_in_subset, omega, CliqueWitness};
pub use coloring::{
    chromatic_number, degeneracy_order_and_coloring, greedy_coloring_upper_bound, ChiBounds,
    ChiSolver, ChiWitness, DegeneracyColoring,
};
pub use holes::{find_hole_at_least, longest_hole};

use std::time::{Duration, Instant};

use thiserror::Error;

/// Optional caps on a solver invocation. Exceeding a budget yields a
/// distinguishable "exhausted" outcome, never a wrong answer.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolverLimits {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl SolverLimits {
    pub const UNLIMITED: SolverLimits = SolverLimits {
        node_budget: None,
        time_budget: None,
    };

    pub fn nodes(n: u64) -> Self {
        SolverLimits {
            node_budget: Some(n),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("solver budget exhausted after {nodes} search nodes")]
pub struct Exhausted {
    pub nodes: u64,
}

/// Either an exact answer or an explicit budget-exhausted outcome with
/// whatever partial information the search had accumulated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome<T, P = T> {
    Exact(T),
    Exhausted { partial: P, nodes: u64 },
}

impl<T, P> SolveOutcome<T, P> {
    pub fn exact(self) -> Option<T> {
        match self {
            SolveOutcome::Exact(t) => Some(t),
            SolveOutcome::Exhausted { .. } => None,
        }
    }

    pub fn expect_exact(self, what: &str) -> T {
        match self {
            SolveOutcome::Exact(t) => t,
            SolveOutcome::Exhausted { nodes, .. } => {
                panic!("{what}: budget exhausted after {nodes} nodes")
            }
        }
    }
}

/// Shared search-node ticker. Time is only consulted every 1024 nodes.
pub(crate) struct Budget {
    nodes: u64,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
}

impl Budget {
    pub(crate) fn new(limits: &SolverLimits) -> Self {
        Budget {
            nodes: 0,
            node_budget: limits.node_budget,
            deadline: limits.time_budget.map(|d| Instant::now() + d),
        }
    }

    pub(crate) fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if let Some(cap) = self.node_budget {
            if self.nodes > cap {
                return Err(Exhausted { nodes: self.nodes });
            }
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Exhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}
