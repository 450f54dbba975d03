//! Exact solvers, structure verifiers, constructive lemma engines, and the
//! symbolic constants calculator behind the chi-boundedness workbench.

pub mod bounds;
pub mod engines;
pub mod formats;
pub mod gen;
pub mod graph;
pub mod solvers;
pub mod structures;
pub mod verify;
