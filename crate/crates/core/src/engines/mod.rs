//! Executable versions of the constructive proofs: each engine consumes a
//! structure meeting a lemma's hypotheses and emits the object the proof
//! builds, with every pigeonhole and extraction step made deterministic
//! (lowest vertex id; chromatic-number ties by first fiber in order) and
//! recorded in a replayable transcript.

mod cable;
mod decompose;
mod tick;

pub use cable::{
    grow_cable, monochromatic_subset, type1_extract_multicover, type2_construct_hole,
    GrowCableParams,
};
pub use decompose::{longhole_decompose, DecomposeOutcome};
pub use tick::{
    grow_tick, impression_to_hole, stabilize_multicover, ticks_to_impression, GrowTickParams,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::solvers::Exhausted;
use crate::structures::Violation;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input structure invalid: clause {}", .0.clause)]
    Structure(Violation),
    #[error("proof step '{step}' failed: {detail}")]
    StepFailed { step: String, detail: String },
    #[error("audit case: {0}")]
    Audit(String),
    #[error(transparent)]
    Budget(#[from] Exhausted),
}

impl EngineError {
    pub(crate) fn step(step: &str, detail: impl Into<String>) -> EngineError {
        EngineError::StepFailed {
            step: step.to_string(),
            detail: detail.into(),
        }
    }
}

/// Ordered record of an engine run: the proof steps taken, with chosen
/// witnesses, set sizes, and every chromatic number the engine computed (all
/// re-verifiable against the exact solvers), plus which hypotheses were
/// verified outright and which were taken on trust.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Transcript {
    pub steps: Vec<TranscriptStep>,
    pub hypotheses: Vec<Hypothesis>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranscriptStep {
    pub name: String,
    pub witnesses: Vec<usize>,
    pub set_sizes: Vec<usize>,
    pub chi_values: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub verified: bool,
}

impl Transcript {
    pub fn record(&mut self, name: &str, witnesses: &[usize], sizes: &[usize], chis: &[u32]) {
        self.steps.push(TranscriptStep {
            name: name.to_string(),
            witnesses: witnesses.to_vec(),
            set_sizes: sizes.to_vec(),
            chi_values: chis.to_vec(),
        });
    }

    pub fn hypothesis(&mut self, name: &str, verified: bool) {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            verified,
        });
    }
}
