//! Seeded experiment harnesses behind the CLI verbs: the GF(4) tensor-square
//! contrast, the subring tensor-commutation trials, and the random-class
//! isomorphism survey. Every run is a pure function of its config and seed;
//! trials derive per-index RNG streams, so the parallel runs assemble the
//! same report as a serial pass.

mod badhopf;
mod magma;
mod tensor_s;

pub use badhopf::{badhopf, BadHopfReport};
pub use magma::{magma_replay, MagmaConfig, MagmaReport, MagmaRow};
pub use tensor_s::{tensor_s_experiment, TensorSConfig, TensorSReport, TensorSRow};

use crate::amodule::IsoVerdict;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrialOutcome {
    Yes,
    No,
    Inconclusive,
}

impl TrialOutcome {
    pub fn of(v: &IsoVerdict) -> TrialOutcome {
        match v {
            IsoVerdict::Yes(_) => TrialOutcome::Yes,
            IsoVerdict::No(_) => TrialOutcome::No,
            IsoVerdict::Inconclusive(_) => TrialOutcome::Inconclusive,
        }
    }
}
