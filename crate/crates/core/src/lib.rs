//! Exact computational laboratory for modular representation theory of
//! elementary abelian p-groups, realized as the truncated polynomial algebra
//! `A = k[x_1..x_r]/(x_i^p)` over a finite field `k = GF(p^n)`.
//!
//! The crate provides:
//!
//! * finite field arithmetic with deterministic modulus selection ([`field`]),
//! * dense linear algebra over those fields ([`matrix`]),
//!
//! Everything is exact arithmetic; there are no floats and no tolerances.
//! All randomized searches are driven by explicit seeds, and every report is
//! byte-identical across runs for a fixed seed.

pub mod algebra;
pub mod amodule;
pub mod error;
pub mod experiments;
pub mod field;
pub mod hochschild;
pub mod io;
pub mod matrix;
mod packed;
pub mod resolution;
pub mod rng;
pub mod varieties;

pub use algebra::{verify_hopf_axioms, Algebra, AlgebraCtx, AlgElem, HopfAxiomReport, HopfStructure};
pub use amodule::{
    decompose, hom_basis, is_isomorphic, is_stably_isomorphic, strip_free_summands, tensor,
    DecomposeOutcome, IsoVerdict, IsoWitness, JordanType, ModuleMap, ModuleRep,
};
pub use error::{Error, Result};
pub use experiments::{
    badhopf, magma_replay, tensor_s_experiment, BadHopfReport, MagmaConfig, MagmaReport,
    TensorSConfig, TensorSReport, TrialOutcome,
};
pub use field::{Field, FieldCtx, Scalar};
pub use hochschild::{
    bimodule_resolution, iota, iota_inv, kappa, phi_functor, phi_map, psi_map,
    verify_factorization, BimoduleRep, FactorizationReport, HHClass,
};
pub use io::{
    class_from_str, class_to_string, module_from_str, module_to_string, resolution_to_string,
};
pub use matrix::MatrixGF;
pub use resolution::{
    cocycle_of, l_zeta, lift_cocycle, minimal_resolution, multidegrees, syzygy, theta_action,
    trivial_resolution, ChainMap, CohClass, MultiDegree, Resolution,
};
pub use rng::{random_class, random_class_in_s, random_module, trial_rng};
pub use varieties::{
    annihilates, check_variety_equality, projective_points, rank_variety_points, support_on_s,
    DegreeCoverage, ProjPoint, SplitOutcome, SupportReport, VarietyReport, VarietyRow,
};
