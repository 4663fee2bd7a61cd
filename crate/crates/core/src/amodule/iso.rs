//! Isomorphism testing. Cheap invariants first (any mismatch is a
//! certificate of non-isomorphism), then free summands come off, then a
//! search for an invertible element of Hom(core, core'). The search can in
//! principle exhaust its budget, so there is an explicit Inconclusive
//! verdict; a Yes always carries an invertible intertwiner and a No always
//! names the invariant that separated the modules.

use super::hom::{hom_basis, hom_dim};
use super::strip::strip_free_summands;
use super::{ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::matrix::MatrixGF;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub enum IsoWitness {
    Identity,
    Map(ModuleMap),
}

pub enum IsoVerdict {
    Yes(IsoWitness),
    No(String),
    Inconclusive(String),
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }

    pub fn describe(&self) -> String {
        match self {
            IsoVerdict::Yes(IsoWitness::Identity) => "yes (identical matrices)".into(),
            IsoVerdict::Yes(IsoWitness::Map(_)) => "yes".into(),
            IsoVerdict::No(why) => format!("no ({why})"),
            IsoVerdict::Inconclusive(why) => format!("inconclusive ({why})"),
        }
    }
}

const DEFAULT_TRIALS: usize = 128;
const DEFAULT_SEED: u64 = 0x1505;

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED, DEFAULT_TRIALS)
}

/// Stable isomorphism: compare after stripping free summands. The witness,
/// if any, connects the two cores.
pub fn is_stably_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    if *m.alg() != *n.alg() {
        return Err(Error::AlgebraMismatch);
    }
    let (core_m, _, _) = strip_free_summands(m);
    let (core_n, _, _) = strip_free_summands(n);
    is_isomorphic(&core_m, &core_n)
}

pub fn is_isomorphic_seeded(
    m: &ModuleRep,
    n: &ModuleRep,
    seed: u64,
    trials: usize,
) -> Result<IsoVerdict> {
    if *m.alg() != *n.alg() {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(format!("dimension {} vs {}", m.dim(), n.dim())));
    }
    if m == n {
        return Ok(IsoVerdict::Yes(IsoWitness::Identity));
    }
    if let Some(why) = invariant_mismatch(m, n) {
        return Ok(IsoVerdict::No(why));
    }

    let (core_m, free_m, wit_m) = strip_free_summands(m);
    let (core_n, free_n, wit_n) = strip_free_summands(n);
    if free_m != free_n {
        return Ok(IsoVerdict::No(format!("free rank {free_m} vs {free_n}")));
    }

    if core_m.dim() == 0 {
        // Both free of the same rank.
        let g = MatrixGF::identity(m.field(), 0);
        let mat = assemble_through_cores(m, n, &wit_m, &wit_n, &g, free_m);
        return Ok(IsoVerdict::Yes(IsoWitness::Map(ModuleMap::new_unchecked(
            m.clone(),
            n.clone(),
            mat,
        ))));
    }

    let end_m = hom_dim(&core_m, &core_m)?;
    let end_n = hom_dim(&core_n, &core_n)?;
    if end_m != end_n {
        return Ok(IsoVerdict::No(format!(
            "dim End of cores {end_m} vs {end_n}"
        )));
    }
    let basis = hom_basis(&core_m, &core_n)?;
    if basis.len() != end_m {
        return Ok(IsoVerdict::No(format!(
            "dim Hom(core, core') = {} but dim End(core) = {end_m}",
            basis.len()
        )));
    }

    match search_invertible(&basis, seed, trials) {
        Some(g) => {
            let mat = assemble_through_cores(m, n, &wit_m, &wit_n, &g, free_m);
            Ok(IsoVerdict::Yes(IsoWitness::Map(ModuleMap::new_unchecked(
                m.clone(),
                n.clone(),
                mat,
            ))))
        }
        None => Ok(IsoVerdict::Inconclusive(format!(
            "no invertible map among {trials} random combinations of a {}-dimensional hom space",
            basis.len()
        ))),
    }
}

/// Invariants preserved by any isomorphism; a difference certifies No.
fn invariant_mismatch(m: &ModuleRep, n: &ModuleRep) -> Option<String> {
    let p = m.alg().p();
    for i in 0..m.alg().r() {
        let mut pm = MatrixGF::identity(m.field(), m.dim());
        let mut pn = MatrixGF::identity(n.field(), n.dim());
        for t in 1..p {
            pm = pm.mul(m.gen_mat(i));
            pn = pn.mul(n.gen_mat(i));
            let (rm, rn) = (pm.rank(), pn.rank());
            if rm != rn {
                return Some(format!(
                    "rank of generator {} to the power {t}: {rm} vs {rn}",
                    i + 1
                ));
            }
        }
    }
    let (rad_m, rad_n) = (m.radical_profile(), n.radical_profile());
    if rad_m != rad_n {
        return Some(format!(
            "radical filtration {rad_m:?} vs {rad_n:?}"
        ));
    }
    None
}

/// Search the span of a hom basis for an invertible element: every basis
/// element first, then seeded random combinations.
fn search_invertible(basis: &[ModuleMap], seed: u64, trials: usize) -> Option<MatrixGF> {
    if basis.is_empty() {
        return None;
    }
    let dim = basis[0].mat.rows();
    for b in basis {
        if b.mat.rank() == dim {
            return Some(b.mat.clone());
        }
    }
    let field = basis[0].src.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut cand = MatrixGF::zeros(&field, dim, dim);
        for b in basis {
            let c = field.sample(&mut rng);
            if !c.is_zero() {
                cand = cand.add(&b.mat.scale(c));
            }
        }
        if cand.rank() == dim {
            return Some(cand);
        }
    }
    None
}

/// Glue a core isomorphism g into a full isomorphism m -> n through the
/// splittings m = core_m + A^f and n = core_n + A^f.
fn assemble_through_cores(
    m: &ModuleRep,
    n: &ModuleRep,
    wit_m: &super::strip::StripWitness,
    wit_n: &super::strip::StripWitness,
    g: &MatrixGF,
    free_rank: usize,
) -> MatrixGF {
    let f = m.field();
    let phi_m = wit_m.assembled_iso(m);
    let phi_n = wit_n.assembled_iso(n);
    let free_dim = free_rank * m.alg().dim();
    let core_dim = g.rows();
    let mut block = MatrixGF::zeros(f, core_dim + free_dim, core_dim + free_dim);
    block.add_scaled_block(0, 0, g, crate::field::Scalar::ONE);
    let id = MatrixGF::identity(f, free_dim);
    block.add_scaled_block(core_dim, core_dim, &id, crate::field::Scalar::ONE);
    phi_n
        .mat
        .mul(&block)
        .mul(&phi_m.mat.invert().expect("splitting is invertible"))
}
