//! The kernel modules L_zeta and the action of cohomology on modules.

use super::cohomology::{cocycle_of, CohClass};
use super::{minimal_resolution, trivial_resolution};
use crate::algebra::HopfStructure;
use crate::amodule::hom::{monomial_ops, spin};
use crate::amodule::{tensor, ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::matrix::MatrixGF;

/// Kernel of the functional a nonzero degree-d class induces on the d-th
/// syzygy of the trivial module. The representing cocycle lives on the
/// degree-d part of the tensor resolution and kills the kernel of the
/// differential (it lies in the radical), so it descends to the syzygy;
/// the syzygy basis is the pivot columns of the differential, whose
/// preimages are standard basis vectors, making the descent a column
/// selection. dim = dim syzygy - 1.
pub fn l_zeta(c: &CohClass) -> Result<ModuleRep> {
    if c.degree() == 0 {
        return Err(Error::DegreeZeroClass);
    }
    if c.is_zero() {
        return Err(Error::ZeroClass("the kernel module construction"));
    }
    let alg = c.alg();
    let d = c.degree();
    let res = trivial_resolution(alg, d);
    let (basis, piv) = res.diff(d).image_basis();
    let omega = res.free_module(d - 1).submodule(&basis);
    let functional = cocycle_of(c).select_cols(&piv);
    Ok(omega.submodule(&functional.kernel_basis()))
}

/// The map on the d-th syzygy of M representing the image of a degree-d
/// class under the tensor action. The trivial module's resolution P is
/// tensored with M (a resolution of M by free modules, since free factors
/// absorb tensoring); the identity of M lifts to a comparison chain map
/// from M's minimal resolution Q into it; composing with the tensored
/// cocycle gives a map Q_d -> M that kills ker(Q_d -> Omega^d) and so
/// restricts to the syzygy along the pivot columns.
pub fn theta_action(h: HopfStructure, c: &CohClass, m: &ModuleRep) -> Result<ModuleMap> {
    if c.alg() != m.alg() {
        return Err(Error::AlgebraMismatch);
    }
    if m.is_zero() {
        return Err(Error::Unsupported(
            "the cohomology action needs a nonzero module".into(),
        ));
    }
    let alg = c.alg();
    let f = alg.field();
    let pr = alg.dim();
    let n = c.degree();

    if n == 0 {
        let coeff = c.support().next().map(|(_, v)| v);
        let mut mat = MatrixGF::zeros(f, m.dim(), m.dim());
        if let Some(v) = coeff {
            for i in 0..m.dim() {
                mat.set(i, i, v);
            }
        }
        return ModuleMap::new(m.clone(), m.clone(), mat);
    }

    let p_res = trivial_resolution(alg, n);
    let q_res = minimal_resolution(m, n);
    let id_m = MatrixGF::identity(f, m.dim());

    // Comparison lift of the identity, degree by degree. Base: the tensored
    // augmentation is surjective, so the generator images of Q_0 have
    // preimages; the free-variables-zero solve keeps everything canonical.
    let aug_t = p_res.augmentation().kron(&id_m);
    let gencols: Vec<usize> = (0..q_res.rank(0)).map(|s| s * pr).collect();
    let seeds = aug_t
        .solve_matrix(&q_res.augmentation().select_cols(&gencols))
        .expect("tensored augmentation is surjective");
    let t0 = tensor(h, &p_res.free_module(0), m)?;
    let mut phi = spin(&t0, &seeds);

    for i in 1..=n {
        let d_t = p_res.diff(i).kron(&id_m);
        let w_full = phi.mul(q_res.diff(i));
        let gencols: Vec<usize> = (0..q_res.rank(i)).map(|s| s * pr).collect();
        let seeds = d_t
            .solve_matrix(&w_full.select_cols(&gencols))
            .expect("tensored resolution is exact");
        let t_i = tensor(h, &p_res.free_module(i), m)?;
        phi = spin(&t_i, &seeds);
    }

    let g = cocycle_of(c).kron(&id_m).mul(&phi);
    let (basis, piv) = q_res.diff(n).image_basis();
    let omega = q_res.free_module(n - 1).submodule(&basis);
    ModuleMap::new(omega, m.clone(), g.select_cols(&piv))
}

/// Whether the map `g`, defined on the submodule of `ambient` spanned by
/// the columns of `incl`, extends to an A-linear map on all of `ambient`
/// (assumed free, generators at the p^r-strided coordinates). Maps on a
/// syzygy extend exactly when they factor through a projective, so this
/// decides equality of the classes two syzygy-level representatives induce.
pub(crate) fn extends_to_ambient(
    ambient: &ModuleRep,
    incl: &MatrixGF,
    dst: &ModuleRep,
    g: &MatrixGF,
) -> bool {
    let f = dst.field();
    let pr = ambient.alg().dim();
    assert_eq!(ambient.dim() % pr, 0, "ambient module must be free");
    let q = ambient.dim() / pr;
    let (dd, w) = (dst.dim(), incl.cols());
    assert_eq!(g.cols(), w);
    assert_eq!(g.rows(), dd);

    let ops = monomial_ops(dst);
    let mut system = MatrixGF::zeros(f, dd * w, dd * q);
    for col in 0..w {
        for t in 0..q {
            for e in 0..pr {
                let coeff = incl.get(t * pr + e, col);
                if !coeff.is_zero() {
                    system.add_scaled_block(col * dd, t * dd, &ops[e], coeff);
                }
            }
        }
    }
    let mut rhs = MatrixGF::zeros(f, dd * w, 1);
    for col in 0..w {
        for i in 0..dd {
            rhs.set(col * dd + i, 0, g.get(i, col));
        }
    }
    system.solve_matrix(&rhs).is_some()
}
