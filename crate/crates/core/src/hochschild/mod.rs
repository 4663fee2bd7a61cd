//! The algebra as a module over its tensor square, and the bridge between
//! cohomology of the trivial module and Hochschild cohomology.
//!
//! The bimodule resolution follows the same multidegree pattern as the
//! resolution of the trivial module, stepping by the difference elements
//! y_i - z_i instead of the variables. Each coalgebra structure turns a
//! module into a bimodule (phi); a chain map kappa compares the two
//! resolutions. Pushing a cocycle through kappa produces an explicit
//! Hochschild class, and contracting a Hochschild class against a module
//! (psi) lands back in maps on syzygies, which is where the two coalgebra
//! structures can be compared.

mod map;

pub use map::{phi_map, psi_map, verify_factorization, FactorizationReport, HHClass};

use crate::algebra::{enveloping, AlgElem, Algebra, HopfStructure};
use crate::amodule::{tensor, ModuleRep};
use crate::error::Result;
use crate::field::Scalar;
use crate::matrix::MatrixGF;
use crate::resolution::{
    koszul_resolution, multidegrees, trivial_resolution, ChainMap, MultiDegree, Resolution,
};

/// A module over the enveloping context: 2r generators, the y bank then
/// the z bank.
pub type BimoduleRep = ModuleRep;

/// The algebra as a bimodule over its tensor square; both banks act by
/// multiplication.
fn diagonal_bimodule(alg: &Algebra, env: &Algebra) -> ModuleRep {
    let x: Vec<MatrixGF> = (0..alg.r()).map(|i| alg.x_matrix(i)).collect();
    let gens = x.iter().cloned().chain(x.iter().cloned()).collect();
    ModuleRep::from_gens_unchecked(env, gens)
}

/// Free resolution of the algebra over its tensor square: one summand per
/// multidegree, slot i stepping by y_i - z_i (odd) or (y_i - z_i)^{p-1}
/// (even), augmented by the multiplication map. Every differential entry
/// multiplies to zero in the algebra, so any functional with values in the
/// algebra is automatically a cocycle.
pub fn bimodule_resolution(alg: &Algebra, d_max: usize) -> Result<Resolution> {
    let (env, mu) = enveloping(alg)?;
    let r = alg.r();
    let p = alg.p();
    let u: Vec<AlgElem> = (0..r).map(|i| env.sub(&env.x(i), &env.x(r + i))).collect();
    let odd: Vec<MatrixGF> = u.iter().map(|ui| env.mult_matrix(ui)).collect();
    let even: Vec<MatrixGF> = u
        .iter()
        .map(|ui| env.mult_matrix(&env.pow(ui, p - 1)))
        .collect();
    let target = diagonal_bimodule(alg, &env);
    Ok(koszul_resolution(&env, r, &odd, &even, target, mu, d_max))
}

/// The bimodule a coalgebra structure puts on M tensor A: the y bank acts
/// diagonally through the comultiplication, the z bank on the right factor
/// alone. Sends free modules to free bimodules and the trivial module to
/// the diagonal bimodule.
pub fn phi_functor(h: HopfStructure, m: &ModuleRep) -> Result<ModuleRep> {
    let alg = m.alg().clone();
    let (env, _) = enveloping(&alg)?;
    let diag = tensor(h, m, &ModuleRep::free(&alg, 1))?;
    let idm = MatrixGF::identity(m.field(), m.dim());
    let mut gens: Vec<MatrixGF> = diag.gens().to_vec();
    for i in 0..alg.r() {
        gens.push(idm.kron(&alg.x_matrix(i)));
    }
    ModuleRep::new(&env, gens)
}

/// The bimodule map from the tensor square onto phi of the free rank-one
/// module, determined by 1 -> 1 (x) 1: the column at y^a z^b holds
/// Delta(x^a) * (1 (x) x^b), the product taken slotwise. An isomorphism,
/// inverted by the antipode formula in `iota_inv`.
pub fn iota(h: HopfStructure, alg: &Algebra) -> Result<MatrixGF> {
    let (env, _) = enveloping(alg)?;
    let delta = alg.comult_matrix(h, &env);
    let r = alg.r();
    let pr = alg.dim();
    let pe = env.dim();
    let mut out = MatrixGF::zeros(alg.field(), pe, pe);
    for a in 0..pr {
        let da = env.from_coords((0..pe).map(|k| delta.get(k, a)).collect());
        for b in 0..pr {
            let mut exps = vec![0u8; 2 * r];
            exps[r..].copy_from_slice(&alg.exponents(b));
            let prod = env.mul(&da, &env.monomial(&exps));
            for (k, &c) in prod.coords().iter().enumerate() {
                if !c.is_zero() {
                    out.set(k, a * pr + b, c);
                }
            }
        }
    }
    Ok(out)
}

/// Inverse of `iota`: x^a (x) x^b goes to the sum over Delta(x^a) of the
/// left leg in the y bank times the antipode of the right leg multiplied
/// into x^b in the z bank.
pub fn iota_inv(h: HopfStructure, alg: &Algebra) -> Result<MatrixGF> {
    let (env, _) = enveloping(alg)?;
    let delta = alg.comult_matrix(h, &env);
    let sig = alg.antipode_matrix(h);
    let f = alg.field();
    let pr = alg.dim();
    let pe = env.dim();
    let mons: Vec<AlgElem> = (0..pr).map(|b| alg.monomial(&alg.exponents(b))).collect();
    let prods: Vec<Vec<AlgElem>> = (0..pr)
        .map(|d| {
            let sd = alg.from_coords((0..pr).map(|k| sig.get(k, d)).collect());
            mons.iter().map(|mb| alg.mul(&sd, mb)).collect()
        })
        .collect();
    let mut out = MatrixGF::zeros(f, pe, pe);
    for a in 0..pr {
        for k in 0..pe {
            let coef = delta.get(k, a);
            if coef.is_zero() {
                continue;
            }
            let (ci, di) = (k / pr, k % pr);
            for b in 0..pr {
                for (e, &ge) in prods[di][b].coords().iter().enumerate() {
                    if !ge.is_zero() {
                        let (row, col) = (ci * pr + e, a * pr + b);
                        out.set(row, col, f.add(out.get(row, col), f.mul(coef, ge)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Generator weight of the comparison map at multidegree j: the group-like
/// structure inserts one factor 1 + z_i per odd slot; the primitive
/// structure needs none, its bimodule resolution already being phi of the
/// trivial module's resolution on the nose.
fn kappa_weight(h: HopfStructure, alg: &Algebra, env: &Algebra, j: &MultiDegree) -> AlgElem {
    let mut w = env.one();
    if h == HopfStructure::Gr {
        for (i, &ji) in j.0.iter().enumerate() {
            if ji % 2 == 1 {
                let mut e = vec![0u8; 2 * alg.r()];
                e[alg.r() + i] = 1;
                w = env.mul(&w, &env.add(&env.one(), &env.monomial(&e)));
            }
        }
    }
    w
}

/// Phi applied to the resolution of the trivial module: same ranks over
/// the enveloping context, differentials tensored with the identity of
/// the right factor, augmentation reading off the left counit. The free
/// summands carry the phi coordinates, not the enveloping monomial basis,
/// so only the ranks and differentials of this resolution are meaningful.
fn phi_of_trivial(h: HopfStructure, alg: &Algebra, env: &Algebra, d_max: usize) -> Resolution {
    let _ = h;
    let p_res = trivial_resolution(alg, d_max);
    let idr = MatrixGF::identity(alg.field(), alg.dim());
    let diffs = (1..=d_max).map(|d| p_res.diff(d).kron(&idr)).collect();
    let augmentation = alg.counit_matrix().kron(&idr);
    let target = diagonal_bimodule(alg, env);
    Resolution::from_parts(
        env.clone(),
        target,
        p_res.ranks().to_vec(),
        diffs,
        augmentation,
    )
}

/// The comparison chain map from the bimodule resolution to phi of the
/// trivial module's resolution, block diagonal in each degree: the summand
/// at multidegree j maps by iota after multiplying by the weight. The key
/// identity behind the squares is (y - z)(1 (x) 1) = (1 + z)(x (x) 1) for
/// the group-like comultiplication, which a (p-1)-th power turns into the
/// even steps because 1 + z has multiplicative order p.
pub fn kappa(h: HopfStructure, alg: &Algebra, d_max: usize) -> Result<ChainMap> {
    let (env, _) = enveloping(alg)?;
    let src = bimodule_resolution(alg, d_max)?;
    let dst = phi_of_trivial(h, alg, &env, d_max);
    let io = iota(h, alg)?;
    let pe = env.dim();
    let mats = (0..=d_max)
        .map(|d| {
            let mds = multidegrees(alg.r(), d);
            let mut m = MatrixGF::zeros(alg.field(), mds.len() * pe, mds.len() * pe);
            for (s, j) in mds.iter().enumerate() {
                let w = kappa_weight(h, alg, &env, j);
                let block = io.mul(&env.mult_matrix(&w));
                m.add_scaled_block(s * pe, s * pe, &block, Scalar::ONE);
            }
            m
        })
        .collect();
    Ok(ChainMap::from_parts(src, dst, 0, mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;
    use crate::amodule::{is_isomorphic, ModuleRep};
    use crate::field::FieldCtx;

    fn alg(p: u32, n: usize, r: usize) -> Algebra {
        let f = FieldCtx::new(p, n).unwrap();
        AlgebraCtx::new(&f, r).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn bimodule_resolution_is_exact_and_minimal() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let a = alg(p, 1, r);
            let q = bimodule_resolution(&a, 3).unwrap();
            assert_eq!(q.alg().r(), 2 * r);
            assert_eq!(q.target().dim(), a.dim());
            for d in 0..=3 {
                assert_eq!(q.rank(d), binom(d + r - 1, r - 1));
            }
            assert!(q.is_exact());
            assert!(q.is_minimal());
        }

        // One variable: differentials alternate y - z and (y - z)^{p-1}.
        let a = alg(3, 1, 1);
        let q = bimodule_resolution(&a, 3).unwrap();
        let env = q.alg();
        let u = env.sub(&env.x(0), &env.x(1));
        assert_eq!(q.diff(1), &env.mult_matrix(&u));
        assert_eq!(q.diff(2), &env.mult_matrix(&env.pow(&u, 2)));
        assert_eq!(q.diff(3), &env.mult_matrix(&u));
    }

    #[test]
    fn phi_sends_trivial_to_diagonal_and_free_to_free() {
        for (p, r) in [(2, 1), (3, 1), (2, 2)] {
            let a = alg(p, 1, r);
            let q = bimodule_resolution(&a, 0).unwrap();
            let env = q.alg();
            for h in HopfStructure::BOTH {
                let phi_k = phi_functor(h, &ModuleRep::trivial(&a)).unwrap();
                // The trivial module contributes nothing to the diagonal
                // action, so phi of it is the diagonal bimodule exactly.
                assert_eq!(&phi_k, q.target());

                let phi_a = phi_functor(h, &ModuleRep::free(&a, 1)).unwrap();
                assert_eq!(phi_a.dim(), env.dim());
                let verdict = is_isomorphic(&phi_a, &ModuleRep::free(env, 1)).unwrap();
                assert!(verdict.is_yes(), "phi of the free module should be free");
            }
        }
    }

    #[test]
    fn iota_is_an_isomorphism() {
        for (p, n, r) in [(2, 1, 1), (3, 1, 1), (5, 1, 1), (2, 2, 2), (3, 1, 2), (5, 1, 2)] {
            let a = alg(p, n, r);
            let pe = a.dim() * a.dim();
            for h in HopfStructure::BOTH {
                let io = iota(h, &a).unwrap();
                let inv = iota_inv(h, &a).unwrap();
                let id = MatrixGF::identity(a.field(), pe);
                assert_eq!(io.mul(&inv), id, "p={p} r={r} {h}");
                assert_eq!(inv.mul(&io), id, "p={p} r={r} {h}");
            }
        }

        // One variable, p = 3: the group-like iota sends y to the full
        // diagonal x(x)1 + x(x)x + 1(x)x, the primitive one drops the
        // mixed term; both send z to 1(x)x.
        let a = alg(3, 1, 1);
        let pr = a.dim();
        let support = |m: &MatrixGF, col: usize| -> Vec<usize> {
            (0..pr * pr).filter(|&k| !m.get(k, col).is_zero()).collect()
        };
        let gr = iota(HopfStructure::Gr, &a).unwrap();
        assert_eq!(support(&gr, pr), vec![1, pr, pr + 1]);
        assert_eq!(support(&gr, 1), vec![1]);
        let lie = iota(HopfStructure::Lie, &a).unwrap();
        assert_eq!(support(&lie, pr), vec![1, pr]);
        assert_eq!(support(&lie, 1), vec![1]);
    }

    #[test]
    fn kappa_is_a_chain_map() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let a = alg(p, 1, r);
            for h in HopfStructure::BOTH {
                let k = kappa(h, &a, 4).unwrap();
                assert!(k.verify(), "p={p} r={r} {h}");
                // Augmentation square: the counit readoff after kappa_0 is
                // the multiplication map.
                let top = k.dst().augmentation().mul(k.mat(0));
                assert_eq!(&top, k.src().augmentation(), "p={p} r={r} {h}");
                // Blocks are invertible, so kappa is an isomorphism of
                // complexes degree by degree.
                for d in 0..=4 {
                    assert_eq!(k.mat(d).rank(), k.mat(d).rows());
                }
            }
        }
    }
}
