//! Free summand removal in one pass. The socle word w = (x_1...x_r)^{p-1}
//! annihilates every module with no free summand, and on A itself has rank
//! one, so rank(w on M) counts free summands exactly. Preimages of a basis
//! of im(w) generate a free submodule, and an explicit A-linear projection
//! onto it splits M as free plus core.

use super::hom::spin;
use super::{ModuleMap, ModuleRep};
use crate::field::Scalar;
use crate::matrix::MatrixGF;

pub struct StripWitness {
    /// dim x f; columns generate the free summand A^f.
    pub free_gens: MatrixGF,
    /// dim x core_dim; basis of the complement, the kernel of `projection`.
    pub core_basis: MatrixGF,
    /// A-linear idempotent with image the free part.
    pub projection: MatrixGF,
}

impl StripWitness {
    /// Assembled isomorphism core + A^f -> M for checking the splitting.
    pub fn assembled_iso(&self, m: &ModuleRep) -> ModuleMap {
        let core = m.submodule(&self.core_basis);
        let free = ModuleRep::free(m.alg(), self.free_gens.cols());
        let src = core.direct_sum(&free);
        let embed = spin(m, &self.free_gens);
        let mat = MatrixGF::hstack(&[&self.core_basis, &embed]);
        ModuleMap::new_unchecked(src, m.clone(), mat)
    }
}

/// Split off every free summand: returns the core (no free summands),
/// the free rank, and the splitting data.
pub fn strip_free_summands(m: &ModuleRep) -> (ModuleRep, usize, StripWitness) {
    let f = m.field();
    let alg = m.alg();
    let (p, dim, pr) = (alg.p(), m.dim(), alg.dim());

    let mut w = MatrixGF::identity(f, dim);
    for i in 0..alg.r() {
        for _ in 0..p - 1 {
            w = m.gen_mat(i).mul(&w);
        }
    }

    let (socle_img, piv) = w.image_basis();
    let free_rank = piv.len();
    if free_rank == 0 {
        let witness = StripWitness {
            free_gens: MatrixGF::zeros(f, dim, 0),
            core_basis: MatrixGF::identity(f, dim),
            projection: MatrixGF::zeros(f, dim, dim),
        };
        return (m.clone(), 0, witness);
    }

    // v_t = e_{piv[t]} generates a copy of A: anything annihilating v_t
    // would also kill w.v_t, which is a basis vector of im(w).
    let mut v = MatrixGF::zeros(f, dim, free_rank);
    for (t, &c) in piv.iter().enumerate() {
        v.set(c, t, Scalar::ONE);
    }

    // Functionals dual to the socle basis: d . socle_img = identity.
    let d = socle_img.left_inverse().expect("image basis has full column rank");

    // pi = sum_a (x^a v) (d x^{p-1-a}); complementary monomial index is
    // pr-1-a. A-linear for any choice of d; on the free part it acts as
    // identity plus degree-raising terms, so pi^(p^s) with p^s > r(p-1) is
    // an A-linear idempotent onto the free part. Working with the
    // idempotent keeps the elimination cost proportional to the core.
    let left = spin(m, &v);
    let mut right_blocks: Vec<MatrixGF> = Vec::with_capacity(pr);
    right_blocks.push(d);
    let strides = super::hom::strides(p, alg.r());
    for idx in 1..pr {
        let exps = alg.exponents(idx);
        let i = exps.iter().position(|&e| e > 0).unwrap();
        let next = right_blocks[idx - strides[i]].mul(m.gen_mat(i));
        right_blocks.push(next);
    }
    let mut pi = MatrixGF::zeros(f, dim, dim);
    for a in 0..pr {
        let mut left_a = MatrixGF::zeros(f, dim, free_rank);
        for row in 0..dim {
            for t in 0..free_rank {
                left_a.set(row, t, left.get(row, t * pr + a));
            }
        }
        pi = pi.add(&left_a.mul(&right_blocks[pr - 1 - a]));
    }
    let mut e = 1u64;
    while (e as usize) < alg.r() * (p - 1) + 1 {
        e *= p as u64;
    }
    let projection = pi.pow(e);

    let complement = MatrixGF::identity(f, dim).sub(&projection);
    let (core_basis, _) = complement.image_basis();
    let core = m.submodule(&core_basis);
    let witness = StripWitness {
        free_gens: v,
        core_basis,
        projection,
    };
    (core, free_rank, witness)
}
