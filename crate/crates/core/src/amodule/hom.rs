//! Hom spaces via module presentations. A map out of M is pinned down by
//! the images of a minimal generating set, subject to one constraint per
//! relation, so the linear system has g*dim(N) unknowns instead of
//! dim(M)*dim(N). On stripped cores g is small and this is the difference
//! between seconds and hours.

use super::{ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::MatrixGF;

/// Minimal presentation data for a module: a surjection from a free module
/// on `num_gens` generators together with module generators of its kernel.
pub struct Presentation {
    module: ModuleRep,
    /// Indices of standard basis vectors lifting a basis of M/rad M.
    gen_cols: Vec<usize>,
    /// dim x (g * p^r); column t*p^r + a = x^a . e_{gen_cols[t]}.
    spin: MatrixGF,
    spin_pivots: Vec<usize>,
    spin_piv_inv: MatrixGF,
    /// (g * p^r) x s; columns generate ker(spin) as a module.
    kernel_gens: MatrixGF,
}

/// Monomial action operators for all p^r monomials, built by single
/// generator steps: op[a] = x_i . op[a - stride_i].
pub(crate) fn monomial_ops(m: &ModuleRep) -> Vec<MatrixGF> {
    let alg = m.alg();
    let mut ops = Vec::with_capacity(alg.dim());
    ops.push(MatrixGF::identity(m.field(), m.dim()));
    let strides = strides(alg.p(), alg.r());
    for idx in 1..alg.dim() {
        let exps = alg.exponents(idx);
        let i = exps.iter().position(|&e| e > 0).unwrap();
        let parent = idx - strides[i];
        ops.push(m.gen_mat(i).mul(&ops[parent]));
    }
    ops
}

pub(crate) fn strides(p: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| p.pow((r - 1 - i) as u32)).collect()
}

/// Spin seed columns through all monomials: column t*p^r + a of the result
/// is x^a applied to column t of `seed`.
/// Module generators of a submodule given its space basis: the columns that
/// stay independent modulo the radical of the submodule (Nakayama). `gens`
/// are the generator actions of the ambient module.
pub(crate) fn submodule_min_gens(gens: &[MatrixGF], space: &MatrixGF) -> MatrixGF {
    let rad_spans: Vec<MatrixGF> = gens.iter().map(|g| g.mul(space)).collect();
    let mut cat: Vec<&MatrixGF> = rad_spans.iter().collect();
    cat.push(space);
    let (_, pivots) = MatrixGF::hstack(&cat).rref();
    let rad_width = space.cols() * gens.len();
    let cols: Vec<usize> = pivots
        .iter()
        .filter(|&&c| c >= rad_width)
        .map(|&c| c - rad_width)
        .collect();
    space.select_cols(&cols)
}

pub(crate) fn spin(m: &ModuleRep, seed: &MatrixGF) -> MatrixGF {
    let alg = m.alg();
    let pr = alg.dim();
    let g = seed.cols();
    let strides = strides(alg.p(), alg.r());
    let mut blocks: Vec<MatrixGF> = Vec::with_capacity(pr);
    blocks.push(seed.clone());
    for idx in 1..pr {
        let exps = alg.exponents(idx);
        let i = exps.iter().position(|&e| e > 0).unwrap();
        let next = m.gen_mat(i).mul(&blocks[idx - strides[i]]);
        blocks.push(next);
    }
    let mut out = MatrixGF::zeros(m.field(), m.dim(), g * pr);
    for (a, block) in blocks.iter().enumerate() {
        for t in 0..g {
            for row in 0..m.dim() {
                out.set(row, t * pr + a, block.get(row, t));
            }
        }
    }
    out
}

impl Presentation {
    pub fn build(m: &ModuleRep) -> Presentation {
        let f = m.field();
        let alg = m.alg();
        let dim = m.dim();

        let rad = m.radical_basis();
        let id = MatrixGF::identity(f, dim);
        let (_, pivots) = MatrixGF::hstack(&[&rad, &id]).rref();
        let gen_cols: Vec<usize> = pivots
            .iter()
            .filter(|&&c| c >= rad.cols())
            .map(|&c| c - rad.cols())
            .collect();
        let g = gen_cols.len();

        let mut v = MatrixGF::zeros(f, dim, g);
        for (t, &c) in gen_cols.iter().enumerate() {
            v.set(c, t, Scalar::ONE);
        }
        let spin_mat = spin(m, &v);

        let (_, spin_pivots) = spin_mat.rref();
        debug_assert_eq!(spin_pivots.len(), dim, "generators must span");
        let spin_piv_inv = spin_mat
            .select_cols(&spin_pivots)
            .invert()
            .expect("pivot columns are independent");

        let kernel = spin_mat.kernel_basis();
        let free_gens: Vec<MatrixGF> = alg
            .regular_gens()
            .into_iter()
            .map(|x| MatrixGF::identity(f, g).kron(&x))
            .collect();
        let kernel_gens = submodule_min_gens(&free_gens, &kernel);

        Presentation {
            module: m.clone(),
            gen_cols,
            spin: spin_mat,
            spin_pivots,
            spin_piv_inv,
            kernel_gens,
        }
    }

    pub fn num_gens(&self) -> usize {
        self.gen_cols.len()
    }

    pub fn num_relations(&self) -> usize {
        self.kernel_gens.cols()
    }

    pub fn gen_cols(&self) -> &[usize] {
        &self.gen_cols
    }

    /// Matrix of the surjection A^g -> M in the generator-major free basis.
    pub fn spin_matrix(&self) -> &MatrixGF {
        &self.spin
    }

    pub fn kernel_gens(&self) -> &MatrixGF {
        &self.kernel_gens
    }

    /// Constraint matrix for maps into N: one block row per kernel
    /// generator, one block column per module generator; the (s, t) block
    /// is the relation coefficient kappa_{s,t} evaluated in N's action.
    fn constraints(&self, n_ops: &[MatrixGF], n: &ModuleRep) -> MatrixGF {
        let pr = self.module.alg().dim();
        let (g, s, nd) = (self.num_gens(), self.num_relations(), n.dim());
        let mut c = MatrixGF::zeros(n.field(), s * nd, g * nd);
        for ks in 0..s {
            for t in 0..g {
                for a in 0..pr {
                    let coeff = self.kernel_gens.get(t * pr + a, ks);
                    if !coeff.is_zero() {
                        c.add_scaled_block(ks * nd, t * nd, &n_ops[a], coeff);
                    }
                }
            }
        }
        c
    }

    /// The module map sending generator t to column t of `images`.
    /// The images must kill every relation; callers take them from the
    /// kernel of `constraints`, so this holds by construction.
    pub fn map_to(&self, n: &ModuleRep, images: &MatrixGF) -> ModuleMap {
        assert_eq!(images.cols(), self.num_gens());
        assert_eq!(images.rows(), n.dim());
        let t_mat = spin(n, images);
        // F . spin = T, determined on the pivot columns.
        let mat = t_mat
            .select_cols(&self.spin_pivots)
            .mul(&self.spin_piv_inv);
        ModuleMap::new_unchecked(self.module.clone(), n.clone(), mat)
    }
}

/// Basis of Hom_A(M, N), canonical under the row reduction convention.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ModuleMap>> {
    if *m.alg() != *n.alg() {
        return Err(Error::AlgebraMismatch);
    }
    let pres = Presentation::build(m);
    Ok(hom_basis_presented(&pres, n))
}

pub(crate) fn hom_basis_presented(pres: &Presentation, n: &ModuleRep) -> Vec<ModuleMap> {
    let g = pres.num_gens();
    if g == 0 || n.dim() == 0 {
        return Vec::new();
    }
    let n_ops = monomial_ops(n);
    let c = pres.constraints(&n_ops, n);
    let sols = c.kernel_basis();
    let nd = n.dim();
    (0..sols.cols())
        .map(|k| {
            let mut images = MatrixGF::zeros(n.field(), nd, g);
            for t in 0..g {
                for i in 0..nd {
                    images.set(i, t, sols.get(t * nd + i, k));
                }
            }
            pres.map_to(n, &images)
        })
        .collect()
}

/// dim_k Hom_A(M, N) without reconstructing the maps.
pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    if *m.alg() != *n.alg() {
        return Err(Error::AlgebraMismatch);
    }
    let pres = Presentation::build(m);
    let g = pres.num_gens();
    if g == 0 || n.dim() == 0 {
        return Ok(0);
    }
    let n_ops = monomial_ops(n);
    let c = pres.constraints(&n_ops, n);
    Ok(g * n.dim() - c.rank())
}
