//! Finite dimensional modules over the truncated algebra, given as r
//! commuting p-nilpotent matrices; tensor products under either Hopf
//! structure, hom spaces, free summand stripping, isomorphism testing,
//! direct sum decomposition, and restriction to shifted one-parameter
//! subalgebras.

mod decompose;
pub(crate) mod hom;
mod iso;
mod strip;

pub use decompose::{decompose, DecomposeOutcome};
pub use hom::{hom_basis, hom_dim, Presentation};
pub use iso::{is_isomorphic, is_stably_isomorphic, IsoVerdict, IsoWitness};
pub use strip::{strip_free_summands, StripWitness};

use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::MatrixGF;
use std::fmt;
use std::sync::Arc;

/// A-module on k^dim: generator i acts by `gens[i]`. Generators commute and
/// are p-nilpotent; `new` validates this, internal constructions that
/// guarantee it structurally use `from_gens_unchecked`.
#[derive(Clone)]
pub struct ModuleRep {
    alg: Algebra,
    dim: usize,
    gens: Arc<Vec<MatrixGF>>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        *self.alg == *other.alg && self.dim == other.dim && *self.gens == *other.gens
    }
}
impl Eq for ModuleRep {}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleRep(dim {}, r {}, GF({}))",
            self.dim,
            self.alg.r(),
            self.field().q()
        )
    }
}

impl ModuleRep {
    pub fn new(alg: &Algebra, gens: Vec<MatrixGF>) -> Result<ModuleRep> {
        if gens.len() != alg.r() {
            return Err(Error::WrongGeneratorCount {
                expected: alg.r(),
                got: gens.len(),
            });
        }
        let dim = gens.first().map_or(0, MatrixGF::rows);
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::WrongGeneratorShape {
                    i,
                    rows: g.rows(),
                    cols: g.cols(),
                    dim,
                });
            }
            if g.field() != alg.field() {
                return Err(Error::FieldMismatch);
            }
        }
        let m = ModuleRep {
            alg: alg.clone(),
            dim,
            gens: Arc::new(gens),
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_gens_unchecked(alg: &Algebra, gens: Vec<MatrixGF>) -> ModuleRep {
        let dim = gens.first().map_or(0, MatrixGF::rows);
        ModuleRep {
            alg: alg.clone(),
            dim,
            gens: Arc::new(gens),
        }
    }

    /// Re-check the module invariants (commuting, p-nilpotent).
    pub fn validate(&self) -> Result<()> {
        let p = self.alg.p() as u64;
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                if self.gens[i].mul(&self.gens[j]) != self.gens[j].mul(&self.gens[i]) {
                    return Err(Error::NonCommuting { i, j });
                }
            }
            if !self.gens[i].pow(p).is_zero() {
                return Err(Error::NotNilpotent { i });
            }
        }
        Ok(())
    }

    /// The trivial module k (all generators act by zero).
    pub fn trivial(alg: &Algebra) -> ModuleRep {
        let gens = (0..alg.r())
            .map(|_| MatrixGF::zeros(alg.field(), 1, 1))
            .collect();
        Self::from_gens_unchecked(alg, gens)
    }

    pub fn zero_module(alg: &Algebra) -> ModuleRep {
        let gens = (0..alg.r())
            .map(|_| MatrixGF::zeros(alg.field(), 0, 0))
            .collect();
        Self::from_gens_unchecked(alg, gens)
    }

    /// Free module A^rank; basis index = generator * p^r + monomial.
    pub fn free(alg: &Algebra, rank: usize) -> ModuleRep {
        let id = MatrixGF::identity(alg.field(), rank);
        let gens = alg
            .regular_gens()
            .into_iter()
            .map(|x| id.kron(&x))
            .collect();
        Self::from_gens_unchecked(alg, gens)
    }

    #[inline]
    pub fn alg(&self) -> &Algebra {
        &self.alg
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }
    #[inline]
    pub fn field(&self) -> &Field {
        self.alg.field()
    }
    #[inline]
    pub fn gens(&self) -> &[MatrixGF] {
        &self.gens
    }
    #[inline]
    pub fn gen_mat(&self, i: usize) -> &MatrixGF {
        &self.gens[i]
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        assert_eq!(*self.alg, *other.alg, "algebra contexts differ");
        let f = self.field();
        let gens = self
            .gens
            .iter()
            .zip(other.gens.iter())
            .map(|(a, b)| {
                let mut m = MatrixGF::zeros(f, self.dim + other.dim, self.dim + other.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        Self::from_gens_unchecked(&self.alg, gens)
    }

    /// Action of the monomial x^e (componentwise exponents).
    pub fn act_monomial(&self, exponents: &[u8]) -> MatrixGF {
        let mut acc = MatrixGF::identity(self.field(), self.dim);
        for (i, &e) in exponents.iter().enumerate() {
            for _ in 0..e {
                acc = self.gens[i].mul(&acc);
            }
        }
        acc
    }

    /// Action of an arbitrary algebra element.
    pub fn act_elem(&self, a: &AlgElem) -> MatrixGF {
        let mut acc = MatrixGF::zeros(self.field(), self.dim, self.dim);
        for (idx, c) in a.support() {
            let mono = self.act_monomial(&self.alg.exponents(idx));
            acc = acc.add(&mono.scale(c));
        }
        acc
    }

    /// Submodule spanned by the columns of `basis` (full column rank,
    /// invariant under the action); returns the module in that basis. The
    /// caller guarantees invariance; the solve takes care of the rest.
    pub fn submodule(&self, basis: &MatrixGF) -> ModuleRep {
        let gens = self
            .gens
            .iter()
            .map(|x| {
                basis
                    .solve_matrix(&x.mul(basis))
                    .expect("columns span an invariant subspace")
            })
            .collect();
        Self::from_gens_unchecked(&self.alg, gens)
    }

    /// Quotient by the subspace spanned by the columns of `sub` (any
    /// spanning set, invariant under the action; the caller guarantees
    /// invariance). Basis: the standard coordinates away from the pivot
    /// positions of the subspace.
    pub fn quotient(&self, sub: &MatrixGF) -> ModuleRep {
        let f = self.field().clone();
        let (red, pivots) = sub.transpose().rref();
        let keep: Vec<usize> = (0..self.dim).filter(|j| !pivots.contains(j)).collect();
        let gens = self
            .gens
            .iter()
            .map(|x| {
                let mut out = MatrixGF::zeros(&f, keep.len(), keep.len());
                for (jj, &src) in keep.iter().enumerate() {
                    // x . e_src reduced modulo the subspace, in complement coords
                    let mut v = x.col(src);
                    for (row, &pc) in pivots.iter().enumerate() {
                        let c = v[pc];
                        if !c.is_zero() {
                            for (t, &w) in red.row(row).iter().enumerate() {
                                v[t] = f.sub(v[t], f.mul(c, w));
                            }
                        }
                    }
                    for (ii, &dst) in keep.iter().enumerate() {
                        out.set(ii, jj, v[dst]);
                    }
                }
                out
            })
            .collect();
        let m = Self::from_gens_unchecked(&self.alg, gens);
        debug_assert!(m.validate().is_ok());
        m
    }

    /// Basis of the radical rad M = sum of the generator images.
    pub fn radical_basis(&self) -> MatrixGF {
        let stacked: Vec<&MatrixGF> = self.gens.iter().collect();
        if stacked.is_empty() {
            return MatrixGF::zeros(self.field(), self.dim, 0);
        }
        let all = MatrixGF::hstack(&stacked);
        all.image_basis().0
    }

    /// Dimension profile of the radical filtration M, rad M, rad^2 M, ...
    /// down to zero.
    pub fn radical_profile(&self) -> Vec<usize> {
        let mut profile = vec![self.dim];
        let mut layer = MatrixGF::identity(self.field(), self.dim);
        loop {
            // rad^{j+1} = sum_i X_i rad^j
            let imgs: Vec<MatrixGF> = self.gens.iter().map(|x| x.mul(&layer)).collect();
            if imgs.is_empty() {
                break;
            }
            let refs: Vec<&MatrixGF> = imgs.iter().collect();
            let (basis, _) = MatrixGF::hstack(&refs).image_basis();
            let d = basis.cols();
            profile.push(d);
            if d == 0 {
                break;
            }
            layer = basis;
        }
        profile
    }

    /// Restriction along the point alpha: the single nilpotent matrix
    /// sum alpha_i X_i together with its Jordan type.
    pub fn restrict_along(&self, alpha: &[Scalar]) -> Result<(MatrixGF, JordanType)> {
        assert_eq!(alpha.len(), self.alg.r(), "one coordinate per generator");
        if alpha.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        let mut n = MatrixGF::zeros(self.field(), self.dim, self.dim);
        for (c, x) in alpha.iter().zip(self.gens.iter()) {
            if !c.is_zero() {
                n = n.add(&x.scale(*c));
            }
        }
        let jt = JordanType::of_nilpotent(&n, self.alg.p());
        Ok((n, jt))
    }
}

/// Tensor product of modules under the chosen Hopf structure. Generator
/// action: primitive part X_i (x) I + I (x) Y_i, plus the mixed term
/// X_i (x) Y_i for the group-like structure. Index convention from kron.
pub fn tensor(
    h: crate::algebra::HopfStructure,
    m: &ModuleRep,
    n: &ModuleRep,
) -> Result<ModuleRep> {
    if *m.alg != *n.alg {
        return Err(Error::AlgebraMismatch);
    }
    let im = MatrixGF::identity(m.field(), m.dim);
    let in_ = MatrixGF::identity(n.field(), n.dim);
    let gens = m
        .gens
        .iter()
        .zip(n.gens.iter())
        .map(|(x, y)| {
            let mut g = x.kron(&in_).add(&im.kron(y));
            if h == crate::algebra::HopfStructure::Gr {
                g = g.add(&x.kron(y));
            }
            g
        })
        .collect();
    Ok(ModuleRep::from_gens_unchecked(&m.alg, gens))
}

/// A-linear map between modules; `mat` is dim(dst) x dim(src).
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub src: ModuleRep,
    pub dst: ModuleRep,
    pub mat: MatrixGF,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap {} -> {} over GF({})",
            self.src.dim,
            self.dst.dim,
            self.src.field().q()
        )
    }
}

impl ModuleMap {
    pub fn new(src: ModuleRep, dst: ModuleRep, mat: MatrixGF) -> Result<ModuleMap> {
        let m = ModuleMap { src, dst, mat };
        m.verify_linear()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(src: ModuleRep, dst: ModuleRep, mat: MatrixGF) -> ModuleMap {
        debug_assert_eq!(mat.rows(), dst.dim);
        debug_assert_eq!(mat.cols(), src.dim);
        ModuleMap { src, dst, mat }
    }

    /// Check F X_i = Y_i F for all generators.
    pub fn verify_linear(&self) -> Result<()> {
        if self.mat.rows() != self.dst.dim || self.mat.cols() != self.src.dim {
            return Err(Error::MapShapeMismatch);
        }
        for i in 0..self.src.gens.len() {
            if self.mat.mul(&self.src.gens[i]) != self.dst.gens[i].mul(&self.mat) {
                return Err(Error::NotLinear(i));
            }
        }
        Ok(())
    }

    pub fn identity(m: &ModuleRep) -> ModuleMap {
        ModuleMap::new_unchecked(m.clone(), m.clone(), MatrixGF::identity(m.field(), m.dim))
    }

    pub fn compose(&self, inner: &ModuleMap) -> ModuleMap {
        assert_eq!(inner.dst, self.src, "composition shape mismatch");
        ModuleMap::new_unchecked(inner.src.clone(), self.dst.clone(), self.mat.mul(&inner.mat))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.src.dim == self.dst.dim && self.mat.rank() == self.src.dim
    }
}

/// Jordan type of a p-nilpotent matrix: multiplicities[b-1] = number of
/// blocks of size b, for b = 1..p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanType {
    pub p: usize,
    pub multiplicities: Vec<usize>,
}

impl JordanType {
    pub fn of_nilpotent(n: &MatrixGF, p: usize) -> JordanType {
        let dim = n.rows();
        // ranks[t] = rank(n^t); block counts from second differences
        let mut ranks = vec![dim];
        let mut power = MatrixGF::identity(n.field(), dim);
        for _ in 1..=p {
            power = power.mul(n);
            ranks.push(power.rank());
        }
        assert!(ranks[p] == 0, "matrix is not p-nilpotent");
        ranks.push(0);
        let multiplicities = (1..=p)
            .map(|b| ranks[b - 1] + ranks[b + 1] - 2 * ranks[b])
            .collect();
        JordanType { p, multiplicities }
    }

    pub fn dim(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, m)| (i + 1) * m)
            .sum()
    }

    /// Free restriction: every block has size p.
    pub fn is_free(&self) -> bool {
        self.multiplicities[..self.p - 1].iter().all(|&m| m == 0)
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for b in (1..=self.p).rev() {
            let m = self.multiplicities[b - 1];
            if m > 0 {
                parts.push(format!("{b}^{m}"));
            }
        }
        if parts.is_empty() {
            f.write_str("[]")
        } else {
            write!(f, "[{}]", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraCtx, HopfStructure};
    use crate::field::FieldCtx;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(p: u32, n: usize, r: usize) -> Algebra {
        let f = FieldCtx::new(p, n).unwrap();
        AlgebraCtx::new(&f, r).unwrap()
    }

    fn mat(a: &Algebra, rows: &[&[u8]]) -> MatrixGF {
        MatrixGF::from_rows(
            a.field(),
            rows.iter().map(|r| r.iter().map(|&v| Scalar(v)).collect()).collect(),
        )
    }

    fn random_invertible(a: &Algebra, dim: usize, rng: &mut ChaCha8Rng) -> MatrixGF {
        loop {
            let u = MatrixGF::from_fn(a.field(), dim, dim, |_, _| a.field().sample(rng));
            if u.rank() == dim {
                return u;
            }
        }
    }

    fn conjugate(m: &ModuleRep, u: &MatrixGF) -> ModuleRep {
        let ui = u.invert().unwrap();
        let gens = m.gens().iter().map(|x| u.mul(x).mul(&ui)).collect();
        ModuleRep::from_gens_unchecked(m.alg(), gens)
    }

    #[test]
    fn validation_rejects_bad_generator_sets() {
        let a = alg(2, 1, 2);
        let x = mat(&a, &[&[0, 1], &[0, 0]]);
        let y = mat(&a, &[&[0, 0], &[1, 0]]);
        assert!(matches!(
            ModuleRep::new(&a, vec![x.clone(), y]),
            Err(Error::NonCommuting { i: 0, j: 1 })
        ));

        let z3 = MatrixGF::zeros(a.field(), 3, 3);
        let n3 = mat(&a, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(matches!(
            ModuleRep::new(&a, vec![n3, z3]),
            Err(Error::NotNilpotent { i: 0 })
        ));

        assert!(matches!(
            ModuleRep::new(&a, vec![x]),
            Err(Error::WrongGeneratorCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn free_module_restricts_freely() {
        let a = alg(3, 1, 2);
        let m = ModuleRep::free(&a, 2);
        assert_eq!(m.dim(), 18);
        m.validate().unwrap();
        let (_, jt) = m
            .restrict_along(&[Scalar(1), Scalar(2)])
            .unwrap();
        // A^2 restricted along any nonzero point: 2 * p^(r-1) = 6 blocks of
        // size p = 3.
        assert_eq!(jt.multiplicities, vec![0, 0, 6]);
        assert!(jt.is_free());
        assert_eq!(jt.to_string(), "[3^6]");

        let k = ModuleRep::trivial(&a);
        let (n, jt) = k.restrict_along(&[Scalar(1), Scalar(0)]).unwrap();
        assert!(n.is_zero());
        assert_eq!(jt.multiplicities, vec![1, 0, 0]);
        assert!(!jt.is_free());
        assert!(matches!(
            k.restrict_along(&[Scalar(0), Scalar(0)]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn jordan_type_from_rank_profile() {
        let a = alg(3, 1, 1);
        // One block of size 2 plus two blocks of size 1 on k^4.
        let n = mat(&a, &[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let jt = JordanType::of_nilpotent(&n, 3);
        assert_eq!(jt.multiplicities, vec![2, 1, 0]);
        assert_eq!(jt.dim(), 4);
        assert_eq!(jt.to_string(), "[2^1 1^2]");
    }

    #[test]
    fn tensor_with_free_factor_is_free() {
        for (p, n, r) in [(2, 1, 1), (2, 2, 2), (3, 1, 2)] {
            let a = alg(p, n, r);
            let m = ModuleRep::free(&a, 1).direct_sum(&ModuleRep::trivial(&a));
            for h in HopfStructure::BOTH {
                let t = tensor(h, &ModuleRep::free(&a, 1), &m).unwrap();
                t.validate().unwrap();
                assert_eq!(t.dim(), a.dim() * m.dim());
                let (core, f, _) = strip_free_summands(&t);
                assert_eq!((core.dim(), f), (0, m.dim()));
            }
        }
    }

    #[test]
    fn tensor_is_commutative_up_to_isomorphism() {
        let a = alg(2, 1, 2);
        let m = ModuleRep::free(&a, 1);
        let n = ModuleRep::trivial(&a).direct_sum(&ModuleRep::trivial(&a));
        for h in HopfStructure::BOTH {
            let mn = tensor(h, &m, &n).unwrap();
            let nm = tensor(h, &n, &m).unwrap();
            let verdict = is_isomorphic(&mn, &nm).unwrap();
            assert!(verdict.is_yes(), "{}", verdict.describe());
        }
    }

    #[test]
    fn hom_dimensions_match_hand_counts() {
        let a = alg(2, 1, 2);
        let free = ModuleRep::free(&a, 1);
        let k = ModuleRep::trivial(&a);
        let m = free.direct_sum(&k);

        // Hom(A, M) is M itself; Hom(k, A) sees the one dimensional socle;
        // Hom(A, k) factors through the generator image.
        assert_eq!(hom::hom_dim(&free, &m).unwrap(), 5);
        assert_eq!(hom::hom_dim(&k, &free).unwrap(), 1);
        assert_eq!(hom::hom_dim(&free, &k).unwrap(), 1);
        assert_eq!(hom::hom_dim(&k, &k).unwrap(), 1);

        let pres = Presentation::build(&k);
        assert_eq!(pres.num_gens(), 1);
        assert_eq!(pres.num_relations(), 2);

        for f in hom_basis(&free, &m).unwrap() {
            f.verify_linear().unwrap();
        }
        let basis = hom_basis(&free, &free).unwrap();
        assert_eq!(basis.len(), 4);
        for f in &basis {
            f.verify_linear().unwrap();
        }
    }

    #[test]
    fn strip_handles_pinned_examples() {
        let a = alg(2, 1, 2);
        let free = ModuleRep::free(&a, 1);
        let k = ModuleRep::trivial(&a);

        let (core, f, _) = strip_free_summands(&free);
        assert_eq!((core.dim(), f), (0, 1));

        let (core, f, _) = strip_free_summands(&k);
        assert_eq!((core.dim(), f), (1, 0));
        assert_eq!(core, k);

        let sum = free.direct_sum(&k);
        let (core, f, wit) = strip_free_summands(&sum);
        assert_eq!((core.dim(), f), (1, 1));
        assert!(core.gens().iter().all(MatrixGF::is_zero));

        // Projection is an A-linear idempotent and the assembled map is a
        // module isomorphism.
        assert_eq!(wit.projection.mul(&wit.projection), wit.projection);
        for x in sum.gens() {
            assert_eq!(wit.projection.mul(x), x.mul(&wit.projection));
        }
        let iso = wit.assembled_iso(&sum);
        iso.verify_linear().unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn strip_is_basis_independent() {
        let a = alg(3, 1, 2);
        let sum = ModuleRep::free(&a, 1)
            .direct_sum(&ModuleRep::trivial(&a))
            .direct_sum(&ModuleRep::trivial(&a));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let u = random_invertible(&a, sum.dim(), &mut rng);
            let hidden = conjugate(&sum, &u);
            hidden.validate().unwrap();
            let (core, f, wit) = strip_free_summands(&hidden);
            assert_eq!((core.dim(), f), (2, 1));
            assert!(core.gens().iter().all(MatrixGF::is_zero));
            let iso = wit.assembled_iso(&hidden);
            iso.verify_linear().unwrap();
            assert!(iso.is_isomorphism());
        }
    }

    #[test]
    fn iso_verdicts() {
        let a = alg(2, 1, 2);
        let free = ModuleRep::free(&a, 1);
        let k = ModuleRep::trivial(&a);
        let sum = free.direct_sum(&k);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = random_invertible(&a, sum.dim(), &mut rng);
        let hidden = conjugate(&sum, &u);
        match is_isomorphic(&sum, &hidden).unwrap() {
            IsoVerdict::Yes(IsoWitness::Map(w)) => {
                w.verify_linear().unwrap();
                assert!(w.is_isomorphism());
            }
            v => panic!("expected an explicit witness, got {}", v.describe()),
        }

        assert!(is_isomorphic(&sum, &free).unwrap().is_no());

        // Same dimension, different rank profile.
        let b = alg(3, 1, 1);
        let two_k = ModuleRep::trivial(&b).direct_sum(&ModuleRep::trivial(&b));
        let block2 = ModuleRep::new(&b, vec![mat(&b, &[&[0, 1], &[0, 0]])]).unwrap();
        match is_isomorphic(&two_k, &block2).unwrap() {
            IsoVerdict::No(why) => assert!(why.contains("rank"), "{why}"),
            v => panic!("expected no, got {}", v.describe()),
        }

        // Stable isomorphism ignores free summands.
        let padded = sum.direct_sum(&free);
        assert!(is_stably_isomorphic(&sum, &padded).unwrap().is_yes());
        assert!(is_stably_isomorphic(&k, &free).unwrap().is_no());
    }

    #[test]
    fn decompose_recovers_summand_multiset() {
        let a = alg(2, 1, 2);
        let free = ModuleRep::free(&a, 1);
        let k = ModuleRep::trivial(&a);
        let m = free.direct_sum(&k).direct_sum(&k);

        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let u = random_invertible(&a, m.dim(), &mut rng);
        let hidden = conjugate(&m, &u);

        for seed in [1u64, 99] {
            let out = decompose(&hidden, seed);
            assert!(out.certified);
            assert_eq!(out.total_dim(), 6);
            let profile: Vec<(usize, usize)> =
                out.summands.iter().map(|(s, c)| (s.dim(), *c)).collect();
            assert_eq!(profile, vec![(1, 2), (4, 1)]);
        }
    }

    #[test]
    fn decompose_recovers_jordan_partitions() {
        // r = 1: every module is a sum of Jordan blocks of size <= p.
        let a = alg(3, 1, 1);
        let block = |size: usize| {
            let mut n = MatrixGF::zeros(a.field(), size, size);
            for i in 0..size - 1 {
                n.set(i, i + 1, Scalar::ONE);
            }
            ModuleRep::from_gens_unchecked(&a, vec![n])
        };
        let m = block(3).direct_sum(&block(2)).direct_sum(&block(2)).direct_sum(&block(1));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = random_invertible(&a, m.dim(), &mut rng);
        let out = decompose(&conjugate(&m, &u), 42);
        assert!(out.certified);
        let profile: Vec<(usize, usize)> =
            out.summands.iter().map(|(s, c)| (s.dim(), *c)).collect();
        assert_eq!(profile, vec![(1, 1), (2, 2), (3, 1)]);
    }

    #[test]
    fn quotient_kills_the_named_subspace() {
        // A/(x1) over p=2, r=2: basis {1, x2}, x1 acts by zero.
        let a = alg(2, 1, 2);
        let free = ModuleRep::free(&a, 1);
        let sub = free.act_elem(&a.x(0)).image_basis().0;
        let q = free.quotient(&sub);
        assert_eq!(q.dim(), 2);
        assert!(q.gens()[0].is_zero());
        assert_eq!(q.gens()[1].get(1, 0), Scalar::ONE);
        assert_eq!(q.gens()[1].rank(), 1);

        let top = free.quotient(&free.radical_basis());
        assert_eq!(top.dim(), 1);
        assert!(top.gens().iter().all(MatrixGF::is_zero));

        let nothing = free.quotient(&MatrixGF::zeros(a.field(), free.dim(), 0));
        assert_eq!(nothing.dim(), free.dim());
        let everything = free.quotient(&MatrixGF::identity(a.field(), free.dim()));
        assert_eq!(everything.dim(), 0);
    }
}
