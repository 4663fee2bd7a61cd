//! Free resolutions over the truncated algebra.
//!
//! Two constructions: the explicit tensor resolution of the trivial module,
//! whose degree-d part is indexed by multidegrees of total degree d, and
//! minimal resolutions of arbitrary modules computed degree by degree from
//! presentations. Syzygies are images of the differentials; building them
//! from minimal resolutions keeps them free of free summands.

mod cohomology;
mod lzeta;

pub use cohomology::{cocycle_of, lift_cocycle, ChainMap, CohClass};
pub use lzeta::{l_zeta, theta_action};
pub(crate) use lzeta::extends_to_ambient;

use crate::algebra::Algebra;
use crate::amodule::hom::{spin, submodule_min_gens};
use crate::amodule::{ModuleRep, Presentation};
use crate::field::Scalar;
use crate::matrix::MatrixGF;
use std::fmt;

/// Exponent vector indexing a free summand of the tensor resolution.
/// Ordering is lexicographic, which fixes the generator order everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|j| j % 2 == 0)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All multidegrees with r components and total degree d, in lex order.
pub fn multidegrees(r: usize, d: usize) -> Vec<MultiDegree> {
    fn go(r: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
        if r == 1 {
            prefix.push(d);
            out.push(MultiDegree(prefix.clone()));
            prefix.pop();
            return;
        }
        for j in 0..=d {
            prefix.push(j);
            go(r - 1, d - j, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, d, &mut Vec::new(), &mut out);
    out
}

/// A free resolution of `target`, computed up to a fixed degree.
///
/// `diffs[d-1]` is the differential A^{r_d} -> A^{r_{d-1}} written over the
/// field, with the free-module basis ordered generator-major. The
/// augmentation maps A^{r_0} onto the target.
#[derive(Clone)]
pub struct Resolution {
    alg: Algebra,
    target: ModuleRep,
    ranks: Vec<usize>,
    diffs: Vec<MatrixGF>,
    augmentation: MatrixGF,
}

impl Resolution {
    pub(crate) fn from_parts(
        alg: Algebra,
        target: ModuleRep,
        ranks: Vec<usize>,
        diffs: Vec<MatrixGF>,
        augmentation: MatrixGF,
    ) -> Resolution {
        Resolution {
            alg,
            target,
            ranks,
            diffs,
            augmentation,
        }
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, d: usize) -> usize {
        self.ranks[d]
    }

    /// The differential at degree d, for 1 <= d <= max_degree.
    pub fn diff(&self, d: usize) -> &MatrixGF {
        &self.diffs[d - 1]
    }

    pub fn augmentation(&self) -> &MatrixGF {
        &self.augmentation
    }

    pub fn free_module(&self, d: usize) -> ModuleRep {
        ModuleRep::free(&self.alg, self.ranks[d])
    }

    /// Image of the degree-d differential with its induced action; d = 0
    /// returns the target itself.
    pub fn syzygy_module(&self, d: usize) -> ModuleRep {
        if d == 0 {
            return self.target.clone();
        }
        let (basis, _) = self.diff(d).image_basis();
        self.free_module(d - 1).submodule(&basis)
    }

    /// Exactness over the computed range: consecutive composites vanish and
    /// ranks account for the full kernels. The top degree makes no exactness
    /// claim (its kernel is the next syzygy).
    pub fn is_exact(&self) -> bool {
        if self.augmentation.rank() != self.target.dim() {
            return false;
        }
        let pr = self.alg.dim();
        for d in 1..self.ranks.len() {
            let prev_rank = if d == 1 {
                self.augmentation.rank()
            } else {
                self.diff(d - 1).rank()
            };
            let prev: &MatrixGF = if d == 1 {
                &self.augmentation
            } else {
                self.diff(d - 1)
            };
            if !prev.mul(self.diff(d)).is_zero() {
                return false;
            }
            if self.diff(d).rank() + prev_rank != self.ranks[d - 1] * pr {
                return false;
            }
        }
        true
    }

    /// Minimality: every entry of every differential has zero constant term,
    /// read off at the generator-to-generator positions.
    pub fn is_minimal(&self) -> bool {
        let pr = self.alg.dim();
        for (i, diff) in self.diffs.iter().enumerate() {
            let (rt, rs) = (self.ranks[i], self.ranks[i + 1]);
            for t in 0..rt {
                for s in 0..rs {
                    if !diff.get(t * pr, s * pr).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Tensor-of-complexes differential pattern shared by the resolutions of
/// the trivial module and of the algebra over its tensor square: one free
/// summand per multidegree with r components, slot i stepping by `odd[i]`
/// or `even[i]` depending on the parity of j_i, with sign
/// (-1)^{j_1 + ... + j_{i-1}}.
pub(crate) fn koszul_resolution(
    alg: &Algebra,
    r: usize,
    odd: &[MatrixGF],
    even: &[MatrixGF],
    target: ModuleRep,
    augmentation: MatrixGF,
    d_max: usize,
) -> Resolution {
    let f = alg.field();
    let pr = alg.dim();
    let mut ranks = Vec::with_capacity(d_max + 1);
    let mut diffs = Vec::with_capacity(d_max);
    let mut dst = multidegrees(r, 0);
    ranks.push(dst.len());
    for d in 1..=d_max {
        let src = multidegrees(r, d);
        let mut m = MatrixGF::zeros(f, dst.len() * pr, src.len() * pr);
        for (s, j) in src.iter().enumerate() {
            let mut sign = 0usize;
            for i in 0..r {
                if j.0[i] > 0 {
                    let mut tj = j.clone();
                    tj.0[i] -= 1;
                    let t = dst.binary_search(&tj).expect("multidegree lists are lex sorted");
                    let block = if j.0[i] % 2 == 1 { &odd[i] } else { &even[i] };
                    let c = if sign % 2 == 0 {
                        Scalar::ONE
                    } else {
                        f.neg(Scalar::ONE)
                    };
                    m.add_scaled_block(t * pr, s * pr, block, c);
                }
                sign += j.0[i];
            }
        }
        ranks.push(src.len());
        diffs.push(m);
        dst = src;
    }

    Resolution {
        alg: alg.clone(),
        target,
        ranks,
        diffs,
        augmentation,
    }
}

/// The tensor resolution of the trivial module: one rank-one summand per
/// multidegree, differential acting in slot i by x_i (odd step) or
/// x_i^{p-1} (even step) with sign (-1)^{j_1 + ... + j_{i-1}}.
pub fn trivial_resolution(alg: &Algebra, d_max: usize) -> Resolution {
    let (r, p) = (alg.r(), alg.p());
    let x_step: Vec<MatrixGF> = (0..r).map(|i| alg.mult_matrix(&alg.x(i))).collect();
    let xp_step: Vec<MatrixGF> = (0..r)
        .map(|i| alg.mult_matrix(&alg.pow(&alg.x(i), p - 1)))
        .collect();
    koszul_resolution(
        alg,
        r,
        &x_step,
        &xp_step,
        ModuleRep::trivial(alg),
        alg.counit_matrix(),
        d_max,
    )
}

/// Minimal resolution of M: each differential maps onto minimal generators
/// of the previous kernel, so all entries land in the radical.
pub fn minimal_resolution(m: &ModuleRep, d_max: usize) -> Resolution {
    let alg = m.alg();
    let pres = Presentation::build(m);
    let mut ranks = vec![pres.num_gens()];
    let augmentation = pres.spin_matrix().clone();
    let mut diffs = Vec::with_capacity(d_max);
    let mut gens = pres.kernel_gens().clone();

    for _ in 1..=d_max {
        let free_prev = ModuleRep::free(alg, *ranks.last().unwrap());
        let diff = spin(&free_prev, &gens);
        ranks.push(gens.cols());
        let free_cur = ModuleRep::free(alg, gens.cols());
        gens = submodule_min_gens(free_cur.gens(), &diff.kernel_basis());
        diffs.push(diff);
    }

    Resolution {
        alg: alg.clone(),
        target: m.clone(),
        ranks,
        diffs,
        augmentation,
    }
}

/// The d-th syzygy of M from its minimal resolution; free of free summands.
pub fn syzygy(m: &ModuleRep, d: usize) -> ModuleRep {
    if d == 0 {
        return m.clone();
    }
    minimal_resolution(m, d).syzygy_module(d)
}
