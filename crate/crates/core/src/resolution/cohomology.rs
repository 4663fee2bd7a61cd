//! Cohomology classes of the trivial module and their chain-level lifts.
//!
//! A class of degree n is a field-linear combination of multidegrees of
//! total degree n. Multidegree j stands for the monomial e^{j mod 2} *
//! z^{j div 2} in the presented ring: for p odd the e_i anticommute and
//! square to zero, for p = 2 they commute and z_i = e_i^2.

use super::{multidegrees, MultiDegree, Resolution};
use crate::algebra::Algebra;
use crate::amodule::hom::spin;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::MatrixGF;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct CohClass {
    alg: Algebra,
    degree: usize,
    coeffs: BTreeMap<MultiDegree, Scalar>,
}

impl CohClass {
    pub fn zero(alg: &Algebra, degree: usize) -> CohClass {
        CohClass {
            alg: alg.clone(),
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit class in degree zero.
    pub fn unit(alg: &Algebra) -> CohClass {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(MultiDegree(vec![0; alg.r()]), Scalar::ONE);
        CohClass {
            alg: alg.clone(),
            degree: 0,
            coeffs,
        }
    }

    /// The degree-one generator e_{i+1} (0-based i).
    pub fn eta(alg: &Algebra, i: usize) -> CohClass {
        assert!(i < alg.r(), "generator index out of range");
        let mut j = vec![0; alg.r()];
        j[i] = 1;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(MultiDegree(j), Scalar::ONE);
        CohClass {
            alg: alg.clone(),
            degree: 1,
            coeffs,
        }
    }

    /// The degree-two polynomial generator z_{i+1} (0-based i).
    pub fn zeta(alg: &Algebra, i: usize) -> CohClass {
        assert!(i < alg.r(), "generator index out of range");
        let mut j = vec![0; alg.r()];
        j[i] = 2;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(MultiDegree(j), Scalar::ONE);
        CohClass {
            alg: alg.clone(),
            degree: 2,
            coeffs,
        }
    }

    pub fn from_support(
        alg: &Algebra,
        degree: usize,
        support: impl IntoIterator<Item = (MultiDegree, Scalar)>,
    ) -> Result<CohClass> {
        let f = alg.field();
        let mut coeffs: BTreeMap<MultiDegree, Scalar> = BTreeMap::new();
        for (j, c) in support {
            if j.0.len() != alg.r() {
                return Err(Error::RankOutOfRange(j.0.len()));
            }
            if j.total() != degree {
                return Err(Error::MixedDegree(degree, j.total()));
            }
            let e = coeffs.entry(j).or_insert(Scalar::ZERO);
            *e = f.add(*e, c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(CohClass {
            alg: alg.clone(),
            degree,
            coeffs,
        })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&MultiDegree, Scalar)> {
        self.coeffs.iter().map(|(j, &c)| (j, c))
    }

    /// Membership in the polynomial subring: every multidegree in the
    /// support has all components even.
    pub fn in_s(&self) -> bool {
        self.coeffs.keys().all(MultiDegree::all_even)
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        if self.degree != other.degree {
            return Err(Error::MixedDegree(self.degree, other.degree));
        }
        let f = self.alg.field();
        let mut coeffs = self.coeffs.clone();
        for (j, &c) in &other.coeffs {
            let e = coeffs.entry(j.clone()).or_insert(Scalar::ZERO);
            *e = f.add(*e, c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(CohClass {
            alg: self.alg.clone(),
            degree: self.degree,
            coeffs,
        })
    }

    pub fn scale(&self, c: Scalar) -> CohClass {
        let f = self.alg.field();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            for (j, &a) in &self.coeffs {
                coeffs.insert(j.clone(), f.mul(a, c));
            }
        }
        CohClass {
            alg: self.alg.clone(),
            degree: self.degree,
            coeffs,
        }
    }

    /// Product in the presented ring. For p odd a term dies when both
    /// factors are odd in the same slot (e_i^2 = 0), and reordering the
    /// exterior generators contributes the usual sign.
    pub fn cup(&self, other: &CohClass) -> CohClass {
        let f = self.alg.field();
        let p = self.alg.p();
        let mut coeffs: BTreeMap<MultiDegree, Scalar> = BTreeMap::new();
        for (j1, &c1) in &self.coeffs {
            for (j2, &c2) in &other.coeffs {
                let mut c = f.mul(c1, c2);
                if p > 2 {
                    if (0..j1.0.len()).any(|i| j1.0[i] % 2 == 1 && j2.0[i] % 2 == 1) {
                        continue;
                    }
                    let mut swaps = 0;
                    for t in 0..j2.0.len() {
                        if j2.0[t] % 2 == 1 {
                            swaps += (t + 1..j1.0.len()).filter(|&s| j1.0[s] % 2 == 1).count();
                        }
                    }
                    if swaps % 2 == 1 {
                        c = f.neg(c);
                    }
                }
                let j = MultiDegree(j1.0.iter().zip(&j2.0).map(|(a, b)| a + b).collect());
                let e = coeffs.entry(j).or_insert(Scalar::ZERO);
                *e = f.add(*e, c);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        CohClass {
            alg: self.alg.clone(),
            degree: self.degree + other.degree,
            coeffs,
        }
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = self.alg.field();
        let mut parts = Vec::new();
        for (j, &c) in &self.coeffs {
            let mut factors = Vec::new();
            for (i, &ji) in j.0.iter().enumerate() {
                if ji % 2 == 1 {
                    factors.push(format!("e{}", i + 1));
                }
                match ji / 2 {
                    0 => {}
                    1 => factors.push(format!("z{}", i + 1)),
                    t => factors.push(format!("z{}^{}", i + 1, t)),
                }
            }
            let coeff = f.format_scalar(c);
            let part = if factors.is_empty() {
                coeff
            } else if c == Scalar::ONE {
                factors.join("*")
            } else if f.scalar_needs_parens(c) {
                format!("({})*{}", coeff, factors.join("*"))
            } else {
                format!("{}*{}", coeff, factors.join("*"))
            };
            parts.push(part);
        }
        if parts.is_empty() {
            fm.write_str("0")
        } else {
            fm.write_str(&parts.join("+"))
        }
    }
}

/// The representing cocycle of a class: the functional on the degree-n part
/// of the tensor resolution that is the augmentation on each supported
/// multidegree summand, scaled by its coefficient. Returned as a 1 x
/// (rank_n * p^r) row. Minimality makes every such functional a cocycle.
pub fn cocycle_of(c: &CohClass) -> MatrixGF {
    let alg = c.alg();
    let pr = alg.dim();
    let mds = multidegrees(alg.r(), c.degree());
    let mut row = MatrixGF::zeros(alg.field(), 1, mds.len() * pr);
    for (j, v) in c.support() {
        let s = mds.binary_search(j).expect("support is degree-homogeneous");
        row.set(0, s * pr, v);
    }
    row
}

/// A chain map between resolutions lowering degree by `shift`:
/// mats[i] maps src degree shift+i to dst degree i.
#[derive(Clone)]
pub struct ChainMap {
    src: Resolution,
    dst: Resolution,
    shift: usize,
    mats: Vec<MatrixGF>,
}

impl ChainMap {
    pub(crate) fn from_parts(
        src: Resolution,
        dst: Resolution,
        shift: usize,
        mats: Vec<MatrixGF>,
    ) -> ChainMap {
        ChainMap {
            src,
            dst,
            shift,
            mats,
        }
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn src(&self) -> &Resolution {
        &self.src
    }

    pub fn dst(&self) -> &Resolution {
        &self.dst
    }

    pub fn top_degree(&self) -> usize {
        self.shift + self.mats.len() - 1
    }

    /// The component at source degree m (shift <= m <= top_degree).
    pub fn mat(&self, m: usize) -> &MatrixGF {
        &self.mats[m - self.shift]
    }

    /// Commuting squares over the computed range.
    pub fn verify(&self) -> bool {
        for m in self.shift + 1..=self.top_degree() {
            let lhs = self.dst.diff(m - self.shift).mul(self.mat(m));
            let rhs = self.mat(m - 1).mul(self.src.diff(m));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Composition self o inner; shifts add.
    pub fn compose(&self, inner: &ChainMap) -> ChainMap {
        let shift = self.shift + inner.shift;
        let count = self
            .mats
            .len()
            .min(inner.mats.len().saturating_sub(self.shift));
        assert!(count > 0, "composition is empty in the computed range");
        let mats = (0..count)
            .map(|i| self.mats[i].mul(inner.mat(shift + i)))
            .collect();
        ChainMap {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            shift,
            mats,
        }
    }

    /// The class induced by a chain map into the tensor resolution of the
    /// trivial module: read the constant coefficient of each generator
    /// image in degree `shift`. Coboundaries vanish on generators, so this
    /// is well defined on classes.
    pub fn induced_class(&self) -> CohClass {
        let alg = self.dst.alg();
        assert_eq!(self.dst.rank(0), 1, "induced class needs a resolution of k");
        let pr = alg.dim();
        let mds = multidegrees(alg.r(), self.shift);
        let head = &self.mats[0];
        let support = mds
            .into_iter()
            .enumerate()
            .map(|(s, j)| (j, head.get(0, s * pr)));
        CohClass::from_support(alg, self.shift, support).expect("homogeneous by construction")
    }
}

/// Lift a class to a chain map of the tensor resolution into itself,
/// computed from degree n = deg(c) up to res.max_degree(). The base
/// component sends the generator at multidegree j to c(j) * 1; higher
/// components solve the commuting squares, which exactness guarantees and
/// the free-variables-zero solve convention makes deterministic.
pub fn lift_cocycle(res: &Resolution, c: &CohClass) -> Result<ChainMap> {
    let alg = res.alg();
    let n = c.degree();
    if n > res.max_degree() {
        return Err(Error::DegreeOutOfRange(n));
    }
    let pr = alg.dim();
    let f = alg.field();

    let mds = multidegrees(alg.r(), n);
    debug_assert_eq!(res.rank(n), mds.len(), "expected the tensor resolution");
    let mut seeds = MatrixGF::zeros(f, pr, mds.len());
    for (j, v) in c.support() {
        let s = mds.binary_search(j).expect("support is degree-homogeneous");
        seeds.set(0, s, v);
    }
    let mut mats = vec![spin(&res.free_module(0), &seeds)];

    for m in n + 1..=res.max_degree() {
        let w_full = mats.last().unwrap().mul(res.diff(m));
        let gencols: Vec<usize> = (0..res.rank(m)).map(|s| s * pr).collect();
        let w = w_full.select_cols(&gencols);
        let seeds = res
            .diff(m - n)
            .solve_matrix(&w)
            .expect("exactness makes every square solvable");
        mats.push(spin(&res.free_module(m - n), &seeds));
    }

    Ok(ChainMap {
        src: res.clone(),
        dst: res.clone(),
        shift: n,
        mats,
    })
}
