//! Seeded sampling for the experiment harness. One master seed; each trial
//! reads an independent stream derived from its index, so trials can run in
//! any order (or concurrently) without changing a byte of output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::amodule::ModuleRep;
use crate::matrix::MatrixGF;
use crate::resolution::{multidegrees, CohClass, MultiDegree};

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform nonzero homogeneous class of the given degree: uniform scalars
/// on the full monomial support, resampled while zero.
pub fn random_class(alg: &Algebra, degree: usize, rng: &mut ChaCha8Rng) -> CohClass {
    let mons = multidegrees(alg.r(), degree);
    sample_on(alg, degree, &mons, rng)
}

/// Uniform nonzero homogeneous class of even degree in the polynomial
/// subring.
pub fn random_class_in_s(alg: &Algebra, degree: usize, rng: &mut ChaCha8Rng) -> CohClass {
    assert!(degree % 2 == 0, "the polynomial subring lives in even degrees");
    let mons: Vec<MultiDegree> = multidegrees(alg.r(), degree / 2)
        .into_iter()
        .map(|j| MultiDegree(j.0.iter().map(|&t| 2 * t).collect()))
        .collect();
    sample_on(alg, degree, &mons, rng)
}

fn sample_on(
    alg: &Algebra,
    degree: usize,
    mons: &[MultiDegree],
    rng: &mut ChaCha8Rng,
) -> CohClass {
    let f = alg.field().clone();
    loop {
        let c = CohClass::from_support(
            alg,
            degree,
            mons.iter()
                .map(|j| (j.clone(), f.sample(rng)))
                .filter(|(_, s)| !s.is_zero()),
        )
        .expect("monomials share the requested degree");
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random module of dimension 1..=max_dim: a quotient of a small free
/// module by the action closure of a few random vectors, resampled until
/// the dimension lands in range.
pub fn random_module(alg: &Algebra, max_dim: usize, rng: &mut ChaCha8Rng) -> ModuleRep {
    let f = alg.field().clone();
    loop {
        let rank = rng.gen_range(1..=2usize);
        let free = ModuleRep::free(alg, rank);
        let seeds = rng.gen_range(1..=3usize);
        let w = MatrixGF::from_fn(&f, free.dim(), seeds, |_, _| f.sample(rng));
        let sub = spin_closure(&free, &w);
        let dim = free.dim() - sub.cols();
        if dim >= 1 && dim <= max_dim {
            return free.quotient(&sub);
        }
    }
}

/// Smallest action-invariant subspace containing the columns of `seeds`.
fn spin_closure(m: &ModuleRep, seeds: &MatrixGF) -> MatrixGF {
    let mut basis = seeds.image_basis().0;
    loop {
        let mut parts: Vec<MatrixGF> = vec![basis.clone()];
        parts.extend(m.gens().iter().map(|x| x.mul(&basis)));
        let refs: Vec<&MatrixGF> = parts.iter().collect();
        let grown = MatrixGF::hstack(&refs).image_basis().0;
        if grown.cols() == basis.cols() {
            return basis;
        }
        basis = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;
    use crate::field::FieldCtx;
    use std::collections::BTreeSet;

    fn alg(p: u32, n: usize, r: usize) -> Algebra {
        AlgebraCtx::new(&FieldCtx::new(p, n).unwrap(), r).unwrap()
    }

    #[test]
    fn trial_streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|t| trial_rng(9, t).gen::<u64>()).collect();
        let b: Vec<u64> = (0..4).map(|t| trial_rng(9, t).gen::<u64>()).collect();
        assert_eq!(a, b);
        assert_eq!(a.iter().collect::<BTreeSet<_>>().len(), 4);
        assert_ne!(a[0], trial_rng(10, 0).gen::<u64>());
    }

    #[test]
    fn random_classes_are_homogeneous_and_nonzero() {
        let a = alg(3, 1, 2);
        let mut rng = trial_rng(5, 0);
        for deg in [2, 4, 6] {
            let c = random_class_in_s(&a, deg, &mut rng);
            assert_eq!(c.degree(), deg);
            assert!(c.in_s());
            assert!(!c.is_zero());
        }
        let c = random_class(&a, 3, &mut rng);
        assert_eq!(c.degree(), 3);
        assert!(!c.is_zero());

        let again = random_class_in_s(&a, 2, &mut trial_rng(5, 0));
        assert_eq!(again, random_class_in_s(&a, 2, &mut trial_rng(5, 0)));
    }

    #[test]
    fn random_modules_land_in_range_and_validate() {
        for a in [alg(2, 1, 2), alg(3, 1, 2)] {
            let mut rng = trial_rng(17, 3);
            for _ in 0..8 {
                let m = random_module(&a, 5, &mut rng);
                assert!((1..=5).contains(&m.dim()));
                m.validate().unwrap();
            }
        }
        let a = alg(2, 1, 3);
        let one = random_module(&a, 4, &mut trial_rng(1, 1));
        let two = random_module(&a, 4, &mut trial_rng(1, 1));
        assert_eq!(one, two);
    }
}
