//! Rank varieties and the locus cut out by cohomological splitting.
//!
//! A nonzero point alpha of k^r gives a one-variable truncated subalgebra
//! generated by u_alpha = sum alpha_i x_i, and a module restricts to it as a
//! single nilpotent operator. [`rank_variety_points`] collects the projective
//! points where that restriction fails to be free.
//!
//! The cohomological side probes classes zeta in the polynomial subring:
//! zeta "annihilates" M when L_zeta (x) M splits, up to free summands, as
//! Omega^d(M) + Omega^1(M). The common zero locus of the annihilators found
//! up to a degree bound is the support computed by [`support_on_s`], and
//! [`check_variety_equality`] tabulates it against the rank variety under
//! both coalgebra structures.

use std::collections::BTreeSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::HopfStructure;
use crate::amodule::{is_stably_isomorphic, tensor, IsoVerdict, ModuleRep};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::resolution::{l_zeta, minimal_resolution, multidegrees, CohClass, MultiDegree};

/// A point of projective (r-1)-space over a finite field, stored with its
/// first nonzero coordinate scaled to 1 so that derived equality and order
/// are equality and order of points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(f: &Field, coords: &[Scalar]) -> Result<ProjPoint> {
        let lead = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPoint)?;
        let inv = f.inv(coords[lead])?;
        Ok(ProjPoint {
            coords: coords.iter().map(|&c| f.mul(inv, c)).collect(),
        })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Renders as `[0:1:a]` in the field's scalar notation.
    pub fn render(&self, f: &Field) -> String {
        let parts: Vec<String> = self.coords.iter().map(|&c| f.format_scalar(c)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// Canonical representatives of the nonzero tuples of the given length up to
/// scaling: first nonzero entry 1, one tuple per ray, (q^len - 1)/(q - 1)
/// of them.
fn normalized_tuples(f: &Field, len: usize) -> Vec<Vec<Scalar>> {
    let els: Vec<Scalar> = f.elements().collect();
    let q = els.len();
    let mut out = Vec::new();
    for lead in 0..len {
        let tail = len - 1 - lead;
        for idx in 0..q.pow(tail as u32) {
            let mut coords = vec![Scalar::ZERO; len];
            coords[lead] = Scalar::ONE;
            let mut rem = idx;
            for pos in (lead + 1..len).rev() {
                coords[pos] = els[rem % q];
                rem /= q;
            }
            out.push(coords);
        }
    }
    out
}

/// All points of projective (r-1)-space over the field, in ascending
/// lexicographic order of their canonical coordinates.
pub fn projective_points(f: &Field, r: usize) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = normalized_tuples(f, r)
        .into_iter()
        .map(|coords| ProjPoint { coords })
        .collect();
    pts.sort();
    pts
}

/// The projective points alpha where the restriction of `m` along u_alpha
/// is not free. Scaling alpha rescales the nilpotent operator, which
/// preserves its Jordan type, so one representative per point suffices.
pub fn rank_variety_points(m: &ModuleRep) -> Vec<ProjPoint> {
    projective_points(m.field(), m.alg().r())
        .into_iter()
        .filter(|pt| {
            let (_, jt) = m
                .restrict_along(pt.coords())
                .expect("canonical representatives are nonzero");
            !jt.is_free()
        })
        .collect()
}

/// Verdict of the splitting test behind the cohomological support: whether
/// L_c (x) M is stably isomorphic to Omega^d(M) + Omega^1(M).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Splits,
    DoesNotSplit,
    /// The isomorphism search exhausted its budget without a verdict either
    /// way; the reason is recorded verbatim. Not a negative answer.
    Unknown(String),
}

impl SplitOutcome {
    pub fn splits(&self) -> bool {
        matches!(self, SplitOutcome::Splits)
    }
}

/// Tests whether `c` annihilates `m`: L_c (x) m stably isomorphic to
/// Omega^d(m) + Omega^1(m) with d the degree of `c`, under the given
/// coalgebra structure.
pub fn annihilates(h: HopfStructure, c: &CohClass, m: &ModuleRep) -> Result<SplitOutcome> {
    if c.alg() != m.alg() {
        return Err(Error::AlgebraMismatch);
    }
    if c.is_zero() {
        return Err(Error::ZeroClass("the splitting test"));
    }
    if c.degree() == 0 {
        return Err(Error::DegreeZeroClass);
    }
    let res = minimal_resolution(m, c.degree());
    let target = res
        .syzygy_module(c.degree())
        .direct_sum(&res.syzygy_module(1));
    split_against(h, c, m, &target)
}

fn split_against(
    h: HopfStructure,
    c: &CohClass,
    m: &ModuleRep,
    target: &ModuleRep,
) -> Result<SplitOutcome> {
    let t = tensor(h, &l_zeta(c)?, m)?;
    Ok(match is_stably_isomorphic(&t, target)? {
        IsoVerdict::Yes(_) => SplitOutcome::Splits,
        IsoVerdict::No(_) => SplitOutcome::DoesNotSplit,
        IsoVerdict::Inconclusive(why) => SplitOutcome::Unknown(why),
    })
}

/// How thoroughly the classes of one even degree were probed.
#[derive(Clone, Debug)]
pub struct DegreeCoverage {
    pub degree: usize,
    pub tested: usize,
    pub exhaustive: bool,
}

/// Result of probing the polynomial subring for annihilators of a module.
/// The support is the common zero locus of the annihilators found; classes
/// whose test came back inconclusive are listed separately and do not
/// constrain the support.
#[derive(Clone, Debug)]
pub struct SupportReport {
    pub hopf: HopfStructure,
    pub degree_bound: usize,
    pub module_dim: usize,
    pub field: Field,
    pub coverage: Vec<DegreeCoverage>,
    pub annihilators: Vec<CohClass>,
    pub unknowns: Vec<(CohClass, String)>,
    pub points: Vec<ProjPoint>,
}

impl fmt::Display for SupportReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "support on the polynomial subring, {} structure, degrees <= {}, module of dim {} over {:?}",
            self.hopf, self.degree_bound, self.module_dim, self.field
        )?;
        for cov in &self.coverage {
            writeln!(
                out,
                "  degree {}: {} classes tested{}",
                cov.degree,
                cov.tested,
                if cov.exhaustive { "" } else { " (sampled)" }
            )?;
        }
        writeln!(out, "  annihilators found: {}", self.annihilators.len())?;
        if !self.unknowns.is_empty() {
            writeln!(out, "  inconclusive tests: {}", self.unknowns.len())?;
        }
        let pts: Vec<String> = self.points.iter().map(|p| p.render(&self.field)).collect();
        write!(out, "  support: {{{}}}", pts.join(", "))
    }
}

/// Probes every even degree 2, 4, ..., degree_bound for annihilators of `m`
/// in the polynomial subring and intersects their zero loci.
///
/// Candidates are canonical ray representatives of nonzero coefficient
/// tuples on the degree-d monomial basis of the subring; L of a scaled
/// class is the same submodule, so one representative per ray suffices.
/// A degree is exhausted when the full tuple space has at most 10^4
/// elements, and sampled with a fixed-seed generator otherwise; the report
/// records which happened.
pub fn support_on_s(h: HopfStructure, m: &ModuleRep, degree_bound: usize) -> Result<SupportReport> {
    if degree_bound < 2 || degree_bound % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "support probing needs an even degree bound of at least 2, got {degree_bound}"
        )));
    }
    let f = m.field().clone();
    let q = f.q();
    let r = m.alg().r();

    let mut coverage = Vec::new();
    let mut annihilators = Vec::new();
    let mut unknowns = Vec::new();

    for d in (2..=degree_bound).step_by(2) {
        let mons: Vec<MultiDegree> = multidegrees(r, d / 2)
            .into_iter()
            .map(|a| MultiDegree(a.0.iter().map(|&t| 2 * t).collect()))
            .collect();
        let total = (q as u128).checked_pow(mons.len() as u32);
        let exhaustive = total.is_some_and(|t| t <= 10_000);
        let tuples = if exhaustive {
            normalized_tuples(&f, mons.len())
        } else {
            let rays = total.map_or(u128::MAX, |t| (t - 1) / (q as u128 - 1));
            let want = rays.min(128) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED + d as u64);
            let mut seen: BTreeSet<Vec<Scalar>> = BTreeSet::new();
            while seen.len() < want {
                let raw: Vec<Scalar> = (0..mons.len()).map(|_| f.sample(&mut rng)).collect();
                if raw.iter().all(|c| c.is_zero()) {
                    continue;
                }
                seen.insert(ProjPoint::new(&f, &raw)?.coords);
            }
            seen.into_iter().collect()
        };
        coverage.push(DegreeCoverage {
            degree: d,
            tested: tuples.len(),
            exhaustive,
        });

        let res = minimal_resolution(m, d);
        let target = res.syzygy_module(d).direct_sum(&res.syzygy_module(1));
        for tuple in tuples {
            let c = CohClass::from_support(
                m.alg(),
                d,
                mons.iter()
                    .cloned()
                    .zip(tuple.iter().copied())
                    .filter(|(_, s)| !s.is_zero()),
            )?;
            match split_against(h, &c, m, &target)? {
                SplitOutcome::Splits => annihilators.push(c),
                SplitOutcome::DoesNotSplit => {}
                SplitOutcome::Unknown(why) => unknowns.push((c, why)),
            }
        }
    }

    let points = projective_points(&f, r)
        .into_iter()
        .filter(|pt| {
            annihilators
                .iter()
                .all(|c| eval_on_point(c, pt).is_zero())
        })
        .collect();

    Ok(SupportReport {
        hopf: h,
        degree_bound,
        module_dim: m.dim(),
        field: f,
        coverage,
        annihilators,
        unknowns,
        points,
    })
}

/// Evaluates a polynomial-subring class at a projective point: the degree-2
/// generator for slot i goes to alpha_i squared, so a monomial of
/// multidegree j contributes the product of alpha_i^(j_i).
fn eval_on_point(c: &CohClass, pt: &ProjPoint) -> Scalar {
    let f = c.alg().field();
    let mut acc = Scalar::ZERO;
    for (j, coef) in c.support() {
        let mut term = coef;
        for (i, &e) in j.0.iter().enumerate() {
            for _ in 0..e {
                term = f.mul(term, pt.coords[i]);
            }
        }
        acc = f.add(acc, term);
    }
    acc
}

/// One projective point's membership in the three point sets.
#[derive(Clone, Debug)]
pub struct VarietyRow {
    pub point: ProjPoint,
    pub rank: bool,
    pub support_gr: bool,
    pub support_lie: bool,
}

/// Side-by-side comparison of the rank variety with the cohomological
/// support under both coalgebra structures.
#[derive(Clone, Debug)]
pub struct VarietyReport {
    pub field: Field,
    pub module_dim: usize,
    pub degree_bound: usize,
    pub rows: Vec<VarietyRow>,
    pub gr: SupportReport,
    pub lie: SupportReport,
    /// All three memberships agree at every point.
    pub equal: bool,
}

pub fn check_variety_equality(m: &ModuleRep, degree_bound: usize) -> Result<VarietyReport> {
    let rank: BTreeSet<ProjPoint> = rank_variety_points(m).into_iter().collect();
    let gr = support_on_s(HopfStructure::Gr, m, degree_bound)?;
    let lie = support_on_s(HopfStructure::Lie, m, degree_bound)?;
    let in_gr: BTreeSet<&ProjPoint> = gr.points.iter().collect();
    let in_lie: BTreeSet<&ProjPoint> = lie.points.iter().collect();
    let rows: Vec<VarietyRow> = projective_points(m.field(), m.alg().r())
        .into_iter()
        .map(|pt| VarietyRow {
            rank: rank.contains(&pt),
            support_gr: in_gr.contains(&pt),
            support_lie: in_lie.contains(&pt),
            point: pt,
        })
        .collect();
    let equal = rows
        .iter()
        .all(|row| row.rank == row.support_gr && row.rank == row.support_lie);
    Ok(VarietyReport {
        field: m.field().clone(),
        module_dim: m.dim(),
        degree_bound,
        rows,
        gr,
        lie,
        equal,
    })
}

impl fmt::Display for VarietyReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "rank variety vs cohomological support over {:?}, module of dim {}, probed to degree {}",
            self.field, self.module_dim, self.degree_bound
        )?;
        writeln!(
            out,
            "  {:<14} {:>6} {:>12} {:>13}",
            "point", "rank", "support(Gr)", "support(Lie)"
        )?;
        for row in &self.rows {
            writeln!(
                out,
                "  {:<14} {:>6} {:>12} {:>13}",
                row.point.render(&self.field),
                mark(row.rank),
                mark(row.support_gr),
                mark(row.support_lie),
            )?;
        }
        let unknowns = self.gr.unknowns.len() + self.lie.unknowns.len();
        if unknowns > 0 {
            writeln!(
                out,
                "  {unknowns} splitting tests inconclusive; they do not constrain the supports shown"
            )?;
        }
        write!(
            out,
            "  verdict: {}",
            if self.equal {
                "rank variety and both supports agree"
            } else {
                "MISMATCH"
            }
        )
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "-"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;
    use crate::amodule::ModuleRep;
    use crate::field::FieldCtx;
    use crate::resolution::CohClass;

    fn alg(p: u32, n: usize, r: usize) -> crate::algebra::Algebra {
        AlgebraCtx::new(&FieldCtx::new(p, n).unwrap(), r).unwrap()
    }

    fn pt(f: &Field, reprs: &[u8]) -> ProjPoint {
        let els: Vec<Scalar> = f.elements().collect();
        let coords: Vec<Scalar> = reprs.iter().map(|&i| els[i as usize]).collect();
        ProjPoint::new(f, &coords).unwrap()
    }

    #[test]
    fn projective_points_enumerate_rays_once() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        let pts = projective_points(&f3, 2);
        assert_eq!(pts.len(), 4);
        let rendered: Vec<String> = pts.iter().map(|p| p.render(&f3)).collect();
        assert_eq!(rendered, ["[0:1]", "[1:0]", "[1:1]", "[1:2]"]);

        // (2, 1) and (1, 2) are the same ray over GF(3).
        assert_eq!(pt(&f3, &[2, 1]), pt(&f3, &[1, 2]));

        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(projective_points(&f4, 2).len(), 5);
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(projective_points(&f2, 3).len(), 7);

        assert!(matches!(
            ProjPoint::new(&f3, &[Scalar::ZERO, Scalar::ZERO]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn rank_variety_of_free_and_trivial_modules() {
        let a = alg(2, 2, 2);
        assert!(rank_variety_points(&ModuleRep::free(&a, 1)).is_empty());
        let everything = rank_variety_points(&ModuleRep::trivial(&a));
        assert_eq!(everything.len(), 5);

        let b = alg(3, 1, 1);
        assert!(rank_variety_points(&ModuleRep::free(&b, 2)).is_empty());
        assert_eq!(rank_variety_points(&ModuleRep::trivial(&b)).len(), 1);
    }

    #[test]
    fn rank_variety_of_l_zeta_is_the_zero_locus_of_the_class() {
        let a = alg(2, 2, 2);
        let f = a.field().clone();

        let v1 = rank_variety_points(&l_zeta(&CohClass::zeta(&a, 0)).unwrap());
        assert_eq!(v1, vec![pt(&f, &[0, 1])]);

        let mix = CohClass::zeta(&a, 0).add(&CohClass::zeta(&a, 1)).unwrap();
        let vmix = rank_variety_points(&l_zeta(&mix).unwrap());
        assert_eq!(vmix, vec![pt(&f, &[1, 1])]);
        assert!(vmix.iter().all(|p| eval_on_point(&mix, p).is_zero()));
    }

    #[test]
    fn rank_variety_of_a_direct_sum_is_the_union() {
        let a = alg(2, 2, 2);
        let m = l_zeta(&CohClass::zeta(&a, 0)).unwrap();
        let n = l_zeta(&CohClass::zeta(&a, 1)).unwrap();
        let sum: BTreeSet<ProjPoint> = rank_variety_points(&m.direct_sum(&n)).into_iter().collect();
        let union: BTreeSet<ProjPoint> = rank_variety_points(&m)
            .into_iter()
            .chain(rank_variety_points(&n))
            .collect();
        assert_eq!(sum, union);

        let with_trivial: BTreeSet<ProjPoint> =
            rank_variety_points(&m.direct_sum(&ModuleRep::trivial(&a)))
                .into_iter()
                .collect();
        assert_eq!(with_trivial.len(), 5);
    }

    #[test]
    fn annihilates_oracles() {
        // Free modules are annihilated by every class.
        let a22 = alg(2, 1, 2);
        let free = ModuleRep::free(&a22, 1);
        let z1 = CohClass::zeta(&a22, 0);
        for h in [HopfStructure::Gr, HopfStructure::Lie] {
            assert_eq!(annihilates(h, &z1, &free).unwrap(), SplitOutcome::Splits);
        }

        // Nothing of positive degree annihilates the trivial module: the
        // tensor is too small.
        assert_eq!(
            annihilates(HopfStructure::Gr, &z1, &ModuleRep::trivial(&a22)).unwrap(),
            SplitOutcome::DoesNotSplit
        );
        let a31 = alg(3, 1, 1);
        assert_eq!(
            annihilates(
                HopfStructure::Lie,
                &CohClass::zeta(&a31, 0),
                &ModuleRep::trivial(&a31)
            )
            .unwrap(),
            SplitOutcome::DoesNotSplit
        );

        // A class annihilates its own carrier module, odd characteristic.
        let a32 = alg(3, 1, 2);
        let z = CohClass::zeta(&a32, 0);
        let lz = l_zeta(&z).unwrap();
        let gr = annihilates(HopfStructure::Gr, &z, &lz).unwrap();
        let lie = annihilates(HopfStructure::Lie, &z, &lz).unwrap();
        assert_eq!(gr, SplitOutcome::Splits);
        assert_eq!(gr, lie);

        // Preconditions.
        assert!(matches!(
            annihilates(HopfStructure::Gr, &CohClass::zero(&a22, 2), &free),
            Err(Error::ZeroClass(_))
        ));
        assert!(matches!(
            annihilates(HopfStructure::Gr, &CohClass::unit(&a22), &free),
            Err(Error::DegreeZeroClass)
        ));
        assert!(matches!(
            annihilates(HopfStructure::Gr, &CohClass::zeta(&a31, 0), &free),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn support_of_free_is_empty_and_of_trivial_is_everything() {
        let a = alg(2, 1, 2);

        let free = support_on_s(HopfStructure::Gr, &ModuleRep::free(&a, 1), 2).unwrap();
        assert_eq!(free.annihilators.len(), 3);
        assert!(free.points.is_empty());
        assert_eq!(free.coverage.len(), 1);
        assert_eq!(
            (free.coverage[0].degree, free.coverage[0].tested, free.coverage[0].exhaustive),
            (2, 3, true)
        );
        assert!(free.unknowns.is_empty());

        let triv = support_on_s(HopfStructure::Lie, &ModuleRep::trivial(&a), 2).unwrap();
        assert!(triv.annihilators.is_empty());
        assert_eq!(triv.points.len(), 3);

        assert!(matches!(
            support_on_s(HopfStructure::Gr, &ModuleRep::trivial(&a), 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn support_matches_the_rank_variety_for_l_zeta() {
        let a = alg(2, 2, 2);
        let f = a.field().clone();
        let m = l_zeta(&CohClass::zeta(&a, 0)).unwrap();

        let gr = support_on_s(HopfStructure::Gr, &m, 2).unwrap();
        let lie = support_on_s(HopfStructure::Lie, &m, 2).unwrap();

        // Of the five degree-2 rays over GF(4), only zeta_1 itself splits.
        assert_eq!(gr.annihilators.len(), 1);
        let found = &gr.annihilators[0];
        let sup: Vec<_> = found.support().collect();
        assert_eq!(sup, vec![(&MultiDegree(vec![2, 0]), Scalar::ONE)]);

        assert_eq!(gr.points, vec![pt(&f, &[0, 1])]);
        assert_eq!(gr.points, lie.points);
        assert_eq!(gr.points, rank_variety_points(&m));
        assert!(gr.unknowns.is_empty() && lie.unknowns.is_empty());

        let shown = gr.to_string();
        assert!(shown.contains("Gr structure"));
        assert!(shown.contains("support: {[0:1]}"));
    }

    #[test]
    fn variety_report_agrees_on_derived_examples() {
        let a = alg(2, 2, 2);
        let f = a.field().clone();

        let report = check_variety_equality(&ModuleRep::trivial(&a), 2).unwrap();
        assert!(report.equal);
        assert!(report.rows.iter().all(|r| r.rank && r.support_gr && r.support_lie));

        let report = check_variety_equality(&ModuleRep::free(&a, 1), 2).unwrap();
        assert!(report.equal);
        assert!(report.rows.iter().all(|r| !r.rank && !r.support_gr && !r.support_lie));

        let mix = CohClass::zeta(&a, 0).add(&CohClass::zeta(&a, 1)).unwrap();
        let report = check_variety_equality(&l_zeta(&mix).unwrap(), 4).unwrap();
        assert!(report.equal);
        let members: Vec<&VarietyRow> = report.rows.iter().filter(|r| r.rank).collect();
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].point, pt(&f, &[1, 1]));

        let shown = report.to_string();
        assert!(shown.contains("verdict: rank variety and both supports agree"));
        assert!(shown.contains("[1:1]"));
    }
}

