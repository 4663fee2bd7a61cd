//! Tensor square of a two-dimensional kernel module over GF(4), where the
//! two coproducts part ways: under Lie the square splits as two copies of
//! the module, under Gr it is indecomposable. The whole difference is one
//! socle term in the x1 action on u (x) u.

use crate::algebra::{AlgebraCtx, HopfStructure};
use crate::amodule::{decompose, is_isomorphic, tensor};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::resolution::{l_zeta, CohClass, MultiDegree};
use std::fmt;

const DECOMPOSE_SEED: u64 = 0x0ddba11;

pub struct BadHopfReport {
    pub field: Field,
    pub alpha: Scalar,
    pub module_dim: usize,
    /// Lie tensor square summands as (dim, multiplicity, isomorphic to L).
    pub lie_summands: Vec<(usize, usize, bool)>,
    pub lie_certified: bool,
    /// Gr tensor square summands as (dim, multiplicity).
    pub gr_summands: Vec<(usize, usize)>,
    pub gr_certified: bool,
    /// Coefficients of x_i(u (x) u) on (u (x) v, v (x) u, v (x) v).
    pub x1_row: [Scalar; 3],
    pub x2_row: [Scalar; 3],
    /// Basis bookkeeping held: u generates, v = x2 u spans the socle,
    /// x1 u = alpha (x2 u), and neither action leaks onto u (x) u.
    pub basis_ok: bool,
}

impl BadHopfReport {
    pub fn lie_splits_as_two_copies(&self) -> bool {
        self.lie_summands == vec![(self.module_dim, 2, true)]
    }

    pub fn gr_indecomposable(&self) -> bool {
        self.gr_certified && self.gr_summands == vec![(self.module_dim * self.module_dim, 1)]
    }

    /// x1(u (x) u) = alpha (u (x) v) + alpha (v (x) u) + alpha^2 (v (x) v)
    /// and x2(u (x) u) = (u (x) v) + (v (x) u) + (v (x) v). Over GF(4) with
    /// alpha outside the prime field this is the same as
    /// x1(u (x) u) = alpha (x2(u (x) u) + alpha^2 (v (x) v)), since
    /// 1 + alpha + alpha^2 = 0.
    pub fn identity_holds(&self) -> bool {
        let f = &self.field;
        let a = self.alpha;
        let a2 = f.mul(a, a);
        self.basis_ok && self.x1_row == [a, a, a2] && self.x2_row == [Scalar::ONE; 3]
    }

    pub fn all_pass(&self) -> bool {
        self.lie_splits_as_two_copies()
            && self.lie_certified
            && self.gr_indecomposable()
            && self.identity_holds()
    }
}

impl fmt::Display for BadHopfReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        writeln!(
            out,
            "badhopf: {:?}, r=2, alpha = {}",
            f,
            f.format_scalar(self.alpha)
        )?;
        writeln!(
            out,
            "zeta = alpha*e1 + e2; dim L_zeta = {}; relations x1*u = alpha*(x2*u), v := x2*u",
            self.module_dim
        )?;
        let lie: Vec<String> = self
            .lie_summands
            .iter()
            .map(|&(d, m, same)| {
                let name = if same { "L_zeta".into() } else { format!("dim {d}") };
                if m == 1 { name } else { format!("{m} x {name}") }
            })
            .collect();
        writeln!(
            out,
            "tensor square under Lie: {}{}",
            lie.join(" (+) "),
            if self.lie_certified { "  [certified]" } else { "  [uncertified]" }
        )?;
        let gr: Vec<String> = self
            .gr_summands
            .iter()
            .map(|&(d, m)| if m == 1 { format!("dim {d}") } else { format!("{m} x dim {d}") })
            .collect();
        writeln!(
            out,
            "tensor square under Gr: {} summand(s): {}{}",
            self.gr_summands.len(),
            gr.join(" (+) "),
            if self.gr_certified { "  [certified]" } else { "  [uncertified]" }
        )?;
        writeln!(out, "gr action on u(x)u:")?;
        if self.identity_holds() {
            writeln!(
                out,
                "  x1(u(x)u) = alpha*(u(x)v) + alpha*(v(x)u) + alpha^2*(v(x)v)"
            )?;
            writeln!(out, "            = alpha * ( x2(u(x)u) + alpha^2*(v(x)v) )")?;
            writeln!(out, "  x2(u(x)u) = (u(x)v) + (v(x)u) + (v(x)v)")?;
            writeln!(
                out,
                "  the v(x)v term is the obstruction: under Gr no complement of u(x)u is stable"
            )?;
        } else {
            let row = |r: &[Scalar; 3]| {
                r.iter().map(|&c| f.format_scalar(c)).collect::<Vec<_>>().join(", ")
            };
            writeln!(out, "  x1 on (u(x)v, v(x)u, v(x)v): ({})", row(&self.x1_row))?;
            writeln!(out, "  x2 on (u(x)v, v(x)u, v(x)v): ({})", row(&self.x2_row))?;
            writeln!(out, "  basis bookkeeping ok: {}", self.basis_ok)?;
        }
        writeln!(
            out,
            "verdict: {}",
            if self.all_pass() { "PASS" } else { "FAIL" }
        )
    }
}

/// Build L = L_zeta for zeta = eta1 - alpha*eta2 over GF(4), tensor it with
/// itself under both coproducts, decompose both squares, and expand the Gr
/// action on u (x) u. Requires alpha outside {0, 1}.
///
/// Kernel convention: the degree-one class with coefficients (alpha, 1) on
/// (e1, e2) yields the relations x1 u = alpha (x2 u), x1 v = x2 v = 0.
pub fn badhopf(f: &Field, alpha: Scalar) -> Result<BadHopfReport> {
    if f.p() != 2 || f.n() != 2 {
        return Err(Error::Unsupported(
            "the tensor-square contrast is pinned to GF(4)".into(),
        ));
    }
    if alpha.is_zero() || alpha == Scalar::ONE {
        return Err(Error::Unsupported(
            "alpha in {0, 1} degenerates the kernel module".into(),
        ));
    }
    let alg = AlgebraCtx::new(f, 2)?;
    let c = CohClass::from_support(
        &alg,
        1,
        [
            (MultiDegree(vec![1, 0]), alpha),
            (MultiDegree(vec![0, 1]), Scalar::ONE),
        ],
    )?;
    let l = l_zeta(&c)?;
    let dim = l.dim();

    // Locate the generator u (x2 moves it) and the socle line v = x2 u.
    let x1 = l.gen_mat(0);
    let x2 = l.gen_mat(1);
    let iu = (0..dim)
        .find(|&j| x2.col(j).iter().any(|c| !c.is_zero()))
        .ok_or_else(|| Error::Unsupported("kernel module came out with zero action".into()))?;
    let iv = 1 - iu;
    let v = x2.col(iu);
    let lam = v[iv];
    let w1 = x1.col(iu);
    let mut basis_ok = dim == 2
        && v[iu].is_zero()
        && !lam.is_zero()
        && w1[iu].is_zero()
        && w1[iv] == f.mul(alpha, lam)
        && x1.col(iv).iter().all(|c| c.is_zero())
        && x2.col(iv).iter().all(|c| c.is_zero());

    let t_gr = tensor(HopfStructure::Gr, &l, &l)?;
    let t_lie = tensor(HopfStructure::Lie, &l, &l)?;

    let lie = decompose(&t_lie, DECOMPOSE_SEED);
    let lie_summands = lie
        .summands
        .iter()
        .map(|(s, mult)| {
            let same = is_isomorphic(s, &l).map(|v| v.is_yes()).unwrap_or(false);
            (s.dim(), *mult, same)
        })
        .collect();
    let gr = decompose(&t_gr, DECOMPOSE_SEED);
    let gr_summands = gr.summands.iter().map(|(s, m)| (s.dim(), *m)).collect();

    // Expansion of x_i(u (x) u) over u (x) v, v (x) u, v (x) v, where
    // u (x) v = lam (e_iu (x) e_iv) and so on; the u (x) u coefficient
    // must vanish for the expansion to be complete.
    let idx = |i: usize, j: usize| i * dim + j;
    let lam_inv = f.inv(lam)?;
    let lam2_inv = f.mul(lam_inv, lam_inv);
    let mut rows = [[Scalar::ZERO; 3]; 2];
    for (g, row) in rows.iter_mut().enumerate() {
        let w = t_gr.gen_mat(g).col(idx(iu, iu));
        row[0] = f.mul(w[idx(iu, iv)], lam_inv);
        row[1] = f.mul(w[idx(iv, iu)], lam_inv);
        row[2] = f.mul(w[idx(iv, iv)], lam2_inv);
        basis_ok &= w[idx(iu, iu)].is_zero();
    }

    Ok(BadHopfReport {
        field: f.clone(),
        alpha,
        module_dim: dim,
        lie_summands,
        lie_certified: lie.certified,
        gr_summands,
        gr_certified: gr.certified,
        x1_row: rows[0],
        x2_row: rows[1],
        basis_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn badhopf_reproduces_the_tensor_square_contrast() {
        let f = FieldCtx::new(2, 2).unwrap();
        let a = f.gen();
        let rep = badhopf(&f, a).unwrap();
        assert_eq!(rep.module_dim, 2);
        assert!(rep.basis_ok);
        assert_eq!(rep.lie_summands, vec![(2, 2, true)]);
        assert!(rep.lie_certified);
        assert_eq!(rep.gr_summands, vec![(4, 1)]);
        assert!(rep.gr_certified);
        let a2 = f.mul(a, a);
        assert_eq!(rep.x1_row, [a, a, a2]);
        assert_eq!(rep.x2_row, [Scalar::ONE; 3]);
        assert!(rep.all_pass());

        let text = rep.to_string();
        assert!(text.contains("x2(u(x)u) + alpha^2*(v(x)v)"));
        assert!(text.contains("verdict: PASS"));

        // the other element outside the prime field works the same way
        let rep2 = badhopf(&f, a2).unwrap();
        assert!(rep2.all_pass());
    }

    #[test]
    fn badhopf_rejects_degenerate_alpha_and_other_fields() {
        let f = FieldCtx::new(2, 2).unwrap();
        assert!(matches!(
            badhopf(&f, Scalar::ZERO),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            badhopf(&f, Scalar::ONE),
            Err(Error::Unsupported(_))
        ));
        let f8 = FieldCtx::new(2, 3).unwrap();
        assert!(matches!(
            badhopf(&f8, f8.gen()),
            Err(Error::Unsupported(_))
        ));
    }
}
