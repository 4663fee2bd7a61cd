//! Dense matrices over GF(p^n) with exact Gauss-Jordan elimination.
//!
//! Vectors are columns and maps act on the left, so the matrix of a
//! composite g∘f is `mat(g) * mat(f)`. Reduced row echelon form is unique,
//! which makes every derived object here (rank, kernel basis, image basis,
//! particular solutions with free variables pinned to zero) canonical: two
//! runs, or two different elimination back ends, produce identical bytes.
//!
//! Shape and field mismatches are programmer errors and panic; fallible
//! validation belongs to the layers that parse external data.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::packed;
use std::fmt;

#[derive(Clone)]
pub struct MatrixGF {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    field: Field,
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field == other.field
            && self.data == other.data
    }
}
impl Eq for MatrixGF {}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows.min(12) {
            let row: Vec<String> = (0..self.cols.min(24))
                .map(|j| self.field.format_scalar(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// dst += c * src, elementwise over the field.
#[inline]
pub(crate) fn axpy(field: &Field, dst: &mut [Scalar], src: &[Scalar], c: Scalar) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    let mul_row = field.mul_row(c);
    if field.p() == 2 {
        // Addition in GF(2^n) is xor of index encodings.
        for (d, s) in dst.iter_mut().zip(src) {
            d.0 ^= mul_row[s.0 as usize];
        }
    } else {
        let add_t = field.add_table();
        let q = field.q();
        for (d, s) in dst.iter_mut().zip(src) {
            let prod = mul_row[s.0 as usize] as usize;
            d.0 = add_t[d.0 as usize * q + prod];
        }
    }
}

impl MatrixGF {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        MatrixGF {
            rows,
            cols,
            data: vec![Scalar::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatrixGF {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            field: field.clone(),
        }
    }

    /// Column vector from a slice.
    pub fn col_vec(field: &Field, v: &[Scalar]) -> Self {
        MatrixGF {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
            field: field.clone(),
        }
    }

    /// Row vector from a slice.
    pub fn row_vec(field: &Field, v: &[Scalar]) -> Self {
        MatrixGF {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
            field: field.clone(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let mut out = self.clone();
        axpy(&self.field, &mut out.data, &other.data, Scalar::ONE);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let mut out = self.clone();
        let minus_one = self.field.neg(Scalar::ONE);
        axpy(&self.field, &mut out.data, &other.data, minus_one);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(Scalar::ONE))
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, self.cols);
        axpy(&self.field, &mut out.data, &self.data, c);
        out
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(self.field, other.field, "field contexts differ");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    /// Matrix product. Skips zero entries of the left factor, so products
    /// with structurally sparse operators cost proportional to their
    /// support; switches to a bit-packed kernel over p = 2 fields when the
    /// operands are large enough for it to pay off.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field contexts differ");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        if packed::worth_packing(&self.field, self.rows, self.cols, other.cols) {
            return packed::mul(self, other);
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let dst_start = i * other.cols;
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    let dst = &mut out.data[dst_start..dst_start + other.cols];
                    axpy(&self.field, dst, other.row(k), a);
                }
            }
        }
        out
    }

    /// v ↦ self * v for a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = vec![Scalar::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::ZERO;
            let row = self.row(i);
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc = self.field.add(acc, self.field.mul(*a, *b));
                }
            }
            out[i] = acc;
        }
        out
    }

    /// v ↦ v * self for a row vector.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "shape mismatch in apply_row");
        let mut out = vec![Scalar::ZERO; self.cols];
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(&self.field, &mut out, self.row(i), *c);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap_or_else(|| Self::identity(&self.field, self.rows))
    }

    /// Kronecker product with flat index (i, j) ↦ i * dim(other) + j on both
    /// sides, matching the tensor product convention used throughout.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field contexts differ");
        let mut out = Self::zeros(
            &self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..other.rows {
                    let dst_row = ia * other.rows + ib;
                    let base = dst_row * out.cols + ja * other.cols;
                    let src = other.row(ib);
                    let mul_row = self.field.mul_row(a);
                    for (jb, s) in src.iter().enumerate() {
                        if !s.is_zero() {
                            let v = Scalar(mul_row[s.0 as usize]);
                            let slot = &mut out.data[base + jb];
                            *slot = self.field.add(*slot, v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[&MatrixGF]) -> Self {
        assert!(!parts.is_empty());
        let field = parts[0].field.clone();
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows && m.field == field));
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(&field, rows, cols);
        for i in 0..rows {
            let mut off = 0;
            for m in parts {
                out.row_mut(i)[off..off + m.cols].copy_from_slice(m.row(i));
                off += m.cols;
            }
        }
        out
    }

    pub fn vstack(parts: &[&MatrixGF]) -> Self {
        assert!(!parts.is_empty());
        let field = parts[0].field.clone();
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols && m.field == field));
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        MatrixGF { rows, cols, data, field }
    }

    /// self[row0.., col0..] += c * src, shapes aligned at the offset.
    pub(crate) fn add_scaled_block(&mut self, row0: usize, col0: usize, src: &MatrixGF, c: Scalar) {
        debug_assert!(row0 + src.rows <= self.rows && col0 + src.cols <= self.cols);
        if c.is_zero() {
            return;
        }
        let field = self.field.clone();
        for i in 0..src.rows {
            let d = (row0 + i) * self.cols + col0;
            axpy(
                &field,
                &mut self.data[d..d + src.cols],
                &src.data[i * src.cols..(i + 1) * src.cols],
                c,
            );
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            out.row_mut(ii).copy_from_slice(self.row(i));
        }
        out
    }

    /// Reduced row echelon form and the pivot column list.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        if packed::worth_packing(&self.field, self.rows, self.cols, self.cols) {
            return packed::rref(self);
        }
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, returned as the columns of a matrix
    /// (cols × nullity). Basis vectors are indexed by the free columns in
    /// ascending order, each with a 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Basis of the column space: the pivot columns of the original matrix,
    /// plus the pivot column indices.
    pub fn image_basis(&self) -> (Self, Vec<usize>) {
        let (_, pivots) = self.rref();
        (self.select_cols(&pivots), pivots)
    }

    /// One solution of `self * x = b` (free variables zero), or None.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let rhs = MatrixGF::col_vec(&self.field, b);
        self.solve_matrix(&rhs).map(|x| x.col(0))
    }

    /// Solve `self * X = B` columnwise; None if any column is inconsistent.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.field, b.field, "field contexts differ");
        assert_eq!(self.rows, b.rows, "rhs row count mismatch");
        let aug = MatrixGF::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = MatrixGF::zeros(&self.field, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn invert(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "invert needs a square matrix");
        let id = MatrixGF::identity(&self.field, self.rows);
        let aug = MatrixGF::hstack(&[self, &id]);
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let idx: Vec<usize> = (self.cols..2 * self.cols).collect();
        Some(r.select_cols(&idx))
    }

    /// Left inverse of a matrix with full column rank: L with L * self = I.
    pub fn left_inverse(&self) -> Result<Self> {
        let id = MatrixGF::identity(&self.field, self.rows);
        let aug = MatrixGF::hstack(&[self, &id]);
        let (r, pivots) = aug.rref();
        let k = self.cols;
        if pivots.len() < k || pivots[..k].iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::Unsupported(
                "left_inverse needs full column rank".into(),
            ));
        }
        let row_idx: Vec<usize> = (0..k).collect();
        let col_idx: Vec<usize> = (k..k + self.rows).collect();
        Ok(r.select_rows(&row_idx).select_cols(&col_idx))
    }
}

/// In-place Gauss-Jordan; returns pivot columns.
pub(crate) fn rref_in_place(m: &mut MatrixGF) -> Vec<usize> {
    let field = m.field.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut pr = None;
        for i in r..rows {
            if !m.get(i, c).is_zero() {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        if pr != r {
            for j in 0..cols {
                let a = m.get(r, j);
                let b = m.get(pr, j);
                m.set(r, j, b);
                m.set(pr, j, a);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
        if inv != Scalar::ONE {
            let mut scaled = vec![Scalar::ZERO; cols];
            axpy(&field, &mut scaled, m.row(r), inv);
            m.row_mut(r).copy_from_slice(&scaled);
        }
        // Eliminate the pivot column from every other row.
        let pivot_row = m.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c);
            if !f.is_zero() {
                let neg_f = field.neg(f);
                axpy(&field, m.row_mut(i), &pivot_row, neg_f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn kernel_from_rref(r: &MatrixGF, pivots: &[usize]) -> MatrixGF {
    let field = r.field().clone();
    let cols = r.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut k = MatrixGF::zeros(&field, cols, free.len());
    for (jj, &f) in free.iter().enumerate() {
        k.set(f, jj, Scalar::ONE);
        for (i, &pc) in pivots.iter().enumerate() {
            k.set(pc, jj, field.neg(r.get(i, f)));
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn random_matrix(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> MatrixGF {
        MatrixGF::from_fn(field, rows, cols, |_, _| field.sample(rng))
    }

    #[test]
    fn rref_pinned_gf2() {
        let f = FieldCtx::new(2, 1).unwrap();
        let one = Scalar::ONE;
        let zero = Scalar::ZERO;
        let m = MatrixGF::from_rows(
            &f,
            vec![
                vec![one, one, zero],
                vec![one, one, one],
                vec![zero, zero, one],
            ],
        );
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r.row(0), &[one, one, zero]);
        assert_eq!(r.row(1), &[zero, zero, one]);
        assert_eq!(r.row(2), &[zero, zero, zero]);
    }

    #[test]
    fn kernel_and_rank_nullity() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for (p, n) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)] {
            let f = FieldCtx::new(p, n).unwrap();
            for _ in 0..20 {
                let rows = rng.gen_range(1..8);
                let cols = rng.gen_range(1..8);
                let m = random_matrix(&f, rows, cols, &mut rng);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.cols(), cols);
                if k.cols() > 0 {
                    assert!(m.mul(&k).is_zero());
                }
                let (img, pivots) = m.image_basis();
                assert_eq!(img.cols(), pivots.len());
                assert_eq!(img.rank(), pivots.len());
            }
        }
    }

    #[test]
    fn solve_and_invert() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let f = FieldCtx::new(3, 2).unwrap();
        for _ in 0..20 {
            let n = rng.gen_range(1..7);
            let m = random_matrix(&f, n, n, &mut rng);
            let x: Vec<Scalar> = (0..n).map(|_| f.sample(&mut rng)).collect();
            let b = m.apply(&x);
            let sol = m.solve(&b).expect("constructed system is consistent");
            assert_eq!(m.apply(&sol), b);
            if let Some(inv) = m.invert() {
                assert_eq!(m.mul(&inv), MatrixGF::identity(&f, n));
                assert_eq!(inv.mul(&m), MatrixGF::identity(&f, n));
            } else {
                assert!(m.rank() < n);
            }
        }
    }

    #[test]
    fn left_inverse_of_tall_full_rank() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        let f = FieldCtx::new(2, 3).unwrap();
        for _ in 0..20 {
            let k = rng.gen_range(1..5);
            let n = k + rng.gen_range(0..4);
            let m = random_matrix(&f, n, k, &mut rng);
            if m.rank() < k {
                continue;
            }
            let l = m.left_inverse().unwrap();
            assert_eq!(l.mul(&m), MatrixGF::identity(&f, k));
        }
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        let f = FieldCtx::new(2, 2).unwrap();
        for _ in 0..10 {
            let a = random_matrix(&f, 3, 2, &mut rng);
            let b = random_matrix(&f, 2, 3, &mut rng);
            let c = random_matrix(&f, 2, 3, &mut rng);
            let d = random_matrix(&f, 3, 2, &mut rng);
            let lhs = a.kron(&b).mul(&c.kron(&d));
            let rhs = a.mul(&c).kron(&b.mul(&d));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        let f = FieldCtx::new(3, 1).unwrap();
        let m = random_matrix(&f, 4, 4, &mut rng);
        let mut acc = MatrixGF::identity(&f, 4);
        for e in 0..6 {
            assert_eq!(m.pow(e), acc);
            acc = acc.mul(&m);
        }
    }
}
