//! Bit-packed elimination and products for fields of characteristic 2.
//!
//! Over GF(2^e) a scalar's index encodes its coefficient bits, so a matrix
//! splits into e GF(2) planes with each row packed into u64 words, and
//! multiplication by a fixed scalar is an e x e bit matrix mixing the
//! planes. Row operations then cost a few word-wide xor sweeps instead of
//! per-entry table lookups. Reduced row echelon form is unique, so this
//! back end and the byte-wise one return identical results and callers can
//! switch on size alone.

use crate::field::{Field, Scalar};
use crate::matrix::MatrixGF;

/// Size heuristic used by `MatrixGF::mul` and `MatrixGF::rref`; arguments
/// are (rows, inner, cols) of the product shape, or (rows, cols, cols) for
/// elimination.
pub(crate) fn worth_packing(field: &Field, rows: usize, inner: usize, cols: usize) -> bool {
    field.p() == 2 && rows.saturating_mul(inner).saturating_mul(cols) >= 1 << 17
}

/// Columns of the multiply-by-c bit matrix for every scalar c: row k of
/// `masks[c][j]` (bit k) is the t^k coefficient of c * t^j.
fn scalar_masks(field: &Field) -> Vec<[u8; 4]> {
    let e = field.n();
    let q = field.q();
    let mut masks = vec![[0u8; 4]; q];
    for (v, m) in masks.iter_mut().enumerate() {
        for j in 0..e {
            m[j] = field.mul(Scalar(v as u8), Scalar(1 << j)).0;
        }
    }
    masks
}

struct Planes {
    rows: usize,
    cols: usize,
    words: usize,
    e: usize,
    // bits[k] holds plane k, rows * words u64s.
    bits: Vec<Vec<u64>>,
}

impl Planes {
    fn pack(m: &MatrixGF) -> Planes {
        let e = m.field().n();
        let rows = m.rows();
        let cols = m.cols();
        let words = cols.div_ceil(64);
        let mut bits = vec![vec![0u64; rows * words]; e];
        for i in 0..rows {
            for j in 0..cols {
                let v = m.get(i, j).0;
                if v == 0 {
                    continue;
                }
                let w = i * words + (j >> 6);
                let b = j & 63;
                for (k, plane) in bits.iter_mut().enumerate() {
                    if (v >> k) & 1 == 1 {
                        plane[w] |= 1u64 << b;
                    }
                }
            }
        }
        Planes { rows, cols, words, e, bits }
    }

    fn unpack(&self, field: &Field) -> MatrixGF {
        MatrixGF::from_fn(field, self.rows, self.cols, |i, j| Scalar(self.get(i, j)))
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> u8 {
        let w = i * self.words + (j >> 6);
        let b = j & 63;
        let mut v = 0u8;
        for k in 0..self.e {
            v |= (((self.bits[k][w] >> b) & 1) as u8) << k;
        }
        v
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for plane in &mut self.bits {
            for w in 0..self.words {
                plane.swap(a * self.words + w, b * self.words + w);
            }
        }
    }

    fn copy_row(&self, i: usize) -> Vec<Vec<u64>> {
        self.bits
            .iter()
            .map(|plane| plane[i * self.words..(i + 1) * self.words].to_vec())
            .collect()
    }

    /// row_i = c * src, where src is a detached row copy.
    fn set_row_scaled(&mut self, i: usize, src: &[Vec<u64>], mask: &[u8; 4]) {
        for k in 0..self.e {
            let out = &mut self.bits[k][i * self.words..(i + 1) * self.words];
            out.fill(0);
            for (j, src_plane) in src.iter().enumerate() {
                if (mask[j] >> k) & 1 == 1 {
                    for (d, s) in out.iter_mut().zip(src_plane) {
                        *d ^= s;
                    }
                }
            }
        }
    }

    /// row_i ^= c * src (addition and subtraction coincide here).
    fn axpy_row(&mut self, i: usize, src: &[Vec<u64>], mask: &[u8; 4]) {
        for k in 0..self.e {
            let out = &mut self.bits[k][i * self.words..(i + 1) * self.words];
            for (j, src_plane) in src.iter().enumerate() {
                if (mask[j] >> k) & 1 == 1 {
                    for (d, s) in out.iter_mut().zip(src_plane) {
                        *d ^= s;
                    }
                }
            }
        }
    }
}

pub(crate) fn rref(m: &MatrixGF) -> (MatrixGF, Vec<usize>) {
    let field = m.field().clone();
    let masks = scalar_masks(&field);
    let mut pk = Planes::pack(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pk.cols {
        if r == pk.rows {
            break;
        }
        let Some(pr) = (r..pk.rows).find(|&i| pk.get(i, c) != 0) else {
            continue;
        };
        pk.swap_rows(r, pr);
        let lead = pk.get(r, c);
        if lead != 1 {
            let inv = field.inv(Scalar(lead)).expect("pivot is nonzero").0;
            let src = pk.copy_row(r);
            pk.set_row_scaled(r, &src, &masks[inv as usize]);
        }
        let pivot_row = pk.copy_row(r);
        for i in 0..pk.rows {
            if i == r {
                continue;
            }
            let f = pk.get(i, c);
            if f != 0 {
                pk.axpy_row(i, &pivot_row, &masks[f as usize]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pk.unpack(&field), pivots)
}

pub(crate) fn mul(a: &MatrixGF, b: &MatrixGF) -> MatrixGF {
    let field = a.field().clone();
    let e = field.n();
    let masks = scalar_masks(&field);
    let pb = Planes::pack(b);
    let mut out = MatrixGF::zeros(&field, a.rows(), b.cols());
    let mut acc = vec![vec![0u64; pb.words]; e];
    for i in 0..a.rows() {
        for plane in &mut acc {
            plane.fill(0);
        }
        for k in 0..a.cols() {
            let v = a.get(i, k).0;
            if v == 0 {
                continue;
            }
            let mask = &masks[v as usize];
            for (j, m) in mask.iter().enumerate().take(e) {
                if *m == 0 {
                    continue;
                }
                let src = &pb.bits[j][k * pb.words..(k + 1) * pb.words];
                for t in 0..e {
                    if (m >> t) & 1 == 1 {
                        for (d, s) in acc[t].iter_mut().zip(src) {
                            *d ^= s;
                        }
                    }
                }
            }
        }
        for j in 0..b.cols() {
            let w = j >> 6;
            let bit = j & 63;
            let mut v = 0u8;
            for (t, plane) in acc.iter().enumerate() {
                v |= (((plane[w] >> bit) & 1) as u8) << t;
            }
            if v != 0 {
                out.set(i, j, Scalar(v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::matrix::rref_in_place;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn random_matrix(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> MatrixGF {
        MatrixGF::from_fn(field, rows, cols, |_, _| field.sample(rng))
    }

    #[test]
    fn packed_rref_matches_bytewise() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        for n in 1..=4 {
            let f = FieldCtx::new(2, n).unwrap();
            for _ in 0..15 {
                let rows = rng.gen_range(1..40);
                let cols = rng.gen_range(1..80);
                let m = random_matrix(&f, rows, cols, &mut rng);
                let mut byte = m.clone();
                let byte_pivots = rref_in_place(&mut byte);
                let (fast, fast_pivots) = rref(&m);
                assert_eq!(byte_pivots, fast_pivots);
                assert_eq!(byte, fast);
            }
        }
    }

    #[test]
    fn packed_mul_matches_bytewise() {
        let mut rng = ChaCha12Rng::seed_from_u64(43);
        for n in 1..=4 {
            let f = FieldCtx::new(2, n).unwrap();
            for _ in 0..15 {
                let m = rng.gen_range(1..20);
                let k = rng.gen_range(1..20);
                let c = rng.gen_range(1..20);
                let a = random_matrix(&f, m, k, &mut rng);
                let b = random_matrix(&f, k, c, &mut rng);
                let slow = MatrixGF::from_fn(&f, m, c, |i, j| {
                    let mut acc = Scalar::ZERO;
                    for t in 0..k {
                        acc = f.add(acc, f.mul(a.get(i, t), b.get(t, j)));
                    }
                    acc
                });
                assert_eq!(mul(&a, &b), slow);
                assert_eq!(a.mul(&b), slow);
            }
        }
    }
}
