//! Finite fields GF(p^n) for p^n <= 256.
//!
//! Elements are stored as a single byte index encoding the coefficient
//! vector of the element in the polynomial basis, base p, low degree first.
//! A [`FieldCtx`] owns full addition/multiplication tables, so scalar
//! arithmetic is two table lookups; contexts travel with containers
//! (matrices, algebra elements), never with individual scalars.
//!
//! The modulus for an extension field is not an input: for given (p, n) the
//! context always selects the lexicographically smallest monic irreducible
//! polynomial of degree n, coefficients compared low degree first. This
//! makes every serialized artifact reproducible from (p, n) alone.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Shared handle to a field context.
pub type Field = Arc<FieldCtx>;

/// An element of a finite field, valid only relative to the [`FieldCtx`]
/// it was produced by. The context is deliberately not stored here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(pub(crate) u8);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Index of the element in the canonical enumeration of the field
    /// (coefficient vector read as a base-p integer, low digit = constant
    /// coefficient).
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// Arithmetic context for GF(p^n).
pub struct FieldCtx {
    p: u32,
    n: usize,
    q: usize,
    /// Monic modulus, n+1 coefficients, constant term first.
    modulus: Vec<u32>,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    neg_t: Vec<u8>,
    inv_t: Vec<u8>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}
impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of polynomial division over GF(p). Coefficients ascending.
fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    while a.len() > db {
        let lead = *a.last().unwrap() % p;
        let da = a.len() - 1;
        if lead != 0 {
            for i in 0..=db {
                let idx = da - db + i;
                a[idx] = (a[idx] + (p - lead) * b[i]) % p;
            }
        }
        a.pop();
    }
    a
}

fn poly_is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Monic polynomial of degree n drawn from counter m, with the constant
/// coefficient as the most significant digit of m. Counting m upward thus
/// enumerates candidates in lexicographic order, low-degree coefficients
/// compared first.
fn candidate(m: u64, p: u32, n: usize) -> Vec<u32> {
    let mut coeffs = vec![0u32; n + 1];
    coeffs[n] = 1;
    let mut rest = m;
    for i in (0..n).rev() {
        coeffs[i] = (rest % p as u64) as u32;
        rest /= p as u64;
    }
    coeffs
}

/// Enumerate monic polynomials of degree d over GF(p), any order.
fn monic_polys(p: u32, d: usize) -> Vec<Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count)
        .map(|m| {
            let mut c = vec![0u32; d + 1];
            c[d] = 1;
            let mut rest = m;
            for slot in c.iter_mut().take(d) {
                *slot = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            c
        })
        .collect()
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if f[0] == 0 {
        return false; // divisible by t
    }
    for d in 1..=n / 2 {
        for g in monic_polys(p, d) {
            if poly_is_zero(&poly_rem(f.to_vec(), &g, p)) {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Construct GF(p^n). Requires p prime, 1 <= n <= 4 and p^n <= 256.
    /// The modulus is the lexicographically smallest monic irreducible
    /// polynomial of degree n (coefficients compared low degree first);
    /// for n = 1 it is t itself and elements are plain residues mod p.
    pub fn new(p: u32, n: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 || n > 4 {
            return Err(Error::DegreeOutOfRange(n));
        }
        let q64 = (p as u64).pow(n as u32);
        if q64 > 256 {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as usize;

        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            for m in 0..q64 {
                let f = candidate(m, p, n);
                if is_irreducible(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("an irreducible polynomial of each degree exists")
        };

        let to_coeffs = |idx: usize| -> Vec<u32> {
            let mut c = vec![0u32; n];
            let mut rest = idx as u64;
            for slot in c.iter_mut() {
                *slot = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            c
        };
        let from_coeffs = |c: &[u32]| -> usize {
            let mut idx = 0u64;
            for &d in c.iter().rev() {
                idx = idx * p as u64 + d as u64;
            }
            idx as usize
        };

        let mut add_t = vec![0u8; q * q];
        let mut mul_t = vec![0u8; q * q];
        let mut neg_t = vec![0u8; q];
        for a in 0..q {
            let ca = to_coeffs(a);
            let neg: Vec<u32> = ca.iter().map(|&c| (p - c) % p).collect();
            neg_t[a] = from_coeffs(&neg) as u8;
            for b in 0..q {
                let cb = to_coeffs(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add_t[a * q + b] = from_coeffs(&sum) as u8;

                let mut prod = vec![0u32; 2 * n - 1];
                for (i, &x) in ca.iter().enumerate() {
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut red = poly_rem(prod, &modulus, p);
                red.resize(n, 0);
                mul_t[a * q + b] = from_coeffs(&red) as u8;
            }
        }
        let mut inv_t = vec![0u8; q];
        for a in 1..q {
            for b in 1..q {
                if mul_t[a * q + b] == 1 {
                    inv_t[a] = b as u8;
                    break;
                }
            }
            debug_assert_ne!(inv_t[a], 0, "every nonzero element is invertible");
        }

        Ok(Arc::new(FieldCtx {
            p,
            n,
            q,
            modulus,
            add_t,
            mul_t,
            neg_t,
            inv_t,
        }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }
    /// Field order p^n.
    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }
    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(self.add_t[a.0 as usize * self.q + b.0 as usize])
    }
    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(self.mul_t[a.0 as usize * self.q + b.0 as usize])
    }
    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        Scalar(self.neg_t[a.0 as usize])
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.inv_t[a.0 as usize]))
    }

    pub fn pow(&self, a: Scalar, e: u64) -> Scalar {
        let mut acc = Scalar::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The p-power Frobenius.
    pub fn frobenius(&self, a: Scalar) -> Scalar {
        self.pow(a, self.p as u64)
    }

    /// Row of the multiplication table for a fixed scalar; `row[b] = (c*b)`
    /// as raw indices. Hot loops in the matrix code index this directly.
    #[inline]
    pub(crate) fn mul_row(&self, c: Scalar) -> &[u8] {
        &self.mul_t[c.0 as usize * self.q..(c.0 as usize + 1) * self.q]
    }
    #[inline]
    pub(crate) fn add_table(&self) -> &[u8] {
        &self.add_t
    }

    /// Element with the given polynomial-basis coefficients (length n,
    /// each in [0, p)).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Scalar> {
        if coeffs.len() != self.n {
            return Err(Error::InvalidModuleFile(format!(
                "scalar needs {} coefficients, got {}",
                self.n,
                coeffs.len()
            )));
        }
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::ScalarNotReduced { value: c, p: self.p });
            }
            idx = idx * self.p as u64 + c as u64;
        }
        Ok(Scalar(idx as u8))
    }

    pub fn coeffs(&self, a: Scalar) -> Vec<u32> {
        let mut c = vec![0u32; self.n];
        let mut rest = a.0 as u64;
        for slot in c.iter_mut() {
            *slot = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        c
    }

    /// Image of an integer under the unique ring map Z -> GF(p^n).
    pub fn from_int(&self, v: i64) -> Scalar {
        let r = v.rem_euclid(self.p as i64) as u8;
        Scalar(r)
    }

    /// The class of the modulus variable; a multiplicative generator of the
    /// extension in every supported field with n > 1, and simply 0 when
    /// n == 1 (there is no extension generator).
    pub fn gen(&self) -> Scalar {
        if self.n == 1 {
            Scalar::ZERO
        } else {
            Scalar(self.p as u8)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q as u16).map(|i| Scalar(i as u8))
    }

    pub fn sample(&self, rng: &mut impl rand::Rng) -> Scalar {
        Scalar(rng.gen_range(0..self.q as u32) as u8)
    }

    pub fn sample_nonzero(&self, rng: &mut impl rand::Rng) -> Scalar {
        Scalar(rng.gen_range(1..self.q as u32) as u8)
    }

    /// Render an element as a polynomial in the extension generator `a`,
    /// highest degree first, e.g. `a^2+2*a+1`. Prime fields render as bare
    /// integers.
    pub fn format_scalar(&self, s: Scalar) -> String {
        let coeffs = self.coeffs(s);
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}*a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}*a^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// True when the rendered form needs parentheses inside a product.
    pub fn scalar_needs_parens(&self, s: Scalar) -> bool {
        self.format_scalar(s).contains('+')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(2, 0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(FieldCtx::new(2, 5), Err(Error::DegreeOutOfRange(5))));
        assert!(matches!(FieldCtx::new(5, 4), Err(Error::FieldTooLarge(625))));
    }

    #[test]
    fn pinned_moduli() {
        // Smallest irreducibles in low-degree-first lexicographic order.
        assert_eq!(FieldCtx::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldCtx::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldCtx::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FieldCtx::new(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(FieldCtx::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldCtx::new(5, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (7, 1), (2, 4)] {
            let f = FieldCtx::new(p, n).unwrap();
            let els: Vec<Scalar> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, Scalar::ZERO), a);
                assert_eq!(f.mul(a, Scalar::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Scalar::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Scalar::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_fixes_prime_field() {
        for (p, n) in [(2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = FieldCtx::new(p, n).unwrap();
            let els: Vec<Scalar> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                }
                let fixed = f.frobenius(a) == a;
                let in_prime = f.coeffs(a)[1..].iter().all(|&c| c == 0);
                assert_eq!(fixed, in_prime, "Frobenius fixed points = GF(p)");
            }
        }
    }

    #[test]
    fn gf4_arithmetic_spot_checks() {
        let f = FieldCtx::new(2, 2).unwrap();
        let w = f.gen(); // root of t^2 + t + 1
        assert_eq!(f.mul(w, w), f.add(w, Scalar::ONE)); // w^2 = w + 1
        assert_eq!(f.pow(w, 3), Scalar::ONE);
        assert_eq!(f.format_scalar(w), "a");
        assert_eq!(f.format_scalar(f.add(w, Scalar::ONE)), "a+1");
    }

    #[test]
    fn scalar_round_trip() {
        let f = FieldCtx::new(3, 2).unwrap();
        for s in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(s)).unwrap(), s);
        }
        assert!(f.from_coeffs(&[3, 0]).is_err());
        assert!(f.from_coeffs(&[1]).is_err());
    }
}
