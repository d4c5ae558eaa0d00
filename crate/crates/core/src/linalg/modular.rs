//! Multi-modular determinant and characteristic polynomial.
//!
//! Work is done modulo primes just below 2³¹ and lifted by the Chinese
//! remainder theorem once the product of the primes exceeds twice an a-priori
//! bound on the absolute value of the result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{IntMatrix, IntPoly};

/// A prime modulus below 2³¹ with a precomputed Barrett constant.
#[derive(Debug, Clone, Copy)]
pub struct Modulus {
    p: u64,
    inv: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < 1 << 31);
        Modulus { p, inv: u64::MAX / p }
    }

    pub fn value(&self) -> u64 {
        self.p
    }

    /// `x mod p` for any `x < 2⁶⁴`.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.inv as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    /// `a + b·c mod p`.
    #[inline]
    pub fn mul_add(&self, a: u64, b: u64, c: u64) -> u64 {
        self.reduce(a + b * c)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inverse(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    pub fn from_big(&self, x: &BigInt) -> u64 {
        let r = x.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for a in BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes below 2³¹ in decreasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().step_by(2).filter(|&p| is_prime(p))
}

/// Incremental Chinese remaindering into the symmetric residue range.
#[derive(Debug, Clone)]
pub struct Crt {
    value: BigInt,
    modulus: BigInt,
}

impl Default for Crt {
    fn default() -> Self {
        Crt { value: BigInt::zero(), modulus: BigInt::one() }
    }
}

impl Crt {
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn add(&mut self, residue: u64, m: &Modulus) {
        let p = BigInt::from(m.value());
        let current = m.from_big(&self.value);
        let diff = (residue + m.value() - current) % m.value();
        let factor = m.mul(diff, m.inverse(m.from_big(&self.modulus)));
        self.value += &self.modulus * BigInt::from(factor);
        self.modulus *= p;
    }

    /// The representative in `(−M/2, M/2]`.
    pub fn symmetric(&self) -> BigInt {
        let half: BigInt = &self.modulus >> 1;
        if self.value > half {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

fn reduce_matrix(a: &IntMatrix, m: &Modulus) -> Vec<Vec<u64>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(|x| m.from_big(x)).collect()).collect()
}

/// `⌈√x⌉`.
fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &r * &r == *x {
        r
    } else {
        r + 1
    }
}

fn row_norm_sq(a: &IntMatrix, i: usize) -> BigInt {
    a.row(i).iter().map(|x| x * x).sum()
}

/// Determinant modulo `p` by Gaussian elimination.
pub fn det_mod(a: &[Vec<u64>], m: &Modulus) -> u64 {
    let n = a.len();
    let mut a = a.to_vec();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = m.neg(det);
        }
        det = m.mul(det, a[k][k]);
        let inv = m.inverse(a[k][k]);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k] == 0 {
                continue;
            }
            let f = m.neg(m.mul(row[k], inv));
            for j in k..n {
                row[j] = m.mul_add(row[j], f, pivot_row[j]);
            }
        }
    }
    det
}

/// Exact determinant of a square matrix.
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    // Hadamard: |det| ≤ ∏ ‖row_i‖
    let bound: BigInt = (0..n).map(|i| ceil_sqrt(&row_norm_sq(a, i))).product();
    if bound.is_zero() {
        return BigInt::zero();
    }
    lift(&(bound * 2), |m| det_mod(&reduce_matrix(a, m), m))
}

fn lift(target: &BigInt, mut residue: impl FnMut(&Modulus) -> u64) -> BigInt {
    let mut crt = Crt::default();
    for p in primes() {
        let m = Modulus::new(p);
        crt.add(residue(&m), &m);
        if crt.modulus() > target {
            break;
        }
    }
    crt.symmetric()
}

/// Characteristic polynomial `det(xI − A)` modulo `p`, constant term first,
/// by reduction to upper Hessenberg form.
pub fn char_poly_mod(a: &[Vec<u64>], m: &Modulus) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = m.inverse(h[j + 1][j]);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let u = m.mul(h[i][j], inv);
            let neg_u = m.neg(u);
            // row_i −= u·row_{j+1}
            let (upper, lower) = h.split_at_mut(i);
            let src = &upper[j + 1];
            for (x, &y) in lower[0].iter_mut().zip(src.iter()).skip(j) {
                *x = m.mul_add(*x, neg_u, y);
            }
            // col_{j+1} += u·col_i
            for row in h.iter_mut() {
                row[j + 1] = m.mul_add(row[j + 1], u, row[i]);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // (x − h_{k−1,k−1})·p_{k−1}
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        let c = m.neg(h[k - 1][k - 1]);
        for (d, &coef) in prev.iter().enumerate() {
            next[d + 1] = m.reduce(next[d + 1] + coef);
            next[d] = m.mul_add(next[d], c, coef);
        }
        let mut t = 1u64;
        for i in (1..k).rev() {
            t = m.mul(t, h[i][i - 1]);
            if t == 0 {
                break;
            }
            let f = m.neg(m.mul(t, h[i - 1][k - 1]));
            if f == 0 {
                continue;
            }
            for (d, &coef) in polys[i - 1].iter().enumerate() {
                next[d] = m.mul_add(next[d], f, coef);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// Exact characteristic polynomial of a square matrix.
pub fn char_poly(a: &IntMatrix) -> IntPoly {
    let n = a.rows();
    if n == 0 {
        return IntPoly::one();
    }
    // every coefficient is a signed sum of at most C(n,i) principal minors,
    // each bounded by B^i with B the largest row norm
    let b = (0..n).map(|i| ceil_sqrt(&row_norm_sq(a, i))).max().unwrap_or_default();
    let target = (b + 1u32).pow(n as u32) * 2u32;
    let mut crts = vec![Crt::default(); n + 1];
    for p in primes() {
        let m = Modulus::new(p);
        let residues = char_poly_mod(&reduce_matrix(a, &m), &m);
        for (crt, r) in crts.iter_mut().zip(residues) {
            crt.add(r, &m);
        }
        if crts[0].modulus() > &target {
            break;
        }
    }
    IntPoly::new(crts.iter().map(Crt::symmetric).collect())
}

/// Number of primes a determinant lift would use; exposed for size guards.
pub fn determinant_prime_estimate(a: &IntMatrix) -> usize {
    let bits: u64 = (0..a.rows()).map(|i| ceil_sqrt(&row_norm_sq(a, i)).bits()).sum();
    (bits as usize + 1) / 30 + 1
}
