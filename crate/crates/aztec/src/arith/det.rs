//! Exact determinants of integer matrices.
//!
//! Two routes: fraction-free Bareiss elimination (generic, used as the
//! reference and for small matrices) and a multi-modular route for larger
//! `BigInt` matrices (residues modulo 62-bit primes combined by CRT under a
//! Hadamard bound). Both are exact; they are cross-checked in tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Mantissa;

/// Fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss<I: Mantissa>(mut a: Vec<Vec<I>>) -> I {
    let n = a.len();
    if n == 0 {
        return I::one();
    }
    for row in &a {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut sign_negative = false;
    let mut prev = I::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return I::zero();
            };
            a.swap(k, r);
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = I::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_negative {
        -d
    } else {
        d
    }
}

const BAREISS_CUTOFF: usize = 48;

/// Exact determinant of a `BigInt` matrix, choosing the engine by size.
pub fn det_bigint(a: Vec<Vec<BigInt>>) -> BigInt {
    if a.len() <= BAREISS_CUTOFF {
        det_bareiss(a)
    } else {
        det_modular(&a)
    }
}

/// Multi-modular determinant: residues mod distinct 62-bit primes, CRT-lifted
/// past twice the Hadamard bound, then balanced into a signed value.
fn det_modular(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    // |det| <= n^(n/2) * maxabs^n  (integer-safe Hadamard-style bound)
    let maxabs = a
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    if maxabs.is_zero() {
        return BigInt::zero();
    }
    let bound: BigInt =
        BigInt::from(n).pow((n as u32).div_ceil(2)) * maxabs.pow(n as u32) + 1;
    let target = bound * 2;

    let mut primes = PrimeIter::new();
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero(); // det mod modulus, in [0, modulus)
    while modulus < target {
        let p = primes.next_prime();
        let r = det_mod_p(a, p);
        // lift: value' = value + modulus * t with t = (r - value) / modulus  (mod p)
        let m_mod_p = (&modulus % p).to_u64().unwrap();
        let v_mod_p = (&value % p).to_u64().unwrap();
        let diff = sub_mod(r, v_mod_p, p);
        let t = mul_mod(diff, inv_mod(m_mod_p, p), p);
        value += &modulus * BigInt::from(t);
        modulus *= BigInt::from(p);
    }
    if &value * 2 > modulus {
        value - modulus
    } else {
        value
    }
}

fn det_mod_p(a: &[Vec<BigInt>], p: u64) -> u64 {
    let n = a.len();
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x % &pb;
                    let r = if r.is_negative() { r + &pb } else { r };
                    r.to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    let mut det: u64 = 1;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| m[r][k] != 0) else {
            return 0;
        };
        if r != k {
            m.swap(k, r);
            det = p - det;
        }
        let pivot = m[k][k];
        det = mul_mod(det, pivot, p);
        let inv = inv_mod(pivot, p);
        for i in k + 1..n {
            if m[i][k] == 0 {
                continue;
            }
            let f = mul_mod(m[i][k], inv, p);
            for j in k..n {
                let s = mul_mod(f, m[k][j], p);
                m[i][j] = sub_mod(m[i][j], s, p);
            }
        }
    }
    det % p
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64 (the 12-base set is exact below 3.3e24).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending odd candidates below 2^62; products of two residues fit u128.
struct PrimeIter {
    next: u64,
}

impl PrimeIter {
    fn new() -> Self {
        PrimeIter { next: (1u64 << 62) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}
