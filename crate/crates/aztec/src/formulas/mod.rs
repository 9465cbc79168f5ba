//! Exact big-integer evaluation of the closed-form product formulas.
//!
//! Intermediate values pass through dyadic rationals (the powers of two in
//! the exponents may be negative); every final result is asserted integral
//! and non-negative, and a dyadic remainder is reported as a hard error.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{Ratio, Weight};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameters are not balanced: {0}")]
    NotBalanced(String),
    #[error("formula produced a non-integer value: {0}")]
    NonInteger(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// n! with a process-wide memo table.
pub fn factorial(n: u64) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while (table.len() as u64) <= n {
        let k = table.len() as u64;
        let next = table.last().unwrap() * BigInt::from(k);
        table.push(next);
    }
    table[n as usize].clone()
}

/// Superfactorial h(n) = 0! 1! ... (n-1)!, with h(0) = 1 and h(n) = 0 for
/// n < 0.
pub fn superfactorial(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for k in 0..n as u64 {
        acc *= factorial(k);
    }
    acc
}

/// Double factorial n!! = n (n-2) (n-4) ..., with 0!! = (-1)!! = 1.
pub fn double_factorial(n: i64) -> Result<BigInt, FormulaError> {
    if n < -1 {
        return Err(FormulaError::InvalidParameter(format!("({n})!! undefined")));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k >= 2 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    Ok(acc)
}

/// Exact `num / den` as a dyadic value; errors unless den's odd part
/// divides num.
fn exact_dyadic_ratio(num: BigInt, den: BigInt) -> Result<Weight, FormulaError> {
    assert!(den.is_positive(), "denominators here are positive products");
    let e = den.trailing_zeros().unwrap_or(0);
    let odd = &den >> e;
    let (q, r) = num.div_rem(&odd);
    if !r.is_zero() {
        return Err(FormulaError::NonInteger(format!(
            "{num}/{den} is not dyadic"
        )));
    }
    Ok(Weight::new(q, u32::try_from(e).expect("den exponent fits")))
}

fn finish_integral(value: Weight, context: &str) -> Result<BigInt, FormulaError> {
    let v = value
        .to_int()
        .ok_or_else(|| FormulaError::NonInteger(format!("{context}: {value}")))?;
    if v.is_negative() {
        return Err(FormulaError::NonInteger(format!(
            "{context}: negative value {v}"
        )));
    }
    Ok(v)
}

/// Number of matchings of the Aztec triangle of order `n`:
/// 2^(n(n-1)/2) * prod_{i=0}^{n-1} (4i+2)! / (n+2i+1)!.
pub fn formula_t(n: i64) -> Result<BigInt, FormulaError> {
    if n < 0 {
        return Err(FormulaError::InvalidParameter(format!("order {n} < 0")));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n as u64 {
        num *= factorial(4 * i + 2);
        den *= factorial(n as u64 + 2 * i + 1);
    }
    let ratio = exact_dyadic_ratio(num, den)?;
    let value = ratio.mul_pow2(n * (n - 1) / 2);
    finish_integral(value, "formula_T")
}

/// Matching count of the balanced cruciform graph C_{m,n}^{a,b,c,d}.
pub fn formula_c(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) -> Result<BigInt, FormulaError> {
    if a + b + c + d != m + n - 1 {
        return Err(FormulaError::NotBalanced(format!(
            "a+b+c+d = {} but m+n-1 = {}",
            a + b + c + d,
            m + n - 1
        )));
    }
    for arg in [m - a, n - b, m - c, n - d] {
        if arg < 0 {
            return Ok(BigInt::zero());
        }
    }
    let e4 = m * (3 * m + 1) + n * (3 * n + 1)
        - 2 * (a + c) * (b + d)
        - (m - n) * (a - b + c - d);
    if e4 % 4 != 0 {
        return Err(FormulaError::NonInteger(format!(
            "exponent 4E = {e4} not divisible by 4"
        )));
    }
    let num = superfactorial(m + n + 1).pow(2)
        * superfactorial(m - a)
        * superfactorial(n - b)
        * superfactorial(m - c)
        * superfactorial(n - d);
    let den = superfactorial(n + a + 1)
        * superfactorial(m + b + 1)
        * superfactorial(n + c + 1)
        * superfactorial(m + d + 1);
    let value = exact_dyadic_ratio(num, den)?.mul_pow2(e4 / 4);
    finish_integral(value, "formula_C")
}

/// Matching count of the balanced nearly-cruciform graph D_{m,n}^{a,b,a,d}.
pub fn formula_d(m: i64, n: i64, a: i64, b: i64, d: i64) -> Result<BigInt, FormulaError> {
    if 2 * a + b + d != m + n - 2 {
        return Err(FormulaError::NotBalanced(format!(
            "2a+b+d = {} but m+n-2 = {}",
            2 * a + b + d,
            m + n - 2
        )));
    }
    for arg in [m - a, m - a - 1, n - b, n - d] {
        if arg < 0 {
            return Ok(BigInt::zero());
        }
    }
    let e = n * (n - 2 * a - 2) - 3 * n * (n - 1) / 2
        + (m - a) * (m - a - 1)
        + (n + a + 1) * (n + a);
    let num = superfactorial(m + n + 1)
        * superfactorial(m + n)
        * superfactorial(m - a)
        * superfactorial(m - a - 1)
        * superfactorial(n - b)
        * superfactorial(n - d)
        * double_factorial(m + b - 1)?;
    let den = superfactorial(n + a + 1).pow(2)
        * superfactorial(m + b + 1)
        * superfactorial(m + d + 1)
        * double_factorial(n - d - 1)?;
    let value = exact_dyadic_ratio(num, den)?.mul_pow2(e);
    finish_integral(value, "formula_D")
}

/// Matching count of the trimmed Aztec rectangle with deletion set T:
/// 2^(m(m-1)/2) / h(m) * prod_{i<j} (t_j - t_i).
pub fn formula_trimmed_ar(m: i64, n: i64, t_set: &[i64]) -> Result<BigInt, FormulaError> {
    if m < 1 || n < m || t_set.len() != m as usize {
        return Err(FormulaError::InvalidParameter(format!(
            "need 1 <= m <= n and |T| = m, got m={m}, n={n}, |T|={}",
            t_set.len()
        )));
    }
    let mut sorted = t_set.to_vec();
    sorted.sort();
    if sorted.iter().any(|&t| t < 1 || t > n + 1) {
        return Err(FormulaError::InvalidParameter(format!(
            "T must lie in [1, {}]",
            n + 1
        )));
    }
    let mut num = BigInt::one();
    for j in 1..sorted.len() {
        for i in 0..j {
            num *= BigInt::from(sorted[j] - sorted[i]);
        }
    }
    let value = exact_dyadic_ratio(num, superfactorial(m))?.mul_pow2(m * (m - 1) / 2);
    finish_integral(value, "formula_trimmed_AR")
}

/// The threefold ratio identity: for each n, the cruciform-over-nearly-
/// cruciform ratio, the closed middle expression 2^n n!!/(3n)!!
/// (4n+2)!/(3n+2)!, and the consecutive Aztec-triangle ratio.
pub fn ratio_identity(n: i64) -> Result<(Ratio, Ratio, Ratio), FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidParameter(format!("order {n} < 1")));
    }
    let c = formula_c(2 * n + 1, 2 * n + 1, n + 1, n, n, n)?;
    let d = formula_d(2 * n + 1, 2 * n + 1, n, n, n)?;
    let lhs = Ratio::new(c, BigInt::from(2) * d);

    let mid = Ratio::new(
        (BigInt::one() << u32::try_from(n).unwrap())
            * double_factorial(n)?
            * factorial(4 * n as u64 + 2),
        double_factorial(3 * n)? * factorial(3 * n as u64 + 2),
    );
    let rhs = Ratio::new(formula_t(n + 1)?, formula_t(n)?);
    Ok((lhs, mid, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn superfactorial_values() {
        assert_eq!(superfactorial(0), bi(1));
        assert_eq!(superfactorial(-3), bi(0));
        assert_eq!(superfactorial(4), bi(12));
        // telescoping h(n+1) = h(n) * n!
        for n in 0..=30i64 {
            assert_eq!(
                superfactorial(n + 1),
                superfactorial(n) * factorial(n as u64)
            );
        }
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(5).unwrap(), bi(15));
        assert_eq!(double_factorial(0).unwrap(), bi(1));
        assert_eq!(double_factorial(-1).unwrap(), bi(1));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn formula_t_values() {
        assert_eq!(formula_t(0).unwrap(), bi(1));
        assert_eq!(formula_t(1).unwrap(), bi(1));
        assert_eq!(formula_t(2).unwrap(), bi(4));
        assert_eq!(formula_t(3).unwrap(), bi(60));
        assert_eq!(formula_t(4).unwrap(), bi(3328));
        assert_eq!(formula_t(5).unwrap(), bi(678912));
    }

    #[test]
    fn formula_c_values() {
        // a > m collapses through h(m - a) = 0
        assert_eq!(formula_c(2, 2, 3, 0, 0, 0).unwrap(), bi(0));
        assert_eq!(formula_c(1, 1, 0, 0, 0, 1).unwrap(), bi(8));
        assert_eq!(formula_c(1, 1, 1, 0, 0, 0).unwrap(), bi(8));
        assert_eq!(formula_c(3, 3, 2, 1, 1, 1).unwrap(), bi(3_072_000));
        assert!(formula_c(2, 2, 0, 0, 0, 0).is_err());
    }

    #[test]
    fn formula_d_values() {
        assert_eq!(formula_d(3, 3, 1, 1, 1).unwrap(), bi(384_000));
        // n - b < 0 collapses to zero: balanced needs 2a+b+d = m+n-2
        assert_eq!(formula_d(3, 4, 0, 5, 0).unwrap(), bi(0));
        assert!(formula_d(3, 3, 1, 1, 0).is_err());
    }

    #[test]
    fn formula_trimmed_ar_values() {
        assert_eq!(formula_trimmed_ar(1, 3, &[2]).unwrap(), bi(1));
        assert_eq!(formula_trimmed_ar(2, 2, &[1, 3]).unwrap(), bi(4));
        assert_eq!(formula_trimmed_ar(2, 2, &[1, 2]).unwrap(), bi(2));
        assert_eq!(formula_trimmed_ar(5, 5, &[1, 2, 4, 5, 6]).unwrap(), bi(10240));
        assert_eq!(formula_trimmed_ar(5, 6, &[1, 2, 4, 6, 7]).unwrap(), bi(76800));
    }

    #[test]
    fn ratio_identity_small() {
        let (l, m, r) = ratio_identity(1).unwrap();
        assert_eq!(l, Ratio::from_int(bi(4)));
        assert_eq!(m, Ratio::from_int(bi(4)));
        assert_eq!(r, Ratio::from_int(bi(4)));
        // telescoping: rhs * T(n) = T(n+1) exactly
        for n in 1..=6 {
            let (_, _, r) = ratio_identity(n).unwrap();
            let tn = Ratio::from_int(formula_t(n).unwrap());
            let tn1 = Ratio::from_int(formula_t(n + 1).unwrap());
            assert_eq!(&r * &tn, tn1);
        }
    }

    #[test]
    fn ratio_identity_threefold_up_to_twenty() {
        for n in 1..=20 {
            let (l, m, r) = ratio_identity(n).unwrap();
            assert_eq!(l, m, "n={n}");
            assert_eq!(m, r, "n={n}");
        }
    }
}
