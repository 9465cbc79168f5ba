//! Dyadic rationals: `mantissa / 2^exp2` with `exp2 >= 0`.
//!
//! The representation is kept reduced: whenever `exp2 > 0` the mantissa is
//! odd, and zero is stored as `0 / 2^0`. With that invariant structural
//! equality coincides with value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::Mantissa;

/// Exact dyadic rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic<I> {
    mantissa: I,
    exp2: u32,
}

impl<I: Mantissa> Dyadic<I> {
    pub fn new(mantissa: I, exp2: u32) -> Self {
        let mut d = Dyadic { mantissa, exp2 };
        d.normalize();
        d
    }

    pub fn from_int(n: I) -> Self {
        Dyadic { mantissa: n, exp2: 0 }
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: I::zero(), exp2: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mantissa: I::one(), exp2: 0 }
    }

    /// 1/2, the weight placed on symmetry-axis edges by the factorization cut.
    pub fn half() -> Self {
        Dyadic { mantissa: I::one(), exp2: 1 }
    }

    pub fn mantissa(&self) -> &I {
        &self.mantissa
    }

    pub fn exp2(&self) -> u32 {
        self.exp2
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp2 == 0 && self.mantissa.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// True when the value is an integer (reduced exponent is zero).
    pub fn is_integer(&self) -> bool {
        self.exp2 == 0
    }

    pub fn to_int(&self) -> Option<I> {
        if self.exp2 == 0 {
            Some(self.mantissa.clone())
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exp2 = 0;
            return;
        }
        while self.exp2 > 0 && self.mantissa.is_even() {
            self.mantissa = self.mantissa.clone() >> 1;
            self.exp2 -= 1;
        }
    }

    /// Multiply by `2^k`; `k` may be negative.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.mantissa.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            let mut shift = k as u64;
            let mut m = self.mantissa.clone();
            let mut e = self.exp2 as u64;
            // cancel against the exponent first, then shift the mantissa
            let cancel = shift.min(e);
            shift -= cancel;
            e -= cancel;
            if shift > 0 {
                m = m << u32::try_from(shift).expect("shift fits u32");
            }
            Dyadic { mantissa: m, exp2: e as u32 }
        } else {
            let e = self.exp2 as u64 + k.unsigned_abs();
            Dyadic::new(
                self.mantissa.clone(),
                u32::try_from(e).expect("exponent fits u32"),
            )
        }
    }

    pub fn halve(&self) -> Self {
        self.mul_pow2(-1)
    }

    pub fn double(&self) -> Self {
        self.mul_pow2(1)
    }

    pub fn abs(&self) -> Self {
        Dyadic { mantissa: self.mantissa.abs(), exp2: self.exp2 }
    }
}

impl<I: Mantissa> Add for &Dyadic<I> {
    type Output = Dyadic<I>;
    fn add(self, rhs: &Dyadic<I>) -> Dyadic<I> {
        let e = self.exp2.max(rhs.exp2);
        let a = self.mantissa.clone() << (e - self.exp2);
        let b = rhs.mantissa.clone() << (e - rhs.exp2);
        Dyadic::new(a + b, e)
    }
}

impl<I: Mantissa> Sub for &Dyadic<I> {
    type Output = Dyadic<I>;
    fn sub(self, rhs: &Dyadic<I>) -> Dyadic<I> {
        self + &(-rhs)
    }
}

impl<I: Mantissa> Mul for &Dyadic<I> {
    type Output = Dyadic<I>;
    fn mul(self, rhs: &Dyadic<I>) -> Dyadic<I> {
        Dyadic::new(
            self.mantissa.clone() * rhs.mantissa.clone(),
            self.exp2 + rhs.exp2,
        )
    }
}

impl<I: Mantissa> Neg for &Dyadic<I> {
    type Output = Dyadic<I>;
    fn neg(self) -> Dyadic<I> {
        Dyadic { mantissa: -self.mantissa.clone(), exp2: self.exp2 }
    }
}

impl<I: Mantissa> fmt::Display for Dyadic<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp2 == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}/2^{}", self.mantissa, self.exp2)
        }
    }
}

impl<I: Mantissa> fmt::Debug for Dyadic<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
