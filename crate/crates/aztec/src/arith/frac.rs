//! Minimal exact fractions with arbitrary denominator.
//!
//! Matching counts and formula values are dyadic, but ratios of them (such
//! as consecutive Aztec-triangle counts) are general rationals, so the
//! ratio identities compare these instead.

use std::fmt;
use std::ops::{Div, Mul};


use super::{Dyadic, Mantissa};

/// Reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac<I> {
    num: I,
    den: I,
}

impl<I: Mantissa> Frac<I> {
    pub fn new(num: I, den: I) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }

    pub fn from_int(n: I) -> Self {
        Frac { num: n, den: I::one() }
    }

    pub fn from_dyadic(d: &Dyadic<I>) -> Self {
        Frac::new(d.mantissa().clone(), I::one() << d.exp2())
    }

    pub fn num(&self) -> &I {
        &self.num
    }

    pub fn den(&self) -> &I {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }
}

impl<I: Mantissa> Mul for &Frac<I> {
    type Output = Frac<I>;
    fn mul(self, rhs: &Frac<I>) -> Frac<I> {
        Frac::new(self.num.clone() * rhs.num.clone(), self.den.clone() * rhs.den.clone())
    }
}

impl<I: Mantissa> Div for &Frac<I> {
    type Output = Frac<I>;
    fn div(self, rhs: &Frac<I>) -> Frac<I> {
        assert!(!rhs.num.is_zero(), "division by zero fraction");
        Frac::new(self.num.clone() * rhs.den.clone(), self.den.clone() * rhs.num.clone())
    }
}

impl<I: Mantissa> fmt::Display for Frac<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<I: Mantissa> fmt::Debug for Frac<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
