use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b·√D` of a real quadratic field.
///
/// `D` is carried by every value and is never reduced. A value with `b = 0` is a plain
/// rational and combines with elements of any field; two values with `b ≠ 0` must share `D`.
#[derive(Clone, Serialize, Deserialize)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    #[serde(rename = "D")]
    pub d: u64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        assert!(d > 0, "the radicand must be positive");
        QuadExt { a, b, d }
    }

    pub fn rational(a: Rational, d: u64) -> Self {
        QuadExt::new(a, Rational::zero(), d)
    }

    pub fn zero(d: u64) -> Self {
        QuadExt::rational(Rational::zero(), d)
    }

    pub fn one(d: u64) -> Self {
        QuadExt::rational(Rational::one(), d)
    }

    /// The element `√D`.
    pub fn sqrt_d(d: u64) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn rational_part(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// `a² − b²D`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::int(self.d as i64)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadExt {
            a: &self.a * k,
            b: &self.b * k,
            d: self.d,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadExt {
            a: c.a.checked_div(&n)?,
            b: c.b.checked_div(&n)?,
            d: self.d,
        })
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
    }

    fn field(&self, other: &QuadExt) -> u64 {
        if self.b.is_zero() {
            other.d
        } else if other.b.is_zero() || self.d == other.d {
            self.d
        } else {
            panic!("mixing Q(√{}) and Q(√{})", self.d, other.d)
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl std::hash::Hash for QuadExt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√{}", self.a, self.b, self.d)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{:?}", self.a)
        } else {
            write!(f, "({:?} + {:?}√{})", self.a, self.b, self.d)
        }
    }
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.field(rhs),
        }
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.field(rhs),
        }
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let d = self.field(rhs);
        if self.b.is_zero() {
            return rhs.scale(&self.a).with_d(d);
        }
        if rhs.b.is_zero() {
            return self.scale(&rhs.a).with_d(d);
        }
        let dd = Rational::int(d as i64);
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * dd,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        }
    }
}

impl QuadExt {
    fn with_d(mut self, d: u64) -> Self {
        self.d = d;
        self
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        &self + &rhs
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        &self - &rhs
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        &self * &rhs
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
