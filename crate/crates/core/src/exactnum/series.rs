use std::fmt;

use serde::Serialize;

use super::Rational;
use crate::error::{Error, Result};

/// A power series `Σ_{k ≤ N} c_k x^k` over ℚ, truncated at order `N`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    pub var: String,
    pub coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of order `order`, padding or cutting `coeffs` to `order + 1` terms.
    pub fn new(var: &str, order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries {
            var: var.to_string(),
            coeffs,
        }
    }

    pub fn zero(var: &str, order: usize) -> Self {
        TruncatedSeries::new(var, order, Vec::new())
    }

    pub fn constant(var: &str, order: usize, c: Rational) -> Self {
        TruncatedSeries::new(var, order, vec![c])
    }

    /// The series `x` itself.
    pub fn variable(var: &str, order: usize) -> Self {
        TruncatedSeries::new(var, order, vec![Rational::zero(), Rational::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(&self.var, order, self.coeffs.clone())
    }

    fn aligned(&self, other: &Self) -> Result<usize> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var.clone(), other.var.clone()));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.aligned(other)?;
        let c = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Ok(TruncatedSeries::new(&self.var, n, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.aligned(other)?;
        let c = (0..=n)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        Ok(TruncatedSeries::new(&self.var, n, c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.aligned(other)?;
        let mut c = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                c[i + j] += &(a * b);
            }
        }
        Ok(TruncatedSeries::new(&self.var, n, c))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let c = self.coeffs.iter().map(|x| x * k).collect();
        TruncatedSeries::new(&self.var, self.order(), c)
    }

    /// Term-wise derivative. The result has order `N − 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let c = (1..=n)
            .map(|k| &self.coeffs[k] * Rational::int(k as i64))
            .collect();
        TruncatedSeries::new(&self.var, n.saturating_sub(1), c)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{:?}", c)?,
                1 => write!(f, "({:?})·{}", c, self.var)?,
                _ => write!(f, "({:?})·{}^{}", c, self.var, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
