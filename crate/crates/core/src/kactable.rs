//! Central charge `c_{p,q}`, the Kac table weights `h_{r,s}`, the Heisenberg weights
//! `λ_{r,s}` and label normalization.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{QuadExt, Rational};

/// The parameters of `c_{p,q} = 13 − 6t − 6/t` with `t = q/p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CentralCharge {
    pub p: i64,
    pub q: i64,
    pub t: Rational,
    pub c: Rational,
    /// Background charge `Q = (q − p)·√(2pq)/(pq)`.
    #[serde(rename = "Q")]
    pub bg: QuadExt,
}

/// A pair `(r, s)` indexing `h_{r,s}` and the modules built from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KacLabel {
    pub r: i64,
    pub s: i64,
}

impl KacLabel {
    pub fn new(r: i64, s: i64) -> Self {
        KacLabel { r, s }
    }
}

impl fmt::Display for KacLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// Validates `(p, q)` and builds the exact parameters.
pub fn central_charge(p: i64, q: i64) -> Result<CentralCharge> {
    let bad = |reason: &str| Error::InvalidParameters {
        p,
        q,
        reason: reason.to_string(),
    };
    if p < 2 || q < 2 {
        return Err(bad("p and q must be at least 2"));
    }
    if p.gcd(&q) != 1 {
        return Err(bad("p and q must be coprime"));
    }
    if p.checked_mul(q).and_then(|x| x.checked_mul(2)).is_none() {
        return Err(bad("2pq overflows"));
    }
    let t = Rational::new(q, p);
    let c = Rational::int(13) - Rational::int(6) * &t - Rational::new(6 * p, q);
    let d = (2 * p * q) as u64;
    let bg = QuadExt::new(Rational::zero(), Rational::new(q - p, p * q), d);
    Ok(CentralCharge { p, q, t, c, bg })
}

impl CentralCharge {
    /// The radicand `D = 2pq` of the coefficient field.
    pub fn d(&self) -> u64 {
        (2 * self.p * self.q) as u64
    }

    /// `h_{r,s} = (r²−1)t/4 − (rs−1)/2 + (s²−1)/(4t)`, for any integers `r, s`.
    pub fn h(&self, r: i64, s: i64) -> Rational {
        let (p, q) = (self.p, self.q);
        Rational::new((r * r - 1) * q, 4 * p) - Rational::new(r * s - 1, 2)
            + Rational::new((s * s - 1) * p, 4 * q)
    }

    /// `λ_{r,s} = (1−r)√(q/2p) − (1−s)√(p/2q)` written as a multiple of `√(2pq)`.
    pub fn lambda(&self, r: i64, s: i64) -> QuadExt {
        let b = Rational::new(1 - r, 2 * self.p) - Rational::new(1 - s, 2 * self.q);
        QuadExt::new(Rational::zero(), b, self.d())
    }

    /// `κ = |rq − sp|`. Two labels have equal weight iff their `κ` agree.
    pub fn kappa(&self, r: i64, s: i64) -> i64 {
        (r * self.q - s * self.p).abs()
    }

    /// The canonical label with `1 ≤ r ≤ p` and `ps ≥ qr`, and every label with
    /// `1 ≤ r ≤ p`, `s ≥ 1` sharing its weight (canonical label included).
    pub fn normalize_label(&self, r: i64, s: i64) -> (KacLabel, Vec<KacLabel>) {
        let (p, q) = (self.p, self.q);
        let k = self.kappa(r, s);
        let r0 = (1..=p)
            .find(|&x| (x * q + k) % p == 0)
            .expect("q is invertible mod p");
        let canon = KacLabel::new(r0, (r0 * q + k) / p);
        let mut ids = Vec::new();
        for x in 1..=p {
            for y in [(x * q - k), (x * q + k)] {
                if y > 0 && y % p == 0 {
                    let l = KacLabel::new(x, y / p);
                    if !ids.contains(&l) {
                        ids.push(l);
                    }
                }
            }
        }
        ids.sort();
        (canon, ids)
    }

    /// The mirror convention `1 ≤ s ≤ q`, `qr ≥ ps`.
    pub fn normalize_label_mirror(&self, r: i64, s: i64) -> KacLabel {
        let (p, q) = (self.p, self.q);
        let k = self.kappa(r, s);
        let s0 = (1..=q)
            .find(|&y| (y * p + k) % q == 0)
            .expect("p is invertible mod q");
        KacLabel::new((s0 * p + k) / q, s0)
    }

    /// Whether `(r, s)` already satisfies the canonical convention.
    pub fn is_canonical(&self, r: i64, s: i64) -> bool {
        (1..=self.p).contains(&r) && s >= 1 && self.p * s >= self.q * r
    }

    /// Finds a canonical label whose weight is `h`, if any.
    pub fn kac_label_of(&self, h: &Rational) -> Option<KacLabel> {
        // 4th + (t−1)² = (rt − s)², and p(rt − s) = rq − sp.
        let disc = Rational::int(4) * &self.t * h + (&self.t - Rational::one()).pow(2);
        let root = disc.sqrt_exact()?;
        let k = (root * Rational::int(self.p)).to_i64()?;
        let r0 = (1..=self.p).find(|&x| (x * self.q + k) % self.p == 0)?;
        Some(KacLabel::new(r0, (r0 * self.q + k) / self.p))
    }
}

/// The four shapes of embedding diagrams and module structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    Bulk,
    BoundaryS,
    BoundaryR,
    Corner,
}

impl CentralCharge {
    /// The case of a label with `1 ≤ r ≤ p`, read off from `r = p` and `q | s`.
    pub fn case_of(&self, label: KacLabel) -> Case {
        match (label.r == self.p, label.s % self.q == 0) {
            (false, false) => Case::Bulk,
            (true, false) => Case::BoundaryS,
            (false, true) => Case::BoundaryR,
            (true, true) => Case::Corner,
        }
    }
}
