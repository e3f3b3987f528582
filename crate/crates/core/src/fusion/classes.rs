use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::exactnum::Rational;
use crate::fock::kac_structure;
use crate::kactable::{CentralCharge, KacLabel};
use crate::verma::{kac_quotient_character, simple_character};

/// The simple module `L_{r,s}`, stored under its canonical label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleLabel(KacLabel);

impl SimpleLabel {
    /// `L_{r,s}` for any `r, s ≥ 1`.
    pub fn new(cc: &CentralCharge, r: i64, s: i64) -> Self {
        SimpleLabel(cc.normalize_label(r, s).0)
    }

    pub fn label(self) -> KacLabel {
        self.0
    }

    pub fn weight(self, cc: &CentralCharge) -> Rational {
        cc.h(self.0.r, self.0.s)
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

/// A finite multiset of simple modules.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GrothendieckClass {
    factors: BTreeMap<SimpleLabel, u64>,
}

impl GrothendieckClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(l: SimpleLabel) -> Self {
        let mut c = Self::zero();
        c.insert(l, 1);
        c
    }

    pub fn insert(&mut self, l: SimpleLabel, mult: u64) {
        if mult > 0 {
            *self.factors.entry(l).or_insert(0) += mult;
        }
    }

    pub fn add(&self, other: &GrothendieckClass) -> GrothendieckClass {
        let mut out = self.clone();
        for (&l, &m) in &other.factors {
            out.insert(l, m);
        }
        out
    }

    pub fn scaled(&self, k: u64) -> GrothendieckClass {
        let mut out = Self::zero();
        for (&l, &m) in &self.factors {
            out.insert(l, m * k);
        }
        out
    }

    pub fn mult(&self, l: SimpleLabel) -> u64 {
        self.factors.get(&l).copied().unwrap_or(0)
    }

    /// Total number of composition factors.
    pub fn length(&self) -> u64 {
        self.factors.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether every factor of `other` occurs here at least as often.
    pub fn contains(&self, other: &GrothendieckClass) -> bool {
        other.factors.iter().all(|(&l, &m)| self.mult(l) >= m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SimpleLabel, u64)> + '_ {
        self.factors.iter().map(|(&l, &m)| (l, m))
    }

    /// The factors whose weight differs from `h` by an integer.
    pub fn congruent_part(&self, cc: &CentralCharge, h: &Rational) -> GrothendieckClass {
        let mut out = Self::zero();
        for (l, m) in self.iter() {
            if (l.weight(cc) - h).is_integer() {
                out.insert(l, m);
            }
        }
        out
    }

    /// Graded dimensions `weight → dim` of the factors, for every weight `≤ cutoff`.
    pub fn character(&self, cc: &CentralCharge, cutoff: &Rational) -> BTreeMap<Rational, u64> {
        let mut out = BTreeMap::new();
        for (l, m) in self.iter() {
            let h = l.weight(cc);
            let Some(n) = levels_below(&h, cutoff) else {
                continue;
            };
            for (k, d) in simple_character(cc, l.label(), n).into_iter().enumerate() {
                add_weight(&mut out, &h + Rational::int(k as i64), d * m);
            }
        }
        out
    }
}

impl fmt::Display for GrothendieckClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(l, m)| {
                if m == 1 {
                    l.to_string()
                } else {
                    format!("{m}·{l}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Serialize)]
struct Entry {
    r: i64,
    s: i64,
    mult: u64,
}

impl Serialize for GrothendieckClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for (l, mult) in self.iter() {
            let KacLabel { r, s } = l.label();
            seq.serialize_element(&Entry { r, s, mult })?;
        }
        seq.end()
    }
}

fn levels_below(h: &Rational, cutoff: &Rational) -> Option<usize> {
    let gap = cutoff - h;
    if gap.is_negative() {
        return None;
    }
    gap.floor().try_into().ok()
}

fn add_weight(map: &mut BTreeMap<Rational, u64>, w: Rational, d: u64) {
    if d > 0 {
        *map.entry(w).or_insert(0) += d;
    }
}

/// Composition factors of `K_{r,s}`; empty when `r ≤ 0` or `s ≤ 0`.
pub fn kac_class(cc: &CentralCharge, r: i64, s: i64) -> GrothendieckClass {
    let mut out = GrothendieckClass::zero();
    if r <= 0 || s <= 0 {
        return out;
    }
    for f in kac_structure(cc, r, s).factors {
        out.insert(SimpleLabel(f), 1);
    }
    out
}

/// Graded dimensions of `K_{r,s}` from `p(n) − p(n − rs)`, for every weight `≤ cutoff`.
pub fn kac_character(
    cc: &CentralCharge,
    r: i64,
    s: i64,
    cutoff: &Rational,
) -> BTreeMap<Rational, u64> {
    let mut out = BTreeMap::new();
    if r <= 0 || s <= 0 {
        return out;
    }
    let h = cc.h(r, s);
    if let Some(n) = levels_below(&h, cutoff) {
        for (k, d) in kac_quotient_character(r, s, n).into_iter().enumerate() {
            add_weight(&mut out, &h + Rational::int(k as i64), d);
        }
    }
    out
}

/// Sum of two graded-dimension maps.
pub fn add_characters(
    a: &BTreeMap<Rational, u64>,
    b: &BTreeMap<Rational, u64>,
) -> BTreeMap<Rational, u64> {
    let mut out = a.clone();
    for (w, &d) in b {
        add_weight(&mut out, w.clone(), d);
    }
    out
}
