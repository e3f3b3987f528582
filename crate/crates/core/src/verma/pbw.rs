use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::partition::{IndexedBasis, Partition};
use crate::exactnum::Rational;

/// An element of the Verma module `V_h` at central charge `c`, homogeneous of one level,
/// in the PBW basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PBWVector {
    pub c: Rational,
    pub h: Rational,
    pub level: usize,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl PBWVector {
    pub fn zero(c: &Rational, h: &Rational, level: usize) -> Self {
        PBWVector {
            c: c.clone(),
            h: h.clone(),
            level,
            coeffs: BTreeMap::new(),
        }
    }

    /// The highest-weight vector `v_h`.
    pub fn generator(c: &Rational, h: &Rational) -> Self {
        PBWVector::monomial(c, h, Partition::empty())
    }

    pub fn monomial(c: &Rational, h: &Rational, p: Partition) -> Self {
        let mut v = PBWVector::zero(c, h, p.level());
        v.coeffs.insert(p, Rational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Adds `k·x` at the monomial `p`.
    pub fn add_term(&mut self, p: Partition, k: &Rational) {
        if k.is_zero() {
            return;
        }
        debug_assert_eq!(p.level(), self.level);
        match self.coeffs.entry(p) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(k.clone());
            }
        }
    }

    pub fn add(&self, other: &PBWVector) -> PBWVector {
        let mut out = self.clone();
        for (p, k) in &other.coeffs {
            out.add_term(p.clone(), k);
        }
        out
    }

    pub fn sub(&self, other: &PBWVector) -> PBWVector {
        self.add(&other.scale(&Rational::int(-1)))
    }

    pub fn scale(&self, k: &Rational) -> PBWVector {
        let mut out = PBWVector::zero(&self.c, &self.h, self.level);
        if !k.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(p, x)| (p.clone(), x * k))
                .collect();
        }
        out
    }

    /// Coefficients in the order of `basis`, which must be the basis of this level.
    pub fn to_dense(&self, basis: &IndexedBasis) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (p, k) in &self.coeffs {
            v[basis.index(p)] = k.clone();
        }
        v
    }

    pub fn from_dense(c: &Rational, h: &Rational, basis: &IndexedBasis, v: &[Rational]) -> Self {
        let level = basis.parts.first().map_or(0, Partition::level);
        let mut out = PBWVector::zero(c, h, level);
        for (p, k) in basis.parts.iter().zip(v) {
            out.add_term(p.clone(), k);
        }
        out
    }
}

impl Serialize for PBWVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            modes: &'a Partition,
            coeff: &'a Rational,
        }
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .rev()
            .map(|(modes, coeff)| Term { modes, coeff })
            .collect();
        let mut st = s.serialize_struct("PBWVector", 4)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("h", &self.h)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

type Terms = Arc<Vec<(Partition, Rational)>>;

/// The Verma module `V_h` at central charge `c`, with a cache of `L_m` on PBW monomials.
#[derive(Debug)]
pub struct VermaModule {
    pub c: Rational,
    pub h: Rational,
    cache: Mutex<HashMap<(i64, Partition), Terms>>,
}

impl VermaModule {
    pub fn new(c: &Rational, h: &Rational) -> Self {
        VermaModule {
            c: c.clone(),
            h: h.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn generator(&self) -> PBWVector {
        PBWVector::generator(&self.c, &self.h)
    }

    pub fn monomial(&self, p: Partition) -> PBWVector {
        PBWVector::monomial(&self.c, &self.h, p)
    }

    pub fn zero(&self, level: usize) -> PBWVector {
        PBWVector::zero(&self.c, &self.h, level)
    }

    /// `L_m v`. Lowering below level 0 gives the zero vector at level 0.
    pub fn act(&self, m: i64, v: &PBWVector) -> PBWVector {
        let target = v.level as i64 - m;
        if target < 0 {
            return self.zero(0);
        }
        let mut out = self.zero(target as usize);
        for (p, k) in &v.coeffs {
            for (q, x) in self.act_monomial(m, p).iter() {
                out.add_term(q.clone(), &(k * x));
            }
        }
        out
    }

    /// Applies `L_{m_1} L_{m_2} ⋯ L_{m_k}` (rightmost first).
    pub fn act_word(&self, word: &[i64], v: &PBWVector) -> PBWVector {
        word.iter().rev().fold(v.clone(), |w, &m| self.act(m, &w))
    }

    /// `L_{−μ} v` for the monomial indexed by `mu`.
    pub fn lower(&self, mu: &Partition, v: &PBWVector) -> PBWVector {
        mu.parts
            .iter()
            .fold(v.clone(), |w, &n| self.act(-(n as i64), &w))
    }

    /// `L_m` on the PBW monomial `p·v_h`, as a list of terms.
    pub fn act_monomial(&self, m: i64, p: &Partition) -> Terms {
        if let Some(t) = self.cache.lock().unwrap().get(&(m, p.clone())) {
            return t.clone();
        }
        let t = Arc::new(self.compute(m, p));
        self.cache.lock().unwrap().insert((m, p.clone()), t.clone());
        t
    }

    fn compute(&self, m: i64, p: &Partition) -> Vec<(Partition, Rational)> {
        let lev = p.level() as i64;
        if lev - m < 0 {
            return Vec::new();
        }
        let Some(&a) = p.parts.last() else {
            return match m {
                0 => vec![(Partition::empty(), self.h.clone())],
                m if m < 0 => vec![(Partition::new(vec![(-m) as u32]), Rational::one())],
                _ => Vec::new(),
            };
        };
        if m == 0 {
            return vec![(p.clone(), &self.h + Rational::int(lev))];
        }
        let a = a as i64;
        if m < 0 && -m <= a {
            return vec![(p.with_part((-m) as u32), Rational::one())];
        }
        // L_m L_{−a} w = L_{−a} L_m w + (m + a) L_{m−a} w + δ_{m,a} c (m³ − m)/12 w
        let rest = Partition {
            parts: p.parts[..p.parts.len() - 1].to_vec(),
        };
        let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
        let mut push = |q: &Partition, x: Rational| {
            *acc.entry(q.clone()).or_default() += &x;
        };
        for (mu, x) in self.act_monomial(m, &rest).iter() {
            for (nu, y) in self.act_monomial(-a, mu).iter() {
                push(nu, x * y);
            }
        }
        if m + a != 0 {
            let f = Rational::int(m + a);
            for (mu, x) in self.act_monomial(m - a, &rest).iter() {
                push(mu, &f * x);
            }
        }
        if m == a {
            push(&rest, &self.c * Rational::new(m * m * m - m, 12));
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}
