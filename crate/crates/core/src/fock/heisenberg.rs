use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactnum::{QuadExt, Rational};
use crate::kactable::CentralCharge;
use crate::verma::{IndexedBasis, Partition};

/// A homogeneous element of the Fock module `F_λ`; the partition `μ` stands for
/// `a_{−μ_1} ⋯ a_{−μ_k} v_λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    pub lambda: QuadExt,
    pub level: usize,
    pub coeffs: BTreeMap<Partition, QuadExt>,
}

impl FockVector {
    pub fn zero(lambda: &QuadExt, level: usize) -> Self {
        FockVector {
            lambda: lambda.clone(),
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(lambda: &QuadExt) -> Self {
        FockVector::monomial(lambda, Partition::empty())
    }

    pub fn monomial(lambda: &QuadExt, p: Partition) -> Self {
        let mut v = FockVector::zero(lambda, p.level());
        v.coeffs.insert(p, QuadExt::one(lambda.d));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> QuadExt {
        self.coeffs
            .get(p)
            .cloned()
            .unwrap_or_else(|| QuadExt::zero(self.lambda.d))
    }

    pub fn add_term(&mut self, p: Partition, k: &QuadExt) {
        if k.is_zero() {
            return;
        }
        debug_assert_eq!(p.level(), self.level);
        match self.coeffs.entry(p) {
            Entry::Occupied(mut e) => {
                let v = e.get() + k;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(k.clone());
            }
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (p, k) in &other.coeffs {
            out.add_term(p.clone(), k);
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&QuadExt::rational(Rational::int(-1), self.lambda.d)))
    }

    pub fn scale(&self, k: &QuadExt) -> FockVector {
        let mut out = FockVector::zero(&self.lambda, self.level);
        if !k.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(p, x)| (p.clone(), x * k))
                .collect();
        }
        out
    }

    pub fn to_dense(&self, basis: &IndexedBasis) -> Vec<QuadExt> {
        let mut v = vec![QuadExt::zero(self.lambda.d); basis.len()];
        for (p, k) in &self.coeffs {
            v[basis.index(p)] = k.clone();
        }
        v
    }

    pub fn from_dense(lambda: &QuadExt, basis: &IndexedBasis, v: &[QuadExt]) -> Self {
        let level = basis.parts.first().map_or(0, Partition::level);
        let mut out = FockVector::zero(lambda, level);
        for (p, k) in basis.parts.iter().zip(v) {
            out.add_term(p.clone(), k);
        }
        out
    }
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            modes: &'a Partition,
            coeff: &'a QuadExt,
        }
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .rev()
            .map(|(modes, coeff)| Term { modes, coeff })
            .collect();
        let mut st = s.serialize_struct("FockVector", 3)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `a_n` on a monomial: `a_{−k}` adds a part, `a_k` removes one part `k` with factor
/// `k·mult(k)`, `a_0` multiplies by `λ`.
pub fn heis_monomial(n: i64, p: &Partition, lambda: &QuadExt) -> Option<(Partition, QuadExt)> {
    let d = lambda.d;
    match n {
        0 => Some((p.clone(), lambda.clone())),
        n if n < 0 => Some((p.with_part((-n) as u32), QuadExt::one(d))),
        n => {
            let m = p.mult(n as u32);
            (m > 0).then(|| {
                (
                    p.without_part(n as u32).expect("part present"),
                    QuadExt::rational(Rational::int(n * m as i64), d),
                )
            })
        }
    }
}

/// `a_n v`, with `a_n v` the zero vector at level 0 when the level would go negative.
pub fn heis_act(n: i64, v: &FockVector) -> FockVector {
    let target = v.level as i64 - n;
    if target < 0 {
        return FockVector::zero(&v.lambda, 0);
    }
    let mut out = FockVector::zero(&v.lambda, target as usize);
    for (p, k) in &v.coeffs {
        if let Some((q, x)) = heis_monomial(n, p, &v.lambda) {
            out.add_term(q, &(k * &x));
        }
    }
    out
}

type Terms = Arc<Vec<(Partition, QuadExt)>>;

/// The Feigin–Fuchs module `F_λ` at central charge `c_{p,q}`: a Fock module with the
/// Virasoro action of background charge `Q`, and a cache of `L_n` on monomials.
#[derive(Debug)]
pub struct FockModule {
    pub cc: CentralCharge,
    pub lambda: QuadExt,
    cache: Mutex<HashMap<(i64, Partition), Terms>>,
}

impl FockModule {
    pub fn new(cc: &CentralCharge, lambda: &QuadExt) -> Self {
        FockModule {
            cc: cc.clone(),
            lambda: lambda.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn generator(&self) -> FockVector {
        FockVector::generator(&self.lambda)
    }

    pub fn monomial(&self, p: Partition) -> FockVector {
        FockVector::monomial(&self.lambda, p)
    }

    /// `½λ(λ − Q)`.
    pub fn lowest_weight(&self) -> Rational {
        let w = &self.lambda * &(&self.lambda - &self.cc.bg);
        w.rational_part().expect("rational weight") * Rational::new(1, 2)
    }

    pub fn heis(&self, n: i64, v: &FockVector) -> FockVector {
        heis_act(n, v)
    }

    pub fn vir(&self, n: i64, v: &FockVector) -> FockVector {
        let target = v.level as i64 - n;
        if target < 0 {
            return FockVector::zero(&self.lambda, 0);
        }
        let mut out = FockVector::zero(&self.lambda, target as usize);
        for (p, k) in &v.coeffs {
            for (q, x) in self.vir_monomial(n, p).iter() {
                out.add_term(q.clone(), &(k * x));
            }
        }
        out
    }

    /// Applies `L_{−μ_1} ⋯ L_{−μ_k}` (the last part outermost).
    pub fn vir_lower(&self, mu: &Partition, v: &FockVector) -> FockVector {
        mu.parts
            .iter()
            .fold(v.clone(), |w, &n| self.vir(-(n as i64), &w))
    }

    fn vir_monomial(&self, n: i64, p: &Partition) -> Terms {
        if let Some(t) = self.cache.lock().unwrap().get(&(n, p.clone())) {
            return t.clone();
        }
        let t = Arc::new(self.compute(n, p));
        self.cache.lock().unwrap().insert((n, p.clone()), t.clone());
        t
    }

    fn compute(&self, n: i64, p: &Partition) -> Vec<(Partition, QuadExt)> {
        let d = self.lambda.d;
        let lev = p.level() as i64;
        if n == 0 {
            let w = self.lowest_weight() + Rational::int(lev);
            return vec![(p.clone(), QuadExt::rational(w, d))];
        }
        let mut acc: BTreeMap<Partition, QuadExt> = BTreeMap::new();
        let half = Rational::new(1, 2);
        // ½ Σ_j a_j a_{n−j}: the two modes commute for n ≠ 0, so apply the larger first.
        for j in (n - lev)..=lev {
            let (lo, hi) = if j <= n - j { (j, n - j) } else { (n - j, j) };
            if hi > lev {
                continue;
            }
            if let Some((q1, x1)) = heis_monomial(hi, p, &self.lambda) {
                if let Some((q2, x2)) = heis_monomial(lo, &q1, &self.lambda) {
                    let e = acc.entry(q2).or_insert_with(|| QuadExt::zero(d));
                    *e = &*e + &(&x1 * &x2).scale(&half);
                }
            }
        }
        // −½(n + 1) Q a_n
        if let Some((q1, x1)) = heis_monomial(n, p, &self.lambda) {
            let f = &self.cc.bg.scale(&Rational::new(-(n + 1), 2)) * &x1;
            let e = acc.entry(q1).or_insert_with(|| QuadExt::zero(d));
            *e = &*e + &f;
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

/// `L_n v` on the Fock module `F_λ` of `v`.
pub fn vir_act_on_fock(cc: &CentralCharge, n: i64, v: &FockVector) -> FockVector {
    FockModule::new(cc, &v.lambda).vir(n, v)
}
