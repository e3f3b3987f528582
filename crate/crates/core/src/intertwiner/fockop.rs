use std::collections::HashMap;

use crate::exactnum::linalg::Echelon;
use crate::exactnum::{QuadExt, Rational};
use crate::fock::{heis_act, kac_basis, FockVector};
use crate::kactable::{CentralCharge, KacLabel};
use crate::verma::{level_basis, IndexedBasis, Partition};

/// `C(n + i − 1, i)`, the coefficients of `(1 − x)^{−n}`.
fn neg_binomial(n: i64, i: i64) -> i64 {
    (1..=i).fold(1i64, |acc, j| acc * (n + j - 1) / j)
}

/// The Fock-module intertwiner `Y: F_λ ⊗ F_μ → F_{λ+μ}{z}` with
/// `Y(v_λ, z)v_μ = z^{λμ} exp(λ Σ_n a_{−n}zⁿ/n) v_{λ+μ}`.
///
/// For monomials `u`, `w` of levels `a`, `b`, `Y(u, z)w = Σ_k c_k z^{λμ+k−a−b}` with `c_k`
/// at level `k` of `F_{λ+μ}`; the block stores `c_0, …, c_n` per pair of monomials.
#[derive(Clone, Debug)]
pub struct FockIntertwinerBlock {
    pub lambda: QuadExt,
    pub mu: QuadExt,
    pub n: usize,
    target: QuadExt,
    memo: HashMap<(Partition, Partition), Vec<FockVector>>,
}

/// Creates the block through target level `n`, with the generator pair computed.
pub fn fock_intertwiner_block(
    _cc: &CentralCharge,
    lambda: &QuadExt,
    mu: &QuadExt,
    n: usize,
) -> FockIntertwinerBlock {
    let mut block = FockIntertwinerBlock {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        target: lambda + mu,
        memo: HashMap::new(),
    };
    block.monomials(&Partition::empty(), &Partition::empty());
    block
}

impl FockIntertwinerBlock {
    /// `λμ`, the power of `z` carrying `v_{λ+μ}`.
    pub fn leading_power(&self) -> Rational {
        (&self.lambda * &self.mu)
            .rational_part()
            .expect("Kac-type momenta have rational products")
    }

    pub fn target_lambda(&self) -> &QuadExt {
        &self.target
    }

    fn scalar(&self, x: Rational) -> QuadExt {
        QuadExt::rational(x, self.lambda.d)
    }

    fn exponential(&self) -> Vec<FockVector> {
        (0..=self.n)
            .map(|k| {
                let mut v = FockVector::zero(&self.target, k);
                for nu in level_basis(k) {
                    let mut x = QuadExt::one(self.lambda.d);
                    let mut prev = 0;
                    let mut run = 0i64;
                    for &part in &nu.parts {
                        run = if part == prev { run + 1 } else { 1 };
                        prev = part;
                        x = &x * &self.lambda.scale(&Rational::new(1, part as i64 * run));
                    }
                    v.add_term(nu, &x);
                }
                v
            })
            .collect()
    }

    /// Components `c_0, …, c_n` of `Y(a_{−u}v_λ, z) a_{−w}v_μ`.
    pub fn monomials(&mut self, u: &Partition, w: &Partition) -> &[FockVector] {
        let key = (u.clone(), w.clone());
        if !self.memo.contains_key(&key) {
            let value = self.compute(u, w);
            self.memo.insert(key.clone(), value);
        }
        &self.memo[&key]
    }

    fn compute(&mut self, u: &Partition, w: &Partition) -> Vec<FockVector> {
        let zero = |k: usize, t: &QuadExt| FockVector::zero(t, k);
        match (u.parts.last(), w.parts.last()) {
            (None, None) => self.exponential(),
            // Y(v_λ, z)a_{−m}w' = a_{−m}Y(v_λ, z)w' − λz^{−m}Y(v_λ, z)w'.
            (None, Some(&m)) => {
                let inner = self.monomials(u, &w.without_part(m).unwrap()).to_vec();
                let m = m as usize;
                (0..=self.n)
                    .map(|k| {
                        let mut c = inner[k].scale(&-self.lambda.clone());
                        if k >= m {
                            c = c.add(&heis_act(-(m as i64), &inner[k - m]));
                        }
                        c
                    })
                    .collect()
            }
            // Y(a_{−m}u', z) = Σ_i C(m+i−1, i) z^i a_{−m−i} Y(u', z)
            //                 − (−1)^m Σ_i C(m+i−1, i) z^{−m−i} Y(u', z) a_i.
            (Some(&m), _) => {
                let inner_u = u.without_part(m).unwrap();
                let m = m as i64;
                let base = self.monomials(&inner_u, w).to_vec();
                let mut out: Vec<FockVector> =
                    (0..=self.n).map(|k| zero(k, &self.target)).collect();
                for (k, slot) in out.iter_mut().enumerate() {
                    let mut i = 0;
                    while m + i <= k as i64 {
                        let x = self.scalar(Rational::int(neg_binomial(m, i)));
                        let v = heis_act(-(m + i), &base[k - (m + i) as usize]);
                        *slot = slot.add(&v.scale(&x));
                        i += 1;
                    }
                }
                let sign = if m % 2 == 0 { -1 } else { 1 };
                for i in 0..=w.level() as i64 {
                    let (w2, f) = if i == 0 {
                        (w.clone(), self.mu.clone())
                    } else {
                        let mult = w.mult(i as u32) as i64;
                        if mult == 0 {
                            continue;
                        }
                        (
                            w.without_part(i as u32).unwrap(),
                            self.scalar(Rational::int(i * mult)),
                        )
                    };
                    let f = &f * &self.scalar(Rational::int(sign * neg_binomial(m, i)));
                    let lowered = self.monomials(&inner_u, &w2).to_vec();
                    for (slot, c) in out.iter_mut().zip(&lowered) {
                        *slot = slot.add(&c.scale(&f));
                    }
                }
                out
            }
        }
    }

    /// Components `c_0, …, c_n` of `Y(u, z)w` for homogeneous `u ∈ F_λ`, `w ∈ F_μ`, with
    /// `Y(u, z)w = Σ_k c_k z^{λμ+k−deg u−deg w}`.
    pub fn apply(&mut self, u: &FockVector, w: &FockVector) -> Vec<FockVector> {
        let mut out: Vec<FockVector> = (0..=self.n)
            .map(|k| FockVector::zero(&self.target, k))
            .collect();
        for (pu, xu) in &u.coeffs {
            for (pw, xw) in &w.coeffs {
                let x = xu * xw;
                let cs = self.monomials(pu, pw);
                for (slot, c) in out.iter_mut().zip(cs) {
                    *slot = slot.add(&c.scale(&x));
                }
            }
        }
        out
    }
}

/// Graded dimensions through level `n` of the span of all coefficients of `Y(u, z)w`
/// with `u ∈ K_{r,s}`, `w ∈ K_{r',s'}` inside `F_{r+r'−1, s+s'−1}`. Sources are taken
/// with total level at most `n`.
pub fn kac_image_graded_dims(cc: &CentralCharge, a: KacLabel, b: KacLabel, n: usize) -> Vec<usize> {
    let ka = kac_basis(cc, a.r, a.s, n);
    let kb = kac_basis(cc, b.r, b.s, n);
    let mut block = fock_intertwiner_block(cc, &ka.lambda, &kb.lambda, n);
    let bases: Vec<IndexedBasis> = (0..=n).map(IndexedBasis::new).collect();
    let mut spans: Vec<Echelon<QuadExt>> = bases.iter().map(|b| Echelon::new(b.len())).collect();
    'outer: for total in 0..=n {
        for la in 0..=total {
            let lb = total - la;
            for u in ka.level(la) {
                for w in kb.level(lb) {
                    for (k, c) in block.apply(&u, &w).iter().enumerate() {
                        if !c.is_zero() && !spans[k].is_full() {
                            spans[k].insert(&c.to_dense(&bases[k]));
                        }
                    }
                    if spans.iter().all(Echelon::is_full) {
                        break 'outer;
                    }
                }
            }
        }
    }
    spans.iter().map(Echelon::rank).collect()
}
