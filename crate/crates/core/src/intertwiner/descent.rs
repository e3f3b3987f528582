use std::collections::HashMap;

use super::recursion::{BranchChoice, PrimaryFieldCoefficients};
use crate::error::{Error, Result};
use crate::exactnum::linalg::Echelon;
use crate::exactnum::Rational;
use crate::kactable::{CentralCharge, KacLabel};
use crate::verma::{
    diagram_to_level, singular_vectors, submodule_span, IndexedBasis, PBWVector, Partition,
    VermaModule,
};

/// `Y(v_{1,2}, z)` on every descendant of `v₁`, by the primary-field rule
/// `Y(L_{−m}w) = L_{−m}Y(w) − z^{−m}((1−m)h_{1,2} + z d/dz)Y(w)`.
///
/// A vector `w` of level `j` has `Y(v_{1,2}, z)w = Σ_K c_K z^{h+K−j}` with `c_K` at level
/// `K` of the target Verma module; each entry stores `c_0, …, c_n`.
pub struct PrimaryFieldOnDescendants<'a> {
    coeffs: &'a PrimaryFieldCoefficients,
    module: VermaModule,
    h12: Rational,
    exponent: Rational,
    memo: HashMap<Partition, Vec<PBWVector>>,
}

impl<'a> PrimaryFieldOnDescendants<'a> {
    pub fn new(coeffs: &'a PrimaryFieldCoefficients) -> Self {
        PrimaryFieldOnDescendants {
            coeffs,
            module: coeffs.target_module(),
            h12: coeffs.cc.h(1, 2),
            exponent: coeffs.exponent(),
            memo: HashMap::new(),
        }
    }

    pub fn target_module(&self) -> &VermaModule {
        &self.module
    }

    /// Components `c_0, …, c_n` for the PBW monomial `p·v₁`.
    pub fn monomial(&mut self, p: &Partition) -> Vec<PBWVector> {
        let mut memo = std::mem::take(&mut self.memo);
        let out = self.descend(&mut memo, &self.coeffs.phis, 0, p);
        self.memo = memo;
        out
    }

    fn descend(
        &self,
        memo: &mut HashMap<Partition, Vec<PBWVector>>,
        base: &[PBWVector],
        base_level: usize,
        p: &Partition,
    ) -> Vec<PBWVector> {
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let out = match p.parts.last() {
            None => base.to_vec(),
            Some(&m) => {
                let inner = p.without_part(m).expect("part present");
                let prev = self.descend(memo, base, base_level, &inner);
                let m = m as usize;
                let j = Rational::int((base_level + inner.level()) as i64);
                let shift = Rational::int(1 - m as i64) * &self.h12 + &self.exponent - j;
                (0..prev.len())
                    .map(|k| {
                        let f = &shift + Rational::int(k as i64);
                        let mut c = prev[k].scale(&-f);
                        if k >= m {
                            c = c.add(&self.module.act(-(m as i64), &prev[k - m]));
                        }
                        c
                    })
                    .collect()
            }
        };
        memo.insert(p.clone(), out.clone());
        out
    }

    /// Components `c_0, …, c_n` for an arbitrary homogeneous vector of the source.
    pub fn apply(&mut self, w: &PBWVector) -> Vec<PBWVector> {
        let mut out: Vec<PBWVector> = (0..=self.coeffs.n).map(|k| self.module.zero(k)).collect();
        for (p, x) in &w.coeffs {
            for (k, c) in self.monomial(p).iter().enumerate() {
                out[k] = out[k].add(&c.scale(x));
            }
        }
        out
    }

    /// Components for `P₁P₂⋯P_k v₁`, where each factor `P_i` is given by the vector
    /// `P_i v` of the Verma module it acts on.
    pub fn apply_composite(&mut self, factors: &[PBWVector]) -> Vec<PBWVector> {
        let Some((first, rest)) = factors.split_first() else {
            return self.coeffs.phis.clone();
        };
        let mut comps = self.apply(first);
        let mut level = first.level;
        for op in rest {
            let mut memo = HashMap::new();
            let mut out: Vec<PBWVector> =
                (0..=self.coeffs.n).map(|k| self.module.zero(k)).collect();
            for (p, x) in &op.coeffs {
                for (k, c) in self.descend(&mut memo, &comps, level, p).iter().enumerate() {
                    out[k] = out[k].add(&c.scale(x));
                }
            }
            comps = out;
            level += op.level;
        }
        comps
    }
}

/// The singular vector of level `n` in `V_{r,s}` through a path of embeddings in the
/// embedding diagram: `[P_1 v, P_2 v', …]` with `ṽ = ⋯ P_2 P_1 v`, where `v'` generates the
/// first submodule on the path. The path minimizes its largest step.
pub fn singular_vector_chain(
    cc: &CentralCharge,
    label: KacLabel,
    n: usize,
) -> Option<Vec<PBWVector>> {
    let d = diagram_to_level(cc, label, n);
    let target = d.nodes.iter().position(|x| x.level == n as i64)?;
    let mut order: Vec<usize> = (0..d.nodes.len()).collect();
    order.sort_by_key(|&i| d.nodes[i].level);
    let mut best: Vec<Option<(i64, usize)>> = vec![None; d.nodes.len()];
    best[order[0]] = Some((0, order[0]));
    for &i in &order {
        let Some((cost, _)) = best[i] else { continue };
        for &(child, parent) in &d.arrows {
            if parent != i {
                continue;
            }
            let c = cost.max(d.nodes[child].level - d.nodes[i].level);
            if best[child].is_none_or(|(b, _)| c < b) {
                best[child] = Some((c, i));
            }
        }
    }
    best[target]?;
    let mut path = vec![target];
    while let Some((_, parent)) = best[*path.last().unwrap()] {
        if parent == *path.last().unwrap() {
            break;
        }
        path.push(parent);
    }
    path.reverse();
    let h_top = cc.h(label.r, label.s);
    path.windows(2)
        .map(|w| {
            let (a, b) = (&d.nodes[w[0]], &d.nodes[w[1]]);
            let h = &h_top + Rational::int(a.level);
            singular_vectors(&cc.c, &h, (b.level - a.level) as usize)
                .into_iter()
                .next()
        })
        .collect()
}

/// Whether `Y(v_{1,2}, z)ṽ_{r,s}` vanishes in `K̃_{r,s±1}` through target level `n`,
/// with `ṽ_{r,s}` the singular vector of level `rs` in the source. The coefficients must
/// be built through level `n`.
pub fn descends_to_kac_quotient(coeffs: &PrimaryFieldCoefficients, n: usize) -> Result<bool> {
    let cc = &coeffs.cc;
    let (r, s) = (coeffs.label.r, coeffs.label.s);
    let tgt = coeffs.target_label();
    if tgt.s <= 0 {
        return Ok(true);
    }
    if coeffs.n < n {
        return Err(Error::LevelTooSmall {
            given: coeffs.n,
            needed: n,
        });
    }
    let rs = (r * s) as usize;
    let chain =
        singular_vector_chain(cc, coeffs.label, rs).ok_or_else(|| Error::NoSingularVector {
            h: coeffs.h1.to_string(),
            level: rs,
        })?;
    let mut field = PrimaryFieldOnDescendants::new(coeffs);
    let image = field.apply_composite(&chain);
    let module = field.target_module();
    let needed = (tgt.r * tgt.s) as usize;
    let quotient_gen = if needed <= n {
        singular_vectors(&module.c, &module.h, needed)
    } else {
        Vec::new()
    };
    for (k, c) in image.iter().enumerate().take(n + 1) {
        if c.is_zero() {
            continue;
        }
        let basis = IndexedBasis::new(k);
        let mut span = Echelon::new(basis.len());
        for g in submodule_span(module, &quotient_gen, k) {
            span.insert(&g.to_dense(&basis));
        }
        if !span.contains(&c.to_dense(&basis)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the case table guarantees descent: always when `q ∤ s`; for `q | s`, the `+`
/// target needs `1 ≤ r ≤ p − 1` and the `−` target needs `ps ≤ qr`. Outside these cases
/// descent is not ruled out.
pub fn descent_expected(cc: &CentralCharge, label: KacLabel, branch: BranchChoice) -> bool {
    let (p, q) = (cc.p, cc.q);
    let (r, s) = (label.r, label.s);
    if s % q != 0 {
        return true;
    }
    match branch {
        BranchChoice::Plus => (1..p).contains(&r),
        BranchChoice::Minus => p * s <= q * r,
    }
}
