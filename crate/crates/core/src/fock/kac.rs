use serde::Serialize;

use super::heisenberg::{FockModule, FockVector};
use crate::exactnum::linalg::Echelon;
use crate::exactnum::{QuadExt, Rational};
use crate::kactable::{CentralCharge, KacLabel};
use crate::verma::{level_basis, IndexedBasis, Partition};

/// The Kac module `K_{r,s} ⊆ F_{r,s}`, level by level up to a cap.
#[derive(Clone, Debug)]
pub struct KacModuleBasis {
    pub label: KacLabel,
    pub lambda: QuadExt,
    /// `h_{r,s} + rs`: the generators are the Fock vectors of lower weight.
    pub cutoff: Rational,
    spans: Vec<Echelon<QuadExt>>,
}

impl KacModuleBasis {
    pub fn max_level(&self) -> usize {
        self.spans.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spans.iter().map(Echelon::rank).collect()
    }

    pub fn span(&self, level: usize) -> &Echelon<QuadExt> {
        &self.spans[level]
    }

    /// A basis of level `n` in reduced echelon form.
    pub fn level(&self, n: usize) -> Vec<FockVector> {
        let basis = IndexedBasis::new(n);
        self.spans[n]
            .rows()
            .iter()
            .map(|r| FockVector::from_dense(&self.lambda, &basis, r))
            .collect()
    }

    pub fn contains(&self, v: &FockVector) -> bool {
        let basis = IndexedBasis::new(v.level);
        self.spans[v.level].contains(&v.to_dense(&basis))
    }
}

#[derive(Serialize)]
struct KacDims<'a> {
    label: KacLabel,
    cutoff: &'a Rational,
    dims: Vec<usize>,
}

impl Serialize for KacModuleBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        KacDims {
            label: self.label,
            cutoff: &self.cutoff,
            dims: self.dims(),
        }
        .serialize(s)
    }
}

/// Builds `K_{r,s}` through level `n`: all of `F_{r,s}` below level `rs`, and above it
/// the span of `L_{−k} K[m − k]`.
pub fn kac_basis(cc: &CentralCharge, r: i64, s: i64, n: usize) -> KacModuleBasis {
    let lambda = cc.lambda(r, s);
    let module = FockModule::new(cc, &lambda);
    let rs = (r * s).max(0) as usize;
    let mut spans: Vec<Echelon<QuadExt>> = Vec::new();
    let mut bases: Vec<IndexedBasis> = Vec::new();
    for m in 0..=n {
        let basis = IndexedBasis::new(m);
        let mut span = Echelon::new(basis.len());
        if m < rs {
            for p in level_basis(m) {
                span.insert(&module.monomial(p).to_dense(&basis));
            }
        } else {
            'fill: for k in 1..=m {
                let src = &spans[m - k];
                for row in src.rows() {
                    let v = FockVector::from_dense(&lambda, &bases[m - k], row);
                    span.insert(&module.vir(-(k as i64), &v).to_dense(&basis));
                    if span.is_full() {
                        break 'fill;
                    }
                }
            }
        }
        spans.push(span);
        bases.push(basis);
    }
    KacModuleBasis {
        label: KacLabel::new(r, s),
        lambda,
        cutoff: cc.h(r, s) + Rational::int(r * s),
        spans,
    }
}

/// Dense coordinates of `v` in the monomial basis of its level.
pub fn dense(v: &FockVector) -> Vec<QuadExt> {
    v.to_dense(&IndexedBasis::new(v.level))
}

/// The monomial `a_{−μ} v_λ`.
pub fn fock_monomial(lambda: &QuadExt, parts: &[u32]) -> FockVector {
    FockVector::monomial(lambda, Partition::new(parts.to_vec()))
}
