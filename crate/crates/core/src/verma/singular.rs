use serde::Serialize;

use super::partition::{level_basis, IndexedBasis, Partition};
use super::pbw::{PBWVector, VermaModule};
use crate::exactnum::linalg::{kernel_bareiss, kernel_multimodular, Echelon};
use crate::exactnum::Rational;

/// Systems at least this wide are solved by [`kernel_multimodular`].
const MULTIMODULAR_COLUMNS: usize = 200;

/// A basis of the singular vectors of `V_h` at level `n`: the common kernel of `L_1`
/// and `L_2`, each vector monic in `L_{−1}^n`.
pub fn singular_vectors(c: &Rational, h: &Rational, n: usize) -> Vec<PBWVector> {
    singular_vectors_in(&VermaModule::new(c, h), n)
}

pub fn singular_vectors_in(module: &VermaModule, n: usize) -> Vec<PBWVector> {
    singular_vectors_in_quotient(module, &[], n)
}

/// Singular vectors at level `n` of `V_h / ⟨gens⟩`, where `gens` are singular vectors
/// of `V_h`. Each result is reduced modulo the submodule and normalized.
pub fn singular_vectors_in_quotient(
    module: &VermaModule,
    gens: &[PBWVector],
    n: usize,
) -> Vec<PBWVector> {
    if n == 0 {
        return Vec::new();
    }
    let basis = IndexedBasis::new(n);
    let b1 = IndexedBasis::new(n - 1);
    let b2 = (n >= 2).then(|| IndexedBasis::new(n - 2));
    let s1 = submodule_span(module, gens, n - 1);
    let s2 = if n >= 2 {
        submodule_span(module, gens, n - 2)
    } else {
        Vec::new()
    };
    let nx = basis.len();
    let ncols = nx + s1.len() + s2.len();

    let l1: Vec<Vec<Rational>> = basis
        .parts
        .iter()
        .map(|p| module.act(1, &module.monomial(p.clone())).to_dense(&b1))
        .collect();
    let mut rows = Vec::new();
    for i in 0..b1.len() {
        let mut row = vec![Rational::zero(); ncols];
        for j in 0..nx {
            row[j] = l1[j][i].clone();
        }
        for (k, s) in s1.iter().enumerate() {
            row[nx + k] = -s.coeff(&b1.parts[i]);
        }
        rows.push(row);
    }
    if let Some(b2) = &b2 {
        let l2: Vec<Vec<Rational>> = basis
            .parts
            .iter()
            .map(|p| module.act(2, &module.monomial(p.clone())).to_dense(b2))
            .collect();
        for i in 0..b2.len() {
            let mut row = vec![Rational::zero(); ncols];
            for j in 0..nx {
                row[j] = l2[j][i].clone();
            }
            for (k, s) in s2.iter().enumerate() {
                row[nx + s1.len() + k] = -s.coeff(&b2.parts[i]);
            }
            rows.push(row);
        }
    }
    let kernel = if ncols >= MULTIMODULAR_COLUMNS {
        kernel_multimodular(&rows, ncols)
    } else {
        kernel_bareiss(&rows, ncols)
    };

    let mut span = Echelon::new(nx);
    for s in submodule_span(module, gens, n) {
        span.insert(&s.to_dense(&basis));
    }
    let mut out = Vec::new();
    for k in kernel {
        let x = &k[..nx];
        let r = span.reduce(x);
        if span.insert(x) {
            out.push(normalize(PBWVector::from_dense(
                &module.c, &module.h, &basis, &r,
            )));
        }
    }
    out
}

/// Scales `v` so its `L_{−1}^n` coefficient is 1, or, when that coefficient vanishes,
/// so its first non-zero coefficient in reverse-lexicographic order is 1.
pub fn normalize(v: PBWVector) -> PBWVector {
    let lead = v.coeff(&Partition::ones(v.level));
    let lead = if lead.is_zero() {
        level_basis(v.level)
            .iter()
            .map(|p| v.coeff(p))
            .find(|x| !x.is_zero())
            .unwrap_or_else(Rational::one)
    } else {
        lead
    };
    v.scale(&lead.recip().expect("non-zero"))
}

/// Spanning vectors `L_{−μ} g` of the level-`n` part of the submodule generated by the
/// highest-weight vectors `gens`.
pub fn submodule_span(module: &VermaModule, gens: &[PBWVector], n: usize) -> Vec<PBWVector> {
    let mut out = Vec::new();
    for g in gens {
        if g.level > n {
            continue;
        }
        for mu in level_basis(n - g.level) {
            let v = module.lower(&mu, g);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// Outcome of scanning one level for singular vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLevel {
    pub level: usize,
    /// Dimension of the space of singular vectors at this level.
    pub dim: usize,
    /// Whether some singular vector here lies outside the submodule generated by the
    /// singular vectors of lower levels.
    pub primitive: bool,
}

/// Scans levels `1..=max` and reports every level carrying singular vectors.
pub fn singular_scan(module: &VermaModule, max: usize) -> Vec<SingularLevel> {
    let mut gens: Vec<PBWVector> = Vec::new();
    let mut out = Vec::new();
    for n in 1..=max {
        let sing = singular_vectors_in(module, n);
        if sing.is_empty() {
            continue;
        }
        let basis = IndexedBasis::new(n);
        let mut span = Echelon::new(basis.len());
        for s in submodule_span(module, &gens, n) {
            span.insert(&s.to_dense(&basis));
        }
        let primitive = sing.iter().any(|v| !span.contains(&v.to_dense(&basis)));
        out.push(SingularLevel {
            level: n,
            dim: sing.len(),
            primitive,
        });
        gens.extend(sing);
    }
    out
}
