use super::partition::Partition;
use super::pbw::VermaModule;
use super::singular::{singular_vectors_in, submodule_span};
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `dim (V_h/⟨ṽ⟩) / C_1` for the singular vector `ṽ` at level `n`, counted level by level
/// up to `m`.
///
/// At level `k` the span `C_1` of all `L_{−j}w` with `j ≥ 2` is every PBW monomial except
/// `L_{−1}^k v`, so the quotient is one-dimensional exactly when no vector of `⟨ṽ⟩`
/// has an `L_{−1}^k` component.
pub fn c1_cofinite_dimension(c: &Rational, h: &Rational, n: usize, m: usize) -> Result<usize> {
    if m < n {
        return Err(Error::LevelTooSmall {
            given: m,
            needed: n,
        });
    }
    let module = VermaModule::new(c, h);
    let sing = singular_vectors_in(&module, n);
    if sing.is_empty() {
        return Err(Error::NoSingularVector {
            h: format!("{h:?}"),
            level: n,
        });
    }
    let count = (0..=m)
        .filter(|&k| {
            submodule_span(&module, &sing, k)
                .iter()
                .all(|v| v.coeff(&Partition::ones(k)).is_zero())
        })
        .count();
    Ok(count)
}
