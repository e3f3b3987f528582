use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::kactable::{CentralCharge, KacLabel};
use crate::verma::{PBWVector, VermaModule};

/// The sign of `√(4th₁ + (t−1)²) = ±(rt − s)`. `Plus` targets `h_{r,s+1}` and
/// `Minus` targets `h_{r,s−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BranchChoice {
    Plus,
    Minus,
}

impl BranchChoice {
    pub fn sign(self) -> i64 {
        match self {
            BranchChoice::Plus => 1,
            BranchChoice::Minus => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BranchChoice::Plus => "plus",
            BranchChoice::Minus => "minus",
        }
    }

    /// The label of the target module `(r, s ± 1)`.
    pub fn target(self, label: KacLabel) -> KacLabel {
        KacLabel::new(label.r, label.s + self.sign())
    }
}

/// One choice of target weight for `Y(v_{1,2}, z)` on the module of weight `h_{r,s}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllowedTarget {
    pub branch: BranchChoice,
    pub h2: Rational,
    /// `σ/t` where `σ = ±(rt − s)`; the recursion factor `k(tk − σ)` vanishes at `k = σ/t`.
    pub ratio: Rational,
    pub admissible: bool,
}

fn root(cc: &CentralCharge, label: KacLabel, branch: BranchChoice) -> Rational {
    (&cc.t * Rational::int(label.r) - Rational::int(label.s)) * Rational::int(branch.sign())
}

fn target(cc: &CentralCharge, label: KacLabel, branch: BranchChoice) -> AllowedTarget {
    let sigma = root(cc, label, branch);
    let h1 = cc.h(label.r, label.s);
    let two_t = Rational::int(2) * &cc.t;
    let h2 = &h1 + (Rational::one() - &sigma * Rational::int(2)) / (Rational::int(2) * &two_t);
    let t2 = branch.target(label);
    debug_assert_eq!(h2, cc.h(t2.r, t2.s));
    let ratio = &sigma / &cc.t;
    let admissible = !(ratio.is_integer() && ratio >= 1);
    AllowedTarget {
        branch,
        h2,
        ratio,
        admissible,
    }
}

/// Both branches for the middle weight `h_{r,s}`, with their target weights.
pub fn allowed_targets(cc: &CentralCharge, label: KacLabel) -> Vec<AllowedTarget> {
    [BranchChoice::Plus, BranchChoice::Minus]
        .into_iter()
        .map(|b| target(cc, label, b))
        .collect()
}

/// Like [`allowed_targets`] for a bare weight, which must lie in the Kac table.
pub fn allowed_targets_for_weight(cc: &CentralCharge, h1: &Rational) -> Result<Vec<AllowedTarget>> {
    let label = cc
        .kac_label_of(h1)
        .ok_or_else(|| Error::NotKacWeight(h1.to_string()))?;
    Ok(allowed_targets(cc, label))
}

/// Coefficients `φ_k` of `Y(v_{1,2}, z) v₁ = Σ_k φ_k z^{h+k}`, with `v₁` of weight `h₁`
/// and `φ_k` at level `k` of the Verma module of weight `h₂`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimaryFieldCoefficients {
    #[serde(skip)]
    pub cc: CentralCharge,
    pub source: KacLabel,
    pub label: KacLabel,
    pub h1: Rational,
    pub h2: Rational,
    pub branch: BranchChoice,
    pub admissible: bool,
    pub n: usize,
    pub phis: Vec<PBWVector>,
}

impl PrimaryFieldCoefficients {
    /// `h = h₂ − h_{1,2} − h₁`, the leading exponent.
    pub fn exponent(&self) -> Rational {
        &self.h2 - self.cc.h(1, 2) - &self.h1
    }

    pub fn target_label(&self) -> KacLabel {
        self.branch.target(self.label)
    }

    pub fn target_module(&self) -> VermaModule {
        VermaModule::new(&self.cc.c, &self.h2)
    }
}

/// Solves `k(tk − σ) φ_k = Σ_{i=1}^{k} L_{−i} φ_{k−i}` from `φ_0 = v₂` up to `k = n`.
pub fn build_primary_coefficients(
    cc: &CentralCharge,
    label: KacLabel,
    branch: BranchChoice,
    n: usize,
) -> Result<PrimaryFieldCoefficients> {
    let tg = target(cc, label, branch);
    if !tg.admissible {
        return Err(Error::InadmissibleBranch {
            r: label.r,
            s: label.s,
            branch: branch.name().into(),
            k: tg.ratio.to_i64().unwrap_or_default(),
        });
    }
    let sigma = root(cc, label, branch);
    let module = VermaModule::new(&cc.c, &tg.h2);
    let mut phis = vec![module.generator()];
    for k in 1..=n {
        let kk = Rational::int(k as i64);
        let factor = &kk * (&cc.t * &kk - &sigma);
        let mut sum = module.zero(k);
        for i in 1..=k {
            sum = sum.add(&module.act(-(i as i64), &phis[k - i]));
        }
        phis.push(sum.scale(&factor.recip()?));
    }
    Ok(PrimaryFieldCoefficients {
        cc: cc.clone(),
        source: KacLabel::new(1, 2),
        label,
        h1: cc.h(label.r, label.s),
        h2: tg.h2,
        branch,
        admissible: true,
        n,
        phis,
    })
}

/// Checks `L_m φ_k = (k + m(h_{1,2} − 1) + h₂ − h₁) φ_{k−m}` for `0 < m ≤ k ≤ max`,
/// `L_m φ_k = 0` for `k < m ≤ max`, and `L_0 φ_k = (h₂ + k) φ_k`.
pub fn verify_primary_condition(coeffs: &PrimaryFieldCoefficients, max: usize) -> bool {
    if max > coeffs.n {
        return false;
    }
    let module = coeffs.target_module();
    let h12 = coeffs.cc.h(1, 2);
    let shift = &coeffs.h2 - &coeffs.h1;
    for k in 0..=max {
        let phi = &coeffs.phis[k];
        if module.act(0, phi) != phi.scale(&(&coeffs.h2 + Rational::int(k as i64))) {
            return false;
        }
        for m in 1..=max {
            let lhs = module.act(m as i64, phi);
            let ok = if m <= k {
                let f = Rational::int(k as i64)
                    + Rational::int(m as i64) * (&h12 - Rational::one())
                    + &shift;
                lhs == coeffs.phis[k - m].scale(&f)
            } else {
                lhs.is_zero()
            };
            if !ok {
                return false;
            }
        }
    }
    true
}
