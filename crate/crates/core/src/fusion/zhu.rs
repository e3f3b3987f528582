use serde::Serialize;

use super::products::FusionGenerator;
use crate::exactnum::Rational;
use crate::kactable::{CentralCharge, KacLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ZhuCase {
    /// Distinct roots differing by a non-integer: `L_0` semisimple, at most two eigenvalues.
    TwoSemisimple,
    /// Distinct roots differing by an integer: a single eigenvalue, one of the roots.
    SingleEigenvalue,
    /// A double root: `L_0` may act by a Jordan block.
    JordanBlock,
}

/// Lowest-weight constraint on `G ⊠ K_{r,s}` from the Zhu algebra `C[x]`: `L_0` on the
/// lowest weight space is annihilated by a monic quadratic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZhuConstraint {
    pub generator: FusionGenerator,
    pub label: KacLabel,
    /// Coefficients `[c₀, c₁, 1]` of `x² + c₁x + c₀`.
    pub polynomial: Vec<Rational>,
    pub roots: [Rational; 2],
    pub case: ZhuCase,
}

impl ZhuConstraint {
    pub fn eval(&self, x: &Rational) -> Rational {
        &self.polynomial[0] + &self.polynomial[1] * x + x * x
    }

    pub fn has_root(&self, x: &Rational) -> bool {
        self.eval(x).is_zero()
    }
}

/// `(x − h_{r,s−1})(x − h_{r,s+1})` for `K_{1,2}`, `(x − h_{r−1,s})(x − h_{r+1,s})` for `K_{2,1}`.
pub fn zhu_constraint(
    cc: &CentralCharge,
    generator: FusionGenerator,
    r: i64,
    s: i64,
) -> ZhuConstraint {
    let (a, b, divisible) = match generator {
        FusionGenerator::K12 => (cc.h(r, s - 1), cc.h(r, s + 1), s % cc.q == 0),
        FusionGenerator::K21 => (cc.h(r - 1, s), cc.h(r + 1, s), r % cc.p == 0),
    };
    let case = if !divisible {
        ZhuCase::TwoSemisimple
    } else if cc.kappa(r, s) == 0 {
        ZhuCase::JordanBlock
    } else {
        ZhuCase::SingleEigenvalue
    };
    ZhuConstraint {
        generator,
        label: KacLabel::new(r, s),
        polynomial: vec![&a * &b, -(&a + &b), Rational::one()],
        roots: [a, b],
        case,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RigidityStatus {
    RigidSelfDual,
    NotRigid,
    Open,
}

/// Known rigidity of `K_{r,s}`.
pub fn rigidity_status(cc: &CentralCharge, r: i64, s: i64) -> RigidityStatus {
    let (p, q) = (cc.p, cc.q);
    if (1..=p).contains(&r) && (1..=q).contains(&s) {
        RigidityStatus::RigidSelfDual
    } else if (s == q + 1 && (1..p).contains(&r)) || (r == p + 1 && (1..q).contains(&s)) {
        RigidityStatus::NotRigid
    } else {
        RigidityStatus::Open
    }
}
