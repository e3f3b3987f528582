use astro_float::{BigFloat, Consts, RoundingMode};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::kactable::CentralCharge;

const RM: RoundingMode = RoundingMode::ToEven;

/// The pairing constant `R` of `K_{1,2}` and the intrinsic dimensions of `K_{1,2}`
/// and `K_{2,1}`, as binary floats of `precision` bits.
#[derive(Clone, Debug)]
pub struct RigidityConstants {
    pub precision: usize,
    pub r_pairing: BigFloat,
    pub d_k12: BigFloat,
    pub d_k21: BigFloat,
}

fn int(n: i64, prec: usize) -> BigFloat {
    BigFloat::from_i64(n, prec)
}

fn ratio(n: i64, d: i64, prec: usize) -> BigFloat {
    int(n, prec).div(&int(d, prec), prec, RM)
}

/// `cos(aπ/b)`.
fn cos_pi(a: i64, b: i64, prec: usize, consts: &mut Consts) -> BigFloat {
    // Exact zeros would otherwise come out as tiny residues.
    if a * 2 % b == 0 && (a * 2 / b) % 2 == 1 {
        return int(0, prec);
    }
    let work = prec + 64;
    let x = consts.pi(work, RM).mul(&ratio(a, b, work), work, RM);
    x.cos(work, RM, consts).add(&int(0, prec), prec, RM)
}

/// `Γ(k/2)` for a positive integer `k`, by `Γ(x + 1) = xΓ(x)` from `Γ(1/2) = √π`
/// or `Γ(1) = 1`.
pub fn gamma_half(k: i64, prec: usize, consts: &mut Consts) -> BigFloat {
    assert!(k >= 1);
    let (mut g, mut x2) = if k % 2 == 1 {
        (consts.pi(prec, RM).sqrt(prec, RM), 1)
    } else {
        (int(1, prec), 2)
    };
    while x2 < k {
        g = g.mul(&ratio(x2, 2, prec), prec, RM);
        x2 += 2;
    }
    g
}

pub fn rigidity_constants(cc: &CentralCharge, precision: usize) -> RigidityConstants {
    let (p, q) = (cc.p, cc.q);
    let prec = precision.max(64);
    let mut consts = Consts::new().expect("constant cache");
    let d_k12 = cos_pi(p, q, prec, &mut consts).mul(&int(-2, prec), prec, RM);
    let d_k21 = cos_pi(q, p, prec, &mut consts).mul(&int(-2, prec), prec, RM);
    let r_pairing = if q == 2 {
        // 4(1/p − 1)(p − 2)! / (Γ(p/2) Γ(3p/2 − 1))
        let fact = (1..=p - 2).fold(int(1, prec), |acc, j| acc.mul(&int(j, prec), prec, RM));
        let num = ratio(4 * (1 - p), p, prec).mul(&fact, prec, RM);
        let den = gamma_half(p, prec, &mut consts).mul(
            &gamma_half(3 * p - 2, prec, &mut consts),
            prec,
            RM,
        );
        num.div(&den, prec, RM)
    } else {
        ratio(2 * p - q, p, prec).div(&cos_pi(p, q, prec, &mut consts), prec, RM)
    };
    RigidityConstants {
        precision: prec,
        r_pairing,
        d_k12,
        d_k21,
    }
}

/// Whether `|a − b| ≤ 2^{−bits}`.
pub fn within(a: &BigFloat, b: &BigFloat, bits: i32) -> bool {
    let prec = a
        .mantissa_max_bit_len()
        .max(b.mantissa_max_bit_len())
        .unwrap_or(64);
    let diff = a.sub(b, prec, RM);
    diff.is_zero() || diff.exponent().is_some_and(|e| e <= -bits)
}

/// Decimal digits of `x`, enough for `precision` bits.
pub fn to_decimal(x: &BigFloat) -> String {
    if x.is_zero() {
        return "0.0".into();
    }
    x.to_string()
}

impl Serialize for RigidityConstants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RigidityConstants", 4)?;
        st.serialize_field("precision", &self.precision)?;
        st.serialize_field("R_pairing", &to_decimal(&self.r_pairing))?;
        st.serialize_field("d_K12", &to_decimal(&self.d_k12))?;
        st.serialize_field("d_K21", &to_decimal(&self.d_k21))?;
        st.end()
    }
}
