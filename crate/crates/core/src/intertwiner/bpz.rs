use crate::error::{Error, Result};
use crate::exactnum::{Rational, TruncatedSeries};

/// Coefficients of `₂F₁(a, b; c; u)` through order `n`.
pub fn hypergeometric_series(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
) -> TruncatedSeries {
    let mut coeffs = vec![Rational::one()];
    for k in 0..n {
        let kk = Rational::int(k as i64);
        let num = (a + &kk) * (b + &kk);
        let den = (c + &kk) * (&kk + Rational::one());
        let next = &coeffs[k] * &num / den;
        coeffs.push(next);
    }
    TruncatedSeries::new("u", n, coeffs)
}

/// For `q = 2` and odd `p ≥ 3`, builds `f(u) = ₂F₁(p/2, 3p/2 − 1; p; u)` through order `n`
/// and returns `u(1−u)f'' + p(1−2u)f' + (p/2)(1 − 3p/2)f` through order `n − 2`.
pub fn verify_bpz_hypergeometric(p: i64, n: usize) -> Result<TruncatedSeries> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidP(p));
    }
    if n < 2 {
        return Err(Error::LevelTooSmall {
            given: n,
            needed: 2,
        });
    }
    let a = Rational::new(p, 2);
    let b = Rational::new(3 * p - 2, 2);
    let c = Rational::int(p);
    let f = hypergeometric_series(&a, &b, &c, n);
    let u = TruncatedSeries::variable("u", n);
    let one = TruncatedSeries::constant("u", n, Rational::one());
    let one_minus_u = one.sub(&u)?;
    let one_minus_2u = one.sub(&u.scale(&Rational::int(2)))?;
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let t2 = u.mul(&one_minus_u)?.mul(&d2)?;
    let t1 = one_minus_2u.scale(&c).mul(&d1)?;
    let t0 = f.scale(&(&a * (Rational::one() - Rational::new(3 * p, 2))));
    t2.add(&t1)?.add(&t0).map(|s| s.truncate(n - 2))
}
