use proptest::prelude::*;
use virkac::exactnum::{QuadExt, Rational};
use virkac::kactable::{central_charge, CentralCharge, KacLabel};
use virkac::Error;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn l(r: i64, s: i64) -> KacLabel {
    KacLabel::new(r, s)
}

const PQ: [(i64, i64); 6] = [(2, 3), (3, 2), (3, 4), (2, 5), (3, 5), (4, 7)];

fn half_rational_part(x: &QuadExt, cc: &CentralCharge) -> Rational {
    (x * &(x - &cc.bg)).rational_part().unwrap() / Rational::int(2)
}

#[test]
fn central_charge_examples() {
    assert_eq!(central_charge(2, 3).unwrap().c, Rational::zero());
    assert_eq!(central_charge(2, 5).unwrap().c, q(-22, 5));
    assert_eq!(central_charge(3, 4).unwrap().c, q(1, 2));
    assert!(matches!(
        central_charge(2, 4),
        Err(Error::InvalidParameters { .. })
    ));
    assert!(matches!(
        central_charge(1, 3),
        Err(Error::InvalidParameters { .. })
    ));
}

#[test]
fn central_charge_closed_forms() {
    for (p, qq) in PQ {
        let cc = central_charge(p, qq).unwrap();
        assert_eq!(cc.c, Rational::one() - q(6 * (p - qq) * (p - qq), p * qq));
        assert_eq!(cc.c, central_charge(qq, p).unwrap().c);
        let q2 = (&cc.bg * &cc.bg).rational_part().unwrap();
        assert_eq!(Rational::one() - Rational::int(3) * q2, cc.c);
    }
}

#[test]
fn weight_examples() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(cc.h(1, 1), Rational::zero());
    assert_eq!(cc.h(2, 1), q(5, 8));
    assert_eq!(cc.h(2, 2), q(1, 8));
    assert_eq!(cc.h(2, 4), q(1, 8));
}

#[test]
fn heisenberg_weight_examples() {
    let cc = central_charge(2, 3).unwrap();
    assert!(cc.lambda(1, 1).is_zero());
    assert_eq!(half_rational_part(&cc.lambda(1, 2), &cc), Rational::zero());
}

#[test]
fn label_normalization_examples() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(cc.normalize_label(1, 2), (l(1, 2), vec![l(1, 1), l(1, 2)]));
    assert_eq!(cc.normalize_label(1, 1).0, l(1, 2));
    for (p, qq) in PQ {
        let cc = central_charge(p, qq).unwrap();
        assert_eq!(cc.normalize_label(p, qq), (l(p, qq), vec![l(p, qq)]));
    }
}

#[test]
fn table_identities() {
    for (p, qq) in PQ {
        let cc = central_charge(p, qq).unwrap();
        for r in 1..=12 {
            for s in 1..=12 {
                let h = cc.h(r, s);
                assert_eq!(cc.h(r + p, s + qq), h);
                assert_eq!(cc.h(-r, -s), h);
                assert_eq!(half_rational_part(&cc.lambda(r, s), &cc), h);
                assert_eq!(cc.lambda(r + p, s + qq), cc.lambda(r, s));
                assert_eq!(
                    cc.h(r, s + 1) - cc.h(r, s - 1),
                    Rational::int(-r) + q(p * s, qq)
                );
                let rt_s = &cc.t * Rational::int(r) - Rational::int(s);
                let t1 = &cc.t - Rational::one();
                assert_eq!(Rational::int(4) * &cc.t * &h + &t1 * &t1, &rt_s * &rt_s);
            }
        }
    }
}

#[test]
fn normalization_is_consistent() {
    for (p, qq) in PQ {
        let cc = central_charge(p, qq).unwrap();
        for r in 1..=12 {
            for s in 1..=12 {
                let h = cc.h(r, s);
                let (canon, ids) = cc.normalize_label(r, s);
                assert!(
                    cc.is_canonical(canon.r, canon.s),
                    "({p},{qq}) ({r},{s}) -> {canon}"
                );
                assert_eq!(cc.h(canon.r, canon.s), h);
                assert!(ids.contains(&canon));
                for x in &ids {
                    assert_eq!(cc.h(x.r, x.s), h);
                    assert!((1..=p).contains(&x.r) && x.s >= 1);
                }
                let m = cc.normalize_label_mirror(r, s);
                assert!((1..=qq).contains(&m.s) && qq * m.r >= p * m.s);
                assert_eq!(cc.h(m.r, m.s), h);
                assert_eq!(cc.kac_label_of(&h), Some(canon));
            }
        }
        // Every label with 1 ≤ r ≤ p and the same weight is listed.
        let (_, ids) = cc.normalize_label(1, 1);
        for r in 1..=p {
            for s in 1..=3 * qq {
                assert_eq!(
                    ids.contains(&l(r, s)),
                    cc.h(r, s) == cc.h(1, 1),
                    "({p},{qq}) ({r},{s})"
                );
            }
        }
    }
}

#[test]
fn weights_outside_the_table_have_no_label() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(cc.kac_label_of(&q(1, 5)), None);
    assert_eq!(cc.kac_label_of(&q(-1, 24)), Some(l(2, 3)));
    assert_eq!(cc.kac_label_of(&q(1, 3)), Some(l(1, 3)));
}

proptest! {
    #[test]
    fn lambda_reflection(r in -30i64..30, s in -30i64..30, i in 0usize..6) {
        let (p, qq) = PQ[i];
        let cc = central_charge(p, qq).unwrap();
        prop_assert_eq!(cc.lambda(-r, -s), &cc.bg - &cc.lambda(r, s));
    }
}
