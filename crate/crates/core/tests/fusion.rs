use proptest::prelude::*;
use virkac::exactnum::Rational;
use virkac::fusion::*;
use virkac::kactable::{central_charge, CentralCharge, KacLabel};

fn cc(p: i64, q: i64) -> CentralCharge {
    central_charge(p, q).unwrap()
}

fn class_of(cc: &CentralCharge, labels: &[(i64, i64)]) -> GrothendieckClass {
    let mut c = GrothendieckClass::zero();
    for &(r, s) in labels {
        c.insert(SimpleLabel::new(cc, r, s), 1);
    }
    c
}

/// `h_{r,s} = ((rq − sp)² − (p − q)²)/(4pq)`.
fn h(p: i64, q: i64, r: i64, s: i64) -> Rational {
    Rational::new((r * q - s * p).pow(2) - (p - q).pow(2), 4 * p * q)
}

#[test]
fn kac_class_examples() {
    let c = cc(2, 3);
    assert_eq!(kac_class(&c, 1, 1), class_of(&c, &[(1, 1), (1, 5)]));
    assert!(kac_class(&c, 0, 4).is_zero());
    assert!(kac_class(&c, 3, 0).is_zero());
    // Bulk diagram with m = n = 1, r = s = 1.
    let k34 = kac_class(&c, 3, 4);
    assert_eq!(k34.length(), 6);
    assert_eq!(
        k34,
        class_of(&c, &[(1, 1), (1, 5), (1, 7), (1, 11), (1, 4), (1, 8)])
    );
}

#[test]
fn kac_class_lengths() {
    for (p, q) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        let c = cc(p, q);
        for big_r in 1..=4 * p {
            for big_s in 1..=4 * q {
                let (m, r) = ((big_r - 1) / p, (big_r - 1) % p + 1);
                let (n, s) = ((big_s - 1) / q, (big_s - 1) % q + 1);
                let expected = match (r == p, s == q) {
                    (false, false) => 4 * m.min(n) + 2,
                    (true, false) => {
                        let m = m + 1;
                        if m <= n {
                            2 * m
                        } else {
                            2 * n + 1
                        }
                    }
                    (false, true) => {
                        let n = n + 1;
                        if m < n {
                            2 * m + 1
                        } else {
                            2 * n
                        }
                    }
                    (true, true) => (m + 1).min(n + 1),
                };
                assert_eq!(
                    kac_class(&c, big_r, big_s).length(),
                    expected as u64,
                    "({p},{q}) K_({big_r},{big_s})"
                );
            }
        }
    }
}

#[test]
fn corner_kac_modules_agree() {
    for (p, q) in [(2, 3), (3, 4), (2, 5)] {
        let c = cc(p, q);
        for m in 1..=4 {
            for n in 1..=4 {
                assert_eq!(kac_class(&c, m * p, n * q), kac_class(&c, n * p, m * q));
            }
        }
    }
}

#[test]
fn k12_kac_examples() {
    let c = cc(2, 3);
    let o = fuse_k12_kac(&c, 1, 1);
    assert_eq!(o.class, kac_class(&c, 1, 2));
    assert!(o.splits);
    assert!(!o.logarithmic);
    assert_eq!(o.sequence.sub, None);
    assert_eq!(o.sequence.quotient, Some(KacLabel::new(1, 2)));

    let o = fuse_k12_kac(&c, 1, 3);
    assert!(!o.splits);
    assert!(o.logarithmic);
    assert_eq!(o.indecomposable, Some(true));
    assert_eq!(o.sequence.sub, Some(KacLabel::new(1, 2)));
    assert_eq!(o.sequence.quotient, Some(KacLabel::new(1, 4)));
    assert_eq!(o.class, kac_class(&c, 1, 2).add(&kac_class(&c, 1, 4)));

    let o = fuse_k12_kac(&c, 1, 2);
    assert!(o.splits);
    assert_eq!(o.indecomposable, Some(false));

    // q | s with r > p: non-split, indecomposability unknown.
    let o = fuse_k12_kac(&c, 3, 3);
    assert!(!o.splits);
    assert_eq!(o.indecomposable, None);
}

#[test]
fn k21_kac_examples() {
    let c = cc(2, 3);
    let o = fuse_k21_kac(&c, 2, 3);
    assert_eq!(o.generator, FusionGenerator::K21);
    assert!(!o.splits);
    assert!(o.logarithmic);
    assert_eq!(o.sequence.sub, Some(KacLabel::new(1, 3)));
    assert_eq!(o.sequence.quotient, Some(KacLabel::new(3, 3)));
    assert_eq!(o.class, kac_class(&c, 1, 3).add(&kac_class(&c, 3, 3)));
    assert_eq!(o.indecomposable, Some(true));

    let o = fuse_k21_kac(&c, 1, 4);
    assert_eq!(o.class, kac_class(&c, 2, 4));
    assert!(o.splits);

    let o = fuse_k21_kac(&c, 2, 4);
    assert!(!o.splits);
    assert_eq!(o.indecomposable, None);

    let o = fuse_k21_kac(&c, 3, 2);
    assert!(o.splits);
    assert_eq!(o.indecomposable, Some(false));
}

#[test]
fn kr1_k1s_examples() {
    let c = cc(2, 3);
    for s in 1..6 {
        let x = fuse_kr1_k1s(&c, 1, s);
        assert!(x.isomorphism);
        assert_eq!(x.class, kac_class(&c, 1, s));
    }
    assert_eq!(fuse_kr1_k1s(&c, 2, 5).class, kac_class(&c, 2, 5));
    let x = fuse_kr1_k1s(&c, 3, 4);
    assert_eq!(x.class.length(), 6);
    assert_eq!(x.class, kac_class(&c, 3, 4));
}

#[test]
fn kr1_k1s_by_congruence_extraction() {
    // K_{r,j+1} is the summand of K_{1,2} ⊠ K_{r,j} with weights ≡ h_{r,j+1} when q ∤ j.
    for (p, q) in [(2, 3), (3, 4), (2, 5)] {
        let c = cc(p, q);
        for r in 1..=2 * p {
            let mut x = fuse_kr1_k1s(&c, r, 1).class;
            for j in 1..=2 * q {
                if j % q == 0 {
                    x = fuse_kr1_k1s(&c, r, j + 1).class;
                    continue;
                }
                let fused = fuse_class(&c, FusionGenerator::K12, &x);
                x = fused.congruent_part(&c, &c.h(r, j + 1));
                assert_eq!(x, fuse_kr1_k1s(&c, r, j + 1).class, "({p},{q}) r={r} j={j}");
            }
        }
    }
}

#[test]
fn k12_simple_examples() {
    let c = cc(2, 3);
    let o = fuse_k12_simple(&c, SimpleLabel::new(&c, 1, 1));
    assert_eq!(o.class, class_of(&c, &[(1, 2)]));
    assert!(o.splits);

    let o = fuse_k12_simple(&c, SimpleLabel::new(&c, 1, 2));
    assert_eq!(o.class, class_of(&c, &[(1, 1)]));

    let o = fuse_k12_simple(&c, SimpleLabel::new(&c, 1, 3));
    assert!(o.logarithmic);
    assert!(!o.splits);
    assert_eq!(o.indecomposable, Some(true));
    assert_eq!(o.class, kac_class(&c, 1, 2).add(&kac_class(&c, 1, 4)));

    // 1 ≤ s ≤ q − 2 with two non-zero summands at (3, 5).
    let c = cc(3, 5);
    let o = fuse_k12_simple(&c, SimpleLabel::new(&c, 1, 7));
    assert_eq!(o.class, class_of(&c, &[(1, 6), (1, 8)]));
    assert_eq!(o.indecomposable, Some(false));
    // s = q − 1 keeps only the lower summand.
    let o = fuse_k12_simple(&c, SimpleLabel::new(&c, 1, 9));
    assert_eq!(o.class, class_of(&c, &[(1, 8)]));
}

#[test]
fn simple_fusion_is_exact_on_kac_classes() {
    // K_{1,2} ⊠ • is exact, so fusing the factors of K_{r,s} one by one gives the same
    // class as fusing the Kac module.
    for (p, q) in [(2, 3), (3, 4), (2, 5)] {
        let c = cc(p, q);
        for r in 1..=5 {
            for s in 1..=6 {
                for g in [FusionGenerator::K12, FusionGenerator::K21] {
                    let via_simples = fuse_class(&c, g, &kac_class(&c, r, s));
                    assert_eq!(
                        via_simples,
                        fuse_kac(&c, g, r, s).class,
                        "({p},{q}) {g:?} ({r},{s})"
                    );
                }
            }
        }
    }
}

#[test]
fn zhu_examples() {
    let c = cc(2, 3);
    let z = zhu_constraint(&c, FusionGenerator::K12, 1, 1);
    assert_eq!(z.case, ZhuCase::TwoSemisimple);
    assert_eq!(
        z.polynomial,
        vec![Rational::zero(), Rational::new(-1, 3), Rational::one()]
    );
    assert!(z.has_root(&h(2, 3, 1, 0)) && z.has_root(&h(2, 3, 1, 2)));

    let z = zhu_constraint(&c, FusionGenerator::K12, 2, 3);
    assert_eq!(z.case, ZhuCase::JordanBlock);
    let e = Rational::new(1, 8);
    assert_eq!(z.polynomial, vec![&e * &e, -(&e + &e), Rational::one()]);

    let z = zhu_constraint(&c, FusionGenerator::K12, 1, 3);
    assert_eq!(z.case, ZhuCase::SingleEigenvalue);
    assert_eq!(z.roots, [Rational::zero(), Rational::one()]);

    let z = zhu_constraint(&c, FusionGenerator::K21, 2, 1);
    assert_eq!(z.case, ZhuCase::SingleEigenvalue);
    assert_eq!(z.roots, [h(2, 3, 1, 1), h(2, 3, 3, 1)]);
    let z = zhu_constraint(&c, FusionGenerator::K21, 1, 2);
    assert_eq!(z.case, ZhuCase::TwoSemisimple);
    let z = zhu_constraint(&c, FusionGenerator::K21, 2, 3);
    assert_eq!(z.case, ZhuCase::JordanBlock);
}

#[test]
fn zhu_cases_follow_the_roots() {
    for (p, q) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        let c = cc(p, q);
        for r in 1..=2 * p + 1 {
            for s in 1..=2 * q + 1 {
                for g in [FusionGenerator::K12, FusionGenerator::K21] {
                    let z = zhu_constraint(&c, g, r, s);
                    let d = &z.roots[1] - &z.roots[0];
                    let case = if d.is_zero() {
                        ZhuCase::JordanBlock
                    } else if d.is_integer() {
                        ZhuCase::SingleEigenvalue
                    } else {
                        ZhuCase::TwoSemisimple
                    };
                    assert_eq!(z.case, case, "({p},{q}) {g:?} ({r},{s})");
                }
            }
        }
    }
}

#[test]
fn rigidity_examples() {
    let c = cc(2, 3);
    assert_eq!(rigidity_status(&c, 2, 3), RigidityStatus::RigidSelfDual);
    assert_eq!(rigidity_status(&c, 1, 1), RigidityStatus::RigidSelfDual);
    assert_eq!(rigidity_status(&c, 1, 4), RigidityStatus::NotRigid);
    assert_eq!(rigidity_status(&c, 3, 1), RigidityStatus::NotRigid);
    assert_eq!(rigidity_status(&c, 3, 2), RigidityStatus::NotRigid);
    assert_eq!(rigidity_status(&c, 2, 4), RigidityStatus::Open);
    assert_eq!(rigidity_status(&c, 3, 3), RigidityStatus::Open);
    assert_eq!(rigidity_status(&c, 4, 7), RigidityStatus::Open);
}

#[test]
fn consistency_passes() {
    for (p, q, rmax, smax) in [(2, 3, 6, 6), (3, 4, 5, 5), (2, 5, 5, 6)] {
        let report = check_grothendieck_consistency(&cc(p, q), rmax, smax);
        assert!(report.passed, "({p},{q}): {:?}", report.first_failure);
        assert!(
            report.checks.iter().all(|c| c.cases > 0),
            "{:?}",
            report.checks
        );
    }
}

#[test]
fn consistency_detects_a_mutated_table() {
    let c = cc(2, 3);
    let mutated = |r: i64, s: i64| {
        let k = kac_class(&c, r, s);
        if (r, s) != (1, 4) {
            return k;
        }
        // Swap one factor for a different simple module.
        let (first, _) = k.iter().next().unwrap();
        let mut out = GrothendieckClass::zero();
        for (l, m) in k.iter() {
            out.insert(
                if l == first {
                    SimpleLabel::new(&c, 1, 13)
                } else {
                    l
                },
                m,
            );
        }
        out
    };
    let report = check_grothendieck_consistency_with(&c, 4, 4, 8, &mutated);
    assert!(!report.passed);
    let msg = report.first_failure.unwrap();
    assert!(msg.starts_with("additivity"), "{msg}");
}

#[test]
fn class_serializes_as_entries() {
    let c = cc(2, 3);
    let v = serde_json::to_value(kac_class(&c, 1, 1)).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"r": 1, "s": 2, "mult": 1}, {"r": 1, "s": 5, "mult": 1}])
    );
    let o = serde_json::to_value(fuse_k12_kac(&c, 1, 3)).unwrap();
    assert_eq!(o["splits"], false);
    assert_eq!(o["indecomposable"], true);
    assert_eq!(o["sequence"]["sub"], serde_json::json!({"r": 1, "s": 2}));
}

fn params() -> impl Strategy<Value = (i64, i64)> {
    prop_oneof![
        Just((2, 3)),
        Just((3, 4)),
        Just((2, 5)),
        Just((3, 5)),
        Just((4, 5))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kac_character_matches_its_factors((p, q) in params(), r in 1i64..10, s in 1i64..10) {
        let c = cc(p, q);
        let cutoff = c.h(r, s) + Rational::int(8);
        prop_assert_eq!(kac_character(&c, r, s, &cutoff), kac_class(&c, r, s).character(&c, &cutoff));
    }

    #[test]
    fn class_addition_is_a_commutative_monoid(
        (p, q) in params(),
        a in (1i64..8, 1i64..8),
        b in (1i64..8, 1i64..8),
        d in (1i64..8, 1i64..8),
    ) {
        let c = cc(p, q);
        let (x, y, z) = (kac_class(&c, a.0, a.1), kac_class(&c, b.0, b.1), kac_class(&c, d.0, d.1));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.add(&GrothendieckClass::zero()), x.clone());
        prop_assert_eq!(x.add(&y).length(), x.length() + y.length());
        prop_assert!(x.add(&y).contains(&x));
    }

    #[test]
    fn k21_mirrors_k12((p, q) in params(), r in 1i64..9, s in 1i64..9) {
        let c = cc(p, q);
        let m = cc(q, p);
        let a = fuse_k21_kac(&c, r, s);
        let b = fuse_k12_kac(&m, s, r);
        prop_assert_eq!(a.splits, b.splits);
        prop_assert_eq!(a.indecomposable, b.indecomposable);
        prop_assert_eq!(a.class.length(), b.class.length());
        for (l, mult) in a.class.iter() {
            let x = l.label();
            prop_assert_eq!(b.class.mult(SimpleLabel::new(&m, x.s, x.r)), mult);
        }
    }
}
