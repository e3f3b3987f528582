use proptest::prelude::*;
use virkac::exactnum::linalg::{kernel_bareiss, kernel_multimodular, kernel_rref, rank};
use virkac::exactnum::Rational;
use virkac::kactable::{central_charge, Case, KacLabel};
use virkac::verma::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec())
}

/// Rank of the Shapovalov form at level `n`, i.e. the dimension of the simple quotient.
fn gram_rank(module: &VermaModule, n: usize) -> usize {
    let basis = level_basis(n);
    let v = module.generator();
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|mu| {
            let word: Vec<i64> = mu.parts.iter().map(|&x| x as i64).collect();
            basis
                .iter()
                .map(|nu| {
                    module
                        .act_word(&word, &module.lower(nu, &v))
                        .coeff(&Partition::empty())
                })
                .collect()
        })
        .collect();
    rank(&rows, basis.len())
}

#[test]
fn level_basis_counts() {
    assert_eq!(level_basis(0), vec![Partition::empty()]);
    assert_eq!(level_basis(4).len(), 5);
    assert_eq!(level_basis(10).len(), 42);
    assert_eq!(
        level_basis(3),
        vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
    );
    let p = partition_numbers(12);
    for n in 0..=12 {
        assert_eq!(level_basis(n).len() as u64, p[n]);
    }
}

#[test]
fn action_examples() {
    let (c, h) = (q(7, 3), q(2, 5));
    let m = VermaModule::new(&c, &h);
    let v = m.generator();
    let w = m.act(1, &m.act(-1, &v));
    assert_eq!(w, v.scale(&(Rational::int(2) * &h)));
    let w = m.act(2, &m.act(-2, &v));
    assert_eq!(w, v.scale(&(Rational::int(4) * &h + &c / Rational::int(2))));
    let x = m
        .monomial(part(&[3, 1]))
        .add(&m.monomial(part(&[2, 1, 1])).scale(&q(-5, 2)));
    assert_eq!(m.act(0, &x), x.scale(&(&h + Rational::int(4))));
    assert!(m.act(5, &m.monomial(part(&[2, 1]))).is_zero());
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| Rational::new(n, d))
}

fn pbw_vector(level: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), level_basis(level).len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bracket_consistency(
        c in rational(),
        h in rational(),
        level in 0usize..=6,
        m in -4i64..=4,
        n in -4i64..=4,
        seed in any::<u64>(),
    ) {
        let module = VermaModule::new(&c, &h);
        let basis = IndexedBasis::new(level);
        let coeffs: Vec<Rational> = (0..basis.len())
            .map(|i| Rational::new(((seed >> (i % 60)) & 7) as i64 - 3, 1 + (i as i64 % 3)))
            .collect();
        let v = PBWVector::from_dense(&c, &h, &basis, &coeffs);
        prop_assume!(level as i64 - m - n >= 0 && level as i64 - n >= 0 && level as i64 - m >= 0);
        let lhs = module.act(m, &module.act(n, &v)).sub(&module.act(n, &module.act(m, &v)));
        let mut rhs = module.act(m + n, &v).scale(&Rational::int(m - n));
        if m == -n {
            rhs = rhs.add(&v.scale(&(&c * Rational::new(m * m * m - m, 12))));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bareiss_matches_field_kernel(
        rows in proptest::collection::vec(proptest::collection::vec(rational(), 6), 1..6),
    ) {
        let a = kernel_bareiss(&rows, 6);
        let b = kernel_rref(&rows, 6);
        prop_assert_eq!(&a, &b);
        for k in &a {
            for r in &rows {
                let dot: Rational = r.iter().zip(k).map(|(x, y)| x * y).sum();
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn multimodular_matches_bareiss(
        rows in proptest::collection::vec(proptest::collection::vec(rational(), 7), 1..7),
        e in 1u32..9,
        mix in proptest::collection::vec(rational(), 7),
    ) {
        // Large entries force several primes; the appended combination forces a kernel.
        let mut rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.pow(e)).collect())
            .collect();
        let combo: Vec<Rational> = (0..7)
            .map(|j| rows.iter().zip(&mix).map(|(r, m)| &r[j] * m).sum())
            .collect();
        rows.push(combo);
        prop_assert_eq!(kernel_multimodular(&rows, 7), kernel_bareiss(&rows, 7));
    }

    #[test]
    fn random_dense_roundtrip(level in 0usize..=5, v in pbw_vector(5)) {
        let basis = IndexedBasis::new(level);
        let v = &v[..basis.len()];
        let x = PBWVector::from_dense(&Rational::zero(), &Rational::zero(), &basis, v);
        prop_assert_eq!(x.to_dense(&basis), v.to_vec());
    }
}

#[test]
fn singular_vector_at_level_two() {
    for (p, qq) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        let cc = central_charge(p, qq).unwrap();
        let h = cc.h(1, 2);
        let sv = singular_vectors(&cc.c, &h, 2);
        assert_eq!(sv.len(), 1);
        let mut expected = PBWVector::monomial(&cc.c, &h, part(&[1, 1]));
        expected.add_term(part(&[2]), &-cc.t.recip().unwrap());
        assert_eq!(sv[0], expected);
    }
}

#[test]
fn singular_vector_in_vacuum_quotient() {
    let m = VermaModule::new(&Rational::zero(), &Rational::zero());
    let l1 = m.monomial(part(&[1]));
    let sv = singular_vectors_in_quotient(&m, &[l1], 2);
    assert_eq!(sv, vec![m.monomial(part(&[2]))]);
}

#[test]
fn generic_weight_has_no_singular_vectors() {
    for n in 1..=6 {
        assert!(singular_vectors(&q(1, 2), &q(1, 3), n).is_empty());
    }
}

#[test]
fn singular_vectors_are_annihilated() {
    let cc = central_charge(2, 5).unwrap();
    let h = cc.h(1, 3);
    let m = VermaModule::new(&cc.c, &h);
    let sv = singular_vectors_in(&m, 3);
    assert_eq!(sv.len(), 1);
    for k in 1..=3 {
        assert!(m.act(k, &sv[0]).is_zero());
    }
    assert!(sv[0].coeff(&Partition::ones(3)).is_one());
}

#[test]
fn diagram_examples() {
    let cc = central_charge(2, 3).unwrap();
    let d = embedding_diagram(&cc, KacLabel::new(1, 1), 3);
    assert_eq!(d.case, Some(Case::Bulk));
    assert_eq!(d.nodes[0].label, Some(KacLabel::new(1, 2)));
    let weights: Vec<Rational> = d.nodes.iter().map(|n| n.weight.clone()).collect();
    assert!(weights.contains(&Rational::int(2)) && weights.contains(&Rational::int(5)));
    assert_eq!(d.levels(), vec![0, 2, 1, 5, 7, 15, 12]);
    assert_eq!(d.arrows.len(), 2 + 4 + 4);

    let d = embedding_diagram(&cc, KacLabel::new(2, 3), 2);
    assert_eq!(d.case, Some(Case::Corner));
    let labels: Vec<KacLabel> = d.nodes.iter().map(|n| n.label.unwrap()).collect();
    assert_eq!(
        labels,
        vec![
            KacLabel::new(2, 3),
            KacLabel::new(2, 9),
            KacLabel::new(2, 15)
        ]
    );
    assert_eq!(d.arrows, vec![(1, 0), (2, 1)]);

    let d = embedding_diagram(&cc, KacLabel::new(2, 1), 2);
    assert_eq!(d.case, Some(Case::BoundaryS));
    assert_eq!(d.levels(), vec![0, 2, 10]);

    let d = embedding_diagram_for_weight(&cc, &q(1, 7), 4);
    assert_eq!(d.case, None);
    assert_eq!(d.nodes.len(), 1);
}

#[test]
fn diagram_weights_increase_along_arrows() {
    for (p, qq) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        let cc = central_charge(p, qq).unwrap();
        for r in 1..=p {
            for s in 1..=3 * qq {
                let d = embedding_diagram(&cc, KacLabel::new(r, s), 6);
                for &(a, b) in &d.arrows {
                    assert!(d.nodes[a].weight > d.nodes[b].weight);
                }
            }
        }
    }
}

#[test]
fn character_examples() {
    let cc = central_charge(2, 3).unwrap();
    let ch = characters(&cc, KacLabel::new(1, 1), 5);
    assert_eq!(ch.verma, vec![1, 1, 2, 3, 5, 7]);
    assert_eq!(ch.kac_quotient, vec![1, 0, 1, 1, 2, 2]);
    assert_eq!(ch.simple, vec![1, 0, 0, 0, 0, 0]);
}

#[test]
fn simple_characters_match_shapovalov_rank() {
    for (p, qq) in [(2, 3), (3, 4)] {
        let cc = central_charge(p, qq).unwrap();
        for (r, s) in [
            (1, 1),
            (1, 2),
            (2, 1),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 5),
            (p, qq),
        ] {
            let ch = simple_character(&cc, KacLabel::new(r, s), 7);
            let m = VermaModule::new(&cc.c, &cc.h(r, s));
            for n in 0..=7 {
                assert_eq!(
                    ch[n] as usize,
                    gram_rank(&m, n),
                    "({p},{qq}) label ({r},{s}) level {n}"
                );
            }
        }
    }
}

#[test]
fn cofinite_dimension_examples() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(c1_cofinite_dimension(&cc.c, &cc.h(1, 2), 2, 6), Ok(2));
    assert_eq!(c1_cofinite_dimension(&cc.c, &cc.h(2, 3), 6, 8), Ok(6));
    assert_eq!(c1_cofinite_dimension(&cc.c, &cc.h(1, 1), 1, 4), Ok(1));
    assert!(c1_cofinite_dimension(&q(1, 2), &q(1, 3), 2, 4).is_err());
}

#[test]
fn multimodular_survives_an_unlucky_prime() {
    // 2^31 − 1 is the first prime tried and divides the leading entry.
    let p = Rational::int(2_147_483_647);
    let rows = vec![
        vec![p.clone(), Rational::zero(), Rational::one()],
        vec![Rational::zero(), Rational::one(), Rational::zero()],
    ];
    let k = kernel_multimodular(&rows, 3);
    assert_eq!(k, kernel_bareiss(&rows, 3));
    assert_eq!(
        k,
        vec![vec![-p.recip().unwrap(), Rational::zero(), Rational::one()]]
    );
}
