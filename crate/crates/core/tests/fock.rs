use proptest::prelude::*;
use virkac::exactnum::{QuadExt, Rational};
use virkac::fock::*;
use virkac::kactable::{central_charge, Case, CentralCharge, KacLabel};
use virkac::verma::{kac_quotient_character, partition_numbers, simple_character, IndexedBasis};

fn qx(cc: &CentralCharge, a: Rational) -> QuadExt {
    QuadExt::rational(a, cc.d())
}

/// `Σ_{factors} char L` through level `n`, shifted by each factor's weight.
fn factor_character_sum(
    cc: &CentralCharge,
    h0: &Rational,
    factors: &[KacLabel],
    n: usize,
) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    for f in factors {
        let shift = (cc.h(f.r, f.s) - h0).to_i64().unwrap();
        assert!(shift >= 0);
        if shift as usize > n {
            continue;
        }
        let ch = simple_character(cc, *f, n - shift as usize);
        for (k, x) in ch.iter().enumerate() {
            out[k + shift as usize] += x;
        }
    }
    out
}

#[test]
fn heisenberg_examples() {
    let cc = central_charge(2, 3).unwrap();
    let lam = cc.lambda(1, 2);
    let v = FockVector::generator(&lam);
    assert_eq!(heis_act(1, &heis_act(-1, &v)), v);
    let x = fock_monomial(&lam, &[2, 1]).add(&fock_monomial(&lam, &[1, 1, 1]));
    assert_eq!(heis_act(0, &x), x.scale(&lam));
    assert!(heis_act(2, &fock_monomial(&lam, &[1])).is_zero());
    assert_eq!(
        heis_act(2, &fock_monomial(&lam, &[2, 2, 1])),
        fock_monomial(&lam, &[2, 1]).scale(&qx(&cc, Rational::int(4)))
    );
}

#[test]
fn virasoro_on_fock_examples() {
    let cc = central_charge(2, 3).unwrap();
    for (r, s) in [(1, 1), (1, 2), (2, 1), (3, 5)] {
        let lam = cc.lambda(r, s);
        let m = FockModule::new(&cc, &lam);
        let v = m.generator();
        let w = &lam * &(&lam - &cc.bg);
        assert_eq!(m.vir(0, &v), v.scale(&w.scale(&Rational::new(1, 2))));
        assert_eq!(m.lowest_weight(), cc.h(r, s));
        let a1 = m.monomial(virkac::verma::Partition::new(vec![1]));
        assert_eq!(m.vir(1, &a1), v.scale(&(&lam - &cc.bg)));
    }
}

fn fock_vector(cc: &CentralCharge, lam: &QuadExt, level: usize, seed: u64) -> FockVector {
    let basis = IndexedBasis::new(level);
    let coeffs: Vec<QuadExt> = (0..basis.len())
        .map(|i| {
            let a = ((seed >> (i % 50)) & 7) as i64 - 3;
            let b = ((seed >> ((i + 7) % 50)) & 3) as i64 - 1;
            QuadExt::new(Rational::int(a), Rational::new(b, 3), cc.d())
        })
        .collect();
    FockVector::from_dense(lam, &basis, &coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fock_virasoro_brackets(
        pq in prop_oneof![Just((2i64, 3i64)), Just((3, 4)), Just((2, 5))],
        r in -3i64..6,
        s in -3i64..6,
        level in 0usize..=5,
        m in -3i64..=3,
        n in -3i64..=3,
        seed in any::<u64>(),
    ) {
        prop_assume!(level as i64 - m >= 0 && level as i64 - n >= 0 && level as i64 - m - n >= 0);
        let cc = central_charge(pq.0, pq.1).unwrap();
        let lam = cc.lambda(r, s);
        let module = FockModule::new(&cc, &lam);
        let v = fock_vector(&cc, &lam, level, seed);
        let c = Rational::one() - Rational::int(3) * (&cc.bg * &cc.bg).rational_part().unwrap();
        prop_assert_eq!(&c, &cc.c);
        let lhs = module.vir(m, &module.vir(n, &v)).sub(&module.vir(n, &module.vir(m, &v)));
        let mut rhs = module.vir(m + n, &v).scale(&qx(&cc, Rational::int(m - n)));
        if m == -n {
            rhs = rhs.add(&v.scale(&qx(&cc, &c * Rational::new(m * m * m - m, 12))));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn heisenberg_brackets(
        level in 0usize..=5,
        m in -4i64..=4,
        n in -4i64..=4,
        seed in any::<u64>(),
    ) {
        prop_assume!(level as i64 - m >= 0 && level as i64 - n >= 0 && level as i64 - m - n >= 0);
        let cc = central_charge(3, 4).unwrap();
        let lam = cc.lambda(2, 3);
        let v = fock_vector(&cc, &lam, level, seed);
        let lhs = heis_act(m, &heis_act(n, &v)).sub(&heis_act(n, &heis_act(m, &v)));
        if m == -n {
            prop_assert_eq!(lhs, v.scale(&qx(&cc, Rational::int(m))));
        } else {
            prop_assert!(lhs.is_zero());
        }
    }
}

#[test]
fn kac_basis_examples() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(kac_basis(&cc, 1, 1, 5).dims(), vec![1, 0, 1, 1, 2, 2]);
    assert_eq!(kac_basis(&cc, 1, 2, 2).dims()[2], 1);
    for (r, s) in [(1, 1), (2, 3), (4, 5)] {
        assert_eq!(kac_basis(&cc, r, s, 0).dims(), vec![1]);
    }
}

#[test]
fn kac_dims_match_verma_quotient() {
    for (p, q) in [(2, 3), (3, 4)] {
        let cc = central_charge(p, q).unwrap();
        for r in 1..=4 {
            for s in 1..=4 {
                if r > p && s > q {
                    continue;
                }
                let dims = kac_basis(&cc, r, s, 6).dims();
                let expected: Vec<usize> = kac_quotient_character(r, s, 6)
                    .iter()
                    .map(|&x| x as usize)
                    .collect();
                assert_eq!(dims, expected, "({p},{q}) K_({r},{s})");
            }
        }
    }
}

#[test]
fn kac_dims_match_structure_characters() {
    for (p, q) in [(2, 3), (3, 4)] {
        let cc = central_charge(p, q).unwrap();
        for r in 1..=5 {
            for s in 1..=5 {
                let st = kac_structure(&cc, r, s);
                let dims: Vec<u64> = kac_basis(&cc, r, s, 6)
                    .dims()
                    .iter()
                    .map(|&x| x as u64)
                    .collect();
                let h0 = cc.h(r, s);
                assert_eq!(
                    factor_character_sum(&cc, &h0, &st.factors, 6),
                    dims,
                    "({p},{q}) K_({r},{s})"
                );
            }
        }
    }
}

#[test]
fn kac_filtration_is_increasing() {
    let cc = central_charge(2, 3).unwrap();
    for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
        let small = kac_basis(&cc, r, s, 7);
        let big = kac_basis(&cc, r + 2, s + 3, 7);
        assert_eq!(small.lambda, big.lambda);
        let mut strict = false;
        for n in 0..=7 {
            for v in small.level(n) {
                assert!(big.contains(&v));
            }
            strict |= big.dims()[n] > small.dims()[n];
        }
        assert!(strict);
    }
}

#[test]
fn structure_lengths() {
    let cc = central_charge(2, 3).unwrap();
    assert_eq!(kac_structure(&cc, 3, 4).length, 6);
    let k = kac_structure(&cc, 2, 3);
    assert_eq!(
        (k.length, k.factors.clone()),
        (1, vec![KacLabel::new(2, 3)])
    );
    assert_eq!(kac_structure(&cc, 1, 3).length, 1);
    let k11 = kac_structure(&cc, 1, 1);
    assert_eq!(k11.factors, vec![KacLabel::new(1, 2), KacLabel::new(1, 5)]);
    for (p, q) in [(2, 3), (3, 4), (3, 5)] {
        let cc = central_charge(p, q).unwrap();
        for m in 0..=3 {
            for n in 0..=3 {
                for r in 1..p {
                    for s in 1..q {
                        let k = kac_structure(&cc, m * p + r, n * q + s);
                        assert_eq!(k.length as i64, 4 * m.min(n) + 2);
                        assert_eq!(k.case, Case::Bulk);
                        if m >= 1 {
                            let k = kac_structure(&cc, m * p, n * q + s);
                            let len = if m <= n { 2 * m } else { 2 * n + 1 };
                            assert_eq!(k.length as i64, len);
                        }
                    }
                    if n >= 1 {
                        let k = kac_structure(&cc, m * p + r, n * q);
                        let len = if m < n { 2 * m + 1 } else { 2 * n };
                        assert_eq!(k.length as i64, len);
                    }
                }
                if m >= 1 && n >= 1 {
                    let k = kac_structure(&cc, m * p, n * q);
                    assert_eq!(k.length as i64, m.min(n));
                    assert_eq!(k.factors, kac_structure(&cc, n * p, m * q).factors);
                }
            }
        }
    }
}

#[test]
fn feigin_fuchs_characters_are_partition_numbers() {
    for (p, q) in [(2, 3), (3, 4)] {
        let cc = central_charge(p, q).unwrap();
        let pn: Vec<u64> = partition_numbers(10);
        for r in 1..=6 {
            for s in 1..=6 {
                let st = ff_structure(&cc, r, s, 10);
                let h0 = cc.h(r, s);
                assert_eq!(
                    factor_character_sum(&cc, &h0, &st.factors, 10),
                    pn,
                    "({p},{q}) F_({r},{s})"
                );
            }
        }
    }
}

#[test]
fn contragredient_reverses_arrows() {
    let cc = central_charge(2, 3).unwrap();
    for (r, s) in [(1, 2), (1, 5), (2, 4), (1, 3), (2, 6)] {
        let a = ff_structure(&cc, r, s, 12);
        let (cr, cs) = contragredient(&cc, r, s);
        assert_eq!(cc.lambda(cr, cs), &cc.bg - &cc.lambda(r, s));
        let b = ff_structure(&cc, cr, cs, 12);
        assert_eq!(a.factors, b.factors);
        let mut rev: Vec<(usize, usize)> = a.arrows.iter().map(|&(x, y)| (y, x)).collect();
        let mut bb = b.arrows.clone();
        rev.sort();
        bb.sort();
        assert_eq!(rev, bb);
    }
}

/// A positive label for `F_{−r,−s} = F_{−r+kp,−s+kq}`.
fn contragredient(cc: &CentralCharge, r: i64, s: i64) -> (i64, i64) {
    let k = (r / cc.p).max(s / cc.q) + 1;
    (k * cc.p - r, k * cc.q - s)
}
