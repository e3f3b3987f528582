use std::collections::BTreeMap;

use serde::Serialize;

use super::classes::{add_characters, kac_character, kac_class, GrothendieckClass};
use super::products::{fuse_class, fuse_kac, FusionGenerator};
use super::zhu::zhu_constraint;
use crate::exactnum::Rational;
use crate::kactable::CentralCharge;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub p: i64,
    pub q: i64,
    pub rmax: i64,
    pub smax: i64,
    pub level: usize,
    pub checks: Vec<IdentityCheck>,
    pub first_failure: Option<String>,
    pub passed: bool,
}

struct Recorder {
    checks: Vec<IdentityCheck>,
    first_failure: Option<String>,
}

impl Recorder {
    fn start(&mut self, name: &str) {
        self.checks.push(IdentityCheck {
            name: name.into(),
            cases: 0,
            failures: 0,
            passed: true,
        });
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        let c = self.checks.last_mut().expect("a check is open");
        c.cases += 1;
        if !ok {
            c.failures += 1;
            c.passed = false;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{}: {}", c.name, what()));
            }
        }
    }
}

/// Runs [`check_grothendieck_consistency_with`] on the Kac structures, through level 8.
pub fn check_grothendieck_consistency(
    cc: &CentralCharge,
    rmax: i64,
    smax: i64,
) -> ConsistencyReport {
    check_grothendieck_consistency_with(cc, rmax, smax, 8, &|r, s| kac_class(cc, r, s))
}

/// Checks the Grothendieck-level fusion rules for all `r ≤ rmax`, `s ≤ smax` against the
/// Kac module classes supplied by `class_of`.
pub fn check_grothendieck_consistency_with(
    cc: &CentralCharge,
    rmax: i64,
    smax: i64,
    level: usize,
    class_of: &dyn Fn(i64, i64) -> GrothendieckClass,
) -> ConsistencyReport {
    let (p, q) = (cc.p, cc.q);
    let mut rec = Recorder {
        checks: Vec::new(),
        first_failure: None,
    };
    let labels: Vec<(i64, i64)> = (1..=rmax)
        .flat_map(|r| (1..=smax).map(move |s| (r, s)))
        .collect();
    let gens = [FusionGenerator::K12, FusionGenerator::K21];
    let neighbours = |g: FusionGenerator, r: i64, s: i64| match g {
        FusionGenerator::K12 => ((r, s - 1), (r, s + 1)),
        FusionGenerator::K21 => ((r - 1, s), (r + 1, s)),
    };

    rec.start("additivity");
    for &(r, s) in &labels {
        for g in gens {
            let ((a, b), (c, d)) = neighbours(g, r, s);
            let o = fuse_kac(cc, g, r, s);
            let expected = class_of(a, b).add(&class_of(c, d));
            rec.record(o.class == expected, || {
                format!("{} ⊠ K_({r},{s}): {} ≠ {}", g.name(), o.class, expected)
            });
        }
    }

    rec.start("kac_filtration");
    for &(r, s) in &labels {
        if r <= p || s <= q {
            continue;
        }
        let (m, r0) = ((r - 1) / p - 1, (r - 1) % p + 1);
        let (n, s0) = ((s - 1) / q - 1, (s - 1) % q + 1);
        let pieces = class_of(r - p, s - q)
            .add(&class_of(r0, (m + n + 2) * q + s0))
            .add(&class_of(p - r0, (m + n + 1) * q + s0));
        let whole = class_of(r, s);
        rec.record(whole == pieces, || {
            format!("K_({r},{s}): {whole} ≠ {pieces}")
        });
    }
    for &(r, s) in &labels {
        if s != q || r <= p || r % p == 0 {
            continue;
        }
        let (m, r0) = (r / p, r % p);
        let pieces = class_of(r0, (m + 1) * q).add(&class_of(p - r0, m * q));
        let whole = class_of(r, s);
        rec.record(whole == pieces, || {
            format!("K_({r},{s}): {whole} ≠ {pieces}")
        });
    }

    rec.start("factor_count");
    for &(r, s) in &labels {
        if s != q || r <= p || r % p == 0 {
            continue;
        }
        let (m, r0) = (r / p, r % p);
        let through_simples = [
            (r0, (m + 1) * q - 1),
            (r0, (m + 1) * q + 1),
            (p - r0, m * q - 1),
            (p - r0, m * q + 1),
        ]
        .iter()
        .map(|&(a, b)| class_of(a, b))
        .fold(GrothendieckClass::zero(), |acc, c| acc.add(&c));
        let direct = class_of(r, q - 1).add(&class_of(r, q + 1));
        let ok = through_simples.length() == 8 && direct.length() == 8 && through_simples == direct;
        rec.record(ok, || {
            format!(
                "K_(1,2) ⊠ K_({r},{q}): {} factors via the sequence, {} directly",
                through_simples.length(),
                direct.length()
            )
        });
    }

    rec.start("iterated_containment");
    let mut column = class_of(1, 1);
    for r in 1..=rmax {
        if r > 1 {
            column = fuse_class(cc, FusionGenerator::K21, &column);
        }
        let mut x = column.clone();
        for s in 1..=smax {
            if s > 1 {
                x = fuse_class(cc, FusionGenerator::K12, &x);
            }
            let target = class_of(r, s);
            rec.record(x.contains(&target), || {
                format!(
                    "K21^{} K12^{} ⊠ K_(1,1) does not contain {target}",
                    r - 1,
                    s - 1
                )
            });
        }
    }

    rec.start("cofinite_bound");
    for &(r, s) in &labels {
        for g in gens {
            let ((a, b), (c, d)) = neighbours(g, r, s);
            let dims = a.max(0) * b.max(0) + c * d;
            rec.record(dims <= 2 * r * s, || {
                format!("{} ⊠ K_({r},{s}): {dims} > {}", g.name(), 2 * r * s)
            });
        }
    }

    rec.start("splitting");
    for &(r, s) in &labels {
        for g in gens {
            let ((a, b), (c, d)) = neighbours(g, r, s);
            let o = fuse_kac(cc, g, r, s);
            let integral = (cc.h(c, d) - cc.h(a, b)).is_integer();
            rec.record(o.splits != integral && o.logarithmic == integral, || {
                format!("{} ⊠ K_({r},{s}): splits = {}", g.name(), o.splits)
            });
        }
    }

    rec.start("characters");
    for &(r, s) in &labels {
        for g in gens {
            let ((a, b), (c, d)) = neighbours(g, r, s);
            let mut lowest = vec![cc.h(c, d)];
            if a >= 1 && b >= 1 {
                lowest.push(cc.h(a, b));
            }
            let cutoff = lowest.into_iter().min().expect("non-empty") + Rational::int(level as i64);
            let lhs = add_characters(
                &kac_character(cc, a, b, &cutoff),
                &kac_character(cc, c, d, &cutoff),
            );
            let rhs = fuse_kac(cc, g, r, s).class.character(cc, &cutoff);
            let rhs_table = class_of(a, b).add(&class_of(c, d)).character(cc, &cutoff);
            rec.record(lhs == rhs && lhs == rhs_table, || {
                format!(
                    "{} ⊠ K_({r},{s}): {}",
                    g.name(),
                    first_difference(&lhs, &rhs_table)
                )
            });
        }
    }

    rec.start("zhu_lowest_weights");
    for &(r, s) in &labels {
        for g in gens {
            let z = zhu_constraint(cc, g, r, s);
            let class = fuse_kac(cc, g, r, s).class;
            let mut cosets: BTreeMap<Rational, Rational> = BTreeMap::new();
            for (l, _) in class.iter() {
                let h = l.weight(cc);
                let key = &h - Rational::from_bigint(h.floor());
                let e = cosets.entry(key).or_insert_with(|| h.clone());
                if h < *e {
                    *e = h;
                }
            }
            let ok = cosets.values().all(|h| z.has_root(h));
            rec.record(ok, || {
                format!("{} ⊠ K_({r},{s}): a lowest weight is not a root", g.name())
            });
        }
    }

    let passed = rec.first_failure.is_none();
    ConsistencyReport {
        p,
        q,
        rmax,
        smax,
        level,
        checks: rec.checks,
        first_failure: rec.first_failure,
        passed,
    }
}

fn first_difference(a: &BTreeMap<Rational, u64>, b: &BTreeMap<Rational, u64>) -> String {
    let keys: std::collections::BTreeSet<&Rational> = a.keys().chain(b.keys()).collect();
    for k in keys {
        let (x, y) = (
            a.get(k).copied().unwrap_or(0),
            b.get(k).copied().unwrap_or(0),
        );
        if x != y {
            return format!("weight {k}: {x} vs {y}");
        }
    }
    "characters agree".into()
}
