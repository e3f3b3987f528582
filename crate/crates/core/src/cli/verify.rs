use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use astro_float::{BigFloat, Consts, RoundingMode};
use rayon::prelude::*;
use serde::Serialize;

use crate::fock::kac_basis;
use crate::fusion::check_grothendieck_consistency;
use crate::intertwiner::{
    allowed_targets, build_primary_coefficients, descends_to_kac_quotient, descent_expected,
    kac_image_graded_dims, rigidity_constants, verify_bpz_hypergeometric, verify_primary_condition,
    within,
};
use crate::kactable::{central_charge, CentralCharge, KacLabel};
use crate::verma::{
    c1_cofinite_dimension, diagram_to_level, kac_quotient_character, normalize, singular_scan,
    singular_vectors, Partition, VermaModule,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub p: i64,
    pub q: i64,
    pub level: usize,
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

type Outcome = (bool, String, String);
type Check = fn(&CentralCharge, usize) -> Outcome;

const CHECKS: [(&str, Check); 9] = [
    ("01-singular-level-two", singular_level_two),
    ("02-embedding-diagram", embedding_diagram_levels),
    ("03-kac-graded-dims", kac_graded_dims),
    ("04-fock-surjectivity", fock_surjectivity),
    ("05-intertwiner-recursion", intertwiner_recursion),
    ("06-cofinite-dimension", cofinite_dimension),
    ("07-grothendieck-fusion", grothendieck_fusion),
    ("08-bpz-hypergeometric", bpz_hypergeometric),
    ("09-rigidity-constants", rigidity),
];

/// Runs every check at `cc`, in parallel.
pub fn verify_all(cc: &CentralCharge, level: usize) -> VerifyReport {
    let mut checks: Vec<CheckResult> = CHECKS
        .par_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (passed, expected, actual) = f(cc, level);
            CheckResult {
                name: name.to_string(),
                passed,
                expected,
                actual,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport {
        p: cc.p,
        q: cc.q,
        level,
        checks,
        passed,
    }
}

fn l(r: i64, s: i64) -> KacLabel {
    KacLabel::new(r, s)
}

fn singular_level_two(cc: &CentralCharge, _: usize) -> Outcome {
    let t_inv = cc.t.recip().expect("t ≠ 0");
    let expected = format!("L_-1^2 - ({t_inv}) L_-2");
    let found = singular_vectors(&cc.c, &cc.h(1, 2), 2);
    let ok = found.len() == 1 && {
        let v = normalize(found[0].clone());
        v.coeffs.len() == 2
            && v.coeff(&Partition::new(vec![1, 1])).is_one()
            && v.coeff(&Partition::new(vec![2])) == -t_inv
    };
    let actual = match found.as_slice() {
        [v] => {
            let v = normalize(v.clone());
            let terms: Vec<String> = v
                .coeffs
                .iter()
                .map(|(p, x)| format!("({x}) L{p}"))
                .collect();
            terms.join(" + ")
        }
        vs => format!("{}-dimensional kernel", vs.len()),
    };
    (ok, expected, actual)
}

fn embedding_diagram_levels(cc: &CentralCharge, level: usize) -> Outcome {
    let max = level + 4;
    let mut bad = Vec::new();
    for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
        let d = diagram_to_level(cc, l(r, s), max);
        let first: BTreeSet<usize> = d
            .column(1)
            .into_iter()
            .map(|i| d.nodes[i].level as usize)
            .filter(|&n| n <= max)
            .collect();
        let all: BTreeSet<usize> = d.levels().into_iter().map(|n| n as usize).collect();
        let scan = singular_scan(&VermaModule::new(&cc.c, &cc.h(r, s)), max);
        let primitive: BTreeSet<usize> = scan
            .iter()
            .filter(|x| x.primitive)
            .map(|x| x.level)
            .collect();
        let ok = primitive == first && scan.iter().all(|x| x.dim == 1 && all.contains(&x.level));
        if !ok {
            bad.push(format!("({r},{s}): primitive {primitive:?} vs {first:?}"));
        }
    }
    let expected =
        format!("primitive singular levels ≤ {max} = first diagram column, each 1-dimensional");
    verdict(bad, expected, "4 labels agree".into())
}

fn kac_graded_dims(cc: &CentralCharge, level: usize) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for r in 1..=5 {
        for s in 1..=5 {
            if r > cc.p && s > cc.q {
                continue;
            }
            count += 1;
            let dims: Vec<u64> = kac_basis(cc, r, s, level)
                .dims()
                .into_iter()
                .map(|d| d as u64)
                .collect();
            let want = kac_quotient_character(r, s, level);
            if dims != want {
                bad.push(format!("({r},{s}): {dims:?} vs {want:?}"));
            }
        }
    }
    verdict(
        bad,
        format!("dim K_(r,s)[n] = p(n) - p(n-rs), n ≤ {level}"),
        format!("{count} labels agree"),
    )
}

fn fock_surjectivity(cc: &CentralCharge, level: usize) -> Outcome {
    let n = level.min(6);
    let (p, q) = (cc.p, cc.q);
    let pairs = [
        ((1, 2), (1, 1)),
        ((1, 2), (p + 1, q + 1)),
        ((2, 1), (1, q)),
        ((1, 2), (p, q)),
    ];
    let mut bad = Vec::new();
    for (a, b) in pairs {
        let dims = kac_image_graded_dims(cc, l(a.0, a.1), l(b.0, b.1), n);
        let target = kac_basis(cc, a.0 + b.0 - 1, a.1 + b.1 - 1, n).dims();
        if dims != target {
            bad.push(format!("{a:?} x {b:?}: {dims:?} vs {target:?}"));
        }
    }
    verdict(
        bad,
        format!("image dims = Kac dims through level {n}"),
        format!("{} pairs agree", pairs.len()),
    )
}

fn intertwiner_recursion(cc: &CentralCharge, level: usize) -> Outcome {
    let mut bad = Vec::new();
    let mut extra = Vec::new();
    let mut branches = 0;
    for r in 1..=5 {
        for s in 1..=5 {
            for t in allowed_targets(cc, l(r, s)) {
                if !t.admissible {
                    continue;
                }
                branches += 1;
                let tag = format!("({r},{s})-{}", t.branch.name());
                let coeffs = match build_primary_coefficients(cc, l(r, s), t.branch, level) {
                    Ok(c) => c,
                    Err(e) => {
                        bad.push(format!("{tag}: {e}"));
                        continue;
                    }
                };
                if !verify_primary_condition(&coeffs, level) {
                    bad.push(format!("{tag}: primary condition"));
                }
                let expected = descent_expected(cc, l(r, s), t.branch);
                match descends_to_kac_quotient(&coeffs, level) {
                    Ok(d) if d == expected => {}
                    Ok(true) => extra.push(tag),
                    Ok(false) => bad.push(format!("{tag}: predicted descent fails")),
                    Err(e) => bad.push(format!("{tag}: {e}")),
                }
            }
        }
    }
    let mut actual = format!("{branches} branches verified");
    if !extra.is_empty() {
        actual.push_str(&format!("; descent also observed at {}", extra.join(", ")));
    }
    verdict(
        bad,
        format!(
            "primary condition through level {level}; descent wherever the case table predicts it"
        ),
        actual,
    )
}

fn cofinite_dimension(cc: &CentralCharge, _: usize) -> Outcome {
    let mut bad = Vec::new();
    for (r, s) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        let rs = (r * s) as usize;
        match c1_cofinite_dimension(&cc.c, &cc.h(r, s), rs, rs + 2) {
            Ok(d) if d == rs => {}
            Ok(d) => bad.push(format!("({r},{s}): {d}")),
            Err(e) => bad.push(format!("({r},{s}): {e}")),
        }
    }
    verdict(
        bad,
        "dim = rs for rs in {1,2,3,4,6}".into(),
        "5 labels agree".into(),
    )
}

fn grothendieck_fusion(cc: &CentralCharge, _: usize) -> Outcome {
    let bound = 8;
    let report = check_grothendieck_consistency(cc, bound, bound);
    let cases: usize = report.checks.iter().map(|c| c.cases).sum();
    let actual = match &report.first_failure {
        None => format!("{} identities, {cases} cases", report.checks.len()),
        Some(f) => f.clone(),
    };
    (
        report.passed,
        format!("all identities hold for r,s ≤ {bound}"),
        actual,
    )
}

fn bpz_hypergeometric(_: &CentralCharge, _: usize) -> Outcome {
    let order = 40;
    let mut bad = Vec::new();
    for p in [3, 5, 7] {
        match verify_bpz_hypergeometric(p, order + 2) {
            Ok(res) if res.is_zero() && res.order() >= order => {}
            Ok(res) => bad.push(format!("p={p}: residual {res}")),
            Err(e) => bad.push(format!("p={p}: {e}")),
        }
    }
    verdict(
        bad,
        format!("zero residual through order {order}, p in {{3,5,7}}"),
        "3 series vanish".into(),
    )
}

fn rigidity(_: &CentralCharge, _: usize) -> Outcome {
    const RM: RoundingMode = RoundingMode::ToEven;
    let prec = 256;
    let one = BigFloat::from_i64(1, prec);
    let zero = BigFloat::from_i64(0, prec);
    let mut bad = Vec::new();
    let k23 = rigidity_constants(&central_charge(2, 3).expect("valid"), prec);
    if !within(&k23.r_pairing, &one.neg(), 200) {
        bad.push(format!("(2,3) R = {}", k23.r_pairing));
    }
    if !within(&k23.d_k12, &one, 200) {
        bad.push(format!("(2,3) d(K12) = {}", k23.d_k12));
    }
    let k32 = rigidity_constants(&central_charge(3, 2).expect("valid"), prec);
    if !within(&k32.d_k12, &zero, 200) {
        bad.push(format!("(3,2) d(K12) = {}", k32.d_k12));
    }
    // Γ(3/2)Γ(7/2) = 15π/16, so the pairing at p = 3 is −128/(45π).
    let mut consts = Consts::new().expect("constant cache");
    let pi = consts.pi(prec, RM);
    let oracle = BigFloat::from_i64(-128, prec).div(
        &BigFloat::from_i64(45, prec).mul(&pi, prec, RM),
        prec,
        RM,
    );
    if !within(&k32.r_pairing, &oracle, 100) {
        bad.push(format!("(3,2) R = {} vs {}", k32.r_pairing, oracle));
    }
    verdict(
        bad,
        "R(2,3) = -1, d(2,3) = 1, d(3,2) = 0 to 2^-200; R(3,2) = -128/(45π) to 2^-100".into(),
        "4 constants agree".into(),
    )
}

fn verdict(bad: Vec<String>, expected: String, ok: String) -> Outcome {
    if bad.is_empty() {
        (true, expected, ok)
    } else {
        (false, expected, bad.join("; "))
    }
}
