use serde_json::Value;
use virkac::cli::{run, verify_all};
use virkac::exactnum::Rational;
use virkac::kactable::central_charge;

fn call(args: &str) -> virkac::cli::Output {
    run(std::iter::once("virkac").chain(args.split_whitespace()))
}

fn strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(xs) => xs.iter().for_each(|x| strings(x, out)),
        Value::Object(m) => m.values().for_each(|x| strings(x, out)),
        _ => {}
    }
}

fn is_fraction(s: &str) -> bool {
    s.split_once('/').is_some_and(|(n, d)| {
        let n = n.strip_prefix('-').unwrap_or(n);
        !n.is_empty()
            && !d.is_empty()
            && n.bytes().all(|b| b.is_ascii_digit())
            && d.bytes().all(|b| b.is_ascii_digit())
    })
}

#[test]
fn table_contains_the_weight_grid() {
    let out = call("table --p 2 --q 3 --rmax 2 --smax 5");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("h_{2,1}=5/8"), "{}", out.stdout);
    let json: Value =
        serde_json::from_str(&call("table --p 2 --q 3 --rmax 2 --smax 5 --format json").stdout)
            .unwrap();
    assert_eq!(json["h"][1][0], "5/8");
    assert_eq!(json["h"].as_array().unwrap().len(), 2);
    assert_eq!(json["h"][0].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        "table --p 2 --q 4",
        "table --p 1 --q 3",
        "nosuchcommand",
        "table --p 2",
        "singular --p 2 --q 3 --r 0 --s 1",
        "fuse --p 2 --q 3 --left kr1 --r 1 --s 2 --simple",
        "intertwiner --p 2 --q 3 --r 3 --s 3 --branch plus",
        "bpz --p 4",
        "char --p 2 --q 3 --r 1 --s 1 --which nothing",
    ] {
        let out = call(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
}

#[test]
fn help_and_version_succeed() {
    for args in ["--help", "--version", "table --help"] {
        let out = call(args);
        assert_eq!(out.code, 0, "{args}");
        assert!(!out.stdout.is_empty());
    }
}

const COMMANDS: [&str; 16] = [
    "table --p 3 --q 4",
    "singular --p 2 --q 3 --r 1 --s 2 --level 2",
    "diagram --p 2 --q 3 --r 1 --s 1 --depth 3",
    "char --p 2 --q 3 --r 1 --s 1 --level 6",
    "char --p 2 --q 3 --r 1 --s 2 --which simple",
    "kac-structure --p 2 --q 3 --r 3 --s 4",
    "kac-dims --p 2 --q 3 --r 1 --s 2 --level 5",
    "intertwiner --p 2 --q 3 --r 1 --s 2 --branch minus --level 4 --verify",
    "fock-image --p 2 --q 3 --r 1 --s 2 --r2 1 --s2 1 --level 4",
    "bpz --p 5 --order 12",
    "constants --p 3 --q 2 --precision 128",
    "fuse --p 2 --q 3 --left k21 --r 2 --s 2",
    "fuse --p 3 --q 4 --left k12 --r 1 --s 3 --simple",
    "zhu --p 2 --q 3 --first k12 --r 1 --s 3",
    "rigidity --p 2 --q 3 --r 3 --s 1",
    "consistency --p 2 --q 3 --rmax 4 --smax 4",
];

#[test]
fn every_command_succeeds_and_is_deterministic() {
    for cmd in COMMANDS {
        for fmt in ["text", "json"] {
            let args = format!("{cmd} --format {fmt}");
            let a = call(&args);
            let b = call(&args);
            assert_eq!(a.code, 0, "{args}: {}", a.stderr);
            assert_eq!(a, b, "{args}");
            assert!(!a.stdout.is_empty());
        }
    }
}

#[test]
fn json_fractions_round_trip() {
    for cmd in COMMANDS {
        let out = call(&format!("{cmd} --format json"));
        let json: Value =
            serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{cmd}: {e}"));
        let mut all = Vec::new();
        strings(&json, &mut all);
        for s in all.iter().filter(|s| is_fraction(s)) {
            let x: Rational = s.parse().unwrap();
            assert_eq!(&x.to_string(), s, "{cmd}");
        }
    }
    let json: Value =
        serde_json::from_str(&call("table --p 3 --q 4 --format json").stdout).unwrap();
    let cc = central_charge(3, 4).unwrap();
    for r in 1..=3 {
        for s in 1..=4 {
            let h: Rational = json["h"][r - 1][s - 1].as_str().unwrap().parse().unwrap();
            assert_eq!(h, cc.h(r as i64, s as i64));
        }
    }
}

#[test]
fn json_uses_no_floats_outside_constants() {
    fn has_float(v: &Value) -> bool {
        match v {
            Value::Number(n) => n.is_f64(),
            Value::Array(xs) => xs.iter().any(has_float),
            Value::Object(m) => m.values().any(has_float),
            _ => false,
        }
    }
    for cmd in COMMANDS {
        let json: Value =
            serde_json::from_str(&call(&format!("{cmd} --format json")).stdout).unwrap();
        assert!(!has_float(&json), "{cmd}");
    }
    let json: Value =
        serde_json::from_str(&call("constants --p 2 --q 3 --format json").stdout).unwrap();
    assert_eq!(json["precision"], 256);
    assert!(json["R_pairing"].as_str().unwrap().starts_with("-1"));
}

#[test]
fn quadratic_numbers_are_serialized_by_components() {
    let json: Value =
        serde_json::from_str(&call("table --p 2 --q 3 --format json").stdout).unwrap();
    assert_eq!(
        json["Q"],
        serde_json::json!({ "a": "0/1", "b": "1/6", "D": 12 })
    );
    let json: Value = serde_json::from_str(
        &call("fock-image --p 2 --q 3 --r 1 --s 2 --r2 1 --s2 1 --level 3 --format json").stdout,
    )
    .unwrap();
    assert_eq!(json["surjective"], true);
    let json: Value = serde_json::from_str(
        &call("intertwiner --p 2 --q 3 --r 1 --s 2 --branch plus --level 2 --format json").stdout,
    )
    .unwrap();
    assert_eq!(json["coefficients"]["h2"], "1/3");
}

#[test]
fn verify_passes_at_the_reference_central_charges() {
    let out = call("verify --p 2 --q 3 --level 8");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().filter(|l| l.starts_with("PASS")).count() == 9);
    for (p, q, level) in [(3, 4, 8), (2, 5, 6)] {
        let rep = verify_all(&central_charge(p, q).unwrap(), level);
        assert!(
            rep.passed,
            "({p},{q}): {:?}",
            rep.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
        let names: Vec<&str> = rep.checks.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn verify_json_is_deterministic() {
    let a = call("verify --p 2 --q 3 --level 6 --format json");
    let b = call("verify --p 2 --q 3 --level 6 --format json");
    assert_eq!(a, b);
    let json: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(json["passed"], true);
    assert!(json["checks"][0].get("elapsed").is_none());
}
