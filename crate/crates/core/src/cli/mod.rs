//! Command-line front end: argument parsing, text and JSON rendering, and exit codes.
//!
//! Exit codes are 0 on success, 1 when a requested check fails and 2 on a usage error.
//! Exact numbers are printed as `num/den` strings, never as floats; the `constants`
//! command prints decimal strings alongside the precision in bits.

mod verify;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub use verify::{verify_all, CheckResult, VerifyReport};

use crate::error::Error;
use crate::fock::{kac_basis, kac_structure, ModuleStructure};
use crate::fusion::{
    check_grothendieck_consistency_with, fuse_kac, fuse_kr1_k1s, fuse_simple, kac_class,
    rigidity_status, zhu_constraint, FusionGenerator, FusionOutcome, SimpleLabel,
};
use crate::intertwiner::{
    build_primary_coefficients, descends_to_kac_quotient, descent_expected, kac_image_graded_dims,
    rigidity_constants, to_decimal, verify_bpz_hypergeometric, verify_primary_condition,
    BranchChoice,
};
use crate::kactable::{central_charge, CentralCharge, KacLabel};
use crate::verma::{characters, embedding_diagram, normalize, singular_vectors, PBWVector};

const DEFAULT_LEVEL: usize = 8;
const DEFAULT_PRECISION: usize = 256;

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "virkac",
    version,
    about = "Exact Virasoro computations at central charge c_{p,q}"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct Pq {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
}

#[derive(Args, Debug, Clone, Copy)]
struct Rs {
    #[arg(long)]
    r: i64,
    #[arg(long)]
    s: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Verma,
    Kac,
    Simple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Branch {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Left {
    K12,
    K21,
    Kr1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Generator {
    K12,
    K21,
}

impl From<Generator> for FusionGenerator {
    fn from(g: Generator) -> Self {
        match g {
            Generator::K12 => FusionGenerator::K12,
            Generator::K21 => FusionGenerator::K21,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kac table weights h_{r,s}.
    Table {
        #[command(flatten)]
        pq: Pq,
        /// Defaults to p.
        #[arg(long)]
        rmax: Option<i64>,
        /// Defaults to q.
        #[arg(long)]
        smax: Option<i64>,
    },
    /// Singular vectors of the Verma module V_{h_{r,s}} at one level.
    Singular {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
    },
    /// Embedding diagram of V_{r,s}.
    Diagram {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        /// Number of columns below the top.
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Graded dimensions of the Verma module, the Kac quotient or the simple quotient.
    Char {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        /// All three when omitted.
        #[arg(long, value_enum)]
        which: Option<Which>,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
    },
    /// Composition factors and arrows of the Kac module K_{r,s}.
    KacStructure {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
    },
    /// Graded dimensions of K_{r,s} built inside the Fock module.
    KacDims {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
    },
    /// Coefficients of the primary field of weight h_{1,2} on V_{r,s}.
    Intertwiner {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        #[arg(long, value_enum)]
        branch: Branch,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
        /// Also check the primary condition and descent to the Kac quotient.
        #[arg(long)]
        verify: bool,
    },
    /// Graded dimensions of the image of the Fock intertwiner F_{r,s} x F_{r2,s2}.
    FockImage {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        s2: i64,
        #[arg(long, default_value_t = 6)]
        level: usize,
    },
    /// Residual of the hypergeometric solution of the BPZ equation at q = 2.
    Bpz {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 42)]
        order: usize,
    },
    /// Pairing constant and intrinsic dimensions of K_{1,2} and K_{2,1}.
    Constants {
        #[command(flatten)]
        pq: Pq,
        /// Bits of binary precision.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Fusion of K_{1,2}, K_{2,1} or K_{r,1} with a Kac or simple module.
    Fuse {
        #[command(flatten)]
        pq: Pq,
        #[arg(long, value_enum)]
        left: Left,
        #[command(flatten)]
        rs: Rs,
        /// Fuse with the simple module L_{r,s} instead of K_{r,s}.
        #[arg(long)]
        simple: bool,
    },
    /// Zhu algebra constraint on the lowest weights of a fusion product.
    Zhu {
        #[command(flatten)]
        pq: Pq,
        #[arg(long, value_enum)]
        first: Generator,
        #[command(flatten)]
        rs: Rs,
    },
    /// Known rigidity of K_{r,s}.
    Rigidity {
        #[command(flatten)]
        pq: Pq,
        #[command(flatten)]
        rs: Rs,
    },
    /// Grothendieck-level fusion identities.
    Consistency {
        #[command(flatten)]
        pq: Pq,
        #[arg(long, default_value_t = 8)]
        rmax: i64,
        #[arg(long, default_value_t = 8)]
        smax: i64,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
    },
    /// The full acceptance suite.
    Verify {
        #[command(flatten)]
        pq: Pq,
        #[arg(long, default_value_t = DEFAULT_LEVEL)]
        level: usize,
        /// Print the time taken by each check to standard error.
        #[arg(long)]
        timings: bool,
    },
}

/// Result of a command before formatting.
struct Rendered {
    code: i32,
    json: Value,
    text: String,
    stderr: String,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Rendered {
            code: 0,
            json,
            text,
            stderr: String::new(),
        }
    }

    fn check(passed: bool, json: Value, text: String) -> Self {
        Rendered {
            code: if passed { 0 } else { 1 },
            ..Rendered::ok(json, text)
        }
    }
}

/// An invalid request, reported with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn usage(msg: impl std::fmt::Display) -> Output {
    Output {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let rendered = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(Usage(e)) => return usage(e),
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rendered.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => rendered.text,
    };
    Output {
        code: rendered.code,
        stdout,
        stderr: rendered.stderr,
    }
}

fn cc_of(pq: Pq) -> Result<CentralCharge, Error> {
    central_charge(pq.p, pq.q)
}

fn positive(name: &str, x: i64) -> Result<(), Usage> {
    if x >= 1 {
        Ok(())
    } else {
        Err(Usage(format!("{name} must be at least 1, got {x}")))
    }
}

fn label_of(rs: Rs) -> Result<KacLabel, Usage> {
    positive("r", rs.r)?;
    positive("s", rs.s)?;
    Ok(KacLabel::new(rs.r, rs.s))
}

fn header(cc: &CentralCharge) -> String {
    format!("p = {}, q = {}, t = {}, c = {}\n", cc.p, cc.q, cc.t, cc.c)
}

fn dispatch(cmd: &Command) -> Result<Rendered, Usage> {
    match *cmd {
        Command::Table { pq, rmax, smax } => {
            let cc = cc_of(pq)?;
            let (rmax, smax) = (rmax.unwrap_or(cc.p), smax.unwrap_or(cc.q));
            positive("rmax", rmax)?;
            positive("smax", smax)?;
            Ok(table(&cc, rmax, smax))
        }
        Command::Singular { pq, rs, level } => Ok(singular(&cc_of(pq)?, label_of(rs)?, level)),
        Command::Diagram { pq, rs, depth } => {
            let cc = cc_of(pq)?;
            let d = embedding_diagram(&cc, label_of(rs)?, depth);
            let mut text = header(&cc);
            for (i, n) in d.nodes.iter().enumerate() {
                let label = n.label.map_or("-".to_string(), |l| l.to_string());
                let _ = writeln!(
                    text,
                    "[{i}] column {} level {} h = {} label {label}",
                    n.column, n.level, n.weight
                );
            }
            for (a, b) in &d.arrows {
                let _ = writeln!(text, "[{a}] -> [{b}]");
            }
            Ok(Rendered::ok(
                json!({ "p": cc.p, "q": cc.q, "diagram": d }),
                text,
            ))
        }
        Command::Char {
            pq,
            rs,
            which,
            level,
        } => {
            let cc = cc_of(pq)?;
            let ch = characters(&cc, label_of(rs)?, level);
            let parts: Vec<(&str, &Vec<u64>)> = match which {
                Some(Which::Verma) => vec![("verma", &ch.verma)],
                Some(Which::Kac) => vec![("kac", &ch.kac_quotient)],
                Some(Which::Simple) => vec![("simple", &ch.simple)],
                None => vec![
                    ("verma", &ch.verma),
                    ("kac", &ch.kac_quotient),
                    ("simple", &ch.simple),
                ],
            };
            let mut text = header(&cc);
            let mut obj = serde_json::Map::new();
            obj.insert("h".into(), to_json(&cc.h(rs.r, rs.s)));
            for (name, dims) in parts {
                let _ = writeln!(text, "{name}: {}", join(dims));
                obj.insert(name.into(), to_json(dims));
            }
            Ok(Rendered::ok(Value::Object(obj), text))
        }
        Command::KacStructure { pq, rs } => {
            let cc = cc_of(pq)?;
            let l = label_of(rs)?;
            let st = kac_structure(&cc, l.r, l.s);
            Ok(Rendered::ok(to_json(&st), structure_text(&cc, l, &st)))
        }
        Command::KacDims { pq, rs, level } => {
            let cc = cc_of(pq)?;
            let l = label_of(rs)?;
            let dims = kac_basis(&cc, l.r, l.s, level).dims();
            let text = format!("{}dims K{l}: {}\n", header(&cc), join(&dims));
            Ok(Rendered::ok(
                json!({ "r": l.r, "s": l.s, "dims": dims }),
                text,
            ))
        }
        Command::Intertwiner {
            pq,
            rs,
            branch,
            level,
            verify,
        } => intertwiner(&cc_of(pq)?, label_of(rs)?, branch, level, verify),
        Command::FockImage {
            pq,
            rs,
            r2,
            s2,
            level,
        } => {
            let cc = cc_of(pq)?;
            let a = label_of(rs)?;
            let b = label_of(Rs { r: r2, s: s2 })?;
            let (tr, ts) = (a.r + b.r - 1, a.s + b.s - 1);
            let image = kac_image_graded_dims(&cc, a, b, level);
            let target = kac_basis(&cc, tr, ts, level).dims();
            let ok = image == target;
            let text = format!(
                "{}image: {}\nK({tr}, {ts}): {}\nsurjective: {ok}\n",
                header(&cc),
                join(&image),
                join(&target)
            );
            let json = json!({ "source": [a, b], "target": KacLabel::new(tr, ts), "image": image, "kac": target, "surjective": ok });
            Ok(Rendered::check(ok, json, text))
        }
        Command::Bpz { p, order } => {
            let res = verify_bpz_hypergeometric(p, order)?;
            let ok = res.is_zero();
            let text = format!("residual: {res}\nvanishes: {ok}\n");
            Ok(Rendered::check(
                ok,
                json!({ "p": p, "residual": res, "vanishes": ok }),
                text,
            ))
        }
        Command::Constants { pq, precision } => {
            let cc = cc_of(pq)?;
            let k = rigidity_constants(&cc, precision);
            let text = format!(
                "{}precision: {} bits\nR: {}\nd(K12): {}\nd(K21): {}\n",
                header(&cc),
                k.precision,
                to_decimal(&k.r_pairing),
                to_decimal(&k.d_k12),
                to_decimal(&k.d_k21)
            );
            Ok(Rendered::ok(to_json(&k), text))
        }
        Command::Fuse {
            pq,
            left,
            rs,
            simple,
        } => {
            let cc = cc_of(pq)?;
            let l = label_of(rs)?;
            let gen = match left {
                Left::K12 => FusionGenerator::K12,
                Left::K21 => FusionGenerator::K21,
                Left::Kr1 => {
                    if simple {
                        return Err(Usage("--simple applies to k12 and k21 only".into()));
                    }
                    let k = fuse_kr1_k1s(&cc, l.r, l.s);
                    let text = format!(
                        "{}K({}, 1) x K(1, {}) = K{l}, isomorphism: {}\nclass: {}\n",
                        header(&cc),
                        l.r,
                        l.s,
                        k.isomorphism,
                        k.class
                    );
                    return Ok(Rendered::ok(to_json(&k), text));
                }
            };
            let o = if simple {
                fuse_simple(&cc, gen, SimpleLabel::new(&cc, l.r, l.s))
            } else {
                fuse_kac(&cc, gen, l.r, l.s)
            };
            Ok(Rendered::ok(to_json(&o), fusion_text(&cc, &o)))
        }
        Command::Zhu { pq, first, rs } => {
            let cc = cc_of(pq)?;
            let l = label_of(rs)?;
            let z = zhu_constraint(&cc, first.into(), l.r, l.s);
            let text = format!(
                "{}(x - {})(x - {}) = x^2 + ({})x + ({})\ncase: {:?}\n",
                header(&cc),
                z.roots[0],
                z.roots[1],
                z.polynomial[1],
                z.polynomial[0],
                z.case
            );
            Ok(Rendered::ok(to_json(&z), text))
        }
        Command::Rigidity { pq, rs } => {
            let cc = cc_of(pq)?;
            let l = label_of(rs)?;
            let st = rigidity_status(&cc, l.r, l.s);
            let text = format!("{}K{l}: {st:?}\n", header(&cc));
            Ok(Rendered::ok(
                json!({ "r": l.r, "s": l.s, "status": st }),
                text,
            ))
        }
        Command::Consistency {
            pq,
            rmax,
            smax,
            level,
        } => {
            let cc = cc_of(pq)?;
            positive("rmax", rmax)?;
            positive("smax", smax)?;
            let rep = check_grothendieck_consistency_with(&cc, rmax, smax, level, &|r, s| {
                kac_class(&cc, r, s)
            });
            let mut text = header(&cc);
            for c in &rep.checks {
                let _ = writeln!(
                    text,
                    "{} {}: {} cases, {} failures",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.cases,
                    c.failures
                );
            }
            if let Some(f) = &rep.first_failure {
                let _ = writeln!(text, "first failure: {f}");
            }
            Ok(Rendered::check(rep.passed, to_json(&rep), text))
        }
        Command::Verify { pq, level, timings } => {
            let cc = cc_of(pq)?;
            let rep = verify_all(&cc, level);
            let mut text = header(&cc);
            let mut stderr = String::new();
            for c in &rep.checks {
                let _ = writeln!(
                    text,
                    "{} {}: expected {}; got {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.actual
                );
                if timings {
                    let _ = writeln!(stderr, "{}: {:.3} s", c.name, c.elapsed.as_secs_f64());
                }
            }
            let _ = writeln!(
                text,
                "{}",
                if rep.passed {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
            let mut r = Rendered::check(rep.passed, to_json(&rep), text);
            r.stderr = stderr;
            Ok(r)
        }
    }
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn table(cc: &CentralCharge, rmax: i64, smax: i64) -> Rendered {
    let mut text = header(cc);
    let mut grid = Vec::new();
    for r in 1..=rmax {
        let row: Vec<String> = (1..=smax).map(|s| cc.h(r, s).to_string()).collect();
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, h)| format!("h_{{{r},{}}}={h}", j + 1))
            .collect();
        let _ = writeln!(text, "{}", cells.join("  "));
        grid.push(row);
    }
    let json = json!({ "p": cc.p, "q": cc.q, "c": cc.c, "t": cc.t, "Q": cc.bg, "rmax": rmax, "smax": smax, "h": grid });
    Rendered::ok(json, text)
}

fn pbw_text(v: &PBWVector) -> String {
    let terms: Vec<String> = v
        .coeffs
        .iter()
        .map(|(p, x)| format!("({x}) L{p}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn singular(cc: &CentralCharge, l: KacLabel, level: usize) -> Rendered {
    let h = cc.h(l.r, l.s);
    let vs: Vec<PBWVector> = singular_vectors(&cc.c, &h, level)
        .into_iter()
        .map(normalize)
        .collect();
    let mut text = format!(
        "{}h = {h}, level {level}: {} singular vector(s)\n",
        header(cc),
        vs.len()
    );
    for v in &vs {
        let _ = writeln!(text, "{}", pbw_text(v));
    }
    Rendered::ok(
        json!({ "c": cc.c, "h": h, "level": level, "vectors": vs }),
        text,
    )
}

fn structure_text(cc: &CentralCharge, l: KacLabel, st: &ModuleStructure) -> String {
    let mut text = format!("{}K{l}: {:?}, length {}\n", header(cc), st.case, st.length);
    for (i, f) in st.factors.iter().enumerate() {
        let _ = writeln!(text, "[{i}] L{f} h = {}", cc.h(f.r, f.s));
    }
    for (a, b) in &st.arrows {
        let _ = writeln!(text, "[{a}] -> [{b}]");
    }
    text
}

fn intertwiner(
    cc: &CentralCharge,
    l: KacLabel,
    branch: Branch,
    level: usize,
    verify: bool,
) -> Result<Rendered, Usage> {
    let branch = match branch {
        Branch::Plus => BranchChoice::Plus,
        Branch::Minus => BranchChoice::Minus,
    };
    let coeffs = build_primary_coefficients(cc, l, branch, level)?;
    let mut text = format!(
        "{}h1 = {}, h2 = {}, exponent {}\n",
        header(cc),
        coeffs.h1,
        coeffs.h2,
        coeffs.exponent()
    );
    for (k, phi) in coeffs.phis.iter().enumerate() {
        let _ = writeln!(text, "phi_{k} = {}", pbw_text(phi));
    }
    let mut json = json!({ "coefficients": coeffs });
    if !verify {
        return Ok(Rendered::ok(json, text));
    }
    let primary = verify_primary_condition(&coeffs, level);
    let predicted = descent_expected(cc, l, branch);
    let descends = descends_to_kac_quotient(&coeffs, level)?;
    let ok = primary && (!predicted || descends);
    let _ = writeln!(
        text,
        "primary condition: {primary}\ndescends: {descends} (predicted: {predicted})"
    );
    json["primary"] = json!(primary);
    json["descends"] = json!(descends);
    json["descent_predicted"] = json!(predicted);
    Ok(Rendered::check(ok, json, text))
}

fn fusion_text(cc: &CentralCharge, o: &FusionOutcome) -> String {
    let l = o.operand;
    let module = match o.operand_kind {
        crate::fusion::ModuleKind::Kac => "K",
        crate::fusion::ModuleKind::Simple => "L",
    };
    let mut text = format!(
        "{}{} x {module}{l}\nclass: {}\nsplits: {}, logarithmic: {}, indecomposable: {}\n",
        header(cc),
        o.generator.name(),
        o.class,
        o.splits,
        o.logarithmic,
        o.indecomposable
            .map_or("unknown".to_string(), |b| b.to_string())
    );
    for n in &o.notes {
        let _ = writeln!(text, "note: {n}");
    }
    text
}
