use serde::Serialize;

use super::classes::{kac_class, GrothendieckClass, SimpleLabel};
use crate::kactable::{central_charge, CentralCharge, KacLabel};

/// The rigid generator on the left of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FusionGenerator {
    K12,
    K21,
}

impl FusionGenerator {
    pub fn name(self) -> &'static str {
        match self {
            FusionGenerator::K12 => "k12",
            FusionGenerator::K21 => "k21",
        }
    }
}

/// Whether the labels of an [`ExactSequence`] denote Kac or simple modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleKind {
    Kac,
    Simple,
}

/// `0 → sub → product → quotient → 0`; `None` stands for the zero module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequence {
    pub kind: ModuleKind,
    pub sub: Option<KacLabel>,
    pub quotient: Option<KacLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionOutcome {
    pub generator: FusionGenerator,
    /// The right-hand factor, a Kac label or the canonical label of a simple module.
    pub operand: KacLabel,
    pub operand_kind: ModuleKind,
    pub class: GrothendieckClass,
    pub sequence: ExactSequence,
    pub splits: bool,
    pub logarithmic: bool,
    /// Only set where indecomposability is known.
    pub indecomposable: Option<bool>,
    pub notes: Vec<String>,
}

fn nonzero(r: i64, s: i64) -> Option<KacLabel> {
    (r >= 1 && s >= 1).then(|| KacLabel::new(r, s))
}

fn swap(l: KacLabel) -> KacLabel {
    KacLabel::new(l.s, l.r)
}

fn mirror_cc(cc: &CentralCharge) -> CentralCharge {
    central_charge(cc.q, cc.p).expect("swapped parameters stay valid")
}

fn mirror_class(cc: &CentralCharge, class: &GrothendieckClass) -> GrothendieckClass {
    let mut out = GrothendieckClass::zero();
    for (l, m) in class.iter() {
        let x = swap(l.label());
        out.insert(SimpleLabel::new(cc, x.r, x.s), m);
    }
    out
}

fn mirror_outcome(cc: &CentralCharge, mut o: FusionOutcome, operand: KacLabel) -> FusionOutcome {
    o.generator = FusionGenerator::K21;
    o.operand = operand;
    o.class = mirror_class(cc, &o.class);
    o.sequence.sub = o.sequence.sub.map(swap);
    o.sequence.quotient = o.sequence.quotient.map(swap);
    o.annotated()
}

impl FusionOutcome {
    fn annotated(mut self) -> Self {
        let mut notes = Vec::new();
        let o = self.operand;
        if self.operand_kind == ModuleKind::Simple && self.sequence.kind == ModuleKind::Kac {
            notes.push(format!("L_({},{}) = K_({},{})", o.r, o.s, o.r, o.s));
        }
        match (
            self.sequence.kind,
            self.sequence.sub,
            self.sequence.quotient,
        ) {
            (ModuleKind::Kac, None, Some(x)) => notes.push(format!(
                "the sub is zero, so the product is K_({},{})",
                x.r, x.s
            )),
            (ModuleKind::Kac, Some(_), Some(_)) if self.splits => {
                notes.push("weights of the two Kac modules are incongruent mod 1".into())
            }
            (ModuleKind::Simple, _, _) => notes.push(format!(
                "direct sum of {} simple module(s)",
                self.class.length()
            )),
            _ => {}
        }
        if !self.splits {
            notes.push(match self.indecomposable {
                Some(true) => "staggered module with unique simple submodule".into(),
                _ => "non-split; indecomposability not established".into(),
            });
            notes.push("L_0 acts non-semisimply".into());
        }
        self.notes = notes;
        self
    }
}

/// `K_{1,2} ⊠ K_{r,s}`, an extension of `K_{r,s+1}` by `K_{r,s−1}`.
pub fn fuse_k12_kac(cc: &CentralCharge, r: i64, s: i64) -> FusionOutcome {
    let q = cc.q;
    let class = kac_class(cc, r, s - 1).add(&kac_class(cc, r, s + 1));
    let sub = nonzero(r, s - 1);
    let splits = s % q != 0;
    let indecomposable = if sub.is_none() {
        Some(true)
    } else if splits {
        Some(false)
    } else if (1..=cc.p).contains(&r) {
        Some(true)
    } else {
        None
    };
    FusionOutcome {
        generator: FusionGenerator::K12,
        operand: KacLabel::new(r, s),
        operand_kind: ModuleKind::Kac,
        class,
        sequence: ExactSequence {
            kind: ModuleKind::Kac,
            sub,
            quotient: Some(KacLabel::new(r, s + 1)),
        },
        splits,
        logarithmic: !splits,
        indecomposable,
        notes: Vec::new(),
    }
    .annotated()
}

/// `K_{2,1} ⊠ K_{r,s}`, an extension of `K_{r+1,s}` by `K_{r−1,s}`.
pub fn fuse_k21_kac(cc: &CentralCharge, r: i64, s: i64) -> FusionOutcome {
    let m = mirror_cc(cc);
    mirror_outcome(cc, fuse_k12_kac(&m, s, r), KacLabel::new(r, s))
}

/// `K_{r,1} ⊠ K_{1,s}`, together with whether the canonical map onto `K_{r,s}` is an
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KacProduct {
    pub r: i64,
    pub s: i64,
    pub class: GrothendieckClass,
    pub isomorphism: bool,
}

pub fn fuse_kr1_k1s(cc: &CentralCharge, r: i64, s: i64) -> KacProduct {
    KacProduct {
        r,
        s,
        class: kac_class(cc, r, s),
        isomorphism: true,
    }
}

fn simple_of(cc: &CentralCharge, l: Option<KacLabel>) -> GrothendieckClass {
    l.map(|l| GrothendieckClass::simple(SimpleLabel::new(cc, l.r, l.s)))
        .unwrap_or_default()
}

/// `K_{1,2} ⊠ L_{r,s}` for the simple module with the given label.
pub fn fuse_k12_simple(cc: &CentralCharge, label: SimpleLabel) -> FusionOutcome {
    let q = cc.q;
    let KacLabel { r, s } = label.label();
    let s0 = s % q;
    if s0 == 0 {
        let mut o = fuse_k12_kac(cc, r, s);
        o.operand_kind = ModuleKind::Simple;
        return o.annotated();
    }
    let (sub, quotient) = if s0 == q - 1 {
        (nonzero(r, s - 1), None)
    } else {
        (nonzero(r, s - 1), nonzero(r, s + 1))
    };
    let class = simple_of(cc, sub).add(&simple_of(cc, quotient));
    let indecomposable = Some(class.length() <= 1);
    FusionOutcome {
        generator: FusionGenerator::K12,
        operand: label.label(),
        operand_kind: ModuleKind::Simple,
        class,
        sequence: ExactSequence {
            kind: ModuleKind::Simple,
            sub,
            quotient,
        },
        splits: true,
        logarithmic: false,
        indecomposable,
        notes: Vec::new(),
    }
    .annotated()
}

/// `K_{2,1} ⊠ L_{r,s}`.
pub fn fuse_k21_simple(cc: &CentralCharge, label: SimpleLabel) -> FusionOutcome {
    let m = mirror_cc(cc);
    let x = swap(label.label());
    let o = fuse_k12_simple(&m, SimpleLabel::new(&m, x.r, x.s));
    mirror_outcome(cc, o, label.label())
}

/// The class of `G ⊠ M` for a module `M` of class `class`, by exactness of `G ⊠ •`.
pub fn fuse_class(
    cc: &CentralCharge,
    generator: FusionGenerator,
    class: &GrothendieckClass,
) -> GrothendieckClass {
    let mut out = GrothendieckClass::zero();
    for (l, m) in class.iter() {
        let o = match generator {
            FusionGenerator::K12 => fuse_k12_simple(cc, l),
            FusionGenerator::K21 => fuse_k21_simple(cc, l),
        };
        out = out.add(&o.class.scaled(m));
    }
    out
}

/// `G ⊠ K_{r,s}` for either generator.
pub fn fuse_kac(cc: &CentralCharge, generator: FusionGenerator, r: i64, s: i64) -> FusionOutcome {
    match generator {
        FusionGenerator::K12 => fuse_k12_kac(cc, r, s),
        FusionGenerator::K21 => fuse_k21_kac(cc, r, s),
    }
}

/// `G ⊠ L` for either generator.
pub fn fuse_simple(
    cc: &CentralCharge,
    generator: FusionGenerator,
    label: SimpleLabel,
) -> FusionOutcome {
    match generator {
        FusionGenerator::K12 => fuse_k12_simple(cc, label),
        FusionGenerator::K21 => fuse_k21_simple(cc, label),
    }
}
