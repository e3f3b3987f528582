use serde::Serialize;

use crate::kactable::{Case, CentralCharge, KacLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StructureKind {
    FeiginFuchs,
    Kac,
}

/// Composition factors `L_{r,s}` of a module and the arrows between them. An arrow
/// `(a, b)` means Virasoro modes move vectors of factor `a` into factor `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleStructure {
    pub kind: StructureKind,
    pub case: Case,
    /// Labels as they appear in the diagram, before normalization.
    pub labels: Vec<KacLabel>,
    /// Canonical labels of the factors, in the same order.
    pub factors: Vec<KacLabel>,
    pub arrows: Vec<(usize, usize)>,
    pub length: usize,
}

impl ModuleStructure {
    fn build(
        cc: &CentralCharge,
        kind: StructureKind,
        case: Case,
        labels: Vec<KacLabel>,
        arrows: Vec<(usize, usize)>,
    ) -> Self {
        let factors = labels
            .iter()
            .map(|l| cc.normalize_label(l.r, l.s).0)
            .collect();
        let length = labels.len();
        ModuleStructure {
            kind,
            case,
            labels,
            factors,
            arrows,
            length,
        }
    }

    pub fn reversed(mut self) -> Self {
        for a in self.arrows.iter_mut() {
            *a = (a.1, a.0);
        }
        self
    }
}

/// Splits `x` as `k·m + x0` with `1 ≤ x0 ≤ m`; `x0 = m` marks a multiple of `m`.
fn split(x: i64, m: i64) -> (i64, i64) {
    let x0 = (x - 1).rem_euclid(m) + 1;
    ((x - x0) / m, x0)
}

fn chain_arrows(len: usize, from_even: bool) -> Vec<(usize, usize)> {
    let mut arrows = Vec::new();
    for i in 0..len {
        if (i % 2 == 0) == from_even {
            if i > 0 {
                arrows.push((i, i - 1));
            }
            if i + 1 < len {
                arrows.push((i, i + 1));
            }
        }
    }
    arrows
}

/// Composition structure of the Kac module `K_{R,S}`, with `R, S ≥ 1`.
pub fn kac_structure(cc: &CentralCharge, big_r: i64, big_s: i64) -> ModuleStructure {
    assert!(big_r >= 1 && big_s >= 1, "Kac labels start at 1");
    let (p, q) = (cc.p, cc.q);
    let (m, r) = split(big_r, p);
    let (n, s) = split(big_s, q);
    // With r = p (resp. s = q) the module is K_{(m+1)p, ·} in the boundary notation.
    let l = KacLabel::new;
    let build =
        |case, labels, arrows| ModuleStructure::build(cc, StructureKind::Kac, case, labels, arrows);
    match (r == p, s == q) {
        (false, false) => {
            if m <= n {
                // A_0 … A_{2m+1} in one column, B_1 … B_{2m} beside them.
                let mut labels = vec![l(r, (n - m) * q + s)];
                for j in 1..=m {
                    labels.push(l(r, (n - m + 2 * j) * q - s));
                    labels.push(l(r, (n - m + 2 * j) * q + s));
                }
                labels.push(l(r, (n + m + 2) * q - s));
                let a = |i: usize| i;
                let b0 = labels.len();
                for j in 1..=m {
                    labels.push(l(p - r, (n - m + 2 * j - 1) * q + s));
                    labels.push(l(p - r, (n - m + 2 * j + 1) * q - s));
                }
                let b = |i: usize| b0 + i - 1;
                let na = 2 * m as usize + 1;
                let nb = 2 * m as usize;
                let mut arrows = vec![(a(0), a(1))];
                for i in (2..=na).step_by(2) {
                    if i < na {
                        arrows.extend([(a(i), a(i - 1)), (a(i), a(i + 1))]);
                    }
                }
                for i in 1..=nb {
                    arrows.extend([(b(i), a(i - 1)), (b(i), a(i + 1))]);
                    if i % 2 == 1 {
                        if i > 1 {
                            arrows.push((b(i), b(i - 1)));
                        }
                        if i < nb {
                            arrows.push((b(i), b(i + 1)));
                        }
                    }
                }
                build(Case::Bulk, labels, arrows)
            } else {
                // C_0 … C_{2n} in one column, D_1 … D_{2n+1} beside them.
                let mut labels = vec![l(p - r, (m - n + 1) * q - s)];
                for j in 1..=n {
                    labels.push(l(p - r, (m - n + 2 * j - 1) * q + s));
                    labels.push(l(p - r, (m - n + 2 * j + 1) * q - s));
                }
                let d0 = labels.len();
                for j in 1..=n + 1 {
                    labels.push(l(r, (m - n + 2 * j) * q - s));
                    if j <= n {
                        labels.push(l(r, (m - n + 2 * j) * q + s));
                    }
                }
                let c = |i: usize| i;
                let d = |i: usize| d0 + i - 1;
                let nc = 2 * n as usize;
                let nd = 2 * n as usize + 1;
                let mut arrows = vec![(c(0), d(1))];
                for i in 1..=nc {
                    if i % 2 == 1 {
                        arrows.extend([(c(i), c(i - 1)), (c(i), d(i + 1))]);
                        if i > 1 {
                            arrows.push((c(i), d(i - 1)));
                        }
                        if i < nc {
                            arrows.push((c(i), c(i + 1)));
                        }
                    } else {
                        arrows.extend([(c(i), d(i - 1)), (c(i), d(i + 1))]);
                    }
                }
                for i in (2..nd).step_by(2) {
                    arrows.extend([(d(i), d(i - 1)), (d(i), d(i + 1))]);
                }
                build(Case::Bulk, labels, arrows)
            }
        }
        (true, false) => {
            let m = m + 1;
            if m <= n {
                let mut labels = Vec::new();
                for j in 0..m {
                    labels.push(l(p, (n - m + 2 * j + 1) * q + s));
                    labels.push(l(p, (n - m + 2 * j + 3) * q - s));
                }
                let len = labels.len();
                build(Case::BoundaryS, labels, chain_arrows(len, true))
            } else {
                let mut labels = vec![l(p, (m - n + 1) * q - s)];
                for j in 0..n {
                    labels.push(l(p, (m - n + 2 * j + 1) * q + s));
                    labels.push(l(p, (m - n + 2 * j + 3) * q - s));
                }
                let len = labels.len();
                build(Case::BoundaryS, labels, chain_arrows(len, false))
            }
        }
        (false, true) => {
            let n = n + 1;
            if m < n {
                let mut labels = Vec::new();
                for j in 0..=m {
                    labels.push(l(r, (n - m + 2 * j) * q));
                    if j < m {
                        labels.push(l(p - r, (n - m + 2 * j + 1) * q));
                    }
                }
                let len = labels.len();
                build(Case::BoundaryR, labels, chain_arrows(len, false))
            } else {
                let mut labels = Vec::new();
                for j in 0..n {
                    labels.push(l(p - r, (m - n + 2 * j + 1) * q));
                    labels.push(l(r, (m - n + 2 * j + 2) * q));
                }
                let len = labels.len();
                build(Case::BoundaryR, labels, chain_arrows(len, true))
            }
        }
        (true, true) => {
            let (m, n) = (m + 1, n + 1);
            let labels = (0..m.min(n))
                .map(|j| l(p, ((m - n).abs() + 2 * j + 1) * q))
                .collect();
            build(Case::Corner, labels, Vec::new())
        }
    }
}

/// Composition structure of the Feigin–Fuchs module `F_{r,s}`, listing the factors whose
/// lowest weight is at most `max_level` above the bottom of the module.
///
/// `F_{r,s}` is matched to one of the two Fock modules with lowest weight `h_{r,s}`:
/// the one with a canonical label, or its contragredient, whose arrows are reversed.
pub fn ff_structure(cc: &CentralCharge, r: i64, s: i64, max_level: usize) -> ModuleStructure {
    let head = cc.normalize_label(r, s).0;
    let st = ff_canonical(cc, head, max_level);
    if r * cc.q - s * cc.p > 0 {
        st.reversed()
    } else {
        st
    }
}

fn ff_canonical(cc: &CentralCharge, head: KacLabel, max_level: usize) -> ModuleStructure {
    let (p, q) = (cc.p, cc.q);
    let (r, big_s) = (head.r, head.s);
    let n = big_s.div_euclid(q);
    let s = big_s.rem_euclid(q);
    let h0 = cc.h(r, big_s);
    let within = |l: KacLabel| {
        (cc.h(l.r, l.s) - &h0)
            .to_i64()
            .is_some_and(|x| x <= max_level as i64)
    };
    let l = KacLabel::new;
    let case = cc.case_of(head);
    let (labels, arrows) = match case {
        Case::Bulk => {
            // Head, then T_0, U_0, T_1, U_1, … column by column.
            let mut labels = vec![head];
            let mut cols = Vec::new();
            let mut i = 0i64;
            loop {
                let t = if i == 0 {
                    l(p - r, (n + 1) * q + s)
                } else if i % 2 == 1 {
                    l(p - r, (n + i + 2) * q - s)
                } else {
                    l(p - r, (n + i + 1) * q + s)
                };
                let u = if i % 2 == 0 {
                    l(r, (n + i + 2) * q - s)
                } else {
                    l(r, (n + i + 1) * q + s)
                };
                let (wt, wu) = (within(t), within(u));
                if !wt && !wu {
                    break;
                }
                cols.push((
                    wt.then_some(labels.len()),
                    t,
                    wu.then(|| labels.len() + wt as usize),
                    u,
                ));
                if wt {
                    labels.push(t);
                }
                if wu {
                    labels.push(u);
                }
                i += 1;
            }
            let tix = |i: usize| cols.get(i).and_then(|c| c.0);
            let uix = |i: usize| cols.get(i).and_then(|c| c.2);
            let mut arrows = Vec::new();
            let mut push = |a: Option<usize>, b: Option<usize>| {
                if let (Some(a), Some(b)) = (a, b) {
                    arrows.push((a, b));
                }
            };
            push(Some(0), uix(0));
            push(tix(0), Some(0));
            for i in 0..cols.len() {
                let prev = i.checked_sub(1);
                if i % 2 == 0 {
                    push(tix(i), prev.and_then(tix));
                    push(tix(i), tix(i + 1));
                } else {
                    push(uix(i), uix(i - 1));
                    push(uix(i), uix(i + 1));
                }
                push(tix(i), prev.and_then(uix));
                push(tix(i), uix(i + 1));
            }
            (labels, arrows)
        }
        Case::BoundaryS | Case::BoundaryR | Case::Corner => {
            let mut labels = vec![head];
            let mut j = 1i64;
            loop {
                let next = match case {
                    Case::BoundaryS => {
                        let k = (j + 1) / 2;
                        if j % 2 == 1 {
                            l(p, (n + 2 * k) * q - s)
                        } else {
                            l(p, (n + 2 * k) * q + s)
                        }
                    }
                    Case::BoundaryR => {
                        if j % 2 == 1 {
                            l(p - r, (n + j) * q)
                        } else {
                            l(r, (n + j) * q)
                        }
                    }
                    _ => l(p, (n + 2 * j) * q),
                };
                if !within(next) {
                    break;
                }
                labels.push(next);
                j += 1;
            }
            let arrows = match case {
                Case::BoundaryS => chain_arrows(labels.len(), true),
                Case::BoundaryR => chain_arrows(labels.len(), false),
                _ => Vec::new(),
            };
            (labels, arrows)
        }
    };
    ModuleStructure::build(cc, StructureKind::FeiginFuchs, case, labels, arrows)
}
