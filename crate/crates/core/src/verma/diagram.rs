use serde::Serialize;

use crate::exactnum::Rational;
use crate::kactable::{Case, CentralCharge, KacLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramNode {
    /// `None` only for the single node of an irreducible Verma module.
    pub label: Option<KacLabel>,
    pub weight: Rational,
    /// `weight − h_top`.
    pub level: i64,
    /// Number of embedding steps from the top module.
    pub column: usize,
}

/// Submodule embeddings of a Verma module. An arrow `(a, b)` embeds node `a` into node `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingDiagram {
    /// `None` when the Verma module is irreducible.
    pub case: Option<Case>,
    pub nodes: Vec<DiagramNode>,
    pub arrows: Vec<(usize, usize)>,
}

impl EmbeddingDiagram {
    /// Node indices in column `j`.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes[i].column == j)
            .collect()
    }

    pub fn levels(&self) -> Vec<i64> {
        self.nodes.iter().map(|n| n.level).collect()
    }
}

/// The embedding diagram of `V_{r,s}` with `depth` columns below the top.
/// The label is first brought to canonical form.
pub fn embedding_diagram(cc: &CentralCharge, label: KacLabel, depth: usize) -> EmbeddingDiagram {
    let (p, q) = (cc.p, cc.q);
    let top = cc.normalize_label(label.r, label.s).0;
    let (r, s) = (top.r, top.s);
    let case = cc.case_of(top);
    let n = s.div_euclid(q);
    let s0 = s.rem_euclid(q);
    let h0 = cc.h(r, s);
    let node = |l: KacLabel, column: usize| {
        let weight = cc.h(l.r, l.s);
        let level = (&weight - &h0).to_i64().expect("integral level");
        DiagramNode {
            label: Some(l),
            weight,
            level,
            column,
        }
    };
    let mut nodes = vec![node(top, 0)];
    let mut arrows = Vec::new();
    match case {
        Case::Bulk => {
            // Column j holds U_j (index 2j−1) and D_j (index 2j).
            for j in 1..=depth as i64 {
                let k = (j + 1) / 2;
                let (u, d) = if j % 2 == 1 {
                    ((p - r, (n + 2 * k - 1) * q + s0), (r, (n + 2 * k) * q - s0))
                } else {
                    ((p - r, (n + 2 * k + 1) * q - s0), (r, (n + 2 * k) * q + s0))
                };
                nodes.push(node(KacLabel::new(u.0, u.1), j as usize));
                nodes.push(node(KacLabel::new(d.0, d.1), j as usize));
                let (ui, di) = (2 * j as usize - 1, 2 * j as usize);
                if j == 1 {
                    arrows.extend([(ui, 0), (di, 0)]);
                } else {
                    arrows.extend([(ui, ui - 2), (ui, di - 2), (di, di - 2), (di, ui - 2)]);
                }
            }
        }
        Case::BoundaryS | Case::BoundaryR | Case::Corner => {
            for j in 1..=depth as i64 {
                let l = match case {
                    Case::BoundaryS => {
                        let k = (j + 1) / 2;
                        if j % 2 == 1 {
                            KacLabel::new(p, (n + 2 * k) * q - s0)
                        } else {
                            KacLabel::new(p, (n + 2 * k) * q + s0)
                        }
                    }
                    Case::BoundaryR => {
                        if j % 2 == 1 {
                            KacLabel::new(p - r, (n + j) * q)
                        } else {
                            KacLabel::new(r, (n + j) * q)
                        }
                    }
                    _ => KacLabel::new(p, (n + 2 * j) * q),
                };
                nodes.push(node(l, j as usize));
                arrows.push((j as usize, j as usize - 1));
            }
        }
    }
    EmbeddingDiagram {
        case: Some(case),
        nodes,
        arrows,
    }
}

/// The diagram of `V_h` for an arbitrary weight: the Kac-table diagram when `h` is a
/// Kac weight, a single node otherwise.
pub fn embedding_diagram_for_weight(
    cc: &CentralCharge,
    h: &Rational,
    depth: usize,
) -> EmbeddingDiagram {
    match cc.kac_label_of(h) {
        Some(l) => embedding_diagram(cc, l, depth),
        None => EmbeddingDiagram {
            case: None,
            nodes: vec![DiagramNode {
                label: None,
                weight: h.clone(),
                level: 0,
                column: 0,
            }],
            arrows: Vec::new(),
        },
    }
}
