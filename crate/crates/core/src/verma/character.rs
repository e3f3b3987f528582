use serde::Serialize;

use super::diagram::{embedding_diagram, EmbeddingDiagram};
use super::partition::{partition_count, partition_numbers};
use crate::kactable::{Case, CentralCharge, KacLabel};

/// Graded dimensions at levels `0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characters {
    pub verma: Vec<u64>,
    /// `V_{r,s}` modulo its singular vector at level `rs`.
    pub kac_quotient: Vec<u64>,
    pub simple: Vec<u64>,
}

pub fn verma_character(n: usize) -> Vec<u64> {
    partition_numbers(n)
}

/// `p(k) − p(k − rs)` for `k ≤ n`.
pub fn kac_quotient_character(r: i64, s: i64, n: usize) -> Vec<u64> {
    (0..=n as i64)
        .map(|k| partition_count(k) - partition_count(k - r * s))
        .collect()
}

/// The embedding diagram deep enough to see every node up to level `n`.
pub fn diagram_to_level(cc: &CentralCharge, label: KacLabel, n: usize) -> EmbeddingDiagram {
    let mut depth = 1;
    loop {
        let d = embedding_diagram(cc, label, depth);
        if d.column(depth).iter().all(|&i| d.nodes[i].level > n as i64) {
            return d;
        }
        depth += 1;
    }
}

/// The simple quotient `L_{r,s}`, by inclusion–exclusion over the embedding diagram.
///
/// In the bulk case the submodule at column `j` is the sum of the two Verma modules of
/// that column, whose intersection is the sum at column `j + 1`, giving an alternating
/// sum over columns. Along a chain the maximal submodule is the first node alone.
pub fn simple_character(cc: &CentralCharge, label: KacLabel, n: usize) -> Vec<u64> {
    let d = diagram_to_level(cc, label, n);
    let sign_of = |col: usize| match d.case {
        Some(Case::Bulk) => {
            if col.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        _ => match col {
            0 => 1,
            1 => -1,
            _ => 0,
        },
    };
    (0..=n as i64)
        .map(|k| {
            let v: i64 = d
                .nodes
                .iter()
                .map(|node| sign_of(node.column) * partition_count(k - node.level) as i64)
                .sum();
            u64::try_from(v).expect("non-negative character")
        })
        .collect()
}

pub fn characters(cc: &CentralCharge, label: KacLabel, n: usize) -> Characters {
    Characters {
        verma: verma_character(n),
        kac_quotient: kac_quotient_character(label.r, label.s, n),
        simple: simple_character(cc, label, n),
    }
}
