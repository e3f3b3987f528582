use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// An integer partition with weakly decreasing parts.
///
/// It indexes the monomial `X_{−n_1} ⋯ X_{−n_k}` with `n_1 ≤ ⋯ ≤ n_k`, so the last part
/// is the leftmost (outermost) operator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts `parts` into canonical order.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&x| x > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(1, 1, …, 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn level(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part `n`.
    pub fn mult(&self, n: u32) -> usize {
        self.parts.iter().filter(|&&x| x == n).count()
    }

    /// Adds a part, keeping the order.
    pub fn with_part(&self, n: u32) -> Self {
        let mut parts = self.parts.clone();
        let at = parts.partition_point(|&x| x >= n);
        parts.insert(at, n);
        Partition { parts }
    }

    /// Removes one copy of the part `n`, if present.
    pub fn without_part(&self, n: u32) -> Option<Self> {
        let i = self.parts.iter().position(|&x| x == n)?;
        let mut parts = self.parts.clone();
        parts.remove(i);
        Some(Partition { parts })
    }

    /// Concatenation of the two multisets of parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting from `[n]`.
pub fn level_basis(n: usize) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=rem.min(max)).rev() {
            cur.push(x);
            go(rem - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// The partition numbers `p(0), …, p(n)`.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p
}

/// `p(n)`, with `p(n) = 0` for negative `n`.
pub fn partition_count(n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        partition_numbers(n as usize)[n as usize]
    }
}

/// A level basis with a reverse lookup.
#[derive(Clone, Debug)]
pub struct IndexedBasis {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl IndexedBasis {
    pub fn new(level: usize) -> Self {
        let parts = level_basis(level);
        let index = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        IndexedBasis { parts, index }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }
}
