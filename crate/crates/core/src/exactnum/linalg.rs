//! Exact linear algebra: fraction-free kernels over ℤ and echelon forms over any exact field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadExt, Rational};

/// The operations an exact field needs for row reduction.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip().expect("inverting zero")
    }
}

/// The zero and one use `D = 1`; rational values combine with every field.
impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::zero(1)
    }
    fn one() -> Self {
        QuadExt::one(1)
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        QuadExt::inv(self).expect("inverting zero")
    }
}

/// A row space kept in reduced echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon<T: Field> {
    ncols: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for j in 0..self.ncols {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&f.mul(&row[j]));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for j in 0..self.ncols {
                if !v[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&v[j]));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }
}

/// Rank of a matrix given as rows.
pub fn rank<T: Field>(rows: &[Vec<T>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Kernel of the matrix (given as rows) by reduction to RREF over the field.
/// One basis vector per free column, with a 1 in that column.
pub fn kernel_rref<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![T::zero(); ncols];
            x[f] = T::one();
            for (row, &pc) in e.rows.iter().zip(&e.pivots) {
                if !row[f].is_zero() {
                    x[pc] = T::zero().sub(&row[f]);
                }
            }
            x
        })
        .collect()
}

/// Kernel of a rational matrix by fraction-free (Bareiss) elimination on integer rows.
///
/// Each row is first cleared of denominators. The basis has one vector per free column,
/// with a 1 in that column and zeros in the other free columns, so it agrees with
/// [`kernel_rref`] vector for vector.
pub fn kernel_bareiss(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut k = 0;
    for c in 0..ncols {
        if k == m {
            break;
        }
        let Some(pr) = (k..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(k, pr);
        for i in k + 1..m {
            for j in c + 1..ncols {
                let v = &a[k][c] * &a[i][j] - &a[i][c] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        // Rows above the pivot are untouched: back substitution handles them.
        prev = a[k][c].clone();
        pivots.push(c);
        k += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (ri, &pc) in pivots.iter().enumerate().rev() {
                let row = &a[ri];
                let mut acc = Rational::zero();
                for j in pc + 1..ncols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += &(&Rational::from_bigint(row[j].clone()) * &x[j]);
                    }
                }
                x[pc] = -(acc / Rational::from_bigint(row[pc].clone()));
            }
            x
        })
        .collect()
}

/// Primes below `2^31`, largest first.
fn primes_below_2_31() -> impl Iterator<Item = u64> {
    let is_prime = |n: u64| {
        n % 2 == 1
            && (3..)
                .step_by(2)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    };
    (1u64 << 30..1u64 << 31).rev().filter(move |&n| is_prime(n))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form mod `p`: pivot columns, the reduced pivot rows, and the
/// indices of the input rows that raised the rank.
fn rref_mod(rows: &[Vec<u64>], ncols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>, Vec<usize>) {
    let mut a: Vec<(usize, Vec<u64>)> = rows.iter().cloned().enumerate().collect();
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..ncols {
        let Some(pr) = (k..a.len()).find(|&i| a[i].1[c] != 0) else {
            continue;
        };
        a.swap(k, pr);
        let inv = inv_mod(a[k].1[c], p);
        for x in a[k].1.iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = a.split_at_mut(k);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row");
        for (_, row) in head.iter_mut().chain(tail.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = p - f;
            for j in c..ncols {
                if pivot.1[j] != 0 {
                    row[j] = (row[j] + g * pivot.1[j]) % p;
                }
            }
        }
        pivots.push(c);
        k += 1;
        if k == a.len() {
            break;
        }
    }
    a.truncate(k);
    let used = a.iter().map(|(i, _)| *i).collect();
    (pivots, a.into_iter().map(|(_, r)| r).collect(), used)
}

/// `a/b` with `|a|, b ≤ √(m/2)` and `a ≡ b·x (mod m)`, if it exists.
fn rational_reconstruction(x: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Rational::from_bigints(r1, t1).ok()
}

/// Kernel of a rational matrix by elimination modulo word-sized primes, Chinese
/// remaindering and rational reconstruction. Candidates are checked against every row
/// in exact arithmetic, so the result is the exact kernel, in the basis of
/// [`kernel_bareiss`]. Falls back to [`kernel_bareiss`] if no candidate verifies.
pub fn kernel_multimodular(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let sparse: Vec<Vec<(usize, &BigInt)>> = ints
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let reduce = |p: u64, idx: &[usize]| -> Vec<Vec<u64>> {
        let bp = BigInt::from(p);
        idx.iter()
            .map(|&i| {
                let mut row = vec![0u64; ncols];
                for &(j, x) in &sparse[i] {
                    row[j] = u64::try_from(x.mod_floor(&bp)).expect("residue fits");
                }
                row
            })
            .collect()
    };
    let all: Vec<usize> = (0..ints.len()).collect();
    let mut subset = all.clone();
    // Pivot pattern, free columns, residues of the pivot entries, and the modulus.
    let mut state: Option<(Vec<usize>, Vec<usize>, Vec<Vec<BigInt>>, BigInt)> = None;
    for p in primes_below_2_31().take(64) {
        let (pivots, rref, used) = rref_mod(&reduce(p, &subset), ncols, p);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        // Entry [f][i] is the pivot-column-i coordinate of the kernel vector for free column f.
        let residues: Vec<Vec<BigInt>> = free
            .iter()
            .map(|&f| {
                rref.iter()
                    .map(|row| BigInt::from((p - row[f]) % p))
                    .collect()
            })
            .collect();
        let bp = BigInt::from(p);
        let better = match &state {
            None => true,
            Some((piv, ..)) => {
                pivots.len() > piv.len() || (pivots.len() == piv.len() && pivots < *piv)
            }
        };
        if better {
            if subset.len() == all.len() {
                subset = used.iter().map(|&i| subset[i]).collect();
            }
            state = Some((pivots, free, residues, bp));
        } else {
            let (piv, _, acc, m) = state.as_mut().expect("state");
            if pivots != *piv {
                continue;
            }
            let m_inv = BigInt::from(inv_mod(u64::try_from(m.mod_floor(&bp)).expect("fits"), p));
            for (va, vb) in acc.iter_mut().zip(&residues) {
                for (a, b) in va.iter_mut().zip(vb) {
                    let t = ((b - &*a) * &m_inv).mod_floor(&bp);
                    *a += &*m * t;
                }
            }
            *m *= &bp;
        }
        let (piv, free, acc, m) = state.as_ref().expect("state");
        if let Some(kernel) = reconstruct(piv, free, acc, m, ncols) {
            if kernel.iter().all(|x| annihilates(&ints, x)) {
                return kernel;
            }
            if subset.len() < all.len() {
                // The retained rows may have lost rank at an unlucky first prime.
                subset = all.clone();
                state = None;
            }
        }
    }
    kernel_bareiss(rows, ncols)
}

fn reconstruct(
    pivots: &[usize],
    free: &[usize],
    acc: &[Vec<BigInt>],
    m: &BigInt,
    ncols: usize,
) -> Option<Vec<Vec<Rational>>> {
    free.iter()
        .zip(acc)
        .map(|(&f, coords)| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (&pc, a) in pivots.iter().zip(coords) {
                x[pc] = rational_reconstruction(a, m)?;
            }
            Some(x)
        })
        .collect()
}

fn annihilates(rows: &[Vec<BigInt>], x: &[Rational]) -> bool {
    let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let xi: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    rows.iter().all(|r| {
        r.iter()
            .zip(&xi)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(BigInt::zero(), |s, (a, b)| s + a * b)
            .is_zero()
    })
}
