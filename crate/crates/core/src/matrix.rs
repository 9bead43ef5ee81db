//! Dense matrices over `Q(√3)` and their exact rank.
//!
//! Rank is computed by fraction-free (Bareiss) elimination over the ring
//! `Z[√3]` after clearing each row's denominators. Before that a cheap
//! modular image is tried: reducing modulo a prime `p` in which 3 is a square
//! is a ring map `Z[√3] -> F_p`, so its rank is a lower bound for the true
//! rank. When that bound already equals the row count the answer is exact.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::field::QSqrt3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QSqrt3>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![QSqrt3::default(); rows * cols],
        }
    }

    /// Panics unless every row has the same length.
    pub fn from_rows(rows: Vec<Vec<QSqrt3>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &QSqrt3 {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: QSqrt3) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[QSqrt3] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Float view, for display only.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(QSqrt3::to_f64).collect())
            .collect()
    }
}

/// Rank over `Q(√3)`.
pub fn exact_rank(m: &ExactMatrix) -> usize {
    let rows = integer_rows(m);
    if m.rows <= m.cols && modular_rank(&rows, m.cols) == m.rows {
        return m.rows;
    }
    bareiss_rank(rows, m.cols)
}

/// Element of `Z[√3]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Zs {
    a: BigInt,
    b: BigInt,
}

impl Zs {
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn mul(&self, o: &Zs) -> Zs {
        Zs {
            a: &self.a * &o.a + 3 * (&self.b * &o.b),
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn sub(self, o: Zs) -> Zs {
        Zs {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }

    /// Division known to be exact in `Z[√3]`.
    fn div_exact(&self, d: &Zs) -> Zs {
        if d.b.is_zero() {
            return Zs {
                a: &self.a / &d.a,
                b: &self.b / &d.a,
            };
        }
        let conj = Zs {
            a: d.a.clone(),
            b: -d.b.clone(),
        };
        let norm = &d.a * &d.a - 3 * (&d.b * &d.b);
        let num = self.mul(&conj);
        debug_assert!(num.a.is_multiple_of(&norm) && num.b.is_multiple_of(&norm));
        Zs {
            a: num.a / &norm,
            b: num.b / norm,
        }
    }
}

/// Each row multiplied by the lcm of all denominators in it.
fn integer_rows(m: &ExactMatrix) -> Vec<Vec<Zs>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::from(1), |acc, x| {
                acc.lcm(x.a().denom()).lcm(x.b().denom())
            });
            row.iter()
                .map(|x| Zs {
                    a: x.a().numer() * (&l / x.a().denom()),
                    b: x.b().numer() * (&l / x.b().denom()),
                })
                .collect()
        })
        .collect()
}

fn bareiss_rank(mut rows: Vec<Vec<Zs>>, cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    let mut prev = Zs {
        a: BigInt::from(1),
        b: BigInt::zero(),
    };
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for k in c + 1..cols {
                let x = pivot.mul(&row[k]).sub(factor.mul(&pivot_row[k]));
                row[k] = x.div_exact(&prev);
            }
            row[c] = Zs {
                a: BigInt::zero(),
                b: BigInt::zero(),
            };
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

struct ModPrime {
    p: u64,
    sqrt3: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let small = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &small {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &small {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime below 2^61 with `p ≡ 11 (mod 12)`, so 3 is a square and
/// `√3 = 3^((p+1)/4)`.
fn mod_prime() -> &'static ModPrime {
    static PRIME: OnceLock<ModPrime> = OnceLock::new();
    PRIME.get_or_init(|| {
        let mut p = (1u64 << 61) - 1;
        p -= (p + 1) % 12;
        loop {
            if is_prime(p) {
                let s = pow_mod(3, (p + 1) / 4, p);
                if mul_mod(s, s, p) == 3 {
                    return ModPrime { p, sqrt3: s };
                }
            }
            p -= 12;
        }
    })
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn modular_rank(rows: &[Vec<Zs>], cols: usize) -> usize {
    let ModPrime { p, sqrt3 } = *mod_prime();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (reduce(&x.a, p) + mul_mod(reduce(&x.b, p), sqrt3, p)) % p)
                .collect()
        })
        .collect();
    let n = m.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(piv) = (rank..n).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for k in c..cols {
                let sub = mul_mod(f, pivot_row[k], p);
                row[k] = (row[k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Bareiss rank alone, bypassing the modular shortcut.
pub fn exact_rank_bareiss(m: &ExactMatrix) -> usize {
    bareiss_rank(integer_rows(m), m.cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> QSqrt3 {
        QSqrt3::from_ratios(a, 1, b, 1)
    }

    #[test]
    fn identity_has_full_rank() {
        let m = ExactMatrix::from_rows(vec![vec![q(1, 0), q(0, 0)], vec![q(0, 0), q(1, 0)]]);
        assert_eq!(exact_rank(&m), 2);
        assert_eq!(exact_rank_bareiss(&m), 2);
    }

    #[test]
    fn proportional_rows() {
        let m = ExactMatrix::from_rows(vec![vec![q(1, 0), q(0, 1)], vec![q(2, 0), q(0, 2)]]);
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn rows_proportional_by_irrational_factor() {
        // Second row is (1 + √3) times the first.
        let m = ExactMatrix::from_rows(vec![
            vec![q(1, 0), q(2, 1)],
            vec![q(1, 1), q(5, 3)],
        ]);
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn modulus_is_a_valid_prime() {
        let mp = mod_prime();
        assert!(is_prime(mp.p));
        assert_eq!(mp.p % 12, 11);
        assert_eq!(mul_mod(mp.sqrt3, mp.sqrt3, mp.p), 3);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(exact_rank(&ExactMatrix::zeros(0, 4)), 0);
        assert_eq!(exact_rank(&ExactMatrix::zeros(3, 0)), 0);
    }
}
