//! Exact matrix rank for boundary maps.
//!
//! Columns are given sparsely as `(row, coefficient)` lists with
//! coefficients in `{-1, +1}` (or any small integer). Over GF(2) the
//! coefficients are reduced mod 2 and columns are packed into words; over
//! the rationals elimination is fraction-free on integers, first in `i64`
//! with overflow checks and, if that ever overflows, again with
//! arbitrary-precision integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseColumn = Vec<(usize, i64)>;

/// Rank over GF(2).
pub fn rank_gf2(rows: usize, columns: &[SparseColumn]) -> usize {
    let words = rows.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut bits = vec![0u64; words];
        for &(r, c) in col {
            if c.rem_euclid(2) == 1 {
                bits[r >> 6] ^= 1 << (r & 63);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in bits.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(lead, bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Rank over the rationals.
pub fn rank_rational(columns: &[SparseColumn]) -> usize {
    let small: Vec<Vec<(usize, i64)>> = columns.to_vec();
    match rank_integer(small) {
        Some(r) => r,
        None => {
            let big = columns.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
            rank_integer(big).expect("arbitrary precision never overflows")
        }
    }
}

trait Coefficient: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    /// `a * b - c * d`, or `None` on overflow.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    /// `a * b`, or `None` on overflow.
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn neg(a: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn normalize_sign(column: &mut [(usize, Self)]);
}

impl Coefficient for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &i64, b: &i64, c: &i64, d: &i64) -> Option<i64> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn mul(a: &i64, b: &i64) -> Option<i64> {
        a.checked_mul(*b)
    }
    fn neg(a: &i64) -> Option<i64> {
        a.checked_neg()
    }
    fn gcd(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &i64) -> i64 {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn normalize_sign(column: &mut [(usize, i64)]) {
        if column.last().is_some_and(|(_, v)| *v < 0) {
            column.iter_mut().for_each(|(_, v)| *v = -*v);
        }
    }
}

impl Coefficient for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Option<BigInt> {
        Some(a * b - c * d)
    }
    fn mul(a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn neg(a: &BigInt) -> Option<BigInt> {
        Some(-a)
    }
    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &BigInt) -> BigInt {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn normalize_sign(column: &mut [(usize, BigInt)]) {
        if column.last().is_some_and(|(_, v)| v.is_negative()) {
            column.iter_mut().for_each(|(_, v)| *v = -v.clone());
        }
    }
}

/// Fraction-free column reduction keyed by the largest nonzero row.
fn rank_integer<T: Coefficient>(columns: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        col.sort_by_key(|(r, _)| *r);
        col.retain(|(_, v)| !v.is_zero());
        while let Some(&(lead, _)) = col.last() {
            let Some(pivot) = pivots.get(&lead) else {
                T::normalize_sign(&mut col);
                pivots.insert(lead, col);
                rank += 1;
                break;
            };
            let a = col.last().unwrap().1.clone();
            let p = pivot.last().unwrap().1.clone();
            col = combine(&col, &a, pivot, &p)?;
        }
    }
    Some(rank)
}

/// `p * col - a * pivot`, divided by the content of the result.
fn combine<T: Coefficient>(col: &[(usize, T)], a: &T, pivot: &[(usize, T)], p: &T) -> Option<Vec<(usize, T)>> {
    let mut out: Vec<(usize, T)> = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < pivot.len() {
        let ri = col.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let rj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (row, value) = if ri == rj {
            let v = T::cross(p, &col[i].1, a, &pivot[j].1)?;
            i += 1;
            j += 1;
            (ri, v)
        } else if ri < rj {
            let v = T::mul(p, &col[i].1)?;
            i += 1;
            (ri, v)
        } else {
            let v = T::neg(&T::mul(a, &pivot[j].1)?)?;
            j += 1;
            (rj, v)
        };
        if !value.is_zero() {
            out.push((row, value));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd(v);
        }
        if !g.is_unit() && !g.is_zero() {
            for e in &mut out {
                e.1 = e.1.div_exact(&g);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(cols: &[&[i64]]) -> Vec<SparseColumn> {
        cols.iter().map(|c| c.iter().enumerate().filter(|(_, &v)| v != 0).map(|(r, &v)| (r, v)).collect()).collect()
    }

    #[test]
    fn ranks_differ_by_characteristic() {
        // columns (1,1), (1,-1): rank 2 over Q, rank 1 over GF(2)
        let m = dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_gf2(2, &m), 1);
    }

    #[test]
    fn triangle_boundary() {
        // ∂ of the three edges of a triangle onto its vertices has rank 2
        let m = dense(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_gf2(3, &m), 2);
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = dense(&[&[big, 3], &[big - 1, 7], &[5, big]]);
        assert_eq!(rank_rational(&m), 2);
    }
}
