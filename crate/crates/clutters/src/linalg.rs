//! Exact rank computation for the boundary/strand matrices.
//!
//! Over GF(p) this is plain modular elimination; over the rationals the rank
//! is computed by fraction-free (Bareiss) elimination on arbitrary-precision
//! integers, so no rounding can ever occur.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: the rationals (characteristic 0) or GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// Parse "0" as the rationals and a prime as GF(p).
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let value: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("invalid field characteristic `{s}`")))?;
        FieldSpec::from_characteristic(value)
    }

    pub fn from_characteristic(p: u64) -> Result<FieldSpec> {
        if p == 0 {
            return Ok(FieldSpec::Rational);
        }
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Rank of a small integer matrix over the chosen field. Rows may be empty.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(p) => rank_mod_p(rows, p as u64),
        FieldSpec::Rational => rank_fraction_free(rows),
    }
}

// the row-update loop reads the pivot row while writing another, so indexing
// stays (clippy::needless_range_loop would force a split borrow)
#[allow(clippy::needless_range_loop)]
fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col] % p, p);
        for x in &mut m[rank] {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_multiple_of(p) {
                let factor = m[r][col] % p;
                for c in col..ncols {
                    let sub = mul_mod(factor, m[rank][c], p);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Bareiss one-step fraction-free elimination; all divisions are exact.
fn rank_fraction_free(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
