//! Exact linear algebra over the rationals, used for rank and
//! specialization checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Rank by fraction-exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        let pivot: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// The Mersenne prime `2^61 - 1`; a full rank modulo it implies a full
/// rank over the rationals.
pub const PRIME: u64 = (1 << 61) - 1;

pub fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

pub fn pow_mod(mut a: u64, mut k: u64) -> u64 {
    let mut acc = 1;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        k >>= 1;
    }
    acc
}

/// Reduction of a rational modulo [`PRIME`]; `None` if the denominator vanishes.
pub fn to_mod(x: &BigRational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let red = |v: &BigInt| -> u64 {
        let r = ((v % &p) + &p) % &p;
        u64::try_from(r).expect("reduced below the prime")
    };
    let den = red(x.denom());
    (den != 0).then(|| mul_mod(red(x.numer()), pow_mod(den, PRIME - 2)))
}

/// Rank of a matrix over the integers modulo [`PRIME`].
pub fn rank_mod(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], PRIME - 2);
        let pivot: Vec<u64> = rows[r].iter().map(|&x| mul_mod(x, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + PRIME - mul_mod(f, y)) % PRIME;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// A random rational `num/den` with small nonzero numerator and denominator.
pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-bound..=bound);
    }
    let den = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_rank() {
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(to_mod(&ratio(1, 2)).map(|h| mul_mod(h, 2)), Some(1));
        assert_eq!(to_mod(&ratio(-1, 1)), Some(PRIME - 1));
    }

    #[test]
    fn rank_of_small_matrices() {
        let r = |v: &[&[i64]]| -> Vec<Vec<BigRational>> {
            v.iter().map(|row| row.iter().map(|&x| ratio(x, 1)).collect()).collect()
        };
        assert_eq!(rank(r(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(r(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(r(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(r(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
    }
}
