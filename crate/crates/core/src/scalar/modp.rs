//! Arithmetic modulo the Mersenne prime 2^61 − 1, used to evaluate
//! Laurent-polynomial matrices at sample points of `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + ((x >> 122) as u64);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

pub fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> Option<u64> {
    if a.is_multiple_of(P) {
        None
    } else {
        Some(pow(a % P, P - 2))
    }
}

pub fn from_bigint(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = if m < BigInt::zero() { m + BigInt::from(P) } else { m };
    m.to_u64().expect("residue fits in u64")
}

pub fn from_rational(c: &BigRational) -> Option<u64> {
    Some(mul(from_bigint(c.numer()), inv(from_bigint(c.denom()))?))
}

/// Rank of a dense matrix over 𝔽_P; consumes the rows.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let pinv = inv(rows[rank][col]).unwrap();
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let f = mul(f, pinv);
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = sub(*x, mul(f, *p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Deterministic sample points for `q`, well away from roots of unity of small order.
pub fn sample_point(i: usize) -> u64 {
    const SEEDS: [u64; 6] = [
        1_234_567_891_011,
        987_654_321_123_457,
        31_415_926_535_897,
        271_828_182_845_904,
        161_803_398_874_989,
        141_421_356_237_309,
    ];
    if i < SEEDS.len() {
        SEEDS[i]
    } else {
        pow(3, 1000 + i as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_reduce() {
        for a in [1u64, 2, 3, 12345, P - 1] {
            assert_eq!(mul(a, inv(a).unwrap()), 1);
        }
        assert_eq!(reduce((P as u128) * (P as u128)), 0);
        assert_eq!(mul(P - 1, P - 1), 1);
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank(vec![vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn negative_rationals() {
        let c = BigRational::new((-1).into(), 2.into());
        assert_eq!(add(from_rational(&c).unwrap(), inv(2).unwrap()), 0);
    }
}
