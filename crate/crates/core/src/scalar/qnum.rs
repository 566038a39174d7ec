//! Balanced quantum integers `[n]_{q^d}` and their factorials and binomials.

use super::LaurentPoly;
use crate::error::{Error, Result};

/// `[n]_{q^d} = q^{d(n−1)} + q^{d(n−3)} + … + q^{−d(n−1)}`.
pub fn q_int(n: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q_int: n = {n} is negative")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("q_int: d must be nonzero".into()));
    }
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p += &LaurentPoly::q_pow(d * (n - 1 - 2 * k));
    }
    Ok(p)
}

pub fn q_factorial(n: i64, d: i64) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &q_int(k, d)?;
    }
    Ok(acc)
}

/// `[n choose k]_{q^d}` computed as a quotient of quantum factorials.
pub fn q_binom(n: i64, k: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::InvalidArgument(format!("q_binom: need 0 ≤ k ≤ n, got n = {n}, k = {k}")));
    }
    let num = q_factorial(n, d)?;
    let den = &q_factorial(k, d)? * &q_factorial(n - k, d)?;
    Ok(num.div_exact(&den).expect("quantum binomial division is exact"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(q_int(0, 1).unwrap().is_zero());
        assert_eq!(q_int(2, 2).unwrap().to_string(), "q^2 + q^-2");
        assert_eq!(q_int(3, 1).unwrap().to_string(), "q^2 + 1 + q^-2");
        assert_eq!(q_binom(2, 0, 2).unwrap(), LaurentPoly::one());
        assert_eq!(q_binom(2, 1, 2).unwrap().to_string(), "q^2 + q^-2");
        assert_eq!(q_binom(3, 2, 1).unwrap().to_string(), "q^2 + 1 + q^-2");
        assert_eq!(q_binom(4, 2, 1).unwrap().to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(q_int(-1, 1).is_err());
        assert!(q_int(2, 0).is_err());
        assert!(q_binom(2, 3, 1).is_err());
        assert!(q_binom(2, -1, 1).is_err());
    }

    #[test]
    fn pascal_and_symmetry() {
        for d in [1, 2, 3] {
            let v = |e: i64| LaurentPoly::q_pow(d * e);
            for n in 1..=8 {
                for k in 0..=n {
                    let b = q_binom(n, k, d).unwrap();
                    assert_eq!(b.invert_q(), b);
                    assert_eq!(q_binom(n, n - k, d).unwrap(), b);
                    let mut rhs = LaurentPoly::zero();
                    if k < n {
                        rhs += &(&v(k) * &q_binom(n - 1, k, d).unwrap());
                    }
                    if k >= 1 {
                        rhs += &(&v(k - n) * &q_binom(n - 1, k - 1, d).unwrap());
                    }
                    assert_eq!(b, rhs, "n={n} k={k} d={d}");
                }
            }
        }
    }
}
