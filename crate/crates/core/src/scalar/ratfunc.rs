//! The rational function field ℚ(q).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{dense, LaurentPoly};
use super::modp;
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials, kept in canonical form: coprime,
/// denominator with lowest exponent 0, integer coefficients with content 1
/// and a positive top coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(LaurentPoly::from_int(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from(LaurentPoly::q_pow(e))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, e)) = den.as_monomial() {
            return Self { num: num.mul_monomial(&c.recip(), -e), den: LaurentPoly::one() };
        }
        let (ln, a) = num.to_dense();
        let (ld, b) = den.to_dense();
        let g = dense::gcd(&a, &b);
        let (a, b) = if g.len() > 1 {
            (dense::divrem(&a, &g).0, dense::divrem(&b, &g).0)
        } else {
            (a, b)
        };
        let num = LaurentPoly::from_dense(ln - ld, &a);
        let den = LaurentPoly::from_dense(0, &b);
        let mut f = den.primitive_factor();
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            f = -f;
        }
        let num = num.scale(&f);
        let den = den.scale(&f);
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `c·q^e` if this is a single Laurent monomial.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        self.as_laurent()?.as_monomial().map(|(c, e)| (c.clone(), e))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn invert_q(&self) -> Self {
        Self::normalize(self.num.invert_q(), self.den.invert_q())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(s), den: self.den.clone() }
    }

    /// Value at `q = t` modulo [`modp::P`]; `None` if the denominator vanishes there.
    pub fn eval_mod(&self, t: u64) -> Option<u64> {
        let n = self.num.eval_mod(t)?;
        let d = self.den.eval_mod(t)?;
        Some(modp::mul(n, modp::inv(d)?))
    }

    /// Text form suitable for a coefficient position: bare for single terms,
    /// parenthesised otherwise.
    pub fn coeff_text(&self) -> String {
        if self.den.is_one() {
            if self.num.len() == 1 {
                self.num.to_string()
            } else {
                format!("({})", self.num.compact())
            }
        } else {
            let n = if self.num.len() == 1 { self.num.to_string() } else { format!("({})", self.num.compact()) };
            let d = if self.den.len() == 1 { self.den.to_string() } else { format!("({})", self.den.compact()) };
            format!("{n}/{d}")
        }
    }

    /// Whether the printed form starts with a minus sign that can be factored out.
    pub fn is_negative_single(&self) -> bool {
        self.den.is_one()
            && self.num.len() == 1
            && self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num.compact(), self.den.compact())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn reduces_common_factor() {
        // (q² − 1)/(q − q⁻¹) = q
        let x = RatFunc::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (-1, -1)])).unwrap();
        assert_eq!(x, RatFunc::q_pow(1));
        assert_eq!(x.denom(), &LaurentPoly::one());
    }

    #[test]
    fn canonical_denominator() {
        let x = RatFunc::new(LaurentPoly::one(), lp(&[(3, -2), (1, 4)])).unwrap();
        assert_eq!(x.denom().min_exp(), Some(0));
        assert!(x.denom().leading_coeff().unwrap().is_positive());
        assert_eq!(x.denom(), &lp(&[(2, 1), (0, -2)]));
        let y = RatFunc::new(LaurentPoly::from_int(-3), lp(&[(3, 6), (1, -12)])).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn inverse_of_one_minus_q_minus_4() {
        let x = RatFunc::from(lp(&[(0, 1), (-4, -1)]));
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sums_with_different_denominators() {
        let a = RatFunc::new(LaurentPoly::one(), lp(&[(1, 1), (0, -1)])).unwrap();
        let b = RatFunc::new(LaurentPoly::one(), lp(&[(1, 1), (0, 1)])).unwrap();
        // 1/(q−1) + 1/(q+1) = 2q/(q²−1)
        let s = &a + &b;
        let expect = RatFunc::new(lp(&[(1, 2)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(s, expect);
        assert!((&s - &expect).is_zero());
    }
}
