//! Laurent polynomials in `q` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;

/// Sparse Laurent polynomial: exponent of `q` to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiply by the monomial `c·q^e`.
    pub fn mul_monomial(&self, c: &BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect(),
        }
    }

    /// The substitution `q ↦ q⁻¹`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = t` modulo the Mersenne prime used throughout; `None` if a
    /// coefficient denominator vanishes.
    pub fn eval_mod(&self, t: u64) -> Option<u64> {
        let tinv = modp::inv(t)?;
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let base = if *e >= 0 { t } else { tinv };
            let pw = modp::pow(base, e.unsigned_abs());
            acc = modp::add(acc, modp::mul(modp::from_rational(c)?, pw));
        }
        Some(acc)
    }

    /// Dense coefficients of `q^{-lo}·self`, lowest degree first.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigRational>) {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return (0, Vec::new()),
        };
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, v: &[BigRational]) -> Self {
        Self::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c.clone())),
        )
    }

    /// Exact quotient in the Laurent ring, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            return Some(self.mul_monomial(&c.recip(), -e));
        }
        let (la, a) = self.to_dense();
        let (lb, b) = d.to_dense();
        let (quo, rem) = dense::divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(la - lb, &quo))
    }

    /// Least common multiple of the coefficient denominators divided by the gcd
    /// of the numerators; multiplying by it gives a primitive integer polynomial.
    pub(crate) fn primitive_factor(&self) -> BigRational {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        BigRational::new(den_lcm, num_gcd)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, sep_plus: &str, sep_minus: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { sep_minus } else { sep_plus })?;
            }
            let a = c.abs();
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (e, true) => write!(f, "q^{e}")?,
                (1, false) => write!(f, "{a}*q")?,
                (e, false) => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }

    /// Text form without spaces, used inside parentheses.
    pub fn compact(&self) -> String {
        struct C<'a>(&'a LaurentPoly);
        impl fmt::Display for C<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, "+", "-")
            }
        }
        C(self).to_string()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, " + ", " - ")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Dense univariate polynomial helpers over ℚ, lowest degree first.
pub(crate) mod dense {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    pub fn trim(v: &mut Vec<BigRational>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut b = b.to_vec();
        trim(&mut b);
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = b.last().unwrap().recip();
        let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, bc) in b.iter().enumerate() {
                let t = &c * bc;
                r[shift + i] -= t;
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    /// Monic gcd.
    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(l) = x.last().cloned() {
            if !l.is_one() {
                for c in x.iter_mut() {
                    *c /= &l;
                }
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_orders_by_decreasing_exponent() {
        let p = LaurentPoly::from_terms([(-2, r(1)), (0, r(1)), (2, r(1))]);
        assert_eq!(p.to_string(), "q^2 + 1 + q^-2");
        assert_eq!(p.compact(), "q^2+1+q^-2");
        let p = LaurentPoly::from_terms([(0, r(1)), (-4, r(-1))]);
        assert_eq!(p.compact(), "1-q^-4");
        let p = LaurentPoly::from_terms([(1, r(-3)), (0, BigRational::new(1.into(), 2.into()))]);
        assert_eq!(p.to_string(), "-3*q + 1/2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn division_round_trips() {
        let a = LaurentPoly::from_terms([(2, r(1)), (0, r(-1))]);
        let b = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&LaurentPoly::from_terms([(1, r(1)), (0, r(2))])), None);
    }

    #[test]
    fn eval_mod_handles_negative_exponents() {
        let p = LaurentPoly::from_terms([(1, r(1)), (-1, r(1))]);
        let t = 5;
        let v = p.eval_mod(t).unwrap();
        let expect = modp::add(5, modp::inv(5).unwrap());
        assert_eq!(v, expect);
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut p = LaurentPoly::q();
        p -= &LaurentPoly::q();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }
}
