//! Shared text rendering for linear combinations with ℚ(q) coefficients.

use num_traits::Signed;

use crate::scalar::{LaurentPoly, RatFunc};

fn laurent_mag(p: &LaurentPoly) -> String {
    if p.len() == 1 {
        return p.to_string();
    }
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(0);
    let k = if hi < 0 {
        hi
    } else if lo > 0 {
        lo
    } else {
        0
    };
    if k == 0 {
        format!("({})", p.compact())
    } else {
        let unit = LaurentPoly::q_pow(k);
        format!("{}*({})", unit, p.shift(-k).compact())
    }
}

/// Splits a coefficient into a sign and the text of its magnitude; an empty
/// magnitude means the magnitude is 1.
pub(crate) fn split_coeff(c: &RatFunc) -> (bool, String) {
    let negative = c.numer().leading_coeff().is_some_and(|x| x.is_negative());
    let a = if negative { -c } else { c.clone() };
    if a.is_one() {
        return (negative, String::new());
    }
    let text = if a.denom().is_one() {
        laurent_mag(a.numer())
    } else {
        let n = a.numer();
        let n = if n.len() == 1 { n.to_string() } else { laurent_mag(n) };
        let d = a.denom();
        let d = if d.len() == 1 { d.to_string() } else { format!("({})", d.compact()) };
        format!("{n}/{d}")
    };
    (negative, text)
}

/// Renders `Σ c_i·m_i`, where an empty monomial text stands for the unit.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a RatFunc, String)>,
{
    let mut out = String::new();
    for (i, (c, m)) in terms.into_iter().enumerate() {
        let (neg, mag) = split_coeff(c);
        let body = match (mag.is_empty(), m.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => m,
            (false, true) => mag,
            (false, false) => format!("{mag}*{m}"),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BigRat;

    fn lp(terms: &[(i64, i64)]) -> RatFunc {
        RatFunc::from(LaurentPoly::from_terms(
            terms.iter().map(|&(e, c)| (e, BigRat::from_integer(c.into()))),
        ))
    }

    #[test]
    fn coefficient_styles() {
        let a = lp(&[(2, -1), (-2, -1)]);
        let b = lp(&[(0, 1), (-4, -1)]);
        let c = lp(&[(-4, 1), (-6, -1)]);
        let one = RatFunc::one();
        let s = render_terms([
            (&one, "x1".to_string()),
            (&a, "x2".to_string()),
            (&b, "x3".to_string()),
            (&c, "x4".to_string()),
        ]);
        assert_eq!(s, "x1 - (q^2+q^-2)*x2 + (1-q^-4)*x3 + q^-4*(1-q^-2)*x4");
        let m = lp(&[(-2, -1)]);
        assert_eq!(render_terms([(&m, "e3".to_string())]), "-q^-2*e3");
        assert_eq!(render_terms(std::iter::empty()), "0");
        assert_eq!(render_terms([(&m, String::new())]), "-q^-2");
    }
}
