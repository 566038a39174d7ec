//! Elements of a presented algebra, always kept in normal form.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::presentation::{add_term, Monomial, Presentation, Terms};
use super::rewrite::Rewriter;
use crate::display::render_terms;
use crate::error::{Error, Result};
use crate::expr::{parse_expr, Expr};
use crate::scalar::RatFunc;

#[derive(Clone)]
pub struct AlgebraElement {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

const NAMED_DEPTH: usize = 32;

impl AlgebraElement {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        Self { pres: p.clone(), terms: Terms::new() }
    }

    pub fn scalar(p: &Arc<Presentation>, c: RatFunc) -> Self {
        Self::from_terms(p, [(vec![0; p.n()], c)])
    }

    pub fn one(p: &Arc<Presentation>) -> Self {
        Self::scalar(p, RatFunc::one())
    }

    /// A normal monomial with coefficient `c`.
    pub fn monomial(p: &Arc<Presentation>, m: Monomial, c: RatFunc) -> Result<Self> {
        if m.len() != p.n() {
            return Err(Error::InvalidArgument(format!("monomial needs {} exponents", p.n())));
        }
        if let Some(i) = m.iter().enumerate().position(|(i, &e)| e < 0 && !p.gens[i].localized) {
            return Err(Error::InvalidArgument(format!(
                "negative power of non-localized generator {}",
                p.gens[i].name
            )));
        }
        Ok(Self::from_terms(p, [(m, c)]))
    }

    pub fn generator(p: &Arc<Presentation>, name: &str) -> Result<Self> {
        let i = p.generator_index(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        let mut m = vec![0; p.n()];
        m[i] = 1;
        Ok(Self::from_terms(p, [(m, RatFunc::one())]))
    }

    pub(crate) fn from_terms<I: IntoIterator<Item = (Monomial, RatFunc)>>(p: &Arc<Presentation>, it: I) -> Self {
        let mut terms = Terms::new();
        for (m, c) in it {
            add_term(&mut terms, m, &c);
        }
        Self { pres: p.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[i64]) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar this equals, if it lies in the ground field.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return Some(RatFunc::zero());
        }
        let unit = vec![0; self.pres.n()];
        (self.terms.len() == 1).then(|| self.terms.get(&unit).cloned()).flatten()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut t = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut t, m.clone(), c);
        }
        Ok(Self { pres: self.pres.clone(), terms: t })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(&self.pres, self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut rw = Rewriter::new(&self.pres);
        let terms = rw.mul_terms(&self.terms, &other.terms)?;
        Ok(Self { pres: self.pres.clone(), terms })
    }

    /// Product of several elements, left to right, with a shared rewriting cache.
    pub fn product(p: &Arc<Presentation>, factors: &[&AlgebraElement]) -> Result<Self> {
        let mut rw = Rewriter::new(p);
        let mut acc = Self::one(p).terms;
        for f in factors {
            if !(Arc::ptr_eq(p, &f.pres) || **p == *f.pres) {
                return Err(Error::PresentationMismatch);
            }
            acc = rw.mul_terms(&acc, &f.terms)?;
        }
        Ok(Self { pres: p.clone(), terms: acc })
    }

    /// Inverse of a single monomial in localized generators.
    pub fn inverse(&self) -> Result<Self> {
        let not_invertible = || Error::InvalidArgument(format!("`{self}` is not invertible"));
        if self.terms.len() != 1 {
            return Err(not_invertible());
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.iter().enumerate().any(|(i, &e)| e != 0 && !self.pres.gens[i].localized) {
            return Err(not_invertible());
        }
        let mut rw = Rewriter::new(&self.pres);
        let n = self.pres.n();
        let mut acc = Terms::from([(vec![0; n], c.inv()?)]);
        for i in (0..n).rev() {
            if m[i] != 0 {
                let mut g = vec![0; n];
                g[i] = -m[i];
                acc = rw.mul_terms(&acc, &Terms::from([(g, RatFunc::one())]))?;
            }
        }
        Ok(Self { pres: self.pres.clone(), terms: acc })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut rw = Rewriter::new(&self.pres);
        let mut acc = Self::one(&self.pres).terms;
        for _ in 0..e.unsigned_abs() {
            acc = rw.mul_terms(&acc, &base.terms)?;
        }
        Ok(Self { pres: self.pres.clone(), terms: acc })
    }

    /// `[a, b]_v = a·b − v·b·a`.
    pub fn q_bracket(&self, other: &Self, v: &RatFunc) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?.scale(v))
    }

    /// Evaluates an expression, resolving names to generators first and then
    /// to named elements of the presentation.
    pub fn eval(p: &Arc<Presentation>, e: &Expr) -> Result<Self> {
        Self::eval_depth(p, e, 0)
    }

    fn eval_depth(p: &Arc<Presentation>, e: &Expr, depth: usize) -> Result<Self> {
        eval_with(p, e, &mut |name| {
            if p.generator_index(name).is_some() {
                return Self::generator(p, name).map(Some);
            }
            match p.named_expr(name) {
                Some(def) if depth < NAMED_DEPTH => Self::eval_depth(p, def, depth + 1).map(Some),
                Some(_) => Err(Error::InvalidPresentation(format!("named element {name} refers to itself"))),
                None => Ok(None),
            }
        })
    }

    pub fn parse(p: &Arc<Presentation>, text: &str) -> Result<Self> {
        Self::eval(p, &parse_expr(text)?)
    }

    pub fn named(p: &Arc<Presentation>, name: &str) -> Result<Self> {
        let e = p.named_expr(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        Self::eval(p, e)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.pres.name,
            "text": self.to_string(),
            "terms": self.terms.iter().map(|(m, c)| json!({
                "coeff": c.to_string(),
                "monomial": m,
                "word": self.pres.monomial_text(m),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Evaluates `e` in the algebra of `p`, with identifiers resolved by `resolve`.
pub(crate) fn eval_with(
    p: &Arc<Presentation>,
    e: &Expr,
    resolve: &mut dyn FnMut(&str) -> Result<Option<AlgebraElement>>,
) -> Result<AlgebraElement> {
    Ok(match e {
        Expr::Num(_) | Expr::Q => AlgebraElement::scalar(p, super::scalar_from_expr(e)?),
        Expr::Ident(name) => resolve(name)?.ok_or_else(|| Error::UnknownName(name.clone()))?,
        Expr::Neg(a) => eval_with(p, a, resolve)?.neg(),
        Expr::Add(a, b) => eval_with(p, a, resolve)?.add(&eval_with(p, b, resolve)?)?,
        Expr::Sub(a, b) => eval_with(p, a, resolve)?.sub(&eval_with(p, b, resolve)?)?,
        Expr::Mul(a, b) => eval_with(p, a, resolve)?.mul(&eval_with(p, b, resolve)?)?,
        Expr::Div(a, b) => {
            let d = eval_with(p, b, resolve)?;
            let d = d.as_scalar().ok_or_else(|| {
                Error::InvalidArgument(format!("division by the non-scalar `{b}`"))
            })?;
            eval_with(p, a, resolve)?.scale(&d.inv()?)
        }
        Expr::Pow(a, k) => eval_with(p, a, resolve)?.pow(*k)?,
    })
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(m, c)| (c, self.pres.monomial_text(m)))))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{}]({self})", self.pres.name)
    }
}
