//! Ordered-generator presentations of iterated Ore extensions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{parse_expr, Expr};
use crate::scalar::RatFunc;

/// Exponent vector aligned with the generator order.
pub type Monomial = Vec<i64>;

/// Sparse combination of normal monomials.
pub type Terms = BTreeMap<Monomial, RatFunc>;

pub(crate) fn add_term(t: &mut Terms, m: Monomial, c: &RatFunc) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&m) {
        Some(slot) => {
            *slot = &*slot + c;
            if slot.is_zero() {
                t.remove(&m);
            }
        }
        None => {
            t.insert(m, c.clone());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    #[serde(default)]
    pub multidegree: Vec<u32>,
    #[serde(default)]
    pub localized: bool,
}

/// `g_left · g_right = scalar · g_right · g_left + tail`, with `left > right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub left: usize,
    pub right: usize,
    pub scalar: RatFunc,
    pub tail: Terms,
}

impl Rule {
    pub fn is_pure(&self) -> bool {
        self.tail.is_empty()
    }

    /// The full right-hand side as a combination of normal monomials.
    pub fn rhs(&self, n: usize) -> Terms {
        let mut t = self.tail.clone();
        let mut lead = vec![0; n];
        lead[self.left] = 1;
        lead[self.right] = 1;
        add_term(&mut t, lead, &self.scalar);
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub(crate) gens: Vec<Generator>,
    pub(crate) rules: BTreeMap<(usize, usize), Rule>,
    /// Generators that are defined in terms of others, with their definitions.
    pub(crate) definitions: Vec<(usize, Expr)>,
    /// Further relations that hold in the algebra, by name.
    pub(crate) relations: Vec<(String, Expr)>,
    /// Named elements, by name.
    pub(crate) named: Vec<(String, Expr)>,
}

/// JSON form of a presentation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub name: String,
    pub generators: Vec<Generator>,
    pub rules: Vec<RuleSpec>,
    #[serde(default)]
    pub definitions: BTreeMap<String, String>,
    #[serde(default)]
    pub relations: BTreeMap<String, String>,
    #[serde(default)]
    pub named: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleSpec {
    /// Names of the two generators on the left-hand side, bigger one first.
    pub lhs: [String; 2],
    pub rhs: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub monomial: Vec<i64>,
}

impl Presentation {
    pub fn n(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn rule(&self, left: usize, right: usize) -> Option<&Rule> {
        self.rules.get(&(left, right))
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values()
    }

    pub fn relations(&self) -> &[(String, Expr)] {
        &self.relations
    }

    pub fn definitions(&self) -> &[(usize, Expr)] {
        &self.definitions
    }

    pub fn named_expr(&self, name: &str) -> Option<&Expr> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn named_names(&self) -> impl Iterator<Item = &str> {
        self.named.iter().map(|(n, _)| n.as_str())
    }

    pub fn has_localized(&self) -> bool {
        self.gens.iter().any(|g| g.localized)
    }

    pub fn monomial_text(&self, m: &[i64]) -> String {
        let mut parts = Vec::new();
        for (g, &e) in self.gens.iter().zip(m) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                e => parts.push(format!("{}^{e}", g.name)),
            }
        }
        parts.join("*")
    }

    pub fn degree_of(&self, m: &[i64]) -> i64 {
        self.gens.iter().zip(m).map(|(g, e)| g.degree as i64 * e).sum()
    }

    pub fn multidegree_of(&self, m: &[i64]) -> Option<Vec<i64>> {
        let k = self.gens.first()?.multidegree.len();
        if k == 0 || self.gens.iter().any(|g| g.multidegree.len() != k) {
            return None;
        }
        let mut out = vec![0; k];
        for (g, &e) in self.gens.iter().zip(m) {
            for (o, d) in out.iter_mut().zip(&g.multidegree) {
                *o += *d as i64 * e;
            }
        }
        Some(out)
    }

    /// Builds a presentation from rule texts such as `("e2", "e1", "q^-2*e1*e2 - q^-2*e3")`.
    pub fn build(
        name: &str,
        gens: Vec<Generator>,
        rules: &[(&str, &str, &str)],
        definitions: &[(&str, &str)],
        relations: &[(&str, &str)],
        named: &[(&str, &str)],
    ) -> Result<Self> {
        let mut p = Self {
            name: name.to_string(),
            gens,
            rules: BTreeMap::new(),
            definitions: Vec::new(),
            relations: Vec::new(),
            named: Vec::new(),
        };
        for (l, r, rhs) in rules {
            let (li, ri) = p.pair(l, r)?;
            let terms = normal_combination(&p, &parse_expr(rhs)?)?;
            p.insert_rule(li, ri, terms)?;
        }
        for (g, e) in definitions {
            let gi = p.generator_index(g).ok_or_else(|| Error::UnknownName(g.to_string()))?;
            p.definitions.push((gi, parse_expr(e)?));
        }
        for (n, e) in relations {
            p.relations.push((n.to_string(), parse_expr(e)?));
        }
        for (n, e) in named {
            p.named.push((n.to_string(), parse_expr(e)?));
        }
        p.validate()?;
        Ok(p)
    }

    pub fn from_spec(spec: &PresentationSpec) -> Result<Self> {
        let mut p = Self {
            name: spec.name.clone(),
            gens: spec.generators.clone(),
            rules: BTreeMap::new(),
            definitions: Vec::new(),
            relations: Vec::new(),
            named: Vec::new(),
        };
        let n = p.n();
        for r in &spec.rules {
            let (li, ri) = p.pair(&r.lhs[0], &r.lhs[1])?;
            let mut terms = Terms::new();
            for t in &r.rhs {
                if t.monomial.len() != n {
                    return Err(Error::InvalidPresentation(format!(
                        "monomial {:?} does not have {n} exponents",
                        t.monomial
                    )));
                }
                let c = crate::pbw::scalar_from_expr(&parse_expr(&t.coeff)?)?;
                add_term(&mut terms, t.monomial.clone(), &c);
            }
            p.insert_rule(li, ri, terms)?;
        }
        for (g, e) in &spec.definitions {
            let gi = p.generator_index(g).ok_or_else(|| Error::UnknownName(g.clone()))?;
            p.definitions.push((gi, parse_expr(e)?));
        }
        for (k, e) in &spec.relations {
            p.relations.push((k.clone(), parse_expr(e)?));
        }
        for (k, e) in &spec.named {
            p.named.push((k.clone(), parse_expr(e)?));
        }
        p.validate()?;
        Ok(p)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: PresentationSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPresentation(format!("malformed JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> PresentationSpec {
        let n = self.n();
        PresentationSpec {
            name: self.name.clone(),
            generators: self.gens.clone(),
            rules: self
                .rules
                .values()
                .map(|r| RuleSpec {
                    lhs: [self.gens[r.left].name.clone(), self.gens[r.right].name.clone()],
                    rhs: r
                        .rhs(n)
                        .into_iter()
                        .map(|(m, c)| TermSpec { coeff: c.to_string(), monomial: m })
                        .collect(),
                })
                .collect(),
            definitions: self
                .definitions
                .iter()
                .map(|(g, e)| (self.gens[*g].name.clone(), e.to_string()))
                .collect(),
            relations: self.relations.iter().map(|(k, e)| (k.clone(), e.to_string())).collect(),
            named: self.named.iter().map(|(k, e)| (k.clone(), e.to_string())).collect(),
        }
    }

    fn pair(&self, l: &str, r: &str) -> Result<(usize, usize)> {
        let li = self.generator_index(l).ok_or_else(|| Error::UnknownName(l.to_string()))?;
        let ri = self.generator_index(r).ok_or_else(|| Error::UnknownName(r.to_string()))?;
        if li <= ri {
            return Err(Error::InvalidPresentation(format!(
                "rule {l}*{r} must have the bigger generator on the left"
            )));
        }
        Ok((li, ri))
    }

    fn insert_rule(&mut self, left: usize, right: usize, mut terms: Terms) -> Result<()> {
        let n = self.n();
        let mut lead = vec![0; n];
        lead[left] = 1;
        lead[right] = 1;
        let scalar = terms.remove(&lead).unwrap_or_else(RatFunc::zero);
        let rule = Rule { left, right, scalar, tail: terms };
        if self.rules.insert((left, right), rule).is_some() {
            return Err(Error::InvalidPresentation(format!(
                "duplicate rule for {}*{}",
                self.gens[left].name, self.gens[right].name
            )));
        }
        Ok(())
    }

    /// Replaces the tail of a rule; used to build deliberately broken variants in tests.
    pub fn with_tail_dropped(&self, left: &str, right: &str) -> Result<Self> {
        let (l, r) = self.pair(left, right)?;
        let mut p = self.clone();
        p.rules.get_mut(&(l, r)).expect("rule exists").tail.clear();
        p.name = format!("{}_broken", self.name);
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let bad = |m: String| Err(Error::InvalidPresentation(m));
        for (i, g) in self.gens.iter().enumerate() {
            if self.gens[..i].iter().any(|h| h.name == g.name) {
                return bad(format!("duplicate generator {}", g.name));
            }
            if g.name == "q" {
                return bad("q cannot be a generator name".into());
            }
        }
        for l in 0..n {
            for r in 0..l {
                let Some(rule) = self.rules.get(&(l, r)) else {
                    return bad(format!("missing rule for {}*{}", self.gens[l].name, self.gens[r].name));
                };
                let lhs_text = format!("{}*{}", self.gens[l].name, self.gens[r].name);
                if rule.scalar.is_zero() {
                    return bad(format!("rule {lhs_text} has no leading term"));
                }
                let mut lead = vec![0; n];
                lead[l] = 1;
                lead[r] = 1;
                for m in rule.tail.keys() {
                    if m.iter().enumerate().any(|(i, &e)| e < 0 && !self.gens[i].localized) {
                        return bad(format!("rule {lhs_text} has a negative power of a non-localized generator"));
                    }
                    if m.iter().enumerate().any(|(i, &e)| i >= l && e != 0) {
                        return bad(format!("tail of rule {lhs_text} must only involve generators below {}", self.gens[l].name));
                    }
                    if self.degree_of(m) != self.degree_of(&lead) {
                        return bad(format!("rule {lhs_text} is not homogeneous"));
                    }
                    if self.multidegree_of(m) != self.multidegree_of(&lead) {
                        return bad(format!("rule {lhs_text} does not preserve multidegree"));
                    }
                }
                if self.gens[l].localized && !rule.is_pure() {
                    return bad(format!("localized generator {} needs pure q-commutation rules", self.gens[l].name));
                }
            }
        }
        Ok(())
    }
}

/// Evaluates an expression that is already a combination of normal monomials
/// (no rewriting is performed; out-of-order products are rejected).
pub(crate) fn normal_combination(p: &Presentation, e: &Expr) -> Result<Terms> {
    let n = p.n();
    let not_normal = || Error::InvalidPresentation(format!("`{e}` is not a combination of normal monomials"));
    let mul = |a: &Terms, b: &Terms| -> Result<Terms> {
        let mut out = Terms::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let last_a = ma.iter().rposition(|&x| x != 0);
                let first_b = mb.iter().position(|&x| x != 0);
                if let (Some(x), Some(y)) = (last_a, first_b) {
                    if x > y {
                        return Err(not_normal());
                    }
                }
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                add_term(&mut out, m, &(ca * cb));
            }
        }
        Ok(out)
    };
    Ok(match e {
        Expr::Ident(name) => {
            let i = p.generator_index(name).ok_or_else(|| Error::UnknownName(name.clone()))?;
            let mut m = vec![0; n];
            m[i] = 1;
            Terms::from([(m, RatFunc::one())])
        }
        Expr::Pow(base, k) => {
            if let Expr::Ident(name) = base.as_ref() {
                let i = p.generator_index(name).ok_or_else(|| Error::UnknownName(name.clone()))?;
                let mut m = vec![0; n];
                m[i] = *k;
                Terms::from([(m, RatFunc::one())])
            } else {
                let c = crate::pbw::scalar_from_expr(e).map_err(|_| not_normal())?;
                Terms::from([(vec![0; n], c)])
            }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let mut t = normal_combination(p, a)?;
            let sign = if matches!(e, Expr::Sub(..)) { RatFunc::from_int(-1) } else { RatFunc::one() };
            for (m, c) in normal_combination(p, b)? {
                add_term(&mut t, m, &(&c * &sign));
            }
            t
        }
        Expr::Neg(a) => normal_combination(p, a)?
            .into_iter()
            .map(|(m, c)| (m, -c))
            .collect(),
        Expr::Mul(a, b) => mul(&normal_combination(p, a)?, &normal_combination(p, b)?)?,
        Expr::Div(a, b) => {
            let d = crate::pbw::scalar_from_expr(b)?.inv()?;
            normal_combination(p, a)?.into_iter().map(|(m, c)| (m, &c * &d)).collect()
        }
        Expr::Num(_) | Expr::Q => Terms::from([(vec![0; n], crate::pbw::scalar_from_expr(e)?)]),
    })
}
