//! Certification and verification routines over presentations.

use std::sync::Arc;

use serde_json::{json, Value};

use super::element::{eval_with, AlgebraElement};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalar::RatFunc;

/// An ambiguity `g_c g_b g_a` (with signs for localized letters) whose two
/// reductions disagree.
#[derive(Debug, Clone)]
pub struct Overlap {
    pub word: String,
    pub left_first: AlgebraElement,
    pub right_first: AlgebraElement,
}

fn gen_power(p: &Arc<Presentation>, i: usize, e: i64) -> Result<AlgebraElement> {
    let mut m = vec![0; p.n()];
    m[i] = e;
    AlgebraElement::monomial(p, m, RatFunc::one())
}

/// Resolves every ambiguity `g_c g_b g_a` with `c > b > a`, including inverse
/// letters for localized generators. An empty result means the rewriting
/// system is confluent, so the normal monomials form a basis.
pub fn confluence_check(p: &Arc<Presentation>) -> Result<Vec<Overlap>> {
    let n = p.n();
    let signs = |i: usize| if p.gens[i].localized { vec![1, -1] } else { vec![1] };
    let mut failures = Vec::new();
    for c in 0..n {
        for b in 0..c {
            for a in 0..b {
                for &sc in &signs(c) {
                    for &sb in &signs(b) {
                        for &sa in &signs(a) {
                            let gc = gen_power(p, c, sc)?;
                            let gb = gen_power(p, b, sb)?;
                            let ga = gen_power(p, a, sa)?;
                            let left = gc.mul(&gb)?.mul(&ga)?;
                            let right = gc.mul(&gb.mul(&ga)?)?;
                            if left != right {
                                let word = [(c, sc), (b, sb), (a, sa)]
                                    .iter()
                                    .map(|&(i, s)| {
                                        if s == 1 {
                                            p.gens[i].name.clone()
                                        } else {
                                            format!("{}^-1", p.gens[i].name)
                                        }
                                    })
                                    .collect::<Vec<_>>()
                                    .join("*");
                                failures.push(Overlap { word, left_first: left, right_first: right });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// Names of declared definitions and relations that the rewriting rules do
/// not reproduce. A confluent system can still present the wrong algebra.
pub fn relation_consistency(p: &Arc<Presentation>) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (g, def) in p.definitions() {
        let lhs = AlgebraElement::generator(p, &p.gens[*g].name)?;
        if AlgebraElement::eval(p, def)? != lhs {
            bad.push(format!("definition of {}", p.gens[*g].name));
        }
    }
    for (name, rel) in p.relations() {
        if !AlgebraElement::eval(p, rel)?.is_zero() {
            bad.push(name.clone());
        }
    }
    Ok(bad)
}

pub fn q_bracket(a: &AlgebraElement, b: &AlgebraElement, v: &RatFunc) -> Result<AlgebraElement> {
    a.q_bracket(b, v)
}

/// Whether `a` commutes with every generator.
pub fn is_central(a: &AlgebraElement) -> Result<bool> {
    let p = a.presentation();
    for g in p.generators() {
        let g = AlgebraElement::generator(p, &g.name)?;
        if a.mul(&g)? != g.mul(a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per generator `g`: the scalar `λ_g` with `a·g = λ_g·g·a`, or the best
/// candidate together with the residual `λ·g·a − a·g`.
#[derive(Debug, Clone)]
pub struct NormalityReport {
    pub entries: Vec<NormalityEntry>,
}

#[derive(Debug, Clone)]
pub struct NormalityEntry {
    pub generator: String,
    pub lambda: Option<RatFunc>,
    pub residual: AlgebraElement,
}

impl NormalityReport {
    pub fn is_normal(&self) -> bool {
        self.entries.iter().all(|e| e.lambda.is_some() && e.residual.is_zero())
    }

    pub fn lambda(&self, generator: &str) -> Option<&RatFunc> {
        self.entries.iter().find(|e| e.generator == generator)?.lambda.as_ref()
    }

    pub fn residual(&self, generator: &str) -> Option<&AlgebraElement> {
        self.entries.iter().find(|e| e.generator == generator).map(|e| &e.residual)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "normal": self.is_normal(),
            "generators": self.entries.iter().map(|e| json!({
                "generator": e.generator,
                "lambda": e.lambda.as_ref().map(|l| l.to_string()),
                "residual": e.residual.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn q_normality(a: &AlgebraElement) -> Result<NormalityReport> {
    let p = a.presentation();
    let mut entries = Vec::new();
    for g in p.generators() {
        let ge = AlgebraElement::generator(p, &g.name)?;
        let ag = a.mul(&ge)?;
        let ga = ge.mul(a)?;
        // λ is read off the largest monomial of g·a
        let lambda = match ga.terms().last() {
            None => Some(RatFunc::one()),
            Some((m, c)) => {
                let l = ag.coeff(m).div(c)?;
                (!l.is_zero()).then_some(l)
            }
        };
        let residual = ga.scale(lambda.as_ref().unwrap_or(&RatFunc::zero())).sub(&ag)?;
        entries.push(NormalityEntry { generator: g.name.clone(), lambda, residual });
    }
    Ok(NormalityReport { entries })
}

/// A map of presented algebras given on some of the source generators; the
/// remaining images are derived from the source's generator definitions.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    pub source: Arc<Presentation>,
    pub target: Arc<Presentation>,
    pub images: Vec<(String, AlgebraElement)>,
}

#[derive(Debug, Clone)]
pub struct HomReport {
    /// Images of all source generators, in generator order.
    pub images: Vec<AlgebraElement>,
    /// Names of the relations that are not preserved.
    pub violations: Vec<String>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl AlgebraHom {
    pub fn new(source: &Arc<Presentation>, target: &Arc<Presentation>, images: &[(&str, &str)]) -> Result<Self> {
        let images = images
            .iter()
            .map(|(g, e)| Ok((g.to_string(), AlgebraElement::parse(target, e)?)))
            .collect::<Result<_>>()?;
        Ok(Self { source: source.clone(), target: target.clone(), images })
    }

    fn eval_source(&self, e: &crate::expr::Expr, images: &[Option<AlgebraElement>]) -> Result<AlgebraElement> {
        eval_with(&self.target, e, &mut |name| match self.source.generator_index(name) {
            Some(i) => images[i]
                .clone()
                .map(Some)
                .ok_or_else(|| Error::InvalidArgument(format!("no image for {name} yet"))),
            None => Ok(None),
        })
    }

    /// Images of all generators, deriving the missing ones from definitions.
    pub fn complete_images(&self) -> Result<Vec<AlgebraElement>> {
        let n = self.source.n();
        let mut images: Vec<Option<AlgebraElement>> = vec![None; n];
        for (g, img) in &self.images {
            let i = self
                .source
                .generator_index(g)
                .ok_or_else(|| Error::UnknownName(g.clone()))?;
            images[i] = Some(img.clone());
        }
        loop {
            let mut progress = false;
            for (g, def) in self.source.definitions() {
                if images[*g].is_none() {
                    if let Ok(v) = self.eval_source(def, &images) {
                        images[*g] = Some(v);
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }
        images
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| {
                    Error::InvalidArgument(format!("no image for generator {}", self.source.gens[i].name))
                })
            })
            .collect()
    }

    fn apply_with(&self, a: &AlgebraElement, images: &[AlgebraElement]) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(&self.target);
        for (m, c) in a.terms() {
            let mut factors = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e != 0 {
                    factors.push(images[i].pow(e)?);
                }
            }
            let refs: Vec<&AlgebraElement> = factors.iter().collect();
            out = out.add(&AlgebraElement::product(&self.target, &refs)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let images = self.complete_images()?;
        self.apply_with(a, &images)
    }
}

/// Checks that every defining relation of the source maps to zero: given
/// generator definitions, the named relations, then every rewrite rule.
pub fn hom_check(h: &AlgebraHom) -> Result<HomReport> {
    let images = h.complete_images()?;
    let opt: Vec<Option<AlgebraElement>> = images.iter().cloned().map(Some).collect();
    let s = &h.source;
    let mut violations = Vec::new();
    for (g, def) in s.definitions() {
        if h.eval_source(def, &opt)? != images[*g] {
            violations.push(format!("definition of {}", s.gens[*g].name));
        }
    }
    for (name, rel) in s.relations() {
        if !h.eval_source(rel, &opt)?.is_zero() {
            violations.push(name.clone());
        }
    }
    let n = s.n();
    for rule in s.rules() {
        let (l, r) = (&images[rule.left], &images[rule.right]);
        let mut lhs = l.mul(r)?.sub(&r.mul(l)?.scale(&rule.scalar))?;
        let tail = AlgebraElement::from_terms(s, rule.tail.clone());
        lhs = lhs.sub(&h.apply_with(&tail, &images)?)?;
        if !lhs.is_zero() {
            violations.push(format!("rule {}*{}", s.gens[rule.left].name, s.gens[rule.right].name));
        }
        debug_assert_eq!(rule.rhs(n).len(), rule.tail.len() + 1);
    }
    Ok(HomReport { images, violations })
}

/// Outcome of checking the quotient map from `b2` onto `heisenberg`.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub hom: HomReport,
    pub e3_to_e3: bool,
    pub z_to_zero: bool,
    pub zprime_to_omega: bool,
    pub s1_to_zero: bool,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.hom.passed() && self.e3_to_e3 && self.z_to_zero && self.zprime_to_omega && self.s1_to_zero
    }
}

/// The map `e1 ↦ E1, e2 ↦ E2, z ↦ 0` from `b2` to `heisenberg`.
pub fn quotient_map() -> Result<AlgebraHom> {
    let b2 = super::builtin_presentation("b2")?;
    let h = super::builtin_presentation("heisenberg")?;
    AlgebraHom::new(&b2, &h, &[("e1", "E1"), ("e2", "E2"), ("z", "0")])
}

pub fn quotient_check() -> Result<QuotientReport> {
    let pi = quotient_map()?;
    let hom = hom_check(&pi)?;
    let b2 = &pi.source;
    let h = &pi.target;
    let img = |text: &str| pi.apply(&AlgebraElement::parse(b2, text)?);
    let omega = AlgebraElement::named(h, "Omega")?;
    let factor = super::parse_scalar("1 - q^-2")?;
    Ok(QuotientReport {
        e3_to_e3: img("e3")? == AlgebraElement::generator(h, "E3")?,
        z_to_zero: img("z")?.is_zero(),
        zprime_to_omega: img("z'")? == omega.scale(&factor),
        s1_to_zero: img("e1^2*e2 - (q^2+q^-2)*e1*e2*e1 + e2*e1^2")?.is_zero(),
        hom,
    })
}

/// Number of normal monomials of each degree `0..=max_degree`.
pub fn hilbert_count(p: &Presentation, max_degree: usize) -> Result<Vec<usize>> {
    if p.has_localized() {
        return Err(Error::InvalidArgument(format!(
            "{} has localized generators and no finite graded pieces",
            p.name
        )));
    }
    let degs: Vec<usize> = p.generators().iter().map(|g| g.degree as usize).collect();
    if degs.contains(&0) {
        return Err(Error::InvalidArgument("generators of degree 0".into()));
    }
    // coefficients of Π 1/(1 − t^{d_i}) by lattice-point counting
    let mut counts = vec![0usize; max_degree + 1];
    counts[0] = 1;
    for d in degs {
        for m in d..=max_degree {
            counts[m] += counts[m - d];
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{builtin_presentation, parse_scalar};

    fn el(p: &Arc<Presentation>, s: &str) -> AlgebraElement {
        AlgebraElement::parse(p, s).unwrap()
    }

    #[test]
    fn normal_forms_of_rules() {
        let b2 = builtin_presentation("b2").unwrap();
        assert_eq!(el(&b2, "e2*e1").to_string(), "q^-2*e1*e2 - q^-2*e3");
        assert_eq!(el(&b2, "z*e3*e1*e2").to_string(), "z*e3*e1*e2");
        let h = builtin_presentation("heisenberg").unwrap();
        assert_eq!(el(&h, "E2*E1").to_string(), "q^-2*E1*E2 - q^-2*E3");
    }

    #[test]
    fn brackets() {
        let b2 = builtin_presentation("b2").unwrap();
        let e1 = el(&b2, "e1");
        let e2 = el(&b2, "e2");
        let e3 = el(&b2, "e3");
        assert_eq!(q_bracket(&e1, &e2, &RatFunc::q_pow(2)).unwrap(), e3);
        assert_eq!(
            q_bracket(&e2, &e3, &RatFunc::one()).unwrap(),
            el(&b2, "z + (q^2-1)*e3*e2")
        );
        assert!(q_bracket(&e1, &e1, &RatFunc::one()).unwrap().is_zero());
        let h = builtin_presentation("heisenberg").unwrap();
        assert_eq!(q_bracket(&e1, &el(&h, "E1"), &RatFunc::one()), Err(Error::PresentationMismatch));
    }

    #[test]
    fn centrality() {
        let b2 = builtin_presentation("b2").unwrap();
        assert!(is_central(&el(&b2, "z")).unwrap());
        assert!(is_central(&el(&b2, "z'")).unwrap());
        assert!(!is_central(&el(&b2, "e1")).unwrap());
        let h = builtin_presentation("heisenberg").unwrap();
        assert!(is_central(&el(&h, "Omega")).unwrap());
    }

    #[test]
    fn normality_of_w() {
        let a = builtin_presentation("a_s1s2s1").unwrap();
        let r = q_normality(&el(&a, "w")).unwrap();
        assert!(r.is_normal());
        assert_eq!(r.lambda("e2"), Some(&RatFunc::q_pow(-2)));
        assert_eq!(r.lambda("e3"), Some(&RatFunc::q_pow(2)));
        assert_eq!(r.lambda("w"), Some(&RatFunc::one()));

        let b2 = builtin_presentation("b2").unwrap();
        let r = q_normality(&el(&b2, "w")).unwrap();
        assert!(!r.is_normal());
        assert_eq!(r.residual("e1").unwrap(), &el(&b2, "(1-q^-2)*e3^2"));

        let r = q_normality(&el(&b2, "z")).unwrap();
        assert!(r.entries.iter().all(|e| e.lambda == Some(RatFunc::one())));
    }

    #[test]
    fn confluence_of_builtins_and_a_broken_variant() {
        for p in crate::pbw::all_builtins() {
            assert!(confluence_check(&p).unwrap().is_empty(), "{}", p.name);
        }
        let broken = Arc::new(builtin_presentation("b2").unwrap().with_tail_dropped("e2", "e1").unwrap());
        // the truncated rules still form a confluent system, of a different algebra
        assert!(confluence_check(&broken).unwrap().is_empty());
        assert_eq!(relation_consistency(&broken).unwrap(), vec!["definition of e3".to_string()]);
        for p in crate::pbw::all_builtins() {
            assert!(relation_consistency(&p).unwrap().is_empty(), "{}", p.name);
        }
    }

    #[test]
    fn homomorphisms() {
        let h = builtin_presentation("heisenberg").unwrap();
        let omega = AlgebraHom::new(&h, &h, &[("E1", "E2"), ("E2", "E1")]).unwrap();
        let rep = hom_check(&omega).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.images[0], el(&h, "-q^2*E3bar"));

        let b2 = builtin_presentation("b2").unwrap();
        let swap = AlgebraHom::new(&b2, &b2, &[("e1", "e2"), ("e2", "e1")]).unwrap();
        let rep = hom_check(&swap).unwrap();
        assert!(rep.violations.iter().any(|v| v == "S1" || v == "S2"), "{:?}", rep.violations);

        let psi = AlgebraHom::new(&b2, &b2, &[("e1", "3*e1"), ("e2", "-2/5*e2")]).unwrap();
        let rep = hom_check(&psi).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.images[1], el(&b2, "-6/5*e3"));
        assert_eq!(rep.images[0], el(&b2, "12/25*z"));
    }

    #[test]
    fn quotient() {
        let r = quotient_check().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(parse_scalar("1 - q^-2").unwrap().to_string(), "1 - q^-2");
    }

    #[test]
    fn hilbert_counts() {
        let b2 = builtin_presentation("b2").unwrap();
        assert_eq!(hilbert_count(&b2, 4).unwrap(), vec![1, 2, 4, 7, 11]);
        let h = builtin_presentation("heisenberg").unwrap();
        assert_eq!(hilbert_count(&h, 2).unwrap()[2], 4);
        assert!(hilbert_count(&builtin_presentation("qtorus").unwrap(), 2).is_err());
    }
}
