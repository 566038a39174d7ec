//! Multiplication of normal forms by rewriting.
//!
//! The basic step multiplies a normal monomial on the right by one generator
//! (or the inverse of a localized one). If `t` is the largest generator of
//! the monomial above `k`, write the monomial as `m'·g_t^x`; then
//! `g_t^x·g_k = g_t^{x−1}(λ g_k g_t + tail)` and the problem moves to
//! `m'·g_t^{x−1}` with strictly smaller generators in the tail.

use std::collections::HashMap;

use super::presentation::{add_term, Monomial, Presentation, Terms};
use crate::error::{Error, Result};
use crate::scalar::RatFunc;

pub const STEP_LIMIT: u64 = 10_000_000;
const DEPTH_LIMIT: usize = 20_000;

pub(crate) struct Rewriter<'p> {
    p: &'p Presentation,
    memo: HashMap<(Monomial, usize, bool), Terms>,
    inverse_tails: HashMap<(usize, usize), Terms>,
    steps: u64,
    depth: usize,
}

fn add_terms(into: &mut Terms, t: &Terms, c: &RatFunc) {
    for (m, x) in t {
        add_term(into, m.clone(), &(x * c));
    }
}

impl<'p> Rewriter<'p> {
    pub fn new(p: &'p Presentation) -> Self {
        Self { p, memo: HashMap::new(), inverse_tails: HashMap::new(), steps: 0, depth: 0 }
    }

    fn unit(&self) -> Monomial {
        vec![0; self.p.n()]
    }

    /// `m · g_k^{±1}` in normal form.
    pub fn mul_gen(&mut self, m: &[i64], k: usize, inverse: bool) -> Result<Terms> {
        if inverse && !self.p.gens[k].localized {
            return Err(Error::InvalidArgument(format!(
                "{} is not localized and has no inverse",
                self.p.gens[k].name
            )));
        }
        let key = (m.to_vec(), k, inverse);
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        self.steps += 1;
        if self.steps > STEP_LIMIT {
            return Err(Error::Resource(format!("rewriting exceeded {STEP_LIMIT} steps")));
        }
        self.depth += 1;
        if self.depth > DEPTH_LIMIT {
            self.depth -= 1;
            return Err(Error::Resource("rewriting recursion too deep".into()));
        }
        let out = self.mul_gen_inner(m, k, inverse);
        self.depth -= 1;
        let out = out?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn mul_gen_inner(&mut self, m: &[i64], k: usize, inverse: bool) -> Result<Terms> {
        let s = if inverse { -1 } else { 1 };
        let Some(t) = (k + 1..m.len()).rev().find(|&i| m[i] != 0) else {
            let mut out = m.to_vec();
            out[k] += s;
            return Ok(Terms::from([(out, RatFunc::one())]));
        };
        let x = m[t];
        let rule = self.p.rules.get(&(t, k)).expect("validated presentation has every rule");
        let mut prefix = m.to_vec();
        prefix[t] = 0;
        if rule.is_pure() {
            // g_t^x g_k^s = λ^{xs} g_k^s g_t^x
            let factor = rule.scalar.pow(x * s)?;
            let inner = self.mul_gen(&prefix, k, inverse)?;
            let mut out = Terms::new();
            for (mut mono, c) in inner {
                mono[t] += x;
                add_term(&mut out, mono, &(&c * &factor));
            }
            return Ok(out);
        }
        if x < 0 {
            return Err(Error::InvalidPresentation(format!(
                "negative power of {} meets a rule with a tail",
                self.p.gens[t].name
            )));
        }
        let lam = rule.scalar.clone();
        let mut reduced = m.to_vec();
        reduced[t] -= 1;
        let (lead_factor, tail_terms, tail_factor) = if inverse {
            // g_t g_k^{-1} = λ^{-1} g_k^{-1} g_t − λ^{-1} g_k^{-1}·tail·g_k^{-1}
            let li = lam.inv()?;
            let d = self.inverse_tail(t, k)?;
            (li.clone(), d, -li)
        } else {
            (lam, rule.tail.clone(), RatFunc::one())
        };
        let mut out = Terms::new();
        for (mut mono, c) in self.mul_gen(&reduced, k, inverse)? {
            mono[t] += 1;
            add_term(&mut out, mono, &(&c * &lead_factor));
        }
        let prod = self.mul_terms(&Terms::from([(reduced, RatFunc::one())]), &tail_terms)?;
        add_terms(&mut out, &prod, &tail_factor);
        Ok(out)
    }

    /// `g_k^{-1}·tail(t, k)·g_k^{-1}` in normal form.
    fn inverse_tail(&mut self, t: usize, k: usize) -> Result<Terms> {
        if let Some(d) = self.inverse_tails.get(&(t, k)) {
            return Ok(d.clone());
        }
        let tail = self.p.rules[&(t, k)].tail.clone();
        let mut inv = self.unit();
        inv[k] = -1;
        let left = self.mul_terms(&Terms::from([(inv.clone(), RatFunc::one())]), &tail)?;
        let d = self.mul_terms(&left, &Terms::from([(inv, RatFunc::one())]))?;
        self.inverse_tails.insert((t, k), d.clone());
        Ok(d)
    }

    /// `a · b` for normal monomials.
    pub fn mul_mono(&mut self, a: &[i64], b: &[i64]) -> Result<Terms> {
        let mut cur = Terms::from([(a.to_vec(), RatFunc::one())]);
        for (k, &e) in b.iter().enumerate() {
            for _ in 0..e.unsigned_abs() {
                let mut next = Terms::new();
                for (m, c) in &cur {
                    let t = self.mul_gen(m, k, e < 0)?;
                    add_terms(&mut next, &t, c);
                }
                cur = next;
            }
        }
        Ok(cur)
    }

    pub fn mul_terms(&mut self, a: &Terms, b: &Terms) -> Result<Terms> {
        let mut out = Terms::new();
        for (mb, cb) in b {
            for (ma, ca) in a {
                let t = self.mul_mono(ma, mb)?;
                add_terms(&mut out, &t, &(ca * cb));
            }
        }
        Ok(out)
    }
}
