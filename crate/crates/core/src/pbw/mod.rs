//! Rewriting systems for iterated Ore extensions: normal forms, confluence,
//! centrality and homomorphism checks, and the built-in algebras.

mod builtins;
mod checks;
mod element;
pub mod identities;
mod presentation;
mod rewrite;

pub use builtins::{all_builtins, builtin_presentation, BUILTIN_NAMES};
pub use checks::{
    confluence_check, hilbert_count, hom_check, is_central, q_bracket, q_normality, quotient_check, quotient_map, relation_consistency,
    AlgebraHom, HomReport, NormalityReport, Overlap, QuotientReport,
};
pub use element::AlgebraElement;
pub use presentation::{
    Generator, Monomial, Presentation, PresentationSpec, Rule, RuleSpec, TermSpec, Terms,
};
pub use rewrite::STEP_LIMIT;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{parse_expr, Expr};
use crate::scalar::RatFunc;

/// Evaluates an expression made of numbers and `q` only.
pub fn scalar_from_expr(e: &Expr) -> Result<RatFunc> {
    Ok(match e {
        Expr::Num(n) => RatFunc::from(crate::scalar::BigRat::from_integer(n.clone())),
        Expr::Q => RatFunc::q_pow(1),
        Expr::Ident(name) => {
            return Err(Error::InvalidArgument(format!("expected a scalar, found `{name}`")))
        }
        Expr::Neg(a) => -scalar_from_expr(a)?,
        Expr::Add(a, b) => scalar_from_expr(a)? + scalar_from_expr(b)?,
        Expr::Sub(a, b) => scalar_from_expr(a)? - scalar_from_expr(b)?,
        Expr::Mul(a, b) => scalar_from_expr(a)? * scalar_from_expr(b)?,
        Expr::Div(a, b) => scalar_from_expr(a)?.div(&scalar_from_expr(b)?)?,
        Expr::Pow(a, k) => scalar_from_expr(a)?.pow(*k)?,
    })
}

pub fn parse_scalar(text: &str) -> Result<RatFunc> {
    scalar_from_expr(&parse_expr(text)?)
}

/// Normal form of an expression in the given presentation.
pub fn normal_form(p: &Arc<Presentation>, text: &str) -> Result<AlgebraElement> {
    AlgebraElement::parse(p, text)
}

pub fn named_element(p: &Arc<Presentation>, name: &str) -> Result<AlgebraElement> {
    AlgebraElement::named(p, name)
}
