//! The tensor algebra of a diagonal braided vector space, its quantum
//! symmetrizers and the defining relations of the Nichols algebra.

mod coproduct;
pub mod linalg;
mod matsumoto;
mod relations;
mod symmetrizer;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::display::render_terms;
use crate::scalar::RatFunc;

pub use coproduct::{braided_coproduct, is_primitive, Coproduct};
pub use matsumoto::{apply_reduced_word, matsumoto_apply};
pub use relations::{
    analyze, minimal_relations, nichols_dimension, nichols_hilbert_series, BlockReport, Method,
    RelationBasis, RelationSpace,
};
pub use symmetrizer::{
    symmetrizer_block, symmetrizer_block_direct, symmetrizer_block_with, words_of_multidegree,
    SymmetrizerBlock, DEFAULT_MAX_DEGREE,
};

/// A word in the letters `0..n` (printed 1-based).
pub type Word = Vec<usize>;

pub fn multidegree(w: &[usize], n: usize) -> Vec<usize> {
    let mut mu = vec![0; n];
    for &a in w {
        mu[a] += 1;
    }
    mu
}

pub fn word_text(w: &[usize]) -> String {
    w.iter().map(|a| format!("x{}", a + 1)).collect::<Vec<_>>().join("*")
}

/// A finite linear combination of words with ℚ(q) coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<Word, RatFunc>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn term(w: Word, c: RatFunc) -> Self {
        let mut t = Self::zero();
        t.add_term(w, &c);
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RatFunc)>>(it: I) -> Self {
        let mut t = Self::zero();
        for (w, c) in it {
            t.add_term(w, &c);
        }
        t
    }

    pub fn add_term(&mut self, w: Word, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[usize]) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common length of all words, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    /// Concatenation product in `T(V)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(a * b));
            }
        }
        out
    }

    /// Rescaled so the lexicographically least word has coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.terms.values().next() {
            Some(c) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
            None => Self::zero(),
        }
    }

    /// Whether `other = λ·self` for some nonzero scalar λ.
    pub fn proportional(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    json!({
                        "word": w.iter().map(|a| a + 1).collect::<Vec<_>>(),
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(w, c)| (c, word_text(w)))))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}
