//! The braid-group action on `V^{⊗m}` through the Matsumoto section.

use super::{TensorElement, Word};
use crate::braided::BraidingMatrix;
use crate::perm;
use crate::scalar::RatFunc;

/// Applies `ρ(σ_{i_1}⋯σ_{i_l})` to a word, rightmost letter first; each
/// `σ_i` acts as `c` on the factors at positions `i, i+1`.
pub fn apply_reduced_word(letters: &[usize], w: &[usize], b: &BraidingMatrix) -> (RatFunc, Word) {
    let mut w = w.to_vec();
    let mut coeff = RatFunc::one();
    for &i in letters.iter().rev() {
        coeff = &coeff * b.get(w[i], w[i + 1]);
        w.swap(i, i + 1);
    }
    (coeff, w)
}

/// `ρ(s(σ))(w)`, computed along the canonical reduced word of σ.
pub fn matsumoto_apply(sigma: &[usize], w: &[usize], b: &BraidingMatrix) -> TensorElement {
    assert_eq!(sigma.len(), w.len(), "permutation and word lengths differ");
    let (c, out) = apply_reduced_word(&perm::reduced_word(sigma), w, b);
    TensorElement::term(out, c)
}
