//! The braided coproduct of `T(V)` and primitivity.

use std::collections::BTreeMap;

use super::{TensorElement, Word};
use crate::braided::BraidingMatrix;
use crate::error::{Error, Result};
use crate::scalar::RatFunc;

/// An element of `T(V) ⊗ T(V)` as a map from pairs of words to coefficients.
pub type Coproduct = BTreeMap<(Word, Word), RatFunc>;

fn add_into(out: &mut Coproduct, key: (Word, Word), c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(key.clone()).or_insert_with(RatFunc::zero);
    *entry = &*entry + &c;
    if entry.is_zero() {
        out.remove(&key);
    }
}

/// `Δ(w) = Σ_S (Π q_{w_p w_p'}) w|_S ⊗ w|_{S^c}`: the positions in `S` go to
/// the left factor, and each pair `p < p'` with `p ∉ S`, `p' ∈ S` has been
/// braided past each other.
pub fn braided_coproduct(t: &TensorElement, b: &BraidingMatrix) -> Coproduct {
    let mut out = Coproduct::new();
    for (w, c) in t.terms() {
        let m = w.len();
        assert!(m < usize::BITS as usize, "word too long for subset enumeration");
        for mask in 0usize..(1 << m) {
            let mut factor = c.clone();
            let mut left = Vec::new();
            let mut right = Vec::new();
            for p in 0..m {
                if mask >> p & 1 == 1 {
                    left.push(w[p]);
                    for pp in 0..p {
                        if mask >> pp & 1 == 0 {
                            factor = &factor * b.get(w[pp], w[p]);
                        }
                    }
                } else {
                    right.push(w[p]);
                }
            }
            add_into(&mut out, (left, right), factor);
        }
    }
    out
}

/// Whether `Δ(t) = t⊗1 + 1⊗t`.
pub fn is_primitive(t: &TensorElement, b: &BraidingMatrix) -> Result<bool> {
    match t.degree() {
        Some(d) if d >= 1 => {}
        Some(_) => return Err(Error::InvalidArgument("degree 0 element".into())),
        None if t.is_zero() => return Ok(true),
        None => return Err(Error::InvalidArgument("element is not homogeneous".into())),
    }
    let mut expect = Coproduct::new();
    for (w, c) in t.terms() {
        add_into(&mut expect, (w.clone(), Vec::new()), c.clone());
        add_into(&mut expect, (Vec::new(), w.clone()), c.clone());
    }
    Ok(braided_coproduct(t, b) == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{braiding_from_cartan, CartanData};
    use crate::scalar::LaurentPoly;

    fn a2() -> BraidingMatrix {
        braiding_from_cartan(&CartanData::a2()).unwrap()
    }

    #[test]
    fn letters_and_unit() {
        let d = braided_coproduct(&TensorElement::word(vec![0]), &a2());
        assert_eq!(d.len(), 2);
        assert!(d[&(vec![0], vec![])].is_one());
        assert!(d[&(vec![], vec![0])].is_one());
        let d = braided_coproduct(&TensorElement::word(vec![]), &a2());
        assert_eq!(d.len(), 1);
        assert!(d[&(vec![], vec![])].is_one());
    }

    #[test]
    fn two_letters_match_twisted_product() {
        // Δ(x1)Δ(x2) with (a⊗b)(c⊗d) = q_{b c}(ac⊗bd) on letters
        let d = braided_coproduct(&TensorElement::word(vec![0, 1]), &a2());
        assert_eq!(d.len(), 4);
        assert!(d[&(vec![0, 1], vec![])].is_one());
        assert!(d[&(vec![0], vec![1])].is_one());
        assert_eq!(d[&(vec![1], vec![0])], RatFunc::q_pow(-1));
        assert!(d[&(vec![], vec![0, 1])].is_one());
    }

    #[test]
    fn primitivity() {
        let b = a2();
        assert!(is_primitive(&TensorElement::word(vec![1]), &b).unwrap());
        assert!(!is_primitive(&TensorElement::word(vec![0, 1]), &b).unwrap());
        let c = RatFunc::from(-(&LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1)));
        let serre = TensorElement::from_terms([
            (vec![0, 0, 1], RatFunc::one()),
            (vec![0, 1, 0], c),
            (vec![1, 0, 0], RatFunc::one()),
        ]);
        assert!(is_primitive(&serre, &b).unwrap());
        let mixed = TensorElement::word(vec![0]).add(&TensorElement::word(vec![0, 1]));
        assert!(is_primitive(&mixed, &b).is_err());
    }
}
