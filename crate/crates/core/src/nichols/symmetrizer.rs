//! Quantum symmetrizer blocks `𝔖_m` restricted to one multidegree.

use std::collections::HashMap;

use num_traits::One;

use super::Word;
use crate::braided::BraidingMatrix;
use crate::error::{Error, Result};
use crate::scalar::{BigRat, LaurentPoly};

pub const DEFAULT_MAX_DEGREE: usize = 8;

/// The matrix of `𝔖_m` on the words of one multidegree. Rows index output
/// words, columns input words, both in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizerBlock {
    pub m: usize,
    pub multidegree: Vec<usize>,
    pub words: Vec<Word>,
    pub matrix: Vec<Vec<LaurentPoly>>,
}

impl SymmetrizerBlock {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &[usize]) -> Option<usize> {
        self.words.binary_search_by(|x| x.as_slice().cmp(w)).ok()
    }

    pub fn eval_mod(&self, t: u64) -> Option<Vec<Vec<u64>>> {
        self.matrix
            .iter()
            .map(|row| row.iter().map(|e| e.eval_mod(t)).collect())
            .collect()
    }
}

/// All words with the given letter counts, in lexicographic order.
pub fn words_of_multidegree(mu: &[usize]) -> Vec<Word> {
    fn rec(left: &mut [usize], cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for a in 0..left.len() {
            if left[a] > 0 {
                left[a] -= 1;
                cur.push(a);
                rec(left, cur, out);
                cur.pop();
                left[a] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut mu.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn monomial_entries(b: &BraidingMatrix) -> Result<Vec<Vec<(BigRat, i64)>>> {
    b.monomials().ok_or_else(|| {
        Error::InvalidArgument("symmetrizer blocks need braiding entries of the form c·q^e".into())
    })
}

fn check(m: usize, mu: &[usize], b: &BraidingMatrix, max_degree: usize) -> Result<()> {
    if m > max_degree {
        return Err(Error::Resource(format!("degree {m} exceeds the bound {max_degree}")));
    }
    if mu.len() != b.n() || mu.iter().sum::<usize>() != m {
        return Err(Error::InvalidArgument(format!("multidegree {mu:?} does not match degree {m}")));
    }
    Ok(())
}

fn assemble(
    m: usize,
    mu: &[usize],
    words: Vec<Word>,
    columns: impl Iterator<Item = Vec<(Word, LaurentPoly)>>,
) -> SymmetrizerBlock {
    let mut block = SymmetrizerBlock {
        m,
        multidegree: mu.to_vec(),
        matrix: vec![vec![LaurentPoly::zero(); words.len()]; words.len()],
        words,
    };
    for (col, entries) in columns.enumerate() {
        for (w, c) in entries {
            let row = block.index_of(&w).expect("symmetrizer preserves multidegree");
            block.matrix[row][col] += &c;
        }
    }
    block
}

pub fn symmetrizer_block(m: usize, mu: &[usize], b: &BraidingMatrix) -> Result<SymmetrizerBlock> {
    symmetrizer_block_with(m, mu, b, DEFAULT_MAX_DEGREE)
}

/// Assembles the block through `𝔖_m = (1 + c_{m−1} + c_{m−2}c_{m−1} + ⋯)(𝔖_{m−1} ⊗ id)`,
/// i.e. by inserting the last letter at every position of every word of
/// `𝔖_{m−1}` applied to the prefix.
pub fn symmetrizer_block_with(
    m: usize,
    mu: &[usize],
    b: &BraidingMatrix,
    max_degree: usize,
) -> Result<SymmetrizerBlock> {
    check(m, mu, b, max_degree)?;
    let q = monomial_entries(b)?;
    let mut memo: HashMap<Word, Vec<(Word, LaurentPoly)>> = HashMap::new();
    let words = words_of_multidegree(mu);
    let cols: Vec<_> = words.iter().map(|w| sym_word(w, &q, &mut memo)).collect();
    Ok(assemble(m, mu, words, cols.into_iter()))
}

fn sym_word(
    w: &[usize],
    q: &[Vec<(BigRat, i64)>],
    memo: &mut HashMap<Word, Vec<(Word, LaurentPoly)>>,
) -> Vec<(Word, LaurentPoly)> {
    if w.len() <= 1 {
        return vec![(w.to_vec(), LaurentPoly::one())];
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let m = w.len();
    let a = w[m - 1];
    let prev = sym_word(&w[..m - 1], q, memo);
    let mut acc: HashMap<Word, LaurentPoly> = HashMap::new();
    for (u, c) in &prev {
        let mut coef = BigRat::one();
        let mut exp = 0i64;
        for k in (0..m).rev() {
            if k < m - 1 {
                let (qc, qe) = &q[u[k]][a];
                coef *= qc;
                exp += qe;
            }
            let mut out = Vec::with_capacity(m);
            out.extend_from_slice(&u[..k]);
            out.push(a);
            out.extend_from_slice(&u[k..]);
            *acc.entry(out).or_default() += &c.mul_monomial(&coef, exp);
        }
    }
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|x, y| x.0.cmp(&y.0));
    memo.insert(w.to_vec(), v.clone());
    v
}

/// The block as the literal sum over all `m!` permutations: `σ` sends the
/// letter at position `p` to position `σ(p)` with coefficient the product of
/// `q_{w_p w_p'}` over the pairs `p < p'` that it inverts.
pub fn symmetrizer_block_direct(m: usize, mu: &[usize], b: &BraidingMatrix) -> Result<SymmetrizerBlock> {
    check(m, mu, b, DEFAULT_MAX_DEGREE)?;
    let q = monomial_entries(b)?;
    let words = words_of_multidegree(mu);
    let cols: Vec<_> = words
        .iter()
        .map(|w| {
            let mut acc: HashMap<Word, LaurentPoly> = HashMap::new();
            let mut target = vec![usize::MAX; m];
            let mut used = vec![false; m];
            dfs(w, &q, 0, &mut target, &mut used, BigRat::one(), 0, &mut acc);
            let mut v: Vec<_> = acc.into_iter().collect();
            v.sort_by(|x, y| x.0.cmp(&y.0));
            v
        })
        .collect();
    Ok(assemble(m, mu, words, cols.into_iter()))
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    w: &[usize],
    q: &[Vec<(BigRat, i64)>],
    p: usize,
    target: &mut [usize],
    used: &mut [bool],
    coef: BigRat,
    exp: i64,
    acc: &mut HashMap<Word, LaurentPoly>,
) {
    let m = w.len();
    if p == m {
        let mut out = vec![0; m];
        for i in 0..m {
            out[target[i]] = w[i];
        }
        *acc.entry(out).or_default() += &LaurentPoly::monomial(coef, exp);
        return;
    }
    for t in 0..m {
        if used[t] {
            continue;
        }
        let mut c = coef.clone();
        let mut e = exp;
        for pp in 0..p {
            if target[pp] > t {
                let (qc, qe) = &q[w[pp]][w[p]];
                c *= qc;
                e += qe;
            }
        }
        used[t] = true;
        target[p] = t;
        dfs(w, q, p + 1, target, used, c, e, acc);
        used[t] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{braiding_from_cartan, CartanData};
    use crate::scalar::RatFunc;

    fn compositions(m: usize, n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![m]];
        }
        (0..=m)
            .flat_map(|k| {
                compositions(m - k, n - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, k);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn small_blocks() {
        let b = braiding_from_cartan(&CartanData::a2()).unwrap();
        let one = symmetrizer_block(1, &[1, 0], &b).unwrap();
        assert_eq!(one.matrix, vec![vec![LaurentPoly::one()]]);
        let blk = symmetrizer_block(2, &[1, 1], &b).unwrap();
        assert_eq!(blk.words, vec![vec![0, 1], vec![1, 0]]);
        let qm1 = LaurentPoly::q_pow(-1);
        assert_eq!(
            blk.matrix,
            vec![vec![LaurentPoly::one(), qm1.clone()], vec![qm1, LaurentPoly::one()]]
        );
        let blk = symmetrizer_block(2, &[2, 0], &b).unwrap();
        assert_eq!(blk.matrix, vec![vec![&LaurentPoly::one() + &LaurentPoly::q_pow(2)]]);
    }

    #[test]
    fn factorization_matches_direct_sum() {
        let three = BraidingMatrix::new(vec![
            vec![RatFunc::q_pow(2), RatFunc::q_pow(-1), RatFunc::from_int(3)],
            vec![RatFunc::q_pow(-3), RatFunc::q_pow(4), RatFunc::q_pow(1)],
            vec![RatFunc::from_int(-1), RatFunc::q_pow(0), RatFunc::q_pow(-2)],
        ])
        .unwrap();
        for b in [
            braiding_from_cartan(&CartanData::a2()).unwrap(),
            braiding_from_cartan(&CartanData::b2()).unwrap(),
            three,
        ] {
            for m in 1..=5 {
                for mu in compositions(m, b.n()) {
                    assert_eq!(
                        symmetrizer_block(m, &mu, &b).unwrap(),
                        symmetrizer_block_direct(m, &mu, &b).unwrap(),
                        "m={m} mu={mu:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_bound_is_enforced() {
        let b = braiding_from_cartan(&CartanData::a2()).unwrap();
        assert!(matches!(symmetrizer_block(9, &[5, 4], &b), Err(Error::Resource(_))));
        assert!(symmetrizer_block_with(9, &[5, 4], &b, 9).is_ok());
    }

    #[test]
    fn words_in_lex_order() {
        assert_eq!(
            words_of_multidegree(&[2, 1]),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
        assert_eq!(words_of_multidegree(&[4, 4]).len(), 70);
    }
}
