//! Permutations in one-line notation (0-based internally).

pub type Perm = Vec<usize>;

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Number of inversions, which is the Coxeter length.
pub fn length(a: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                n += 1;
            }
        }
    }
    n
}

/// The simple transposition `s_i` swapping `i` and `i+1` (0-based `i`).
pub fn simple(n: usize, i: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i, i + 1);
    p
}

/// A reduced word `[i_1, …, i_l]` with `σ = s_{i_1} ∘ … ∘ s_{i_l}`, found by
/// repeatedly stripping the smallest right descent.
pub fn reduced_word(a: &[usize]) -> Vec<usize> {
    let mut p = a.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// Every reduced word of `a`.
pub fn all_reduced_words(a: &[usize]) -> Vec<Vec<usize>> {
    if length(a) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..a.len() - 1 {
        if a[i] > a[i + 1] {
            let mut b = a.to_vec();
            b.swap(i, i + 1);
            for mut w in all_reduced_words(&b) {
                w.push(i);
                out.push(w);
            }
        }
    }
    out
}

pub fn from_word(n: usize, word: &[usize]) -> Perm {
    word.iter().fold(identity(n), |acc, &i| compose(&acc, &simple(n, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all(4).len(), 24);
        assert_eq!(all(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for p in all(4) {
            let w = reduced_word(&p);
            assert_eq!(w.len(), length(&p));
            assert_eq!(from_word(4, &w), p);
            let words = all_reduced_words(&p);
            assert!(words.contains(&w));
            for v in &words {
                assert_eq!(from_word(4, v), p);
            }
        }
        // the longest element of S_3 has exactly two reduced words
        assert_eq!(all_reduced_words(&[2, 1, 0]).len(), 2);
        // and of S_4, sixteen
        assert_eq!(all_reduced_words(&[3, 2, 1, 0]).len(), 16);
    }

    #[test]
    fn inverse_composes_to_identity() {
        for p in all(4) {
            assert_eq!(compose(&p, &inverse(&p)), identity(4));
        }
    }
}
