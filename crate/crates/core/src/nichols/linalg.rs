//! Exact and modular linear algebra over Laurent-polynomial matrices.

use crate::scalar::{modp, LaurentPoly};

/// Result of fraction-free Gauss–Jordan elimination: every pivot column is
/// `d` times a unit vector, and `rows[i]` is the pivot row for `pivots[i]`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub d: LaurentPoly,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<LaurentPoly>>,
    pub ncols: usize,
}

/// Bareiss-style fraction-free Gauss–Jordan elimination. All divisions are
/// exact because every intermediate entry is a minor of the input.
pub fn bareiss(m: &[Vec<LaurentPoly>]) -> Echelon {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].len())
        else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in 0..nrows {
            if i == r {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                let t = &(&piv * &a[i][j]) - &(&f * &a[r][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = LaurentPoly::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { d: prev, pivots, rows: a, ncols }
}

pub fn rank_exact(m: &[Vec<LaurentPoly>]) -> usize {
    bareiss(m).pivots.len()
}

/// A basis of the right kernel, one vector per non-pivot column.
pub fn kernel(m: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let e = bareiss(m);
    let mut out = Vec::new();
    for f in 0..e.ncols {
        if e.pivots.contains(&f) {
            continue;
        }
        let mut v = vec![LaurentPoly::zero(); e.ncols];
        v[f] = e.d.clone();
        for (i, &c) in e.pivots.iter().enumerate() {
            v[c] = -&e.rows[i][f];
        }
        out.push(v);
    }
    out
}

pub fn mat_vec(m: &[Vec<LaurentPoly>], v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    m.iter()
        .map(|row| {
            let mut acc = LaurentPoly::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
        .collect()
}

/// Rank of the matrix evaluated at `q = t`, or `None` if an entry is undefined there.
pub fn rank_at(m: &[Vec<LaurentPoly>], t: u64) -> Option<usize> {
    let rows: Option<Vec<Vec<u64>>> =
        m.iter().map(|r| r.iter().map(|e| e.eval_mod(t)).collect()).collect();
    Some(modp::rank(rows?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BigRat;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRat::from_integer(c.into()))))
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        let m = vec![vec![one.clone(), q.clone()], vec![q.clone(), &q * &q]];
        assert_eq!(rank_exact(&m), 1);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&m, &k[0]).iter().all(LaurentPoly::is_zero));
        assert_eq!(rank_at(&m, 7), Some(1));
    }

    #[test]
    fn full_rank_3x3() {
        let m = vec![
            vec![lp(&[(1, 1)]), lp(&[(0, 2)]), lp(&[(-1, 1), (0, 1)])],
            vec![lp(&[(0, 1)]), lp(&[(2, 1)]), lp(&[(0, 3)])],
            vec![lp(&[(1, 1), (0, 1)]), lp(&[(2, 1), (0, 2)]), lp(&[(-1, 1), (0, 4)])],
        ];
        // third row = first + second, so rank 2
        assert_eq!(rank_exact(&m), 2);
        for v in kernel(&m) {
            assert!(mat_vec(&m, &v).iter().all(LaurentPoly::is_zero));
        }
        let e = bareiss(&m);
        for (i, &c) in e.pivots.iter().enumerate() {
            assert_eq!(e.rows[i][c], e.d);
        }
    }
}
