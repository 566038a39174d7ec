//! Diagonal braided vector spaces built from Cartan data, their diagram
//! automorphisms and the group of braided automorphisms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{self, Perm};
use crate::scalar::{BigRat, RatFunc};

/// A symmetrizable generalized Cartan matrix with its symmetrizing integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl CartanData {
    pub fn new(c: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let cd = Self { c, d };
        cd.validate()?;
        Ok(cd)
    }

    pub fn a2() -> Self {
        Self { c: vec![vec![2, -1], vec![-1, 2]], d: vec![1, 1] }
    }

    pub fn b2() -> Self {
        Self { c: vec![vec![2, -1], vec![-2, 2]], d: vec![2, 1] }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cd: Self = serde_json::from_str(text)
            .map_err(|e| Error::InvalidCartan(format!("malformed JSON: {e}")))?;
        cd.validate()?;
        Ok(cd)
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.c.len();
        let bad = |m: String| Err(Error::InvalidCartan(m));
        if n == 0 {
            return bad("empty matrix".into());
        }
        if self.c.iter().any(|row| row.len() != n) {
            return bad("matrix is not square".into());
        }
        if self.d.len() != n {
            return bad(format!("expected {n} symmetrizers, got {}", self.d.len()));
        }
        if let Some(i) = self.d.iter().position(|&x| x <= 0) {
            return bad(format!("d_{} must be positive", i + 1));
        }
        for i in 0..n {
            if self.c[i][i] != 2 {
                return bad(format!("diagonal entry a_{0}{0} must be 2", i + 1));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.c[i][j] > 0 {
                    return bad(format!("off-diagonal entry a_{}{} must be ≤ 0", i + 1, j + 1));
                }
                if (self.c[i][j] == 0) != (self.c[j][i] == 0) {
                    return bad(format!("a_{0}{1} = 0 must be equivalent to a_{1}{0} = 0", i + 1, j + 1));
                }
                if self.d[i] * self.c[i][j] != self.d[j] * self.c[j][i] {
                    return bad(format!("symmetrizability fails: d_{0}a_{0}{1} ≠ d_{1}a_{1}{0}", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

/// The matrix `(q_ij)` of a diagonal braiding `c(x_i⊗x_j) = q_ij x_j⊗x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingMatrix {
    q: Vec<Vec<RatFunc>>,
}

impl BraidingMatrix {
    pub fn new(q: Vec<Vec<RatFunc>>) -> Result<Self> {
        let n = q.len();
        if q.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument("braiding matrix is not square".into()));
        }
        if q.iter().flatten().any(RatFunc::is_zero) {
            return Err(Error::InvalidArgument("braiding matrix has a zero entry".into()));
        }
        Ok(Self { q })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    /// Entry `q_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.q[i][j]
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.q
    }

    /// Each entry as `c·q^e`, when every entry is a Laurent monomial.
    pub fn monomials(&self) -> Option<Vec<Vec<(BigRat, i64)>>> {
        self.q
            .iter()
            .map(|row| row.iter().map(RatFunc::as_monomial).collect())
            .collect()
    }
}

/// `q_ij = q^{d_i a_ij}`.
pub fn braiding_from_cartan(cd: &CartanData) -> Result<BraidingMatrix> {
    cd.validate()?;
    let n = cd.rank();
    let q = (0..n)
        .map(|i| (0..n).map(|j| RatFunc::q_pow(cd.d[i] * cd.c[i][j])).collect())
        .collect();
    BraidingMatrix::new(q)
}

/// Permutations σ (0-based one-line) with `q_ij = q_{σ(i)σ(j)}`, in lexicographic order.
pub fn autdiagr(b: &BraidingMatrix) -> Vec<Perm> {
    let n = b.n();
    perm::all(n)
        .into_iter()
        .filter(|s| (0..n).all(|i| (0..n).all(|j| b.get(i, j) == b.get(s[i], s[j]))))
        .collect()
}

/// Which of the three sufficient conditions of the structure lemma hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaConditions {
    /// Rows are pairwise distinct.
    pub i: bool,
    /// Columns are pairwise distinct.
    pub ii: bool,
    /// No 2×2 principal submatrix is constant.
    pub iii: bool,
}

impl LemmaConditions {
    pub fn any(&self) -> bool {
        self.i || self.ii || self.iii
    }
}

pub fn lemma_conditions(b: &BraidingMatrix) -> LemmaConditions {
    let n = b.n();
    let mut c = LemmaConditions { i: true, ii: true, iii: true };
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if (0..n).all(|h| b.get(i, h) == b.get(j, h)) {
                c.i = false;
            }
            if (0..n).all(|h| b.get(h, i) == b.get(h, j)) {
                c.ii = false;
            }
            let v = b.get(i, i);
            if b.get(i, j) == v && b.get(j, i) == v && b.get(j, j) == v {
                c.iii = false;
            }
        }
    }
    c
}

/// Exact determinant by Gaussian elimination over ℚ(q).
pub fn determinant(m: &[Vec<RatFunc>]) -> Result<RatFunc> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    let mut a = m.to_vec();
    let mut det = RatFunc::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(RatFunc::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = &det * &piv;
        let pinv = piv.inv()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &pinv;
            for k in col..n {
                let t = &f * &a[col][k];
                a[r][k] = &a[r][k] - &t;
            }
        }
    }
    Ok(det)
}

/// Whether `g` (column `i` is the image of `x_i`) commutes with the braiding
/// in the sense that `g⊗g` commutes with `c`.
pub fn glvc_member(g: &[Vec<RatFunc>], b: &BraidingMatrix) -> Result<bool> {
    let n = b.n();
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument(format!("expected a {n}×{n} matrix")));
    }
    if determinant(g)?.is_zero() {
        return Err(Error::Singular);
    }
    // q_ij λ_rj λ_si = q_sr λ_rj λ_si for all i, j, r, s, with λ_si = g[s][i]
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                if g[r][j].is_zero() {
                    continue;
                }
                for s in 0..n {
                    if !g[s][i].is_zero() && b.get(i, j) != b.get(s, r) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The matrix of `x_i ↦ λ_i x_{σ(i)}`.
pub fn monomial_matrix(sigma: &[usize], lambda: &[RatFunc]) -> Vec<Vec<RatFunc>> {
    let n = sigma.len();
    let mut g = vec![vec![RatFunc::zero(); n]; n];
    for i in 0..n {
        g[sigma[i]][i] = lambda[i].clone();
    }
    g
}

/// A group of the form `(k^×)^r ⋊ G` with `G` a group of permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDescription {
    pub torus_rank: usize,
    /// Permutations in 1-based one-line notation.
    pub diagram_group: Vec<Vec<usize>>,
    pub structure: String,
}

impl GroupDescription {
    fn from_group(n: usize, group: &[Perm]) -> Self {
        let factorial: usize = (1..=n).product();
        let g = if group.len() == 1 {
            "{id}".to_string()
        } else if group.len() == factorial {
            format!("S_{n}")
        } else {
            format!("G_{}", group.len())
        };
        Self {
            torus_rank: n,
            diagram_group: group.iter().map(|p| p.iter().map(|i| i + 1).collect()).collect(),
            structure: format!("(k^×)^{n} ⋊ {g}"),
        }
    }
}

/// `(k^×)^n ⋊ Autdiagr` when one of the lemma conditions holds, `None` otherwise.
pub fn glvc_structure(b: &BraidingMatrix) -> Option<GroupDescription> {
    lemma_conditions(b)
        .any()
        .then(|| GroupDescription::from_group(b.n(), &autdiagr(b)))
}

/// The Hopf automorphism group of the positive part and of its bosonization.
///
/// Every diagram automorphism is lifted to the lattice automorphism
/// `ε_i ↦ ε_{σ(i)}` of the group of grouplikes and the Yetter–Drinfeld data
/// `(K_i, χ_i)` is checked to be permuted accordingly.
pub fn hopf_aut_bosonization(cd: &CartanData) -> Result<GroupDescription> {
    let b = braiding_from_cartan(cd)?;
    let n = cd.rank();
    let group = autdiagr(&b);
    // χ_i(K_j) = q^{d_i a_ij}, stored as exponents
    let chi = |i: usize, j: usize| cd.d[i] * cd.c[i][j];
    for s in &group {
        // ψ as an integer matrix on ℤⁿ: column j is ψ(ε_j) = ε_{σ(j)}
        let mut psi = vec![vec![0i64; n]; n];
        for j in 0..n {
            psi[s[j]][j] = 1;
        }
        for i in 0..n {
            for j in 0..n {
                // χ_{σ(i)}(ψ(K_j)) with ψ(K_j) = Π_k K_k^{psi[k][j]}
                let lhs: i64 = (0..n).map(|k| psi[k][j] * chi(s[i], k)).sum();
                assert_eq!(lhs, chi(i, j), "character condition fails for σ = {s:?}");
            }
        }
    }
    for i in 0..n {
        assert_ne!(chi(i, i), 0, "χ_{} is trivial", i + 1);
    }
    Ok(GroupDescription::from_group(n, &group))
}
