//! Ranks of symmetrizer blocks and the new relations they contribute.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::linalg::{kernel, rank_at};
use super::symmetrizer::{symmetrizer_block_with, words_of_multidegree, DEFAULT_MAX_DEGREE};
use super::{TensorElement, Word};
use crate::braided::BraidingMatrix;
use crate::error::{Error, Result};
use crate::scalar::{modp, RatFunc};

/// How a block's rank was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The rank at a sample point met the bound from lower-degree relations.
    Sandwich,
    /// Exact fraction-free elimination over ℚ[q^±1].
    Exact,
}

#[derive(Debug, Clone)]
pub struct BlockReport {
    pub degree: usize,
    pub multidegree: Vec<usize>,
    pub dim: usize,
    pub rank: usize,
    /// Dimension of the degree-`m` part of the ideal generated in lower degrees.
    pub ideal_dim: usize,
    pub new_relations: Vec<TensorElement>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationSpace {
    pub degree: usize,
    pub multidegree: Vec<usize>,
    pub relations: Vec<TensorElement>,
}

/// The new relations of every block that has any, ordered by degree and multidegree.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RelationBasis {
    pub spaces: Vec<RelationSpace>,
}

impl RelationBasis {
    pub fn count(&self) -> usize {
        self.spaces.iter().map(|s| s.relations.len()).sum()
    }

    pub fn space(&self, multidegree: &[usize]) -> Option<&RelationSpace> {
        self.spaces.iter().find(|s| s.multidegree == multidegree)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RelationSpace, &TensorElement)> {
        self.spaces.iter().flat_map(|s| s.relations.iter().map(move |r| (s, r)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(s, r)| {
                    json!({
                        "degree": s.degree,
                        "multidegree": s.multidegree,
                        "relation": r.to_json(),
                    })
                })
                .collect(),
        )
    }
}

pub(crate) fn compositions(m: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for k in (0..=m).rev() {
        for mut rest in compositions(m - k, n - 1) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Block ranks and new relations for every degree `1..=max_degree`.
pub fn analyze(b: &BraidingMatrix, max_degree: usize) -> Result<Vec<Vec<BlockReport>>> {
    if max_degree > DEFAULT_MAX_DEGREE {
        return Err(Error::Resource(format!(
            "degree {max_degree} exceeds the bound {DEFAULT_MAX_DEGREE}"
        )));
    }
    let n = b.n();
    let mut lower: Vec<(usize, Vec<usize>, TensorElement)> = Vec::new();
    let mut out = Vec::new();
    for m in 1..=max_degree {
        let reports: Vec<BlockReport> = compositions(m, n)
            .into_par_iter()
            .map(|mu| analyze_block(m, &mu, b, &lower))
            .collect::<Result<_>>()?;
        for r in &reports {
            for rel in &r.new_relations {
                lower.push((m, r.multidegree.clone(), rel.clone()));
            }
        }
        out.push(reports);
    }
    Ok(out)
}

fn ideal_generators(
    m: usize,
    mu: &[usize],
    lower: &[(usize, Vec<usize>, TensorElement)],
    words: &[Word],
) -> Vec<Vec<(usize, RatFunc)>> {
    let idx = |w: &[usize]| {
        words
            .binary_search_by(|x| x.as_slice().cmp(w))
            .expect("ideal element stays in its multidegree")
    };
    let mut gens = Vec::new();
    for (k, nu, r) in lower {
        if *k >= m || nu.iter().zip(mu).any(|(a, b)| a > b) {
            continue;
        }
        let rest: Vec<usize> = mu.iter().zip(nu).map(|(a, b)| a - b).collect();
        for s in words_of_multidegree(&rest) {
            for split in 0..=s.len() {
                let row = r
                    .terms()
                    .map(|(w, c)| {
                        let mut full = s[..split].to_vec();
                        full.extend_from_slice(w);
                        full.extend_from_slice(&s[split..]);
                        (idx(&full), c.clone())
                    })
                    .collect();
                gens.push(row);
            }
        }
    }
    gens
}

fn eval_sparse(rows: &[Vec<(usize, RatFunc)>], ncols: usize, t: u64) -> Option<Vec<Vec<u64>>> {
    rows.iter()
        .map(|r| {
            let mut v = vec![0u64; ncols];
            for (i, c) in r {
                v[*i] = modp::add(v[*i], c.eval_mod(t)?);
            }
            Some(v)
        })
        .collect()
}

const ATTEMPTS: usize = 4;

fn analyze_block(
    m: usize,
    mu: &[usize],
    b: &BraidingMatrix,
    lower: &[(usize, Vec<usize>, TensorElement)],
) -> Result<BlockReport> {
    let block = symmetrizer_block_with(m, mu, b, DEFAULT_MAX_DEGREE)?;
    let dim = block.dim();
    let gens = ideal_generators(m, mu, lower, &block.words);
    let mut best_lower = 0;
    let mut best_ideal = 0;
    for attempt in 0..ATTEMPTS {
        let t = modp::sample_point(attempt);
        if let Some(r) = rank_at(&block.matrix, t) {
            best_lower = best_lower.max(r);
        }
        if let Some(rows) = eval_sparse(&gens, dim, t) {
            best_ideal = best_ideal.max(modp::rank(rows));
        }
        // rank ≥ best_lower and rank ≤ dim − dim(ideal) ≤ dim − best_ideal
        if best_lower + best_ideal == dim {
            return Ok(BlockReport {
                degree: m,
                multidegree: mu.to_vec(),
                dim,
                rank: best_lower,
                ideal_dim: best_ideal,
                new_relations: Vec::new(),
                method: Method::Sandwich,
            });
        }
    }

    let ker = kernel(&block.matrix);
    let rank = dim - ker.len();
    for attempt in 0..ATTEMPTS {
        let t = modp::sample_point(attempt);
        let Some(mut rows) = eval_sparse(&gens, dim, t) else {
            continue;
        };
        let base = modp::rank(rows.clone());
        if base < best_ideal {
            continue;
        }
        let mut cur = base;
        let mut chosen = Vec::new();
        for v in &ker {
            if cur == ker.len() {
                break;
            }
            let Some(vrow) = v.iter().map(|e| e.eval_mod(t)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            rows.push(vrow);
            let r = modp::rank(rows.clone());
            if r > cur {
                cur = r;
                chosen.push(v);
            } else {
                rows.pop();
            }
        }
        if cur != ker.len() {
            continue;
        }
        let new_relations = chosen
            .into_iter()
            .map(|v| {
                TensorElement::from_terms(
                    block.words.iter().cloned().zip(v.iter().map(|c| RatFunc::from(c.clone()))),
                )
                .normalized()
            })
            .collect();
        return Ok(BlockReport {
            degree: m,
            multidegree: mu.to_vec(),
            dim,
            rank,
            ideal_dim: base,
            new_relations,
            method: Method::Exact,
        });
    }
    Err(Error::Resource(format!(
        "could not separate the new relations of multidegree {mu:?} at the sample points"
    )))
}

pub fn minimal_relations(b: &BraidingMatrix, max_degree: usize) -> Result<RelationBasis> {
    let reports = analyze(b, max_degree)?;
    let spaces = reports
        .into_iter()
        .flatten()
        .filter(|r| !r.new_relations.is_empty())
        .map(|r| RelationSpace { degree: r.degree, multidegree: r.multidegree, relations: r.new_relations })
        .collect();
    Ok(RelationBasis { spaces })
}

/// Dimensions of the Nichols algebra in degrees `0..=max_degree`.
pub fn nichols_hilbert_series(b: &BraidingMatrix, max_degree: usize) -> Result<Vec<usize>> {
    let mut out = vec![1];
    for reports in analyze(b, max_degree)? {
        out.push(reports.iter().map(|r| r.rank).sum());
    }
    Ok(out)
}

pub fn nichols_dimension(m: usize, b: &BraidingMatrix) -> Result<usize> {
    Ok(nichols_hilbert_series(b, m)?[m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{braiding_from_cartan, CartanData};
    use crate::nichols::linalg::mat_vec;
    use crate::nichols::symmetrizer_block;
    use crate::scalar::LaurentPoly;

    #[test]
    fn a2_serre_relations() {
        let b = braiding_from_cartan(&CartanData::a2()).unwrap();
        let rels = minimal_relations(&b, 4).unwrap();
        assert_eq!(rels.count(), 2);
        let s = rels.space(&[2, 1]).unwrap();
        assert_eq!(s.degree, 3);
        assert_eq!(s.relations[0].to_string(), "x1*x1*x2 - (q+q^-1)*x1*x2*x1 + x2*x1*x1");
        assert!(rels.space(&[1, 2]).is_some());
    }

    #[test]
    fn degree_one_has_no_relations() {
        let b = braiding_from_cartan(&CartanData::b2()).unwrap();
        assert_eq!(minimal_relations(&b, 1).unwrap().count(), 0);
        assert_eq!(nichols_dimension(1, &b).unwrap(), 2);
        assert_eq!(nichols_dimension(0, &b).unwrap(), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let b = braiding_from_cartan(&CartanData::b2()).unwrap();
        let blk = symmetrizer_block(4, &[1, 3], &b).unwrap();
        let ker = kernel(&blk.matrix);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(mat_vec(&blk.matrix, v).iter().all(LaurentPoly::is_zero));
        }
    }

    #[test]
    fn compositions_cover_all_multidegrees() {
        assert_eq!(compositions(3, 2), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(compositions(2, 3).len(), 6);
    }

    #[test]
    fn resource_bound() {
        let b = braiding_from_cartan(&CartanData::a2()).unwrap();
        assert!(matches!(analyze(&b, 9), Err(Error::Resource(_))));
    }
}
