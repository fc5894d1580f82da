use crate::error::{Result, ThetaError};
use crate::graph::ThetaGraph;

use super::{eig_sym, SpectrumResult, SymMatrix, DEFAULT_JACOBI_TOL};

/// An equitable partition with its neighbor counts and signless Laplacian
/// quotient matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitablePartition {
    pub blocks: Vec<Vec<usize>>,
    /// `neighbor_counts[i][j]`: neighbors a vertex of block `i` has in block `j`.
    pub neighbor_counts: Vec<Vec<usize>>,
    /// Off-diagonal entries `b_ij`; diagonal `b_ii + Σ_j b_ij`.
    pub quotient: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquitableCheck {
    Equitable { neighbor_counts: Vec<Vec<usize>> },
    /// Vertices `u`, `v` of `block` have different neighbor counts into
    /// `target`.
    NotEquitable {
        block: usize,
        target: usize,
        u: usize,
        v: usize,
    },
}

impl EquitableCheck {
    pub fn is_equitable(&self) -> bool {
        matches!(self, EquitableCheck::Equitable { .. })
    }
}

fn validate_partition(t: &ThetaGraph, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = t.n_vertices();
    let mut owner = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(ThetaError::Validation(format!("block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(ThetaError::Validation(format!("vertex {v} out of range")));
            }
            if owner[v] != usize::MAX {
                return Err(ThetaError::Validation(format!("vertex {v} appears in two blocks")));
            }
            owner[v] = b;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(ThetaError::Validation(format!("vertex {v} is not covered by any block")));
    }
    Ok(owner)
}

pub fn is_equitable(t: &ThetaGraph, blocks: &[Vec<usize>]) -> Result<EquitableCheck> {
    let owner = validate_partition(t, blocks)?;
    let k = blocks.len();
    let counts_of = |v: usize| {
        let mut c = vec![0usize; k];
        for w in t.neighbors(v) {
            c[owner[w]] += 1;
        }
        c
    };
    let mut neighbor_counts = Vec::with_capacity(k);
    for (b, block) in blocks.iter().enumerate() {
        let first = block[0];
        let reference = counts_of(first);
        for &v in &block[1..] {
            let c = counts_of(v);
            if let Some(target) = (0..k).find(|&j| c[j] != reference[j]) {
                return Ok(EquitableCheck::NotEquitable {
                    block: b,
                    target,
                    u: first,
                    v,
                });
            }
        }
        neighbor_counts.push(reference);
    }
    Ok(EquitableCheck::Equitable { neighbor_counts })
}

pub fn quotient_matrix(t: &ThetaGraph, blocks: &[Vec<usize>]) -> Result<EquitablePartition> {
    match is_equitable(t, blocks)? {
        EquitableCheck::NotEquitable { block, target, u, v } => Err(ThetaError::Validation(format!(
            "partition is not equitable: vertices {u} and {v} of block {block} differ in neighbors within block {target}"
        ))),
        EquitableCheck::Equitable { neighbor_counts } => {
            let k = blocks.len();
            let quotient = (0..k)
                .map(|i| {
                    let row_sum: usize = neighbor_counts[i].iter().sum();
                    (0..k)
                        .map(|j| {
                            if i == j {
                                (neighbor_counts[i][i] + row_sum) as i64
                            } else {
                                neighbor_counts[i][j] as i64
                            }
                        })
                        .collect()
                })
                .collect();
            Ok(EquitablePartition {
                blocks: blocks.to_vec(),
                neighbor_counts,
                quotient,
            })
        }
    }
}

impl EquitablePartition {
    /// Eigenvalues of the quotient. The quotient is not symmetric in general
    /// but `|V_i| b_ij = |V_j| b_ji`, so scaling by `√(|V_i| / |V_j|)` gives a
    /// similar symmetric matrix.
    pub fn spectrum(&self) -> Result<SpectrumResult> {
        let k = self.blocks.len();
        let sizes: Vec<f64> = self.blocks.iter().map(|b| b.len() as f64).collect();
        let mut m = SymMatrix::zeros(k);
        for i in 0..k {
            m.set(i, i, self.quotient[i][i] as f64);
            for j in (i + 1)..k {
                let v = self.quotient[i][j] as f64 * (sizes[i] / sizes[j]).sqrt();
                m.set(i, j, v);
            }
        }
        eig_sym(&m, DEFAULT_JACOBI_TOL)
    }
}
