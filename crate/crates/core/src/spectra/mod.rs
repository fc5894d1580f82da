//! Signless Laplacian spectra: the matrix `Q = D + A`, a Jacobi eigensolver,
//! exact closed forms for the cyclic and dihedral families, and the
//! equitable-partition quotient machinery connecting the two.

mod closed_form;
mod equitable;
mod matrix;
mod surd;

use serde::{Deserialize, Serialize};

pub use closed_form::{
    closed_form_quotient, closed_form_spectrum, theorem_partition, NumberShape, SpectrumFamily,
};
pub use equitable::{is_equitable, quotient_matrix, EquitableCheck, EquitablePartition};
pub use matrix::{build_q, jacobi_eigenvalues, SymMatrix};
pub use surd::Surd;

use crate::error::Result;

/// Default Jacobi stopping threshold relative to `‖m‖_F`.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-14;
/// Tolerance for comparing a closed form with a numeric spectrum.
pub const DEFAULT_COMPARE_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigenvalue {
    Exact(Surd),
    Numeric(f64),
}

impl Eigenvalue {
    pub fn value(&self) -> f64 {
        match self {
            Eigenvalue::Exact(s) => s.value(),
            Eigenvalue::Numeric(x) => *x,
        }
    }

    pub fn display(&self) -> String {
        match self {
            Eigenvalue::Exact(s) => s.to_string(),
            Eigenvalue::Numeric(x) => format!("{x:.10}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    ClosedForm,
    Numeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

/// Eigenvalue multiset, sorted descending by value.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub entries: Vec<SpectrumEntry>,
    pub kind: SpectrumKind,
}

/// JSON form of one spectrum entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntryDoc {
    pub value_display: String,
    pub value_numeric: f64,
    pub multiplicity: usize,
    pub kind: SpectrumKind,
}

impl SpectrumResult {
    /// Exact values; identical values are merged before sorting.
    pub fn from_exact(values: impl IntoIterator<Item = (Surd, usize)>) -> Self {
        let mut merged: Vec<(Surd, usize)> = Vec::new();
        for (v, m) in values {
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some((_, k)) => *k += m,
                None => merged.push((v, m)),
            }
        }
        merged.sort_by_key(|e| std::cmp::Reverse(e.0));
        SpectrumResult {
            entries: merged
                .into_iter()
                .map(|(v, m)| SpectrumEntry {
                    value: Eigenvalue::Exact(v),
                    multiplicity: m,
                })
                .collect(),
            kind: SpectrumKind::ClosedForm,
        }
    }

    /// Groups raw eigenvalues whose consecutive gaps are within `threshold`;
    /// each group is reported at its mean.
    pub fn from_numeric(mut values: Vec<f64>, threshold: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut group: Vec<f64> = Vec::new();
        let flush = |group: &mut Vec<f64>, entries: &mut Vec<SpectrumEntry>| {
            if !group.is_empty() {
                let mean = group.iter().sum::<f64>() / group.len() as f64;
                entries.push(SpectrumEntry {
                    value: Eigenvalue::Numeric(mean),
                    multiplicity: group.len(),
                });
                group.clear();
            }
        };
        for v in values {
            if group.last().is_some_and(|&last| last - v > threshold) {
                flush(&mut group, &mut entries);
            }
            group.push(v);
        }
        flush(&mut group, &mut entries);
        SpectrumResult {
            entries,
            kind: SpectrumKind::Numeric,
        }
    }

    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.value.value() * e.multiplicity as f64).sum()
    }

    pub fn min_value(&self) -> Option<f64> {
        self.entries.iter().map(|e| e.value.value()).reduce(f64::min)
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value.value(), e.multiplicity))
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// `(value, multiplicity)` pairs.
    pub fn pairs(&self) -> Vec<(f64, usize)> {
        self.entries.iter().map(|e| (e.value.value(), e.multiplicity)).collect()
    }

    pub fn to_docs(&self) -> Vec<SpectrumEntryDoc> {
        self.entries
            .iter()
            .map(|e| SpectrumEntryDoc {
                value_display: e.value.display(),
                value_numeric: e.value.value(),
                multiplicity: e.multiplicity,
                kind: self.kind,
            })
            .collect()
    }
}

/// Numeric spectrum of a symmetric matrix. Eigenvalues closer than
/// `1e-7 · max(1, ‖m‖_F)` are reported as one value with multiplicity.
pub fn eig_sym(m: &SymMatrix, tol: f64) -> Result<SpectrumResult> {
    let values = jacobi_eigenvalues(m, tol)?;
    let threshold = 1e-7 * m.frobenius_norm().max(1.0);
    Ok(SpectrumResult::from_numeric(values, threshold))
}

/// Whether every eigenvalue of `sub` (with multiplicity) can be matched
/// within `tol` to a distinct eigenvalue of `full`.
pub fn spectrum_contains(sub: &SpectrumResult, full: &SpectrumResult, tol: f64) -> bool {
    let mut pool = full.expanded();
    for x in sub.expanded() {
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, y)| (x - **y).abs() <= tol)
            .min_by(|a, b| (x - a.1).abs().total_cmp(&(x - b.1).abs()))
            .map(|(i, _)| i);
        match best {
            Some(i) => {
                pool.remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Same dimension and elementwise agreement of the sorted eigenvalue lists.
pub fn spectra_equal(a: &SpectrumResult, b: &SpectrumResult, tol: f64) -> bool {
    let (x, y) = (a.expanded(), b.expanded());
    x.len() == y.len() && x.iter().zip(&y).all(|(p, q)| (p - q).abs() <= tol)
}
