//! Dense square matrices and vectors over the exact scalar ring.

use crate::dyadic::DyadicComplex;
use sha2::{Digest, Sha256};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unknown matrix name: {0}")]
    UnknownMatrix(String),
    #[error("matrix {name} failed the unitarity check at entry ({row}, {col})")]
    TranscriptionNotUnitary { name: String, row: usize, col: usize },
    #[error("matrix {name} content hash mismatch: stored {stored}, computed {computed}")]
    ChecksumMismatch { name: String, stored: String, computed: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<DyadicComplex>,
    name: Option<String>,
}

impl ExactMatrix {
    pub fn from_entries(dim: usize, entries: Vec<DyadicComplex>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        ExactMatrix { dim, entries, name: None }
    }

    /// Integer table scaled by 2^-den_pow, the shape all catalogue data uses.
    pub fn from_int_table(table: &[&[i64]], den_pow: u32) -> Self {
        let dim = table.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in table {
            assert_eq!(row.len(), dim, "table must be square");
            for &v in *row {
                entries.push(DyadicComplex::gaussian(v, 0, den_pow));
            }
        }
        ExactMatrix { dim, entries, name: None }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![DyadicComplex::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = DyadicComplex::one();
        }
        ExactMatrix { dim, entries, name: None }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> &DyadicComplex {
        &self.entries[r * self.dim + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: DyadicComplex) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn row(&self, r: usize) -> ExactVector {
        ExactVector {
            entries: self.entries[r * self.dim..(r + 1) * self.dim].to_vec(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, MatrixError> {
        if self.dim != o.dim {
            return Err(MatrixError::DimensionMismatch { left: self.dim, right: o.dim });
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = DyadicComplex::zero();
                for l in 0..n {
                    let a = self.entry(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    let b = o.entry(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix { dim: n, entries, name: None })
    }

    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entry(j, i).conj());
            }
        }
        ExactMatrix { dim: n, entries, name: None }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
            name: None,
        }
    }

    /// Kronecker product; the left factor is the most significant index
    /// (index of |q1 q2> is 2*q1 + q2).
    pub fn tensor(&self, o: &Self) -> Self {
        let (na, nb) = (self.dim, o.dim);
        let n = na * nb;
        let mut entries = vec![DyadicComplex::zero(); n * n];
        for i in 0..na {
            for j in 0..na {
                let a = self.entry(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..nb {
                    for q in 0..nb {
                        let b = o.entry(p, q);
                        if !b.is_zero() {
                            entries[(i * nb + p) * n + (j * nb + q)] = a.mul(b);
                        }
                    }
                }
            }
        }
        ExactMatrix { dim: n, entries, name: None }
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.entry(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact unitarity check; returns the first offending entry of M*M^dag.
    pub fn unitarity_defect(&self) -> Option<(usize, usize)> {
        let prod = self.mul(&self.dagger()).expect("same dim");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = prod.entry(i, j);
                let ok = if i == j { e.is_one() } else { e.is_zero() };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_defect().is_none()
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector, MatrixError> {
        if self.dim != v.dim() {
            return Err(MatrixError::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        let n = self.dim;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = DyadicComplex::zero();
            for l in 0..n {
                let a = self.entry(i, l);
                if a.is_zero() {
                    continue;
                }
                let b = &v.entries[l];
                if !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            out.push(acc);
        }
        Ok(ExactVector { entries: out })
    }

    /// Deterministic serialization of the canonical entries; the basis of
    /// content hashing, cache keys and element ordering.
    pub fn canonical_serialization(&self) -> String {
        let mut s = String::with_capacity(self.entries.len() * 8);
        s.push_str(&format!("dim={};", self.dim));
        for e in &self.entries {
            s.push_str(&e.canonical_token());
            s.push(';');
        }
        s
    }

    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_serialization().as_bytes());
        let digest = h.finalize();
        let mut out = String::with_capacity(64);
        for b in digest {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }

    pub fn entries(&self) -> &[DyadicComplex] {
        &self.entries
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}:", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactVector {
    entries: Vec<DyadicComplex>,
}

impl ExactVector {
    pub fn new(entries: Vec<DyadicComplex>) -> Self {
        ExactVector { entries }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut entries = vec![DyadicComplex::zero(); dim];
        entries[i] = DyadicComplex::one();
        ExactVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[DyadicComplex] {
        &self.entries
    }

    /// Hermitian inner product <self, other> (conjugate on the left).
    pub fn inner(&self, o: &Self) -> DyadicComplex {
        assert_eq!(self.dim(), o.dim());
        let mut acc = DyadicComplex::zero();
        for (a, b) in self.entries.iter().zip(&o.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc.add(&a.conj().mul(b));
            }
        }
        acc
    }

    pub fn canonical_token(&self) -> String {
        let mut s = String::with_capacity(self.entries.len() * 8);
        for e in &self.entries {
            s.push_str(&e.canonical_token());
            s.push(';');
        }
        s
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", row.join(", "))
    }
}

/// Rank of the row span, computed by cross-multiplication elimination so
/// no division ever happens in the ring.
pub fn row_rank(rows: &[ExactVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let dim = rows[0].dim();
    let mut work: Vec<Vec<DyadicComplex>> = rows.iter().map(|r| r.entries.clone()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let pivot = (rank..work.len()).find(|&r| !work[r][col].is_zero());
        let Some(p) = pivot else { continue };
        work.swap(rank, p);
        let pv = work[rank][col].clone();
        for r in rank + 1..work.len() {
            if work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for c in col..dim {
                let scaled = pv.mul(&work[r][c]).sub(&f.mul(&work[rank][c]));
                work[r][c] = scaled;
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma_x() -> ExactMatrix {
        ExactMatrix::from_int_table(&[&[0, 1], &[1, 0]], 0)
    }

    fn sigma_y() -> ExactMatrix {
        let mut m = ExactMatrix::from_entries(2, vec![DyadicComplex::zero(); 4]);
        m.set_entry(0, 1, DyadicComplex::gaussian(0, -1, 0));
        m.set_entry(1, 0, DyadicComplex::gaussian(0, 1, 0));
        m
    }

    #[test]
    fn identity_times_anything_is_identity_map() {
        let s = sigma_x();
        assert_eq!(ExactMatrix::identity(2).mul(&s).unwrap(), s);
    }

    #[test]
    fn pauli_matrices_are_unitary_and_hermitian() {
        for m in [sigma_x(), sigma_y()] {
            assert!(m.is_unitary());
            assert_eq!(m.dagger(), m);
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let e = sigma_x().mul(&ExactMatrix::identity(4)).unwrap_err();
        assert_eq!(e, MatrixError::DimensionMismatch { left: 2, right: 4 });
    }

    #[test]
    fn tensor_uses_left_factor_as_high_bit() {
        let sx = sigma_x();
        let id = ExactMatrix::identity(2);
        let t = sx.tensor(&id);
        // sigma_x (x) 1 maps |0 q> to |1 q>: entry (2, 0) = 1
        assert!(t.entry(2, 0).is_one());
        assert!(t.entry(3, 1).is_one());
        assert!(t.entry(0, 0).is_zero());
    }

    #[test]
    fn mixed_product_rule_holds() {
        let (a, b) = (sigma_x(), sigma_y());
        let lhs = a.tensor(&b).mul(&b.tensor(&a)).unwrap();
        let rhs = a.mul(&b).unwrap().tensor(&b.mul(&a).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn content_hash_is_stable_under_recomputation() {
        let m = sigma_y();
        assert_eq!(m.content_hash(), m.content_hash());
        assert_ne!(m.content_hash(), sigma_x().content_hash());
    }

    #[test]
    fn row_rank_of_basis_is_full() {
        let rows: Vec<ExactVector> = (0..4).map(|i| ExactVector::basis(4, i)).collect();
        assert_eq!(row_rank(&rows), 4);
        assert_eq!(row_rank(&rows[..2]), 2);
        let dup = vec![rows[0].clone(), rows[0].clone()];
        assert_eq!(row_rank(&dup), 1);
    }

    #[test]
    fn unitarity_defect_pinpoints_bad_entry() {
        let mut m = ExactMatrix::identity(2);
        m.set_entry(0, 0, DyadicComplex::from_int(3));
        assert_eq!(m.unitarity_defect(), Some((0, 0)));
    }
}
