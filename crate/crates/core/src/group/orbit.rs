//! Orbits of exact vectors under a set of matrices, and the induced
//! permutation action.
//!
//! Groups too large to enumerate as matrices are handled through the
//! permutation image of their action on a finite orbit of vectors. Seeding
//! the orbit with the full standard basis makes the point set span the
//! ambient space, so the action is faithful and permutation-level results
//! (order, membership) transfer back to the matrix group verbatim.

use std::collections::HashMap;

use crate::matrix::{row_rank, ExactMatrix, ExactVector, MatrixError};

use super::perm::Permutation;
use super::GroupError;

/// Default ceiling on orbit size; generous next to the largest orbit any
/// built-in group produces (2160 points) but small enough to fail fast on
/// runaway input.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A finite set of vectors closed under every generator, sorted by
/// canonical serialization so point indices are reproducible across runs
/// and generator orderings.
pub struct OrbitAction {
    dim: usize,
    points: Vec<ExactVector>,
    index: HashMap<String, usize>,
}

impl std::fmt::Debug for OrbitAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrbitAction({} points in dim {})", self.points.len(), self.dim)
    }
}

impl OrbitAction {
    /// Breadth-first closure of `seeds` under `gens`.
    pub fn from_seeds(
        gens: &[ExactMatrix],
        seeds: &[ExactVector],
        cap: usize,
    ) -> Result<Self, GroupError> {
        assert!(!seeds.is_empty(), "orbit needs at least one seed");
        let dim = seeds[0].dim();
        for g in gens {
            if g.dim() != dim {
                return Err(GroupError::Matrix(MatrixError::DimensionMismatch {
                    left: g.dim(),
                    right: dim,
                }));
            }
        }
        let mut points: Vec<ExactVector> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        for s in seeds {
            let token = s.canonical_token();
            if !index.contains_key(&token) {
                index.insert(token, points.len());
                points.push(s.clone());
            }
        }
        let mut head = 0;
        while head < points.len() {
            let v = points[head].clone();
            head += 1;
            for g in gens {
                let w = g.apply(&v).expect("dimensions checked above");
                let token = w.canonical_token();
                if !index.contains_key(&token) {
                    if points.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            size_so_far: points.len(),
                        });
                    }
                    index.insert(token, points.len());
                    points.push(w);
                }
            }
        }

        if row_rank(&points) != dim {
            return Err(GroupError::NotFaithful);
        }

        points.sort_by(|a, b| a.canonical_token().cmp(&b.canonical_token()));
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.canonical_token(), i))
            .collect();
        Ok(OrbitAction { dim, points, index })
    }

    /// Orbit of the full standard basis; always faithful.
    pub fn spanning(dim: usize, gens: &[ExactMatrix]) -> Result<Self, GroupError> {
        let seeds: Vec<ExactVector> = (0..dim).map(|k| ExactVector::basis(dim, k)).collect();
        Self::from_seeds(gens, &seeds, DEFAULT_ORBIT_CAP)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ExactVector] {
        &self.points
    }

    /// Index of a vector among the orbit points, if present.
    pub fn position(&self, v: &ExactVector) -> Option<usize> {
        self.index.get(&v.canonical_token()).copied()
    }

    /// The permutation `m` induces on the point set. Fails with `NotClosed`
    /// when some point's image leaves the set, i.e. `m` does not act here.
    pub fn permutation_of(&self, m: &ExactMatrix) -> Result<Permutation, GroupError> {
        if m.dim() != self.dim {
            return Err(GroupError::Matrix(MatrixError::DimensionMismatch {
                left: m.dim(),
                right: self.dim,
            }));
        }
        let mut images = Vec::with_capacity(self.points.len());
        let mut seen = vec![false; self.points.len()];
        for (i, p) in self.points.iter().enumerate() {
            let w = m.apply(p).expect("dimension checked above");
            let Some(&j) = self.index.get(&w.canonical_token()) else {
                return Err(GroupError::NotClosed { point: i });
            };
            if seen[j] {
                return Err(GroupError::NotClosed { point: i });
            }
            seen[j] = true;
            images.push(j as u32);
        }
        Ok(Permutation::from_images(images))
    }

    /// One permutation per generator, in the given order.
    pub fn permutations(&self, gens: &[ExactMatrix]) -> Result<Vec<Permutation>, GroupError> {
        gens.iter().map(|g| self.permutation_of(g)).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn identity_orbit_is_just_the_seeds() {
        let id = ExactMatrix::identity(3);
        let action = OrbitAction::spanning(3, std::slice::from_ref(&id)).unwrap();
        assert_eq!(action.len(), 3);
        assert!(action.permutation_of(&id).unwrap().is_identity());
    }

    #[test]
    fn bit_flip_swaps_the_two_basis_points() {
        let sx = catalogue::build("sigma_x").unwrap();
        let action = OrbitAction::spanning(2, std::slice::from_ref(&sx)).unwrap();
        assert_eq!(action.len(), 2);
        let p = action.permutation_of(&sx).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 0);
    }

    #[test]
    fn toffoli_on_basis_orbit_is_a_transposition() {
        let tof = catalogue::build("TOF").unwrap();
        let action = OrbitAction::spanning(8, std::slice::from_ref(&tof)).unwrap();
        assert_eq!(action.len(), 8);
        let p = action.permutation_of(&tof).unwrap();
        let moved: Vec<u32> = (0..8)
            .filter(|&q| p.apply(q) != q)
            .collect();
        assert_eq!(moved.len(), 2);
        assert_eq!(p.apply(moved[0]), moved[1]);
    }

    #[test]
    fn swap_gate_transposes_the_middle_points() {
        let swap = catalogue::build("swap").unwrap();
        let action = OrbitAction::spanning(4, std::slice::from_ref(&swap)).unwrap();
        let p = action.permutation_of(&swap).unwrap();
        assert_eq!(p.apply(0), 0);
        assert_eq!(p.apply(3), 3);
        assert_ne!(p.apply(1), 1);
    }

    #[test]
    fn single_seed_without_span_is_not_faithful() {
        let id = ExactMatrix::identity(3);
        let seeds = [ExactVector::basis(3, 0)];
        let err = OrbitAction::from_seeds(std::slice::from_ref(&id), &seeds, 100).unwrap_err();
        assert!(matches!(err, GroupError::NotFaithful));
    }

    #[test]
    fn foreign_matrix_is_reported_not_closed() {
        let sx = catalogue::build("sigma_x").unwrap();
        let action = OrbitAction::spanning(2, std::slice::from_ref(&sx)).unwrap();
        let h = catalogue::build("H").unwrap();
        assert!(matches!(
            action.permutation_of(&h),
            Err(GroupError::NotClosed { .. })
        ));
    }

    #[test]
    fn tiny_cap_is_enforced() {
        let sx = catalogue::build("sigma_x").unwrap();
        let seeds = [ExactVector::basis(2, 0)];
        let err = OrbitAction::from_seeds(std::slice::from_ref(&sx), &seeds, 1).unwrap_err();
        assert!(matches!(err, GroupError::CapExceeded { size_so_far: 1 }));
    }
}
