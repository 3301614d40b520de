//! Finite matrix groups: enumeration, permutation actions, orders,
//! membership, normality, fingerprints and identification.

pub mod bsgs;
pub mod cayley;
pub mod closure;
pub mod fingerprint;
pub mod identify;
pub mod orbit;
pub mod perm;
pub mod subgroups;

use num_bigint::BigUint;
use thiserror::Error;

use crate::dyadic::DyadicComplex;
use crate::matrix::{ExactMatrix, ExactVector, MatrixError};

pub use bsgs::PermGroupBsgs;
pub use closure::ElementSet;
pub use fingerprint::{fingerprint_set, fingerprint_table, GroupFingerprint};
pub use identify::{identify, Identification};
pub use orbit::OrbitAction;
pub use perm::Permutation;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeded its cap after {size_so_far} elements")]
    CapExceeded { size_so_far: usize },
    #[error("point set is not closed: the image of point {point} is outside the set")]
    NotClosed { point: usize },
    #[error("orbit points do not span the ambient space, the action would not be faithful")]
    NotFaithful,
    #[error("element set is not a complete enumeration")]
    IncompleteSet,
    #[error("claimed subgroup has a generator outside the supergroup")]
    NotASubgroup,
    #[error("group of order {order} exceeds the subgroup-lattice limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("observables {i} and {j} do not commute")]
    NonCommutingObservables { i: usize, j: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A group given by exact unitary generator matrices.
#[derive(Clone)]
pub struct MatrixGroup {
    dim: usize,
    generators: Vec<ExactMatrix>,
}

impl MatrixGroup {
    pub fn new(dim: usize, generators: Vec<ExactMatrix>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.dim() != dim {
                return Err(GroupError::Matrix(MatrixError::DimensionMismatch {
                    left: g.dim(),
                    right: dim,
                }));
            }
        }
        Ok(MatrixGroup { dim, generators })
    }

    /// Convenience constructor from catalogue names.
    pub fn from_catalogue(names: &[&str]) -> Result<Self, GroupError> {
        let generators = crate::catalogue::build_all(names)?;
        let dim = generators
            .first()
            .map(ExactMatrix::dim)
            .expect("at least one name");
        Self::new(dim, generators)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    /// Faithful permutation action on the orbit of the standard basis.
    pub fn spanning_action(&self) -> Result<OrbitAction, GroupError> {
        OrbitAction::spanning(self.dim, &self.generators)
    }

    /// Stabilizer chain of the permutation image of the group.
    pub fn bsgs(&self) -> Result<PermGroupBsgs, GroupError> {
        let action = self.spanning_action()?;
        let perms = action.permutations(&self.generators)?;
        Ok(PermGroupBsgs::new(action.len(), &perms))
    }

    /// Exact group order via orbit, permutation image and Schreier-Sims.
    pub fn order(&self) -> Result<BigUint, GroupError> {
        Ok(self.bsgs()?.order())
    }

    /// Full enumeration; only for groups expected to stay within `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<ElementSet, GroupError> {
        ElementSet::enumerate(self.dim, &self.generators, cap)
    }

    /// Membership test by sifting the candidate's permutation image.
    pub fn contains(&self, element: &ExactMatrix) -> Result<bool, GroupError> {
        if element.dim() != self.dim {
            return Err(GroupError::Matrix(MatrixError::DimensionMismatch {
                left: element.dim(),
                right: self.dim,
            }));
        }
        let action = self.spanning_action()?;
        let perm = match action.permutation_of(element) {
            Ok(p) => p,
            // The element does not even act on the orbit, so it cannot be
            // in the group.
            Err(GroupError::NotClosed { .. }) => return Ok(false),
            Err(e) => return Err(e),
        };
        let perms = action.permutations(&self.generators)?;
        let chain = PermGroupBsgs::new(action.len(), &perms);
        // The action is faithful (the orbit spans), so permutation-level
        // membership decides matrix-level membership.
        Ok(chain.contains(&perm))
    }

    /// True iff every conjugate of a generator of `self` by a generator of
    /// `sup` stays inside `self`. Requires `self <= sup`.
    pub fn is_normal_in(&self, sup: &MatrixGroup) -> Result<bool, GroupError> {
        for s in &self.generators {
            if !sup.contains(s)? {
                return Err(GroupError::NotASubgroup);
            }
        }
        for g in &sup.generators {
            let g_inv = g.dagger();
            for s in &self.generators {
                let conj = g
                    .mul(s)
                    .and_then(|m| m.mul(&g_inv))
                    .expect("dimensions already checked");
                if !self.contains(&conj)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Checks that `basis` rows are joint eigenvectors of pairwise-commuting
/// `observables` with the prescribed signs: for every row r and observable
/// k, `row_r * O_k == signs[r][k] * row_r` exactly (row vector times
/// matrix).
pub fn verify_joint_eigenstates(
    observables: &[ExactMatrix],
    basis: &ExactMatrix,
    signs: &[Vec<i64>],
) -> Result<bool, GroupError> {
    for (i, a) in observables.iter().enumerate() {
        for (j, b) in observables.iter().skip(i + 1).enumerate() {
            let ab = a.mul(b)?;
            let ba = b.mul(a)?;
            if ab.entries() != ba.entries() {
                return Err(GroupError::NonCommutingObservables { i, j: i + 1 + j });
            }
        }
    }
    let dim = basis.dim();
    assert_eq!(signs.len(), dim, "one sign row per basis row");
    for (r, row_signs) in signs.iter().enumerate() {
        assert_eq!(row_signs.len(), observables.len());
        let row = ExactVector::new((0..dim).map(|c| basis.entry(r, c).clone()).collect());
        for (k, obs) in observables.iter().enumerate() {
            let sign = DyadicComplex::from_int(row_signs[k]);
            for c in 0..dim {
                // (row * O)_c = sum_l row_l * O[l][c]
                let mut acc = DyadicComplex::zero();
                for l in 0..dim {
                    let a = &row.entries()[l];
                    if !a.is_zero() && !obs.entry(l, c).is_zero() {
                        acc = acc.add(&a.mul(obs.entry(l, c)));
                    }
                }
                if acc != sign.mul(&row.entries()[c]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn pauli_group_order_by_bsgs_matches_enumeration() {
        let g = MatrixGroup::from_catalogue(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        assert_eq!(g.order().unwrap(), BigUint::from(16u32));
        assert_eq!(g.enumerate(100).unwrap().order(), 16);
    }

    #[test]
    fn pauli_group_contains_i_times_identity() {
        // sigma_x * sigma_y * sigma_z = i * I.
        let g = MatrixGroup::from_catalogue(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        let i_id = {
            let mut m = ExactMatrix::identity(2);
            for d in 0..2 {
                m.set_entry(d, d, DyadicComplex::i());
            }
            m
        };
        assert!(g.contains(&i_id).unwrap());
    }

    #[test]
    fn every_group_contains_its_identity() {
        let g = MatrixGroup::from_catalogue(&["W", "Z"]).unwrap();
        assert!(g.contains(&ExactMatrix::identity(8)).unwrap());
    }

    #[test]
    fn scaled_diagonal_is_not_a_member() {
        let g = MatrixGroup::from_catalogue(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        let three = ExactMatrix::from_int_table(&[&[3, 0], &[0, 3]], 0);
        assert!(!g.contains(&three).unwrap());
    }

    #[test]
    fn trivial_group_is_normal_in_anything() {
        let trivial = MatrixGroup::new(8, vec![]).unwrap();
        let g = MatrixGroup::from_catalogue(&["W", "Z"]).unwrap();
        assert!(trivial.is_normal_in(&g).unwrap());
    }

    #[test]
    fn non_subgroup_is_rejected_by_normality_check() {
        let h = MatrixGroup::from_catalogue(&["H"]).unwrap();
        let g = MatrixGroup::from_catalogue(&["sigma_x"]).unwrap();
        assert!(matches!(
            h.is_normal_in(&g),
            Err(GroupError::NotASubgroup)
        ));
    }

    #[test]
    fn identity_observable_has_all_plus_one_eigenrows() {
        let id = ExactMatrix::identity(4);
        let basis = catalogue::build("S").unwrap();
        let signs = vec![vec![1i64]; 4];
        assert!(verify_joint_eigenstates(std::slice::from_ref(&id), &basis, &signs).unwrap());
    }

    #[test]
    fn non_commuting_observables_are_refused() {
        let sx = catalogue::build("sigma_x").unwrap();
        let sz = catalogue::build("sigma_z").unwrap();
        let basis = ExactMatrix::identity(2);
        let signs = vec![vec![1i64, 1]; 2];
        assert!(matches!(
            verify_joint_eigenstates(&[sx, sz], &basis, &signs),
            Err(GroupError::NonCommutingObservables { i: 0, j: 1 })
        ));
    }

    // Expensive: the full degree-2160 action. Run with --ignored.
    #[test]
    #[ignore]
    fn toffoli_extension_reaches_the_full_reflection_group() {
        let g = MatrixGroup::from_catalogue(&["x", "y", "TOF"]).unwrap();
        let chain = g.bsgs().unwrap();
        assert_eq!(chain.order(), BigUint::from(696_729_600u64));
    }
}
