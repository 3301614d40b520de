//! Breadth-first closure of a matrix generator set under products.

use std::collections::HashMap;

use crate::matrix::{ExactMatrix, MatrixError};

use super::GroupError;

/// A fully enumerated finite matrix group, with elements sorted by
/// canonical serialization so indices are stable across runs and generator
/// orderings.
pub struct ElementSet {
    elements: Vec<ExactMatrix>,
    index: HashMap<String, usize>,
    generator_indices: Vec<usize>,
    identity_index: usize,
    complete: bool,
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ElementSet({} elements in dim {})", self.elements.len(), self.dim())
    }
}

impl ElementSet {
    /// Breadth-first closure of `gens` (plus the identity) under products,
    /// failing once more than `cap` elements appear.
    pub fn enumerate(dim: usize, gens: &[ExactMatrix], cap: usize) -> Result<Self, GroupError> {
        assert!(cap >= 1, "cap must be at least 1");
        for g in gens {
            if g.dim() != dim {
                return Err(GroupError::Matrix(MatrixError::DimensionMismatch {
                    left: g.dim(),
                    right: dim,
                }));
            }
        }
        let mut elements = vec![ExactMatrix::identity(dim)];
        let mut index: HashMap<String, usize> = HashMap::new();
        index.insert(elements[0].canonical_serialization(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in gens {
                let next = current.mul(g).expect("dimensions checked above");
                let key = next.canonical_serialization();
                if !index.contains_key(&key) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            size_so_far: elements.len(),
                        });
                    }
                    index.insert(key, elements.len());
                    elements.push(next);
                }
            }
        }

        elements.sort_by(|a, b| a.canonical_serialization().cmp(&b.canonical_serialization()));
        let index: HashMap<String, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.canonical_serialization(), i))
            .collect();
        let identity_index = elements
            .iter()
            .position(ExactMatrix::is_identity)
            .expect("closure contains the identity");
        let generator_indices = gens
            .iter()
            .map(|g| index[&g.canonical_serialization()])
            .collect();
        Ok(ElementSet {
            elements,
            index,
            generator_indices,
            identity_index,
            complete: true,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ExactMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &ExactMatrix) -> Option<usize> {
        self.index.get(&m.canonical_serialization()).copied()
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.index_of(m).is_some()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }
}
