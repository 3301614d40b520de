//! Multiplication tables for fully enumerated groups.

use std::collections::HashMap;
use std::hash::Hash;

use super::closure::ElementSet;
use super::GroupError;

/// Multiplication table of a finite group on element indices `0..n`.
pub struct CayleyTable {
    n: usize,
    /// Row-major: `table[a * n + b] = index of (element a) * (element b)`.
    table: Vec<u32>,
    identity: u32,
    inverses: Vec<u32>,
    generators: Vec<u32>,
}

impl CayleyTable {
    pub fn from_element_set(set: &ElementSet) -> Result<Self, GroupError> {
        if !set.is_complete() {
            return Err(GroupError::IncompleteSet);
        }
        let n = set.order();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = set.element(a).mul(set.element(b)).expect("equal dims");
                let idx = set
                    .index_of(&prod)
                    .expect("complete sets are closed under products");
                table[a * n + b] = idx as u32;
            }
        }
        let identity = set.identity_index() as u32;
        let generators = set.generator_indices().iter().map(|&g| g as u32).collect();
        Ok(Self::from_parts(n, table, identity, generators))
    }

    /// Assembles a table, deriving inverses; panics if `table` is not a
    /// group table for `identity`.
    pub fn from_parts(n: usize, table: Vec<u32>, identity: u32, generators: Vec<u32>) -> Self {
        assert_eq!(table.len(), n * n);
        let mut inverses = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == identity {
                    inverses[a] = b as u32;
                }
            }
        }
        assert!(
            inverses.iter().all(|&v| v != u32::MAX),
            "every element needs an inverse"
        );
        CayleyTable {
            n,
            table,
            identity,
            inverses,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Multiplicative order of one element.
    pub fn element_order(&self, a: u32) -> u64 {
        let mut acc = a;
        let mut k = 1u64;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    /// Closure of a set of element indices under products; the subgroup
    /// generated, as a sorted index list.
    pub fn generated_subgroup(&self, seed: &[u32]) -> Vec<u32> {
        let mut member = vec![false; self.n];
        let mut list = vec![self.identity];
        member[self.identity as usize] = true;
        for &s in seed {
            if !member[s as usize] {
                member[s as usize] = true;
                list.push(s);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let a = list[head];
            head += 1;
            for gi in 0..list.len() {
                let b = list[gi];
                for prod in [self.mul(a, b), self.mul(b, a)] {
                    if !member[prod as usize] {
                        member[prod as usize] = true;
                        list.push(prod);
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }
}

/// Closure and multiplication table of an abstract finite group given by
/// generator values and a multiplication closure. Elements are sorted by
/// their `Ord` so the table is reproducible. Used to cross-check the
/// built-in fingerprint reference table against independent models.
pub fn abstract_cayley<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> CayleyTable
where
    T: Clone + Eq + Hash + Ord,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut seen: HashMap<T, ()> = HashMap::new();
    seen.insert(identity, ());
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = mul(&current, g);
            if !seen.contains_key(&next) {
                assert!(elements.len() < cap, "abstract closure exceeded cap");
                seen.insert(next.clone(), ());
                elements.push(next);
            }
        }
    }
    elements.sort();
    let pos: HashMap<&T, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod = mul(&elements[a], &elements[b]);
            table[a * n + b] = pos[&prod];
        }
    }
    let identity_idx = (0..n as u32)
        .find(|&e| (0..n as u32).all(|x| table[e as usize * n + x as usize] == x))
        .expect("a finite closed multiplication has an identity");
    let generators = gens.iter().map(|g| pos[g]).collect();
    CayleyTable::from_parts(n, table, identity_idx, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn pauli_table_is_a_group_of_order_sixteen() {
        let gens = catalogue::build_all(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        let set = ElementSet::enumerate(2, &gens, 100).unwrap();
        let table = CayleyTable::from_element_set(&set).unwrap();
        assert_eq!(table.order(), 16);
        let e = table.identity();
        for a in 0..16u32 {
            assert_eq!(table.mul(a, table.inverse(a)), e);
            assert_eq!(table.mul(e, a), a);
        }
    }

    #[test]
    fn element_orders_divide_group_order() {
        let gens = catalogue::build_all(&["gamma_0", "gamma_1", "gamma_2", "gamma_3"]).unwrap();
        let set = ElementSet::enumerate(4, &gens, 100).unwrap();
        let table = CayleyTable::from_element_set(&set).unwrap();
        for a in 0..table.order() as u32 {
            assert_eq!(32 % table.element_order(a), 0);
        }
    }

    #[test]
    fn abstract_cyclic_group_builds_correctly() {
        // Z6 as residues with addition.
        let table = abstract_cayley(0u8, &[1u8], |a, b| (a + b) % 6, 10);
        assert_eq!(table.order(), 6);
        assert_eq!(table.element_order(table.generators()[0]), 6);
    }

    #[test]
    fn generated_subgroup_respects_lagrange() {
        let gens = catalogue::build_all(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        let set = ElementSet::enumerate(2, &gens, 100).unwrap();
        let table = CayleyTable::from_element_set(&set).unwrap();
        for a in 0..table.order() as u32 {
            let sub = table.generated_subgroup(&[a]);
            assert_eq!(table.order() % sub.len(), 0);
        }
    }
}
