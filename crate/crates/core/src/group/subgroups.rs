//! Complete subgroup lattices of small enumerated groups.

use std::collections::BTreeSet;

use super::cayley::CayleyTable;
use super::closure::ElementSet;
use super::GroupError;

/// Largest group the brute-force lattice walk accepts.
pub const SUBGROUP_LIMIT: usize = 64;

/// Every subgroup of the group, as sorted element-index lists, ordered by
/// size then lexicographically. Starts from the trivial subgroup and
/// repeatedly adjoins single elements, which reaches every subgroup.
pub fn all_subgroups(set: &ElementSet) -> Result<Vec<Vec<u32>>, GroupError> {
    if !set.is_complete() {
        return Err(GroupError::IncompleteSet);
    }
    if set.order() > SUBGROUP_LIMIT {
        return Err(GroupError::TooLarge {
            order: set.order(),
            limit: SUBGROUP_LIMIT,
        });
    }
    let table = CayleyTable::from_element_set(set)?;
    let n = table.order() as u32;

    let mut known: BTreeSet<Vec<u32>> = BTreeSet::new();
    let trivial = vec![table.identity()];
    known.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(sub) = queue.pop() {
        for g in 0..n {
            if sub.binary_search(&g).is_ok() {
                continue;
            }
            let mut seed = sub.clone();
            seed.push(g);
            let bigger = table.generated_subgroup(&seed);
            if known.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }

    let mut out: Vec<Vec<u32>> = known.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
