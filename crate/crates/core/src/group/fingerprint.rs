//! Structural fingerprints of finite groups.
//!
//! The fingerprint (order, element-order histogram, center and derived
//! subgroup orders, abelianization, exponent) is cheap to compute from a
//! multiplication table and separates every isomorphism class the built-in
//! reference table cares about. Fingerprint equality is necessary, never
//! sufficient, for isomorphism; identification results say so explicitly.

use std::collections::BTreeMap;

use serde::Serialize;

use super::cayley::CayleyTable;
use super::closure::ElementSet;
use super::GroupError;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GroupFingerprint {
    pub order: u64,
    /// element order -> how many elements have it
    pub order_histogram: BTreeMap<u64, u64>,
    pub center_order: u64,
    pub derived_order: u64,
    /// Invariant factors of the abelianization, largest first; empty for a
    /// perfect group.
    pub abelianization: Vec<u64>,
    pub exponent: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All multisets of prime-power cyclic factors for abelian groups of order
/// `n`, e.g. 8 -> [8], [4,2], [2,2,2].
fn abelian_candidates(n: u64) -> Vec<Vec<u64>> {
    fn partitions(k: u32) -> Vec<Vec<u32>> {
        fn go(k: u32, max: u32) -> Vec<Vec<u32>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=k.min(max)).rev() {
                for rest in go(k - first, first) {
                    let mut p = vec![first];
                    p.extend(rest);
                    out.push(p);
                }
            }
            out
        }
        go(k, k)
    }

    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            factors.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        factors.push((m, 1));
    }

    let mut candidates: Vec<Vec<u64>> = vec![vec![]];
    for (p, k) in factors {
        let mut next = Vec::new();
        for part in partitions(k) {
            for base in &candidates {
                let mut cand = base.clone();
                cand.extend(part.iter().map(|&a| p.pow(a)));
                next.push(cand);
            }
        }
        candidates = next;
    }
    candidates
}

/// Element-order histogram of a direct product of cyclic groups, by direct
/// enumeration (orders here never exceed a few dozen).
fn cyclic_product_histogram(factors: &[u64]) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    let total: u64 = factors.iter().product::<u64>().max(1);
    let mut idx = vec![0u64; factors.len()];
    for _ in 0..total {
        let order = idx
            .iter()
            .zip(factors)
            .map(|(&x, &m)| m / gcd(m, x))
            .fold(1u64, lcm);
        *hist.entry(order).or_insert(0) += 1;
        for d in 0..factors.len() {
            idx[d] += 1;
            if idx[d] < factors[d] {
                break;
            }
            idx[d] = 0;
        }
    }
    hist
}

/// Invariant factors (largest first) from prime-power cyclic factors.
fn invariant_factors(prime_powers: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &q in prime_powers {
        let p = (2..=q).find(|d| q % d == 0).expect("prime power > 1");
        by_prime.entry(p).or_default().push(q);
    }
    let rows = by_prime
        .values()
        .map(|v| v.len())
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    for i in 0..rows {
        let mut f = 1u64;
        for powers in by_prime.values() {
            let mut sorted = powers.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if i < sorted.len() {
                f *= sorted[i];
            }
        }
        out.push(f);
    }
    out
}

/// The isomorphism type of an abelian group from its element-order
/// histogram (which determines finite abelian groups uniquely), returned as
/// invariant factors.
fn abelian_type(order: u64, hist: &BTreeMap<u64, u64>) -> Vec<u64> {
    if order == 1 {
        return vec![];
    }
    for cand in abelian_candidates(order) {
        if cyclic_product_histogram(&cand) == *hist {
            return invariant_factors(&cand);
        }
    }
    unreachable!("every abelian histogram matches one candidate");
}

/// Fingerprint from a multiplication table.
pub fn fingerprint_table(table: &CayleyTable) -> GroupFingerprint {
    let n = table.order();
    let order = n as u64;

    let mut order_histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut exponent = 1u64;
    for a in 0..n as u32 {
        let o = table.element_order(a);
        *order_histogram.entry(o).or_insert(0) += 1;
        exponent = lcm(exponent, o);
    }

    // Commuting with every generator is commuting with the whole group;
    // fall back to all elements when no generator list was recorded.
    let all_elements: Vec<u32> = (0..n as u32).collect();
    let witnesses: &[u32] = if table.generators().is_empty() {
        &all_elements
    } else {
        table.generators()
    };
    let center_order = (0..n as u32)
        .filter(|&a| witnesses.iter().all(|&g| table.mul(a, g) == table.mul(g, a)))
        .count() as u64;

    // Commutators of all pairs generate the derived subgroup directly (no
    // normal closure step needed when starting from every pair).
    let mut commutators = Vec::new();
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            let c = table.mul(
                table.mul(table.inverse(a), table.inverse(b)),
                table.mul(a, b),
            );
            commutators.push(c);
        }
    }
    commutators.sort_unstable();
    commutators.dedup();
    let derived = table.generated_subgroup(&commutators);
    let derived_order = derived.len() as u64;

    // Quotient by the derived subgroup: label cosets by their smallest
    // member, then read the abelianization off the quotient's histogram.
    let mut coset_of = vec![u32::MAX; n];
    let mut reps: Vec<u32> = Vec::new();
    for a in 0..n as u32 {
        if coset_of[a as usize] != u32::MAX {
            continue;
        }
        let label = reps.len() as u32;
        reps.push(a);
        for &d in &derived {
            coset_of[table.mul(a, d) as usize] = label;
        }
    }
    let q = reps.len();
    let mut q_table = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            q_table[i * q + j] = coset_of[table.mul(a, b) as usize];
        }
    }
    let q_identity = coset_of[table.identity() as usize];
    let quotient = CayleyTable::from_parts(q, q_table, q_identity, vec![]);
    let mut q_hist: BTreeMap<u64, u64> = BTreeMap::new();
    for a in 0..q as u32 {
        *q_hist.entry(quotient.element_order(a)).or_insert(0) += 1;
    }
    let abelianization = abelian_type(q as u64, &q_hist);

    GroupFingerprint {
        order,
        order_histogram,
        center_order,
        derived_order,
        abelianization,
        exponent,
    }
}

/// Fingerprint of an enumerated matrix group.
pub fn fingerprint_set(set: &ElementSet) -> Result<GroupFingerprint, GroupError> {
    if !set.is_complete() {
        return Err(GroupError::IncompleteSet);
    }
    Ok(fingerprint_table(&CayleyTable::from_element_set(set)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::group::cayley::abstract_cayley;

    #[test]
    fn klein_four_group_fingerprint() {
        // Z2 x Z2 as bit pairs under xor.
        let table = abstract_cayley(0u8, &[1u8, 2u8], |a, b| a ^ b, 10);
        let fp = fingerprint_table(&table);
        assert_eq!(fp.order, 4);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1), (2, 3)]));
        assert_eq!(fp.center_order, 4);
        assert_eq!(fp.derived_order, 1);
        assert_eq!(fp.abelianization, vec![2, 2]);
        assert_eq!(fp.exponent, 2);
    }

    #[test]
    fn z4_x_z2_is_distinguished_from_z8_and_z2_cubed() {
        let table = abstract_cayley(
            (0u8, 0u8),
            &[(1u8, 0u8), (0u8, 1u8)],
            |a, b| ((a.0 + b.0) % 4, (a.1 + b.1) % 2),
            20,
        );
        let fp = fingerprint_table(&table);
        assert_eq!(fp.abelianization, vec![4, 2]);
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1), (2, 3), (4, 4)]));
    }

    #[test]
    fn pauli_group_fingerprint_matches_enumeration() {
        let gens = catalogue::build_all(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        let set = ElementSet::enumerate(2, &gens, 100).unwrap();
        let fp = fingerprint_set(&set).unwrap();
        assert_eq!(fp.order, 16);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1), (2, 7), (4, 8)]));
        assert_eq!(fp.center_order, 4);
        assert_eq!(fp.derived_order, 2);
        assert_eq!(fp.abelianization, vec![2, 2, 2]);
    }

    #[test]
    fn symmetric_group_s3_fingerprint() {
        // S3 as permutations of three letters, composed left after right.
        let compose = |a: &[u8; 3], b: &[u8; 3]| [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]];
        let table = abstract_cayley([0u8, 1, 2], &[[1u8, 0, 2], [1u8, 2, 0]], compose, 10);
        let fp = fingerprint_table(&table);
        assert_eq!(fp.order, 6);
        assert_eq!(fp.center_order, 1);
        assert_eq!(fp.derived_order, 3);
        assert_eq!(fp.abelianization, vec![2]);
        assert_eq!(fp.exponent, 6);
    }

    #[test]
    fn histogram_counts_sum_to_order() {
        let gens = catalogue::build_all(&["gamma_0", "gamma_1", "gamma_2", "gamma_3"]).unwrap();
        let set = ElementSet::enumerate(4, &gens, 100).unwrap();
        let fp = fingerprint_set(&set).unwrap();
        let total: u64 = fp.order_histogram.values().sum();
        assert_eq!(total, fp.order);
        assert_eq!(fp.order % fp.center_order, 0);
        assert_eq!(fp.order % fp.derived_order, 0);
    }
}
