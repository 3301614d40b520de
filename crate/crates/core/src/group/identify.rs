//! Identification of small groups against a frozen reference table.
//!
//! Each reference fingerprint was computed from an independent model of the
//! group (square symmetries for D4, unit quaternions for Q8, sign-tracked
//! bit-pair products for the central extensions, 2x2 matrices over the
//! five-element field for SL(2,5), direct and central products for the
//! rest) and is pinned here as literal data; the test module rebuilds every
//! model and recomputes its fingerprint, so a regression in the group
//! machinery or an edit to this table fails loudly. Matching a fingerprint
//! is necessary but not sufficient for isomorphism, hence the explicit
//! `Consistent` wording; within this table every label is separated from
//! the others by the fingerprint alone.

use std::collections::BTreeMap;
use std::fmt;

use super::fingerprint::GroupFingerprint;

pub struct ReferenceEntry {
    pub label: &'static str,
    pub fingerprint: GroupFingerprint,
}

fn entry(
    label: &'static str,
    order: u64,
    hist: &[(u64, u64)],
    center_order: u64,
    derived_order: u64,
    abelianization: &[u64],
    exponent: u64,
) -> ReferenceEntry {
    ReferenceEntry {
        label,
        fingerprint: GroupFingerprint {
            order,
            order_histogram: hist.iter().copied().collect::<BTreeMap<_, _>>(),
            center_order,
            derived_order,
            abelianization: abelianization.to_vec(),
            exponent,
        },
    }
}

/// The frozen reference fingerprints.
pub fn reference_table() -> Vec<ReferenceEntry> {
    vec![
        entry("trivial", 1, &[(1, 1)], 1, 1, &[], 1),
        entry("Z2", 2, &[(1, 1), (2, 1)], 2, 1, &[2], 2),
        entry("Z4", 4, &[(1, 1), (2, 1), (4, 2)], 4, 1, &[4], 4),
        entry("Z2^2", 4, &[(1, 1), (2, 3)], 4, 1, &[2, 2], 2),
        entry("Z2^3", 8, &[(1, 1), (2, 7)], 8, 1, &[2, 2, 2], 2),
        entry("Z4xZ2", 8, &[(1, 1), (2, 3), (4, 4)], 8, 1, &[4, 2], 4),
        entry("D4", 8, &[(1, 1), (2, 5), (4, 2)], 2, 2, &[2, 2], 4),
        entry("Q8", 8, &[(1, 1), (2, 1), (4, 6)], 2, 2, &[2, 2], 4),
        entry(
            "[16,11]",
            16,
            &[(1, 1), (2, 11), (4, 4)],
            4,
            2,
            &[2, 2, 2],
            4,
        ),
        entry(
            "[16,12]",
            16,
            &[(1, 1), (2, 3), (4, 12)],
            4,
            2,
            &[2, 2, 2],
            4,
        ),
        entry(
            "[16,13]",
            16,
            &[(1, 1), (2, 7), (4, 8)],
            4,
            2,
            &[2, 2, 2],
            4,
        ),
        entry(
            "E32+",
            32,
            &[(1, 1), (2, 19), (4, 12)],
            2,
            2,
            &[2, 2, 2, 2],
            4,
        ),
        entry(
            "[32,50]",
            32,
            &[(1, 1), (2, 11), (4, 20)],
            2,
            2,
            &[2, 2, 2, 2],
            4,
        ),
        entry(
            "[64,66]",
            64,
            &[(1, 1), (2, 31), (4, 32)],
            4,
            2,
            &[2, 2, 2, 2, 2],
            4,
        ),
        entry(
            "SL(2,5)",
            120,
            &[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)],
            2,
            120,
            &[],
            60,
        ),
    ]
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Identification {
    /// The fingerprint matches this reference label. Fingerprint equality
    /// is necessary, not sufficient, for isomorphism.
    Consistent { label: &'static str },
    /// No reference entry matches.
    Unknown { order: u64 },
}

impl Identification {
    pub fn label(&self) -> Option<&'static str> {
        match self {
            Identification::Consistent { label } => Some(label),
            Identification::Unknown { .. } => None,
        }
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::Consistent { label } => {
                write!(f, "{label} (fingerprint-consistent)")
            }
            Identification::Unknown { order } => write!(f, "unknown group of order {order}"),
        }
    }
}

/// Look a fingerprint up in the reference table.
pub fn identify(fp: &GroupFingerprint) -> Identification {
    for e in reference_table() {
        if e.fingerprint == *fp {
            return Identification::Consistent { label: e.label };
        }
    }
    Identification::Unknown { order: fp.order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cayley::{abstract_cayley, CayleyTable};
    use crate::group::fingerprint::fingerprint_table;

    /// Signed bit-pair model of the two-qubit-style central extensions:
    /// elements (k, a, b) with k mod 4 central, multiplied with the cocycle
    /// that makes (0,1,0) and (0,0,1) anticommute componentwise.
    type Pauli = (u8, u32, u32);

    fn pauli_mul(n: u32) -> impl Fn(&Pauli, &Pauli) -> Pauli {
        move |x: &Pauli, y: &Pauli| {
            let dot = (x.2 & y.1).count_ones() as u8;
            (
                (x.0 + y.0 + 2 * dot) % 4,
                (x.1 ^ y.1) & ((1 << n) - 1),
                (x.2 ^ y.2) & ((1 << n) - 1),
            )
        }
    }

    fn pauli_table(n: u32) -> CayleyTable {
        let mut gens: Vec<Pauli> = Vec::new();
        for q in 0..n {
            gens.push((0, 1 << q, 0));
            gens.push((0, 0, 1 << q));
        }
        gens.push((1, 0, 0));
        abstract_cayley((0u8, 0u32, 0u32), &gens, pauli_mul(n), 2000)
    }

    /// D4 as the eight symmetries of a square acting on its corner labels.
    fn d4_table() -> CayleyTable {
        let compose = |a: &[u8; 4], b: &[u8; 4]| {
            [
                a[b[0] as usize],
                a[b[1] as usize],
                a[b[2] as usize],
                a[b[3] as usize],
            ]
        };
        let rot = [1u8, 2, 3, 0];
        let flip = [1u8, 0, 3, 2];
        abstract_cayley([0u8, 1, 2, 3], &[rot, flip], compose, 20)
    }

    /// Q8 as formal unit quaternions (sign, axis) with axis 0=1, 1=i, 2=j,
    /// 3=k.
    fn q8_table() -> CayleyTable {
        type Q = (i8, u8);
        fn mul(a: &Q, b: &Q) -> Q {
            let table: [[(i8, u8); 4]; 4] = [
                [(1, 0), (1, 1), (1, 2), (1, 3)],
                [(1, 1), (-1, 0), (1, 3), (-1, 2)],
                [(1, 2), (-1, 3), (-1, 0), (1, 1)],
                [(1, 3), (1, 2), (-1, 1), (-1, 0)],
            ];
            let (s, ax) = table[a.1 as usize][b.1 as usize];
            (a.0 * b.0 * s, ax)
        }
        abstract_cayley((1i8, 0u8), &[(1, 1), (1, 2)], mul, 20)
    }

    /// Direct product of two multiplication tables.
    fn direct_product(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
        let pack = |x: u32, y: u32| x * (b.order() as u32) + y;
        let gens: Vec<u32> = a
            .generators()
            .iter()
            .map(|&g| pack(g, b.identity()))
            .chain(b.generators().iter().map(|&g| pack(a.identity(), g)))
            .collect();
        let n = a.order() * b.order();
        let mut table = vec![0u32; n * n];
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                let (xa, xb) = (x / b.order() as u32, x % b.order() as u32);
                let (ya, yb) = (y / b.order() as u32, y % b.order() as u32);
                table[x as usize * n + y as usize] = pack(a.mul(xa, ya), b.mul(xb, yb));
            }
        }
        CayleyTable::from_parts(n, table, pack(a.identity(), b.identity()), gens)
    }

    fn z2_table() -> CayleyTable {
        abstract_cayley(0u8, &[1u8], |a, b| a ^ b, 4)
    }

    /// Central product of two groups over central subgroups of order 2:
    /// quotient of the direct product by the diagonal of the given central
    /// involutions.
    fn central_product(
        a: &CayleyTable,
        a_central: u32,
        b: &CayleyTable,
        b_central: u32,
    ) -> CayleyTable {
        let prod = direct_product(a, b);
        let nb = b.order() as u32;
        let z = a_central * nb + b_central;
        let n = prod.order();
        // Cosets {x, x*z}; label each by its smaller member.
        let mut label = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n as u32 {
            if label[x as usize] != u32::MAX {
                continue;
            }
            let mate = prod.mul(x, z);
            let l = reps.len() as u32;
            label[x as usize] = l;
            label[mate as usize] = l;
            reps.push(x);
        }
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate() {
                table[i * q + j] = label[prod.mul(x, y) as usize];
            }
        }
        let gens = prod
            .generators()
            .iter()
            .map(|&g| label[g as usize])
            .collect();
        CayleyTable::from_parts(q, table, label[prod.identity() as usize], gens)
    }

    /// The unique central involution of a table (used to locate -1 in D4
    /// and Q8 models).
    fn central_involution(t: &CayleyTable) -> u32 {
        let candidates: Vec<u32> = (0..t.order() as u32)
            .filter(|&x| {
                x != t.identity()
                    && t.mul(x, x) == t.identity()
                    && (0..t.order() as u32).all(|y| t.mul(x, y) == t.mul(y, x))
            })
            .collect();
        assert_eq!(candidates.len(), 1, "expected a unique central involution");
        candidates[0]
    }

    /// SL(2,5): determinant-one 2x2 matrices over the field of five
    /// elements.
    fn sl25_table() -> CayleyTable {
        type M = [u8; 4];
        fn mul(a: &M, b: &M) -> M {
            [
                (a[0] * b[0] + a[1] * b[2]) % 5,
                (a[0] * b[1] + a[1] * b[3]) % 5,
                (a[2] * b[0] + a[3] * b[2]) % 5,
                (a[2] * b[1] + a[3] * b[3]) % 5,
            ]
        }
        // Standard generators of SL(2,p): the two transvections.
        let gens: Vec<M> = vec![[1, 1, 0, 1], [1, 0, 1, 1]];
        abstract_cayley([1u8, 0, 0, 1], &gens, mul, 200)
    }

    fn fingerprint_of(label: &str) -> GroupFingerprint {
        reference_table()
            .into_iter()
            .find(|e| e.label == label)
            .unwrap_or_else(|| panic!("no reference entry {label}"))
            .fingerprint
    }

    #[test]
    fn pauli_models_match_the_frozen_rows() {
        assert_eq!(fingerprint_table(&pauli_table(1)), fingerprint_of("[16,13]"));
        assert_eq!(fingerprint_table(&pauli_table(2)), fingerprint_of("[64,66]"));
    }

    #[test]
    fn square_symmetries_match_the_d4_row() {
        assert_eq!(fingerprint_table(&d4_table()), fingerprint_of("D4"));
    }

    #[test]
    fn unit_quaternions_match_the_q8_row() {
        assert_eq!(fingerprint_table(&q8_table()), fingerprint_of("Q8"));
    }

    #[test]
    fn direct_products_match_the_sixteen_element_rows() {
        let d4xz2 = direct_product(&d4_table(), &z2_table());
        assert_eq!(fingerprint_table(&d4xz2), fingerprint_of("[16,11]"));
        let q8xz2 = direct_product(&q8_table(), &z2_table());
        assert_eq!(fingerprint_table(&q8xz2), fingerprint_of("[16,12]"));
    }

    #[test]
    fn central_products_match_the_thirty_two_element_rows() {
        let d4 = d4_table();
        let q8 = q8_table();
        let plus = central_product(&d4, central_involution(&d4), &d4, central_involution(&d4));
        assert_eq!(fingerprint_table(&plus), fingerprint_of("E32+"));
        let minus = central_product(&d4, central_involution(&d4), &q8, central_involution(&q8));
        assert_eq!(fingerprint_table(&minus), fingerprint_of("[32,50]"));
    }

    #[test]
    fn matrices_over_the_five_element_field_match_the_sl25_row() {
        assert_eq!(fingerprint_table(&sl25_table()), fingerprint_of("SL(2,5)"));
    }

    #[test]
    fn elementary_abelian_models_match_their_rows() {
        let z2 = z2_table();
        assert_eq!(fingerprint_table(&z2), fingerprint_of("Z2"));
        let z2sq = direct_product(&z2, &z2);
        assert_eq!(fingerprint_table(&z2sq), fingerprint_of("Z2^2"));
        let z2cb = direct_product(&z2sq, &z2);
        assert_eq!(fingerprint_table(&z2cb), fingerprint_of("Z2^3"));
        let z4 = abstract_cayley(0u8, &[1u8], |a, b| (a + b) % 4, 8);
        assert_eq!(fingerprint_table(&z4), fingerprint_of("Z4"));
        let z4xz2 = direct_product(&z4, &z2);
        assert_eq!(fingerprint_table(&z4xz2), fingerprint_of("Z4xZ2"));
    }

    #[test]
    fn reference_fingerprints_are_pairwise_distinct() {
        let table = reference_table();
        for (i, a) in table.iter().enumerate() {
            for b in table.iter().skip(i + 1) {
                assert_ne!(
                    a.fingerprint, b.fingerprint,
                    "{} and {} collide",
                    a.label, b.label
                );
            }
        }
    }

    #[test]
    fn unknown_fingerprints_report_the_order() {
        let fp = GroupFingerprint {
            order: 7,
            order_histogram: BTreeMap::from([(1, 1), (7, 6)]),
            center_order: 7,
            derived_order: 1,
            abelianization: vec![7],
            exponent: 7,
        };
        let id = identify(&fp);
        assert_eq!(id.label(), None);
        assert_eq!(id.to_string(), "unknown group of order 7");
    }

    #[test]
    fn identification_display_carries_the_caveat() {
        let id = identify(&fingerprint_of("Q8"));
        assert_eq!(id.to_string(), "Q8 (fingerprint-consistent)");
    }
}
