//! Deterministic Schreier-Sims: base and strong generating set for a
//! permutation group, exact order, and membership by sifting.
//!
//! Base points are chosen greedily as the smallest moved point, orbits grow
//! in breadth-first order and generators are scanned in insertion order, so
//! two runs on the same input produce the identical base, orbit sizes and
//! order.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::perm::Permutation;

struct Level {
    base: u32,
    gens: Vec<Permutation>,
    gen_keys: HashSet<Vec<u32>>,
    /// Orbit of `base` under `gens` in discovery order.
    orbit: Vec<u32>,
    /// `transversal[p]` maps `base` to `p` for points in the orbit.
    transversal: Vec<Option<Permutation>>,
    /// Verification progress: Schreier generators of pairs before this
    /// (orbit index, generator index) position are known to sift through
    /// the chain below. Reset whenever the level's generators change.
    cursor: (usize, usize),
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            gen_keys: HashSet::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            cursor: (0, 0),
        }
    }

    /// True iff the generator was new; the orbit must be rebuilt then.
    fn add_generator(&mut self, g: Permutation) -> bool {
        if self.gen_keys.insert(g.images().to_vec()) {
            self.gens.push(g);
            true
        } else {
            false
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal = vec![None; degree];
        self.orbit.push(self.base);
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            let rep = self.transversal[p as usize]
                .clone()
                .expect("orbit points always carry a representative");
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q as usize].is_none() {
                    self.transversal[q as usize] = Some(s.compose(&rep));
                    self.orbit.push(q);
                }
            }
        }
        self.cursor = (0, 0);
    }
}

pub struct PermGroupBsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl PermGroupBsgs {
    /// Builds the stabilizer chain from the given generators. Identity and
    /// duplicate generators are ignored; an empty effective set yields the
    /// trivial group of order 1.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = PermGroupBsgs {
            degree,
            levels: Vec::new(),
        };
        let effective: Vec<&Permutation> = gens
            .iter()
            .filter(|g| {
                assert_eq!(g.degree(), degree, "generator degree mismatch");
                !g.is_identity()
            })
            .collect();
        if effective.is_empty() {
            return chain;
        }
        let base = effective
            .iter()
            .filter_map(|g| g.smallest_moved())
            .min()
            .expect("non-identity generators move points");
        chain.levels.push(Level::new(base, degree));
        for g in effective {
            chain.levels[0].add_generator(g.clone());
        }
        chain.levels[0].rebuild_orbit(degree);
        chain.verify_chain();
        chain
    }

    /// The classic down-up completion loop. Invariant: every level deeper
    /// than `l` has all of its Schreier generators sifting to the identity
    /// through the levels below it. A level is scanned only against a
    /// fully verified subchain, so when the loop exits at the top the whole
    /// chain is complete and the order is the product of the orbit sizes.
    fn verify_chain(&mut self) {
        let mut l = 0usize;
        loop {
            match self.scan_level(l) {
                Some((residue, drop_level)) => {
                    if drop_level == self.levels.len() {
                        let base = residue
                            .smallest_moved()
                            .expect("sift residue is non-identity");
                        self.levels.push(Level::new(base, self.degree));
                    }
                    // The residue fixes every base above `drop_level`, so
                    // it is a strong generator for every level in between;
                    // skipping any of them would break the nesting of the
                    // stabilizer subgroups.
                    for k in l + 1..=drop_level {
                        if self.levels[k].add_generator(residue.clone()) {
                            self.levels[k].rebuild_orbit(self.degree);
                        }
                    }
                    l = drop_level;
                }
                None => {
                    if l == 0 {
                        return;
                    }
                    l -= 1;
                }
            }
        }
    }

    /// Resumes sifting Schreier generators of `level` from its cursor.
    /// Returns the first failure as (residue, level it dropped at), leaving
    /// the cursor on the failing pair so it is re-checked after the chain
    /// grows; a pair that once sifted stays a member of the (only growing)
    /// subchain group, so verified pairs are never revisited.
    fn scan_level(&mut self, level: usize) -> Option<(Permutation, usize)> {
        let (mut pi, mut si) = self.levels[level].cursor;
        while pi < self.levels[level].orbit.len() {
            let p = self.levels[level].orbit[pi];
            let rep = self.levels[level].transversal[p as usize]
                .clone()
                .expect("orbit point has a representative");
            while si < self.levels[level].gens.len() {
                let s = self.levels[level].gens[si].clone();
                let target = s.apply(p);
                let target_rep = self.levels[level].transversal[target as usize]
                    .clone()
                    .expect("orbit is closed under generators");
                let schreier = target_rep.inverse().compose(&s).compose(&rep);
                if let Err(failure) = self.sift_from(schreier, level + 1) {
                    self.levels[level].cursor = (pi, si);
                    return Some(failure);
                }
                si += 1;
            }
            si = 0;
            pi += 1;
        }
        self.levels[level].cursor = (pi, 0);
        None
    }

    /// Sifts `g` through levels `from..`; `Ok` means it reduced to the
    /// identity, `Err` carries the residue and the level where it stuck.
    fn sift_from(&self, mut g: Permutation, from: usize) -> Result<(), (Permutation, usize)> {
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            if g.is_identity() {
                return Ok(());
            }
            let p = g.apply(level.base);
            match &level.transversal[p as usize] {
                None => return Err((g, idx)),
                Some(rep) => g = rep.inverse().compose(&g),
            }
        }
        if g.is_identity() {
            Ok(())
        } else {
            Err((g, self.levels.len()))
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> BigUint {
        let mut n = BigUint::from(1u32);
        for level in &self.levels {
            n *= BigUint::from(level.orbit.len());
        }
        n
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for level in &self.levels {
            for g in &level.gens {
                if seen.insert(g.images().to_vec()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        self.sift_from(g.clone(), 0).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(degree: usize, points: &[u32]) -> Permutation {
        let mut map: Vec<u32> = (0..degree as u32).collect();
        for w in points.windows(2) {
            map[w[0] as usize] = w[1];
        }
        map[points[points.len() - 1] as usize] = points[0];
        Permutation::from_images(map)
    }

    #[test]
    fn empty_generator_list_gives_the_trivial_group() {
        let chain = PermGroupBsgs::new(5, &[]);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert!(chain.contains(&Permutation::identity(5)));
        assert!(!chain.contains(&cycle(5, &[0, 1])));
    }

    #[test]
    fn symmetric_group_order_is_factorial() {
        // <(01), (0123...n-1)> = S_n.
        for n in [3usize, 5, 7, 9] {
            let points: Vec<u32> = (0..n as u32).collect();
            let gens = [cycle(n, &[0, 1]), cycle(n, &points)];
            let chain = PermGroupBsgs::new(n, &gens);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact), "S_{n}");
        }
    }

    #[test]
    fn alternating_group_membership_by_sifting() {
        // A_4 = <(012), (123)>, order 12; a transposition is outside.
        let gens = [cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])];
        let chain = PermGroupBsgs::new(4, &gens);
        assert_eq!(chain.order(), BigUint::from(12u32));
        assert!(chain.contains(&cycle(4, &[0, 1, 2])));
        assert!(!chain.contains(&cycle(4, &[0, 1])));
    }

    #[test]
    fn mathieu_like_psl27_has_order_168() {
        // PSL(2,7) acting on the projective line over F7 (8 points,
        // infinity last): z -> z+1 and z -> -1/z.
        let add_one: Vec<u32> = (0..8)
            .map(|z| if z == 7 { 7 } else { (z + 1) % 7 })
            .collect();
        let inv: Vec<u32> = (0..8u32)
            .map(|z| match z {
                7 => 0,
                0 => 7,
                _ => {
                    // -1/z mod 7
                    let zi = (1..7).find(|&w| (z * w) % 7 == 1).unwrap();
                    (7 - zi) % 7
                }
            })
            .collect();
        let gens = [
            Permutation::from_images(add_one),
            Permutation::from_images(inv),
        ];
        let chain = PermGroupBsgs::new(8, &gens);
        assert_eq!(chain.order(), BigUint::from(168u32));
    }

    #[test]
    fn order_equals_product_of_basic_orbit_sizes() {
        let gens = [cycle(6, &[0, 1, 2, 3, 4, 5]), cycle(6, &[0, 1])];
        let chain = PermGroupBsgs::new(6, &gens);
        let product: usize = chain.basic_orbit_sizes().iter().product();
        assert_eq!(BigUint::from(product), chain.order());
    }

    #[test]
    fn every_strong_generator_sifts_to_identity() {
        let gens = [cycle(5, &[0, 1, 2, 3, 4]), cycle(5, &[0, 1])];
        let chain = PermGroupBsgs::new(5, &gens);
        for g in chain.strong_generators() {
            assert!(chain.contains(&g));
        }
    }

    #[test]
    fn two_runs_produce_identical_base() {
        let gens = [cycle(8, &[0, 3, 5]), cycle(8, &[1, 2, 4, 6, 7])];
        let a = PermGroupBsgs::new(8, &gens);
        let b = PermGroupBsgs::new(8, &gens);
        assert_eq!(a.base(), b.base());
        assert_eq!(a.basic_orbit_sizes(), b.basic_orbit_sizes());
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn duplicate_and_identity_generators_are_ignored() {
        let g = cycle(4, &[0, 1, 2, 3]);
        let gens = [g.clone(), g.clone(), Permutation::identity(4)];
        let chain = PermGroupBsgs::new(4, &gens);
        assert_eq!(chain.order(), BigUint::from(4u32));
    }
}
