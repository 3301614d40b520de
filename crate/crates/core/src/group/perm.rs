//! Permutations on `{0..n-1}` stored as image tables.

/// A bijection on `{0..n-1}`; `map[p]` is the image of point `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            map: (0..degree as u32).collect(),
        }
    }

    /// Takes the image table directly. Panics if it is not a bijection.
    pub fn from_images(map: Vec<u32>) -> Self {
        let mut seen = vec![false; map.len()];
        for &im in &map {
            assert!(
                (im as usize) < map.len() && !seen[im as usize],
                "image table is not a bijection"
            );
            seen[im as usize] = true;
        }
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, p: u32) -> u32 {
        self.map[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.map
    }

    /// `self` after `other`: `(self.compose(other))[p] = self[other[p]]`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            map: other.map.iter().map(|&p| self.map[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.map.len()];
        for (p, &im) in self.map.iter().enumerate() {
            inv[im as usize] = p as u32;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(p, &im)| p as u32 == im)
    }

    pub fn smallest_moved(&self) -> Option<u32> {
        self.map
            .iter()
            .enumerate()
            .find(|(p, &im)| *p as u32 != im)
            .map(|(p, _)| p as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_images(vec![1, 0, 2]);
        let b = Permutation::from_images(vec![0, 2, 1]);
        let ab = a.compose(&b);
        // b sends 1 -> 2, then a sends 2 -> 2.
        assert_eq!(ab.apply(1), 2);
        // b sends 2 -> 1, then a sends 1 -> 0.
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::from_images(vec![3, 0, 1, 2]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn smallest_moved_skips_fixed_prefix() {
        let p = Permutation::from_images(vec![0, 1, 3, 2]);
        assert_eq!(p.smallest_moved(), Some(2));
        assert_eq!(Permutation::identity(5).smallest_moved(), None);
    }

    #[test]
    #[should_panic(expected = "bijection")]
    fn repeated_image_is_rejected() {
        Permutation::from_images(vec![0, 0, 1]);
    }
}
