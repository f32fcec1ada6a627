//! Edge colourings of `K_n` and subsets of the colour palette.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;

/// Hard cap on the number of colours so colour sets fit in one `u128`.
pub const MAX_COLOURS: u32 = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringError {
    /// `n` or `r` is zero.
    EmptyParameters,
    /// More colours than [`MAX_COLOURS`].
    TooManyColours { r: u32 },
    /// The colour array does not have `n(n-1)/2` entries.
    WrongLength { expected: usize, got: usize },
    /// A colour id at pair rank `rank` is `>= r`.
    ColourOutOfRange { rank: usize, colour: u16, r: u32 },
}

impl fmt::Display for ColouringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColouringError::EmptyParameters => write!(f, "n and r must both be at least 1"),
            ColouringError::TooManyColours { r } => {
                write!(f, "r={r} exceeds the supported maximum of {MAX_COLOURS} colours")
            }
            ColouringError::WrongLength { expected, got } => {
                write!(f, "expected {expected} colour entries, got {got}")
            }
            ColouringError::ColourOutOfRange { rank, colour, r } => {
                write!(f, "colour {colour} at pair rank {rank} is outside 0..{r}")
            }
        }
    }
}

/// An `r`-edge-colouring of `K_n`.
///
/// Colours are stored densely in pair-rank order: the unordered pair
/// `{u, v}` with `u < v` lives at index `u*n - u*(u+1)/2 + (v-u-1)`.
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    n: u32,
    r: u32,
    colours: Vec<u16>,
}

impl EdgeColouring {
    pub fn new(n: u32, r: u32, colours: Vec<u16>) -> Result<Self, ColouringError> {
        if n == 0 || r == 0 {
            return Err(ColouringError::EmptyParameters);
        }
        if r > MAX_COLOURS {
            return Err(ColouringError::TooManyColours { r });
        }
        let expected = Self::pair_count(n);
        if colours.len() != expected {
            return Err(ColouringError::WrongLength { expected, got: colours.len() });
        }
        for (rank, &c) in colours.iter().enumerate() {
            if c as u32 >= r {
                return Err(ColouringError::ColourOutOfRange { rank, colour: c, r });
            }
        }
        Ok(EdgeColouring { n, r, colours })
    }

    /// Builds a colouring by evaluating `f(u, v)` on every pair `u < v`.
    pub fn from_fn(n: u32, r: u32, mut f: impl FnMut(u32, u32) -> u16) -> Result<Self, ColouringError> {
        if n == 0 || r == 0 {
            return Err(ColouringError::EmptyParameters);
        }
        let mut colours = Vec::with_capacity(Self::pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                colours.push(f(u, v));
            }
        }
        Self::new(n, r, colours)
    }

    pub fn monochromatic(n: u32, r: u32, colour: u16) -> Result<Self, ColouringError> {
        Self::new(n, r, vec![colour; Self::pair_count(n)])
    }

    pub fn pair_count(n: u32) -> usize {
        (n as usize * (n as usize - 1)) / 2
    }

    #[inline]
    pub fn pair_rank(n: u32, u: u32, v: u32) -> usize {
        debug_assert!(u < v && v < n);
        let (n, u, v) = (n as usize, u as usize, v as usize);
        u * n - u * (u + 1) / 2 + (v - u - 1)
    }

    #[inline]
    pub fn colour(&self, u: u32, v: u32) -> u16 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[Self::pair_rank(self.n, a, b)]
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn colours(&self) -> &[u16] {
        &self.colours
    }

    /// Iterates all pairs `(u, v, colour)` in pair-rank order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, u16)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.colours.iter())
            .map(|((u, v), &c)| (u, v, c))
    }

    /// Number of edges per colour id.
    pub fn colour_class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.r as usize];
        for &c in &self.colours {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Relabels colours by first appearance in pair-rank order.
    ///
    /// The output is a fixed representative of the colour-permutation orbit:
    /// `val_f` and `val_g` are unchanged for every `s`.
    pub fn canonical_colour_form(&self) -> EdgeColouring {
        let mut map = vec![u16::MAX; self.r as usize];
        let mut next = 0u16;
        let mut out = Vec::with_capacity(self.colours.len());
        for &c in &self.colours {
            if map[c as usize] == u16::MAX {
                map[c as usize] = next;
                next += 1;
            }
            out.push(map[c as usize]);
        }
        EdgeColouring { n: self.n, r: self.r, colours: out }
    }
}

/// A subset of the colour palette `{0..r-1}`, the "few colours" budget.
///
/// Iteration order is ascending by colour id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColourSet(u128);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    pub fn from_bits(bits: u128) -> ColourSet {
        ColourSet(bits)
    }

    pub fn singleton(c: u32) -> ColourSet {
        ColourSet(1u128 << c)
    }

    pub fn full(r: u32) -> ColourSet {
        assert!(r <= MAX_COLOURS);
        if r == 128 {
            ColourSet(u128::MAX)
        } else {
            ColourSet((1u128 << r) - 1)
        }
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: u32) -> bool {
        c < 128 && self.0 >> c & 1 == 1
    }

    pub fn with(self, c: u32) -> ColourSet {
        ColourSet(self.0 | 1u128 << c)
    }

    pub fn union(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> bits::BitIter {
        bits::iter_bits(self.0)
    }
}

impl FromIterator<u32> for ColourSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut s = ColourSet::EMPTY;
        for c in iter {
            s = s.with(c);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_rank_layout() {
        let n = 5;
        let mut seen = vec![false; EdgeColouring::pair_count(n)];
        for u in 0..n {
            for v in u + 1..n {
                let rk = EdgeColouring::pair_rank(n, u, v);
                assert!(!seen[rk]);
                seen[rk] = true;
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn canonical_first_appearance_relabel() {
        // K_3 with colours (2,0,2) on pairs (01),(02),(12) -> (0,1,0)
        let c = EdgeColouring::new(3, 3, vec![2, 0, 2]).unwrap();
        assert_eq!(c.canonical_colour_form().colours(), &[0, 1, 0]);
    }

    #[test]
    fn canonical_idempotent() {
        let c = EdgeColouring::new(4, 2, vec![0, 1, 0, 1, 1, 0]).unwrap();
        let canon = c.canonical_colour_form();
        assert_eq!(canon.canonical_colour_form(), canon);
    }

    #[test]
    fn canonical_preserves_class_size_multiset() {
        // deterministic pseudo-random colouring, n=5, r=3
        let mut state = 0x9e3779b97f4a7c15u64;
        let c = EdgeColouring::from_fn(5, 3, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 3) as u16
        })
        .unwrap();
        let mut before = c.colour_class_sizes();
        let mut after = c.canonical_colour_form().colour_class_sizes();
        before.sort_unstable();
        after.sort_unstable();
        assert_eq!(before, after);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            EdgeColouring::new(3, 2, vec![0, 1]),
            Err(ColouringError::WrongLength { expected: 3, got: 2 })
        ));
        assert!(matches!(
            EdgeColouring::new(3, 2, vec![0, 1, 2]),
            Err(ColouringError::ColourOutOfRange { rank: 2, colour: 2, r: 2 })
        ));
    }

    #[test]
    fn colour_set_iterates_ascending() {
        let s: ColourSet = [5u32, 1, 3].into_iter().collect();
        let order: Vec<u32> = s.iter().collect();
        assert_eq!(order, vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
    }
}
